mod render;
mod spec;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use radio_block::certificate::certify;
use radio_block::exact::{exact_radio_number, DEFAULT_MAX_P};
use radio_block::families::{canonical_ordering, closed_form_rn, generate, random_block_graph};
use radio_block::io::{parse_ordering, to_json};
use radio_block::line_graph::{
    line_graph_of_tree, line_obs_check, transfer_to_line, transfer_to_tree,
};
use radio_block::radio::{labeling_from_ordering, lower_bound};
use radio_block::{BlockGraph, Graph};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "radio-block",
    version,
    about = "Radio labelings of block graphs"
)]
struct Cli {
    /// Plain-text table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a family graph, or a random block graph with --random.
    Generate(GenerateArgs),
    /// Centers, levels, branches and epsilon of a block graph.
    Analyze { graph: PathBuf },
    /// The lower bound on rn(G).
    Lb { graph: PathBuf },
    /// rn(G) by exhaustive search.
    Exact {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_P)]
        max_p: usize,
        /// Solve for rn_k(G) with k >= d(G).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Check whether an ordering attains the lower bound.
    Certify {
        graph: PathBuf,
        #[arg(long)]
        ordering: PathBuf,
    },
    /// Canonical ordering of a family instance with its labeling and certificate.
    Order {
        #[arg(long, num_args = 1.., required = true)]
        spec: Vec<String>,
    },
    /// Line graph of a tree.
    Linegraph {
        tree: PathBuf,
        /// Write the line graph in graph text format.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Move an ordering between a tree and its line graph.
    Transfer {
        tree: PathBuf,
        #[arg(long)]
        ordering: PathBuf,
        #[arg(long, value_enum)]
        direction: Direction,
    },
    /// Run the acceptance checks.
    Selftest,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, num_args = 1.., conflicts_with = "random", required_unless_present = "random")]
    spec: Vec<String>,
    /// Number of vertices of a random block graph.
    #[arg(long, requires = "seed")]
    random: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 3)]
    max_clique: usize,
    /// Graph file to write; vertex names go to a `.names.json` sidecar.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    ToLine,
    ToTree,
}

/// What a command prints on success.
enum Report {
    Json(Value),
    Text(String),
    /// Printed like `Json`, then the command exits with status 1.
    Failed(Value, String),
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    Graph::parse(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_block_graph(path: &Path) -> Result<BlockGraph, String> {
    BlockGraph::analyze(read_graph(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn run(cmd: Cmd) -> Result<Report, String> {
    match cmd {
        Cmd::Generate(a) => {
            let (graph, names) = match a.random {
                Some(p) => {
                    if p < 2 || a.max_clique < 2 {
                        return Err("random block graphs need p >= 2 and max_clique >= 2".into());
                    }
                    let g = random_block_graph(a.seed.unwrap(), p, a.max_clique);
                    let names = (0..p).map(|v| v.to_string()).collect();
                    (g, names)
                }
                None => {
                    let spec = spec::parse_spec(&a.spec)?;
                    let g = generate(&spec).map_err(err)?;
                    (g.graph, g.names)
                }
            };
            match a.output {
                Some(path) => {
                    write(&path, &graph.to_text())?;
                    let sidecar = path.with_extension("names.json");
                    write(&sidecar, &(to_json(&names, true) + "\n"))?;
                    Ok(Report::Json(json!({
                        "graph": path.display().to_string(),
                        "names": sidecar.display().to_string(),
                        "order": graph.order(),
                        "edges": graph.edge_count(),
                    })))
                }
                None => Ok(Report::Text(graph.to_text())),
            }
        }
        Cmd::Analyze { graph } => {
            let bg = read_block_graph(&graph)?;
            Ok(Report::Json(json!({
                "order": bg.order(),
                "diameter": bg.diameter(),
                "epsilon": bg.epsilon(),
                "weight_centers": bg.centers.weight_centers,
                "central_vertices": bg.centers.central_vertices,
                "wt": bg.centers.wt,
                "blocks": bg.blocks.blocks,
                "cut_vertices": bg.blocks.cut_vertices,
                "level": bg.levels.level,
                "total_level": bg.total_level(),
                "parent": bg.levels.parent,
                "branch_of": bg.levels.branch_of,
                "branches": bg.levels.branches,
            })))
        }
        Cmd::Lb { graph } => {
            let bg = read_block_graph(&graph)?;
            Ok(Report::Json(
                json!({ "lb": lower_bound(&bg).map_err(err)? }),
            ))
        }
        Cmd::Exact {
            graph,
            max_p,
            k,
            threads,
        } => {
            let bg = read_block_graph(&graph)?;
            let solve = || exact_radio_number(&bg.dist, max_p, k);
            let sol = match threads {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(err)?
                    .install(solve),
                None => solve(),
            }
            .map_err(err)?;
            let mut out = json!({
                "rn": sol.rn,
                "labeling": sol.witness.labels,
                "ordering": sol.ordering,
            });
            // the bound is for k = d(G) on graphs of diameter at least 2
            if k.is_none_or(|k| k == bg.diameter()) {
                if let Ok(lb) = lower_bound(&bg) {
                    out["lb"] = json!(lb);
                    out["gap"] = json!(sol.rn - lb);
                }
            }
            Ok(Report::Json(out))
        }
        Cmd::Certify { graph, ordering } => {
            let bg = read_block_graph(&graph)?;
            let ord = parse_ordering(&read(&ordering)?, bg.order())
                .map_err(|e| format!("{}: {e}", ordering.display()))?;
            let report = certify(&bg, &ord).map_err(err)?;
            Ok(Report::Json(serde_json::to_value(&report).map_err(err)?))
        }
        Cmd::Order { spec } => {
            let spec = spec::parse_spec(&spec)?;
            let g = generate(&spec).map_err(err)?;
            let ord = canonical_ordering(&spec).map_err(err)?;
            let bg = BlockGraph::analyze(g.graph).map_err(err)?;
            let f = labeling_from_ordering(&bg, &ord).map_err(err)?;
            let report = certify(&bg, &ord).map_err(err)?;
            Ok(Report::Json(json!({
                "family": spec.label(),
                "order": bg.order(),
                "closed_form": closed_form_rn(&spec).map_err(err)?,
                "ordering": ord,
                "names": ord.iter().map(|v| g.names[v].as_str()).collect::<Vec<_>>(),
                "labeling": f.labels,
                "span": f.span(),
                "certificate": report,
            })))
        }
        Cmd::Linegraph { tree, output } => {
            let t = read_graph(&tree)?;
            let lt = line_graph_of_tree(&t).map_err(err)?;
            let obs = line_obs_check(&t, &lt).map_err(err)?;
            if let Some(path) = &output {
                write(path, &lt.graph.to_text())?;
            }
            Ok(Report::Json(json!({
                "order": lt.graph.order(),
                "edges": lt.graph.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
                "name_of": lt.name_of,
                "root": lt.root,
                "observations": obs,
            })))
        }
        Cmd::Transfer {
            tree,
            ordering,
            direction,
        } => {
            let t = read_graph(&tree)?;
            let lt = line_graph_of_tree(&t).map_err(err)?;
            let p = match direction {
                Direction::ToLine => t.order(),
                Direction::ToTree => lt.graph.order(),
            };
            let ord = parse_ordering(&read(&ordering)?, p)
                .map_err(|e| format!("{}: {e}", ordering.display()))?;
            let report = match direction {
                Direction::ToLine => transfer_to_line(&t, &lt, &ord),
                Direction::ToTree => transfer_to_tree(&t, &lt, &ord),
            }
            .map_err(err)?;
            Ok(Report::Json(serde_json::to_value(&report).map_err(err)?))
        }
        Cmd::Selftest => {
            let outcomes = radio_block::acceptance::run_all();
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            let v = serde_json::to_value(&outcomes).map_err(err)?;
            if failed > 0 {
                return Ok(Report::Failed(
                    v,
                    format!("{failed} of {} criteria failed", outcomes.len()),
                ));
            }
            Ok(Report::Json(v))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let print = |v: &Value| {
        if cli.pretty {
            print!("{}", render::table(v));
        } else {
            println!("{}", to_json(v, false));
        }
    };
    match run(cli.cmd) {
        Ok(Report::Text(s)) => print!("{s}"),
        Ok(Report::Json(v)) => print(&v),
        Ok(Report::Failed(v, msg)) => {
            print(&v);
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    }
    ExitCode::SUCCESS
}
