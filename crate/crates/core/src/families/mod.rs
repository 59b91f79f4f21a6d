//! Parameterized graph families with generators, canonical orderings and
//! closed-form radio numbers.
//!
//! Id schemes:
//! - level-wise regular block graphs: `w^0..w^{m-1}` get ids `0..m`, the rest
//!   follow in breadth-first order (parents in id order, children by sub-index);
//! - extended stars: `w^1..w^m` get ids `0..m`, then `w^l_{i,j}` gets
//!   `m + ((l-1) h + (i-1))(n-1) + (j-1)`;
//! - trees: roots first, then breadth-first (see [`trees`]).

mod level_wise;
mod random;
mod star;
pub mod trees;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::radio::VertexOrdering;

pub use random::random_block_graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum FamilySpec {
    /// `G^m_{(k_1,m_1)...(k_r,m_r)}`.
    LevelWiseRegularBlock {
        m: usize,
        pairs: Vec<(usize, usize)>,
    },
    /// `P_{h,n}`: a path with `h` edges, each grown into a `K_n`.
    PathOfCliques { h: usize, n: usize },
    /// `S^m_{k,h,n}`.
    ExtendedStar {
        m: usize,
        k: usize,
        h: usize,
        n: usize,
    },
    /// `P_n`.
    TreePath { n: usize },
    /// `K_{1,n}`.
    TreeStar { n: usize },
    /// Complete `m`-ary tree of height `h`.
    CompleteMAry { h: usize, m: usize },
    /// `T^1` (one root) or `T^2` (two adjacent roots) with level degrees
    /// `m_0, ..., m_{h-1}`.
    LevelWiseRegularTree { roots: usize, degrees: Vec<usize> },
    /// `B(n, k) = T^1_{n,2,k-1}`.
    Banana { n: usize, k: usize },
    /// `F(n, k)`.
    Firecracker { n: usize, k: usize },
    /// `C(n, k)`: spine of `n - 2` vertices, each of degree `k`.
    Caterpillar { n: usize, k: usize },
}

/// A generated graph with the structured vertex names used by the
/// constructions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedGraph {
    pub graph: Graph,
    pub names: Vec<String>,
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let bad = |msg: &str| Err(Error::InvalidParameters(msg.to_string()));
        match self {
            LevelWiseRegularBlock { m, pairs } => {
                if *m == 0 || *m == 2 {
                    return bad("m must be 1 or at least 3");
                }
                if pairs.is_empty() {
                    return bad("need at least one (k_i, m_i) pair");
                }
                if pairs.iter().any(|&(k, mi)| k == 0 || mi < 2) {
                    return bad("need k_i >= 1 and m_i >= 2");
                }
                if *m == 1 && pairs[0].0 < 2 {
                    return bad("k_1 >= 2 when m = 1");
                }
            }
            PathOfCliques { h, n } => {
                if *h == 0 || *n < 2 {
                    return bad("need h >= 1 and n >= 2");
                }
            }
            ExtendedStar { m, k, h, n } => {
                if *m == 0 || *k == 0 || *h == 0 || *n < 2 {
                    return bad("need m, k, h >= 1 and n >= 2");
                }
                if *m == 1 && *k < 3 {
                    return bad("k >= 3 when m = 1");
                }
            }
            TreePath { n } => {
                if *n < 2 {
                    return bad("need n >= 2");
                }
            }
            TreeStar { n } => {
                if *n == 0 {
                    return bad("need n >= 1");
                }
            }
            CompleteMAry { h, m } => {
                if *h == 0 || *m < 3 {
                    return bad("need h >= 1 and m >= 3");
                }
            }
            LevelWiseRegularTree { roots, degrees } => {
                if !(1..=2).contains(roots) {
                    return bad("roots must be 1 or 2");
                }
                if degrees.is_empty() {
                    return bad("need at least one level degree");
                }
                if degrees[0] < *roots || degrees[1..].iter().any(|&d| d < 2) {
                    return bad("every non-leaf level needs at least one child per vertex");
                }
            }
            Banana { n, k } => {
                if *n == 0 || *k < 3 {
                    return bad("need n >= 1 and k >= 3");
                }
            }
            Firecracker { n, k } => {
                if *n < 2 || *k < 3 {
                    return bad("need n >= 2 and k >= 3");
                }
            }
            Caterpillar { n, k } => {
                if *n < 3 || *k < 3 {
                    return bad("need n >= 3 and k >= 3");
                }
            }
        }
        Ok(())
    }

    /// Short human-readable name, e.g. `S^3_{2,2,4}`.
    pub fn label(&self) -> String {
        use FamilySpec::*;
        match self {
            LevelWiseRegularBlock { m, pairs } => {
                let pairs: String = pairs.iter().map(|(k, mi)| format!("({k},{mi})")).collect();
                format!("G^{m}_{{{pairs}}}")
            }
            PathOfCliques { h, n } => format!("P_{{{h},{n}}}"),
            ExtendedStar { m, k, h, n } => format!("S^{m}_{{{k},{h},{n}}}"),
            TreePath { n } => format!("P_{n}"),
            TreeStar { n } => format!("K_{{1,{n}}}"),
            CompleteMAry { h, m } => format!("T_{{{h},{m}}}"),
            LevelWiseRegularTree { roots, degrees } => {
                let d: Vec<String> = degrees.iter().map(ToString::to_string).collect();
                format!("T^{roots}_{{{}}}", d.join(","))
            }
            Banana { n, k } => format!("B({n},{k})"),
            Firecracker { n, k } => format!("F({n},{k})"),
            Caterpillar { n, k } => format!("C({n},{k})"),
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<NamedGraph> {
    spec.validate()?;
    use FamilySpec::*;
    Ok(match spec {
        LevelWiseRegularBlock { m, pairs } => level_wise::generate(*m, pairs).named,
        PathOfCliques { h, n } => star::path_of_cliques(*h, *n),
        ExtendedStar { m, k, h, n } => star::generate(*m, *k, *h, *n),
        TreePath { n } => trees::path(*n),
        TreeStar { n } => trees::star(*n),
        CompleteMAry { h, m } => {
            let mut degrees = vec![m + 1; *h];
            degrees[0] = *m;
            trees::level_wise(1, &degrees)
        }
        LevelWiseRegularTree { roots, degrees } => trees::level_wise(*roots, degrees),
        Banana { n, k } => trees::level_wise(1, &[*n, 2, k - 1]),
        Firecracker { n, k } => trees::firecracker(*n, *k),
        Caterpillar { n, k } => trees::caterpillar(*n, *k),
    })
}

/// The optimal ordering from the construction proofs, for families that
/// have one.
pub fn canonical_ordering(spec: &FamilySpec) -> Result<VertexOrdering> {
    spec.validate()?;
    match spec {
        FamilySpec::LevelWiseRegularBlock { m, pairs } => {
            level_wise::canonical_ordering(&level_wise::generate(*m, pairs))
        }
        FamilySpec::ExtendedStar { m, k, h, n } => star::canonical_ordering(*m, *k, *h, *n),
        other => Err(Error::Unsupported(format!(
            "no canonical ordering for {}",
            other.label()
        ))),
    }
}

/// Closed-form radio number of the family.
pub fn closed_form_rn(spec: &FamilySpec) -> Result<u64> {
    spec.validate()?;
    match spec {
        FamilySpec::LevelWiseRegularBlock { m, pairs } => {
            let (m, r) = (*m as u64, pairs.len() as u64);
            let mut prod = 1u64;
            let (mut sum, mut weighted) = (0u64, 0u64);
            for (i, &(k, mi)) in pairs.iter().enumerate() {
                prod *= (k * mi) as u64;
                sum += prod;
                weighted += (i as u64 + 1) * prod;
            }
            let eps = u64::from(m == 1);
            Ok((m - 1 + m * sum) * (2 * r + 1) - 2 * m * weighted + eps)
        }
        FamilySpec::ExtendedStar { m, k, h, n } => {
            let (m, k, h, n) = (*m as u64, *k as u64, *h as u64, *n as u64);
            let eps = u64::from(m == 1);
            Ok(m * k * h * h * (n - 1) + (m - 1) * (2 * h + 1) + eps)
        }
        other => Err(Error::Unsupported(format!(
            "no closed form for {}",
            other.label()
        ))),
    }
}

/// Incremental builder shared by the generators.
#[derive(Default)]
pub(crate) struct Builder {
    edges: Vec<(usize, usize)>,
    names: Vec<String>,
}

impl Builder {
    pub(crate) fn vertex(&mut self, name: String) -> usize {
        self.names.push(name);
        self.names.len() - 1
    }

    pub(crate) fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// Joins every pair in `vs`.
    pub(crate) fn clique(&mut self, vs: &[usize]) {
        for (a, &u) in vs.iter().enumerate() {
            for &v in &vs[a + 1..] {
                self.edge(u, v);
            }
        }
    }

    pub(crate) fn finish(self) -> NamedGraph {
        let graph = Graph::from_edges(self.names.len(), self.edges)
            .expect("generators produce simple graphs");
        NamedGraph {
            graph,
            names: self.names,
        }
    }
}

/// Turns a position-indexed table into an ordering, checking that every
/// vertex appears exactly once.
pub(crate) fn ordering_from_table(table: Vec<Option<usize>>) -> Result<VertexOrdering> {
    let p = table.len();
    let order: Vec<usize> = table
        .into_iter()
        .enumerate()
        .map(|(pos, v)| {
            v.ok_or_else(|| Error::InvalidOrdering(format!("position {pos} left empty")))
        })
        .collect::<Result<_>>()?;
    VertexOrdering::new(order, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::center::BlockGraph;
    use crate::certificate::certify;
    use crate::graph::is_block_graph;
    use crate::radio::lower_bound;

    fn star_spec(m: usize, k: usize, h: usize, n: usize) -> FamilySpec {
        FamilySpec::ExtendedStar { m, k, h, n }
    }

    fn lw(m: usize, pairs: &[(usize, usize)]) -> FamilySpec {
        FamilySpec::LevelWiseRegularBlock {
            m,
            pairs: pairs.to_vec(),
        }
    }

    fn check_family(spec: &FamilySpec) -> u64 {
        let g = generate(spec).unwrap();
        assert!(is_block_graph(&g.graph).unwrap());
        let bg = BlockGraph::analyze(g.graph).unwrap();
        let lb = lower_bound(&bg).unwrap();
        assert_eq!(lb, closed_form_rn(spec).unwrap(), "{}", spec.label());
        let ord = canonical_ordering(spec).unwrap();
        let report = certify(&bg, &ord).unwrap();
        assert!(
            report.verdict.is_certified(),
            "{}: {:?}",
            spec.label(),
            report.verdict
        );
        assert_eq!(report.span, Some(lb));
        lb
    }

    #[test]
    fn spec_json_round_trip() {
        let spec: FamilySpec =
            serde_json::from_str(r#"{"family":"extended_star","m":3,"k":2,"h":2,"n":4}"#).unwrap();
        assert_eq!(spec, star_spec(3, 2, 2, 4));
        let text = serde_json::to_string(&lw(4, &[(1, 3), (1, 3)])).unwrap();
        assert_eq!(
            text,
            r#"{"family":"level_wise_regular_block","m":4,"pairs":[[1,3],[1,3]]}"#
        );
        assert!(serde_json::from_str::<FamilySpec>(r#"{"family":"nope"}"#).is_err());
    }

    #[test]
    fn generated_sizes() {
        let g = generate(&star_spec(1, 3, 1, 3)).unwrap();
        assert_eq!(g.graph.order(), 7);
        let g = generate(&lw(4, &[(1, 3), (1, 3)])).unwrap();
        assert_eq!(g.graph.order(), 52);
        let bg = BlockGraph::analyze(g.graph).unwrap();
        assert_eq!(bg.diameter(), 5);
        assert_eq!(bg.total_level(), 84);
        let g = generate(&FamilySpec::Banana { n: 5, k: 4 }).unwrap();
        assert_eq!(g.graph.order(), 21);
        assert_eq!(BlockGraph::analyze(g.graph).unwrap().diameter(), 6);
    }

    #[test]
    fn documented_weight_centers() {
        let bg = BlockGraph::analyze(generate(&star_spec(3, 2, 2, 4)).unwrap().graph).unwrap();
        assert_eq!(bg.centers.weight_centers, vec![0, 1, 2]);
        let bg = BlockGraph::analyze(generate(&lw(4, &[(1, 3), (1, 3)])).unwrap().graph).unwrap();
        assert_eq!(bg.centers.weight_centers, vec![0, 1, 2, 3]);
        let bg = BlockGraph::analyze(generate(&lw(1, &[(2, 3), (1, 3)])).unwrap().graph).unwrap();
        assert_eq!(bg.centers.weight_centers, vec![0]);
    }

    #[test]
    fn named_instances() {
        assert_eq!(check_family(&lw(1, &[(2, 3), (1, 3)])), 37);
        assert_eq!(check_family(&lw(4, &[(1, 3), (1, 3)])), 87);
        assert_eq!(check_family(&star_spec(1, 3, 3, 4)), 82);
        assert_eq!(check_family(&star_spec(3, 2, 2, 4)), 82);
    }

    #[test]
    fn star_ordering_ends() {
        let spec = star_spec(3, 2, 2, 4);
        let g = generate(&spec).unwrap();
        let ord = canonical_ordering(&spec).unwrap();
        let p = ord.len();
        assert_eq!(g.names[ord[0]], "w^3");
        assert_eq!(g.names[ord[p - 2]], "w^1");
        assert_eq!(g.names[ord[p - 1]], "w^2");
    }

    #[test]
    fn star_with_single_center_and_even_k() {
        for (k, h, n) in [(4, 1, 2), (4, 2, 3), (4, 3, 2), (6, 2, 4)] {
            check_family(&star_spec(1, k, h, n));
        }
    }

    #[test]
    fn two_centres_with_one_clique_branch_each_miss_the_bound() {
        // S^2_{1,1,3}: two triangles hanging off an edge
        let spec = star_spec(2, 1, 1, 3);
        let bg = BlockGraph::analyze(generate(&spec).unwrap().graph).unwrap();
        assert_eq!(closed_form_rn(&spec).unwrap(), 7);
        assert_eq!(lower_bound(&bg).unwrap(), 7);
        let exact = crate::exact::exact_radio_number(&bg.dist, 10, None).unwrap();
        assert_eq!(exact.rn, 8);
        let report = certify(&bg, &canonical_ordering(&spec).unwrap()).unwrap();
        assert!(!report.conditions.cond_c.ok);
    }

    #[test]
    fn star_level_sum_cap() {
        for (m, k, h, n) in [(1, 3, 3, 4), (3, 2, 2, 4), (2, 3, 4, 3), (1, 5, 4, 2)] {
            let spec = star_spec(m, k, h, n);
            let bg = BlockGraph::analyze(generate(&spec).unwrap().graph).unwrap();
            let ord = canonical_ordering(&spec).unwrap();
            let cap = (bg.diameter() + 3 + usize::from(bg.epsilon())) as i64;
            let sums: Vec<i64> = ord
                .as_slice()
                .windows(2)
                .map(|w| 2 * (bg.level(w[0]) + bg.level(w[1])) as i64)
                .collect();
            assert!(sums.iter().all(|&s| s <= cap));
            for window in sums.windows(m * k) {
                assert!(window.iter().filter(|&&s| s == cap).count() <= 1);
            }
        }
    }

    #[test]
    fn parameter_checks() {
        assert!(generate(&lw(2, &[(1, 3)])).is_err());
        assert!(generate(&lw(1, &[(1, 3)])).is_err());
        assert!(generate(&lw(3, &[(1, 1)])).is_err());
        assert!(generate(&star_spec(1, 2, 1, 2)).is_err());
        assert!(generate(&FamilySpec::Caterpillar { n: 2, k: 3 }).is_err());
        assert!(matches!(
            canonical_ordering(&FamilySpec::TreePath { n: 4 }),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            closed_form_rn(&FamilySpec::Banana { n: 5, k: 4 }),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn small_sweep() {
        for m in [1, 3] {
            for k1 in 1..=3 {
                for m1 in 2..=3 {
                    if m == 1 && k1 < 2 {
                        continue;
                    }
                    check_family(&lw(m, &[(k1, m1)]));
                    check_family(&lw(m, &[(k1, m1), (2, 2)]));
                }
            }
        }
        for m in 1..=3 {
            for k in 1..=3 {
                if m == 1 && k < 3 {
                    continue;
                }
                for h in 1..=3 {
                    for n in 2..=4 {
                        if m * k == 2 && n >= 3 {
                            continue;
                        }
                        check_family(&star_spec(m, k, h, n));
                    }
                }
            }
        }
    }
}
