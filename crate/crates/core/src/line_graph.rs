//! Line graphs of trees and labeling transfers between a tree and its line
//! graph.
//!
//! The tree is rooted at a weight center `w*`; the line-graph vertex for the
//! edge `uv`, with `v` one step further from `w*`, is named by `v`. Line-graph
//! ids are assigned in increasing order of these tree names.

use serde::Serialize;

use crate::center::BlockGraph;
use crate::certificate::certify;
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::radio::{labeling_from_ordering, validate_radio, RadioLabeling, VertexOrdering};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineGraphOfTree {
    pub graph: Graph,
    /// Tree vertex naming each line-graph vertex.
    pub name_of: Vec<usize>,
    pub root: usize,
    /// Tree parent of every tree vertex (`None` for the root).
    #[serde(skip)]
    tree_parent: Vec<Option<usize>>,
    #[serde(skip)]
    depth: Vec<usize>,
}

impl LineGraphOfTree {
    /// Line-graph id of the edge named by tree vertex `v`.
    pub fn line_id(&self, v: usize) -> Option<usize> {
        if v == self.root {
            return None;
        }
        Some(if v < self.root { v } else { v - 1 })
    }

    /// True when tree vertex `a` lies on the tree path from the root to `v`.
    pub fn tree_ancestor(&self, a: usize, v: usize) -> bool {
        let mut x = v;
        while self.depth[x] > self.depth[a] {
            x = self.tree_parent[x].unwrap();
        }
        x == a
    }

    /// Neither of the two tree vertices is an ancestor of the other.
    pub fn unrelated(&self, u: usize, v: usize) -> bool {
        !self.tree_ancestor(u, v) && !self.tree_ancestor(v, u)
    }
}

fn tree_centers(t: &Graph) -> Result<BlockGraph> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.order() < 3 {
        return Err(Error::InvalidParameters(
            "line graph needs a tree with at least 3 vertices".into(),
        ));
    }
    BlockGraph::analyze(t.clone())
}

/// Line graph rooted at the smallest weight center of `t`.
pub fn line_graph_of_tree(t: &Graph) -> Result<LineGraphOfTree> {
    let bt = tree_centers(t)?;
    build(t, bt.centers.weight_centers[0])
}

/// Line graph with the naming rooted at `root`, which must be a weight
/// center of `t`.
pub fn line_graph_of_tree_rooted(t: &Graph, root: usize) -> Result<LineGraphOfTree> {
    let bt = tree_centers(t)?;
    if !bt.centers.weight_centers.contains(&root) {
        return Err(Error::InvalidParameters(format!(
            "root {root} is not a weight center"
        )));
    }
    build(t, root)
}

fn build(t: &Graph, root: usize) -> Result<LineGraphOfTree> {
    let p = t.order();
    let mut tree_parent = vec![None; p];
    let mut depth = vec![0; p];
    let mut seen = vec![false; p];
    let mut queue = std::collections::VecDeque::from([root]);
    seen[root] = true;
    while let Some(u) = queue.pop_front() {
        for &v in t.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                tree_parent[v] = Some(u);
                depth[v] = depth[u] + 1;
                queue.push_back(v);
            }
        }
    }
    let name_of: Vec<usize> = (0..p).filter(|&v| v != root).collect();
    let id = |v: usize| if v < root { v } else { v - 1 };
    let mut graph = Graph::empty(p - 1);
    // two edges meet iff they share a parent, or one's child is the other's parent
    for &v in &name_of {
        let pv = tree_parent[v].unwrap();
        for &c in t.neighbors(v) {
            if tree_parent[c] == Some(v) {
                graph.add_edge(id(v), id(c))?;
            }
        }
        for &s in t.neighbors(pv) {
            if s > v && tree_parent[s] == Some(pv) {
                graph.add_edge(id(v), id(s))?;
            }
        }
    }
    let lt = LineGraphOfTree {
        graph,
        name_of,
        root,
        tree_parent,
        depth,
    };
    let bt = BlockGraph::analyze(t.clone())?;
    if bt.centers.weight_centers.len() == 2 {
        let bl = BlockGraph::analyze(lt.graph.clone())?;
        assert_eq!(
            bl.centers.weight_centers.len(),
            1,
            "a tree with two weight centers has a line graph with one"
        );
    }
    Ok(lt)
}

/// Center configuration of a tree and its line graph.
#[derive(Debug, Clone)]
struct Pair {
    bt: BlockGraph,
    bl: BlockGraph,
}

impl Pair {
    fn new(t: &Graph, lt: &LineGraphOfTree) -> Result<Self> {
        Ok(Pair {
            bt: BlockGraph::analyze(t.clone())?,
            bl: BlockGraph::analyze(lt.graph.clone())?,
        })
    }

    fn tree_centers(&self) -> usize {
        self.bt.centers.weight_centers.len()
    }

    fn line_centers(&self) -> usize {
        self.bl.centers.weight_centers.len()
    }

    fn single_single(&self) -> bool {
        self.tree_centers() == 1 && self.line_centers() == 1
    }
}

/// Vertex set (line-graph ids) of `B(T)`: the line center `w` and every edge
/// whose name descends from the name of `w`.
pub fn b_subgraph(t: &Graph, lt: &LineGraphOfTree) -> Result<Vec<usize>> {
    let pair = Pair::new(t, lt)?;
    b_subgraph_of(&pair, lt)
}

fn b_subgraph_of(pair: &Pair, lt: &LineGraphOfTree) -> Result<Vec<usize>> {
    if !pair.single_single() {
        return Err(Error::CenterConfiguration(format!(
            "|W(T)| = {}, |W(L(T))| = {}",
            pair.tree_centers(),
            pair.line_centers()
        )));
    }
    let w = pair.bl.centers.weight_centers[0];
    let wn = lt.name_of[w];
    let b: Vec<usize> = (0..lt.name_of.len())
        .filter(|&x| lt.tree_ancestor(wn, lt.name_of[x]))
        .collect();
    let p = lt.name_of.len() + 1;
    assert!(b.len() <= (p - 1) / 2, "|B(T)| exceeds floor((p-1)/2)");
    let ls = &pair.bl.levels;
    let inside: Vec<_> = b
        .iter()
        .filter(|&&x| x != w)
        .map(|&x| ls.branch_of[x])
        .collect();
    let outside: Vec<_> = (0..p - 1)
        .filter(|x| !b.contains(x))
        .map(|x| ls.branch_of[x])
        .collect();
    let one_branch = |v: &[Option<usize>]| {
        v.first()
            .is_some_and(|f| f.is_some() && v.iter().all(|x| x == f))
    };
    assert!(
        ls.branches.len() == 2 && one_branch(&inside) && one_branch(&outside),
        "B(T) - w and L(T) - B(T) must be the two branches"
    );
    Ok(b)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObsReport {
    pub order_and_diameter: bool,
    pub distances: bool,
    pub levels: bool,
    pub total_level: bool,
    pub tree_centers: usize,
    pub line_centers: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_size: Option<usize>,
}

impl ObsReport {
    pub fn all(&self) -> bool {
        self.order_and_diameter && self.distances && self.levels && self.total_level
    }
}

/// Recomputes the four tree/line-graph identities: order and diameter drop by
/// one; distances drop by one exactly for unrelated pairs; levels and the
/// total level shift according to the center configuration.
pub fn line_obs_check(t: &Graph, lt: &LineGraphOfTree) -> Result<ObsReport> {
    let pair = Pair::new(t, lt)?;
    let (bt, bl) = (&pair.bt, &pair.bl);
    let p = t.order();
    let q = lt.graph.order();

    let order_and_diameter = q == p - 1 && bl.diameter() + 1 == bt.diameter();

    let mut distances = true;
    for x in 0..q {
        for y in x + 1..q {
            let (u, v) = (lt.name_of[x], lt.name_of[y]);
            let expected = bt.distance(u, v) - usize::from(lt.unrelated(u, v));
            distances &= bl.distance(x, y) == expected;
        }
    }

    let b = if pair.single_single() {
        Some(b_subgraph_of(&pair, lt)?)
    } else {
        None
    };
    let mut levels = true;
    for x in 0..q {
        let drop = match &b {
            Some(b) => b.contains(&x),
            None => pair.line_centers() >= 2,
        };
        levels &= bl.level(x) + usize::from(drop) == bt.level(lt.name_of[x]);
    }

    let expected_total = match (&b, pair.tree_centers()) {
        (Some(b), _) => bt.total_level() - b.len(),
        (None, 1) => bt.total_level() + 1 - p,
        _ => bt.total_level(),
    };
    Ok(ObsReport {
        order_and_diameter,
        distances,
        levels,
        total_level: bl.total_level() == expected_total,
        tree_centers: pair.tree_centers(),
        line_centers: pair.line_centers(),
        b_size: b.map(|b| b.len()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TransferCase {
    #[serde(rename = "line-i")]
    LineI,
    #[serde(rename = "line-ii")]
    LineII,
    #[serde(rename = "line-iii")]
    LineIII,
    #[serde(rename = "reverse-2centers")]
    TwoCenters,
    #[serde(rename = "reverse-odd-p")]
    OddP,
    #[serde(rename = "reverse-multi-center")]
    MultiCenter,
    #[serde(rename = "none")]
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferReport {
    pub case: TransferCase,
    /// Failed hypotheses when `case` is `none`, otherwise the checks made.
    pub hypotheses: Vec<String>,
    /// Ordering on the target graph, in target ids.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ordering: Option<VertexOrdering>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labeling: Option<RadioLabeling>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub span: Option<u64>,
    /// Span predicted from the source span.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_span: Option<u64>,
    pub valid: bool,
}

impl TransferReport {
    fn none(hypotheses: Vec<String>) -> Self {
        TransferReport {
            case: TransferCase::None,
            hypotheses,
            ordering: None,
            labeling: None,
            span: None,
            expected_span: None,
            valid: false,
        }
    }

    pub fn succeeded(&self) -> bool {
        self.case != TransferCase::None && self.valid && self.span == self.expected_span
    }
}

/// From a certifying tree ordering to a labeling of the line graph (rooted at
/// `lt.root`). The ordering is read with the root last; it is reversed if the
/// root comes first.
pub fn transfer_to_line(
    t: &Graph,
    lt: &LineGraphOfTree,
    ord_t: &VertexOrdering,
) -> Result<TransferReport> {
    let pair = Pair::new(t, lt)?;
    let (bt, bl) = (&pair.bt, &pair.bl);
    let report = certify(bt, ord_t)?;
    let mut failed = Vec::new();
    if !report.verdict.is_certified() {
        failed.push("ordering does not certify T".to_string());
    }
    let p = t.order();
    let oriented = if ord_t[p - 1] == lt.root {
        ord_t.clone()
    } else if ord_t[0] == lt.root {
        ord_t.reversed()
    } else {
        failed.push(format!("root {} is not at an end of the ordering", lt.root));
        ord_t.clone()
    };
    if bt.level(oriented[p - 2]) != 1 {
        failed.push("L(u_{p-2}) != 1".to_string());
    }

    let line_center = bl.centers.weight_centers[0];
    let case = if pair.tree_centers() == 2 {
        TransferCase::LineIII
    } else if pair.line_centers() > 1 {
        TransferCase::LineII
    } else {
        let b = b_subgraph_of(&pair, lt)?;
        if p % 2 == 1 && b.len() == (p - 1) / 2 {
            TransferCase::LineI
        } else {
            failed.push(format!(
                "|W(T)| = |W(L(T))| = 1 with p = {p} and |B(T)| = {}",
                b.len()
            ));
            TransferCase::None
        }
    };
    if matches!(case, TransferCase::LineI | TransferCase::LineIII)
        && lt.line_id(oriented[0]) != Some(line_center)
    {
        failed.push("u_0 is not the line-graph center".to_string());
    }
    if case == TransferCase::None || !failed.is_empty() {
        return Ok(TransferReport::none(failed));
    }

    let order: Vec<usize> = oriented.as_slice()[..p - 1]
        .iter()
        .map(|&v| lt.line_id(v).unwrap())
        .collect();
    let ord_l = VertexOrdering::new(order, p - 1)?;
    let span_t = report.span.expect("certified ordering has a span") as i64;
    let expected = span_t - bt.diameter() as i64 + 1 - i64::from(bt.epsilon());
    let f = labeling_from_ordering(bl, &ord_l).ok();
    let valid = f.as_ref().is_some_and(|f| {
        validate_radio(&bl.dist, f, bl.diameter())
            .unwrap()
            .is_valid()
    });
    Ok(TransferReport {
        case,
        hypotheses: vec![
            format!(
                "|W(T)| = {}, |W(L(T))| = {}",
                pair.tree_centers(),
                pair.line_centers()
            ),
            "L(u_{p-2}) = 1".to_string(),
        ],
        span: f.as_ref().map(RadioLabeling::span),
        labeling: f,
        ordering: Some(ord_l),
        expected_span: u64::try_from(expected).ok(),
        valid,
    })
}

/// From a certifying line-graph ordering (line ids of `lt`) to a labeling
/// of the tree.
pub fn transfer_to_tree(
    t: &Graph,
    lt: &LineGraphOfTree,
    ord_l: &VertexOrdering,
) -> Result<TransferReport> {
    let pair = Pair::new(t, lt)?;
    let (bt, bl) = (&pair.bt, &pair.bl);
    let report = certify(bl, ord_l)?;
    if !report.verdict.is_certified() {
        return Ok(TransferReport::none(vec![
            "ordering does not certify L(T)".to_string()
        ]));
    }
    let q = lt.graph.order();
    let p = t.order();
    let d_l = bl.diameter() as u64;

    let case = if pair.tree_centers() == 2 {
        TransferCase::TwoCenters
    } else if pair.line_centers() >= 2 {
        TransferCase::MultiCenter
    } else if p % 2 == 1 {
        TransferCase::OddP
    } else {
        return Ok(TransferReport::none(vec![format!(
            "|W(T)| = |W(L(T))| = 1 with p = {p} even"
        )]));
    };

    // single line center first, when there is one
    let ord_l = if pair.line_centers() == 1 && ord_l[0] != bl.centers.weight_centers[0] {
        ord_l.reversed()
    } else {
        ord_l.clone()
    };
    let f = labeling_from_ordering(bl, &ord_l).expect("certified ordering");
    let names: Vec<usize> = ord_l.iter().map(|x| lt.name_of[x]).collect();

    let mut hypotheses = vec![format!(
        "|W(T)| = {}, |W(L(T))| = {}",
        pair.tree_centers(),
        pair.line_centers()
    )];
    let (order, labels_along, expected) = match case {
        TransferCase::TwoCenters => {
            let mut order = names;
            order.push(lt.root);
            let mut labels = f.along(&ord_l);
            let last = labels[q - 1] + bt.diameter() as u64 - 1;
            labels.push(last);
            (order, labels, f.span() + bt.diameter() as u64 - 1)
        }
        _ => {
            if case == TransferCase::MultiCenter {
                let pos = ord_l.positions();
                let ls = &bl.levels;
                for x in 0..q {
                    for y in 0..q {
                        if x != y
                            && ls.is_ancestor(x, y)
                            && pos[x].abs_diff(pos[y]) < d_l as usize + 1
                        {
                            return Ok(TransferReport::none(vec![format!(
                                "descendant pair {x},{y} at positions {},{} closer than d(L(T)) + 1",
                                pos[x], pos[y]
                            )]));
                        }
                    }
                }
                hypotheses.push("descendant pairs at least d(L(T)) + 1 apart".to_string());
            }
            let mut order = vec![lt.root];
            order.extend(names);
            let mut labels = vec![0];
            labels.extend(f.along(&ord_l).iter().map(|&x| x + d_l + 1));
            (order, labels, f.span() + d_l + 1)
        }
    };
    let ordering = VertexOrdering::new(order, p)?;
    let mut labels = vec![0; p];
    for (v, l) in ordering.iter().zip(labels_along) {
        labels[v] = l;
    }
    let f_t = RadioLabeling::new(labels);
    let valid = validate_radio(&bt.dist, &f_t, bt.diameter())?.is_valid();
    Ok(TransferReport {
        case,
        hypotheses,
        ordering: Some(ordering),
        span: Some(f_t.span()),
        labeling: Some(f_t),
        expected_span: Some(expected),
        valid,
    })
}

/// Closed-form radio number of the line graph of a banana, firecracker,
/// complete `m`-ary or level-wise regular tree.
pub fn line_rn_formula(spec: &FamilySpec) -> Result<u64> {
    spec.validate()?;
    let bad = |msg: &str| Err(Error::InvalidParameters(msg.to_string()));
    let value: i64 = match spec {
        FamilySpec::Banana { n, k } => {
            if *n < 5 || *k < 4 {
                return bad("need n >= 5 and k >= 4");
            }
            (n * (k + 6) - 5) as i64
        }
        FamilySpec::Firecracker { n, k } => {
            let (n, k) = (*n as i64, *k as i64);
            if n % 2 == 1 {
                (n * n + 1) * k / 2 + 4 * n - 6
            } else {
                n * n * k / 2 + 4 * n - 5
            }
        }
        FamilySpec::CompleteMAry { h, m } => {
            let mut degrees = vec![m + 1; *h];
            degrees[0] = *m;
            level_wise_tree(1, &degrees)?
        }
        FamilySpec::LevelWiseRegularTree { roots, degrees } => level_wise_tree(*roots, degrees)?,
        other => {
            return Err(Error::Unsupported(format!(
                "no line-graph closed form for {}",
                other.label()
            )))
        }
    };
    Ok(u64::try_from(value).expect("closed-form values are positive"))
}

fn level_wise_tree(roots: usize, degrees: &[usize]) -> Result<i64> {
    if degrees.iter().any(|&m| m < 3) {
        return Err(Error::InvalidParameters("need every m_i >= 3".into()));
    }
    let h = degrees.len() as i64;
    let m: Vec<i64> = degrees.iter().map(|&x| x as i64).collect();
    if roots == 1 {
        // n = 1 + sum_i m_0 prod_{0<j<i} (m_j - 1)
        let (mut n, mut weighted, mut prod) = (1, 0, m[0]);
        for i in 1..=h {
            if i > 1 {
                prod *= m[i as usize - 1] - 1;
            }
            n += prod;
            weighted += i * prod;
        }
        let d = 2 * h;
        Ok((d + 1) * (n - 1) + 1 - 2 * weighted - 2 * h)
    } else {
        let (mut n, mut weighted, mut prod) = (2, 0, 1);
        for i in 1..=h {
            prod *= m[i as usize - 1] - 1;
            n += 2 * prod;
            weighted += i * prod;
        }
        let d = 2 * h + 1;
        Ok(d * (n - 1) - 4 * weighted - 2 * h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, random_block_graph};
    use crate::graph::fixtures::*;
    use crate::radio::lower_bound;

    fn ord(v: &[usize]) -> VertexOrdering {
        VertexOrdering::new(v.to_vec(), v.len()).unwrap()
    }

    #[test]
    fn small_line_graphs() {
        let lt = line_graph_of_tree(&path(4)).unwrap();
        assert_eq!(lt.graph, path(3));
        assert_eq!(lt.root, 1);
        assert_eq!(lt.name_of, vec![0, 2, 3]);
        let lt = line_graph_of_tree(&star(3)).unwrap();
        assert_eq!(lt.graph, complete(3));
        assert!(line_graph_of_tree(&cycle(4)).is_err());
        assert!(line_graph_of_tree(&path(2)).is_err());
        assert!(line_graph_of_tree_rooted(&path(4), 0).is_err());
        assert_eq!(
            line_graph_of_tree_rooted(&path(4), 2).unwrap().name_of,
            vec![0, 1, 3]
        );
    }

    #[test]
    fn b_subgraph_errors_on_multi_center_lines() {
        let t = star(3);
        let lt = line_graph_of_tree(&t).unwrap();
        assert!(matches!(
            b_subgraph(&t, &lt),
            Err(Error::CenterConfiguration(_))
        ));
    }

    fn spider(legs: &[usize]) -> Graph {
        let mut g = Graph::empty(1);
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                let v = g.add_vertex();
                g.add_edge(prev, v).unwrap();
                prev = v;
            }
        }
        g
    }

    #[test]
    fn b_subgraph_of_long_leg_spider() {
        // legs 3, 1, 1, 1: the line center is the first edge of the long leg
        let t = spider(&[3, 1, 1, 1]);
        let lt = line_graph_of_tree(&t).unwrap();
        let b = b_subgraph(&t, &lt).unwrap();
        let names: Vec<usize> = b.iter().map(|&x| lt.name_of[x]).collect();
        assert_eq!(names, vec![1, 2, 3]);
    }

    #[test]
    fn observation_on_random_trees_both_roots() {
        for seed in 0..200 {
            let t = random_block_graph(seed, 5 + seed as usize % 30, 2);
            let bt = BlockGraph::analyze(t.clone()).unwrap();
            for &root in &bt.centers.weight_centers {
                let lt = line_graph_of_tree_rooted(&t, root).unwrap();
                let obs = line_obs_check(&t, &lt).unwrap();
                assert!(obs.all(), "seed {seed}: {obs:?}");
            }
        }
    }

    #[test]
    fn p4_to_p3_and_back() {
        let t = path(4);
        let lt = line_graph_of_tree(&t).unwrap();
        let r = transfer_to_line(&t, &lt, &ord(&[1, 3, 0, 2])).unwrap();
        assert_eq!(r.case, TransferCase::LineIII);
        assert_eq!(r.span, Some(3));
        assert!(r.succeeded());

        let back = transfer_to_tree(&t, &lt, r.ordering.as_ref().unwrap()).unwrap();
        assert_eq!(back.case, TransferCase::TwoCenters);
        assert_eq!(back.span, Some(5));
        assert!(back.succeeded());
        assert_eq!(back.ordering.unwrap().as_slice(), &[2, 0, 3, 1]);
    }

    #[test]
    fn p5_reverse_transfer_fails() {
        let t = path(5);
        let lt = line_graph_of_tree(&t).unwrap();
        // L(P_5) = P_4 with names 0, 1, 3, 4 at ids 0..4
        let r = transfer_to_tree(&t, &lt, &ord(&[1, 3, 0, 2])).unwrap();
        assert_eq!(r.case, TransferCase::None);
    }

    #[test]
    fn line_formula_values() {
        assert_eq!(
            line_rn_formula(&FamilySpec::Banana { n: 5, k: 4 }).unwrap(),
            45
        );
        assert_eq!(
            line_rn_formula(&FamilySpec::Firecracker { n: 3, k: 3 }).unwrap(),
            21
        );
        assert_eq!(
            line_rn_formula(&FamilySpec::Firecracker { n: 4, k: 3 }).unwrap(),
            35
        );
        assert!(line_rn_formula(&FamilySpec::Banana { n: 4, k: 4 }).is_err());
        for spec in [
            FamilySpec::Banana { n: 6, k: 5 },
            FamilySpec::Firecracker { n: 5, k: 4 },
            FamilySpec::LevelWiseRegularTree {
                roots: 1,
                degrees: vec![3, 3, 3],
            },
            FamilySpec::LevelWiseRegularTree {
                roots: 2,
                degrees: vec![3, 4],
            },
            FamilySpec::CompleteMAry { h: 2, m: 3 },
        ] {
            let t = generate(&spec).unwrap().graph;
            let lt = line_graph_of_tree(&t).unwrap();
            let lb = lower_bound(&BlockGraph::analyze(lt.graph).unwrap()).unwrap();
            assert_eq!(line_rn_formula(&spec).unwrap(), lb, "{}", spec.label());
        }
    }
}
