//! Simple undirected graphs, BFS distances and block decomposition.
//!
//! Vertex ids are dense integers `0..p`. The text format shared with the CLI is
//! a vertex count on the first line followed by one `u v` edge per line; lines
//! starting with `#` are ignored.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `p` vertices.
    pub fn empty(p: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); p],
        }
    }

    pub fn from_edges<I>(p: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(p);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let p = self.adj.len();
        if u >= p || v >= p {
            return Err(Error::InvalidEdge(u, v, "endpoint out of range"));
        }
        if u == v {
            return Err(Error::InvalidEdge(u, v, "self-loop"));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::InvalidEdge(u, v, "duplicate edge")),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.adj.is_empty() {
            return true;
        }
        self.bfs(0).iter().all(|d| d.is_some())
    }

    /// True when the graph is connected and has exactly `p - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.edge_count() + 1 == self.order() && self.is_connected()
    }

    fn bfs(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.adj.len()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Parses the shared text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (first, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing vertex count".into(),
        })?;
        let p: usize = header.parse().map_err(|_| Error::Parse {
            line: first,
            msg: format!("expected vertex count, found {header:?}"),
        })?;
        let mut g = Graph::empty(p);
        for (line, l) in lines {
            let mut it = l.split_whitespace();
            let mut endpoint = || -> Result<usize> {
                let tok = it.next().ok_or(Error::Parse {
                    line,
                    msg: "expected two endpoints".into(),
                })?;
                tok.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad vertex id {tok:?}"),
                })
            };
            let (u, v) = (endpoint()?, endpoint()?);
            if it.next().is_some() {
                return Err(Error::Parse {
                    line,
                    msg: "trailing tokens after edge".into(),
                });
            }
            g.add_edge(u, v).map_err(|e| Error::Parse {
                line,
                msg: e.to_string(),
            })?;
        }
        Ok(g)
    }

    /// Serializes to the shared text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// All-pairs shortest-path distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    p: usize,
    dist: Vec<u32>,
    diameter: usize,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.p + v] as usize
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn order(&self) -> usize {
        self.p
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.p..(u + 1) * self.p]
    }
}

/// BFS from every vertex.
pub fn all_pairs_distance(g: &Graph) -> Result<DistanceMatrix> {
    let p = g.order();
    let mut dist = Vec::with_capacity(p * p);
    for s in 0..p {
        for d in g.bfs(s) {
            dist.push(d.ok_or(Error::NotConnected)?);
        }
    }
    let diameter = dist.iter().copied().max().unwrap_or(0) as usize;
    Ok(DistanceMatrix { p, dist, diameter })
}

/// Blocks (maximal 2-connected subgraphs) and cut vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted vertex sets, ordered by their smallest vertex.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    edge_block: BTreeMap<(usize, usize), usize>,
}

impl BlockDecomposition {
    /// Index of the block containing edge `uv`.
    pub fn block_of(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_block.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn blocks_containing(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.blocks
            .iter()
            .enumerate()
            .filter(move |(_, b)| b.binary_search(&v).is_ok())
            .map(|(i, _)| i)
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }
}

/// Biconnected components by Tarjan's low-link DFS with an explicit edge stack.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let p = g.order();
    let mut disc = vec![usize::MAX; p];
    let mut low = vec![0usize; p];
    let mut is_cut = vec![false; p];
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut edge_sets: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut time = 0;

    if p == 1 {
        blocks.push(vec![0]);
        edge_sets.push(Vec::new());
    }

    // (vertex, parent, next neighbour index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..p {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, usize::MAX, 0));
        let mut root_children = 0;
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(u) {
                let v = g.neighbors(u)[*idx];
                *idx += 1;
                if disc[v] == usize::MAX {
                    edge_stack.push((u, v));
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((v, u, 0));
                } else if v != parent && disc[v] < disc[u] {
                    edge_stack.push((u, v));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[u]);
                if low[u] >= disc[parent] {
                    if parent != root {
                        is_cut[parent] = true;
                    }
                    let mut verts = Vec::new();
                    let mut es = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        verts.push(e.0);
                        verts.push(e.1);
                        es.push((e.0.min(e.1), e.0.max(e.1)));
                        if e == (parent, u) {
                            break;
                        }
                    }
                    verts.sort_unstable();
                    verts.dedup();
                    blocks.push(verts);
                    edge_sets.push(es);
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by(|&a, &b| blocks[a].cmp(&blocks[b]));
    let mut edge_block = BTreeMap::new();
    let mut sorted_blocks = Vec::with_capacity(blocks.len());
    for (new_idx, &old) in order.iter().enumerate() {
        for &e in &edge_sets[old] {
            edge_block.insert(e, new_idx);
        }
        sorted_blocks.push(std::mem::take(&mut blocks[old]));
    }
    Ok(BlockDecomposition {
        blocks: sorted_blocks,
        cut_vertices: (0..p).filter(|&v| is_cut[v]).collect(),
        edge_block,
    })
}

/// True iff every block induces a clique.
pub fn is_block_graph(g: &Graph) -> Result<bool> {
    let bd = block_decomposition(g)?;
    Ok(blocks_are_cliques(g, &bd))
}

pub(crate) fn blocks_are_cliques(g: &Graph, bd: &BlockDecomposition) -> bool {
    bd.blocks.iter().all(|b| {
        b.iter()
            .enumerate()
            .all(|(i, &u)| b[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    })
}

/// The unique shortest `(u, v)`-path of a block graph, endpoints included.
pub fn geodesic(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> Result<Vec<usize>> {
    let mut path = vec![u];
    let mut cur = u;
    while cur != v {
        let want = d.get(cur, v) - 1;
        let mut next = g.neighbors(cur).iter().filter(|&&x| d.get(x, v) == want);
        let step = *next.next().ok_or(Error::NotConnected)?;
        if next.next().is_some() {
            return Err(Error::NonUniqueGeodesic(u, v));
        }
        path.push(step);
        cur = step;
    }
    Ok(path)
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn distances_on_small_graphs() {
        let d = all_pairs_distance(&path(4)).unwrap();
        assert_eq!(d.get(0, 3), 3);
        assert_eq!(d.diameter(), 3);

        let d = all_pairs_distance(&complete(3)).unwrap();
        assert!((0..3).all(|u| (0..3).all(|v| d.get(u, v) == usize::from(u != v))));
        assert_eq!(d.diameter(), 1);

        let d = all_pairs_distance(&triangle_pendant()).unwrap();
        assert_eq!(d.get(0, 3), 2);
        assert_eq!(d.diameter(), 2);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(all_pairs_distance(&g), Err(Error::NotConnected));
        assert_eq!(block_decomposition(&g), Err(Error::NotConnected));
    }

    #[test]
    fn blocks_of_small_graphs() {
        let bd = block_decomposition(&path(4)).unwrap();
        assert_eq!(bd.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(bd.cut_vertices, vec![1, 2]);

        let bd = block_decomposition(&complete(4)).unwrap();
        assert_eq!(bd.blocks, vec![vec![0, 1, 2, 3]]);
        assert!(bd.cut_vertices.is_empty());

        let bd = block_decomposition(&triangle_pendant()).unwrap();
        assert_eq!(bd.blocks, vec![vec![0, 1, 2], vec![2, 3]]);
        assert_eq!(bd.cut_vertices, vec![2]);
        assert_eq!(bd.block_of(3, 2), Some(1));
        assert_eq!(bd.blocks_containing(2).collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn block_graph_recognition() {
        assert!(is_block_graph(&path(6)).unwrap());
        assert!(is_block_graph(&star(5)).unwrap());
        assert!(!is_block_graph(&cycle(4)).unwrap());
        assert!(is_block_graph(&triangle_pendant()).unwrap());
        assert!(is_block_graph(&complete(5)).unwrap());
    }

    #[test]
    fn geodesics() {
        let g = path(4);
        let d = all_pairs_distance(&g).unwrap();
        assert_eq!(geodesic(&g, &d, 0, 3).unwrap(), vec![0, 1, 2, 3]);
        let g = complete(3);
        let d = all_pairs_distance(&g).unwrap();
        assert_eq!(geodesic(&g, &d, 0, 1).unwrap(), vec![0, 1]);
        let g = triangle_pendant();
        let d = all_pairs_distance(&g).unwrap();
        assert_eq!(geodesic(&g, &d, 0, 3).unwrap(), vec![0, 2, 3]);

        let g = cycle(4);
        let d = all_pairs_distance(&g).unwrap();
        assert_eq!(geodesic(&g, &d, 0, 2), Err(Error::NonUniqueGeodesic(0, 2)));
    }

    #[test]
    fn parse_and_print() {
        let g = Graph::parse("# P4\n4\n0 1\n\n1 2\n2 3\n").unwrap();
        assert_eq!(g, path(4));
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);

        assert!(matches!(
            Graph::parse("3\n0 1\n1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            Graph::parse("3\n1 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(Graph::parse("3\n0 7\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse("x\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse("3\n0\n"), Err(Error::Parse { .. })));
    }
}
