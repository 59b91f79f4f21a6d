//! Weight centers, central vertices, levels, branches and the geodesic
//! parameters `phi`, `delta`, `rho` of a block graph.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    all_pairs_distance, block_decomposition, blocks_are_cliques, geodesic, BlockDecomposition,
    DistanceMatrix, Graph,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CenterInfo {
    /// `wt(v)`: sum of distances from `v` to every vertex.
    pub wt: Vec<u64>,
    pub weight_centers: Vec<usize>,
    /// Block containing all weight centers, when there are at least two.
    pub central_block: Option<usize>,
    pub central_vertices: Vec<usize>,
    /// 1 when the weight center is unique, 0 otherwise.
    pub epsilon: u8,
}

impl CenterInfo {
    pub fn is_central(&self, v: usize) -> bool {
        self.central_vertices.binary_search(&v).is_ok()
    }
}

pub fn compute_centers(d: &DistanceMatrix, bd: &BlockDecomposition) -> Result<CenterInfo> {
    let p = d.order();
    let wt: Vec<u64> = (0..p)
        .map(|v| d.row(v).iter().map(|&x| u64::from(x)).sum())
        .collect();
    let min = wt.iter().copied().min().unwrap_or(0);
    let weight_centers: Vec<usize> = (0..p).filter(|&v| wt[v] == min).collect();

    let (central_block, central_vertices) = if weight_centers.len() == 1 {
        (None, weight_centers.clone())
    } else {
        let mut holders = bd
            .blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| weight_centers.iter().all(|w| b.binary_search(w).is_ok()));
        match (holders.next(), holders.next()) {
            (Some((i, b)), None) => (Some(i), b.clone()),
            (None, _) => {
                return Err(Error::NotBlockGraph(format!(
                    "weight centers {weight_centers:?} do not lie in a single block"
                )))
            }
            (Some(_), Some(_)) => {
                return Err(Error::NotBlockGraph(format!(
                    "weight centers {weight_centers:?} lie in several blocks"
                )))
            }
        }
    };
    let epsilon = u8::from(weight_centers.len() == 1);
    Ok(CenterInfo {
        wt,
        weight_centers,
        central_block,
        central_vertices,
        epsilon,
    })
}

/// `n(v, u)`: number of vertices strictly closer to `v` than to `u`.
pub fn closer_count(d: &DistanceMatrix, v: usize, u: usize) -> usize {
    d.row(v)
        .iter()
        .zip(d.row(u))
        .filter(|(dv, du)| dv < du)
        .count()
}

/// A branch hangs off `anchor` through the non-central block `block`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BranchKey {
    pub anchor: usize,
    pub block: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelStructure {
    pub level: Vec<usize>,
    pub total_level: usize,
    /// Nearest central vertex of each vertex (itself for central vertices).
    pub anchor: Vec<usize>,
    pub parent: Vec<Option<usize>>,
    pub branch_of: Vec<Option<usize>>,
    pub branches: Vec<BranchKey>,
    central: Vec<bool>,
}

/// How two vertices sit relative to the branch structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairRelation {
    /// At least one of the two is a central vertex.
    Central,
    SameBranch,
    /// Different branches at the same central vertex.
    Different,
    /// Branches at different central vertices.
    Opposite,
}

impl LevelStructure {
    pub fn is_central(&self, v: usize) -> bool {
        self.central[v]
    }

    pub fn max_level(&self) -> usize {
        self.level.iter().copied().max().unwrap_or(0)
    }

    /// `v` followed by its parent chain, ending at its anchoring central vertex.
    pub fn ancestors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::successors(Some(v), move |&x| self.parent[x])
    }

    /// True when `a` lies on the geodesic from `v`'s central vertex to `v`.
    pub fn is_ancestor(&self, a: usize, v: usize) -> bool {
        self.anchor[a] == self.anchor[v]
            && self.level[a] <= self.level[v]
            && self.ancestors(v).nth(self.level[v] - self.level[a]) == Some(a)
    }

    pub fn relation(&self, u: usize, v: usize) -> PairRelation {
        match (self.branch_of[u], self.branch_of[v]) {
            (None, _) | (_, None) => PairRelation::Central,
            (Some(a), Some(b)) if a == b => PairRelation::SameBranch,
            _ if self.anchor[u] == self.anchor[v] => PairRelation::Different,
            _ => PairRelation::Opposite,
        }
    }

    /// Deepest common ancestor of `u` and `v`, if they share an anchor.
    pub fn common_ancestor(&self, u: usize, v: usize) -> Option<usize> {
        if self.anchor[u] != self.anchor[v] {
            return None;
        }
        let (mut a, mut b) = (u, v);
        while self.level[a] > self.level[b] {
            a = self.parent[a].unwrap();
        }
        while self.level[b] > self.level[a] {
            b = self.parent[b].unwrap();
        }
        while a != b {
            a = self.parent[a].unwrap();
            b = self.parent[b].unwrap();
        }
        Some(a)
    }

    /// `phi(u, v)`: largest level of a common ancestor, 0 when there is none.
    pub fn phi(&self, u: usize, v: usize) -> usize {
        self.common_ancestor(u, v).map_or(0, |a| self.level[a])
    }
}

pub fn levels_and_branches(
    d: &DistanceMatrix,
    bd: &BlockDecomposition,
    ci: &CenterInfo,
) -> Result<LevelStructure> {
    let p = d.order();
    let mut level = vec![0; p];
    let mut anchor = vec![0; p];
    for v in 0..p {
        let best = ci
            .central_vertices
            .iter()
            .map(|&c| d.get(v, c))
            .min()
            .expect("central vertex set is nonempty");
        let mut nearest = ci.central_vertices.iter().filter(|&&c| d.get(v, c) == best);
        anchor[v] = *nearest.next().unwrap();
        if nearest.next().is_some() {
            return Err(Error::NotBlockGraph(format!(
                "vertex {v} is equidistant from two central vertices"
            )));
        }
        level[v] = best;
    }

    let mut parent = vec![None; p];
    let mut central = vec![false; p];
    for &c in &ci.central_vertices {
        central[c] = true;
    }
    for v in (0..p).filter(|&v| !central[v]) {
        let w = anchor[v];
        // the predecessor of v on the (w, v)-geodesic
        let mut cands = (0..p).filter(|&x| {
            d.get(x, v) == 1 && d.get(x, w) + 1 == level[v] && (x == w || anchor[x] == w)
        });
        let x = cands
            .next()
            .ok_or_else(|| Error::NotBlockGraph(format!("vertex {v} has no parent towards {w}")))?;
        if cands.next().is_some() {
            return Err(Error::NonUniqueGeodesic(w, v));
        }
        parent[v] = Some(x);
    }

    let mut keys = vec![None; p];
    let mut set = BTreeSet::new();
    for v in (0..p).filter(|&v| !central[v]) {
        let mut top = v;
        while let Some(x) = parent[top].filter(|&x| !central[x]) {
            top = x;
        }
        let w = anchor[v];
        let block = bd
            .block_of(w, top)
            .expect("level-1 ancestor is adjacent to its anchor");
        let key = BranchKey { anchor: w, block };
        keys[v] = Some(key);
        set.insert(key);
    }
    let branches: Vec<BranchKey> = set.into_iter().collect();
    let branch_of = keys
        .into_iter()
        .map(|k| k.map(|k| branches.binary_search(&k).unwrap()))
        .collect();
    let total_level = level.iter().sum();
    Ok(LevelStructure {
        level,
        total_level,
        anchor,
        parent,
        branch_of,
        branches,
        central,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GeoParams {
    pub phi: usize,
    pub delta: u8,
    pub rho: u8,
}

pub fn geo_params(
    g: &Graph,
    d: &DistanceMatrix,
    ls: &LevelStructure,
    u: usize,
    v: usize,
) -> Result<GeoParams> {
    let common = ls.common_ancestor(u, v);
    let phi = common.map_or(0, |a| ls.level[a]);
    let path = geodesic(g, d, u, v)?;
    let centrals = path.iter().filter(|&&x| ls.is_central(x)).count();
    let touches_common = common.is_some_and(|a| {
        // every ancestor of the deepest common ancestor is also common
        path.iter().any(|&x| ls.is_ancestor(x, a))
    });
    Ok(GeoParams {
        phi,
        delta: u8::from(centrals >= 2),
        rho: u8::from(centrals == 0 && !touches_common),
    })
}

/// `L(u) + L(v) + delta - 2 phi - rho`.
pub fn distance_by_formula(ls: &LevelStructure, gp: &GeoParams, u: usize, v: usize) -> usize {
    let value = (ls.level[u] + ls.level[v] + usize::from(gp.delta)) as i64
        - 2 * gp.phi as i64
        - i64::from(gp.rho);
    usize::try_from(value).expect("distance formula is nonnegative for block graphs")
}

/// A connected block graph together with all derived structure.
#[derive(Debug, Clone)]
pub struct BlockGraph {
    pub graph: Graph,
    pub dist: DistanceMatrix,
    pub blocks: BlockDecomposition,
    pub centers: CenterInfo,
    pub levels: LevelStructure,
}

impl BlockGraph {
    pub fn analyze(graph: Graph) -> Result<Self> {
        let dist = all_pairs_distance(&graph)?;
        let blocks = block_decomposition(&graph)?;
        if !blocks_are_cliques(&graph, &blocks) {
            return Err(Error::NotBlockGraph("a block is not a clique".into()));
        }
        let centers = compute_centers(&dist, &blocks)?;
        let levels = levels_and_branches(&dist, &blocks, &centers)?;
        Ok(BlockGraph {
            graph,
            dist,
            blocks,
            centers,
            levels,
        })
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn diameter(&self) -> usize {
        self.dist.diameter()
    }

    pub fn epsilon(&self) -> u8 {
        self.centers.epsilon
    }

    pub fn level(&self, v: usize) -> usize {
        self.levels.level[v]
    }

    pub fn total_level(&self) -> usize {
        self.levels.total_level
    }

    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.dist.get(u, v)
    }

    pub fn geo_params(&self, u: usize, v: usize) -> GeoParams {
        geo_params(&self.graph, &self.dist, &self.levels, u, v)
            .expect("geodesics are unique in block graphs")
    }

    pub fn require_diameter_two(&self) -> Result<()> {
        match self.diameter() {
            d if d < 2 => Err(Error::DiameterBelowTwo(d)),
            _ => Ok(()),
        }
    }
}
