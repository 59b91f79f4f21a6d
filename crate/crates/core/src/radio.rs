//! Radio labelings, the lower bound `LB(G)` and labelings induced by orderings.

use serde::{Deserialize, Serialize};

use crate::center::BlockGraph;
use crate::error::{Error, Result};
use crate::graph::DistanceMatrix;

/// Nonnegative integer labels indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadioLabeling {
    pub labels: Vec<u64>,
}

impl RadioLabeling {
    pub fn new(labels: Vec<u64>) -> Self {
        RadioLabeling { labels }
    }

    pub fn span(&self) -> u64 {
        let max = self.labels.iter().copied().max().unwrap_or(0);
        let min = self.labels.iter().copied().min().unwrap_or(0);
        max - min
    }

    /// Shifts labels so the smallest is 0.
    pub fn canonical(mut self) -> Self {
        let min = self.labels.iter().copied().min().unwrap_or(0);
        self.labels.iter_mut().for_each(|l| *l -= min);
        self
    }

    /// Vertices sorted by label, ties broken by id.
    pub fn induced_ordering(&self) -> VertexOrdering {
        let mut order: Vec<usize> = (0..self.labels.len()).collect();
        order.sort_by_key(|&v| (self.labels[v], v));
        VertexOrdering(order)
    }

    /// Labels listed along `ord`.
    pub fn along(&self, ord: &VertexOrdering) -> Vec<u64> {
        ord.iter().map(|v| self.labels[v]).collect()
    }
}

/// A permutation `u_0, ..., u_{p-1}` of the vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexOrdering(Vec<usize>);

impl VertexOrdering {
    /// Checks that `order` is a permutation of `0..p`.
    pub fn new(order: Vec<usize>, p: usize) -> Result<Self> {
        if order.len() != p {
            return Err(Error::InvalidOrdering(format!(
                "{} entries for {p} vertices",
                order.len()
            )));
        }
        let mut seen = vec![false; p];
        for &v in &order {
            if v >= p {
                return Err(Error::InvalidOrdering(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidOrdering(format!("vertex {v} repeated")));
            }
        }
        Ok(VertexOrdering(order))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn reversed(&self) -> Self {
        VertexOrdering(self.0.iter().rev().copied().collect())
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    /// Position of each vertex in the ordering.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

impl std::ops::Index<usize> for VertexOrdering {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Validity {
    Valid,
    /// `|f(u) - f(v)| = gap < required = k + 1 - d(u, v)`.
    Violation {
        u: usize,
        v: usize,
        gap: u64,
        required: u64,
    },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// Checks `|f(u) - f(v)| >= k + 1 - d(u, v)` for every pair; reports the
/// lexicographically first violating pair.
pub fn validate_radio(d: &DistanceMatrix, f: &RadioLabeling, k: usize) -> Result<Validity> {
    if k < 1 {
        return Err(Error::InvalidK);
    }
    let p = d.order();
    if f.labels.len() != p {
        return Err(Error::LabelCount {
            expected: p,
            got: f.labels.len(),
        });
    }
    for u in 0..p {
        for v in u + 1..p {
            let gap = f.labels[u].abs_diff(f.labels[v]);
            let required = (k + 1).saturating_sub(d.get(u, v)) as u64;
            if gap < required {
                return Ok(Validity::Violation {
                    u,
                    v,
                    gap,
                    required,
                });
            }
        }
    }
    Ok(Validity::Valid)
}

/// `(p - 1)(d(G) + eps) - 2 L(G) + eps`.
pub fn lower_bound(bg: &BlockGraph) -> Result<u64> {
    bg.require_diameter_two()?;
    let p = bg.order() as i64;
    let d = bg.diameter() as i64;
    let eps = i64::from(bg.epsilon());
    let lb = (p - 1) * (d + eps) - 2 * bg.total_level() as i64 + eps;
    Ok(u64::try_from(lb).expect("lower bound is nonnegative when d(G) >= 2"))
}

/// `f(u_0) = 0`, `f(u_{i+1}) = f(u_i) + d(G) + eps - L(u_{i+1}) - L(u_i)`.
///
/// The result is not checked for validity.
pub fn labeling_from_ordering(bg: &BlockGraph, ord: &VertexOrdering) -> Result<RadioLabeling> {
    check_ordering(ord, bg.order())?;
    let step = (bg.diameter() + usize::from(bg.epsilon())) as i64;
    let mut labels = vec![0u64; bg.order()];
    let mut cur = 0i64;
    for (i, w) in ord.as_slice().windows(2).enumerate() {
        let inc = step - (bg.level(w[0]) + bg.level(w[1])) as i64;
        if inc < 0 {
            return Err(Error::NegativeIncrement { index: i });
        }
        cur += inc;
        labels[w[1]] = cur as u64;
    }
    Ok(RadioLabeling { labels })
}

/// Tightest labeling increasing along `ord`: each new label is the smallest
/// value above the previous one that satisfies every earlier constraint.
pub fn greedy_min_labeling(d: &DistanceMatrix, ord: &VertexOrdering, k: usize) -> RadioLabeling {
    let mut labels = vec![0u64; d.order()];
    for (i, v) in ord.iter().enumerate().skip(1) {
        let mut f = labels[ord[i - 1]] + 1;
        for u in ord.iter().take(i) {
            let need = (k + 1).saturating_sub(d.get(u, v)) as u64;
            f = f.max(labels[u] + need);
        }
        labels[v] = f;
    }
    RadioLabeling { labels }
}

pub(crate) fn check_ordering(ord: &VertexOrdering, p: usize) -> Result<()> {
    if ord.len() != p {
        return Err(Error::InvalidOrdering(format!(
            "{} entries for {p} vertices",
            ord.len()
        )));
    }
    Ok(())
}
