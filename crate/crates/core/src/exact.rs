//! Exact radio number by depth-first search over vertex orderings.
//!
//! Every radio labeling with `k >= d(G)` is injective, so it induces an
//! ordering, and the greedy labeling along that ordering is pointwise no
//! larger. Minimising the greedy span over all orderings therefore gives the
//! exact radio number. The search extends partial orderings one vertex at a
//! time in ascending id order and abandons a branch once its partial span plus
//! an admissible estimate of the remaining increments reaches the best span
//! found so far; the witness is the lexicographically smallest optimal
//! ordering.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::DistanceMatrix;
use crate::radio::{greedy_min_labeling, RadioLabeling, VertexOrdering};

pub const DEFAULT_MAX_P: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactSolution {
    pub rn: u64,
    pub witness: RadioLabeling,
    pub ordering: VertexOrdering,
}

/// Computes `rn_k(G)` for `k >= d(G)` (default `k = d(G)`).
pub fn exact_radio_number(
    d: &DistanceMatrix,
    max_p: usize,
    k: Option<usize>,
) -> Result<ExactSolution> {
    let p = d.order();
    if p > max_p {
        return Err(Error::TooLarge { p, max_p });
    }
    if p > 63 {
        return Err(Error::TooLarge { p, max_p: 63 });
    }
    let k = k.unwrap_or(d.diameter());
    if k < 1 {
        return Err(Error::InvalidK);
    }
    if k < d.diameter() {
        return Err(Error::InvalidParameters(format!(
            "exact solver needs k >= d(G) = {}, got {k}",
            d.diameter()
        )));
    }
    if p <= 1 {
        let ordering = VertexOrdering::new((0..p).collect(), p)?;
        return Ok(ExactSolution {
            rn: 0,
            witness: RadioLabeling::new(vec![0; p]),
            ordering,
        });
    }

    let identity = VertexOrdering::new((0..p).collect(), p)?;
    let upper = greedy_min_labeling(d, &identity, k).span();

    let best = (0..p)
        .into_par_iter()
        .filter_map(|first| {
            let mut search = Search::new(d, k, upper + 1);
            search.run_from(first);
            search.best_order.map(|o| (search.best, o))
        })
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1[0].cmp(&b.1[0])))
        .expect("the identity ordering bounds every subtree");

    let ordering = VertexOrdering::new(best.1, p)?;
    let witness = greedy_min_labeling(d, &ordering, k);
    debug_assert_eq!(witness.span(), best.0);
    Ok(ExactSolution {
        rn: best.0,
        witness,
        ordering,
    })
}

struct Search<'a> {
    d: &'a DistanceMatrix,
    k: usize,
    p: usize,
    best: u64,
    best_order: Option<Vec<usize>>,
    order: Vec<usize>,
    labels: Vec<u64>,
    used: u64,
}

impl<'a> Search<'a> {
    fn new(d: &'a DistanceMatrix, k: usize, bound: u64) -> Self {
        let p = d.order();
        Search {
            d,
            k,
            p,
            best: bound,
            best_order: None,
            order: Vec::with_capacity(p),
            labels: Vec::with_capacity(p),
            used: 0,
        }
    }

    fn need(&self, u: usize, v: usize) -> u64 {
        (self.k + 1).saturating_sub(self.d.get(u, v)).max(1) as u64
    }

    fn run_from(&mut self, first: usize) {
        self.order.push(first);
        self.labels.push(0);
        self.used = 1 << first;
        self.dfs();
    }

    /// Every unplaced vertex still needs an increment of at least the
    /// cheapest step into it from any vertex that could precede it.
    fn remaining_estimate(&self) -> u64 {
        let last = *self.order.last().unwrap();
        let mut total = 0;
        for r in (0..self.p).filter(|&r| self.used & (1 << r) == 0) {
            let cheapest = (0..self.p)
                .filter(|&a| a != r && (a == last || self.used & (1 << a) == 0))
                .map(|a| self.need(a, r))
                .min()
                .unwrap_or(1);
            total += cheapest;
        }
        total
    }

    fn dfs(&mut self) {
        let current = *self.labels.last().unwrap();
        if self.order.len() == self.p {
            if current < self.best {
                self.best = current;
                self.best_order = Some(self.order.clone());
            }
            return;
        }
        if current + self.remaining_estimate() >= self.best {
            return;
        }
        for v in 0..self.p {
            if self.used & (1 << v) != 0 {
                continue;
            }
            let mut f = current + 1;
            for (&u, &fu) in self.order.iter().zip(&self.labels) {
                f = f.max(fu + self.need(u, v));
            }
            if f + (self.p - self.order.len() - 1) as u64 >= self.best {
                continue;
            }
            self.order.push(v);
            self.labels.push(f);
            self.used |= 1 << v;
            self.dfs();
            self.used &= !(1 << v);
            self.labels.pop();
            self.order.pop();
        }
    }
}
