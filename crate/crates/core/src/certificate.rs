//! Ordering certificates for `rn(G) = LB(G)`.
//!
//! Three characterizations are checked on a single ordering:
//! conditions (a), (b), (c); condition (a) with the pairwise distance
//! inequality; and (a), (b) with the level caps (a*) and (b*). The
//! sufficient conditions (i), (ii), (iii) are evaluated only when (a) and (b)
//! hold.

use serde::Serialize;

use crate::center::{BlockGraph, PairRelation};
use crate::error::{Error, Result};
use crate::radio::{
    check_ordering, labeling_from_ordering, lower_bound, validate_radio, RadioLabeling, Validity,
    VertexOrdering,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Condition {
    fn pass() -> Self {
        Condition {
            ok: true,
            detail: None,
        }
    }

    fn fail(detail: String) -> Self {
        Condition {
            ok: false,
            detail: Some(detail),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundConditions {
    pub cond_a: Condition,
    pub cond_b: Condition,
    pub cond_c: Condition,
}

impl BoundConditions {
    pub fn holds(&self) -> bool {
        self.cond_a.ok && self.cond_b.ok && self.cond_c.ok
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairGaps {
    pub ok: bool,
    /// First violating position pair `(i, j)`, `i < j`, in lexicographic order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LevelCaps {
    pub a_star: bool,
    pub b_star: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Sufficient {
    pub suf_i: bool,
    pub suf_ii: bool,
    pub suf_iii: bool,
}

impl Sufficient {
    pub fn any(&self) -> bool {
        self.suf_i || self.suf_ii || self.suf_iii
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    NotCertified { reason: String },
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub lb: u64,
    /// Span of the labeling built by condition (c), when every increment is
    /// nonnegative.
    pub span: Option<u64>,
    #[serde(flatten)]
    pub conditions: BoundConditions,
    pub pair_gaps: PairGaps,
    #[serde(flatten)]
    pub level_caps: LevelCaps,
    /// `None` when (a) or (b) fails.
    pub sufficient: Option<Sufficient>,
    pub verdict: Verdict,
    #[serde(skip)]
    pub labeling: Option<RadioLabeling>,
}

impl CertificateReport {
    /// (a) and (b) together with (a*) and (b*).
    pub fn level_caps_route(&self) -> bool {
        self.conditions.cond_a.ok
            && self.conditions.cond_b.ok
            && self.level_caps.a_star
            && self.level_caps.b_star
    }

    /// (a) together with the pairwise distance inequality.
    pub fn pair_gap_route(&self) -> bool {
        self.conditions.cond_a.ok && self.pair_gaps.ok
    }
}

fn step(bg: &BlockGraph) -> i64 {
    (bg.diameter() + usize::from(bg.epsilon())) as i64
}

/// `P[t] = L(u_0) + ... + L(u_{t-1})`.
fn level_prefix(bg: &BlockGraph, ord: &VertexOrdering) -> Vec<i64> {
    let mut prefix = Vec::with_capacity(ord.len() + 1);
    prefix.push(0);
    for v in ord.iter() {
        prefix.push(prefix.last().unwrap() + bg.level(v) as i64);
    }
    prefix
}

pub fn check_cond_a(bg: &BlockGraph, ord: &VertexOrdering) -> Condition {
    let ends = bg.level(ord[0]) + bg.level(ord[ord.len() - 1]);
    if ends == usize::from(bg.epsilon()) {
        Condition::pass()
    } else {
        Condition::fail(format!(
            "L(u_0) + L(u_{{p-1}}) = {ends}, eps = {}",
            bg.epsilon()
        ))
    }
}

/// Consecutive vertices lie in different branches (`eps = 1`) or opposite
/// branches (`eps = 0`): `phi = rho = 0` and `delta = 1 - eps`.
pub fn check_cond_b(bg: &BlockGraph, ord: &VertexOrdering) -> Condition {
    let want_delta = 1 - bg.epsilon();
    for (i, w) in ord.as_slice().windows(2).enumerate() {
        let gp = bg.geo_params(w[0], w[1]);
        if gp.phi != 0 || gp.rho != 0 || gp.delta != want_delta {
            return Condition::fail(format!(
                "positions {i},{}: phi={} delta={} rho={}",
                i + 1,
                gp.phi,
                gp.delta,
                gp.rho
            ));
        }
    }
    Condition::pass()
}

fn check_cond_c(bg: &BlockGraph, ord: &VertexOrdering) -> (Condition, Option<RadioLabeling>) {
    match labeling_from_ordering(bg, ord) {
        Err(Error::NegativeIncrement { index }) => (
            Condition::fail(format!("negative increment at position {index}")),
            None,
        ),
        Err(e) => (Condition::fail(e.to_string()), None),
        Ok(f) => match validate_radio(&bg.dist, &f, bg.diameter()).expect("d(G) >= 1") {
            Validity::Valid => (Condition::pass(), Some(f)),
            Validity::Violation {
                u,
                v,
                gap,
                required,
            } => (
                Condition::fail(format!("vertices {u},{v}: label gap {gap} < {required}")),
                Some(f),
            ),
        },
    }
}

pub fn check_bound_conditions(bg: &BlockGraph, ord: &VertexOrdering) -> Result<BoundConditions> {
    bg.require_diameter_two()?;
    check_ordering(ord, bg.order())?;
    Ok(BoundConditions {
        cond_a: check_cond_a(bg, ord),
        cond_b: check_cond_b(bg, ord),
        cond_c: check_cond_c(bg, ord).0,
    })
}

/// `d(u_i, u_j) >= sum_{t=i}^{j-1} (L(u_t) + L(u_{t+1})) - (j - i)(d + eps) + d + 1`
/// for all `i < j`.
pub fn check_pair_gaps(bg: &BlockGraph, ord: &VertexOrdering) -> Result<PairGaps> {
    check_ordering(ord, bg.order())?;
    let prefix = level_prefix(bg, ord);
    let u = ord.as_slice();
    let d = bg.diameter() as i64;
    let step = step(bg);
    for i in 0..u.len() {
        let li = bg.level(u[i]) as i64;
        for j in i + 1..u.len() {
            let lj = bg.level(u[j]) as i64;
            let sum = 2 * (prefix[j + 1] - prefix[i]) - li - lj;
            let rhs = sum - (j - i) as i64 * step + d + 1;
            if (bg.distance(u[i], u[j]) as i64) < rhs {
                return Ok(PairGaps {
                    ok: false,
                    violation: Some((i, j)),
                });
            }
        }
    }
    Ok(PairGaps {
        ok: true,
        violation: None,
    })
}

/// (a*): `2 L(u) <= d + eps` for every vertex.
/// (b*): for same-branch `u_i, u_j` with `i < j`,
/// `2 phi <= (j - i - 1)(d + eps) - 2 sum_{i<t<j} L(u_t) - (1 - eps)`.
pub fn check_level_caps(bg: &BlockGraph, ord: &VertexOrdering) -> Result<LevelCaps> {
    check_ordering(ord, bg.order())?;
    let step = step(bg);
    let a_star = ord.iter().all(|v| 2 * bg.level(v) as i64 <= step);
    let prefix = level_prefix(bg, ord);
    let u = ord.as_slice();
    let eps = i64::from(bg.epsilon());
    let ls = &bg.levels;
    let mut b_star = true;
    'outer: for i in 0..u.len() {
        for j in i + 1..u.len() {
            if ls.relation(u[i], u[j]) != PairRelation::SameBranch {
                continue;
            }
            let interior = prefix[j] - prefix[i + 1];
            let rhs = (j - i - 1) as i64 * step - 2 * interior - (1 - eps);
            if 2 * ls.phi(u[i], u[j]) as i64 > rhs {
                b_star = false;
                break 'outer;
            }
        }
    }
    Ok(LevelCaps { a_star, b_star })
}

/// Sufficient conditions (i), (ii), (iii). They presuppose (a) and (b).
pub fn check_sufficient(bg: &BlockGraph, ord: &VertexOrdering) -> Result<Sufficient> {
    bg.require_diameter_two()?;
    check_ordering(ord, bg.order())?;
    let a = check_cond_a(bg, ord);
    let b = check_cond_b(bg, ord);
    if !(a.ok && b.ok) {
        let failed = [("(a)", &a), ("(b)", &b)]
            .iter()
            .filter(|(_, c)| !c.ok)
            .map(|(n, _)| *n)
            .collect::<Vec<_>>()
            .join(", ");
        return Err(Error::SufficiencyHypotheses(format!(
            "{failed} not satisfied"
        )));
    }
    Ok(sufficient_flags(bg, ord))
}

fn sufficient_flags(bg: &BlockGraph, ord: &VertexOrdering) -> Sufficient {
    let u = ord.as_slice();
    let d = bg.diameter() as i64;
    let eps = i64::from(bg.epsilon());
    let dist = |i: usize, j: usize| bg.distance(u[i], u[j]) as i64;

    let suf_i = (0..u.len().saturating_sub(2))
        .all(|i| 2 * dist(i, i + 1).min(dist(i + 1, i + 2)) <= d + 1 - eps);
    let suf_ii = (0..u.len() - 1).all(|i| 2 * dist(i, i + 1) <= d + 1 + eps);

    let ls = &bg.levels;
    let capped = u.iter().all(|&v| 2 * bg.level(v) as i64 <= d + eps);
    let spread = (0..u.len()).all(|i| {
        (i + 1..u.len())
            .all(|j| ls.relation(u[i], u[j]) != PairRelation::SameBranch || j - i >= bg.diameter())
    });
    Sufficient {
        suf_i,
        suf_ii,
        suf_iii: capped && spread,
    }
}

/// Runs every characterization on `ord`. The verdict is (a)(b)(c); the
/// distance-inequality route must agree with it.
pub fn certify(bg: &BlockGraph, ord: &VertexOrdering) -> Result<CertificateReport> {
    let lb = lower_bound(bg)?;
    check_ordering(ord, bg.order())?;
    let cond_a = check_cond_a(bg, ord);
    let cond_b = check_cond_b(bg, ord);
    let (cond_c, labeling) = check_cond_c(bg, ord);
    let conditions = BoundConditions {
        cond_a,
        cond_b,
        cond_c,
    };
    let pair_gaps = check_pair_gaps(bg, ord)?;
    let level_caps = check_level_caps(bg, ord)?;
    let sufficient =
        (conditions.cond_a.ok && conditions.cond_b.ok).then(|| sufficient_flags(bg, ord));

    let verdict = if conditions.holds() {
        Verdict::Certified
    } else {
        let (name, c) = [
            ("(a)", &conditions.cond_a),
            ("(b)", &conditions.cond_b),
            ("(c)", &conditions.cond_c),
        ]
        .into_iter()
        .find(|(_, c)| !c.ok)
        .unwrap();
        Verdict::NotCertified {
            reason: format!("{name} fails: {}", c.detail.as_deref().unwrap_or("")),
        }
    };
    let report = CertificateReport {
        lb,
        span: labeling.as_ref().map(RadioLabeling::span),
        conditions,
        pair_gaps,
        level_caps,
        sufficient,
        verdict,
        labeling,
    };
    assert_eq!(
        report.verdict.is_certified(),
        report.pair_gap_route(),
        "conditions (a)(b)(c) and the pairwise inequality disagree"
    );
    if report.verdict.is_certified() {
        assert_eq!(report.span, Some(lb), "certified ordering must attain LB");
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{fixtures::*, Graph};

    fn ord(v: &[usize]) -> VertexOrdering {
        VertexOrdering::new(v.to_vec(), v.len()).unwrap()
    }

    #[test]
    fn p4_certified_ordering() {
        let bg = BlockGraph::analyze(path(4)).unwrap();
        let o = ord(&[1, 3, 0, 2]);
        let r = certify(&bg, &o).unwrap();
        assert!(r.conditions.holds());
        assert!(r.pair_gaps.ok);
        assert_eq!(
            r.level_caps,
            LevelCaps {
                a_star: true,
                b_star: true
            }
        );
        assert_eq!(r.verdict, Verdict::Certified);
        assert_eq!(r.span, Some(5));
        assert!(check_sufficient(&bg, &o).unwrap().suf_i);
    }

    #[test]
    fn p4_ends_first_fails_a() {
        let bg = BlockGraph::analyze(path(4)).unwrap();
        // (y, w, w', x): both ends have level 1
        let r = certify(&bg, &ord(&[3, 1, 2, 0])).unwrap();
        assert!(!r.conditions.cond_a.ok);
        assert!(!r.verdict.is_certified());
        assert!(matches!(
            check_sufficient(&bg, &ord(&[3, 1, 2, 0])),
            Err(Error::SufficiencyHypotheses(_))
        ));
    }

    #[test]
    fn star_orderings() {
        let bg = BlockGraph::analyze(star(3)).unwrap();
        let o = ord(&[1, 2, 3, 0]);
        let r = certify(&bg, &o).unwrap();
        assert!(r.conditions.cond_a.ok);
        assert!(r.verdict.is_certified());
        assert!(check_sufficient(&bg, &o).unwrap().suf_ii);
    }

    #[test]
    fn p5_has_no_certificate() {
        let bg = BlockGraph::analyze(path(5)).unwrap();
        let mut perm: Vec<usize> = (0..5).collect();
        let mut any = false;
        permute(&mut perm, 0, &mut |o| {
            let r = certify(&bg, &ord(o)).unwrap();
            any |= r.verdict.is_certified();
            assert_eq!(r.pair_gap_route(), r.verdict.is_certified());
        });
        assert!(!any);
    }

    #[test]
    fn adjacent_same_branch_breaks_b_star() {
        // P_5 centred at 2: vertices 0 and 1 share a branch, phi(0, 1) = 1
        let bg = BlockGraph::analyze(path(5)).unwrap();
        let m = check_level_caps(&bg, &ord(&[2, 0, 1, 3, 4])).unwrap();
        assert!(!m.b_star);
        let m = check_level_caps(&bg, &ord(&[0, 3, 1, 4, 2])).unwrap();
        assert!(m.a_star && m.b_star);
    }

    #[test]
    fn level_caps_accept_an_ordering_above_the_bound() {
        // triangle 0-2-3 with the path 0-1-4 hanging off 0
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 3)]).unwrap();
        let bg = BlockGraph::analyze(g).unwrap();
        let r = certify(&bg, &ord(&[1, 3, 4, 2, 0])).unwrap();
        assert!(r.level_caps_route());
        assert!(!r.verdict.is_certified() && !r.pair_gap_route());
        // the span-LB labeling built from this ordering is not radio
        let f = r.labeling.as_ref().unwrap();
        assert_eq!(r.span, Some(r.lb));
        assert!(!crate::radio::validate_radio(&bg.dist, f, bg.diameter())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn rejects_small_diameter() {
        let bg = BlockGraph::analyze(complete(3)).unwrap();
        assert_eq!(
            certify(&bg, &ord(&[0, 1, 2])),
            Err(Error::DiameterBelowTwo(1))
        );
        let bg = BlockGraph::analyze(Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()).unwrap();
        assert!(matches!(
            certify(&bg, &ord(&[0, 1])),
            Err(Error::InvalidOrdering(_))
        ));
    }

    pub(crate) fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }
}
