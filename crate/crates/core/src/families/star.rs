use super::{ordering_from_table, Builder, NamedGraph};
use crate::error::Result;
use crate::radio::VertexOrdering;

/// Id of `w^l_{i,j}` (all indices 1-based).
fn id(m: usize, h: usize, n: usize, l: usize, i: usize, j: usize) -> usize {
    m + ((l - 1) * h + (i - 1)) * (n - 1) + (j - 1)
}

pub(super) fn generate(m: usize, k: usize, h: usize, n: usize) -> NamedGraph {
    let mut b = Builder::default();
    let centers: Vec<usize> = (1..=m).map(|i| b.vertex(format!("w^{i}"))).collect();
    b.clique(&centers);
    for l in 1..=m * k {
        let mut prev = centers[(l - 1) % m];
        for i in 1..=h {
            let mut block = vec![prev];
            for j in 1..n {
                let v = b.vertex(format!("w^{l}_{{{i},{j}}}"));
                debug_assert_eq!(v, id(m, h, n, l, i, j));
                block.push(v);
            }
            b.clique(&block);
            // w_{i,n-1} continues the path
            prev = *block.last().unwrap();
        }
    }
    b.finish()
}

pub(super) fn path_of_cliques(h: usize, n: usize) -> NamedGraph {
    let mut b = Builder::default();
    let mut prev = b.vertex("x_0".into());
    for e in 1..=h {
        let next = b.vertex(format!("x_{e}"));
        let mut block = vec![prev, next];
        for s in 1..=n - 2 {
            block.push(b.vertex(format!("w_{{{e},{s}}}")));
        }
        b.clique(&block);
        prev = next;
    }
    b.finish()
}

/// Position `t` (1-based) of `w^l_{i,j}` in the renaming `w_1, ..., w_{p-m}`.
fn position(m: usize, k: usize, h: usize, n: usize, l: usize, i: usize, j: usize) -> usize {
    let mk = m * k;
    let odd = l % 2 == 1;
    if mk % 2 == 1 {
        if h % 2 == 1 {
            let c = h.div_ceil(2);
            match (i.cmp(&c), odd) {
                (std::cmp::Ordering::Less, true) => {
                    2 * mk * (i - 1) * (n - 1) + 2 * mk * (j - 1) + l
                }
                (std::cmp::Ordering::Equal, _) => 2 * mk * (i - 1) * (n - 1) + mk * (j - 1) + l,
                (std::cmp::Ordering::Greater, true) => {
                    2 * mk * (h - i) * (n - 1) + 2 * mk * (j - 1) + l + mk
                }
                (std::cmp::Ordering::Less, false) => {
                    2 * mk * (i - 1) * (n - 1) + 2 * mk * (j - 1) + l + mk
                }
                (std::cmp::Ordering::Greater, false) => {
                    2 * mk * (h - i) * (n - 1) + 2 * mk * (j - 1) + l
                }
            }
        } else {
            let low = i <= h / 2;
            match (low, odd) {
                (true, true) => 2 * mk * (i - 1) * (n - 1) + 2 * mk * (j - 1) + l,
                (false, true) => 2 * mk * (h - i) * (n - 1) + 2 * mk * (j - 1) + l + mk,
                (true, false) => 2 * mk * (i - 1) * (n - 1) + 2 * mk * (j - 1) + l + mk,
                (false, false) => 2 * mk * (h - i) * (n - 1) + 2 * mk * (j - 1) + l,
            }
        }
    } else {
        // With a single center the first renamed vertex is also u_0, which
        // must sit at level 1, so the parity roles are exchanged.
        let outward = if m == 1 { odd } else { !odd };
        if outward {
            mk * (i - 1) * (n - 1) + mk * (j - 1) + l
        } else {
            mk * (h - i) * (n - 1) + mk * (j - 1) + l
        }
    }
}

pub(super) fn canonical_ordering(m: usize, k: usize, h: usize, n: usize) -> Result<VertexOrdering> {
    let p = m * (k * h * (n - 1) + 1);
    // renamed[t] = vertex w_t, t = 1..=p-m
    let mut renamed = vec![None; p - m + 1];
    for l in 1..=m * k {
        for i in 1..=h {
            for j in 1..n {
                let t = position(m, k, h, n, l, i, j);
                assert!(
                    renamed[t].replace(id(m, h, n, l, i, j)).is_none(),
                    "renaming is not injective at t = {t}"
                );
            }
        }
    }
    assert!(renamed[0].is_none());

    let mut table = vec![None; p];
    if m == 1 {
        table[..p - 1].copy_from_slice(&renamed[1..]);
        table[p - 1] = Some(0);
    } else {
        table[0] = Some(m - 1);
        table[1..=p - m].copy_from_slice(&renamed[1..]);
        for (x, slot) in table[p - m + 1..].iter_mut().enumerate() {
            *slot = Some(x);
        }
    }
    ordering_from_table(table)
}
