use super::{ordering_from_table, Builder, NamedGraph};
use crate::error::Result;
use crate::radio::VertexOrdering;

pub(super) struct LevelWise {
    pub named: NamedGraph,
    m: usize,
    /// `K_i = k_i m_i`.
    fanout: Vec<usize>,
    /// Center index `t` and sub-index `(i_1, ..., i_l)` per vertex.
    index: Vec<(usize, Vec<usize>)>,
}

pub(super) fn generate(m: usize, pairs: &[(usize, usize)]) -> LevelWise {
    let mut b = Builder::default();
    let mut index = Vec::new();
    let centers: Vec<usize> = (0..m)
        .map(|t| {
            index.push((t, Vec::new()));
            b.vertex(format!("w^{t}"))
        })
        .collect();
    b.clique(&centers);

    let mut frontier = centers;
    for &(k, mi) in pairs {
        let mut next = Vec::with_capacity(frontier.len() * k * mi);
        for &parent in &frontier {
            let (t, ref sub) = index[parent].clone();
            let children: Vec<usize> = (0..k * mi)
                .map(|c| {
                    let mut s = sub.clone();
                    s.push(c);
                    let name = format!(
                        "w^{t}_{{{}}}",
                        s.iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(",")
                    );
                    index.push((t, s));
                    b.vertex(name)
                })
                .collect();
            // children c and c + k share a block
            for block in 0..k {
                let mut members = vec![parent];
                members.extend(children.iter().skip(block).step_by(k));
                b.clique(&members);
            }
            next.extend(children);
        }
        frontier = next;
    }
    LevelWise {
        named: b.finish(),
        m,
        fanout: pairs.iter().map(|&(k, mi)| k * mi).collect(),
        index,
    }
}

/// `u_0 = w^{m-1}`; `w^t_{i_1..i_l}` goes to
/// `j = m (i_1 + i_2 K_1 + ... + i_l K_1...K_{l-1} + sum_{s>l} K_1...K_s) + t + 1`;
/// the remaining centers `w^0..w^{m-2}` fill the last `m - 1` positions.
pub(super) fn canonical_ordering(lw: &LevelWise) -> Result<VertexOrdering> {
    let p = lw.named.graph.order();
    let m = lw.m;
    let r = lw.fanout.len();
    let prefix_prod: Vec<usize> = std::iter::once(1)
        .chain(lw.fanout.iter().scan(1, |acc, &k| {
            *acc *= k;
            Some(*acc)
        }))
        .collect();

    let mut table = vec![None; p];
    for (v, (t, sub)) in lw.index.iter().enumerate() {
        let l = sub.len();
        let j = if l == 0 {
            if *t == m - 1 {
                0
            } else {
                p - m + 1 + t
            }
        } else {
            let mixed: usize = sub
                .iter()
                .enumerate()
                .map(|(s, &i)| i * prefix_prod[s])
                .sum();
            let deeper: usize = prefix_prod[l + 1..=r].iter().sum();
            m * (mixed + deeper) + t + 1
        };
        assert!(table[j].replace(v).is_none(), "position {j} assigned twice");
    }
    ordering_from_table(table)
}
