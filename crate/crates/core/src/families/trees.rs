//! Tree families. Ids: roots (or the path / spine) first, then the remaining
//! vertices in breadth-first order.

use super::{Builder, NamedGraph};

pub fn path(n: usize) -> NamedGraph {
    let mut b = Builder::default();
    for i in 0..n {
        b.vertex(format!("v_{i}"));
        if i > 0 {
            b.edge(i - 1, i);
        }
    }
    b.finish()
}

pub fn star(leaves: usize) -> NamedGraph {
    let mut b = Builder::default();
    let c = b.vertex("c".into());
    for i in 1..=leaves {
        let l = b.vertex(format!("l_{i}"));
        b.edge(c, l);
    }
    b.finish()
}

/// Level-wise regular tree: every vertex at distance `i < h` from the root set
/// has degree `degrees[i]`.
pub fn level_wise(roots: usize, degrees: &[usize]) -> NamedGraph {
    let mut b = Builder::default();
    let root_names = ["w", "w'"];
    let mut frontier: Vec<usize> = (0..roots).map(|r| b.vertex(root_names[r].into())).collect();
    if roots == 2 {
        b.edge(0, 1);
    }
    for (level, &deg) in degrees.iter().enumerate() {
        let children = if level == 0 { deg + 1 - roots } else { deg - 1 };
        let mut next = Vec::new();
        for &parent in &frontier {
            let base = b.names[parent].clone();
            for c in 0..children {
                let name = if level == 0 {
                    format!("{base}_{{{c}}}")
                } else {
                    format!("{},{c}}}", base.trim_end_matches('}'))
                };
                let v = b.vertex(name);
                b.edge(parent, v);
                next.push(v);
            }
        }
        frontier = next;
    }
    b.finish()
}

/// `F(n, k)`: path `x_1..x_n`; each `x_i` is a leaf of a star with centre
/// `c_i` and `k - 2` further leaves.
pub fn firecracker(n: usize, k: usize) -> NamedGraph {
    let mut b = Builder::default();
    for i in 1..=n {
        let x = b.vertex(format!("x_{i}"));
        if i > 1 {
            b.edge(x - 1, x);
        }
    }
    for i in 1..=n {
        let c = b.vertex(format!("c_{i}"));
        b.edge(i - 1, c);
        for j in 1..=k - 2 {
            let y = b.vertex(format!("y_{{{i},{j}}}"));
            b.edge(c, y);
        }
    }
    b.finish()
}

/// `C(n, k)`: spine `s_1..s_{n-2}` with every spine vertex of degree `k`.
pub fn caterpillar(n: usize, k: usize) -> NamedGraph {
    let mut b = Builder::default();
    let spine = n - 2;
    for i in 1..=spine {
        let s = b.vertex(format!("s_{i}"));
        if i > 1 {
            b.edge(s - 1, s);
        }
    }
    for i in 1..=spine {
        let on_spine = usize::from(i > 1) + usize::from(i < spine);
        for j in 1..=k - on_spine {
            let l = b.vertex(format!("l_{{{i},{j}}}"));
            b.edge(i - 1, l);
        }
    }
    b.finish()
}
