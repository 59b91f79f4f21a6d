use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Random connected block graph on `p` vertices: cliques of size
/// `2..=max_clique` are glued one at a time onto uniformly chosen existing
/// vertices. Deterministic per seed.
pub fn random_block_graph(seed: u64, p: usize, max_clique: usize) -> Graph {
    assert!(p >= 1 && max_clique >= 2, "need p >= 1 and max_clique >= 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(1);
    while g.order() < p {
        let at = rng.gen_range(0..g.order());
        let size = rng.gen_range(2..=max_clique).min(p - g.order() + 1);
        let mut block = vec![at];
        for _ in 1..size {
            block.push(g.add_vertex());
        }
        for (a, &u) in block.iter().enumerate() {
            for &v in &block[a + 1..] {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
