//! Graph sources for the checks: exhaustive labeled enumeration and seeded
//! Erdős–Rényi sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Edge densities a random instance draws from, uniformly.
pub const DENSITIES: [f64; 3] = [0.2, 0.5, 0.8];

/// Every labeled graph on `n` vertices (`2^(n(n-1)/2)` of them), in order of
/// the bit pattern over pairs `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "exhaustive enumeration is only meant for tiny graphs");
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |pattern| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| pattern >> k & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edge_list(n, &edges).expect("pairs are in range")
    })
}

/// Deterministic random source for one check.
pub fn rng_for(seed: u64, salt: &str) -> ChaCha8Rng {
    // FNV-1a keeps streams for different checks apart under the same seed.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in salt.bytes() {
        h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

/// `G(n, p)` with `p` drawn from [`DENSITIES`].
pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let p = DENSITIES[rng.random_range(0..DENSITIES.len())];
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("pairs are in range")
}
