//! Corona product and twin addition.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, MAX_VERTICES};

/// Index bookkeeping for `G ⊙ H`.
///
/// Vertex `i` of G keeps index `i`; vertex `j` of the `i`-th copy of H sits
/// at `n_g + i * n_h + j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoronaMap {
    pub n_g: usize,
    pub n_h: usize,
}

impl CoronaMap {
    #[inline]
    pub fn g_vertex(&self, i: usize) -> VertexId {
        debug_assert!(i < self.n_g);
        i
    }

    #[inline]
    pub fn copy_vertex(&self, i: usize, j: usize) -> VertexId {
        debug_assert!(i < self.n_g && j < self.n_h);
        self.n_g + i * self.n_h + j
    }

    /// For `H = K_1`: the leaf hanging off G-vertex `i`.
    #[inline]
    pub fn leaf(&self, i: usize) -> VertexId {
        self.copy_vertex(i, 0)
    }

    pub fn total(&self) -> usize {
        self.n_g * (1 + self.n_h)
    }

    /// Inverse of the layout: `None` for a G-vertex, `Some((i, j))` for a copy vertex.
    pub fn locate(&self, v: VertexId) -> Option<(usize, usize)> {
        if v < self.n_g {
            None
        } else {
            let k = v - self.n_g;
            Some((k / self.n_h, k % self.n_h))
        }
    }
}

/// `G ⊙ H`. With `n_H = 0` the result is G itself.
pub fn corona(g: &Graph, h: &Graph) -> Result<(Graph, CoronaMap)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let map = CoronaMap { n_g: g.n(), n_h: h.n() };
    let total = map.total();
    if total > MAX_VERTICES {
        return Err(Error::TooLarge { n: total });
    }

    let mut adj = Vec::with_capacity(total);
    let copy_block = |i: usize| ((1u64 << map.n_h) - 1) << map.copy_vertex(i, 0);
    for i in 0..map.n_g {
        let mut mask = g.neighbors_mask(i);
        if map.n_h > 0 {
            mask |= copy_block(i);
        }
        adj.push(mask);
    }
    for i in 0..map.n_g {
        let base = map.n_g + i * map.n_h;
        for j in 0..map.n_h {
            adj.push(h.neighbors_mask(j) << base | 1 << i);
        }
    }
    let graph = Graph::from_adjacency_masks(adj).expect("corona construction keeps the adjacency invariants");
    Ok((graph, map))
}

/// `G ⊙ K_1`, the case almost every result here is about.
pub fn corona_k1(g: &Graph) -> Result<(Graph, CoronaMap)> {
    corona(g, &Graph::complete(1)?)
}

/// Appends vertex `n` with neighbourhood `N[u]`.
pub fn add_true_twin(g: &Graph, u: VertexId) -> Result<Graph> {
    g.check_vertex(u)?;
    g.with_new_vertex(g.closed_neighbors_mask(u))
}

/// Appends vertex `n` with neighbourhood `N(u)`.
pub fn add_false_twin(g: &Graph, u: VertexId) -> Result<Graph> {
    g.check_vertex(u)?;
    g.with_new_vertex(g.neighbors_mask(u))
}
