//! Closed forms for γ_I on the corona families, and explicit Italian
//! dominating functions that attain them.
//!
//! All corona labelings use the [`CoronaMap`](crate::operators::CoronaMap)
//! layout: for `G ⊙ K_1` with `|V(G)| = n`, vertex `i` of G is `i` and its
//! leaf is `n + i`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::labeling::Labeling;
use crate::operators::{corona, corona_k1};

/// A graph together with a labeling claimed to be an IDF of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub graph: Graph,
    pub labeling: Labeling,
}

impl Witness {
    fn from_values(graph: Graph, values: Vec<u8>) -> Self {
        debug_assert_eq!(graph.n(), values.len());
        Witness { graph, labeling: Labeling::new(values).expect("witness values are 0, 1 or 2") }
    }

    pub fn weight(&self) -> u32 {
        self.labeling.weight()
    }

    pub fn is_valid(&self) -> bool {
        crate::labeling::is_idf(&self.graph, &self.labeling).unwrap_or(false)
    }
}

/// A value, or an inclusive range, that a result predicts for γ_I.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prediction {
    Exact(u32),
    Bounds(u32, u32),
}

impl Prediction {
    pub fn admits(&self, value: u32) -> bool {
        match *self {
            Prediction::Exact(v) => v == value,
            Prediction::Bounds(lo, hi) => (lo..=hi).contains(&value),
        }
    }
}

/// A closed form instantiated at concrete parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub theorem: &'static str,
    pub params: Vec<usize>,
    pub prediction: Prediction,
}

fn at_least(what: &str, value: usize, min: usize) -> Result<()> {
    if value >= min {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{what} must be at least {min}, got {value}")))
    }
}

/// γ_I(P_n) = ⌈(n+1)/2⌉.
pub fn formula_path(n: usize) -> Result<u32> {
    at_least("n", n, 1)?;
    Ok((n as u32 + 1).div_ceil(2))
}

/// γ_I(G ⊙ H) = 2 n_G whenever H has at least two vertices.
pub fn formula_corona_general(n_g: usize) -> u32 {
    2 * n_g as u32
}

/// n + 1 <= γ_I(G ⊙ K_1) <= 2n.
pub fn bounds_corona_k1(n: usize) -> Result<(u32, u32)> {
    at_least("n", n, 1)?;
    Ok((n as u32 + 1, 2 * n as u32))
}

/// γ_I(K_{p,q} ⊙ K_1): p+q+1 if either side is a single vertex, else p+q+2.
pub fn formula_bipartite_corona(p: usize, q: usize) -> Result<u32> {
    at_least("p", p, 1)?;
    at_least("q", q, 1)?;
    let s = (p + q) as u32;
    Ok(if p == 1 || q == 1 { s + 1 } else { s + 2 })
}

/// γ_I((G ⊙ K_1) ⊙ K_1) = 3n.
pub fn formula_double_corona(n: usize) -> Result<u32> {
    at_least("n", n, 1)?;
    Ok(3 * n as u32)
}

/// γ_I(P_n ⊙ K_1) = ⌈4n/3⌉.
pub fn formula_corona_k1_path(n: usize) -> Result<u32> {
    at_least("n", n, 1)?;
    Ok((4 * n as u32).div_ceil(3))
}

/// γ_I(C_n ⊙ K_1) = ⌈4n/3⌉.
pub fn formula_corona_k1_cycle(n: usize) -> Result<u32> {
    at_least("n", n, 3)?;
    Ok((4 * n as u32).div_ceil(3))
}

/// The star-plus-isolated-vertices graph `K_{1,m} ∪ (n-m-1) K_1` with
/// `m = 2n - a`, whose corona with K_1 has γ_I exactly `a`.
///
/// Layout: the star centre is 0, its leaves `1..=m`, then the isolated
/// vertices. `m = 0` gives the edgeless graph.
pub fn realize_corona_k1(n: usize, a: u32) -> Result<Graph> {
    at_least("n", n, 1)?;
    let (lo, hi) = bounds_corona_k1(n)?;
    if !(lo..=hi).contains(&a) {
        return Err(Error::NotRealizable { n, a });
    }
    let m = (hi - a) as usize;
    let edges: Vec<_> = (1..=m).map(|leaf| (0, leaf)).collect();
    Graph::from_edge_list(n, &edges)
}

/// The IDF on `realize_corona_k1(n, a) ⊙ K_1` of weight `2(n-m) + m = a`:
/// 2 on the star centre and the isolated vertices, 1 on the leaves hanging
/// off the star's leaves.
pub fn witness_realization(n: usize, a: u32) -> Result<Witness> {
    let g = realize_corona_k1(n, a)?;
    let m = (2 * n as u32 - a) as usize;
    let (graph, map) = corona_k1(&g)?;
    let mut values = vec![0u8; graph.n()];
    values[0] = 2;
    for v in values.iter_mut().take(n).skip(m + 1) {
        *v = 2;
    }
    for i in 1..=m {
        values[map.leaf(i)] = 1;
    }
    Ok(Witness::from_values(graph, values))
}

/// 2 on every vertex of G, 0 on the copies of H.
pub fn witness_corona(g: &Graph, h: &Graph) -> Result<Witness> {
    at_least("|V(H)|", h.n(), 1)?;
    let (graph, _) = corona(g, h)?;
    let mut values = vec![0u8; graph.n()];
    values[..g.n()].fill(2);
    Ok(Witness::from_values(graph, values))
}

/// On `G ⊙ K_1` for a universal vertex `v`: 2 on `v`, 1 on every other leaf.
pub fn witness_universal_corona(g: &Graph, v: VertexId) -> Result<Witness> {
    g.check_vertex(v)?;
    if g.closed_neighbors_mask(v) != g.vertex_mask() {
        return Err(Error::NotUniversal(v));
    }
    let (graph, map) = corona_k1(g)?;
    let mut values = vec![0u8; graph.n()];
    values[v] = 2;
    for i in (0..g.n()).filter(|&i| i != v) {
        values[map.leaf(i)] = 1;
    }
    Ok(Witness::from_values(graph, values))
}

/// On `K_{p,q} ⊙ K_1` (part A = `0..p`, part B = `p..p+q`).
///
/// If one side is a single vertex, that vertex gets 2 and every leaf on the
/// other side gets 1. Otherwise the first vertex of each side gets 2 and the
/// leaves of all remaining vertices get 1.
pub fn witness_bipartite_corona(p: usize, q: usize) -> Result<Witness> {
    let g = Graph::complete_bipartite(p, q)?;
    let (graph, map) = corona_k1(&g)?;
    let mut values = vec![0u8; graph.n()];
    let part_a = 0..p;
    let part_b = p..p + q;
    if p == 1 || q == 1 {
        let (hub, other) = if p == 1 { (0, part_b) } else { (p, part_a) };
        values[hub] = 2;
        for i in other {
            values[map.leaf(i)] = 1;
        }
    } else {
        values[0] = 2;
        values[p] = 2;
        for i in part_a.skip(1).chain(part_b.skip(1)) {
            values[map.leaf(i)] = 1;
        }
    }
    Ok(Witness::from_values(graph, values))
}

/// On `(G ⊙ K_1) ⊙ K_1`: each block `v_i' v_i u_i u_i'` is a P_4; label
/// `u_i`, `u_i'` and `v_i'` with 1.
pub fn witness_double_corona(g: &Graph) -> Result<Witness> {
    at_least("|V(G)|", g.n(), 1)?;
    let n = g.n();
    let (first, inner) = corona_k1(g)?;
    let (graph, outer) = corona_k1(&first)?;
    let mut values = vec![0u8; graph.n()];
    for i in 0..n {
        let u = inner.leaf(i);
        values[u] = 1;
        values[outer.leaf(u)] = 1;
        values[outer.leaf(i)] = 1;
    }
    Ok(Witness::from_values(graph, values))
}

/// Positions (0-based) on `P_n` that receive label 2 in the path-corona construction.
///
/// `n = 3k`: v_2, v_5, ..., v_{3k-1}. `n = 3k+1`: the same plus v_n.
/// `n = 3k+2`: v_2, v_5, ..., v_{3k+2}. (1-based names.)
fn path_corona_twos(n: usize) -> Vec<usize> {
    let mut twos: Vec<usize> = (1..n).step_by(3).collect();
    if n % 3 == 1 {
        twos.push(n - 1);
    }
    twos
}

fn path_corona_labeling(base: Graph, n: usize) -> Result<Witness> {
    let (graph, map) = corona_k1(&base)?;
    let mut values = vec![0u8; graph.n()];
    for j in path_corona_twos(n) {
        values[j] = 2;
    }
    for j in 0..n {
        if values[j] != 2 {
            values[map.leaf(j)] = 1;
        }
    }
    Ok(Witness::from_values(graph, values))
}

/// On `P_n ⊙ K_1`: 2 on the path positions from [`path_corona_twos`], 1 on
/// the leaf of every other path vertex. Weight ⌈4n/3⌉.
pub fn witness_path_corona(n: usize) -> Result<Witness> {
    path_corona_labeling(Graph::path(n)?, n)
}

/// The path-corona labeling placed on `C_n ⊙ K_1`, which contains
/// `P_n ⊙ K_1` as a spanning subgraph.
pub fn witness_cycle_corona(n: usize) -> Result<Witness> {
    path_corona_labeling(Graph::cycle(n)?, n)
}
