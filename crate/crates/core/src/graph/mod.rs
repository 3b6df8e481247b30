//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Vertices are the dense range `0..n`. Each vertex stores its open
//! neighbourhood as a 64-bit mask, so neighbourhood unions, intersections and
//! degree counts are single word operations.

mod edgelist;
mod graph6;

use std::fmt;

use crate::error::{Error, Result};

pub use edgelist::{encode_edge_list, parse_edge_list};
pub use graph6::{encode_graph6, parse_graph6};

/// Largest supported vertex count (one bit per vertex in a `u64`).
pub const MAX_VERTICES: usize = 64;

pub type VertexId = usize;

/// Bit mask with the low `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the set bits of a mask, lowest first.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges())
    }
}

/// How two distinct vertices relate as twins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinRelation {
    /// `N[u] = N[v]`; the vertices are adjacent.
    True,
    /// `N(u) = N(v)`; the vertices are non-adjacent.
    False,
    NotTwins,
}

/// The standard families used throughout the crate.
///
/// Vertex numbering: paths and cycles run in order `0, 1, ..., n-1`;
/// `CompleteBipartite(p, q)` puts part A at `0..p` and part B at `p..p+q`;
/// `Star(m)` is `K_{1,m}` with the centre at 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
}

impl Graph {
    /// The graph on `n` vertices with no edges. `n = 0` is allowed here.
    pub fn with_vertices(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edge_list(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Graph::with_vertices(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbourhood masks, checking the invariants.
    pub fn from_adjacency_masks(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n });
        }
        let valid = low_mask(n);
        for (v, &mask) in adj.iter().enumerate() {
            if mask & !valid != 0 {
                return Err(Error::VertexOutOfRange { vertex: 63 - (mask & !valid).leading_zeros() as usize, n });
            }
            if mask >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in bits(mask) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::InvalidParameter(format!("adjacency is not symmetric at ({v}, {u})")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn insert_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn generate(family: Family) -> Result<Self> {
        let too_small = |what: &str| Err(Error::InvalidParameter(what.to_string()));
        match family {
            Family::Path(n) => {
                if n < 1 {
                    return too_small("path needs n >= 1");
                }
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_edge_list(n, &edges)
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return too_small("cycle needs n >= 3");
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edge_list(n, &edges)
            }
            Family::Complete(n) => {
                if n < 1 {
                    return too_small("complete graph needs n >= 1");
                }
                let mut g = Graph::with_vertices(n)?;
                for v in 0..n {
                    g.adj[v] = low_mask(n) & !(1 << v);
                }
                Ok(g)
            }
            Family::Empty(n) => {
                if n < 1 {
                    return too_small("empty graph needs n >= 1");
                }
                Graph::with_vertices(n)
            }
            Family::CompleteBipartite(p, q) => {
                if p < 1 || q < 1 {
                    return too_small("complete bipartite graph needs p, q >= 1");
                }
                let mut edges = Vec::with_capacity(p * q);
                for a in 0..p {
                    for b in p..p + q {
                        edges.push((a, b));
                    }
                }
                Graph::from_edge_list(p + q, &edges)
            }
            Family::Star(m) => {
                if m < 1 {
                    return too_small("star needs m >= 1");
                }
                let edges: Vec<_> = (1..=m).map(|leaf| (0, leaf)).collect();
                Graph::from_edge_list(m + 1, &edges)
            }
        }
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::generate(Family::Path(n))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Graph::generate(Family::Cycle(n))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::generate(Family::Complete(n))
    }

    pub fn empty(n: usize) -> Result<Self> {
        Graph::generate(Family::Empty(n))
    }

    pub fn complete_bipartite(p: usize, q: usize) -> Result<Self> {
        Graph::generate(Family::CompleteBipartite(p, q))
    }

    pub fn star(m: usize) -> Result<Self> {
        Graph::generate(Family::Star(m))
    }

    /// `G ∪ H`: G keeps `0..n_G`, H is shifted up by `n_G`, no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&m| m << self.n));
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Open neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors_mask(&self, v: VertexId) -> u64 {
        self.adj[v]
    }

    /// Closed neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn closed_neighbors_mask(&self, v: VertexId) -> u64 {
        self.adj[v] | 1 << v
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn adjacency_masks(&self) -> &[u64] {
        &self.adj
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn pendant_vertices(&self) -> Vec<VertexId> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices adjacent to every other vertex. On `K_1` the lone vertex counts.
    pub fn universal_vertices(&self) -> Vec<VertexId> {
        let all = self.vertex_mask();
        (0..self.n).filter(|&v| self.closed_neighbors_mask(v) == all).collect()
    }

    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn twin_relation(&self, u: VertexId, v: VertexId) -> Result<TwinRelation> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(if self.closed_neighbors_mask(u) == self.closed_neighbors_mask(v) {
            TwinRelation::True
        } else if self.adj[u] == self.adj[v] {
            TwinRelation::False
        } else {
            TwinRelation::NotTwins
        })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        self.component_masks().into_iter().map(|m| bits(m).collect()).collect()
    }

    pub(crate) fn component_masks(&self) -> Vec<u64> {
        let mut unseen = self.vertex_mask();
        let mut out = Vec::new();
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            unseen &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_masks().len() == 1
    }

    /// Subgraph induced by the vertices in `mask`, renumbered in increasing order.
    pub fn induced_subgraph(&self, mask: u64) -> (Graph, Vec<VertexId>) {
        let keep: Vec<VertexId> = bits(mask & self.vertex_mask()).collect();
        let mut local = [0usize; MAX_VERTICES];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let adj = keep.iter().map(|&v| bits(self.adj[v] & mask).fold(0u64, |acc, u| acc | 1 << local[u])).collect();
        (Graph { n: keep.len(), adj }, keep)
    }

    /// Appends one new vertex (index `n`) whose neighbourhood is `mask`.
    pub(crate) fn with_new_vertex(&self, mask: u64) -> Result<Graph> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n });
        }
        let new = self.n;
        let mut adj = self.adj.clone();
        for v in bits(mask) {
            adj[v] |= 1 << new;
        }
        adj.push(mask);
        Ok(Graph { n, adj })
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6(self)
    }

    /// Parses either format, picking by the first non-blank byte: a digit or
    /// `#` starts an edge list, anything else is read as graph6.
    pub fn parse_auto(text: &str) -> Result<Graph> {
        let trimmed = text.trim_start();
        match trimmed.bytes().next() {
            Some(b'0'..=b'9' | b'#') => parse_edge_list(trimmed),
            _ => parse_graph6(trimmed.trim_end()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edge_list_basics() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(p3.degree(1), 2);

        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));

        let g = Graph::from_edge_list(4, &[(0, 1), (0, 1), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn from_edge_list_errors() {
        assert_eq!(Graph::from_edge_list(3, &[(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(Graph::with_vertices(65), Err(Error::TooLarge { n: 65 })));
    }

    #[test]
    fn generators() {
        assert_eq!(Graph::path(2).unwrap(), Graph::complete(2).unwrap());
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        assert_eq!((k23.n(), k23.edge_count()), (5, 6));
        assert!(k23.has_edge(0, 2) && k23.has_edge(1, 4) && !k23.has_edge(0, 1) && !k23.has_edge(2, 3));
        assert_eq!(Graph::empty(4).unwrap().edge_count(), 0);
        assert_eq!(Graph::cycle(5).unwrap().edge_count(), 5);
        assert!(Graph::cycle(5).unwrap().has_edge(4, 0));
        assert_eq!(Graph::star(3).unwrap().degree(0), 3);
        assert_eq!(Graph::complete(64).unwrap().edge_count(), 64 * 63 / 2);
    }

    #[test]
    fn generator_minimums() {
        assert!(Graph::path(0).is_err());
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::complete(0).is_err());
        assert!(Graph::empty(0).is_err());
        assert!(Graph::complete_bipartite(0, 3).is_err());
        assert!(Graph::star(0).is_err());
        assert!(Graph::path(65).is_err());
    }

    #[test]
    fn disjoint_union_layout() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.disjoint_union(&k1).unwrap(), Graph::empty(2).unwrap());
        let g = Graph::star(2).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!((g.n(), g.edges()), (4, vec![(0, 1), (0, 2)]));
        let h = Graph::path(3).unwrap().disjoint_union(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 2), (3, 4), (4, 5)]);
    }

    #[test]
    fn pendant_and_universal() {
        assert_eq!(Graph::path(3).unwrap().pendant_vertices(), vec![0, 2]);
        assert!(Graph::cycle(4).unwrap().pendant_vertices().is_empty());
        assert_eq!(Graph::star(3).unwrap().pendant_vertices(), vec![1, 2, 3]);

        assert_eq!(Graph::star(3).unwrap().universal_vertices(), vec![0]);
        assert!(Graph::path(4).unwrap().universal_vertices().is_empty());
        assert_eq!(Graph::complete(3).unwrap().universal_vertices(), vec![0, 1, 2]);
        assert_eq!(Graph::complete(1).unwrap().universal_vertices(), vec![0]);
    }

    #[test]
    fn twins() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.twin_relation(0, 1), Ok(TwinRelation::True));
        assert_eq!(Graph::cycle(4).unwrap().twin_relation(0, 2), Ok(TwinRelation::False));
        assert_eq!(Graph::path(4).unwrap().twin_relation(0, 3), Ok(TwinRelation::NotTwins));
        assert_eq!(k3.twin_relation(1, 1), Err(Error::SameVertex(1)));
        // two isolated vertices share the empty neighbourhood
        assert_eq!(Graph::empty(2).unwrap().twin_relation(0, 1), Ok(TwinRelation::False));
    }

    #[test]
    fn components() {
        assert_eq!(Graph::path(5).unwrap().connected_components(), vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(Graph::empty(3).unwrap().connected_components(), vec![vec![0], vec![1], vec![2]]);
        let g = Graph::star(2).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        let sizes: Vec<_> = g.connected_components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 1]);
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let c5 = Graph::cycle(5).unwrap();
        let (sub, map) = c5.induced_subgraph(0b11010);
        assert_eq!(map, vec![1, 3, 4]);
        assert_eq!(sub.edges(), vec![(1, 2)]);
    }

    #[test]
    fn parse_auto_detects_format() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(Graph::parse_auto("Bg\n").unwrap(), p3);
        assert_eq!(Graph::parse_auto("3\n0 1\n1 2\n").unwrap(), p3);
        assert_eq!(Graph::parse_auto(">>graph6<<Bg").unwrap(), p3);
    }

    #[test]
    fn adjacency_masks_validation() {
        assert!(Graph::from_adjacency_masks(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_adjacency_masks(vec![0b10, 0b00]).is_err());
        assert_eq!(Graph::from_adjacency_masks(vec![0b01]), Err(Error::SelfLoop(0)));
    }
}
