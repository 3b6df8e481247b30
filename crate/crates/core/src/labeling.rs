//! Vertex labelings `f: V -> {0, 1, 2}` and the domination predicates on them.
//!
//! Text form is the comma-separated value vector in vertex order, e.g. `2,0,1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, TwinRelation, VertexId};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Labeling {
    values: Vec<u8>,
}

impl Labeling {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        if let Some(bad) = values.iter().find(|&&x| x > 2) {
            return Err(Error::LabelingSyntax(format!("value {bad} is outside {{0, 1, 2}}")));
        }
        Ok(Labeling { values })
    }

    pub fn constant(n: usize, value: u8) -> Self {
        assert!(value <= 2);
        Labeling { values: vec![value; n] }
    }

    pub fn zeros(n: usize) -> Self {
        Labeling::constant(n, 0)
    }

    /// Builds a labeling from the masks of vertices valued 1 and 2.
    pub(crate) fn from_masks(n: usize, ones: u64, twos: u64) -> Self {
        debug_assert_eq!(ones & twos, 0);
        let values = (0..n).map(|v| (ones >> v & 1) as u8 + 2 * (twos >> v & 1) as u8).collect();
        Labeling { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn get(&self, v: VertexId) -> u8 {
        self.values[v]
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// A copy with `f(v)` replaced.
    pub fn with_value(&self, v: VertexId, value: u8) -> Self {
        assert!(value <= 2, "label {value} outside {{0, 1, 2}}");
        let mut values = self.values.clone();
        values[v] = value;
        Labeling { values }
    }

    fn with_values(&self, changes: &[(VertexId, u8)]) -> Self {
        let mut values = self.values.clone();
        for &(v, x) in changes {
            values[v] = x;
        }
        Labeling { values }
    }

    /// `f(V)`.
    pub fn weight(&self) -> u32 {
        self.values.iter().map(|&x| x as u32).sum()
    }

    /// `(V_0, V_1, V_2)`.
    pub fn v_partition(&self) -> [Vec<VertexId>; 3] {
        let mut parts: [Vec<VertexId>; 3] = Default::default();
        for (v, &x) in self.values.iter().enumerate() {
            parts[x as usize].push(v);
        }
        parts
    }

    /// Masks of the vertices valued 1 and valued 2.
    pub fn masks(&self) -> (u64, u64) {
        let mut ones = 0;
        let mut twos = 0;
        for (v, &x) in self.values.iter().enumerate() {
            match x {
                1 => ones |= 1 << v,
                2 => twos |= 1 << v,
                _ => {}
            }
        }
        (ones, twos)
    }

    fn check_size(&self, g: &Graph) -> Result<()> {
        if self.len() == g.n() {
            Ok(())
        } else {
            Err(Error::SizeMismatch { expected: g.n(), found: self.len() })
        }
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Labeling({self})")
    }
}

impl FromStr for Labeling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Labeling { values: Vec::new() });
        }
        let values = s
            .split(',')
            .map(|t| match t.trim() {
                "0" => Ok(0),
                "1" => Ok(1),
                "2" => Ok(2),
                other => Err(Error::LabelingSyntax(format!("unexpected entry {other:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Labeling { values })
    }
}

impl TryFrom<String> for Labeling {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Labeling> for String {
    fn from(f: Labeling) -> String {
        f.to_string()
    }
}

/// Every vertex outside `ones | twos` has a 2-neighbour or two 1-neighbours.
#[inline]
pub(crate) fn idf_masks_ok(adj: &[u64], all: u64, ones: u64, twos: u64) -> bool {
    bits(all & !(ones | twos)).all(|v| adj[v] & twos != 0 || (adj[v] & ones).count_ones() >= 2)
}

#[inline]
pub(crate) fn rdf_masks_ok(adj: &[u64], all: u64, ones: u64, twos: u64) -> bool {
    bits(all & !(ones | twos)).all(|v| adj[v] & twos != 0)
}

/// Italian condition: each 0-vertex has neighbour-label sum at least 2.
pub fn is_idf(g: &Graph, f: &Labeling) -> Result<bool> {
    f.check_size(g)?;
    let (ones, twos) = f.masks();
    Ok(idf_masks_ok(g.adjacency_masks(), g.vertex_mask(), ones, twos))
}

/// Roman condition: each 0-vertex has a neighbour labelled 2.
pub fn is_rdf(g: &Graph, f: &Labeling) -> Result<bool> {
    f.check_size(g)?;
    let (ones, twos) = f.masks();
    Ok(rdf_masks_ok(g.adjacency_masks(), g.vertex_mask(), ones, twos))
}

pub fn is_dominating(g: &Graph, set: &[VertexId]) -> Result<bool> {
    let mut covered = 0u64;
    for &v in set {
        g.check_vertex(v)?;
        covered |= g.closed_neighbors_mask(v);
    }
    Ok(covered == g.vertex_mask())
}

fn require_idf(g: &Graph, f: &Labeling) -> Result<()> {
    if is_idf(g, f)? {
        Ok(())
    } else {
        Err(Error::NotAnIdf)
    }
}

/// Which of the two equal-weight reassignments to use when a pendant vertex
/// is labelled 2 and its support vertex 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PendantReassignment {
    /// `f(u) = 0, f(v) = 2`: the pendant is then dominated by a 2-neighbour.
    #[default]
    MoveToSupport,
    /// `f(u) = f(v) = 1`.
    Split,
}

/// Rewrites an IDF so the pendant vertex `u` is not labelled 2, keeping the weight.
///
/// With support vertex `v`: `(2, 0)` becomes `(0, 2)` or `(1, 1)` per `variant`;
/// `(2, 1)` becomes `(1, 2)`. The case `(2, 2)` only arises for IDFs that are
/// not minimum and has no equal-weight fix on the pair, so it is an error.
pub fn normalize_pendant(g: &Graph, f: &Labeling, u: VertexId, variant: PendantReassignment) -> Result<Labeling> {
    require_idf(g, f)?;
    g.check_vertex(u)?;
    if g.degree(u) != 1 {
        return Err(Error::NotPendant(u));
    }
    if f.get(u) != 2 {
        return Ok(f.clone());
    }
    let v = g.neighbors_mask(u).trailing_zeros() as usize;
    let out = match (f.get(v), variant) {
        (0, PendantReassignment::MoveToSupport) => f.with_values(&[(u, 0), (v, 2)]),
        (0, PendantReassignment::Split) => f.with_values(&[(u, 1), (v, 1)]),
        (1, _) => f.with_values(&[(u, 1), (v, 2)]),
        _ => return Err(Error::CannotNormalize(format!("pendant {u} and its support {v} are both labelled 2"))),
    };
    debug_assert!(is_idf(g, &out).unwrap_or(false));
    Ok(out)
}

/// Rewrites an IDF so that `u2`, a true twin of `u`, is labelled 0, keeping the weight.
///
/// `(f(u), f(u2))`: `(0, 2)` and `(0, 1)` swap, `(1, 1)` becomes `(2, 0)`.
/// `(1, 2)`, `(2, 2)` and `(2, 1)` cannot occur in a minimum IDF (moving all
/// weight to `u` would be lighter) and are reported as errors.
pub fn normalize_true_twin(g: &Graph, f: &Labeling, u: VertexId, u2: VertexId) -> Result<Labeling> {
    require_idf(g, f)?;
    if g.twin_relation(u, u2)? != TwinRelation::True {
        return Err(Error::NotTwins(u, u2, "true"));
    }
    let out = match (f.get(u), f.get(u2)) {
        (_, 0) => f.clone(),
        (0, x) => f.with_values(&[(u, x), (u2, 0)]),
        (1, 1) => f.with_values(&[(u, 2), (u2, 0)]),
        (a, b) => {
            return Err(Error::CannotNormalize(format!(
                "true twins {u}, {u2} labelled ({a}, {b}); only possible when f is not minimum"
            )))
        }
    };
    debug_assert!(is_idf(g, &out).unwrap_or(false));
    Ok(out)
}

/// Rewrites an IDF so that `u2`, a false twin of `u`, is not labelled 2, keeping the weight.
///
/// When `f(u2) = 2` and `f(u) < 2` the two values are exchanged; twins are
/// interchangeable, so the result is again an IDF. `f(u) = f(u2) = 2` is an error.
pub fn normalize_false_twin(g: &Graph, f: &Labeling, u: VertexId, u2: VertexId) -> Result<Labeling> {
    require_idf(g, f)?;
    if g.twin_relation(u, u2)? != TwinRelation::False {
        return Err(Error::NotTwins(u, u2, "false"));
    }
    let out = match (f.get(u), f.get(u2)) {
        (_, 0 | 1) => f.clone(),
        (2, 2) => {
            return Err(Error::CannotNormalize(format!("false twins {u}, {u2} are both labelled 2")));
        }
        (x, _) => f.with_values(&[(u, 2), (u2, x)]),
    };
    debug_assert!(is_idf(g, &out).unwrap_or(false));
    Ok(out)
}
