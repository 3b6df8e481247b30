//! Brute-force reference implementations, written from the definitions over
//! plain adjacency lists so they share nothing with the library under test.
#![allow(dead_code)]

use idom::Graph;

pub struct Adj {
    pub n: usize,
    pub nbrs: Vec<Vec<usize>>,
}

impl Adj {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut nbrs = vec![Vec::new(); n];
        for &(u, v) in edges {
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
        Adj { n, nbrs }
    }

    pub fn of(g: &Graph) -> Self {
        Adj::new(g.n(), &g.edges())
    }
}

pub fn is_idf(a: &Adj, f: &[u8]) -> bool {
    (0..a.n).all(|v| f[v] != 0 || a.nbrs[v].iter().map(|&w| f[w] as u32).sum::<u32>() >= 2)
}

pub fn is_rdf(a: &Adj, f: &[u8]) -> bool {
    (0..a.n).all(|v| f[v] != 0 || a.nbrs[v].iter().any(|&w| f[w] == 2))
}

pub fn is_dominating(a: &Adj, set: &[usize]) -> bool {
    (0..a.n).all(|v| set.contains(&v) || a.nbrs[v].iter().any(|w| set.contains(w)))
}

/// Every vector in {0,1,2}^n, lexicographically.
pub fn all_labelings(n: usize) -> impl Iterator<Item = Vec<u8>> {
    let total = 3usize.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut f = vec![0u8; n];
        for slot in f.iter_mut().rev() {
            *slot = (code % 3) as u8;
            code /= 3;
        }
        f
    })
}

fn weight(f: &[u8]) -> u32 {
    f.iter().map(|&x| x as u32).sum()
}

fn min_weight(a: &Adj, ok: fn(&Adj, &[u8]) -> bool) -> u32 {
    all_labelings(a.n).filter(|f| ok(a, f)).map(|f| weight(&f)).min().expect("all-2 is always valid")
}

pub fn gamma_italian(a: &Adj) -> u32 {
    min_weight(a, is_idf)
}

pub fn gamma_roman(a: &Adj) -> u32 {
    min_weight(a, is_rdf)
}

pub fn gamma(a: &Adj) -> u32 {
    (0u64..1 << a.n)
        .filter_map(|mask| {
            let set: Vec<usize> = (0..a.n).filter(|&v| mask >> v & 1 == 1).collect();
            is_dominating(a, &set).then_some(set.len() as u32)
        })
        .min()
        .expect("V dominates")
}

/// All minimum-weight IDFs in lexicographic order.
pub fn minimum_idfs(a: &Adj) -> Vec<Vec<u8>> {
    let best = gamma_italian(a);
    all_labelings(a.n).filter(|f| weight(f) == best && is_idf(a, f)).collect()
}

/// graph6 straight from the format description: N(n) then the upper
/// triangle column by column, packed big-endian into 6-bit groups.
pub fn graph6(n: usize, edges: &[(usize, usize)]) -> String {
    let mut bytes = Vec::new();
    if n < 63 {
        bytes.push(n as u8);
    } else {
        bytes.extend([63, (n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63]);
    }
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(edges.contains(&(i, j)) || edges.contains(&(j, i)));
        }
    }
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for k in 0..6 {
            x = x << 1 | chunk.get(k).copied().unwrap_or(false) as u8;
        }
        bytes.push(x);
    }
    bytes.into_iter().map(|b| (b + 63) as char).collect()
}

/// G ⊙ H by definition, with copy i of H at `n_g + i * n_h`.
pub fn corona(
    n_g: usize,
    g_edges: &[(usize, usize)],
    n_h: usize,
    h_edges: &[(usize, usize)],
) -> (usize, Vec<(usize, usize)>) {
    let mut edges = g_edges.to_vec();
    for i in 0..n_g {
        let base = n_g + i * n_h;
        edges.extend(h_edges.iter().map(|&(x, y)| (base + x, base + y)));
        edges.extend((0..n_h).map(|j| (i, base + j)));
    }
    let mut edges: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort();
    (n_g + n_g * n_h, edges)
}

/// Random edge set with a fixed density, from a small xorshift generator.
pub fn random_edges(state: &mut u64, n: usize, per_mille: u64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            *state ^= *state << 13;
            *state ^= *state >> 7;
            *state ^= *state << 17;
            if *state % 1000 < per_mille {
                edges.push((i, j));
            }
        }
    }
    edges
}
