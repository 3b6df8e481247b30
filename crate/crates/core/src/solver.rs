//! Exact γ, γ_I and γ_R.
//!
//! The Italian and Roman numbers share one depth-first branch-and-bound over
//! vertex labels. Vertices are visited by descending degree and labels are
//! tried in the order 2, 1, 0. A node is cut when its weight plus a
//! fractional covering bound exceeds the incumbent:
//!
//! every vertex `v` of an IDF satisfies `2 f(v) + Σ_{u ∈ N(v)} f(u) >= 2`, so the
//! unresolved vertices carry a total demand in half-units that each unit of
//! weight on an unassigned vertex `w` can reduce by at most
//! `2 [w unresolved] + |N(w) ∩ unresolved|`. Filling the largest capacities
//! first (at most two units per vertex) gives an admissible bound. The Roman
//! variant uses `max(2 [w unresolved], |N[w] ∩ unresolved|)` with demand 2.
//!
//! Graphs are split into connected components first; isolated vertices take
//! label 1 directly.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{bits, low_mask, Graph, VertexId};
use crate::labeling::{idf_masks_ok, Labeling};

/// `brute_force_gamma_italian` refuses graphs larger than this (3^15 labelings).
pub const BRUTE_FORCE_LIMIT: usize = 15;
/// `enumerate_minimum_idfs` refuses graphs larger than this.
pub const ENUMERATION_LIMIT: usize = 12;
/// In [`CertificateMode::Auto`], graphs up to this order get the lexicographic certificate.
pub const AUTO_LEXICOGRAPHIC_LIMIT: usize = 20;
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(60);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CertificateMode {
    /// Lexicographic for `n <= 20`, first-found above.
    #[default]
    Auto,
    /// The lexicographically smallest optimal value vector.
    Lexicographic,
    /// Whatever optimum the search meets first.
    FirstFound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Wall-clock budget per solve; `None` means unlimited.
    pub budget: Option<Duration>,
    pub certificate: CertificateMode,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { budget: Some(DEFAULT_BUDGET), certificate: CertificateMode::Auto }
    }
}

impl SolverConfig {
    fn lexicographic(&self, n: usize) -> bool {
        match self.certificate {
            CertificateMode::Auto => n <= AUTO_LEXICOGRAPHIC_LIMIT,
            CertificateMode::Lexicographic => true,
            CertificateMode::FirstFound => false,
        }
    }
}

/// An invariant value together with an object achieving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult<C = Labeling> {
    pub value: u32,
    pub certificate: C,
    pub optimal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Italian,
    Roman,
}

pub fn gamma_italian(g: &Graph) -> Result<SolveResult> {
    gamma_italian_with(g, &SolverConfig::default())
}

pub fn gamma_italian_with(g: &Graph, config: &SolverConfig) -> Result<SolveResult> {
    solve_labeling(g, Rule::Italian, config)
}

pub fn gamma_roman(g: &Graph) -> Result<SolveResult> {
    gamma_roman_with(g, &SolverConfig::default())
}

pub fn gamma_roman_with(g: &Graph, config: &SolverConfig) -> Result<SolveResult> {
    solve_labeling(g, Rule::Roman, config)
}

fn deadline(config: &SolverConfig) -> Option<Instant> {
    config.budget.map(|b| Instant::now() + b)
}

fn solve_labeling(g: &Graph, rule: Rule, config: &SolverConfig) -> Result<SolveResult> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let deadline = deadline(config);
    let lexicographic = config.lexicographic(g.n());

    let mut ones = 0u64;
    let mut twos = 0u64;
    let mut total = 0u32;
    let components = g.component_masks();
    for (k, &comp) in components.iter().enumerate() {
        if comp.count_ones() == 1 {
            ones |= comp;
            total += 1;
            continue;
        }
        let (sub, map) = g.induced_subgraph(comp);
        match solve_component(&sub, rule, lexicographic, deadline) {
            Ok((value, sub_ones, sub_twos)) => {
                total += value;
                for (i, &v) in map.iter().enumerate() {
                    ones |= (sub_ones >> i & 1) << v;
                    twos |= (sub_twos >> i & 1) << v;
                }
            }
            Err(Error::BudgetExceeded { upper_bound }) => {
                // untouched components are bounded by labelling every vertex 1
                let rest: u32 = components[k + 1..].iter().map(|m| m.count_ones()).sum();
                return Err(Error::BudgetExceeded { upper_bound: upper_bound.map(|ub| total + ub + rest) });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(SolveResult { value: total, certificate: Labeling::from_masks(g.n(), ones, twos), optimal: true })
}

/// Solves one connected component with at least two vertices.
fn solve_component(g: &Graph, rule: Rule, lexicographic: bool, deadline: Option<Instant>) -> Result<(u32, u64, u64)> {
    let n = g.n();
    let (seed_weight, seed_ones, seed_twos) = greedy_upper_bound(g);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = Search::new(g, rule, order, [2, 1, 0], Goal::Minimize, seed_weight - 1, deadline);
    search.run();
    let (value, ones, twos) = match search.found.first() {
        Some(&(o, t)) => (search.limit + 1, o, t),
        None if search.aborted => return Err(Error::BudgetExceeded { upper_bound: Some(seed_weight) }),
        None => (seed_weight, seed_ones, seed_twos),
    };
    if search.aborted {
        return Err(Error::BudgetExceeded { upper_bound: Some(value) });
    }
    if !lexicographic {
        return Ok((value, ones, twos));
    }

    let mut lex = Search::new(g, rule, (0..n).collect(), [0, 1, 2], Goal::First, value, deadline);
    lex.run();
    match lex.found.first() {
        Some(&(o, t)) => Ok((value, o, t)),
        None if lex.aborted => Err(Error::BudgetExceeded { upper_bound: Some(value) }),
        None => unreachable!("an optimal labeling of weight {value} exists"),
    }
}

/// Label 2 on a greedily built dominating set, or 1 everywhere, whichever is lighter.
fn greedy_upper_bound(g: &Graph) -> (u32, u64, u64) {
    let all = g.vertex_mask();
    let mut covered = 0u64;
    let mut twos = 0u64;
    while covered != all {
        let best = (0..g.n())
            .filter(|v| twos >> v & 1 == 0)
            .max_by_key(|&v| ((g.closed_neighbors_mask(v) & !covered).count_ones(), std::cmp::Reverse(v)))
            .expect("an uncovered vertex exists");
        twos |= 1 << best;
        covered |= g.closed_neighbors_mask(best);
    }
    let dominating = 2 * twos.count_ones();
    if dominating < g.n() as u32 {
        (dominating, 0, twos)
    } else {
        (g.n() as u32, all, 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Goal {
    /// Tighten `limit` after every leaf; `found` keeps only the latest optimum.
    Minimize,
    /// Stop at the first leaf within `limit`.
    First,
    /// Collect every leaf within `limit`.
    All,
}

struct Search<'a> {
    adj: &'a [u64],
    rule: Rule,
    order: Vec<usize>,
    value_order: [u8; 3],
    goal: Goal,
    /// Leaves heavier than this are not wanted.
    limit: u32,
    deadline: Option<Instant>,

    unassigned: u64,
    zeros: u64,
    ones: u64,
    twos: u64,
    weight: u32,

    found: Vec<(u64, u64)>,
    nodes: u64,
    aborted: bool,
}

impl<'a> Search<'a> {
    fn new(
        g: &'a Graph,
        rule: Rule,
        order: Vec<usize>,
        value_order: [u8; 3],
        goal: Goal,
        limit: u32,
        deadline: Option<Instant>,
    ) -> Self {
        Search {
            adj: g.adjacency_masks(),
            rule,
            order,
            value_order,
            goal,
            limit,
            deadline,
            unassigned: low_mask(g.n()),
            zeros: 0,
            ones: 0,
            twos: 0,
            weight: 0,
            found: Vec::new(),
            nodes: 0,
            aborted: false,
        }
    }

    fn run(&mut self) {
        if self.bound().is_some_and(|lb| lb <= self.limit) {
            self.dfs(0);
        }
    }

    /// Whether the 0-labelled vertex `v` can still meet its condition.
    #[inline]
    fn satisfiable(&self, v: usize) -> bool {
        let nb = self.adj[v];
        match self.rule {
            Rule::Italian => {
                nb & self.twos != 0 || (nb & self.ones).count_ones() + 2 * (nb & self.unassigned).count_ones() >= 2
            }
            Rule::Roman => nb & (self.twos | self.unassigned) != 0,
        }
    }

    /// Neighbour-label sum of `v` over assigned vertices, capped at 2.
    #[inline]
    fn assigned_sum(&self, v: usize) -> u32 {
        let nb = self.adj[v];
        if nb & self.twos != 0 {
            2
        } else {
            (nb & self.ones).count_ones().min(2)
        }
    }

    /// Additional weight any completion needs, or `None` if no completion exists.
    fn bound(&self) -> Option<u32> {
        let open = self.unassigned | self.zeros;
        let mut unresolved = 0u64;
        let mut demand = 0u32;
        for v in bits(open) {
            let need = match self.rule {
                Rule::Italian => 2 - self.assigned_sum(v),
                Rule::Roman => {
                    if self.adj[v] & self.twos != 0 {
                        0
                    } else {
                        2
                    }
                }
            };
            if need > 0 {
                unresolved |= 1 << v;
                demand += need;
            }
        }
        if demand == 0 {
            return Some(0);
        }

        let mut caps = [0u32; 64];
        let mut len = 0;
        for w in bits(self.unassigned) {
            let own = 2 * (unresolved >> w & 1) as u32;
            let around = (self.adj[w] & unresolved).count_ones();
            caps[len] = match self.rule {
                Rule::Italian => own + around,
                Rule::Roman => own.max(around + (unresolved >> w & 1) as u32),
            };
            len += 1;
        }
        let caps = &mut caps[..len];
        caps.sort_unstable_by(|a, b| b.cmp(a));

        let mut remaining = demand;
        let mut units = 0;
        for &cap in caps.iter() {
            if cap == 0 {
                break;
            }
            if remaining <= 2 * cap {
                return Some(units + remaining.div_ceil(cap));
            }
            remaining -= 2 * cap;
            units += 2;
        }
        None
    }

    fn assign(&mut self, v: usize, x: u8) {
        let bit = 1u64 << v;
        self.unassigned &= !bit;
        match x {
            0 => self.zeros |= bit,
            1 => self.ones |= bit,
            _ => self.twos |= bit,
        }
        self.weight += x as u32;
    }

    fn unassign(&mut self, v: usize, x: u8) {
        let bit = 1u64 << v;
        self.unassigned |= bit;
        self.zeros &= !bit;
        self.ones &= !bit;
        self.twos &= !bit;
        self.weight -= x as u32;
    }

    /// Constraint check after `v` received `x`.
    fn consistent(&self, v: usize, x: u8) -> bool {
        if x == 2 {
            return true;
        }
        if x == 0 && !self.satisfiable(v) {
            return false;
        }
        bits(self.adj[v] & self.zeros).all(|w| self.satisfiable(w))
    }

    fn out_of_time(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes & 0x3ff == 1 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.aborted = true;
                }
            }
        }
        self.aborted
    }

    fn done(&self) -> bool {
        self.aborted || (self.goal == Goal::First && !self.found.is_empty())
    }

    fn dfs(&mut self, depth: usize) {
        if self.out_of_time() {
            return;
        }
        if depth == self.order.len() {
            debug_assert!(self.weight <= self.limit);
            match self.goal {
                Goal::Minimize => {
                    self.found.clear();
                    self.found.push((self.ones, self.twos));
                    self.limit = self.weight.saturating_sub(1);
                }
                Goal::First | Goal::All => self.found.push((self.ones, self.twos)),
            }
            return;
        }

        let v = self.order[depth];
        for x in self.value_order {
            if self.weight + x as u32 > self.limit {
                continue;
            }
            self.assign(v, x);
            if self.consistent(v, x) && self.bound().is_some_and(|lb| self.weight + lb <= self.limit) {
                self.dfs(depth + 1);
            }
            self.unassign(v, x);
            if self.done() {
                return;
            }
        }
    }
}

/// Minimum dominating set by branch and bound: pick the undominated vertex
/// with the fewest dominators and branch on each of them.
pub fn gamma_domination(g: &Graph) -> Result<SolveResult<Vec<VertexId>>> {
    gamma_domination_with(g, &SolverConfig::default())
}

pub fn gamma_domination_with(g: &Graph, config: &SolverConfig) -> Result<SolveResult<Vec<VertexId>>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let deadline = deadline(config);
    let mut chosen = 0u64;
    for comp in g.component_masks() {
        let mut search =
            DominationSearch { g, best: comp, best_size: comp.count_ones(), deadline, nodes: 0, aborted: false };
        search.dfs(0, !comp & g.vertex_mask(), 0);
        if search.aborted {
            return Err(Error::BudgetExceeded { upper_bound: None });
        }
        chosen |= search.best;
    }
    let set: Vec<VertexId> = bits(chosen).collect();
    Ok(SolveResult { value: set.len() as u32, certificate: set, optimal: true })
}

struct DominationSearch<'a> {
    g: &'a Graph,
    best: u64,
    best_size: u32,
    deadline: Option<Instant>,
    nodes: u64,
    aborted: bool,
}

impl DominationSearch<'_> {
    fn dfs(&mut self, chosen: u64, dominated: u64, size: u32) {
        self.nodes += 1;
        if self.nodes & 0x3ff == 1 && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.aborted = true;
        }
        if self.aborted {
            return;
        }
        let g = self.g;
        let open = g.vertex_mask() & !dominated;
        if open == 0 {
            if size < self.best_size {
                self.best_size = size;
                self.best = chosen;
            }
            return;
        }
        let reach = (0..g.n()).map(|w| (g.closed_neighbors_mask(w) & open).count_ones()).max().unwrap_or(0);
        if size + open.count_ones().div_ceil(reach) >= self.best_size {
            return;
        }
        let target = bits(open).min_by_key(|&v| g.closed_neighbors_mask(v).count_ones()).expect("open is non-empty");
        let mut candidates: Vec<usize> = bits(g.closed_neighbors_mask(target)).collect();
        candidates.sort_by_key(|&w| (std::cmp::Reverse((g.closed_neighbors_mask(w) & open).count_ones()), w));
        for w in candidates {
            self.dfs(chosen | 1 << w, dominated | g.closed_neighbors_mask(w), size + 1);
        }
    }
}

/// Scans all `3^n` labelings; the certificate is the lexicographically first optimum.
pub fn brute_force_gamma_italian(g: &Graph) -> Result<SolveResult> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.n() > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { n: g.n() });
    }
    let n = g.n();
    let adj = g.adjacency_masks();
    let all = g.vertex_mask();
    let mut best: Option<(u32, u64, u64)> = None;
    for_each_labeling(n, |ones, twos, weight| {
        if best.is_none_or(|(w, _, _)| weight < w) && idf_masks_ok(adj, all, ones, twos) {
            best = Some((weight, ones, twos));
        }
    });
    let (value, ones, twos) = best.expect("all-ones labeling is always an IDF");
    Ok(SolveResult { value, certificate: Labeling::from_masks(n, ones, twos), optimal: true })
}

/// Visits every labeling of `n` vertices in lexicographic order of the value
/// vector (vertex 0 most significant), passing its 1- and 2-masks and weight.
pub(crate) fn for_each_labeling(n: usize, mut visit: impl FnMut(u64, u64, u32)) {
    let mut digits = vec![0u8; n];
    let (mut ones, mut twos, mut weight) = (0u64, 0u64, 0u32);
    loop {
        visit(ones, twos, weight);
        // increment the base-3 odometer from the last vertex
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            let bit = 1u64 << i;
            match digits[i] {
                0 => {
                    digits[i] = 1;
                    ones |= bit;
                    weight += 1;
                    break;
                }
                1 => {
                    digits[i] = 2;
                    ones &= !bit;
                    twos |= bit;
                    weight += 1;
                    break;
                }
                _ => {
                    digits[i] = 0;
                    twos &= !bit;
                    weight -= 2;
                }
            }
        }
    }
}

/// All minimum-weight IDFs in lexicographic order.
pub fn enumerate_minimum_idfs(g: &Graph) -> Result<Vec<Labeling>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.n() > ENUMERATION_LIMIT {
        return Err(Error::TooLarge { n: g.n() });
    }
    let config = SolverConfig { budget: None, certificate: CertificateMode::FirstFound };
    let value = gamma_italian_with(g, &config)?.value;
    let mut search = Search::new(g, Rule::Italian, (0..g.n()).collect(), [0, 1, 2], Goal::All, value, None);
    search.run();
    Ok(search.found.iter().map(|&(o, t)| Labeling::from_masks(g.n(), o, t)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{is_dominating, is_idf, is_rdf};

    fn lab(s: &str) -> Labeling {
        s.parse().unwrap()
    }

    #[test]
    fn italian_examples() {
        assert_eq!(gamma_italian(&Graph::path(5).unwrap()).unwrap().value, 3);
        let k1 = gamma_italian(&Graph::complete(1).unwrap()).unwrap();
        assert_eq!((k1.value, k1.certificate.clone()), (1, lab("1")));
        let c4 = gamma_italian(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!((c4.value, c4.certificate), (2, lab("0,1,0,1")));
    }

    #[test]
    fn roman_examples() {
        for n in 2..7 {
            assert_eq!(gamma_roman(&Graph::complete(n).unwrap()).unwrap().value, 2);
        }
        assert_eq!(gamma_roman(&Graph::path(4).unwrap()).unwrap().value, 3);
        assert_eq!(gamma_roman(&Graph::empty(3).unwrap()).unwrap().value, 3);
    }

    #[test]
    fn domination_examples() {
        assert_eq!(gamma_domination(&Graph::path(6).unwrap()).unwrap().value, 2);
        assert_eq!(gamma_domination(&Graph::complete(5).unwrap()).unwrap().value, 1);
        let e4 = gamma_domination(&Graph::empty(4).unwrap()).unwrap();
        assert_eq!((e4.value, e4.certificate), (4, vec![0, 1, 2, 3]));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_gamma_italian(&Graph::path(3).unwrap()).unwrap().value, 2);
        assert_eq!(brute_force_gamma_italian(&Graph::complete(2).unwrap()).unwrap().value, 2);
        assert_eq!(brute_force_gamma_italian(&Graph::star(4).unwrap()).unwrap().value, 2);
        assert_eq!(brute_force_gamma_italian(&Graph::cycle(4).unwrap()).unwrap().certificate, lab("0,1,0,1"));
        assert!(matches!(brute_force_gamma_italian(&Graph::path(16).unwrap()), Err(Error::TooLarge { n: 16 })));
    }

    #[test]
    fn odometer_visits_in_lex_order() {
        let mut seen = Vec::new();
        for_each_labeling(2, |o, t, w| seen.push((Labeling::from_masks(2, o, t).to_string(), w)));
        let expected = ["0,0", "0,1", "0,2", "1,0", "1,1", "1,2", "2,0", "2,1", "2,2"];
        assert_eq!(seen.iter().map(|(s, _)| s.as_str()).collect::<Vec<_>>(), expected);
        assert_eq!(seen.iter().map(|&(_, w)| w).collect::<Vec<_>>(), vec![0, 1, 2, 1, 2, 3, 2, 3, 4]);
    }

    #[test]
    fn enumeration_examples() {
        let k2 = enumerate_minimum_idfs(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(k2, vec![lab("0,2"), lab("1,1"), lab("2,0")]);
        assert_eq!(enumerate_minimum_idfs(&Graph::complete(1).unwrap()).unwrap(), vec![lab("1")]);
        let p3 = enumerate_minimum_idfs(&Graph::path(3).unwrap()).unwrap();
        assert!(p3.contains(&lab("0,2,0")) && p3.contains(&lab("1,0,1")));
        assert!(matches!(enumerate_minimum_idfs(&Graph::path(13).unwrap()), Err(Error::TooLarge { n: 13 })));
    }

    #[test]
    fn empty_graph_rejected() {
        let k0 = Graph::with_vertices(0).unwrap();
        assert_eq!(gamma_italian(&k0), Err(Error::EmptyGraph));
        assert_eq!(gamma_roman(&k0), Err(Error::EmptyGraph));
        assert_eq!(gamma_domination(&k0), Err(Error::EmptyGraph));
        assert_eq!(brute_force_gamma_italian(&k0), Err(Error::EmptyGraph));
    }

    #[test]
    fn mixed_components() {
        // P_3 ∪ K_1 ∪ C_4
        let g = Graph::path(3)
            .unwrap()
            .disjoint_union(&Graph::complete(1).unwrap())
            .unwrap()
            .disjoint_union(&Graph::cycle(4).unwrap())
            .unwrap();
        let r = gamma_italian(&g).unwrap();
        assert_eq!(r.value, 2 + 1 + 2);
        assert_eq!(r.certificate, brute_force_gamma_italian(&g).unwrap().certificate);
        let r = gamma_roman(&g).unwrap();
        assert_eq!(r.value, 2 + 1 + 3);
        assert_eq!(is_rdf(&g, &r.certificate), Ok(true));
        let d = gamma_domination(&g).unwrap();
        assert_eq!(d.value, 1 + 1 + 2);
        assert_eq!(is_dominating(&g, &d.certificate), Ok(true));
    }

    #[test]
    fn first_found_mode_still_optimal() {
        let config = SolverConfig { budget: None, certificate: CertificateMode::FirstFound };
        let g = Graph::cycle(9).unwrap();
        let r = gamma_italian_with(&g, &config).unwrap();
        assert_eq!(r.value, 5);
        assert_eq!(is_idf(&g, &r.certificate), Ok(true));
        assert_eq!(r.certificate.weight(), 5);
    }

    #[test]
    fn zero_budget_reports_exceeded() {
        let config = SolverConfig { budget: Some(Duration::ZERO), certificate: CertificateMode::FirstFound };
        let g = Graph::cycle(40).unwrap();
        match gamma_italian_with(&g, &config) {
            Err(Error::BudgetExceeded { upper_bound: Some(ub) }) => assert!((20..=40).contains(&ub)),
            other => panic!("expected budget exceeded, got {other:?}"),
        }
    }
}
