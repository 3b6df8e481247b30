use std::collections::HashSet;

use rand::Rng;
use rayon::prelude::*;

use super::catalog::{labeled_graphs, random_graph, rng_for};
use super::{Expected, Status, SuiteConfig, TheoremId, TheoremReport};
use crate::error::{Error, Result};
use crate::graph::{Graph, TwinRelation, VertexId};
use crate::labeling::{
    is_dominating, is_idf, is_rdf, normalize_false_twin, normalize_pendant, normalize_true_twin, Labeling,
    PendantReassignment,
};
use crate::operators::{add_false_twin, add_true_twin, corona, corona_k1};
use crate::solver::{
    enumerate_minimum_idfs, gamma_domination_with, gamma_italian_with, gamma_roman_with, SolveResult, SolverConfig,
};
use crate::witnesses::{self, Witness};

pub(super) fn run(id: TheoremId, config: &SuiteConfig) -> Vec<TheoremReport> {
    let ctx = Ctx { config, solver: SolverConfig { budget: Some(config.budget()), ..SolverConfig::default() } };
    match id {
        TheoremId::T1 => ctx.paths(),
        TheoremId::T2 => ctx.general_corona(),
        TheoremId::T3 => ctx.corona_bounds(),
        TheoremId::T4 => ctx.realization(),
        TheoremId::T5 => ctx.iff(TheoremId::T5),
        TheoremId::T6 => ctx.iff(TheoremId::T6),
        TheoremId::T7 => ctx.bipartite(),
        TheoremId::T8 => ctx.double_corona(),
        TheoremId::T9 => ctx.path_or_cycle_corona(TheoremId::T9),
        TheoremId::T10 => ctx.path_or_cycle_corona(TheoremId::T10),
        TheoremId::L1 => ctx.pendant_lemma(),
        TheoremId::L2 => ctx.twin_lemma(TheoremId::L2),
        TheoremId::L3 => ctx.twin_lemma(TheoremId::L3),
        TheoremId::TT => ctx.twin_growth(TheoremId::TT),
        TheoremId::FT => ctx.twin_growth(TheoremId::FT),
        TheoremId::SANDWICH => Vec::new(),
    }
}

/// One row per distinct graph, in first-seen order.
pub(super) fn sandwich(solved: Vec<Graph>, config: &SuiteConfig) -> Vec<TheoremReport> {
    let ctx = Ctx { config, solver: SolverConfig { budget: Some(config.budget()), ..SolverConfig::default() } };
    let mut seen = HashSet::new();
    let graphs: Vec<Graph> = solved.into_iter().filter(|g| seen.insert(g.clone())).collect();
    graphs.into_par_iter().map(|g| ctx.sandwich_row(&g)).collect()
}

struct Ctx<'a> {
    config: &'a SuiteConfig,
    solver: SolverConfig,
}

fn row(theorem: TheoremId, instance: String, graph: &Graph, expected: Expected) -> TheoremReport {
    TheoremReport {
        theorem,
        instance,
        graph: graph.to_graph6(),
        expected,
        computed: None,
        certificate: None,
        detail: None,
        status: Status::Fail,
        solved: Vec::new(),
    }
}

impl TheoremReport {
    fn note(&mut self, text: String) {
        match &mut self.detail {
            Some(d) => {
                d.push_str("; ");
                d.push_str(&text);
            }
            None => self.detail = Some(text),
        }
    }

    /// Records a γ_I solve of `g` and sets the status from `expected`. The
    /// certificate is re-validated before the value is trusted.
    fn judge(mut self, g: &Graph, result: Result<SolveResult>) -> Self {
        match result {
            Ok(r) => {
                self.computed = Some(r.value);
                self.certificate = Some(r.certificate.to_string());
                self.solved.push(g.clone());
                let valid = is_idf(g, &r.certificate).unwrap_or(false) && r.certificate.weight() == r.value;
                self.status =
                    if valid && r.optimal && self.expected.admits(r.value) { Status::Pass } else { Status::Fail };
                if !valid {
                    self.note("certificate is not an IDF of the reported weight".into());
                }
            }
            Err(Error::BudgetExceeded { upper_bound }) => {
                self.status = Status::BudgetExceeded;
                match upper_bound {
                    Some(ub) => self.note(format!("budget exceeded, best found {ub}")),
                    None => self.note("budget exceeded before any IDF was found".into()),
                }
            }
            Err(e) => {
                self.status = Status::Fail;
                self.note(e.to_string());
            }
        }
        self
    }

    /// Fails the row unless `ok`.
    fn require(mut self, ok: bool, why: impl FnOnce() -> String) -> Self {
        if !ok {
            self.status = Status::Fail;
            self.note(why());
        }
        self
    }

    fn require_witness(self, w: Result<Witness>, expected: u32) -> Self {
        match w {
            Ok(w) if w.is_valid() && w.weight() == expected => self,
            Ok(w) => {
                let (valid, weight) = (w.is_valid(), w.weight());
                self.require(false, || format!("witness {} (valid: {valid}, weight {weight})", w.labeling))
            }
            Err(e) => self.require(false, || format!("witness: {e}")),
        }
    }
}

impl Ctx<'_> {
    fn italian(&self, g: &Graph) -> Result<SolveResult> {
        gamma_italian_with(g, &self.solver)
    }

    fn k1(&self, g: &Graph) -> Graph {
        corona_k1(g).expect("base graphs are small").0
    }

    fn paths(&self) -> Vec<TheoremReport> {
        let ns: Vec<usize> = (1..=self.config.cap(self.config.path_max_n)).collect();
        ns.into_par_iter()
            .map(|n| {
                let g = Graph::path(n).expect("n >= 1");
                let value = witnesses::formula_path(n).expect("n >= 1");
                row(TheoremId::T1, format!("P_{n}"), &g, Expected::Exact { value }).judge(&g, self.italian(&g))
            })
            .collect()
    }

    fn general_corona(&self) -> Vec<TheoremReport> {
        let c = self.config;
        let mut rng = rng_for(c.seed, "T2");
        let g_max = c.cap(c.corona_g_max_n);
        let pairs: Vec<(Graph, Graph)> = (0..c.corona_pairs)
            .map(|_| {
                let n_g = rng.random_range(1..=g_max);
                let n_h = rng.random_range(c.corona_h_min_n..=c.corona_h_max_n.max(c.corona_h_min_n));
                (random_graph(&mut rng, n_g), random_graph(&mut rng, n_h))
            })
            .collect();
        pairs
            .into_par_iter()
            .map(|(g, h)| {
                let value = witnesses::formula_corona_general(g.n());
                let instance = format!("G={} H={}", g.to_graph6(), h.to_graph6());
                match corona(&g, &h) {
                    Ok((gh, _)) => row(TheoremId::T2, instance, &gh, Expected::Exact { value })
                        .judge(&gh, self.italian(&gh))
                        .require_witness(witnesses::witness_corona(&g, &h), value),
                    Err(e) => {
                        row(TheoremId::T2, instance, &g, Expected::Exact { value }).require(false, || e.to_string())
                    }
                }
            })
            .collect()
    }

    fn corona_bounds(&self) -> Vec<TheoremReport> {
        let c = self.config;
        let mut rng = rng_for(c.seed, "T3");
        let n_max = c.cap(c.bounds_max_n);
        let graphs: Vec<Graph> = (0..c.bounds_samples)
            .map(|_| {
                let n = rng.random_range(1..=n_max);
                random_graph(&mut rng, n)
            })
            .collect();
        graphs
            .into_par_iter()
            .map(|g| {
                let (lo, hi) = witnesses::bounds_corona_k1(g.n()).expect("n >= 1");
                let gk = self.k1(&g);
                row(TheoremId::T3, format!("G={} o K1", g.to_graph6()), &gk, Expected::Range { lo, hi })
                    .judge(&gk, self.italian(&gk))
            })
            .collect()
    }

    fn realization(&self) -> Vec<TheoremReport> {
        let n_max = self.config.cap(self.config.realize_max_n);
        let mut jobs = Vec::new();
        for n in 1..=n_max {
            jobs.push((n, n as u32));
            jobs.extend((n as u32 + 1..=2 * n as u32).map(|a| (n, a)));
            jobs.push((n, 2 * n as u32 + 1));
        }
        jobs.into_par_iter()
            .map(|(n, a)| {
                let instance = format!("n={n} a={a}");
                let in_range = (n as u32 + 1..=2 * n as u32).contains(&a);
                if !in_range {
                    let error = Error::NotRealizable { n, a }.to_string();
                    let empty = Graph::with_vertices(0).expect("n = 0 is allowed");
                    let mut r = row(TheoremId::T4, instance, &empty, Expected::Rejected { error: error.clone() });
                    match witnesses::realize_corona_k1(n, a) {
                        Err(e) if e.to_string() == error => r.status = Status::Pass,
                        Err(e) => r.note(format!("wrong error: {e}")),
                        Ok(g) => r.note(format!("accepted, produced {}", g.to_graph6())),
                    }
                    return r;
                }
                let g = witnesses::realize_corona_k1(n, a).expect("a is in range");
                let gk = self.k1(&g);
                let mut r = row(TheoremId::T4, instance, &gk, Expected::Exact { value: a })
                    .judge(&gk, self.italian(&gk))
                    .require_witness(witnesses::witness_realization(n, a), a);
                r.note(format!("G={}", g.to_graph6()));
                r
            })
            .collect()
    }

    fn iff(&self, id: TheoremId) -> Vec<TheoremReport> {
        let c = self.config;
        let exhaustive = c.cap(c.iff_exhaustive_max_n);
        let mut graphs: Vec<Graph> = (1..=exhaustive).flat_map(labeled_graphs).collect();
        let mut rng = rng_for(c.seed, id.as_str());
        for n in exhaustive + 1..=c.cap(c.iff_random_max_n) {
            graphs.extend((0..c.iff_random_samples).map(|_| random_graph(&mut rng, n)));
        }
        graphs
            .into_par_iter()
            .map(|g| {
                let n = g.n() as u32;
                let (value, condition, holds) = match id {
                    TheoremId::T5 => (n + 1, "G has a universal vertex", !g.universal_vertices().is_empty()),
                    _ => (2 * n, "G is edgeless", g.edge_count() == 0),
                };
                let gk = self.k1(&g);
                let expected = Expected::Iff { value, condition: condition.into(), condition_holds: holds };
                row(id, format!("G={} o K1", g.to_graph6()), &gk, expected).judge(&gk, self.italian(&gk))
            })
            .collect()
    }

    fn bipartite(&self) -> Vec<TheoremReport> {
        let m = self.config.cap(self.config.bipartite_max);
        let pq: Vec<(usize, usize)> = (1..=m).flat_map(|p| (p..=m).map(move |q| (p, q))).collect();
        pq.into_par_iter()
            .map(|(p, q)| {
                let value = witnesses::formula_bipartite_corona(p, q).expect("p, q >= 1");
                let g = Graph::complete_bipartite(p, q).expect("p, q >= 1");
                let gk = self.k1(&g);
                row(TheoremId::T7, format!("K_{{{p},{q}}} o K1"), &gk, Expected::Exact { value })
                    .judge(&gk, self.italian(&gk))
                    .require_witness(witnesses::witness_bipartite_corona(p, q), value)
            })
            .collect()
    }

    fn double_corona(&self) -> Vec<TheoremReport> {
        let c = self.config;
        let mut graphs: Vec<Graph> = (1..=c.cap(c.double_corona_exhaustive_max_n))
            .flat_map(labeled_graphs)
            .filter(Graph::is_connected)
            .collect();
        let mut rng = rng_for(c.seed, "T8");
        let n = c.cap(c.double_corona_random_n);
        graphs.extend((0..c.double_corona_random_samples).map(|_| random_graph(&mut rng, n)));
        graphs
            .into_par_iter()
            .map(|g| {
                let value = witnesses::formula_double_corona(g.n()).expect("n >= 1");
                let gkk = self.k1(&self.k1(&g));
                row(TheoremId::T8, format!("(G={} o K1) o K1", g.to_graph6()), &gkk, Expected::Exact { value })
                    .judge(&gkk, self.italian(&gkk))
                    .require_witness(witnesses::witness_double_corona(&g), value)
            })
            .collect()
    }

    /// Solver rows up to `path_corona_max_n`, then witness-only rows up to
    /// `path_corona_witness_max_n`.
    fn path_or_cycle_corona(&self, id: TheoremId) -> Vec<TheoremReport> {
        let c = self.config;
        let (first, name) = if id == TheoremId::T9 { (1, "P") } else { (3, "C") };
        let solve_max = c.cap(c.path_corona_max_n);
        let ns: Vec<usize> = (first..=c.cap(c.path_corona_witness_max_n).max(solve_max)).collect();
        ns.into_par_iter()
            .map(|n| {
                let (base, value, witness) = if id == TheoremId::T9 {
                    (Graph::path(n), witnesses::formula_corona_k1_path(n), witnesses::witness_path_corona(n))
                } else {
                    (Graph::cycle(n), witnesses::formula_corona_k1_cycle(n), witnesses::witness_cycle_corona(n))
                };
                let value = value.expect("n is in range");
                let gk = self.k1(&base.expect("n is in range"));
                let r = row(id, format!("{name}_{n} o K1"), &gk, Expected::Exact { value });
                if n <= solve_max {
                    return r.judge(&gk, self.italian(&gk)).require_witness(witness, value);
                }
                match witness {
                    Ok(w) => {
                        let mut r = r;
                        r.computed = Some(w.weight());
                        r.certificate = Some(w.labeling.to_string());
                        r.status = if w.is_valid() && w.weight() == value { Status::Pass } else { Status::Fail };
                        r.note("witness only".into());
                        r
                    }
                    Err(e) => r.require(false, || e.to_string()),
                }
            })
            .collect()
    }

    fn lemma_catalog(&self) -> Vec<Graph> {
        (1..=self.config.cap(self.config.lemma_max_n)).flat_map(labeled_graphs).collect()
    }

    /// Some minimum IDF leaves every pendant vertex below 2, and the
    /// reassignment works for each pendant on every minimum IDF.
    fn pendant_lemma(&self) -> Vec<TheoremReport> {
        let graphs: Vec<Graph> =
            self.lemma_catalog().into_iter().filter(|g| !g.pendant_vertices().is_empty()).collect();
        graphs
            .into_par_iter()
            .map(|g| {
                let pendants = g.pendant_vertices();
                let property = format!("no pendant vertex of {pendants:?} is labelled 2");
                let r = row(TheoremId::L1, format!("G={}", g.to_graph6()), &g, Expected::Exists { property });
                exists_row(
                    r,
                    &g,
                    enumerate_minimum_idfs(&g),
                    |f| pendants.iter().all(|&u| f.get(u) != 2),
                    |f| {
                        for &u in &pendants {
                            for variant in [PendantReassignment::MoveToSupport, PendantReassignment::Split] {
                                let out = normalize_pendant(&g, f, u, variant);
                                check_normalized(&g, f, out, |h| h.get(u) != 2)
                                    .map_err(|e| format!("normalize_pendant({f}, {u}, {variant:?}): {e}"))?;
                            }
                        }
                        Ok(())
                    },
                )
            })
            .collect()
    }

    /// One row per ordered twin pair `(u, u2)`.
    fn twin_lemma(&self, id: TheoremId) -> Vec<TheoremReport> {
        let relation = if id == TheoremId::L2 { TwinRelation::True } else { TwinRelation::False };
        let jobs: Vec<(Graph, Vec<(VertexId, VertexId)>)> = self
            .lemma_catalog()
            .into_iter()
            .filter_map(|g| {
                let n = g.n();
                let pairs: Vec<_> = (0..n)
                    .flat_map(|u| (0..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| u != v && g.twin_relation(u, v).ok() == Some(relation))
                    .collect();
                (!pairs.is_empty()).then_some((g, pairs))
            })
            .collect();
        jobs.into_par_iter()
            .flat_map_iter(|(g, pairs)| {
                let minimum = enumerate_minimum_idfs(&g);
                pairs.into_iter().map(move |(u, u2)| {
                    let (property, holds): (String, fn(u8) -> bool) = if id == TheoremId::L2 {
                        (format!("f({u2}) = 0"), |x| x == 0)
                    } else {
                        (format!("f({u2}) != 2"), |x| x != 2)
                    };
                    let r = row(id, format!("G={} u={u} u'={u2}", g.to_graph6()), &g, Expected::Exists { property });
                    exists_row(
                        r,
                        &g,
                        minimum.clone(),
                        |f| holds(f.get(u2)),
                        |f| {
                            let out = if id == TheoremId::L2 {
                                normalize_true_twin(&g, f, u, u2)
                            } else {
                                normalize_false_twin(&g, f, u, u2)
                            };
                            check_normalized(&g, f, out, |h| holds(h.get(u2)))
                                .map_err(|e| format!("normalize({f}): {e}"))
                        },
                    )
                })
            })
            .collect()
    }

    /// One row per (G, u): γ_I of G plus a true or false twin of u.
    fn twin_growth(&self, id: TheoremId) -> Vec<TheoremReport> {
        let graphs: Vec<Graph> = (1..=self.config.cap(self.config.twin_max_n)).flat_map(labeled_graphs).collect();
        graphs
            .into_par_iter()
            .flat_map_iter(|g| {
                let base = self.italian(&g);
                (0..g.n()).map(move |u| {
                    let h = if id == TheoremId::TT { add_true_twin(&g, u) } else { add_false_twin(&g, u) }
                        .expect("twin of an existing vertex");
                    let instance = format!("G={} u={u}", g.to_graph6());
                    match &base {
                        Ok(b) => {
                            let expected = Expected::Range { lo: b.value, hi: b.value + 1 };
                            let mut r = row(id, instance, &h, expected).judge(&h, self.italian(&h));
                            r.solved.push(g.clone());
                            r.note(format!("gamma_I(G) = {} by {}", b.value, b.certificate));
                            r
                        }
                        Err(e) => {
                            let mut r =
                                row(id, instance, &h, Expected::Range { lo: 0, hi: 0 }).judge(&g, Err(e.clone()));
                            r.solved.clear();
                            r
                        }
                    }
                })
            })
            .collect()
    }

    fn sandwich_row(&self, g: &Graph) -> TheoremReport {
        let instance = format!("G={}", g.to_graph6());
        let (gamma, roman) = match (gamma_domination_with(g, &self.solver), gamma_roman_with(g, &self.solver)) {
            (Ok(d), Ok(r)) => (d, r),
            (Err(e), _) | (_, Err(e)) => {
                return row(TheoremId::SANDWICH, instance, g, Expected::Sandwich { gamma: 0, gamma_roman: 0 })
                    .judge(g, Err(e));
            }
        };
        let expected = Expected::Sandwich { gamma: gamma.value, gamma_roman: roman.value };
        let set_ok =
            is_dominating(g, &gamma.certificate).unwrap_or(false) && gamma.certificate.len() == gamma.value as usize;
        let roman_ok = is_rdf(g, &roman.certificate).unwrap_or(false) && roman.certificate.weight() == roman.value;
        let mut r = row(TheoremId::SANDWICH, instance, g, expected)
            .judge(g, self.italian(g))
            .require(set_ok && gamma.optimal, || format!("bad dominating set {:?}", gamma.certificate))
            .require(roman_ok && roman.optimal, || format!("bad roman certificate {}", roman.certificate));
        r.note(format!("dominating set {:?}; roman {}", gamma.certificate, roman.certificate));
        r.solved.clear();
        r
    }
}

/// Passes when some labeling in `minimum` satisfies `property` and
/// `each` succeeds on all of them; the certificate is the first witness.
fn exists_row(
    mut r: TheoremReport,
    g: &Graph,
    minimum: Result<Vec<Labeling>>,
    property: impl Fn(&Labeling) -> bool,
    each: impl Fn(&Labeling) -> std::result::Result<(), String>,
) -> TheoremReport {
    let minimum = match minimum {
        Ok(m) => m,
        Err(e) => return r.require(false, || format!("enumeration: {e}")),
    };
    let Some(first) = minimum.first() else {
        return r.require(false, || "no minimum IDF enumerated".into());
    };
    r.computed = Some(first.weight());
    r.solved.push(g.clone());
    match minimum.iter().find(|f| property(f)) {
        Some(f) => {
            r.certificate = Some(f.to_string());
            r.status = Status::Pass;
        }
        None => r.note(format!("none of {} minimum IDFs has the property", minimum.len())),
    }
    if let Some(err) = minimum.iter().find_map(|f| each(f).err()) {
        r = r.require(false, || err);
    }
    r
}

fn check_normalized(
    g: &Graph,
    f: &Labeling,
    out: Result<Labeling>,
    property: impl Fn(&Labeling) -> bool,
) -> std::result::Result<(), String> {
    let h = out.map_err(|e| e.to_string())?;
    if !is_idf(g, &h).unwrap_or(false) {
        return Err(format!("{h} is not an IDF"));
    }
    if h.weight() != f.weight() {
        return Err(format!("{h} changed the weight"));
    }
    if !property(&h) {
        return Err(format!("{h} lacks the property"));
    }
    Ok(())
}
