//! Mechanical checks of the closed forms, bounds and characterisations for
//! γ_I on coronas and twin extensions, with JSON reports.
//!
//! Every report row names the graph it was computed on (graph6) and, when a
//! solve happened, an optimal labeling that can be re-validated with
//! [`is_idf`](crate::labeling::is_idf).

pub mod catalog;
mod checks;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    L1,
    L2,
    L3,
    TT,
    FT,
    SANDWICH,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::T8,
        TheoremId::T9,
        TheoremId::T10,
        TheoremId::L1,
        TheoremId::L2,
        TheoremId::L3,
        TheoremId::TT,
        TheoremId::FT,
        TheoremId::SANDWICH,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::T4 => "T4",
            TheoremId::T5 => "T5",
            TheoremId::T6 => "T6",
            TheoremId::T7 => "T7",
            TheoremId::T8 => "T8",
            TheoremId::T9 => "T9",
            TheoremId::T10 => "T10",
            TheoremId::L1 => "L1",
            TheoremId::L2 => "L2",
            TheoremId::L3 => "L3",
            TheoremId::TT => "TT",
            TheoremId::FT => "FT",
            TheoremId::SANDWICH => "SANDWICH",
        }
    }

    /// One-line statement of what the id checks.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::T1 => "gamma_I(P_n) = ceil((n+1)/2)",
            TheoremId::T2 => "gamma_I(G o H) = 2|V(G)| for |V(H)| >= 2",
            TheoremId::T3 => "n+1 <= gamma_I(G o K_1) <= 2n",
            TheoremId::T4 => "every a in [n+1, 2n] is gamma_I(G o K_1) for some G on n vertices, and nothing else is",
            TheoremId::T5 => "gamma_I(G o K_1) = n+1 iff G has a universal vertex",
            TheoremId::T6 => "gamma_I(G o K_1) = 2n iff G is edgeless",
            TheoremId::T7 => "gamma_I(K_{p,q} o K_1) = p+q+1 if min(p,q) = 1, else p+q+2",
            TheoremId::T8 => "gamma_I((G o K_1) o K_1) = 3n",
            TheoremId::T9 => "gamma_I(P_n o K_1) = ceil(4n/3)",
            TheoremId::T10 => "gamma_I(C_n o K_1) = ceil(4n/3)",
            TheoremId::L1 => "some gamma_I-function gives a pendant vertex a value other than 2",
            TheoremId::L2 => "for true twins u, u' some gamma_I-function has f(u') = 0",
            TheoremId::L3 => "for false twins u, u' some gamma_I-function has f(u') != 2",
            TheoremId::TT => "adding a true twin raises gamma_I by 0 or 1",
            TheoremId::FT => "adding a false twin raises gamma_I by 0 or 1",
            TheoremId::SANDWICH => "gamma <= gamma_I <= gamma_R <= 2 gamma",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        TheoremId::ALL.into_iter().find(|id| id.as_str() == upper).ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Sizes, sample counts, seed and time budget for a verification run.
///
/// The `*_max_n` fields bound the order of the base graph an operator is
/// applied to; `max_n`, when set, caps all of them at once.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub max_n: Option<usize>,
    /// Per-solve wall-clock budget in seconds.
    pub budget_secs: u64,
    pub path_max_n: usize,
    pub corona_pairs: usize,
    pub corona_g_max_n: usize,
    pub corona_h_min_n: usize,
    pub corona_h_max_n: usize,
    pub bounds_samples: usize,
    pub bounds_max_n: usize,
    pub realize_max_n: usize,
    pub iff_exhaustive_max_n: usize,
    pub iff_random_max_n: usize,
    pub iff_random_samples: usize,
    pub bipartite_max: usize,
    pub double_corona_exhaustive_max_n: usize,
    pub double_corona_random_samples: usize,
    pub double_corona_random_n: usize,
    pub path_corona_max_n: usize,
    pub path_corona_witness_max_n: usize,
    pub lemma_max_n: usize,
    pub twin_max_n: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            max_n: None,
            budget_secs: 60,
            path_max_n: 16,
            corona_pairs: 50,
            corona_g_max_n: 5,
            corona_h_min_n: 2,
            corona_h_max_n: 3,
            bounds_samples: 100,
            bounds_max_n: 8,
            realize_max_n: 6,
            iff_exhaustive_max_n: 5,
            iff_random_max_n: 8,
            iff_random_samples: 10,
            bipartite_max: 4,
            double_corona_exhaustive_max_n: 4,
            double_corona_random_samples: 20,
            double_corona_random_n: 5,
            path_corona_max_n: 9,
            path_corona_witness_max_n: 30,
            lemma_max_n: 5,
            twin_max_n: 5,
        }
    }
}

impl SuiteConfig {
    pub fn with_seed(seed: u64) -> Self {
        SuiteConfig { seed, ..SuiteConfig::default() }
    }

    /// The full-size exhaustive regime: lemma and twin checks on every labeled graph with `n <= 6`.
    pub fn exhaustive() -> Self {
        SuiteConfig { lemma_max_n: 6, twin_max_n: 6, ..SuiteConfig::default() }
    }

    pub(crate) fn cap(&self, n: usize) -> usize {
        self.max_n.map_or(n, |m| n.min(m))
    }

    pub(crate) fn budget(&self) -> Duration {
        Duration::from_secs(self.budget_secs)
    }
}

/// What an instance's computed value is held against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Expected {
    Exact {
        value: u32,
    },
    Range {
        lo: u32,
        hi: u32,
    },
    /// `computed == value` exactly when `condition` holds of the instance.
    Iff {
        value: u32,
        condition: String,
        condition_holds: bool,
    },
    /// Some minimum IDF has `property`; the certificate is one.
    Exists {
        property: String,
    },
    /// `gamma <= computed <= gamma_roman <= 2 gamma`.
    Sandwich {
        gamma: u32,
        gamma_roman: u32,
    },
    /// The operation must refuse the instance.
    Rejected {
        error: String,
    },
}

impl Expected {
    pub fn admits(&self, computed: u32) -> bool {
        match self {
            Expected::Exact { value } => computed == *value,
            Expected::Range { lo, hi } => (*lo..=*hi).contains(&computed),
            Expected::Iff { value, condition_holds, .. } => (computed == *value) == *condition_holds,
            Expected::Exists { .. } => true,
            Expected::Sandwich { gamma, gamma_roman } => {
                *gamma <= computed && computed <= *gamma_roman && *gamma_roman <= 2 * *gamma
            }
            Expected::Rejected { .. } => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub instance: String,
    /// graph6 of the graph `computed` and `certificate` refer to.
    pub graph: String,
    pub expected: Expected,
    pub computed: Option<u32>,
    pub certificate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    pub status: Status,
    /// Graphs the row's solves touched; fed to the sandwich check.
    #[serde(skip)]
    pub(crate) solved: Vec<Graph>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub exceeded: usize,
}

impl Summary {
    fn of(rows: &[TheoremReport]) -> Self {
        let mut s = Summary::default();
        for r in rows {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::BudgetExceeded => s.exceeded += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteHeader {
    pub seed: u64,
    pub theorems: Vec<TheoremId>,
    pub config: SuiteConfig,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: SuiteHeader,
    pub results: Vec<TheoremReport>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.exceeded == 0
    }

    /// Per-theorem counts, in theorem order.
    pub fn by_theorem(&self) -> Vec<(TheoremId, Summary)> {
        let mut out: Vec<(TheoremId, Summary)> = Vec::new();
        for id in &self.suite.theorems {
            let rows: Vec<TheoremReport> = self.results.iter().filter(|r| r.theorem == *id).cloned().collect();
            out.push((*id, Summary::of(&rows)));
        }
        out
    }
}

/// Rows for one id. `SANDWICH` on its own runs every other check first to
/// collect the graphs they solve.
pub fn check_theorem(id: TheoremId, config: &SuiteConfig) -> Vec<TheoremReport> {
    if id == TheoremId::SANDWICH {
        let rows: Vec<TheoremReport> =
            TheoremId::ALL.iter().filter(|&&other| other != id).flat_map(|&other| checks::run(other, config)).collect();
        check_sandwich(&rows, config)
    } else {
        checks::run(id, config)
    }
}

/// Sandwich rows for every distinct graph solved while producing `rows`.
pub fn check_sandwich(rows: &[TheoremReport], config: &SuiteConfig) -> Vec<TheoremReport> {
    checks::sandwich(rows.iter().flat_map(|r| r.solved.iter().cloned()).collect(), config)
}

/// Runs the given ids and assembles a report. Rows are ordered by id, then
/// by instance generation order, independent of thread scheduling.
pub fn run_theorems(ids: &[TheoremId], config: &SuiteConfig) -> SuiteReport {
    let mut ids = ids.to_vec();
    ids.sort();
    ids.dedup();

    let mut results: Vec<TheoremReport> =
        ids.iter().filter(|&&id| id != TheoremId::SANDWICH).flat_map(|&id| checks::run(id, config)).collect();
    if ids.contains(&TheoremId::SANDWICH) {
        let sandwich = if ids == [TheoremId::SANDWICH] {
            check_theorem(TheoremId::SANDWICH, config)
        } else {
            check_sandwich(&results, config)
        };
        results.extend(sandwich);
    }

    let summary = Summary::of(&results);
    SuiteReport { suite: SuiteHeader { seed: config.seed, theorems: ids, config: config.clone() }, results, summary }
}

pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    run_theorems(&TheoremId::ALL, config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_parse() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!("sandwich".parse::<TheoremId>().unwrap(), TheoremId::SANDWICH);
        assert_eq!("T11".parse::<TheoremId>(), Err(Error::UnknownTheorem("T11".into())));
    }

    #[test]
    fn expected_admits() {
        assert!(Expected::Exact { value: 3 }.admits(3));
        assert!(!Expected::Range { lo: 2, hi: 4 }.admits(5));
        let iff = |holds| Expected::Iff { value: 4, condition: "c".into(), condition_holds: holds };
        assert!(iff(true).admits(4) && !iff(true).admits(5));
        assert!(iff(false).admits(5) && !iff(false).admits(4));
        assert!(Expected::Sandwich { gamma: 2, gamma_roman: 4 }.admits(3));
        assert!(!Expected::Sandwich { gamma: 2, gamma_roman: 5 }.admits(3));
    }

    #[test]
    fn expected_json_shape() {
        let e = Expected::Range { lo: 4, hi: 6 };
        assert_eq!(serde_json::to_string(&e).unwrap(), r#"{"kind":"range","lo":4,"hi":6}"#);
        assert_eq!(serde_json::to_string(&Status::BudgetExceeded).unwrap(), r#""budget_exceeded""#);
    }

    fn small() -> SuiteConfig {
        SuiteConfig {
            corona_pairs: 5,
            bounds_samples: 10,
            iff_exhaustive_max_n: 4,
            iff_random_max_n: 5,
            iff_random_samples: 2,
            double_corona_exhaustive_max_n: 3,
            double_corona_random_samples: 2,
            double_corona_random_n: 4,
            path_corona_witness_max_n: 12,
            lemma_max_n: 4,
            twin_max_n: 4,
            ..SuiteConfig::with_seed(3)
        }
    }

    #[test]
    fn path_corona_values() {
        let config = SuiteConfig { path_corona_witness_max_n: 9, ..small() };
        let rows = check_theorem(TheoremId::T9, &config);
        let values: Vec<u32> = rows.iter().map(|r| r.computed.unwrap()).collect();
        assert_eq!(values, vec![2, 3, 4, 6, 7, 8, 10, 11, 12]);
        assert!(rows.iter().all(|r| r.status == Status::Pass && r.detail.is_none()));
    }

    #[test]
    fn universal_vertex_iff_on_small_graphs() {
        let rows = check_theorem(TheoremId::T5, &SuiteConfig { iff_random_max_n: 4, ..small() });
        assert_eq!(rows.len(), 1 + 2 + 8 + 64);
        assert!(rows.iter().all(|r| r.status == Status::Pass));
        assert!(rows.iter().any(|r| matches!(r.expected, Expected::Iff { condition_holds: false, .. })));
    }

    #[test]
    fn pendant_lemma_on_p4() {
        let p4 = Graph::path(4).unwrap().to_graph6();
        let rows = check_theorem(TheoremId::L1, &small());
        let row = rows.iter().find(|r| r.graph == p4).unwrap();
        assert_eq!(row.status, Status::Pass);
        assert_eq!(row.computed, Some(3));
        let f: crate::Labeling = row.certificate.as_deref().unwrap().parse().unwrap();
        assert!(f.get(0) != 2 && f.get(3) != 2);
    }

    #[test]
    fn out_of_range_realizations_are_rejected() {
        let rows = check_theorem(TheoremId::T4, &SuiteConfig { realize_max_n: 3, ..small() });
        let rejected: Vec<_> = rows.iter().filter(|r| matches!(r.expected, Expected::Rejected { .. })).collect();
        assert_eq!(rejected.len(), 6);
        assert!(rows.iter().all(|r| r.status == Status::Pass));
    }

    #[test]
    fn degenerate_suite_passes() {
        let report = run_suite(&SuiteConfig { max_n: Some(1), ..SuiteConfig::default() });
        assert!(report.passed(), "{}", report.to_json());
        let t3 = report.results.iter().find(|r| r.theorem == TheoremId::T3).unwrap();
        assert_eq!(t3.computed, Some(2));
    }

    #[test]
    fn small_suite_passes_and_is_deterministic() {
        let a = run_suite(&small());
        assert!(a.passed());
        assert!(a.results.iter().any(|r| r.theorem == TheoremId::SANDWICH));
        assert_eq!(a.to_json(), run_suite(&small()).to_json());
        let other = run_suite(&SuiteConfig { seed: 4, ..small() });
        assert_ne!(a.to_json(), other.to_json());
    }

    #[test]
    fn sandwich_alone_matches_suite() {
        let config = SuiteConfig { lemma_max_n: 3, twin_max_n: 3, ..small() };
        let alone = check_theorem(TheoremId::SANDWICH, &config);
        let suite = run_suite(&config);
        let in_suite: Vec<_> = suite.results.into_iter().filter(|r| r.theorem == TheoremId::SANDWICH).collect();
        assert_eq!(alone, in_suite);
    }
}
