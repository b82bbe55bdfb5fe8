//! Named verification suites. Each suite is a list of independent cases run
//! on the rayon pool; records come back in case order, so a report does not
//! depend on the number of workers.

mod samples;
mod suites;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::betti::FieldSpec;
use crate::{Error, Result};

pub use samples::{
    admissible_multiplication, all_graphs, chain_graph, family_sample, graph_from_pairs,
    iso_classes, random_graph,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseRecord {
    pub id: String,
    pub expected: String,
    pub computed: String,
    pub status: CaseStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walltime_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub tool: String,
    pub version: String,
    pub field: String,
    pub summary: Summary,
    pub cases: Vec<CaseRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walltime_ms: Option<u64>,
}

impl SuiteReport {
    /// No failures and no skipped cases.
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0 && self.summary.skipped == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| c.status != CaseStatus::Pass)
    }

    /// Aligned text table.
    pub fn pretty(&self) -> String {
        let w_id = self
            .cases
            .iter()
            .map(|c| c.id.chars().count())
            .max()
            .unwrap_or(4)
            .max(4);
        let w_ex = self
            .cases
            .iter()
            .map(|c| c.expected.chars().count())
            .max()
            .unwrap_or(8)
            .max(8);
        let w_co = self
            .cases
            .iter()
            .map(|c| c.computed.chars().count())
            .max()
            .unwrap_or(8)
            .max(8);
        let pad =
            |s: &str, w: usize| format!("{s}{}", " ".repeat(w.saturating_sub(s.chars().count())));
        let mut out = format!(
            "suite {} over {} ({} {})\n",
            self.suite, self.field, self.tool, self.version
        );
        out.push_str(&format!(
            "{}  {}  {}  status\n",
            pad("case", w_id),
            pad("expected", w_ex),
            pad("computed", w_co)
        ));
        for c in &self.cases {
            let status = match c.status {
                CaseStatus::Pass => "pass",
                CaseStatus::Fail => "FAIL",
                CaseStatus::Skipped => "skipped",
            };
            out.push_str(&format!(
                "{}  {}  {}  {status}",
                pad(&c.id, w_id),
                pad(&c.expected, w_ex),
                pad(&c.computed, w_co)
            ));
            if c.status != CaseStatus::Pass {
                if let Some(d) = &c.detail {
                    out.push_str(&format!("  ({d})"));
                }
            }
            out.push('\n');
        }
        let s = self.summary;
        out.push_str(&format!(
            "{} cases: {} passed, {} failed, {} skipped\n",
            s.total, s.passed, s.failed, s.skipped
        ));
        out
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub field: FieldSpec,
    /// Record wall times; off gives byte-identical reports.
    pub timing: bool,
    /// Cases not started within this time are reported as skipped.
    pub budget: Option<Duration>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            field: FieldSpec::RATIONALS,
            timing: true,
            budget: None,
        }
    }
}

/// What a case computed.
pub(crate) struct Outcome {
    expected: String,
    computed: String,
    detail: Option<String>,
}

impl Outcome {
    pub(crate) fn new(expected: impl ToString, computed: impl ToString) -> Self {
        Outcome {
            expected: expected.to_string(),
            computed: computed.to_string(),
            detail: None,
        }
    }

    pub(crate) fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

type CaseFn = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

pub(crate) struct Case {
    id: String,
    run: CaseFn,
}

pub(crate) fn case(
    id: impl Into<String>,
    run: impl Fn() -> Result<Outcome> + Send + Sync + 'static,
) -> Case {
    Case {
        id: id.into(),
        run: Box::new(run),
    }
}

fn run_cases(name: &str, cases: Vec<Case>, opts: &VerifyOptions) -> SuiteReport {
    let start = Instant::now();
    let records: Vec<CaseRecord> = cases
        .into_par_iter()
        .map(|c| {
            if let Some(b) = opts.budget {
                if start.elapsed() > b {
                    return skipped(c.id, format!("time budget of {}s exhausted", b.as_secs()));
                }
            }
            let t = Instant::now();
            let result = (c.run)();
            let ms = opts.timing.then(|| t.elapsed().as_millis() as u64);
            match result {
                Ok(o) => CaseRecord {
                    status: if o.expected == o.computed {
                        CaseStatus::Pass
                    } else {
                        CaseStatus::Fail
                    },
                    id: c.id,
                    expected: o.expected,
                    computed: o.computed,
                    detail: o.detail,
                    walltime_ms: ms,
                },
                Err(e @ Error::TooLarge { .. }) => skipped(c.id, e.to_string()),
                Err(e) => CaseRecord {
                    id: c.id,
                    expected: "no error".into(),
                    computed: "error".into(),
                    status: CaseStatus::Fail,
                    detail: Some(e.to_string()),
                    walltime_ms: ms,
                },
            }
        })
        .collect();
    let mut summary = Summary {
        total: records.len(),
        ..Summary::default()
    };
    for r in &records {
        match r.status {
            CaseStatus::Pass => summary.passed += 1,
            CaseStatus::Fail => summary.failed += 1,
            CaseStatus::Skipped => summary.skipped += 1,
        }
    }
    SuiteReport {
        suite: name.to_string(),
        tool: "regulab".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        field: opts.field.to_string(),
        summary,
        cases: records,
        walltime_ms: opts.timing.then(|| start.elapsed().as_millis() as u64),
    }
}

fn skipped(id: String, why: String) -> CaseRecord {
    CaseRecord {
        id,
        expected: String::new(),
        computed: String::new(),
        status: CaseStatus::Skipped,
        detail: Some(why),
        walltime_ms: None,
    }
}

/// Suite names accepted by [`run_suite`].
pub fn suite_names() -> Vec<&'static str> {
    suites::REGISTRY.iter().map(|(n, _)| *n).collect()
}

pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<SuiteReport> {
    let canonical = suites::ALIASES
        .iter()
        .find(|(a, _)| *a == name)
        .map_or(name, |(_, c)| c);
    let (n, build) = suites::REGISTRY
        .iter()
        .find(|(n, _)| *n == canonical)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    Ok(run_cases(n, build(opts)?, opts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert_eq!(
            run_suite("nope", &VerifyOptions::default()),
            Err(Error::UnknownSuite("nope".into()))
        );
    }

    #[test]
    fn summary_matches_records() {
        let cases = vec![
            case("a", || Ok(Outcome::new(1, 1))),
            case("b", || Ok(Outcome::new(1, 2))),
            case("c", || {
                Err(Error::TooLarge {
                    vertices: 30,
                    limit: 24,
                })
            }),
            case("d", || Err(Error::Edgeless)),
        ];
        let opts = VerifyOptions {
            timing: false,
            ..VerifyOptions::default()
        };
        let r = run_cases("t", cases, &opts);
        assert_eq!(
            r.summary,
            Summary {
                total: 4,
                passed: 1,
                failed: 2,
                skipped: 1
            }
        );
        let ids: Vec<&str> = r.cases.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids, ["a", "b", "c", "d"]);
        assert!(r.cases.iter().all(|c| c.walltime_ms.is_none()));
        assert!(r.pretty().contains("FAIL"));
    }

    #[test]
    fn exhausted_budget_skips() {
        let cases = vec![case("slow", || Ok(Outcome::new(1, 1)))];
        let opts = VerifyOptions {
            budget: Some(Duration::ZERO),
            ..VerifyOptions::default()
        };
        let r = run_cases("t", cases, &opts);
        assert_eq!(r.summary.skipped, 1);
    }
}
