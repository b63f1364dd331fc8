use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::enumerate::{enumerate_descartes_shard, enumerate_pyth_shard, enumerate_uv_shard};
use crate::error::Error;
use crate::family::{Family, Params, Tuple, TupleShape};
use crate::solvers::solve_quintuple_with_stats;

/// Failure records kept per report; the counter keeps counting past this.
pub const MAX_FAILURE_RECORDS: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureRecord {
    pub input: Vec<String>,
    pub error: String,
}

/// Outcome of solving and re-evaluating every tuple of a family up to a bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub family: String,
    pub bound: u32,
    pub total: u64,
    pub failure_count: u64,
    pub failures: Vec<FailureRecord>,
    /// Quintuple solves that needed a cofactor repair move.
    pub repairs: u64,
    /// Quintuple solves that ended in `UnreachableParams`.
    pub unreachable: u64,
    pub elapsed_ms: u128,
}

impl CoverageReport {
    pub fn verified(&self) -> bool {
        self.failure_count == 0
    }

    /// Copy with the timing zeroed, for comparing runs.
    pub fn without_timing(&self) -> Self {
        Self { elapsed_ms: 0, ..self.clone() }
    }
}

#[derive(Default)]
struct Shard {
    total: u64,
    failure_count: u64,
    failures: Vec<FailureRecord>,
    repairs: u64,
    unreachable: u64,
}

impl Shard {
    fn fail(&mut self, t: &Tuple, error: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_FAILURE_RECORDS {
            self.failures.push(FailureRecord {
                input: t.to_flat().iter().map(ToString::to_string).collect(),
                error,
            });
        }
    }
}

fn solve_and_compare(family: Family, t: &Tuple, shard: &mut Shard) -> Result<(), String> {
    let params = match (family, t) {
        (Family::Quintuple, Tuple::Pyth(p)) => match solve_quintuple_with_stats(p) {
            Ok((q, repairs)) => {
                if repairs > 0 {
                    shard.repairs += 1;
                }
                Params::Quintuple(q)
            }
            Err(e @ Error::UnreachableParams(_)) => {
                shard.unreachable += 1;
                return Err(e.to_string());
            }
            Err(e) => return Err(e.to_string()),
        },
        _ => family.solve(t).map_err(|e| e.to_string())?,
    };
    let back = params.eval();
    if back != *t {
        return Err(format!("re-evaluation gave {} from {}", back.to_json(), params.to_json()));
    }
    family.check_normalization(&params, t)
}

fn run_shard(family: Family, bound: u32, first: Option<i64>) -> Shard {
    let mut shard = Shard::default();
    let tuples: Box<dyn Iterator<Item = Tuple>> = match family.shape() {
        TupleShape::Pyth(n) => Box::new(enumerate_pyth_shard(n, bound, first).map(Tuple::Pyth)),
        TupleShape::Uv(k) => Box::new(enumerate_uv_shard(k, bound, first).map(Tuple::Uv)),
        TupleShape::Descartes => Box::new(enumerate_descartes_shard(bound, first).map(Tuple::Descartes)),
    };
    for t in tuples {
        shard.total += 1;
        let outcome = catch_unwind(AssertUnwindSafe(|| solve_and_compare(family, &t, &mut shard)));
        match outcome {
            Ok(Ok(())) => {}
            Ok(Err(msg)) => shard.fail(&t, msg),
            Err(panic) => {
                let msg = panic
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                shard.fail(&t, format!("panic: {msg}"));
            }
        }
    }
    shard
}

/// Round-trips every tuple of `family` up to `bound` on the global thread pool.
pub fn roundtrip_report(family: Family, bound: u32) -> CoverageReport {
    roundtrip_report_with_workers(family, bound, None)
}

/// As [`roundtrip_report`]; `workers = Some(n)` runs on a dedicated pool of
/// `n` threads (`Some(1)` is single-threaded). The merged report does not
/// depend on the worker count.
pub fn roundtrip_report_with_workers(family: Family, bound: u32, workers: Option<usize>) -> CoverageReport {
    assert!(family.is_covering(), "family {family} has no solver");
    let start = Instant::now();
    let b = i64::from(bound);
    let firsts: Vec<i64> = (-b..=b).collect();
    let shards: Vec<Shard> = match workers {
        Some(1) => firsts.iter().map(|&f| run_shard(family, bound, Some(f))).collect(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(|| firsts.par_iter().map(|&f| run_shard(family, bound, Some(f))).collect()),
        None => firsts.par_iter().map(|&f| run_shard(family, bound, Some(f))).collect(),
    };

    let mut report = CoverageReport {
        family: family.name().to_string(),
        bound,
        total: 0,
        failure_count: 0,
        failures: Vec::new(),
        repairs: 0,
        unreachable: 0,
        elapsed_ms: 0,
    };
    for s in shards {
        report.total += s.total;
        report.failure_count += s.failure_count;
        report.repairs += s.repairs;
        report.unreachable += s.unreachable;
        let room = MAX_FAILURE_RECORDS - report.failures.len();
        report.failures.extend(s.failures.into_iter().take(room));
    }
    report.elapsed_ms = start.elapsed().as_millis();
    report
}
