//! Enumerators, round-trip coverage reports and brute-force oracles.

mod brute;
mod enumerate;
mod report;

pub use brute::brute_force_param_search;
pub use enumerate::{enumerate_descartes, enumerate_pyth, enumerate_uv};
pub use report::{
    roundtrip_report, roundtrip_report_with_workers, CoverageReport, FailureRecord,
    MAX_FAILURE_RECORDS,
};
