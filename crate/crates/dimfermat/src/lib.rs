//! Command line driver, report pipeline and output formats for `dimfermat-core`.

pub mod cli;
pub mod emit;
pub mod json;
pub mod report;

pub use emit::{emit, Format};
pub use report::{run_report, run_sweep, Check, RunConfig};
