//! Front end for the workspace: the `ccr-lab` command line and the acceptance
//! checks it shares with the `acceptance` test target.

pub mod checks;
pub mod cli;
pub mod run;

pub use checks::{run_all, run_check, CheckResult};
pub use run::{execute, Failure, Report};
