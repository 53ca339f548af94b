//! Verification suites and the command-line front end.
//!
//! Each suite turns a list of instances (from the TOML suite manifest) into
//! [`VerificationReport`]s. A report passes exactly when the computed value
//! equals the expected one; running out of budget gives `Exhausted`, never
//! `Pass`. Claims and their provenance live in a bundled claims manifest.

mod claims;
mod cli;
mod manifest;
mod report;
mod st;
mod suites;

pub use claims::{claim, claims, Claim};
pub use cli::{cli_main, cli_main_with, EXIT_EXHAUSTED, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
pub use manifest::{
    ChiConfig, CoreConfig, CoreInstance, HomIdempotenceConfig, ManifestError, ProbeConfig, PropIsoConfig,
    ShiftGridConfig, SuiteManifest,
};
pub use report::{exit_code, sort_reports, Expected, Status, ValueSource, VerificationReport};
pub use st::{s_set, t_set};
pub use suites::{
    probe_conjectures, run_chi_suite, run_core_suite, run_hom_idempotence_suite, run_prop_iso, run_shift_grid,
    run_suite, UnknownSuite, SUITES,
};
