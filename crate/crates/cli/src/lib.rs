//! Command-line front end for the `rootjones` tools and the `verify`
//! acceptance harness.

pub mod commands;
pub mod input;
pub mod report;
pub mod verify;

pub use report::RunReport;
