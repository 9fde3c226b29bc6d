//! Spec parsing, the golden catalog and the runners behind the `classinv`
//! binary.

pub mod catalog;
pub mod run;
pub mod spec_text;
pub mod suite;

pub use catalog::{golden_forms, lookup, GoldenEntry};
pub use run::{run, OracleChoice, OutputFormat, Report, RunConfig, RunError, Verdict};
pub use spec_text::{format_module_spec, parse_module_spec, SpecParseError};
