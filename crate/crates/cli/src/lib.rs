//! Command-line front end: the complex file format, JSON reports, and the
//! `sdecomp` subcommands.

mod app;
pub mod format;
pub mod report;

pub use app::{run, EXIT_DOMAIN, EXIT_FALSE, EXIT_TRUE, EXIT_USAGE};
pub use format::{parse_complex, serialize_complex, ParseError, ParsedComplex};
pub use report::{ComplexReport, KVerdict};
