//! Instance files, JSON reports and SVG scenes for the `ballconv` binary.

pub mod instance;
pub mod report;
pub mod svg;
