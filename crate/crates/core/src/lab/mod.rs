//! Worked instances: fixed examples, the four-dimensional oracle, fixtures
//! and the verification suites built on them.

pub mod example1;
pub mod example4;
pub mod fixtures;
pub mod random;
pub mod suites;

pub use example1::{verify_example1, Example1Report};
pub use example4::{example4_membership, verify_e1, verify_e2, Example4Oracle, Membership, OracleReport};
pub use fixtures::{fixture, fixtures, Fixture, NormSpec};
pub use suites::{run_all, run_suite, SuiteReport, SUITE_NAMES};
