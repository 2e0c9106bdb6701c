//! File formats, bundled fixtures, batch processing and the `dihedral`
//! command-line tool, built on the computational core in `dihedral-core`.

pub mod batch;
pub mod commands;
pub mod fixtures;
pub mod input;
pub mod parallel;
pub mod report;

/// Exit status for a valid negative answer, distinct from errors.
pub const EXIT_NO: i32 = 3;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
