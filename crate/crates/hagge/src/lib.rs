//! Command-line plumbing around `hagge-core`: input parsing, JSON reports,
//! seeded fuzzing and SVG figures.

pub mod figure;
pub mod fuzz;
pub mod instance;
pub mod report;
