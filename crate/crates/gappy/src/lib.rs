//! Command-line front end, reference-value file format and report rendering
//! for the `gappy-core` engine.

pub mod cli;
pub mod fixtures;
pub mod report;
pub mod syntax;
