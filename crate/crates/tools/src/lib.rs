//! File formats and the command-line front end for `binoid-core`.

pub mod cli;
pub mod input;
pub mod report;
