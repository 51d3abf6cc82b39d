//! Instance generators, brute-force reference oracles, experiments and the
//! `ehf` command line.

pub mod cli;
pub mod experiments;
pub mod generators;
pub mod oracle;
pub mod report;
