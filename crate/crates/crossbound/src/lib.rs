//! Graph file formats, drawing certificates and the `crossbound` command
//! line, on top of [`crossbound_core`].

pub mod cli;
pub mod drawing;
pub mod format;
pub mod parallel;
pub mod report;

pub use crossbound_core as core;
