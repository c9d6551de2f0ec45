//! File formats, reports, caching and the command-line runner for
//! `subform-core`.

pub mod cache;
pub mod catalog;
pub mod error;
pub mod format;
pub mod named;
pub mod report;
pub mod run;

pub use error::{Error, Result};
