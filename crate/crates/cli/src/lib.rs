//! Command-line front end: tables, verification suites, the sequence cache
//! and OEIS b-files.

pub mod app;
pub mod bfile;
pub mod cache;

pub use app::run;
