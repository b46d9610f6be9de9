//! Std companion to `cayley-core`: file formats, a shared character cache,
//! the parallel verification driver and the `cayley` command line.

pub mod cache;
pub mod cli;
pub mod driver;
pub mod formats;

pub use cayley_core as core;
