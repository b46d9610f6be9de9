//! Exact Lie-theoretic computations on rational homogeneous spaces `G/P`:
//! weights and Weyl groups, irreducible characters, branching to a Levi,
//! Borel–Weil–Bott cohomology, strong exceptionality of collections of
//! homogeneous bundles, and a small language for bundle identities.
//!
//! All arithmetic is exact. The crate is `no_std` with `alloc`.

#![no_std]
// Matrix code reads better with explicit indices.
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod bbw;
pub mod cache;
pub mod character;
pub mod error;
pub mod ledger;
pub mod lie;
pub mod parabolic;
pub mod verify;

pub use bbw::{cohomology, cohomology_graded, ext_table, CohomologyResult, DegreeEntry, ExtTable};
pub use cache::{CacheKey, CharCache, NoCache};
pub use character::{
    char_arith, decompose, decompose_virtual, irrep_character, power_op, weyl_dim, weyl_polynomial, CharOp, Character,
    IrrepSum, PowerKind,
};
pub use error::{Error, Result};
pub use lie::{CartanMatrix, Dotted, Limits, Root, RootSystem, Subsystem, Weight, PRESETS};
pub use parabolic::{BundleWeight, GradedBundle, ParabolicSetup};
pub use verify::{Collection, Rule, Verdict, VerificationReport, Violation};
