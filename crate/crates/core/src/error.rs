use alloc::boxed::Box;
use alloc::string::String;

use crate::lie::Weight;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("node {node} out of range for rank {rank}")]
    InvalidNode { node: usize, rank: usize },

    #[error("weight has {found} coordinates, root system has rank {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("weight {0} is not dominant for the requested subsystem")]
    NotDominant(Weight),

    #[error("character support exceeded guardrail of {limit} weights")]
    GuardrailExceeded { limit: usize },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("plethysm division by {k} was not exact (internal error)")]
    NonIntegralPlethysm { k: u32 },

    #[error("character is not genuine (negative multiplicity)")]
    NotGenuine,

    #[error("character does not decompose: weight {weight} has multiplicity {mult}")]
    NotDecomposable { weight: Weight, mult: i64 },

    #[error("parse error at byte {position}: expected {expected}")]
    Parse { position: usize, expected: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("pair ({}, {}): {source}", .i + 1, .j + 1)]
    Pair {
        i: usize,
        j: usize,
        #[source]
        source: Box<Error>,
    },
}
