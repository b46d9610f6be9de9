//! Memo cache contract for irreducible characters.
//!
//! The core never stores characters on its own; a [`CharCache`] installed on
//! a [`RootSystem`](crate::lie::RootSystem) is consulted before running
//! Freudenthal's recursion. Implementations must tolerate concurrent readers.

use alloc::sync::Arc;

use crate::character::Character;
use crate::lie::{Subsystem, Weight};

/// Identity of an irreducible character: ambient Cartan entries, subsystem
/// and highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CacheKey {
    pub cartan: Arc<[i32]>,
    pub sub: Subsystem,
    pub highest: Weight,
}

pub trait CharCache: Send + Sync {
    fn get(&self, key: &CacheKey) -> Option<Arc<Character>>;
    fn insert(&self, key: CacheKey, value: Arc<Character>);
}

/// The default: remembers nothing.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoCache;

impl CharCache for NoCache {
    fn get(&self, _: &CacheKey) -> Option<Arc<Character>> {
        None
    }

    fn insert(&self, _: CacheKey, _: Arc<Character>) {}
}
