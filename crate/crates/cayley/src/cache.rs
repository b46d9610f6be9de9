//! Process-wide character cache shared by worker threads.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use cayley_core::{CacheKey, CharCache, Character};

#[derive(Default)]
pub struct SharedCache {
    map: RwLock<HashMap<CacheKey, Arc<Character>>>,
}

impl SharedCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().map_or(0, |m| m.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl CharCache for SharedCache {
    fn get(&self, key: &CacheKey) -> Option<Arc<Character>> {
        self.map.read().ok()?.get(key).cloned()
    }

    fn insert(&self, key: CacheKey, value: Arc<Character>) {
        // A poisoned lock only means another worker panicked; skip caching.
        if let Ok(mut m) = self.map.write() {
            m.entry(key).or_insert(value);
        }
    }
}

pub fn global() -> Arc<SharedCache> {
    static CACHE: OnceLock<Arc<SharedCache>> = OnceLock::new();
    CACHE.get_or_init(|| Arc::new(SharedCache::new())).clone()
}
