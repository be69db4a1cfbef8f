use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::{phi, psi, FactoredIndex};
use crate::polyring::IntPoly;

/// Bounded memo table for `Φ_n` and `Ψ_n`, safe to share across threads.
///
/// Once `capacity` entries are stored per table, further results are
/// computed but not retained.
#[derive(Debug)]
pub struct CyclotomicCache {
    capacity: usize,
    phi: RwLock<HashMap<u64, Arc<IntPoly>>>,
    psi: RwLock<HashMap<u64, Arc<IntPoly>>>,
}

impl CyclotomicCache {
    pub const DEFAULT_CAPACITY: usize = 4096;

    pub fn new(capacity: usize) -> Self {
        CyclotomicCache {
            capacity,
            phi: RwLock::default(),
            psi: RwLock::default(),
        }
    }

    /// Process-wide cache with the default capacity.
    pub fn global() -> &'static CyclotomicCache {
        static GLOBAL: OnceLock<CyclotomicCache> = OnceLock::new();
        GLOBAL.get_or_init(|| CyclotomicCache::new(Self::DEFAULT_CAPACITY))
    }

    pub fn phi(&self, n: &FactoredIndex) -> Arc<IntPoly> {
        self.lookup(&self.phi, n, phi)
    }

    pub fn psi(&self, n: &FactoredIndex) -> Arc<IntPoly> {
        self.lookup(&self.psi, n, psi)
    }

    pub fn len(&self) -> usize {
        self.phi.read().expect("cache lock").len() + self.psi.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn lookup(
        &self,
        table: &RwLock<HashMap<u64, Arc<IntPoly>>>,
        n: &FactoredIndex,
        build: fn(&FactoredIndex) -> IntPoly,
    ) -> Arc<IntPoly> {
        if let Some(hit) = table.read().expect("cache lock").get(&n.n()) {
            return Arc::clone(hit);
        }
        let value = Arc::new(build(n));
        let mut guard = table.write().expect("cache lock");
        if let Some(raced) = guard.get(&n.n()) {
            return Arc::clone(raced);
        }
        if guard.len() < self.capacity {
            guard.insert(n.n(), Arc::clone(&value));
        }
        value
    }
}

impl Default for CyclotomicCache {
    fn default() -> Self {
        Self::new(Self::DEFAULT_CAPACITY)
    }
}
