//! Shared memo tables.
//!
//! Every table maps a canonical key to a value that is a pure function of
//! that key, so concurrent fills are idempotent and lookups never change a
//! result.

use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::BigInt;

use crate::expansion::SchurExpansion;
use crate::lr;
use crate::partition::{Partition, SkewShape};

type Triple = (Partition, Partition, Partition);

#[derive(Default)]
pub struct Engine {
    pub(crate) characters: DashMap<(Partition, Partition), BigInt>,
    lr: DashMap<Triple, u64>,
    skew: DashMap<(Partition, Partition), Arc<SchurExpansion>>,
    pub(crate) plethysms: DashMap<(Partition, Partition), Arc<SchurExpansion>>,
    pub(crate) coefficients: DashMap<Triple, BigInt>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Memoized [`lr::lr_coefficient`].
    pub fn lr_coefficient(&self, nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
        if nu.size() != lambda.size() + mu.size() {
            return 0;
        }
        let key = (nu.clone(), lambda.clone(), mu.clone());
        if let Some(v) = self.lr.get(&key) {
            return *v;
        }
        let v = lr::lr_coefficient(nu, lambda, mu);
        self.lr.insert(key, v);
        v
    }

    /// Memoized [`lr::skew_schur_expansion`] of `outer/inner`.
    pub fn skew_expansion(&self, outer: &Partition, inner: &Partition) -> Arc<SchurExpansion> {
        let key = (outer.clone(), inner.clone());
        if let Some(v) = self.skew.get(&key) {
            return Arc::clone(&v);
        }
        let v = Arc::new(lr::skew_schur_expansion(&SkewShape::new(
            outer.clone(),
            inner.clone(),
        )));
        self.skew.insert(key, Arc::clone(&v));
        v
    }

    /// Snapshot of every memoized plethysm coefficient `(ν, λ, μ) ↦ a`.
    pub fn coefficient_entries(&self) -> Vec<(Triple, BigInt)> {
        let mut out: Vec<_> = self
            .coefficients
            .iter()
            .map(|e| (e.key().clone(), e.value().clone()))
            .collect();
        out.sort();
        out
    }

    /// Seeds the coefficient table, e.g. from an on-disk cache.
    pub fn preload_coefficients<I: IntoIterator<Item = (Triple, BigInt)>>(&self, entries: I) {
        for (k, v) in entries {
            self.coefficients.insert(k, v);
        }
    }

    pub fn clear(&self) {
        self.characters.clear();
        self.lr.clear();
        self.skew.clear();
        self.plethysms.clear();
        self.coefficients.clear();
    }
}
