//! Per-age census of a single generation.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::params::Params;

/// Counts of rabbits of each age `x = 1..=A` at the start of one generation,
/// where `A = min(d, n)` (or `n` when rabbits never die).
///
/// Ages past `d` cannot be occupied and neither can ages past `n`, so the
/// census stores exactly `A` entries, some of which may be zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohortState {
    generation: usize,
    counts: Vec<BigUint>,
}

impl CohortState {
    /// Checks the census length against `params` and `generation`.
    pub fn new(params: &Params, generation: usize, counts: Vec<BigUint>) -> Result<Self> {
        if generation == 0 {
            return Err(Error::ZeroIndex);
        }
        let expected = params.ages_at(generation);
        if counts.len() != expected {
            return Err(Error::InvalidCohort {
                generation,
                expected,
                found: counts.len(),
            });
        }
        Ok(Self { generation, counts })
    }

    /// One newborn at generation 1.
    pub fn founder() -> Self {
        Self {
            generation: 1,
            counts: vec![BigUint::one()],
        }
    }

    pub(crate) fn from_parts(generation: usize, counts: Vec<BigUint>) -> Self {
        debug_assert!(generation >= 1 && !counts.is_empty());
        Self { generation, counts }
    }

    pub fn generation(&self) -> usize {
        self.generation
    }

    /// Counts indexed from age 1 (`counts()[0]` is the newborns).
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Number of rabbits of age `x`, `None` outside `1..=A`.
    pub fn age(&self, x: usize) -> Option<&BigUint> {
        x.checked_sub(1).and_then(|i| self.counts.get(i))
    }

    pub fn ages(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn into_counts(self) -> Vec<BigUint> {
        self.counts
    }
}
