//! The four-case recurrence for `f <= d`:
//!
//! ```text
//! F_1 = 1
//! F_n = 1                                 2 <= n <= f
//! F_n = F_{n-1} + F_{n-f}                 f <  n <= d
//! F_n = F_{n-1} + F_{n-f} - 1             n = d + 1
//! F_n = F_{n-1} + F_{n-f} - F_{n-d-1}     n >= d + 2
//! ```
//!
//! With `d` infinite only the first two cases ever apply. Any of the ranges
//! may be empty (`f = 1` empties the first, `f = d` the second).

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::params::Params;
use crate::ring::{Naturals, Ring};
use crate::window::SequenceWindow;

/// Infinite iterator over `F_1, F_2, ...`, holding only the last
/// `d + 1` terms (`f` when `d` is infinite).
#[derive(Debug, Clone)]
pub struct Theorem1Terms<R: Ring> {
    ring: R,
    fertile: usize,
    death: Option<usize>,
    next_index: usize,
    recent: VecDeque<R::Elem>,
    memory: usize,
}

impl<R: Ring> Theorem1Terms<R> {
    pub fn new(ring: R, params: &Params) -> Result<Self> {
        params.require_breeding()?;
        let memory = match params.death() {
            Some(d) => d + 1,
            None => params.fertile(),
        };
        Ok(Self {
            ring,
            fertile: params.fertile(),
            death: params.death(),
            next_index: 1,
            recent: VecDeque::new(),
            memory,
        })
    }

    /// `F_{next_index - k}`.
    fn back(&self, k: usize) -> &R::Elem {
        &self.recent[self.recent.len() - k]
    }
}

impl<R: Ring> Iterator for Theorem1Terms<R> {
    type Item = R::Elem;

    fn next(&mut self) -> Option<R::Elem> {
        let n = self.next_index;
        let ring = &self.ring;
        let value = if n <= self.fertile {
            ring.one()
        } else {
            let grown = ring.add(self.back(1), self.back(self.fertile));
            match self.death {
                Some(d) if n == d + 1 => ring.sub(&grown, &ring.one()),
                Some(d) if n >= d + 2 => ring.sub(&grown, self.back(d + 1)),
                _ => grown,
            }
        };
        self.recent.push_back(value.clone());
        if self.recent.len() > self.memory {
            self.recent.pop_front();
        }
        self.next_index += 1;
        Some(value)
    }
}

pub fn theorem1_terms(params: &Params) -> Result<Theorem1Terms<Naturals>> {
    Theorem1Terms::new(Naturals, params)
}

/// Exact `F_1..=F_n`.
pub fn theorem1_sequence(params: &Params, n: usize) -> Result<SequenceWindow> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let terms: Vec<_> = theorem1_terms(params)?.take(n).collect();
    SequenceWindow::from_first(terms)
}

/// `F_n` alone, computed in any ring with `O(d)` memory.
pub fn theorem1_term_in<R: Ring>(ring: R, params: &Params, n: usize) -> Result<R::Elem> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    Ok(Theorem1Terms::new(ring, params)?
        .nth(n - 1)
        .expect("iterator is infinite"))
}
