//! Sliding-window recurrence:
//!
//! ```text
//! F_n = 1                                 1 <= n <= f
//! F_n = F_{n-1} + F_{n-f}                 f <  n <= d
//! F_n = F_{n-f} + F_{n-f-1} + ... + F_{n-d}   n > d   (d - f + 1 terms)
//! ```
//!
//! For infinite `d` the middle case applies to every `n > f`.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::params::Params;
use crate::ring::{Naturals, Ring};
use crate::window::SequenceWindow;

#[derive(Debug, Clone)]
pub struct OllerTerms<R: Ring> {
    ring: R,
    fertile: usize,
    death: Option<usize>,
    next_index: usize,
    recent: VecDeque<R::Elem>,
    memory: usize,
}

impl<R: Ring> OllerTerms<R> {
    pub fn new(ring: R, params: &Params) -> Result<Self> {
        params.require_breeding()?;
        Ok(Self {
            ring,
            fertile: params.fertile(),
            death: params.death(),
            next_index: 1,
            recent: VecDeque::new(),
            memory: params.death().unwrap_or(params.fertile()),
        })
    }

    fn back(&self, k: usize) -> &R::Elem {
        &self.recent[self.recent.len() - k]
    }
}

impl<R: Ring> Iterator for OllerTerms<R> {
    type Item = R::Elem;

    fn next(&mut self) -> Option<R::Elem> {
        let n = self.next_index;
        let f = self.fertile;
        let value = if n <= f {
            self.ring.one()
        } else {
            match self.death {
                Some(d) if n > d => {
                    (f..=d).fold(self.ring.zero(), |acc, k| self.ring.add(&acc, self.back(k)))
                }
                _ => self.ring.add(self.back(1), self.back(f)),
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

/// Exact `F_1..=F_n`.
pub fn oller_sequence(params: &Params, n: usize) -> Result<SequenceWindow> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let terms: Vec<_> = OllerTerms::new(Naturals, params)?.take(n).collect();
    SequenceWindow::from_first(terms)
}
