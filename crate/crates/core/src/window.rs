//! Contiguous run of exact sequence terms.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Terms `F_start, F_start+1, ..., F_end` of one sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequenceWindow {
    start: usize,
    terms: Vec<BigUint>,
}

impl SequenceWindow {
    pub fn new(start: usize, terms: Vec<BigUint>) -> Result<Self> {
        if start == 0 || terms.is_empty() {
            return Err(Error::InvalidWindow);
        }
        Ok(Self { start, terms })
    }

    /// A window beginning at `F_1`.
    pub fn from_first(terms: Vec<BigUint>) -> Result<Self> {
        Self::new(1, terms)
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Index of the last term (inclusive).
    pub fn end(&self) -> usize {
        self.start + self.terms.len() - 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn terms(&self) -> &[BigUint] {
        &self.terms
    }

    /// `F_index`, if the window covers it.
    pub fn term(&self, index: usize) -> Option<&BigUint> {
        index
            .checked_sub(self.start)
            .and_then(|offset| self.terms.get(offset))
    }

    pub fn last(&self) -> &BigUint {
        self.terms.last().expect("window is never empty")
    }

    /// `(index, term)` pairs in order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> + '_ {
        (self.start..).zip(self.terms.iter())
    }

    pub fn into_terms(self) -> Vec<BigUint> {
        self.terms
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn indexing() {
        let w = SequenceWindow::new(5, vec![3u32.into(), 5u32.into(), 8u32.into()]).unwrap();
        assert_eq!(w.end(), 7);
        assert_eq!(w.term(4), None);
        assert_eq!(w.term(6), Some(&BigUint::from(5u32)));
        assert_eq!(w.term(8), None);
        assert_eq!(w.last(), &BigUint::from(8u32));
        let idx: Vec<usize> = w.iter().map(|(i, _)| i).collect();
        assert_eq!(idx, vec![5, 6, 7]);
    }

    #[test]
    fn rejects_empty_and_zero_start() {
        assert_eq!(
            SequenceWindow::new(1, Vec::new()),
            Err(Error::InvalidWindow)
        );
        assert_eq!(
            SequenceWindow::new(0, vec![BigUint::from(1u32)]),
            Err(Error::InvalidWindow)
        );
    }
}
