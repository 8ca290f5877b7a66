//! Term-by-term comparison of every applicable method.

use alloc::vec::Vec;

use num_bigint::BigUint;

use super::{oller_sequence, theorem1_sequence, MethodId};
use crate::error::{Error, Result};
use crate::fasteval::fast_term;
use crate::params::Params;
use crate::simulator;
use crate::window::SequenceWindow;

/// Outcome of [`cross_verify`]. Methods that do not apply (degenerate
/// parameters, simulator cap) are recorded with their error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    params: Params,
    n: usize,
    columns: Vec<(MethodId, Result<SequenceWindow>)>,
    mismatches: Vec<usize>,
}

/// Values of all applicable methods at one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow<'a> {
    pub index: usize,
    pub values: Vec<(MethodId, &'a BigUint)>,
    pub agree: bool,
}

impl VerifyReport {
    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn applicable(&self) -> impl Iterator<Item = MethodId> + '_ {
        self.columns
            .iter()
            .filter(|(_, c)| c.is_ok())
            .map(|(m, _)| *m)
    }

    pub fn skipped(&self) -> impl Iterator<Item = (MethodId, &Error)> + '_ {
        self.columns
            .iter()
            .filter_map(|(m, c)| c.as_ref().err().map(|e| (*m, e)))
    }

    pub fn sequence(&self, method: MethodId) -> Option<&SequenceWindow> {
        self.columns
            .iter()
            .find(|(m, _)| *m == method)
            .and_then(|(_, c)| c.as_ref().ok())
    }

    pub fn row(&self, index: usize) -> Option<VerifyRow<'_>> {
        if index == 0 || index > self.n {
            return None;
        }
        let values: Vec<_> = self
            .columns
            .iter()
            .filter_map(|(m, c)| c.as_ref().ok().and_then(|w| w.term(index)).map(|v| (*m, v)))
            .collect();
        let agree = values.windows(2).all(|pair| pair[0].1 == pair[1].1);
        Some(VerifyRow {
            index,
            values,
            agree,
        })
    }

    pub fn rows(&self) -> impl Iterator<Item = VerifyRow<'_>> + '_ {
        (1..=self.n).filter_map(move |i| self.row(i))
    }

    /// Indices at which applicable methods disagree.
    pub fn mismatches(&self) -> &[usize] {
        &self.mismatches
    }

    /// At least one method ran and no index shows a disagreement.
    pub fn passed(&self) -> bool {
        self.applicable().next().is_some() && self.mismatches.is_empty()
    }
}

fn fast_sequence(params: &Params, n: usize) -> Result<SequenceWindow> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let terms = (1..=n as u64)
        .map(|i| fast_term(params, i, None).map(|t| t.into_exact().expect("no modulus requested")))
        .collect::<Result<Vec<_>>>()?;
    SequenceWindow::from_first(terms)
}

/// Runs simulation, both recurrences and the fast evaluator (one call per
/// index) for `F_1..=F_n` and compares them.
pub fn cross_verify(params: &Params, n: usize) -> VerifyReport {
    let columns = MethodId::ALL
        .iter()
        .map(|&method| {
            let column = match method {
                MethodId::Simulation => simulator::run(params, n),
                MethodId::Theorem1 => theorem1_sequence(params, n),
                MethodId::Oller => oller_sequence(params, n),
                MethodId::FastEval => fast_sequence(params, n),
            };
            (method, column)
        })
        .collect();
    let mut report = VerifyReport {
        params: *params,
        n,
        columns,
        mismatches: Vec::new(),
    };
    report.mismatches = report
        .rows()
        .filter(|r| !r.agree)
        .map(|r| r.index)
        .collect();
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_pair_all_methods_agree() {
        let report = cross_verify(&Params::new(3, Some(9)).unwrap(), 30);
        assert!(report.passed());
        assert_eq!(report.applicable().count(), 4);
        assert_eq!(report.rows().count(), 30);
        let row = report.row(20).unwrap();
        assert!(row.agree);
        assert!(row.values.iter().all(|(_, v)| **v == BigUint::from(715u32)));
        let seq = report.sequence(MethodId::Theorem1).unwrap();
        assert_eq!(seq.term(11), Some(&BigUint::from(26u32)));
        assert_eq!(seq.term(18), Some(&BigUint::from(343u32)));
    }

    #[test]
    fn degenerate_only_simulation() {
        let report = cross_verify(&Params::new(4, Some(2)).unwrap(), 8);
        assert!(report.passed());
        let applicable: Vec<_> = report.applicable().collect();
        assert_eq!(applicable, [MethodId::Simulation]);
        assert_eq!(report.skipped().count(), 3);
        assert!(report
            .skipped()
            .all(|(_, e)| *e == Error::DegenerateParams { f: 4, d: 2 }));
    }

    #[test]
    fn classical_fibonacci_fifty() {
        let report = cross_verify(&Params::fibonacci(), 50);
        assert!(report.passed());
        assert_eq!(report.applicable().count(), 4);
    }

    #[test]
    fn zero_length_does_not_pass() {
        let report = cross_verify(&Params::fibonacci(), 0);
        assert!(!report.passed());
        assert_eq!(report.row(1), None);
    }

    #[test]
    fn detects_disagreement() {
        let mut report = cross_verify(&Params::fibonacci(), 5);
        let bad = SequenceWindow::from_first(
            [1u32, 1, 2, 3, 6]
                .iter()
                .map(|&v| BigUint::from(v))
                .collect(),
        )
        .unwrap();
        report.columns[1].1 = Ok(bad);
        report.mismatches = report
            .rows()
            .filter(|r| !r.agree)
            .map(|r| r.index)
            .collect();
        assert_eq!(report.mismatches(), &[5]);
        assert!(!report.passed());
    }
}
