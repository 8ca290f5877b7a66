//! Recurrence-based evaluation of `F_n`.

pub mod oller;
pub mod theorem1;
pub mod verify;

use core::fmt;

pub use oller::{oller_sequence, OllerTerms};
pub use theorem1::{theorem1_sequence, theorem1_term_in, theorem1_terms, Theorem1Terms};
pub use verify::{cross_verify, VerifyReport, VerifyRow};

use crate::error::Result;
use crate::fasteval;
use crate::params::Params;
use crate::simulator;
use crate::value::TermValue;

/// The four independent ways of computing a term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MethodId {
    Simulation,
    Theorem1,
    Oller,
    FastEval,
}

impl MethodId {
    pub const ALL: [MethodId; 4] = [
        MethodId::Simulation,
        MethodId::Theorem1,
        MethodId::Oller,
        MethodId::FastEval,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodId::Simulation => "simulation",
            MethodId::Theorem1 => "theorem1",
            MethodId::Oller => "oller",
            MethodId::FastEval => "fast-eval",
        }
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact `F_n` by the chosen method.
pub fn term(params: &Params, n: usize, method: MethodId) -> Result<TermValue> {
    let value = match method {
        MethodId::Simulation => simulator::run(params, n)?.last().clone(),
        MethodId::Theorem1 => theorem1_sequence(params, n)?.last().clone(),
        MethodId::Oller => oller_sequence(params, n)?.last().clone(),
        MethodId::FastEval => return fasteval::fast_term(params, n as u64, None),
    };
    Ok(TermValue::Exact(value))
}
