use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid {name}: {value} (must be at least 1)")]
    InvalidParam { name: &'static str, value: i64 },

    /// Generations are numbered from 1.
    #[error("index 0 is not defined; generations start at 1")]
    ZeroIndex,

    #[error("degenerate parameters (f={f}, d={d}): death age below fertility age, only the simulator applies")]
    DegenerateParams { f: usize, d: usize },

    #[error("{requested} steps requested but the simulator is capped at {cap}")]
    LimitExceeded { requested: usize, cap: usize },

    #[error("invalid modulus {0} (must be at least 2)")]
    InvalidModulus(u64),

    #[error("cohort for generation {generation} must have {expected} age classes, got {found}")]
    InvalidCohort {
        generation: usize,
        expected: usize,
        found: usize,
    },

    #[error("a sequence window needs at least one term and a start index of at least 1")]
    InvalidWindow,
}
