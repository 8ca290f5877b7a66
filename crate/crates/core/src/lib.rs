//! Exact generalized Fibonacci numbers for rabbit populations whose members
//! become fertile at age `f` and die at age `d` (possibly never).
//!
//! Four independent evaluation routes are provided and are expected to agree
//! term by term:
//!
//! * [`simulator`]: literal evolution of the per-age census, generation by
//!   generation. This is the brute-force oracle.
//! * [`recurrence::theorem1`]: the four-case recurrence
//!   `F_n = F_{n-1} + F_{n-f} - F_{n-d-1}` with its boundary cases.
//! * [`recurrence::oller`]: the sliding-window form
//!   `F_n = F_{n-f} + ... + F_{n-d}`.
//! * [`fasteval`]: polynomial exponentiation modulo the characteristic
//!   polynomial, logarithmic in `n`, exact or modulo `m`.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use dyingrabbits_core::{Params, recurrence::theorem1_sequence};
//!
//! let p = Params::new(3, Some(9)).unwrap();
//! let w = theorem1_sequence(&p, 21).unwrap();
//! assert_eq!(w.last().to_string(), "1032");
//! ```
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod census;
pub mod error;
pub mod fasteval;
pub mod params;
pub mod recurrence;
pub mod ring;
pub mod simulator;
pub mod value;
pub mod window;

pub use census::CohortState;
pub use error::{Error, Result};
pub use params::{classify, validate, Class, Params};
pub use recurrence::{cross_verify, term, MethodId, VerifyReport};
pub use simulator::{StepStats, DEFAULT_STEP_CAP};
pub use value::{Modulus, TermValue};
pub use window::SequenceWindow;
