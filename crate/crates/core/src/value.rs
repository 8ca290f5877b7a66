//! Exact or modular term values.

use core::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// A modulus `m >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            Err(Error::InvalidModulus(m))
        } else {
            Ok(Self(m))
        }
    }

    pub const fn get(self) -> u64 {
        self.0
    }

    pub fn reduce(self, value: &BigUint) -> u64 {
        (value % self.0)
            .to_u64()
            .expect("remainder is below a u64 modulus")
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A term `F_n`, either exact or as a residue modulo some `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermValue {
    Exact(BigUint),
    Residue { value: u64, modulus: Modulus },
}

impl TermValue {
    pub fn residue(value: u64, modulus: Modulus) -> Self {
        Self::Residue {
            value: value % modulus.get(),
            modulus,
        }
    }

    /// Reduces an exact value mod `m`; a residue is re-reduced only when
    /// `m` divides its modulus, otherwise `None`.
    pub fn reduce(&self, modulus: Modulus) -> Option<Self> {
        match self {
            Self::Exact(v) => Some(Self::residue(modulus.reduce(v), modulus)),
            Self::Residue { value, modulus: m } if m.get() % modulus.get() == 0 => {
                Some(Self::residue(*value, modulus))
            }
            Self::Residue { .. } => None,
        }
    }

    pub fn as_exact(&self) -> Option<&BigUint> {
        match self {
            Self::Exact(v) => Some(v),
            Self::Residue { .. } => None,
        }
    }

    pub fn into_exact(self) -> Option<BigUint> {
        match self {
            Self::Exact(v) => Some(v),
            Self::Residue { .. } => None,
        }
    }
}

impl From<BigUint> for TermValue {
    fn from(v: BigUint) -> Self {
        Self::Exact(v)
    }
}

/// Decimal value only; the modulus is not printed.
impl fmt::Display for TermValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exact(v) => v.fmt(f),
            Self::Residue { value, .. } => value.fmt(f),
        }
    }
}
