//! Population parameters: fertility age `f` and death age `d`.

use core::fmt;

use crate::error::{Error, Result};

/// Regime of a parameter pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    /// `d < f`: the founder dies before it ever breeds.
    Degenerate,
    /// `f = d`: every birth is matched by a death, the population is constant.
    Borderline,
    /// `f < d`, or `d` infinite.
    Standard,
}

/// Fertility age and death age, both in generations.
///
/// A rabbit of age `x >= f` produces one newborn for the next generation;
/// a rabbit of age `d` breeds one last time and is gone from the next
/// census. `death == None` means rabbits never die.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    fertile: usize,
    death: Option<usize>,
}

impl Params {
    pub fn new(fertile: usize, death: Option<usize>) -> Result<Self> {
        if fertile == 0 {
            return Err(Error::InvalidParam {
                name: "fertility age",
                value: 0,
            });
        }
        if death == Some(0) {
            return Err(Error::InvalidParam {
                name: "death age",
                value: 0,
            });
        }
        Ok(Self { fertile, death })
    }

    /// The classical Fibonacci population, `f = 2`, `d = ∞`.
    pub const fn fibonacci() -> Self {
        Self {
            fertile: 2,
            death: None,
        }
    }

    pub const fn fertile(&self) -> usize {
        self.fertile
    }

    pub const fn death(&self) -> Option<usize> {
        self.death
    }

    pub fn class(&self) -> Class {
        match self.death {
            Some(d) if d < self.fertile => Class::Degenerate,
            Some(d) if d == self.fertile => Class::Borderline,
            _ => Class::Standard,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.class() == Class::Degenerate
    }

    /// Fails with [`Error::DegenerateParams`] when `d < f`.
    pub fn require_breeding(&self) -> Result<()> {
        match self.death {
            Some(d) if d < self.fertile => Err(Error::DegenerateParams { f: self.fertile, d }),
            _ => Ok(()),
        }
    }

    /// Number of age classes present at `generation`: `min(d, n)`, or `n`
    /// when rabbits never die.
    pub fn ages_at(&self, generation: usize) -> usize {
        match self.death {
            Some(d) => d.min(generation),
            None => generation,
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.death {
            Some(d) => write!(f, "(f={}, d={})", self.fertile, d),
            None => write!(f, "(f={}, d=inf)", self.fertile),
        }
    }
}

/// Builds [`Params`] from raw, possibly nonpositive user input.
pub fn validate(fertile: i64, death: Option<i64>) -> Result<Params> {
    let to_age = |name, value: i64| {
        usize::try_from(value)
            .ok()
            .filter(|&v| v >= 1)
            .ok_or(Error::InvalidParam { name, value })
    };
    let f = to_age("fertility age", fertile)?;
    let d = death.map(|d| to_age("death age", d)).transpose()?;
    Params::new(f, d)
}

pub fn classify(p: &Params) -> Class {
    p.class()
}
