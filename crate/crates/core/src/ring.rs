//! Arithmetic backends shared by the recurrences and the fast evaluator.
//!
//! The same recurrence code runs over exact naturals, exact integers
//! (polynomial remainders have negative coefficients) and `Z/mZ`.

use core::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::value::Modulus;

pub trait Ring: Clone {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `a - b`. Over [`Naturals`] the caller guarantees `a >= b`.
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Image of an exact natural number.
    fn embed(&self, v: &BigUint) -> Self::Elem;
}

/// Rings that can hold negative integer constants.
pub trait Coefficients: Ring {
    fn constant(&self, v: i64) -> Self::Elem;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Naturals;

#[derive(Debug, Clone, Copy, Default)]
pub struct Integers;

/// Residues modulo `m`, held as `u64` and multiplied through `u128`.
#[derive(Debug, Clone, Copy)]
pub struct ZMod {
    m: u64,
}

impl ZMod {
    pub fn new(modulus: Modulus) -> Self {
        Self { m: modulus.get() }
    }

    pub fn modulus(&self) -> Modulus {
        Modulus::new(self.m).expect("constructed from a valid modulus")
    }
}

impl Ring for Naturals {
    type Elem = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a + b
    }
    fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a - b
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b
    }
    fn is_zero(&self, a: &BigUint) -> bool {
        a.is_zero()
    }
    fn embed(&self, v: &BigUint) -> BigUint {
        v.clone()
    }
}

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn embed(&self, v: &BigUint) -> BigInt {
        BigInt::from(v.clone())
    }
}

impl Coefficients for Integers {
    fn constant(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
}

impl Ring for ZMod {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.m as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.m as u128 - *b as u128) % self.m as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.m as u128) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn embed(&self, v: &BigUint) -> u64 {
        self.modulus().reduce(v)
    }
}

impl Coefficients for ZMod {
    fn constant(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.m as i128) as u64
    }
}
