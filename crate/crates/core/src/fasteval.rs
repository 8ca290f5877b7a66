//! `F_n` in `O(D^2 log n)` ring operations, where `D` is the order of the
//! linear recurrence.
//!
//! For finite `d` the sequence satisfies
//! `F_n = F_{n-1} + F_{n-f} - F_{n-d-1}` from `n = d + 2` on, so the shifted
//! sequence `s_k = F_{k+1}` is annihilated by
//! `c(x) = x^{d+1} - x^d - x^{d+1-f} + 1` and
//! `F_n = sum_i r_i F_{i+1}` with `r(x) = x^{n-1} mod c(x)`. The seeds
//! `F_1..=F_{d+1}` come from the boundary cases of the recurrence. For
//! infinite `d`, `c(x) = x^f - x^{f-1} - 1` with seeds `F_1..=F_f`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::params::Params;
use crate::recurrence::{theorem1_term_in, Theorem1Terms};
use crate::ring::{Coefficients, Integers, ZMod};
use crate::value::{Modulus, TermValue};
use num_bigint::{BigInt, BigUint, Sign};

/// Monic characteristic polynomial, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<i64>,
}

impl CharPoly {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `sum_i coeffs[i] * terms[i]`; zero whenever `terms` is a window of
    /// `D + 1` consecutive terms inside the range where the order-`D`
    /// recurrence holds.
    pub fn apply(&self, terms: &[BigUint]) -> BigInt {
        self.coeffs
            .iter()
            .zip(terms)
            .map(|(&c, t)| BigInt::from(c) * BigInt::from(t.clone()))
            .sum()
    }
}

pub fn char_poly(params: &Params) -> Result<CharPoly> {
    params.require_breeding()?;
    let f = params.fertile();
    let coeffs = match params.death() {
        Some(d) => {
            let mut c = vec![0i64; d + 2];
            c[d + 1] += 1;
            c[d] -= 1;
            c[d + 1 - f] -= 1;
            c[0] += 1;
            c
        }
        None => {
            let mut c = vec![0i64; f + 1];
            c[f] += 1;
            c[f - 1] -= 1;
            c[0] -= 1;
            c
        }
    };
    Ok(CharPoly { coeffs })
}

fn lift<R: Coefficients>(ring: &R, poly: &CharPoly) -> Vec<R::Elem> {
    poly.coeffs.iter().map(|&c| ring.constant(c)).collect()
}

/// Reduces `p` in place modulo the monic `c` (given with its leading 1).
fn reduce_in<R: Coefficients>(ring: &R, mut p: Vec<R::Elem>, c: &[R::Elem]) -> Vec<R::Elem> {
    let degree = c.len() - 1;
    for k in (degree..p.len()).rev() {
        if ring.is_zero(&p[k]) {
            continue;
        }
        let top = core::mem::replace(&mut p[k], ring.zero());
        let base = k - degree;
        for (i, ci) in c[..degree].iter().enumerate() {
            if !ring.is_zero(ci) {
                p[base + i] = ring.sub(&p[base + i], &ring.mul(&top, ci));
            }
        }
    }
    p.resize(degree, ring.zero());
    p
}

fn mul_reduce<R: Coefficients>(
    ring: &R,
    a: &[R::Elem],
    b: &[R::Elem],
    c: &[R::Elem],
) -> Vec<R::Elem> {
    let len = (a.len() + b.len()).saturating_sub(1).max(c.len() - 1);
    let mut product = vec![ring.zero(); len];
    for (i, ai) in a.iter().enumerate() {
        if ring.is_zero(ai) {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            product[i + j] = ring.add(&product[i + j], &ring.mul(ai, bj));
        }
    }
    reduce_in(ring, product, c)
}

/// `(a * b) mod c` over any coefficient ring, schoolbook multiplication.
pub fn poly_mul_mod_in<R: Coefficients>(
    ring: &R,
    a: &[R::Elem],
    b: &[R::Elem],
    c: &CharPoly,
) -> Vec<R::Elem> {
    mul_reduce(ring, a, b, &lift(ring, c))
}

/// `(a * b) mod c`, with integer coefficients or, given `modulus`, with
/// coefficients in `0..m`.
pub fn poly_mul_mod(
    a: &[BigInt],
    b: &[BigInt],
    c: &CharPoly,
    modulus: Option<u64>,
) -> Result<Vec<BigInt>> {
    match modulus {
        None => Ok(poly_mul_mod_in(&Integers, a, b, c)),
        Some(m) => {
            let m = Modulus::new(m)?;
            let ring = ZMod::new(m);
            let to_residue = |v: &BigInt| -> u64 {
                let r = v.magnitude() % m.get();
                let r = u64::try_from(&r).expect("below modulus");
                if v.sign() == Sign::Minus && r != 0 {
                    m.get() - r
                } else {
                    r
                }
            };
            let a: Vec<u64> = a.iter().map(to_residue).collect();
            let b: Vec<u64> = b.iter().map(to_residue).collect();
            Ok(poly_mul_mod_in(&ring, &a, &b, c)
                .into_iter()
                .map(BigInt::from)
                .collect())
        }
    }
}

/// `x^exp mod c` by left-to-right square-and-multiply.
pub fn x_pow_mod_in<R: Coefficients>(ring: &R, exp: u64, c: &CharPoly) -> Vec<R::Elem> {
    let c = lift(ring, c);
    let mut acc = reduce_in(ring, vec![ring.one()], &c);
    for bit in (0..u64::BITS - exp.leading_zeros()).rev() {
        acc = mul_reduce(ring, &acc, &acc, &c);
        if exp >> bit & 1 == 1 {
            acc.insert(0, ring.zero());
            acc = reduce_in(ring, acc, &c);
        }
    }
    acc
}

/// `F_n` in any coefficient ring.
pub fn fast_term_in<R: Coefficients>(ring: R, params: &Params, n: u64) -> Result<R::Elem> {
    let poly = char_poly(params)?;
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let order = poly.degree();
    if n <= order as u64 {
        return theorem1_term_in(ring, params, n as usize);
    }
    let seeds: Vec<R::Elem> = Theorem1Terms::new(ring.clone(), params)?
        .take(order)
        .collect();
    let remainder = x_pow_mod_in(&ring, n - 1, &poly);
    Ok(remainder
        .iter()
        .zip(&seeds)
        .fold(ring.zero(), |acc, (r, s)| ring.add(&acc, &ring.mul(r, s))))
}

/// `F_n` exactly, or modulo `modulus`.
pub fn fast_term(params: &Params, n: u64, modulus: Option<u64>) -> Result<TermValue> {
    match modulus {
        None => {
            let value = fast_term_in(Integers, params, n)?;
            let value = value
                .to_biguint()
                .expect("population counts are nonnegative");
            Ok(TermValue::Exact(value))
        }
        Some(m) => {
            let m = Modulus::new(m)?;
            let value = fast_term_in(ZMod::new(m), params, n)?;
            Ok(TermValue::Residue { value, modulus: m })
        }
    }
}
