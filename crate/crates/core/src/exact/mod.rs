//! Exact and high-precision scalars.

mod fixed;
mod number;
mod quad;

pub use fixed::{fixed_fn, FixedFn, FixedReal, GUARD_DIGITS};
pub use number::Exact;
pub use quad::{quad_arith, QuadExt, QuadOp};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact ratio of big integers, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Binomial coefficient `C(n, k)`; zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeArgument(n));
    }
    Ok(binom(n as u64, k))
}

/// Infallible binomial for internal use with `n >= 0` already established.
pub(crate) fn binom(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Factorial table for repeated binomials with arguments up to `max`.
pub(crate) struct Binomials {
    fact: Vec<BigInt>,
}

impl Binomials {
    pub(crate) fn new(max: usize) -> Self {
        let mut fact = Vec::with_capacity(max + 1);
        fact.push(BigInt::one());
        for i in 1..=max {
            let next = &fact[i - 1] * i;
            fact.push(next);
        }
        Self { fact }
    }

    pub(crate) fn c(&self, n: usize, k: i64) -> BigInt {
        if k < 0 || k as usize > n {
            return BigInt::zero();
        }
        let k = k as usize;
        &self.fact[n] / (&self.fact[k] * &self.fact[n - k])
    }

    pub(crate) fn fact(&self, n: usize) -> &BigInt {
        &self.fact[n]
    }
}

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    use num_traits::Signed;
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub(crate) fn is_squarefree(d: u64) -> bool {
    if d == 0 {
        return false;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= d {
        if d % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    true
}
