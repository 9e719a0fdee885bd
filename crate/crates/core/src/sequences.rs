//! Exact generators for the integer and polynomial sequences: Legendre
//! polynomials, the Clausen inner sum, the Apéry-like `u_n`, `A_n(x)` and
//! the auxiliary families of the two `A_n` identity chains.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{binom, Binomials, Rational};
use crate::poly::PolyQ;
use crate::scalar::Scalar;

/// Legendre polynomial `P_n(y)` from `(n+1)P_{n+1} = (2n+1)yP_n − nP_{n−1}`.
pub fn legendre(n: usize) -> PolyQ {
    let y = PolyQ::from_ints(&[0, 1]);
    let mut prev = PolyQ::one();
    if n == 0 {
        return prev;
    }
    let mut cur = y.clone();
    for m in 1..n {
        let m_r = Rational::from_integer(m.into());
        let next = y
            .mul(&cur)
            .scale(&Rational::from_integer((2 * m + 1).into()))
            .sub(&prev.scale(&m_r))
            .scale(&Rational::new(1.into(), (m + 1).into()));
        prev = cur;
        cur = next;
    }
    cur
}

/// Coefficients `C(n,k)·C(n+k,n)·C(2k,k)`, `k = 0..=n`, of the inner sum.
pub fn inner_sum_coeffs(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    out.push(c.clone());
    for k in 0..n {
        // ratio c_{k+1}/c_k = (n−k)(n+k+1)(2k+1)·2 / ((k+1)³)
        c = c * (n - k) * (n + k + 1) * (2 * k + 1) * 2u32 / ((k + 1) * (k + 1) * (k + 1));
        out.push(c.clone());
    }
    out
}

/// `S_n(x) = Σ_k C(n,k)C(n+k,n)C(2k,k)·x^k`.
pub fn inner_sum<T: Scalar>(n: usize, x: &T) -> T {
    let powers = powers_of(x, n);
    inner_sum_with_powers(n, &powers)
}

/// `S_n` evaluated from precomputed powers `x^0, …, x^n`.
pub fn inner_sum_with_powers<T: Scalar>(n: usize, powers: &[T]) -> T {
    weighted_sum(&inner_sum_coeffs(n), powers)
}

pub(crate) fn weighted_sum<T: Scalar>(coeffs: &[BigInt], powers: &[T]) -> T {
    let mut acc = powers[0].zero_like();
    for (c, p) in coeffs.iter().zip(powers) {
        if !c.is_zero() {
            acc = acc.plus(&p.scaled(&Rational::from_integer(c.clone())));
        }
    }
    acc
}

/// `[x^0, x^1, …, x^n]`.
pub fn powers_of<T: Scalar>(x: &T, n: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(x.one_like());
    for k in 1..=n {
        let next = out[k - 1].times(x);
        out.push(next);
    }
    out
}

/// Clausen's finite sum for `P_n(y)²`:
/// `Σ_k C(n,k)C(n+k,n)C(2k,k)·(−(1−y²)/4)^k`.
pub fn clausen_square<T: Scalar>(n: usize, y: &T) -> T {
    let quarter = Rational::new(1.into(), 4.into());
    let arg = y.times(y).minus(&y.one_like()).scaled(&quarter);
    inner_sum(n, &arg)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UMethod {
    /// `Σ_k C(n,k)²C(n+k,n)C(2k,n)`
    Sum1,
    /// `Σ_k (−1)^{n−k}C(3n+1,n−k)C(n+k,n)³`
    Sum2,
    /// The three-term Apéry-like recurrence.
    Recurrence,
}

static U_CACHE: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// The Apéry-like sequence `u_n` (OEIS A183204) by the chosen method.
pub fn u_value(n: usize, method: UMethod) -> BigInt {
    match method {
        UMethod::Sum1 => u_sum1(n),
        UMethod::Sum2 => u_sum2(n),
        UMethod::Recurrence => u_values(n)[n].clone(),
    }
}

/// `u_0, …, u_n` from the recurrence, memoised per process.
pub fn u_values(n: usize) -> Vec<BigInt> {
    let mut cache = U_CACHE.lock().unwrap_or_else(|p| p.into_inner());
    if cache.is_empty() {
        cache.push(BigInt::one());
        cache.push(BigInt::from(4));
    }
    while cache.len() <= n {
        let m = cache.len() - 1;
        let mb = BigInt::from(m);
        let a = (2 * &mb + 1) * (13 * &mb * &mb + 13 * &mb + 4) * &cache[m];
        let b = 3 * &mb * (3 * &mb - 1) * (3 * &mb + 1) * &cache[m - 1];
        let d = (&mb + 1) * (&mb + 1) * (&mb + 1);
        let next = (a + b) / d;
        cache.push(next);
    }
    cache[..=n].to_vec()
}

fn u_sum1(n: usize) -> BigInt {
    let b = Binomials::new(2 * n);
    (0..=n as i64)
        .map(|k| {
            let c = b.c(n, k);
            &c * &c * b.c(n + k as usize, n as i64) * b.c(2 * k as usize, n as i64)
        })
        .sum()
}

fn u_sum2(n: usize) -> BigInt {
    let b = Binomials::new(3 * n + 1);
    (0..=n as i64)
        .map(|k| {
            let c = b.c(n + k as usize, n as i64);
            let t = b.c(3 * n + 1, n as i64 - k) * &c * &c * &c;
            if (n as i64 - k) % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuxFamily {
    /// `A_n(x) = Σ_k C(n,k)²C(n+k,n)x^k`
    APoly,
    /// `Σ_k C(n,k)²C(n+k,n)²`
    Apery,
    /// `Σ_k C(n,k)²C(2k,k)C(2n−2k,n−k)`
    Domb,
    /// `(3n)!/n!³`
    ThreeFac,
}

#[derive(Clone, Debug, PartialEq)]
pub enum AuxValue {
    Poly(PolyQ),
    Value(Rational),
    Int(BigInt),
}

/// Evaluate an auxiliary family. `A_n` is returned as a polynomial, or as
/// its value when `x` is supplied; the other families ignore `x`.
pub fn aux_sequence(n: usize, family: AuxFamily, x: Option<&Rational>) -> AuxValue {
    match family {
        AuxFamily::APoly => {
            let p = a_poly(n);
            match x {
                Some(x) => AuxValue::Value(p.eval(x)),
                None => AuxValue::Poly(p),
            }
        }
        AuxFamily::Apery => AuxValue::Int(apery(n)),
        AuxFamily::Domb => AuxValue::Int(domb(n)),
        AuxFamily::ThreeFac => AuxValue::Int(threefac(n)),
    }
}

/// Coefficients `C(n,k)²C(n+k,n)` of `A_n(x)`.
pub fn a_poly_coeffs(n: usize) -> Vec<BigInt> {
    (0..=n as i64)
        .map(|k| {
            let c = binom(n as u64, k);
            &c * &c * binom(n as u64 + k as u64, n as i64)
        })
        .collect()
}

pub fn a_poly(n: usize) -> PolyQ {
    PolyQ::new(a_poly_coeffs(n).into_iter().map(Rational::from_integer).collect())
}

pub fn apery(n: usize) -> BigInt {
    (0..=n as i64)
        .map(|k| {
            let c = binom(n as u64, k) * binom(n as u64 + k as u64, n as i64);
            &c * &c
        })
        .sum()
}

pub fn domb(n: usize) -> BigInt {
    (0..=n as i64)
        .map(|k| {
            let c = binom(n as u64, k);
            let j = n as i64 - k;
            &c * &c * binom(2 * k as u64, k) * binom(2 * j as u64, j)
        })
        .sum()
}

pub fn threefac(n: usize) -> BigInt {
    let b = Binomials::new(3 * n);
    let f = b.fact(n);
    b.fact(3 * n) / (f * f * f)
}

/// Central binomial `C(2n, n)`.
pub fn central_binomial(n: usize) -> BigInt {
    binom(2 * n as u64, n as i64)
}
