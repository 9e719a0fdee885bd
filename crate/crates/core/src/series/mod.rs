//! Truncated formal power series over exact fields.
//!
//! A [`Series`] of order `N` stores the coefficients of `v^0 … v^N`. Binary
//! operations truncate to the smaller order; nothing beyond order `N` is
//! ever read or written.

mod hypergeom;
mod laurent;
mod numeric;

pub use hypergeom::{hypergeom_coefficients, hypergeom_series};
pub use laurent::LaurentQ;
pub use numeric::{numeric_sum, NumericSum, BURN_IN, MAX_TERMS};

use std::ops::{Add, Mul, Neg, Sub};


use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::poly::PolyQ;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Mul,
    Div,
    Compose,
    Sqrt,
    Derivative,
}

/// Dispatch one of the series algebra operations. `b` is required for
/// `Mul`, `Div` and `Compose` (where `a` is the outer series).
pub fn series_alg<T: Scalar>(op: SeriesOp, a: &Series<T>, b: Option<&Series<T>>) -> Result<Series<T>> {
    let need = || b.ok_or_else(|| Error::InvalidParameters(format!("{op:?} needs two series")));
    match op {
        SeriesOp::Mul => Ok(a.mul(need()?)),
        SeriesOp::Div => a.div(need()?),
        SeriesOp::Compose => a.compose(need()?),
        SeriesOp::Sqrt => a.sqrt(),
        SeriesOp::Derivative => Ok(a.derivative()),
    }
}

/// Expansion of `numerator / denominator` to order `n`.
pub fn ratfun_series(numerator: &PolyQ, denominator: &PolyQ, n: usize) -> Result<Series<Rational>> {
    numerator.to_series(n).div(&denominator.to_series(n))
}

impl<T: Scalar> Series<T> {
    pub fn from_coeffs(coeffs: Vec<T>) -> Result<Self> {
        let first = coeffs.first().ok_or(Error::EmptySeries)?;
        if coeffs.iter().any(|c| !c.same_kind(first)) {
            return Err(Error::InvalidParameters("series coefficients from different fields".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn zero(template: &T, order: usize) -> Self {
        Self { coeffs: vec![template.zero_like(); order + 1] }
    }

    pub fn constant(c: T, order: usize) -> Self {
        let mut s = Self::zero(&c, order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(template: &T, order: usize) -> Self {
        Self::constant(template.one_like(), order)
    }

    /// The series variable `v` itself.
    pub fn variable(template: &T, order: usize) -> Self {
        Self::monomial(template.one_like(), 1, order)
    }

    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        let mut s = Self::zero(&c, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Embed a rational series into the field of `template`.
    pub fn promote(s: &Series<Rational>, template: &T) -> Self {
        Self { coeffs: s.coeffs.iter().map(|c| template.from_rational_like(c)).collect() }
    }

    /// A polynomial over `ℚ`, embedded into the field of `template`.
    pub fn from_poly(p: &PolyQ, template: &T, order: usize) -> Self {
        Self::promote(&p.to_series(order), template)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn template(&self) -> &T {
        &self.coeffs[0]
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero_elem())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    /// Lowest index (up to the common order) where the two series differ.
    pub fn first_difference(&self, rhs: &Self) -> Option<usize> {
        self.coeffs.iter().zip(&rhs.coeffs).position(|(a, b)| a != b)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Series<U> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.plus(b)).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.minus(b)).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(Scalar::negated).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.times(c)).collect() }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.scaled(r)).collect() }
    }

    /// `self + c·rhs`, the inner loop of every linear combination.
    pub fn add_scaled(&self, rhs: &Self, c: &T) -> Self {
        Self {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.plus(&b.times(c))).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![self.template().zero_like(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero_elem() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Self { coeffs: out }
    }

    /// Multiply by a polynomial over `ℚ` without changing the order.
    pub fn mul_poly(&self, p: &PolyQ) -> Self {
        self.mul(&Self::from_poly(p, self.template(), self.order()))
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.template(), self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiply by `v^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = vec![self.template().zero_like(); n + 1];
        for i in k..=n {
            out[i] = self.coeffs[i - k].clone();
        }
        Self { coeffs: out }
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].inverse().ok_or(Error::NonInvertibleConstant)?;
        let n = self.order();
        let mut out: Vec<T> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for m in 1..=n {
            let mut acc = self.template().zero_like();
            for k in 1..=m {
                if !self.coeffs[k].is_zero_elem() {
                    acc = acc.plus(&self.coeffs[k].times(&out[m - k]));
                }
            }
            out.push(acc.negated().times(&inv0));
        }
        Ok(Self { coeffs: out })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inverse()?))
    }

    /// `self(inner(v))` by Horner's rule; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero_elem() {
            return Err(Error::NonzeroInnerConstant);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].plus(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// The square root with constant term 1.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one_elem() {
            return Err(Error::ConstantTermNotOne);
        }
        let half = Rational::new(1.into(), 2.into());
        let n = self.order();
        let mut out: Vec<T> = Vec::with_capacity(n + 1);
        out.push(self.template().one_like());
        for m in 1..=n {
            let mut cross = self.template().zero_like();
            for k in 1..m {
                cross = cross.plus(&out[k].times(&out[m - k]));
            }
            out.push(self.coeffs[m].minus(&cross).scaled(&half));
        }
        Ok(Self { coeffs: out })
    }

    /// `self^α` for rational `α`, constant term 1, from `a·f' = α·a'·f`.
    pub fn powr(&self, alpha: &Rational) -> Result<Self> {
        if !self.coeffs[0].is_one_elem() {
            return Err(Error::ConstantTermNotOne);
        }
        let n = self.order();
        let mut out: Vec<T> = Vec::with_capacity(n + 1);
        out.push(self.template().one_like());
        for m in 1..=n {
            let mut acc = self.template().zero_like();
            for k in 1..=m {
                if self.coeffs[k].is_zero_elem() {
                    continue;
                }
                let w = alpha * Rational::from_integer(k.into()) - Rational::from_integer((m - k).into());
                acc = acc.plus(&self.coeffs[k].times(&out[m - k]).scaled(&w));
            }
            out.push(acc.scaled(&Rational::new(1.into(), m.into())));
        }
        Ok(Self { coeffs: out })
    }

    /// Termwise derivative; the result has order `N − 1` (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(self.template(), 0);
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scaled(&Rational::from_integer(k.into())))
                .collect(),
        }
    }
}

impl<T: Scalar> Scalar for Series<T> {
    fn zero_like(&self) -> Self {
        Self::zero(self.template(), self.order())
    }
    fn one_like(&self) -> Self {
        Self::one(self.template(), self.order())
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        Self::constant(self.template().from_rational_like(r), self.order())
    }
    fn is_zero_elem(&self) -> bool {
        Series::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scaled(&self, r: &Rational) -> Self {
        self.scale_rational(r)
    }
    fn inverse(&self) -> Option<Self> {
        Series::inverse(self).ok()
    }
    fn same_kind(&self, other: &Self) -> bool {
        self.order() == other.order() && self.template().same_kind(other.template())
    }
    fn pow(&self, e: usize) -> Self {
        Series::pow(self, e)
    }
}

impl<T: Scalar> Add for &Series<T> {
    type Output = Series<T>;
    fn add(self, rhs: &Series<T>) -> Series<T> {
        Series::add(self, rhs)
    }
}

impl<T: Scalar> Sub for &Series<T> {
    type Output = Series<T>;
    fn sub(self, rhs: &Series<T>) -> Series<T> {
        Series::sub(self, rhs)
    }
}

impl<T: Scalar> Mul for &Series<T> {
    type Output = Series<T>;
    fn mul(self, rhs: &Series<T>) -> Series<T> {
        Series::mul(self, rhs)
    }
}

impl<T: Scalar> Neg for &Series<T> {
    type Output = Series<T>;
    fn neg(self) -> Series<T> {
        Series::neg(self)
    }
}

/// Shorthand for rational series built from integer coefficients.
pub fn rseries(coeffs: &[i64], order: usize) -> Series<Rational> {
    PolyQ::from_ints(coeffs).to_series(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, QuadExt};

    fn rs(c: &[(i64, i64)]) -> Series<Rational> {
        Series::from_coeffs(c.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    #[test]
    fn geometric_series() {
        let s = ratfun_series(&PolyQ::one(), &PolyQ::from_ints(&[1, -1]), 3).unwrap();
        assert_eq!(s, rseries(&[1, 1, 1, 1], 3));
    }

    #[test]
    fn binomial_inverse_cube() {
        let den = PolyQ::from_ints(&[1, 4]).pow(3);
        let s = ratfun_series(&PolyQ::from_ints(&[0, 1]), &den, 3).unwrap();
        assert_eq!(s, rseries(&[0, 1, -12, 96], 3));
    }

    #[test]
    fn long_division() {
        let s = ratfun_series(&PolyQ::from_ints(&[0, 1]), &PolyQ::from_ints(&[1, 5, 8]), 3).unwrap();
        assert_eq!(s, rseries(&[0, 1, -5, 17], 3));
    }

    #[test]
    fn zero_constant_denominator_rejected() {
        let r = ratfun_series(&PolyQ::one(), &PolyQ::from_ints(&[0, 1]), 3);
        assert_eq!(r, Err(Error::NonInvertibleConstant));
    }

    #[test]
    fn sqrt_of_one_plus_v() {
        let s = rseries(&[1, 1], 2).sqrt().unwrap();
        assert_eq!(s, rs(&[(1, 1), (1, 2), (-1, 8)]));
        assert_eq!(rseries(&[2, 1], 2).sqrt(), Err(Error::ConstantTermNotOne));
    }

    #[test]
    fn derivative_drops_order() {
        let d = rseries(&[1, 2, 3], 2).derivative();
        assert_eq!(d, rseries(&[2, 6], 1));
    }

    #[test]
    fn compose_matches_closed_form() {
        // X/(1+X)^2 with X = v/(1+5v+8v²) equals v(1+5v+8v²)/((1+2v)²(1+4v)²)
        let n = 12;
        let x = ratfun_series(&PolyQ::from_ints(&[0, 1]), &PolyQ::from_ints(&[1, 5, 8]), n).unwrap();
        let outer = ratfun_series(&PolyQ::from_ints(&[0, 1]), &PolyQ::from_ints(&[1, 1]).pow(2), n).unwrap();
        let composed = outer.compose(&x).unwrap();
        let den = PolyQ::from_ints(&[1, 2]).pow(2).mul(&PolyQ::from_ints(&[1, 4]).pow(2));
        let closed = ratfun_series(&PolyQ::from_ints(&[0, 1, 5, 8]), &den, n).unwrap();
        assert_eq!(composed, closed);
        assert_eq!(composed.coeff(1), &rat(1, 1));
        assert_eq!(composed.coeff(2), &rat(-7, 1));
        assert_eq!(outer.compose(&rseries(&[1, 1], n)), Err(Error::NonzeroInnerConstant));
    }

    #[test]
    fn series_alg_dispatch() {
        let a = rseries(&[1, 1], 4);
        let b = rseries(&[1, -1], 4);
        let q = series_alg(SeriesOp::Div, &a, Some(&b)).unwrap();
        assert_eq!(series_alg(SeriesOp::Mul, &q, Some(&b)).unwrap(), a);
        assert!(series_alg(SeriesOp::Mul, &a, None).is_err());
    }

    #[test]
    fn rational_power_agrees_with_sqrt() {
        let s = rseries(&[1, 13, 49], 10);
        assert_eq!(s.powr(&rat(1, 2)).unwrap(), s.sqrt().unwrap());
        let inv_sqrt = s.powr(&rat(-1, 2)).unwrap();
        assert_eq!(inv_sqrt, s.sqrt().unwrap().inverse().unwrap());
    }

    #[test]
    fn quadratic_field_coefficients() {
        let t = QuadExt::from_ratios(1, 1, 1, 4, 14).unwrap();
        let s = Series::from_coeffs(vec![t.one_like(), t.clone(), t.zero_like()]).unwrap();
        let inv = s.inverse().unwrap();
        assert_eq!(s.mul(&inv), Series::one(&t, 2));
        let u = QuadExt::from_ratios(1, 1, 1, 1, 2).unwrap();
        assert!(Series::from_coeffs(vec![t, u]).is_err());
    }

    #[test]
    fn shift_and_pow() {
        let s = rseries(&[1, 1], 4);
        assert_eq!(s.pow(3), rseries(&[1, 3, 3, 1, 0], 4));
        assert_eq!(s.shift(2), rseries(&[0, 0, 1, 1, 0], 4));
        assert_eq!(rseries(&[0, 0, 5], 3).valuation(), Some(2));
    }
}
