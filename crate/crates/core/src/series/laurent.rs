use num_traits::Zero;

use super::Series;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::poly::PolyQ;

/// A truncated Laurent series `Σ c_e v^e`, `e` from the valuation up to an
/// absolute truncation order.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentQ {
    start: i64,
    coeffs: Vec<Rational>,
}

impl LaurentQ {
    fn normalized(mut start: i64, mut coeffs: Vec<Rational>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len().saturating_sub(1));
        coeffs.drain(..lead);
        start += lead as i64;
        Self { start, coeffs }
    }

    /// `v^shift · p(v)`, known through absolute order `order`.
    pub fn from_poly(p: &PolyQ, shift: i64, order: i64) -> Self {
        Self::from_series(&p.to_series((order - shift).max(0) as usize), shift)
    }

    /// `v^shift · s(v)`.
    pub fn from_series(s: &Series<Rational>, shift: i64) -> Self {
        Self::normalized(shift, s.coeffs().to_vec())
    }

    /// Valuation, or `None` for the zero series.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs[0].is_zero()).then_some(self.start)
    }

    /// Highest exponent whose coefficient is known.
    pub fn order(&self) -> i64 {
        self.start + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> Rational {
        if e < self.start || e > self.order() {
            Rational::zero()
        } else {
            self.coeffs[(e - self.start) as usize].clone()
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let start = self.start.min(rhs.start);
        let order = self.order().min(rhs.order());
        Self::normalized(start, (start..=order).map(|e| self.coeff(e) + rhs.coeff(e)).collect())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::normalized(self.start, self.coeffs.iter().map(|c| c * r).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let start = self.start + rhs.start;
        let order = (self.order() + rhs.start).min(rhs.order() + self.start);
        let len = (order - start + 1).max(1) as usize;
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        Self::normalized(start, out)
    }

    /// `self^e`; for `e = 0` the constant 1, known through `max(order, 0)`.
    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Self::from_poly(&PolyQ::one(), 0, self.order().max(0));
        }
        (1..e).fold(self.clone(), |acc, _| acc.mul(self))
    }

    /// Convert to an ordinary power series of order `n`; fails if a negative
    /// power survives or the known range stops short of `n`.
    pub fn into_series(&self, n: usize) -> Result<Series<Rational>> {
        if (self.start..0).any(|e| !self.coeff(e).is_zero()) {
            return Err(Error::NegativeValuation);
        }
        if self.order() < n as i64 {
            return Err(Error::InvalidParameters(format!(
                "Laurent series known only through order {}",
                self.order()
            )));
        }
        Series::from_coeffs((0..=n as i64).map(|e| self.coeff(e)).collect())
    }
}
