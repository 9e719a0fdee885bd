//! Dedekind eta, `E₂` and the level-7 hauptmodul at purely imaginary `τ`.
//!
//! For `τ = i√r` the nome `q = e^{−2π√r}` is a real number in `(0, 1)`, so
//! every q-series here has positive, decreasing terms.

use std::fmt;
use crate::clock::Instant;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::{Exact, FixedReal, Rational, GUARD_DIGITS};
use crate::report::{IdentityId, VerifyReport};
use crate::sequences::u_values;
use crate::series::numeric_sum;
use crate::table1::RowId;

/// `τ = i·√(num/den)`, stored in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Tau {
    num: u64,
    den: u64,
}

impl Tau {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::InvalidParameters("τ radicand must be positive".into()));
        }
        let g = num.gcd(&den);
        Ok(Self { num: num / g, den: den / g })
    }

    pub fn radicand(&self) -> (u64, u64) {
        (self.num, self.den)
    }

    /// `kτ` has radicand `k²·r`.
    pub fn scaled(&self, k: u64) -> Self {
        Self::new(self.num * k * k, self.den).expect("positive")
    }

    /// `2π·Im τ`, so that `q = e^{−2π Im τ}`.
    fn two_pi_im(&self, digits: u32) -> FixedReal {
        let r = FixedReal::from_rational(&Rational::new(self.num.into(), self.den.into()), digits);
        let two_pi = FixedReal::pi(digits).mul(&FixedReal::from_i64(2, digits));
        two_pi.mul(&r.sqrt().expect("positive radicand"))
    }

    pub fn q(&self, digits: u32) -> FixedReal {
        self.two_pi_im(digits).neg().exp().expect("bounded argument")
    }
}

impl fmt::Display for Tau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i*sqrt({}/{})", self.num, self.den)
    }
}

fn tail_small(bound: &FixedReal, digits: u32) -> bool {
    bound.abs_lt_pow10(-(digits as i64) - 5)
}

fn eta_work(tau: &Tau, work: u32) -> FixedReal {
    let t = tau.two_pi_im(work);
    let q = t.neg().exp().expect("bounded argument");
    let one = FixedReal::one(work);
    let one_minus_q = one.sub(&q);
    let mut prod = one.clone();
    let mut qm = q.clone();
    loop {
        prod = prod.mul(&one.sub(&qm));
        qm = qm.mul(&q);
        // remaining factors differ from 1 by at most q^{M+1}/(1−q)
        if tail_small(&qm.checked_div(&one_minus_q).expect("q < 1"), work) {
            break;
        }
    }
    let prefactor = t.div_int(&BigInt::from(24)).neg().exp().expect("bounded argument");
    prefactor.mul(&prod)
}

/// `η(τ) = q^{1/24} ∏_{m≥1} (1 − q^m)`.
pub fn eta_value(tau: &Tau, digits: u32) -> FixedReal {
    eta_work(tau, digits + GUARD_DIGITS).with_digits(digits)
}

/// The terms `n·qⁿ/(1 − qⁿ)` of the `E₂` Lambert series, `n = 1..=count`.
pub fn e2_lambert_terms(tau: &Tau, count: usize, digits: u32) -> Vec<FixedReal> {
    let q = tau.q(digits);
    let one = FixedReal::one(digits);
    let mut qn = q.clone();
    (1..=count)
        .map(|n| {
            let t = qn.mul_int(&BigInt::from(n)).checked_div(&one.sub(&qn)).expect("q < 1");
            qn = qn.mul(&q);
            t
        })
        .collect()
}

fn e2_work(tau: &Tau, work: u32) -> FixedReal {
    let q = tau.q(work);
    let one = FixedReal::one(work);
    let c = one.sub(&q);
    let c3 = c.mul(&c).mul(&c);
    let mut sum = FixedReal::zero(work);
    let mut qn = q.clone();
    let mut n = 1i64;
    loop {
        let term = qn.mul_int(&BigInt::from(n)).checked_div(&one.sub(&qn)).expect("q < 1");
        sum = sum.add(&term);
        qn = qn.mul(&q);
        n += 1;
        // Σ_{m≥n} m q^m/(1−q^m) ≤ n·q^n/(1−q)³, scaled by 24
        let bound = qn.mul_int(&BigInt::from(24 * n)).checked_div(&c3).expect("q < 1");
        if tail_small(&bound, work) {
            break;
        }
    }
    one.sub(&sum.mul_int(&BigInt::from(24)))
}

/// `E₂(τ) = 1 − 24 Σ n qⁿ/(1 − qⁿ)`.
pub fn e2_value(tau: &Tau, digits: u32) -> FixedReal {
    e2_work(tau, digits + GUARD_DIGITS).with_digits(digits)
}

fn w_work(tau: &Tau, work: u32) -> FixedReal {
    let a = eta_work(tau, work).powi(4);
    let b = eta_work(&tau.scaled(7), work).powi(4);
    let ab = a.mul(&b);
    let den = a.mul(&a).add(&ab.mul_int(&BigInt::from(13))).add(&b.mul(&b).mul_int(&BigInt::from(49)));
    ab.checked_div(&den).expect("positive eta values")
}

/// `w(τ) = η(τ)⁴η(7τ)⁴ / (η(τ)⁸ + 13η(τ)⁴η(7τ)⁴ + 49η(7τ)⁸)`.
pub fn w_of_tau(tau: &Tau, digits: u32) -> FixedReal {
    w_work(tau, digits + GUARD_DIGITS).with_digits(digits)
}

/// `(7E₂(7τ) − E₂(τ))/6`.
pub fn eisenstein_combination(tau: &Tau, digits: u32) -> FixedReal {
    let work = digits + GUARD_DIGITS;
    let e7 = e2_work(&tau.scaled(7), work);
    let e1 = e2_work(tau, work);
    e7.mul_int(&BigInt::from(7)).sub(&e1).div_int(&BigInt::from(6)).with_digits(digits)
}

fn check_w_guard(w: &FixedReal) -> Result<()> {
    let limit = FixedReal::from_rational(&Rational::new(1.into(), 27.into()), w.digits());
    if w.abs() < limit {
        Ok(())
    } else {
        Err(Error::ConvergenceGuard(w.to_sci_string(12)))
    }
}

/// `Σ_n (a + b·n)·u_n·wⁿ` summed numerically with `u_n` from the recurrence.
pub fn u_weighted_sum(a: &FixedReal, b: &FixedReal, w: &FixedReal, digits: u32) -> Result<FixedReal> {
    check_w_guard(w)?;
    let work = digits + GUARD_DIGITS;
    let mut us: Vec<BigInt> = Vec::new();
    let mut wn = FixedReal::one(work);
    let w = w.with_digits(work);
    let (a, b) = (a.with_digits(work), b.with_digits(work));
    let sum = numeric_sum(
        |n| {
            if n >= us.len() {
                us = u_values(2 * n + 32);
            }
            let coeff = a.add(&b.mul_int(&BigInt::from(n)));
            let t = coeff.mul(&FixedReal::from_int(&us[n], work)).mul(&wn);
            wn = wn.mul(&w);
            Ok(t)
        },
        work,
    )?;
    Ok(sum.value.with_digits(digits))
}

/// `Σ u_n w(τ)ⁿ` against `(7E₂(7τ) − E₂(τ))/6`; passes when they agree to
/// `10^−(P−10)`.
pub fn eisenstein_combo_check(tau: &Tau, digits: u32, id: IdentityId) -> Result<VerifyReport> {
    let start = Instant::now();
    let work = digits + GUARD_DIGITS;
    let w = w_work(tau, work);
    let one = FixedReal::one(work);
    let lhs = u_weighted_sum(&one, &FixedReal::zero(work), &w, work)?;
    let rhs = eisenstein_combination(tau, work);
    let residual = lhs.sub(&rhs);
    Ok(VerifyReport::numeric(id, digits, &residual, digits as i64 - 10).timed(start))
}

/// The Eisenstein check at a parametrised table row.
pub fn eisenstein_row_check(row: RowId, digits: u32) -> Result<VerifyReport> {
    let tau = row_tau(row)?;
    eisenstein_combo_check(&tau, digits, IdentityId::Eisenstein(row))
}

fn row_tau(row: RowId) -> Result<Tau> {
    row.row()
        .tau
        .ok_or_else(|| Error::InvalidParameters(format!("row {row} has no τ parametrisation")))
}

/// `w(τ)` at the row's `τ` against the row's exact `w = v/(1+4v)³`.
pub fn w_bridge_check(row: RowId, digits: u32) -> Result<VerifyReport> {
    let start = Instant::now();
    let tau = row_tau(row)?;
    let exact = row.row().w.as_ref().expect("parametrised row has w");
    let work = digits + GUARD_DIGITS;
    let residual = w_work(&tau, work).sub(&exact.to_fixed(work));
    Ok(VerifyReport::numeric(IdentityId::WBridge(row), digits, &residual, digits as i64 - 10).timed(start))
}

/// `1/(π√7)`.
pub fn inv_pi_sqrt7(digits: u32) -> FixedReal {
    let work = digits + GUARD_DIGITS;
    let s7 = FixedReal::from_i64(7, work).sqrt().expect("positive");
    FixedReal::pi(work).mul(&s7).recip().expect("nonzero").with_digits(digits)
}

/// `Σ (a + b·n)·u_n·wⁿ = 1/(π√7)` for caller-supplied constants.
pub fn pi_check(a: &FixedReal, b: &FixedReal, w: &FixedReal, digits: u32) -> Result<VerifyReport> {
    let start = Instant::now();
    let work = digits + GUARD_DIGITS;
    let lhs = u_weighted_sum(a, b, w, work)?;
    let residual = lhs.sub(&inv_pi_sqrt7(work));
    Ok(VerifyReport::numeric(IdentityId::PiCheck, digits, &residual, digits as i64 - 10).timed(start))
}

/// [`pi_check`] with exact (rational or surd) inputs.
pub fn pi_check_exact(a: &Exact, b: &Exact, w: &Exact, digits: u32) -> Result<VerifyReport> {
    let work = digits + GUARD_DIGITS;
    pi_check(&a.to_fixed(work), &b.to_fixed(work), &w.to_fixed(work), digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_reduces_and_scales() {
        let t = Tau::new(8, 14).unwrap();
        assert_eq!(t.radicand(), (4, 7));
        assert_eq!(t.scaled(7).radicand(), (28, 1));
        assert!(Tau::new(0, 7).is_err());
    }

    #[test]
    fn large_imaginary_part() {
        let tau = Tau::new(100, 1).unwrap();
        let digits = 30;
        // q = e^{−20π} ≈ 5e−28, so η ≈ q^{1/24} and E₂ ≈ 1
        let q24 = FixedReal::pi(50).mul(&FixedReal::from_i64(-20, 50)).div_int(&BigInt::from(24)).exp().unwrap();
        assert!(eta_value(&tau, digits).agrees_with(&q24, 20));
        assert!(e2_value(&tau, digits).agrees_with(&FixedReal::one(digits), 20));
        assert!(eisenstein_combination(&tau, digits).agrees_with(&FixedReal::one(digits), 20));
        let check = eisenstein_combo_check(&tau, digits, IdentityId::PiCheck).unwrap();
        assert!(check.pass);
    }

    #[test]
    fn e2_below_one() {
        let tau = Tau::new(4, 7).unwrap();
        assert!(e2_value(&tau, 20) < FixedReal::one(20));
    }

    #[test]
    fn lambert_terms_positive_and_decreasing() {
        for row in RowId::PARAMETRISED {
            let tau = row.row().tau.unwrap();
            for t in [tau, tau.scaled(7)] {
                let terms = e2_lambert_terms(&t, 40, 30);
                assert!(terms.iter().all(|x| x.signum() == std::cmp::Ordering::Greater));
                assert!(terms.windows(2).all(|w| w[1] < w[0]), "{row}");
            }
        }
    }

    #[test]
    fn w_at_first_row() {
        let tau = Tau::new(4, 7).unwrap();
        let w = w_of_tau(&tau, 40);
        assert!(w.agrees_with(&FixedReal::from_rational(&Rational::new(1.into(), 125.into()), 40), 30));
    }

    #[test]
    fn guard_rejects_large_w() {
        let w = FixedReal::from_rational(&Rational::new(1.into(), 20.into()), 30);
        let one = FixedReal::one(30);
        assert!(matches!(pi_check(&one, &one, &w, 20), Err(Error::ConvergenceGuard(_))));
    }

    #[test]
    fn rows_without_tau_are_rejected() {
        assert!(matches!(w_bridge_check(RowId::VII2, 30), Err(Error::InvalidParameters(_))));
        assert!(matches!(eisenstein_row_check(RowId::VII7, 30), Err(Error::InvalidParameters(_))));
    }
}
