//! The main generating-function identity in `v`, its Legendre form, the
//! satellite identity, the third-order operator and the `v`-derivative.

use crate::clock::Instant;

use num_bigint::BigInt;
use num_traits::One;

use super::{earliest, ensure_positive_valuation, ratfun, require_order, sum_with_arg};
use crate::error::Result;
use crate::exact::Rational;
use crate::poly::PolyQ;
use crate::report::{IdentityId, VerifyReport};
use crate::scalar::Scalar;
use crate::sequences::{central_binomial, clausen_square, inner_sum_coeffs, legendre, powers_of, u_values};
use crate::series::Series;

type S = Series<Rational>;

fn p(c: &[i64]) -> PolyQ {
    PolyQ::from_ints(c)
}

/// `1 + 5v + 8v²`
fn quad_den() -> PolyQ {
    p(&[1, 5, 8])
}

/// `x(v) = v/(1+5v+8v²)`
fn x_of_v(n: usize) -> Result<S> {
    ratfun(&[0, 1], &quad_den(), n)
}

/// `z(v) = v(1+5v+8v²)/((1+2v)²(1+4v)²)`
fn z_of_v(n: usize) -> Result<S> {
    let den = p(&[1, 2]).mul(&p(&[1, 4])).pow(2);
    crate::series::ratfun_series(&p(&[0, 1]).mul(&quad_den()), &den, n)
}

/// `v/(1+4v)³`
fn w_of_v(n: usize) -> Result<S> {
    ratfun(&[0, 1], &p(&[1, 4]).pow(3), n)
}

/// `Σ_{m≤N} C(2m,m)·z^m·term(m)`, where `term` gets `m` and the powers of `x`.
fn twisted_sum(z: &S, x: &S, mut term: impl FnMut(usize, &[S]) -> S) -> Result<S> {
    ensure_positive_valuation(z)?;
    ensure_positive_valuation(x)?;
    let n = z.order().min(x.order());
    let xs = powers_of(&x.truncate(n), n);
    let mut acc = S::zero(&Rational::one(), n);
    let mut zm = S::one(&Rational::one(), n);
    let z = z.truncate(n);
    for m in 0..=n {
        let t = term(m, &xs[..=m]);
        acc = acc.add(&zm.mul(&t).scale_rational(&Rational::from_integer(central_binomial(m))));
        zm = zm.mul(&z);
    }
    Ok(acc)
}

/// `Σ_k C(m,k)C(m+k,m)C(2k,k)·x^k` and its `k`-weighted companion.
fn inner_pair(m: usize, xs: &[S]) -> (S, S) {
    let coeffs = inner_sum_coeffs(m);
    let mut plain = xs[0].zero_like();
    let mut weighted = xs[0].zero_like();
    for (k, (c, xk)) in coeffs.iter().zip(xs).enumerate() {
        let c = Rational::from_integer(c.clone());
        plain = plain.add(&xk.scale_rational(&c));
        weighted = weighted.add(&xk.scale_rational(&(c * Rational::from_integer(k.into()))));
    }
    (plain, weighted)
}

/// `Σ C(2n,n) z(v)ⁿ Σ_k C(n,k)C(n+k,n)C(2k,k) x(v)^k` to order `N`.
pub fn main1_lhs(n: usize) -> Result<S> {
    twisted_sum(&z_of_v(n)?, &x_of_v(n)?, |m, xs| inner_pair(m, xs).0)
}

/// The same left side assembled from Clausen's sum for `P_n(y)²` with
/// `y = √((1+v)(1+8v)/(1+5v+8v²))` taken as a series.
pub fn main1_lhs_clausen(n: usize) -> Result<S> {
    let y = crate::series::ratfun_series(&p(&[1, 9, 8]), &quad_den(), n)?.sqrt()?;
    let z = z_of_v(n)?;
    ensure_positive_valuation(&z)?;
    let mut acc = S::zero(&Rational::one(), n);
    let mut zm = S::one(&Rational::one(), n);
    for m in 0..=n {
        let t = clausen_square(m, &y);
        acc = acc.add(&zm.mul(&t).scale_rational(&Rational::from_integer(central_binomial(m))));
        zm = zm.mul(&z);
    }
    Ok(acc)
}

/// `(1+2v)/(1+4v)·Σ u_n (v/(1+4v)³)ⁿ` with the given `u_0, …, u_N`.
pub fn main1_rhs(n: usize, u: &[BigInt]) -> Result<S> {
    let pre = ratfun(&[1, 2], &p(&[1, 4]), n)?;
    Ok(pre.mul(&sum_with_arg(u, &w_of_v(n)?)?))
}

/// Both sides of the main identity to order `N`.
pub fn main1_sides(n: usize) -> Result<(S, S)> {
    Ok((main1_lhs(n)?, main1_rhs(n, &u_values(n))?))
}

pub fn verify_main1(n: usize) -> Result<VerifyReport> {
    verify_main1_with(n, &u_values(n))
}

/// [`verify_main1`] with caller-supplied `u_0, …, u_N`.
pub fn verify_main1_with(n: usize, u: &[BigInt]) -> Result<VerifyReport> {
    require_order(n, 1)?;
    let start = Instant::now();
    let lhs = main1_lhs(n)?;
    let rhs = main1_rhs(n, u)?;
    Ok(VerifyReport::new(IdentityId::Main1, n as u32, lhs.first_difference(&rhs), None).timed(start))
}

/// `Σ C(2n,n) P_n(y)² zⁿ` with `P_n(y)²` written as a polynomial in
/// `y² = 1 + 4v/den(v)`.
pub fn pn_form_lhs(n: usize, den: &PolyQ) -> Result<S> {
    let y2 = crate::series::ratfun_series(&den.add(&p(&[0, 4])), den, n)?;
    let z = z_of_v(n)?;
    ensure_positive_valuation(&z)?;
    let mut acc = S::zero(&Rational::one(), n);
    let mut zm = S::one(&Rational::one(), n);
    for m in 0..=n {
        let pm = legendre(m);
        let sq = pm.mul(&pm).even_part_in_square().expect("P_n² is even");
        acc = acc.add(&zm.mul(&sq.eval(&y2)).scale_rational(&Rational::from_integer(central_binomial(m))));
        zm = zm.mul(&z);
    }
    Ok(acc)
}

pub fn verify_equivalent_pn_form(n: usize) -> Result<VerifyReport> {
    verify_pn_form_with(n, &quad_den())
}

/// The Legendre form with `x(v) = v/den(v)`; the identity holds only for
/// `den = 1 + 5v + 8v²`.
pub fn verify_pn_form_with(n: usize, den: &PolyQ) -> Result<VerifyReport> {
    require_order(n, 1)?;
    let start = Instant::now();
    // 1 + 4x(v) against the factored (1+v)(1+8v)/(1+5v+8v²)
    let one_plus_4x = S::one(&Rational::one(), n).add(&ratfun(&[0, 4], den, n)?);
    let factored = crate::series::ratfun_series(&p(&[1, 1]).mul(&p(&[1, 8])), &quad_den(), n)?;
    let lhs = pn_form_lhs(n, den)?;
    let fail = earliest([
        one_plus_4x.first_difference(&factored),
        lhs.first_difference(&main1_lhs(n)?),
        lhs.first_difference(&main1_rhs(n, &u_values(n))?),
    ]);
    Ok(VerifyReport::new(IdentityId::PnForm, n as u32, fail, None).timed(start))
}

/// The satellite sum in `x` with `z = x/(1+x)²` and the bracket
/// `2x(3+4x) − n(1−x)(3+5x) + k_coef·k(1+x)(1+4x)`; zero when `k_coef = 4`.
pub fn satellite_series(n: usize, k_coef: i64) -> Result<S> {
    let x = S::variable(&Rational::one(), n);
    let z = ratfun(&[0, 1], &p(&[1, 1]).pow(2), n)?;
    let b0 = S::from_poly(&p(&[0, 6, 8]), &Rational::one(), n);
    let b1 = S::from_poly(&p(&[1, -1]).mul(&p(&[3, 5])), &Rational::one(), n);
    let b2 = S::from_poly(&p(&[1, 1]).mul(&p(&[1, 4])).scale(&Rational::from_integer(k_coef.into())), &Rational::one(), n);
    twisted_sum(&z, &x, |m, xs| {
        let (plain, weighted) = inner_pair(m, xs);
        let bracket = b0.sub(&b1.scale_rational(&Rational::from_integer(m.into())));
        plain.mul(&bracket).add(&weighted.mul(&b2))
    })
}

pub fn verify_satellite(n: usize) -> Result<VerifyReport> {
    verify_satellite_with(n, 4)
}

pub fn verify_satellite_with(n: usize, k_coef: i64) -> Result<VerifyReport> {
    require_order(n, 1)?;
    let start = Instant::now();
    let s = satellite_series(n, k_coef)?;
    Ok(VerifyReport::new(IdentityId::Satellite, n as u32, s.valuation(), None).timed(start))
}

/// `c₃·f''' + c₂·f'' + c₁·f' + c₀·f` with polynomial coefficients in `v`.
#[derive(Clone, Debug, PartialEq)]
pub struct OdeOperator {
    pub c3: PolyQ,
    pub c2: PolyQ,
    pub c1: PolyQ,
    pub c0: PolyQ,
}

impl OdeOperator {
    /// The operator annihilating both sides of the main identity.
    pub fn standard() -> Self {
        Self::with_c0_constant(4)
    }

    /// The standard operator with `c₀ = k·(1 + 22v + 108v² + 128v³)`.
    pub fn with_c0_constant(k: i64) -> Self {
        Self {
            c3: p(&[0, 0, 1]).mul(&p(&[1, 1])).mul(&p(&[1, 8])).mul(&quad_den()),
            c2: p(&[0, 3, 63, 366, 840, 576]),
            c1: p(&[1, 50, 454, 1408, 1216]),
            c0: p(&[1, 22, 108, 128]).scale(&Rational::from_integer(k.into())),
        }
    }

    /// Apply to a series of order `N`; the result has order `N − 3`.
    pub fn apply(&self, f: &S) -> S {
        let d1 = f.derivative();
        let d2 = d1.derivative();
        let d3 = d2.derivative();
        let m = d3.order();
        let one = Rational::one();
        let term = |c: &PolyQ, g: &S| S::from_poly(c, &one, m).mul(&g.truncate(m));
        term(&self.c3, &d3).add(&term(&self.c2, &d2)).add(&term(&self.c1, &d1)).add(&term(&self.c0, f))
    }
}

/// The operator applied to both sides of the main identity divided by
/// `(1+2v)(1+4v)`.
pub fn ode_residuals(n: usize, op: &OdeOperator) -> Result<(S, S)> {
    require_order(n, 4)?;
    let clear = S::from_poly(&p(&[1, 2]).mul(&p(&[1, 4])), &Rational::one(), n);
    let lhs = main1_lhs(n)?.div(&clear)?;
    // Σ u_n vⁿ/(1+4v)^{3n+2}
    let rhs = sum_with_arg(&u_values(n), &w_of_v(n)?)?.mul(&ratfun(&[1], &p(&[1, 4]).pow(2), n)?);
    Ok((op.apply(&lhs), op.apply(&rhs)))
}

pub fn verify_ode_annihilation(n: usize) -> Result<VerifyReport> {
    verify_ode_with(n, &OdeOperator::standard())
}

pub fn verify_ode_with(n: usize, op: &OdeOperator) -> Result<VerifyReport> {
    let start = Instant::now();
    let (l, r) = ode_residuals(n, op)?;
    Ok(VerifyReport::new(IdentityId::Ode, n as u32, earliest([l.valuation(), r.valuation()]), None).timed(start))
}

/// `v·(1+2v)(1+4v)(1+5v+8v²)`, the common denominator of the derivative
/// identity.
fn derivative_clearing() -> PolyQ {
    p(&[0, 1]).mul(&p(&[1, 2])).mul(&p(&[1, 4])).mul(&quad_den())
}

/// Both sides of the `v`-derivative identity after multiplying through by
/// `v(1+2v)(1+4v)(1+5v+8v²)`. `sign = −1` gives the identity; `+1` flips
/// the sign of the constant part of the right bracket.
pub fn derivative_sides(n: usize, sign: i64) -> Result<(S, S)> {
    let one = Rational::one();
    let poly = |q: PolyQ| S::from_poly(&q, &one, n);
    let a = p(&[1, 0, -8]);
    let nw = poly(a.mul(&p(&[1, 4, 8])));
    let kw = poly(a.mul(&p(&[1, 2])).mul(&p(&[1, 4])));
    let lhs = twisted_sum(&z_of_v(n)?, &x_of_v(n)?, |m, xs| {
        let (plain, weighted) = inner_pair(m, xs);
        plain.mul(&nw).scale_rational(&Rational::from_integer(m.into())).add(&weighted.mul(&kw))
    })?;
    // Σ u_n wⁿ·(n(1−8v)(1+2v)(1+5v+8v²) + sign·2v(1+5v+8v²))
    let w = w_of_v(n)?;
    let u = u_values(n);
    let weighted_u: Vec<BigInt> = u.iter().enumerate().map(|(m, c)| c * m).collect();
    let bn = poly(p(&[1, -8]).mul(&p(&[1, 2])).mul(&quad_den()));
    let b0 = poly(p(&[0, 2]).mul(&quad_den()).scale(&Rational::from_integer(sign.into())));
    let sum = sum_with_arg(&weighted_u, &w)?.mul(&bn).add(&sum_with_arg(&u, &w)?.mul(&b0));
    let rhs = ratfun(&[1, 2], &p(&[1, 4]), n)?.mul(&sum);
    Ok((lhs, rhs))
}

/// First index where the cleared left side differs from the cleared
/// `v`-derivative of the main left side (compared through order `N − 1`).
pub fn derivative_cross_check(n: usize) -> Result<Option<usize>> {
    require_order(n, 1)?;
    let (lhs, _) = derivative_sides(n, -1)?;
    let d = main1_lhs(n)?.derivative();
    let cleared = d.mul_poly(&derivative_clearing());
    Ok(lhs.truncate(d.order()).first_difference(&cleared))
}

pub fn verify_derivative_identity(n: usize) -> Result<VerifyReport> {
    verify_derivative_with(n, -1)
}

pub fn verify_derivative_with(n: usize, sign: i64) -> Result<VerifyReport> {
    require_order(n, 1)?;
    let start = Instant::now();
    let (lhs, rhs) = derivative_sides(n, sign)?;
    let fail = earliest([lhs.first_difference(&rhs), derivative_cross_check(n)?]);
    Ok(VerifyReport::new(IdentityId::Derivative, n as u32, fail, None).timed(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::series::rseries;

    #[test]
    fn main1_first_order_by_hand() {
        let (l, r) = main1_sides(1).unwrap();
        assert_eq!(l, rseries(&[1, 2], 1));
        assert_eq!(r, rseries(&[1, 2], 1));
    }

    #[test]
    fn z_closed_form_matches_composition() {
        let n = 12;
        let x = x_of_v(n).unwrap();
        let one = S::one(&Rational::one(), n);
        let via_x = x.div(&one.add(&x).pow(2)).unwrap();
        assert_eq!(via_x, z_of_v(n).unwrap());
    }

    #[test]
    fn main1_small_orders() {
        for n in 1..=10 {
            assert!(verify_main1(n).unwrap().pass, "order {n}");
        }
        let mut u = u_values(10);
        u[2] = BigInt::from(49);
        assert_eq!(verify_main1_with(10, &u).unwrap().first_failure, Some(2));
    }

    #[test]
    fn clausen_assembly_agrees() {
        assert_eq!(main1_lhs(10).unwrap(), main1_lhs_clausen(10).unwrap());
    }

    #[test]
    fn pn_form_and_mutation() {
        assert!(verify_equivalent_pn_form(10).unwrap().pass);
        assert!(!verify_pn_form_with(10, &p(&[1, 5, 9])).unwrap().pass);
    }

    #[test]
    fn satellite_constant_term_vanishes() {
        let s = satellite_series(8, 4).unwrap();
        assert_eq!(s.coeff(0), &rat(0, 1));
        assert!(s.is_zero());
        assert!(!verify_satellite_with(8, 5).unwrap().pass);
    }

    #[test]
    fn ode_operator_coefficients() {
        let op = OdeOperator::standard();
        assert_eq!(op.c3, p(&[0, 0, 1, 14, 61, 112, 64]));
        assert_eq!(op.c2, p(&[0, 1, 21, 122, 280, 192]).scale(&rat(3, 1)));
        assert_eq!(op.c0, p(&[4, 88, 432, 512]));
    }

    #[test]
    fn ode_annihilates_small_order() {
        let (l, r) = ode_residuals(10, &OdeOperator::standard()).unwrap();
        assert_eq!(l.order(), 7);
        assert!(l.is_zero() && r.is_zero());
        let (l, r) = ode_residuals(10, &OdeOperator::with_c0_constant(5)).unwrap();
        assert!(!l.is_zero() && !r.is_zero());
    }

    #[test]
    fn derivative_small_order() {
        assert!(verify_derivative_identity(8).unwrap().pass);
        assert_eq!(derivative_cross_check(8).unwrap(), None);
        assert!(!verify_derivative_with(8, 1).unwrap().pass);
    }

    #[test]
    fn derivative_constant_terms_vanish() {
        let (l, r) = derivative_sides(4, -1).unwrap();
        assert_eq!(l.coeff(0), &rat(0, 1));
        assert_eq!(r.coeff(0), &rat(0, 1));
    }

    #[test]
    fn rejects_order_zero() {
        assert!(verify_main1(0).is_err());
        assert!(verify_ode_annihilation(3).is_err());
    }
}
