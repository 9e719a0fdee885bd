//! Library results against values obtained without the library's own
//! algorithms: published constants, closed forms, `f64` and direct sums.

use legendre_gf::exact::{fixed_fn, FixedFn};
use legendre_gf::modular::{e2_value, eta_value, w_of_tau, Tau};
use legendre_gf::sequences::{legendre, u_value, UMethod};
use legendre_gf::{FixedReal, Rational};
use num_bigint::BigInt;
use num_traits::{One, Pow};

const P: u32 = 45;

/// A decimal literal `d.ddd…` at `digits` digits.
fn dec(s: &str, digits: u32) -> FixedReal {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let mantissa: BigInt = format!("{int}{frac}").parse().unwrap();
    let scale = BigInt::from(10).pow(frac.len() as u32);
    FixedReal::from_rational(&Rational::new(mantissa, scale), digits)
}

const PI: &str = "3.1415926535897932384626433832795028841971693993751";
const SQRT2: &str = "1.4142135623730950488016887242096980785696718753769";
const LN2: &str = "0.69314718055994530941723212145817656807550013436026";
const E: &str = "2.7182818284590452353602874713526624977572470937";
// Γ(1/4)/(2π^{3/4})
const ETA_I: &str = "0.76822542232605665900259417957618064451786691446481";

#[test]
fn published_constants() {
    let zero = FixedReal::zero(P);
    let one = FixedReal::one(P);
    let two = FixedReal::from_i64(2, P);
    assert!(fixed_fn(FixedFn::PiConst, &zero, P).unwrap().agrees_with(&dec(PI, P), P as i64 - 2));
    assert!(fixed_fn(FixedFn::Sqrt, &two, P).unwrap().agrees_with(&dec(SQRT2, P), P as i64 - 2));
    assert!(fixed_fn(FixedFn::Log, &two, P).unwrap().agrees_with(&dec(LN2, P), P as i64 - 2));
    assert!(fixed_fn(FixedFn::Exp, &one, P).unwrap().agrees_with(&dec(E, P), P as i64 - 2));
}

#[test]
fn pi_against_gauss_legendre() {
    let d = 60;
    let half = FixedReal::from_rational(&Rational::new(1.into(), 2.into()), d + 10);
    let (mut a, mut b) = (FixedReal::one(d + 10), half.sqrt().unwrap());
    let mut t = FixedReal::from_rational(&Rational::new(1.into(), 4.into()), d + 10);
    let mut p = FixedReal::one(d + 10);
    let two = BigInt::from(2);
    for _ in 0..8 {
        let next = a.add(&b).div_int(&two);
        b = a.mul(&b).sqrt().unwrap();
        let diff = a.sub(&next);
        t = t.sub(&p.mul(&diff).mul(&diff));
        p = p.mul_int(&two);
        a = next;
    }
    let agm_pi = a.add(&b).powi(2).checked_div(&t.mul_int(&BigInt::from(4))).unwrap();
    assert!(FixedReal::pi(d).agrees_with(&agm_pi, d as i64 - 2));
}

#[test]
fn elementary_functions_against_f64() {
    for k in -40..=40 {
        let x = k as f64 / 8.0;
        let fx = FixedReal::from_rational(&Rational::new(k.into(), 8.into()), 30);
        let e = fixed_fn(FixedFn::Exp, &fx, 30).unwrap().to_f64();
        assert!((e - x.exp()).abs() <= 1e-13 * x.exp(), "exp {x}");
        if k > 0 {
            let l = fixed_fn(FixedFn::Log, &fx, 30).unwrap().to_f64();
            assert!((l - x.ln()).abs() <= 1e-14, "log {x}");
            let s = fixed_fn(FixedFn::Sqrt, &fx, 30).unwrap().to_f64();
            assert!((s - x.sqrt()).abs() <= 1e-14 * x.sqrt(), "sqrt {x}");
        }
    }
}

#[test]
fn modular_values_at_i() {
    let i = Tau::new(1, 1).unwrap();
    assert!(eta_value(&i, P).agrees_with(&dec(ETA_I, P), P as i64 - 2));
    // E₂(i) = 3/π
    let three_over_pi = FixedReal::from_i64(3, P + 10).checked_div(&dec(PI, P + 10)).unwrap();
    assert!(e2_value(&i, P).agrees_with(&three_over_pi, P as i64 - 2));
}

#[test]
fn eta_transformation_at_reciprocal_tau() {
    // η(−1/τ) = √(τ/i)·η(τ); at τ = i·t this is η(i/t) = √t·η(i·t)
    for (num, den) in [(2u64, 1u64), (7, 1), (4, 7), (3, 5)] {
        let t2 = Rational::new(num.into(), den.into());
        let t = FixedReal::from_rational(&t2, P + 10).sqrt().unwrap();
        let lhs = eta_value(&Tau::new(den, num).unwrap(), P);
        let rhs = t.sqrt().unwrap().mul(&eta_value(&Tau::new(num, den).unwrap(), P + 10));
        assert!(lhs.agrees_with(&rhs, P as i64 - 2), "t² = {t2}");
    }
}

#[test]
fn w_at_known_point() {
    let tau = Tau::new(4, 7).unwrap();
    let exact = FixedReal::from_rational(&Rational::new(1.into(), 125.into()), P);
    assert!(w_of_tau(&tau, P).agrees_with(&exact, P as i64 - 2));
}

/// `P_n(x) = 2^{−n} Σ_k C(n,k)² (x−1)^{n−k} (x+1)^k`.
fn legendre_direct(n: usize, x: &Rational) -> Rational {
    let one = Rational::one();
    let mut total = Rational::from_integer(0.into());
    let mut c = BigInt::one();
    for k in 0..=n {
        let term = (x - &one).pow((n - k) as i32) * (x + &one).pow(k as i32);
        total += term * Rational::from_integer(&c * &c);
        c = c * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    total / Rational::from_integer(BigInt::from(2).pow(n as u32))
}

#[test]
fn legendre_against_direct_sum() {
    let points = [(0, 1), (1, 1), (-1, 1), (1, 2), (-3, 7), (5, 3), (13, 11)];
    for n in 0..=10 {
        for &(p, q) in &points {
            let x = Rational::new(p.into(), q.into());
            assert_eq!(legendre(n).eval(&x), legendre_direct(n, &x), "n = {n}, x = {x}");
        }
    }
}

#[test]
fn u_against_tabulated_terms() {
    // Σ_k C(n,k)²C(n+k,n)C(2k,n), summed outside this crate
    let listed = [1u64, 4, 48, 760, 13840, 273504, 5703096, 123519792, 2751843600];
    for (n, &v) in listed.iter().enumerate() {
        assert_eq!(u_value(n, UMethod::Recurrence), BigInt::from(v), "n = {n}");
    }
}

#[test]
fn w_fricke_symmetry() {
    // τ ↦ −1/(7τ) fixes w; on τ = i√r it sends r to 1/(49r)
    for (num, den) in [(1u64, 10u64), (4, 7), (3, 2), (19, 7)] {
        let w = w_of_tau(&Tau::new(num, den).unwrap(), P);
        let mirrored = w_of_tau(&Tau::new(den, 49 * num).unwrap(), P);
        assert!(w.agrees_with(&mirrored, P as i64 - 2), "r = {num}/{den}");
    }
    // at the fixed point τ = i/√7, η(τ)⁴ = 7η(7τ)⁴ and w = 1/27
    let peak = w_of_tau(&Tau::new(1, 7).unwrap(), P);
    let bound = FixedReal::from_rational(&Rational::new(1.into(), 27.into()), P);
    assert!(peak.agrees_with(&bound, P as i64 - 2));
}
