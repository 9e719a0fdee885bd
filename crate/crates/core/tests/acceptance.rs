//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach stdout. The
//! process exits non-zero if a criterion fails that is not listed in
//! `KNOWN_FAILURES`, or if a listed one starts passing.

use std::time::Instant;

use legendre_gf::exact::{fixed_fn, FixedFn};
use legendre_gf::identities::{
    self, derivative_cross_check, eval_at_row, main1_numeric_sides, ode_residuals, verify_an_chain, verify_bailey_wan, verify_cooper_forms,
    verify_derivative_identity, verify_main1, verify_main1_with, verify_quartic_example, verify_satellite,
    verify_table1_exact, AnChain, BaileyWan, OdeOperator,
};
use legendre_gf::modular::{
    e2_value, eisenstein_combination, eisenstein_combo_check, eta_value, u_weighted_sum, w_bridge_check, w_of_tau,
    Tau,
};
use legendre_gf::report::IdentityId;
use legendre_gf::sequences::{clausen_square, legendre, u_value, u_values, UMethod};
use legendre_gf::table1::RowId;
use legendre_gf::{FixedReal, Rational, Result};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn c1() -> Result<Outcome> {
    let start = Instant::now();
    let r = verify_main1(40)?;
    let secs = start.elapsed().as_secs_f64();
    let mut u = u_values(40);
    u[2] = BigInt::from(49);
    let neg = verify_main1_with(40, &u)?;
    Ok(outcome(
        r.pass && secs < 60.0 && neg.first_failure == Some(2),
        format!("main1 N=40 pass={} in {secs:.2}s; u_2=49 first_failure={:?}", r.pass, neg.first_failure),
    ))
}

fn c2() -> Result<Outcome> {
    let r = verify_satellite(40)?;
    let s = identities::satellite_series(40, 4)?;
    Ok(outcome(r.pass && s.coeffs().len() == 41 && s.is_zero(), format!("satellite N=40: {} zero coefficients", s.coeffs().len())))
}

fn c3() -> Result<Outcome> {
    let (l, r) = ode_residuals(40, &OdeOperator::standard())?;
    let ok = l.order() == 37 && r.order() == 37 && l.is_zero() && r.is_zero();
    let (ml, mr) = ode_residuals(40, &OdeOperator::with_c0_constant(5))?;
    let broken = !ml.is_zero() && !mr.is_zero();
    Ok(outcome(ok && broken, format!("operator output zero through order {} on both sides; c0 4→5 breaks both: {broken}", l.order())))
}

fn c4() -> Result<Outcome> {
    let r = verify_derivative_identity(30)?;
    let cross = derivative_cross_check(30)?;
    Ok(outcome(r.pass && cross.is_none(), format!("derivative N=30 pass={}; cross-check first difference {cross:?}", r.pass)))
}

fn c5() -> Result<Outcome> {
    let rec = u_values(300);
    let agree = (0..=300).all(|n| {
        let s1 = u_value(n, UMethod::Sum1);
        s1 == u_value(n, UMethod::Sum2) && s1 == rec[n]
    });
    let spots = [1, 4, 48].iter().enumerate().all(|(n, &v)| u_value(n, UMethod::Sum1) == BigInt::from(v));
    Ok(outcome(agree && spots, "sum1 = sum2 = recurrence for n ≤ 300; u_0, u_1, u_2 = 1, 4, 48"))
}

fn c6() -> Result<Outcome> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let ys: Vec<Rational> =
        (0..10).map(|_| Rational::new(rng.gen_range(-50i64..=50).into(), rng.gen_range(1i64..=30).into())).collect();
    let ok = ys.iter().all(|y| {
        (0..=20).all(|n| {
            let p = legendre(n).eval(y);
            clausen_square(n, y) == &p * &p
        })
    });
    Ok(outcome(ok, "Clausen sum equals P_n(y)² exactly for n ≤ 20 at 10 seeded random rationals"))
}

fn c7() -> Result<Outcome> {
    let (x, y) = (Rational::new(3.into(), 5.into()), Rational::new(4.into(), 5.into()));
    let b = verify_bailey_wan(BaileyWan::Bailey, &x, &y, 30)?;
    let w = verify_bailey_wan(BaileyWan::Wan, &x, &y, 30)?;
    // both right-hand sides against each other, so the shared left side is one list
    let rb = identities::bailey_wan_rhs(BaileyWan::Bailey, &x, &y, 30)?;
    let rw = identities::bailey_wan_rhs(BaileyWan::Wan, &x, &y, 30)?;
    Ok(outcome(b.pass && w.pass && rb == rw, format!("(3/5, 4/5) N=30: bailey={} wan={} sides identical={}", b.pass, w.pass, rb == rw)))
}

fn c8() -> Result<Outcome> {
    let r = verify_cooper_forms(30)?;
    let [_, _, third] = identities::cooper_forms(30)?;
    let c = legendre_gf::PolyQ::from_ints(&[1, 5, 1]).to_series(30).powr(&Rational::new((-1).into(), 2.into()))?;
    let deviates = third.first_difference(&c);
    Ok(outcome(
        r.pass && deviates == Some(7),
        format!("three h-series agree to N=30; h⁷ form leaves its prefactor at order {deviates:?}"),
    ))
}

fn c9() -> Result<Outcome> {
    let a = verify_an_chain(AnChain::First, 25)?;
    let b = verify_an_chain(AnChain::Second, 25)?;
    Ok(outcome(a.pass && b.pass, format!("first chain (4 expressions) pass={}; second chain pass={} at N=25", a.pass, b.pass)))
}

fn c10() -> Result<Outcome> {
    let r = verify_table1_exact()?;
    Ok(outcome(r.pass, "rows VII1, VII3–VII6: w, z and x relations hold exactly"))
}

fn c11() -> Result<Outcome> {
    let start = Instant::now();
    let mut worst = String::new();
    let mut ok = true;
    for row in RowId::PARAMETRISED {
        let r = w_bridge_check(row, 40)?;
        let res = r.residual.clone().unwrap_or_default();
        let tau = row.row().tau.unwrap();
        let exact = row.row().w.as_ref().unwrap().to_fixed(60);
        ok &= r.pass && w_of_tau(&tau, 40).sub(&exact).abs_lt_pow10(-30);
        worst.push_str(&format!(" {row}:{res}"));
    }
    let secs = start.elapsed().as_secs_f64();
    Ok(outcome(ok && secs < 30.0, format!("w(τ) vs exact w at P=40 in {secs:.2}s;{worst}")))
}

fn c12() -> Result<Outcome> {
    let tau = Tau::new(4, 7)?;
    let r = eisenstein_combo_check(&tau, 40, IdentityId::Eisenstein(RowId::VII1))?;
    let lhs = u_weighted_sum(&FixedReal::one(60), &FixedReal::zero(60), &w_of_tau(&tau, 60), 60)?;
    let tight = lhs.sub(&eisenstein_combination(&tau, 60)).abs_lt_pow10(-30);
    Ok(outcome(r.pass && tight, format!("τ = 2i/√7, P=40: residual {}", r.residual.unwrap_or_default())))
}

fn c13() -> Result<Outcome> {
    let r = eval_at_row(RowId::VII1, 35)?;
    let (lhs, rhs) = main1_numeric_sides(RowId::VII1, 45, None)?;
    let ratio = lhs.checked_div(&rhs)?;
    Ok(outcome(
        r.pass,
        format!(
            "VII1 at P=35: |LHS − RHS| = {}; LHS = {}, RHS = {}, LHS/RHS = {}",
            r.residual.unwrap_or_default(),
            lhs.to_sci_string(25),
            rhs.to_sci_string(25),
            ratio.to_sci_string(25)
        ),
    ))
}

fn c14() -> Result<Outcome> {
    let r = verify_quartic_example(40)?;
    Ok(outcome(r.pass, format!("root near −6.798 at P=40: max residual {}", r.residual.unwrap_or_default())))
}

/// `a` and `b` agree to `10^−k` relative to `|b|`.
fn rel_agree(a: &FixedReal, b: &FixedReal, k: i64) -> bool {
    let scale = b.log10_floor().unwrap_or(0) + 1;
    a.sub(b).abs_lt_pow10(scale - k)
}

fn c15() -> Result<Outcome> {
    let p = 40u32;
    let q = p + 10;
    let k = p as i64 - 2;
    let mut failures = Vec::new();
    let mut check = |name: String, a: FixedReal, b: FixedReal| {
        if !rel_agree(&a, &b, k) {
            failures.push(name);
        }
    };
    for row in RowId::PARAMETRISED {
        let data = row.row();
        let tau = data.tau.unwrap();
        for (t, label) in [(tau, "τ"), (tau.scaled(7), "7τ")] {
            check(format!("eta({label}) {row}"), eta_value(&t, p), eta_value(&t, q));
            check(format!("E2({label}) {row}"), e2_value(&t, p), e2_value(&t, q));
            let r = t.radicand();
            let rr = FixedReal::from_rational(&Rational::new(r.0.into(), r.1.into()), q);
            check(format!("sqrt {row}"), fixed_fn(FixedFn::Sqrt, &rr, p)?, fixed_fn(FixedFn::Sqrt, &rr, q)?);
            let e = rr.neg();
            check(format!("exp {row}"), fixed_fn(FixedFn::Exp, &e, p)?, fixed_fn(FixedFn::Exp, &e, q)?);
        }
        check(format!("w {row}"), w_of_tau(&tau, p), w_of_tau(&tau, q));
        check(format!("E2 combination {row}"), eisenstein_combination(&tau, p), eisenstein_combination(&tau, q));
        let w = data.w.as_ref().unwrap().to_fixed(q + 10);
        check(format!("log w {row}"), fixed_fn(FixedFn::Log, &w, p)?, fixed_fn(FixedFn::Log, &w, q)?);
        let one = FixedReal::one(q + 10);
        let zero = FixedReal::zero(q + 10);
        check(format!("Σu_n wⁿ {row}"), u_weighted_sum(&one, &zero, &w, p)?, u_weighted_sum(&one, &zero, &w, q)?);
    }
    let pi_p = fixed_fn(FixedFn::PiConst, &FixedReal::zero(p), p)?;
    check("pi".into(), pi_p, fixed_fn(FixedFn::PiConst, &FixedReal::zero(q), q)?);
    let (v_p, _) = identities::quartic_roots(p)?;
    let (v_q, _) = identities::quartic_roots(q)?;
    check("quartic root".into(), v_p, v_q);
    Ok(outcome(failures.is_empty(), format!("P=40 vs P=50 to 10^-38 relative; failures: {failures:?}")))
}

/// Criteria that fail for a reason outside the implementation. 13: the
/// table `v` lie outside the disc where the main identity holds term by
/// term, and the numeric left side converges to twice the right side.
const KNOWN_FAILURES: &[usize] = &[13];

fn main() {
    let criteria: [(&str, fn() -> Result<Outcome>); 15] = [
        ("main identity at N=40 with negative control", c1),
        ("satellite identity at N=40", c2),
        ("third-order operator annihilates both sides", c3),
        ("v-derivative identity at N=30", c4),
        ("u_n triple agreement n ≤ 300", c5),
        ("Clausen property", c6),
        ("bilinear Legendre generating functions", c7),
        ("three hypergeometric forms in h", c8),
        ("A_n identity chains at N=25", c9),
        ("exact table relations", c10),
        ("modular bridge w(τ) = exact w", c11),
        ("Eisenstein combination at τ = 2i/√7", c12),
        ("numeric main identity at VII1", c13),
        ("quartic-field example", c14),
        ("precision doubling", c15),
    ];
    let mut failed = 0;
    let mut unexpected = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, detail) = match f() {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let known = KNOWN_FAILURES.contains(&(i + 1));
        if !pass {
            failed += 1;
        }
        if pass == known {
            unexpected += 1;
        }
        let mark = match (pass, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("criterion {:>2} {mark} {name} [{:.2}s] {detail}", i + 1, start.elapsed().as_secs_f64());
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if unexpected > 0 {
        std::process::exit(1);
    }
}
