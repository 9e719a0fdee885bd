//! Checks at the tabulated parameter values: exact relations in `ℚ(√d)`,
//! the quartic-field example and numeric evaluation of the main identity.

use crate::clock::Instant;

use num_bigint::BigInt;

use super::require_digits;
use crate::error::{Error, Result};
use crate::exact::{Exact, FixedReal, GUARD_DIGITS};
use crate::modular::u_weighted_sum;
use crate::report::{IdentityId, VerifyReport};
use crate::scalar::Scalar;
use crate::sequences::{central_binomial, inner_sum};
use crate::series::numeric_sum;
use crate::table1::RowId;

/// `X = v/(1+5v+8v²)`, `z = X/(1+X)²` and `w = v/(1+4v)³` from `v`.
fn derived(v: &Exact) -> Result<(Exact, Exact, Exact)> {
    let one = v.one_like();
    let den = one.add(&v.mul(&Exact::int(5))?)?.add(&v.mul(v)?.mul(&Exact::int(8))?)?;
    let x = v.div(&den)?;
    let z = x.div(&one.add(&x)?.pow(2))?;
    let w = v.div(&one.add(&v.mul(&Exact::int(4))?)?.pow(3))?;
    Ok((x, z, w))
}

/// Each parametrised row: table `z = X/(1+X)²`, table `x = −X` and table
/// `w = v/(1+4v)³`, exactly. `first_failure` is the index of the first
/// failing row in table order.
pub fn verify_table1_exact() -> Result<VerifyReport> {
    let start = Instant::now();
    let mut fail = None;
    for (i, id) in RowId::ALL.iter().enumerate() {
        let row = id.row();
        let (Some(v), Some(w)) = (&row.v, &row.w) else { continue };
        let (x, z, w_calc) = derived(v)?;
        if row.z != z || row.x != x.neg() || *w != w_calc {
            fail = Some(i);
            break;
        }
    }
    Ok(VerifyReport::new(IdentityId::Table1Exact, 0, fail, None).timed(start))
}

fn quartic(v: &FixedReal) -> FixedReal {
    // 64v⁴ + 448v³ + 96v² + 56v + 1 by Horner
    [448, 96, 56, 1].iter().fold(FixedReal::from_i64(64, v.digits()), |acc, &c| {
        acc.mul(v).add(&FixedReal::from_i64(c, v.digits()))
    })
}

fn bisect(lo: FixedReal, hi: FixedReal, digits: u32) -> Result<FixedReal> {
    let (mut lo, mut hi) = (lo.with_digits(digits), hi.with_digits(digits));
    let f_lo = quartic(&lo).signum();
    if f_lo == quartic(&hi).signum() {
        return Err(Error::RootBracketing(lo.to_sci_string(6), hi.to_sci_string(6)));
    }
    let two = BigInt::from(2);
    for _ in 0..(digits as usize * 10 / 3 + 8) {
        let mid = lo.add(&hi).div_int(&two);
        if quartic(&mid).signum() == f_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo.add(&hi).div_int(&two))
}

/// The real roots of `64v⁴ + 448v³ + 96v² + 56v + 1` in `(−7, −6.5)` and
/// `(−0.1, 0)`.
pub fn quartic_roots(digits: u32) -> Result<(FixedReal, FixedReal)> {
    let f = |n: i64, d: i64| FixedReal::from_rational(&crate::exact::rat(n, d), digits);
    Ok((bisect(f(-7, 1), f(-13, 2), digits)?, bisect(f(-1, 10), f(0, 1), digits)?))
}

/// At the root near `−6.798`, `x(v)` and `z(v)` against the surds
/// `(23−8√11)/175` and `(83−32√11)/1100`. `first_failure` is 0 for `x`,
/// 1 for `z`.
pub fn verify_quartic_example(digits: u32) -> Result<VerifyReport> {
    require_digits(digits, 30)?;
    let start = Instant::now();
    let work = digits + GUARD_DIGITS;
    let (v1, _) = quartic_roots(work)?;
    let one = FixedReal::one(work);
    let den = one.add(&v1.mul_int(&BigInt::from(5))).add(&v1.mul(&v1).mul_int(&BigInt::from(8)));
    let x = v1.checked_div(&den)?;
    let z = x.checked_div(&one.add(&x).powi(2))?;
    let x_ref = Exact::surd(23, 175, -8, 175, 11)?.to_fixed(work);
    let z_ref = Exact::surd(83, 1100, -32, 1100, 11)?.to_fixed(work);
    let rx = x.sub(&x_ref).abs();
    let rz = z.sub(&z_ref).abs();
    let tol = digits as i64 - 10;
    let fail = if !rx.abs_lt_pow10(-tol) {
        Some(0)
    } else if !rz.abs_lt_pow10(-tol) {
        Some(1)
    } else {
        None
    };
    let worst = if rx > rz { rx } else { rz };
    let mut report = VerifyReport::new(IdentityId::Quartic, digits, fail, Some(worst.to_sci_string(6)));
    report = report.timed(start);
    Ok(report)
}

/// Both sides of the main identity summed numerically at a table row.
pub fn eval_at_row(row: RowId, digits: u32) -> Result<VerifyReport> {
    eval_at_row_with(row, digits, None)
}

/// [`eval_at_row`] with an optional perturbation added to `w` on the
/// right-hand side.
pub fn eval_at_row_with(row: RowId, digits: u32, w_shift: Option<&FixedReal>) -> Result<VerifyReport> {
    require_digits(digits, 20)?;
    let start = Instant::now();
    let (lhs, rhs) = main1_numeric_sides(row, digits + GUARD_DIGITS, w_shift)?;
    let residual = lhs.sub(&rhs);
    Ok(VerifyReport::numeric(IdentityId::EvalAtRow(row), digits, &residual, digits as i64 - 10).timed(start))
}

/// `Σ C(2n,n)·zⁿ·S_n(X)` with the row's `z` and `X = v/(1+5v+8v²)`, and
/// `(1+2v)/(1+4v)·Σ u_n (w + w_shift)ⁿ` with the row's `v` and `w`.
pub fn main1_numeric_sides(row: RowId, digits: u32, w_shift: Option<&FixedReal>) -> Result<(FixedReal, FixedReal)> {
    let data = row.row();
    let (Some(v), Some(w)) = (&data.v, &data.w) else {
        return Err(Error::InvalidParameters(format!("row {row} has no v parametrisation")));
    };
    let x = data.x.neg();
    let z = &data.z;

    // each term exact before rounding, so alternating inner sums lose nothing
    let mut zn = z.one_like();
    let lhs = numeric_sum(
        |n| {
            let t = zn.times(&inner_sum(n, &x)).scaled(&central_binomial(n).into());
            zn = zn.times(z);
            Ok(t.to_fixed(digits))
        },
        digits,
    )?
    .value;

    let mut w_num = w.to_fixed(digits);
    if let Some(dw) = w_shift {
        w_num = w_num.add(&dw.with_digits(digits));
    }
    let sum = u_weighted_sum(&FixedReal::one(digits), &FixedReal::zero(digits), &w_num, digits)?;
    let one = v.one_like();
    let pre = one.add(&v.mul(&Exact::int(2))?)?.div(&one.add(&v.mul(&Exact::int(4))?)?)?;
    Ok((lhs, pre.to_fixed(digits).mul(&sum)))
}
