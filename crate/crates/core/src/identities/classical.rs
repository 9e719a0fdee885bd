//! Classical bilinear Legendre generating functions and the three
//! hypergeometric forms of `Σ u_n wⁿ` in the hauptmodul `h`.

use crate::clock::Instant;

use num_traits::{One, Signed};

use super::{earliest, ratfun, require_order, sum_with_arg};
use crate::error::{Error, Result};
use crate::exact::{rat, rational_sqrt, Rational};
use crate::poly::PolyQ;
use crate::report::{IdentityId, VerifyReport};
use crate::sequences::{legendre, u_values};
use crate::series::{hypergeom_series, Series};

type S = Series<Rational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaileyWan {
    /// The form with `√((1−x²)(1−y²))` and `₂F₁(½,½;1)`.
    Bailey,
    /// The form with `₂F₁(¼,¾;1)`.
    Wan,
}

impl BaileyWan {
    fn id(self) -> IdentityId {
        match self {
            BaileyWan::Bailey => IdentityId::Bailey,
            BaileyWan::Wan => IdentityId::Wan,
        }
    }
}

/// `Σ_{n≤N} P_n(x)P_n(y) zⁿ`.
pub fn bailey_wan_lhs(x: &Rational, y: &Rational, n: usize) -> S {
    S::from_coeffs((0..=n).map(|m| legendre(m).eval(x) * legendre(m).eval(y)).collect()).expect("non-empty")
}

fn check_point(x: &Rational, y: &Rational) -> Result<()> {
    if x.abs() >= Rational::one() || y.abs() >= Rational::one() {
        return Err(Error::InvalidParameters(format!("need |x| < 1 and |y| < 1, got ({x}, {y})")));
    }
    Ok(())
}

/// The closed-form side as a series in `z`.
pub fn bailey_wan_rhs(which: BaileyWan, x: &Rational, y: &Rational, n: usize) -> Result<S> {
    check_point(x, y)?;
    let one = Rational::one();
    let prod = (&one - x * x) * (&one - y * y);
    match which {
        BaileyWan::Bailey => {
            let s = rational_sqrt(&prod).ok_or_else(|| {
                Error::InvalidParameters(format!("(1−x²)(1−y²) = {prod} is not a rational square"))
            })?;
            // 1 + z(z − 2s − 2xy)
            let d = PolyQ::new(vec![one.clone(), rat(-2, 1) * (&s + x * y), one.clone()]);
            let d_s = d.to_series(n);
            let arg = S::monomial(rat(-4, 1) * &s, 1, n).div(&d_s)?;
            let f = hypergeom_series(&[rat(1, 2), rat(1, 2)], &[one], &arg, n)?;
            Ok(d_s.powr(&rat(-1, 2))?.mul(&f))
        }
        BaileyWan::Wan => {
            let d = PolyQ::new(vec![one.clone(), rat(-2, 1) * x * y, one.clone()]);
            let d_s = d.to_series(n);
            let arg = S::monomial(rat(4, 1) * prod, 2, n).div(&d_s.pow(2))?;
            let f = hypergeom_series(&[rat(1, 4), rat(3, 4)], &[one], &arg, n)?;
            Ok(d_s.powr(&rat(-1, 2))?.mul(&f))
        }
    }
}

pub fn verify_bailey_wan(which: BaileyWan, x: &Rational, y: &Rational, n: usize) -> Result<VerifyReport> {
    require_order(n, 1)?;
    let start = Instant::now();
    let rhs = bailey_wan_rhs(which, x, y, n)?;
    let lhs = bailey_wan_lhs(x, y, n);
    Ok(VerifyReport::new(which.id(), n as u32, lhs.first_difference(&rhs), None).timed(start))
}

fn p(c: &[i64]) -> PolyQ {
    PolyQ::from_ints(c)
}

/// The three expressions in `h`: the `u_n` form and the two `₃F₂` forms.
pub fn cooper_forms(n: usize) -> Result<[S; 3]> {
    let a = p(&[1, 13, 49]);
    let b = p(&[1, 245, 2401]);
    let c = p(&[1, 5, 1]);
    let params = [rat(1, 6), rat(1, 2), rat(5, 6)];
    let lower = [Rational::one(), Rational::one()];
    let half = rat(-1, 2);

    let first = a.to_series(n).powr(&half)?.mul(&sum_with_arg(&u_values(n), &ratfun(&[0, 1], &a, n)?)?);

    let arg2 = S::monomial(rat(1728, 1), 1, n).div(&a.mul(&b.pow(3)).to_series(n))?;
    let second = b.to_series(n).powr(&half)?.mul(&hypergeom_series(&params, &lower, &arg2, n)?);

    let arg3 = S::monomial(rat(1728, 1), 7, n).div(&a.mul(&c.pow(3)).to_series(n))?;
    let third = c.to_series(n).powr(&half)?.mul(&hypergeom_series(&params, &lower, &arg3, n)?);
    Ok([first, second, third])
}

pub fn verify_cooper_forms(n: usize) -> Result<VerifyReport> {
    require_order(n, 7)?;
    let start = Instant::now();
    let [e1, e2, e3] = cooper_forms(n)?;
    let fail = earliest([e1.first_difference(&e2), e1.first_difference(&e3)]);
    Ok(VerifyReport::new(IdentityId::CooperForms, n as u32, fail, None).timed(start))
}
