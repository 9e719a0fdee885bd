use num_traits::{One, Signed, Zero};

use super::Series;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::scalar::Scalar;

/// Coefficients `∏(a_i)_k / ∏(b_j)_k / k!` for `k = 0..=n`.
pub fn hypergeom_coefficients(upper: &[Rational], lower: &[Rational], n: usize) -> Result<Vec<Rational>> {
    if let Some(b) = lower.iter().find(|b| b.is_integer() && !b.is_positive()) {
        return Err(Error::InvalidLowerParameter(b.to_string()));
    }
    let mut out = Vec::with_capacity(n + 1);
    let mut c = Rational::one();
    out.push(c.clone());
    for k in 0..n {
        let kk = Rational::from_integer(k.into());
        for a in upper {
            c *= a + &kk;
        }
        for b in lower {
            c /= b + &kk;
        }
        c /= Rational::from_integer((k + 1).into());
        out.push(c.clone());
        if c.is_zero() {
            // terminating series: all later coefficients vanish too
            out.resize(n + 1, Rational::zero());
            break;
        }
    }
    Ok(out)
}

/// `pFq(upper; lower; arg)` truncated at order `n`, for an argument series
/// with zero constant term.
pub fn hypergeom_series<T: Scalar>(
    upper: &[Rational],
    lower: &[Rational],
    arg: &Series<T>,
    n: usize,
) -> Result<Series<T>> {
    let order = n.min(arg.order());
    let coeffs = hypergeom_coefficients(upper, lower, order)?;
    let outer = Series::from_coeffs(coeffs.iter().map(|c| arg.template().from_rational_like(c)).collect())?;
    outer.compose(&arg.truncate(order))
}
