use crate::error::{Error, Result};
use crate::exact::{FixedReal, GUARD_DIGITS};

/// Hard cap on the number of generated terms.
pub const MAX_TERMS: usize = 1_000_000;
/// Terms generated before the divergence guard is armed.
pub const BURN_IN: usize = 50;
/// Terms per monitoring block.
const BLOCK: usize = 8;
/// Consecutive non-decreasing blocks (after burn-in) that count as divergence.
const GROWING_BLOCKS: usize = 16;

#[derive(Clone, Debug)]
pub struct NumericSum {
    pub value: FixedReal,
    pub terms: usize,
}

/// Sum `Σ_{n≥0} term(n)` to `digits` significant digits.
///
/// Terms are monitored in blocks of eight: the block maxima `M_j` give a
/// ratio estimate `ρ` (largest of the last two block ratios), and summation
/// stops once `M_j < 10^−(digits+5)`, `ρ < 1` and the geometric tail bound
/// `8·M_j·ρ/(1−ρ)` is below the same threshold. Block maxima make the rule
/// insensitive to oscillating terms such as `P_n(y)²` with `|y| < 1`.
pub fn numeric_sum<F>(mut term: F, digits: u32) -> Result<NumericSum>
where
    F: FnMut(usize) -> Result<FixedReal>,
{
    let work = digits + GUARD_DIGITS;
    let tol = -(digits as f64 + 5.0);
    let mut sum = FixedReal::zero(work);
    let mut maxima: Vec<f64> = Vec::new();
    let mut block_max = f64::NEG_INFINITY;
    let mut growing = 0usize;

    for n in 0..MAX_TERMS {
        let t = term(n)?;
        block_max = block_max.max(t.log10_abs());
        sum = sum.add(&t.with_digits(work));
        if (n + 1) % BLOCK != 0 {
            continue;
        }
        maxima.push(block_max);
        block_max = f64::NEG_INFINITY;
        let j = maxima.len();
        if j < 3 {
            continue;
        }
        let ratio = |a: f64, b: f64| if b == f64::NEG_INFINITY { f64::NEG_INFINITY } else { b - a };
        let r1 = ratio(maxima[j - 2], maxima[j - 1]);
        let r0 = ratio(maxima[j - 3], maxima[j - 2]);
        let rho = r0.max(r1);
        if n + 1 > BURN_IN {
            growing = if r1 >= 0.0 { growing + 1 } else { 0 };
            if growing >= GROWING_BLOCKS {
                return Err(Error::Diverging { terms: n + 1 });
            }
        }
        let m = maxima[j - 1];
        if m < tol && rho < 0.0 {
            let tail = (BLOCK as f64).log10() + m + rho - (1.0 - 10f64.powf(rho)).log10();
            if tail < tol {
                return Ok(NumericSum { value: sum.with_digits(digits), terms: n + 1 });
            }
        }
    }
    Err(Error::NonConvergence { terms: MAX_TERMS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn geometric_halves() {
        let half = FixedReal::from_rational(&rat(1, 2), 40);
        let s = numeric_sum(|n| Ok(half.powi(n as u64)), 20).unwrap();
        assert_eq!(s.value, FixedReal::from_i64(2, 20));
    }

    #[test]
    fn slow_ratio_still_converges() {
        // Σ n·0.99^n = 0.99/0.01² = 9900
        let r = FixedReal::from_rational(&rat(99, 100), 40);
        let mut p = FixedReal::one(40);
        let s = numeric_sum(
            |n| {
                let t = p.mul(&FixedReal::from_i64(n as i64, 40));
                p = p.mul(&r);
                Ok(t)
            },
            20,
        )
        .unwrap();
        assert!(s.value.agrees_with(&FixedReal::from_i64(9900, 30), 18), "{}", s.value);
    }

    #[test]
    fn divergent_series_is_rejected() {
        let r = FixedReal::from_rational(&rat(11, 10), 30);
        let err = numeric_sum(|n| Ok(r.powi(n as u64)), 20).unwrap_err();
        assert!(matches!(err, Error::Diverging { .. }), "{err:?}");
    }

    #[test]
    fn finite_sum_stops() {
        let s = numeric_sum(|n| Ok(if n == 0 { FixedReal::one(30) } else { FixedReal::zero(30) }), 20).unwrap();
        assert_eq!(s.value, FixedReal::one(20));
    }

    #[test]
    fn generator_errors_propagate() {
        let err = numeric_sum(|_| Err(Error::DivisionByZero), 20).unwrap_err();
        assert_eq!(err, Error::DivisionByZero);
    }
}
