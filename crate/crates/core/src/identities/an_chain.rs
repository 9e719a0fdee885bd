//! Two identity chains for `Σ C(2n,n) A_n(x) zⁿ` under the specialisations
//! `z = x/(1−4x)` and `z = 1/(x+1)²`.

use crate::clock::Instant;

use num_bigint::BigInt;
use num_traits::One;

use super::{earliest, ensure_positive_valuation, require_order, sum_with_arg};
use crate::error::Result;
use crate::exact::Rational;
use crate::poly::PolyQ;
use crate::report::{IdentityId, VerifyReport};
use crate::sequences::{a_poly_coeffs, apery, central_binomial, domb, powers_of, threefac, weighted_sum};
use crate::series::{ratfun_series, LaurentQ, Series};

type S = Series<Rational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnChain {
    /// Four expressions linked by `z = x/(1−4x)`.
    First,
    /// Two expressions linked by `z = 1/(x+1)²`.
    Second,
}

fn p(c: &[i64]) -> PolyQ {
    PolyQ::from_ints(c)
}

fn ints(f: impl Fn(usize) -> BigInt, n: usize) -> Vec<BigInt> {
    (0..=n).map(f).collect()
}

fn ratfun(num: &PolyQ, den: &PolyQ, n: usize) -> Result<S> {
    ratfun_series(num, den, n)
}

/// The four expressions of the first chain, in display order.
pub fn an_chain_first(n: usize) -> Result<[S; 4]> {
    let one = Rational::one();
    // v(1−v)(1−4v)
    let base = p(&[0, 1]).mul(&p(&[1, -1])).mul(&p(&[1, -4]));
    let q = p(&[1, -2, 4]);
    let r = p(&[1, 0, -4]);

    // Σ C(2n,n) baseⁿ/q^{2n+1} · Σ_k C(n,k)²C(n+k,n) base^k/r^{2k+1}
    let z = ratfun(&base, &q.pow(2), n)?;
    let x = ratfun(&base, &r.pow(2), n)?;
    ensure_positive_valuation(&z)?;
    let xs = powers_of(&x, n);
    let mut inner_total = S::zero(&one, n);
    let mut zm = S::one(&one, n);
    for m in 0..=n {
        let a_m = weighted_sum(&a_poly_coeffs(m), &xs[..=m]);
        inner_total = inner_total.add(&zm.mul(&a_m).scale_rational(&Rational::from_integer(central_binomial(m))));
        zm = zm.mul(&z);
    }
    let e1 = inner_total.div(&q.mul(&r).to_series(n))?;

    // Σ apery(n)·[v(1−2v)(1−4v)²]ⁿ/((1−v)(1+2v))^{n+1}
    let d2 = p(&[1, -1]).mul(&p(&[1, 2]));
    let t2 = ratfun(&p(&[0, 1]).mul(&p(&[1, -2])).mul(&p(&[1, -4]).pow(2)), &d2, n)?;
    let e2 = sum_with_arg(&ints(apery, n), &t2)?.div(&d2.to_series(n))?;

    // Σ domb(n)·(−1)ⁿ[v(1−v)(1−4v²)]ⁿ/(1−4v)^{2n+2}
    let d3 = p(&[1, -4]).pow(2);
    let t3 = ratfun(&p(&[0, -1]).mul(&p(&[1, -1])).mul(&r), &d3, n)?;
    let e3 = sum_with_arg(&ints(domb, n), &t3)?.div(&d3.to_series(n))?;

    // Σ (3n)!/n!³·C(2n,n)·[v(1−v)(1−4v²)(1−4v)⁴]ⁿ/(1+4v−8v²)^{6n+2}
    let d4 = p(&[1, 4, -8]);
    let t4 = ratfun(&p(&[0, 1]).mul(&p(&[1, -1])).mul(&r).mul(&p(&[1, -4]).pow(4)), &d4.pow(6), n)?;
    let e4 = sum_with_arg(&ints(|m| threefac(m) * central_binomial(m), n), &t4)?.div(&d4.pow(2).to_series(n))?;
    Ok([e1, e2, e3, e4])
}

/// Both sides of the second chain. The inner sum carries negative powers
/// of `v` and is assembled as a Laurent series.
pub fn an_chain_second(n: usize) -> Result<(S, S)> {
    let g = p(&[1, 10, 27]);
    let h = p(&[1, 9, 27]);
    let order = n as i64;
    let mut lhs = S::zero(&Rational::one(), n);
    for m in 0..=n {
        // Σ_k C(m,k)²C(m+k,m)·h^k·v^{−k}
        let mut inner = LaurentQ::from_poly(&PolyQ::zero(), 0, order);
        for (k, c) in a_poly_coeffs(m).into_iter().enumerate() {
            let hk = LaurentQ::from_poly(&h.pow(k as u32), -(k as i64), order);
            inner = inner.add(&hk.scale(&Rational::from_integer(c)));
        }
        let outer = LaurentQ::from_series(&g.pow(2 * m as u32 + 1).to_series(n).inverse()?, 2 * m as i64);
        let term = outer.mul(&inner).scale(&Rational::from_integer(central_binomial(m)));
        debug_assert!(term.valuation().map_or(true, |e| e >= m as i64));
        lhs = lhs.add(&term.into_series(n)?);
    }

    let d = p(&[1, 9]);
    let t = ratfun(&p(&[0, 1]).mul(&h), &d.pow(6), n)?;
    let rhs = sum_with_arg(&ints(|m| threefac(m) * central_binomial(m), n), &t)?.div(&d.pow(2).to_series(n))?;
    Ok((lhs, rhs))
}

pub fn verify_an_chain(which: AnChain, n: usize) -> Result<VerifyReport> {
    require_order(n, 1)?;
    let start = Instant::now();
    let (id, fail) = match which {
        AnChain::First => {
            let [e1, e2, e3, e4] = an_chain_first(n)?;
            (IdentityId::AnChainFirst, earliest([e1.first_difference(&e2), e1.first_difference(&e3), e1.first_difference(&e4)]))
        }
        AnChain::Second => {
            let (l, r) = an_chain_second(n)?;
            (IdentityId::AnChainSecond, l.first_difference(&r))
        }
    };
    Ok(VerifyReport::new(id, n as u32, fail, None).timed(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn first_chain_low_coefficients() {
        let es = an_chain_first(3).unwrap();
        for e in &es {
            assert_eq!(e.coeff(0), &rat(1, 1));
            assert_eq!(e.coeff(1), &rat(4, 1));
        }
    }

    #[test]
    fn chains_small_order() {
        let first = an_chain_first(5).unwrap();
        let expected: Vec<Rational> = [1, 4, 16, 56, 200, 704].iter().map(|&c| rat(c, 1)).collect();
        for e in &first {
            assert_eq!(e.coeffs(), expected.as_slice());
        }
        assert!(verify_an_chain(AnChain::First, 8).unwrap().pass);
        assert!(verify_an_chain(AnChain::Second, 8).unwrap().pass);
    }
}
