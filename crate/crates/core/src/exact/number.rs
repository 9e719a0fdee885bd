use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{FixedReal, QuadExt, Rational};
use crate::error::{Error, Result};

/// A rational or a quadratic surd. Rationals promote to `ℚ(√d)` when
/// combined with a surd; surds with different radicands never mix.
#[derive(Clone, Debug)]
pub enum Exact {
    Rational(Rational),
    Quad(QuadExt),
}

impl Exact {
    pub fn int(n: i64) -> Self {
        Exact::Rational(Rational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Exact::Rational(super::rat(n, d))
    }

    /// `(an/ad) + (bn/bd)·√d`.
    pub fn surd(an: i64, ad: i64, bn: i64, bd: i64, d: u64) -> Result<Self> {
        QuadExt::from_ratios(an, ad, bn, bd, d).map(Exact::Quad)
    }

    /// Drop a zero surd part, returning a plain rational.
    pub fn simplify(self) -> Self {
        match self {
            Exact::Quad(q) if q.is_rational() => Exact::Rational(q.a().clone()),
            other => other,
        }
    }

    pub fn radicand(&self) -> Option<u64> {
        match self {
            Exact::Rational(_) => None,
            Exact::Quad(q) => Some(q.d()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Exact::Rational(r) => r.is_zero(),
            Exact::Quad(q) => q.is_zero(),
        }
    }

    /// The rational value, if the element lies in `ℚ`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Exact::Rational(r) => Some(r.clone()),
            Exact::Quad(q) if q.is_rational() => Some(q.a().clone()),
            Exact::Quad(_) => None,
        }
    }

    fn promote(&self, d: u64) -> QuadExt {
        match self {
            Exact::Rational(r) => QuadExt::from_rational(r.clone(), d).expect("radicand already validated"),
            Exact::Quad(q) => q.clone(),
        }
    }

    fn binary(
        &self,
        rhs: &Self,
        fr: impl FnOnce(&Rational, &Rational) -> Result<Rational>,
        fq: impl FnOnce(&QuadExt, &QuadExt) -> Result<QuadExt>,
    ) -> Result<Self> {
        match (self, rhs) {
            (Exact::Rational(a), Exact::Rational(b)) => fr(a, b).map(Exact::Rational),
            (Exact::Quad(a), Exact::Quad(b)) => fq(a, b).map(Exact::Quad),
            (Exact::Quad(a), b) => fq(a, &b.promote(a.d())).map(Exact::Quad),
            (a, Exact::Quad(b)) => fq(&a.promote(b.d()), b).map(Exact::Quad),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.binary(rhs, |a, b| Ok(a + b), |a, b| a.checked_add(b))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.binary(rhs, |a, b| Ok(a - b), |a, b| a.checked_sub(b))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.binary(rhs, |a, b| Ok(a * b), |a, b| a.checked_mul(b))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        self.binary(
            rhs,
            |a, b| if b.is_zero() { Err(Error::DivisionByZero) } else { Ok(a / b) },
            |a, b| a.checked_div(b),
        )
    }

    pub fn neg(&self) -> Self {
        match self {
            Exact::Rational(r) => Exact::Rational(-r),
            Exact::Quad(q) => Exact::Quad(-q),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        match self {
            Exact::Rational(r) => Exact::Rational(num_traits::pow(r.clone(), e as usize)),
            Exact::Quad(q) => Exact::Quad(q.pow(e)),
        }
    }

    pub fn one_like(&self) -> Self {
        match self {
            Exact::Rational(_) => Exact::Rational(Rational::one()),
            Exact::Quad(q) => Exact::Quad(q.with_parts(Rational::one(), Rational::zero())),
        }
    }

    pub fn signum(&self) -> Ordering {
        match self {
            Exact::Rational(r) => r.cmp(&Rational::zero()),
            Exact::Quad(q) => q.signum(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Exact comparison; errors only on mismatched radicands.
    pub fn cmp_exact(&self, rhs: &Self) -> Result<Ordering> {
        Ok(self.sub(rhs)?.signum())
    }

    pub fn to_fixed(&self, digits: u32) -> FixedReal {
        match self {
            Exact::Rational(r) => FixedReal::from_rational(r, digits),
            Exact::Quad(q) => q.to_fixed(digits),
        }
    }
}

/// Equality in the common field; values over different radicands compare
/// equal only when both are rational.
impl PartialEq for Exact {
    fn eq(&self, other: &Self) -> bool {
        match self.sub(other) {
            Ok(diff) => diff.is_zero(),
            Err(_) => match (self.as_rational(), other.as_rational()) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            },
        }
    }
}

impl From<Rational> for Exact {
    fn from(r: Rational) -> Self {
        Exact::Rational(r)
    }
}

impl From<QuadExt> for Exact {
    fn from(q: QuadExt) -> Self {
        Exact::Quad(q)
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exact::Rational(r) => write!(f, "{r}"),
            Exact::Quad(q) => write!(f, "{q}"),
        }
    }
}

impl std::str::FromStr for Exact {
    type Err = Error;

    /// Parses `p`, `p/q`, `p/q+r/s*sqrt(d)`, `r/s*sqrt(d)` or `sqrt(d)`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let Some(sq) = t.find("sqrt(") else {
            return parse_rational(&t).map(Exact::Rational);
        };
        if !t.ends_with(')') {
            return Err(Error::Parse(format!("expected ')' at end of {s:?}")));
        }
        let d: u64 = t[sq + 5..t.len() - 1]
            .parse()
            .map_err(|_| Error::Parse(format!("bad radicand in {s:?}")))?;
        let head = &t[..sq];
        // head is "[a](+|-)[b*]" or "[b*]"
        let head = head.strip_suffix('*').unwrap_or(head);
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (a, b) = match split {
            Some(i) => (parse_rational(&head[..i])?, parse_coeff(&head[i..])?),
            None => (Rational::zero(), parse_coeff(head)?),
        };
        QuadExt::new(a, b, d).map(Exact::Quad)
    }
}

fn parse_coeff(s: &str) -> Result<Rational> {
    match s {
        "" | "+" => Ok(Rational::one()),
        "-" => Ok(-Rational::one()),
        _ => parse_rational(s.strip_prefix('+').unwrap_or(s)),
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = n.parse().map_err(|_| err())?;
    let d: num_bigint::BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let r = Rational::new(n, d);
    Ok(if r.denom().is_negative() { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!("3/5".parse::<Exact>().unwrap(), Exact::ratio(3, 5));
        assert_eq!("-7".parse::<Exact>().unwrap(), Exact::int(-7));
        assert_eq!(
            "5/2+7/4*sqrt(2)".parse::<Exact>().unwrap(),
            Exact::surd(5, 2, 7, 4, 2).unwrap()
        );
        assert_eq!(
            "-3/4-1/4*sqrt(7)".parse::<Exact>().unwrap(),
            Exact::surd(-3, 4, -1, 4, 7).unwrap()
        );
        assert_eq!("sqrt(14)".parse::<Exact>().unwrap(), Exact::surd(0, 1, 1, 1, 14).unwrap());
        assert_eq!("1-sqrt(2)".parse::<Exact>().unwrap(), Exact::surd(1, 1, -1, 1, 2).unwrap());
        assert!("1/0".parse::<Exact>().is_err());
        assert!("1+sqrt(4)".parse::<Exact>().is_err());
        assert!("abc".parse::<Exact>().is_err());
    }

    #[test]
    fn promotion_and_mismatch() {
        let r = Exact::ratio(1, 2);
        let s = Exact::surd(0, 1, 1, 1, 7).unwrap();
        assert_eq!(r.add(&s).unwrap(), Exact::surd(1, 2, 1, 1, 7).unwrap());
        let t = Exact::surd(0, 1, 1, 1, 2).unwrap();
        assert_eq!(s.add(&t), Err(Error::RadicandMismatch(7, 2)));
        assert_eq!(Exact::surd(3, 1, 0, 1, 7).unwrap(), Exact::int(3));
    }
}
