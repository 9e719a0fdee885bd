use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{is_squarefree, FixedReal, Rational};
use crate::error::{Error, Result};

/// An element `a + b√d` of the real quadratic field `ℚ(√d)`.
///
/// The radicand is fixed per value. Arithmetic between different radicands
/// is rejected by the `checked_*` methods; the operator impls panic on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field arithmetic in `ℚ(√d)`.
pub fn quad_arith(lhs: &QuadExt, rhs: &QuadExt, op: QuadOp) -> Result<QuadExt> {
    match op {
        QuadOp::Add => lhs.checked_add(rhs),
        QuadOp::Sub => lhs.checked_sub(rhs),
        QuadOp::Mul => lhs.checked_mul(rhs),
        QuadOp::Div => lhs.checked_div(rhs),
    }
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<Self> {
        if d < 2 || !is_squarefree(d) {
            return Err(Error::InvalidRadicand(d));
        }
        Ok(Self { a, b, d })
    }

    /// `a + b√d` from small integer ratios `(an/ad) + (bn/bd)√d`.
    pub fn from_ratios(an: i64, ad: i64, bn: i64, bd: i64, d: u64) -> Result<Self> {
        Self::new(super::rat(an, ad), super::rat(bn, bd), d)
    }

    pub fn from_rational(r: Rational, d: u64) -> Result<Self> {
        Self::new(r, Rational::zero(), d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { a: self.a.clone(), b: -&self.b, d: self.d }
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(BigInt::from(self.d))
    }

    pub(crate) fn with_parts(&self, a: Rational, b: Rational) -> Self {
        Self { a, b, d: self.d }
    }

    fn same_field(&self, rhs: &Self) -> Result<()> {
        if self.d == rhs.d {
            Ok(())
        } else {
            Err(Error::RadicandMismatch(self.d, rhs.d))
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self.with_parts(&self.a + &rhs.a, &self.b + &rhs.b))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self.with_parts(&self.a - &rhs.a, &self.b - &rhs.b))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        let d = Rational::from_integer(BigInt::from(self.d));
        Ok(self.with_parts(
            &self.a * &rhs.a + &self.b * &rhs.b * d,
            &self.a * &rhs.b + &self.b * &rhs.a,
        ))
    }

    pub fn checked_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // d squarefree and >= 2 means the norm vanishes only at zero
        let n = self.norm();
        Ok(self.with_parts(&self.a / &n, -&self.b / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        self.checked_mul(&rhs.checked_inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.with_parts(&self.a * r, &self.b * r)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.with_parts(Rational::one(), Rational::zero());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact sign of `a + b√d`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // opposite signs: compare a² with d·b²
        let a2 = &self.a * &self.a;
        let db2 = &self.b * &self.b * Rational::from_integer(BigInt::from(self.d));
        match a2.cmp(&db2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    /// Numeric value to `digits` significant digits. When `a` and `b√d`
    /// nearly cancel, the working precision grows until the cancellation is
    /// covered.
    pub fn to_fixed(&self, digits: u32) -> FixedReal {
        if self.is_zero() {
            return FixedReal::zero(digits);
        }
        let scale = |r: &Rational| FixedReal::from_rational(r, 5).log10_floor().unwrap_or(i64::MIN);
        let lead = scale(&self.a).max(scale(&(&self.b * &self.b * Rational::from_integer(self.d.into()))) / 2 + 1);
        let mut work = digits + 5;
        loop {
            let root = FixedReal::from_int(&BigInt::from(self.d), work).sqrt().expect("d >= 2");
            let v = FixedReal::from_rational(&self.a, work).add(&FixedReal::from_rational(&self.b, work).mul(&root));
            let lost = v.log10_floor().map_or(work as i64, |e| lead - e);
            if lost + 3 < (work - digits) as i64 {
                return v.with_digits(digits);
            }
            work = digits + lost.max(0) as u32 + 8;
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*sqrt({})", self.a, sign, self.b.abs(), self.d)
    }
}

macro_rules! forward_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $m(self, rhs: &QuadExt) -> QuadExt {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $m(self, rhs: QuadExt) -> QuadExt {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);
forward_op!(Div, div, checked_div);

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        self.with_parts(-&self.a, -&self.b)
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn q(an: i64, ad: i64, bn: i64, bd: i64, d: u64) -> QuadExt {
        QuadExt::from_ratios(an, ad, bn, bd, d).unwrap()
    }

    #[test]
    fn norm_identity() {
        let x = q(1, 1, 1, 1, 2);
        let y = q(1, 1, -1, 1, 2);
        assert_eq!(&x * &y, q(-1, 1, 0, 1, 2));
    }

    #[test]
    fn additive_identity() {
        let v = q(1, 1, 1, 4, 14);
        let zero = q(0, 1, 0, 1, 14);
        assert_eq!(quad_arith(&v, &zero, QuadOp::Add).unwrap(), v);
    }

    #[test]
    fn table_surd_square() {
        // (3+√7)²/16 = (16+6√7)/16
        let v = q(-3, 4, -1, 4, 7);
        assert_eq!(&v * &v, q(1, 1, 3, 8, 7));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(QuadExt::from_ratios(1, 1, 1, 1, 12), Err(Error::InvalidRadicand(12)));
        assert_eq!(QuadExt::from_ratios(1, 1, 1, 1, 1), Err(Error::InvalidRadicand(1)));
        let a = q(1, 1, 1, 1, 2);
        let b = q(1, 1, 1, 1, 3);
        assert_eq!(a.checked_add(&b), Err(Error::RadicandMismatch(2, 3)));
        let zero = q(0, 1, 0, 1, 2);
        assert_eq!(quad_arith(&a, &zero, QuadOp::Div), Err(Error::DivisionByZero));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = q(5, 2, 7, 4, 2);
        let b = q(-13, 174, 7, 174, 2);
        assert_eq!(&(&a / &b) * &b, a);
    }

    #[test]
    fn exact_sign() {
        assert_eq!(q(-34, 216, 14, 216, 7).signum(), Ordering::Greater);
        assert_eq!(q(23, 175, -8, 175, 11).signum(), Ordering::Less);
        assert_eq!(q(0, 1, 0, 1, 11).signum(), Ordering::Equal);
        assert_eq!(q(3, 1, -1, 1, 2).signum(), Ordering::Greater);
    }

    #[test]
    fn display() {
        assert_eq!(q(23, 175, -8, 175, 11).to_string(), "23/175-8/175*sqrt(11)");
        assert_eq!(QuadExt::from_rational(rat(1, 2), 3).unwrap().to_string(), "1/2");
    }
}
