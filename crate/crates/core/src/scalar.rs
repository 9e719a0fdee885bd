//! The coefficient-field abstraction shared by polynomials and series.

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::exact::{QuadExt, Rational};

/// An exact field element. Values carry their own field (a `QuadExt`
/// remembers its radicand), so constants are built from a template.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// Embed a rational into the same field as `self`.
    fn from_rational_like(&self, r: &Rational) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, r: &Rational) -> Self;
    fn inverse(&self) -> Option<Self>;
    /// Whether two values live in the same field.
    fn same_kind(&self, _other: &Self) -> bool {
        true
    }

    fn is_one_elem(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, e: usize) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, r: &Rational) -> Self {
        self * r
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for QuadExt {
    fn zero_like(&self) -> Self {
        self.with_parts(Rational::zero(), Rational::zero())
    }
    fn one_like(&self) -> Self {
        self.with_parts(Rational::one(), Rational::zero())
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        self.with_parts(r.clone(), Rational::zero())
    }
    fn is_zero_elem(&self) -> bool {
        QuadExt::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, r: &Rational) -> Self {
        self.scale(r)
    }
    fn inverse(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
    fn same_kind(&self, other: &Self) -> bool {
        self.d() == other.d()
    }
}

/// Mixed rational/surd arithmetic. Panics on mismatched radicands, which a
/// single identity evaluation never produces.
impl Scalar for crate::exact::Exact {
    fn zero_like(&self) -> Self {
        self.one_like().minus(&self.one_like())
    }
    fn one_like(&self) -> Self {
        crate::exact::Exact::one_like(self)
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        self.one_like().scaled(r)
    }
    fn is_zero_elem(&self) -> bool {
        crate::exact::Exact::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scaled(&self, r: &Rational) -> Self {
        self.times(&crate::exact::Exact::Rational(r.clone()))
    }
    fn inverse(&self) -> Option<Self> {
        self.one_like().div(self).ok()
    }
    fn same_kind(&self, other: &Self) -> bool {
        match (self.radicand(), other.radicand()) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }
}
