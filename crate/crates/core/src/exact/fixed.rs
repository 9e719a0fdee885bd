//! Decimal floating-point reals with a fixed number of significant digits.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Mutex;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Extra digits every public entry point carries internally.
pub const GUARD_DIGITS: u32 = 10;

/// A real number `mantissa · 10^exponent` rounded to `digits` significant
/// decimal digits (round half away from zero).
#[derive(Clone, Debug)]
pub struct FixedReal {
    mantissa: BigInt,
    exponent: i64,
    digits: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedFn {
    Exp,
    Log,
    Sqrt,
    PiConst,
}

/// Evaluate `kind` at `arg`, computing with guard digits and rounding the
/// result to `digits` significant digits. `arg` is ignored for `PiConst`.
pub fn fixed_fn(kind: FixedFn, arg: &FixedReal, digits: u32) -> Result<FixedReal> {
    let work = digits + GUARD_DIGITS;
    let x = arg.with_digits(work);
    let y = match kind {
        FixedFn::Exp => x.exp()?,
        FixedFn::Log => x.ln()?,
        FixedFn::Sqrt => x.sqrt()?,
        FixedFn::PiConst => FixedReal::pi(work),
    };
    Ok(y.with_digits(digits))
}

pub(crate) fn pow10(k: u64) -> BigInt {
    num_traits::pow(BigInt::from(10u32), k as usize)
}

/// Number of decimal digits of `|m|`; zero for zero.
fn dec_len(m: &BigInt) -> u64 {
    if m.is_zero() {
        return 0;
    }
    let bits = m.bits();
    let est = (((bits - 1) as f64) * std::f64::consts::LOG10_2).floor() as u64 + 1;
    if m.magnitude() >= pow10(est).magnitude() {
        est + 1
    } else {
        est
    }
}

/// `n / d` rounded half away from zero, `d > 0`.
fn round_div(n: BigInt, d: &BigInt) -> BigInt {
    let twice: BigInt = n * 2;
    let adj = if twice.is_negative() { &twice - d } else { &twice + d };
    adj / (d * 2)
}

static PI_CACHE: Mutex<Option<FixedReal>> = Mutex::new(None);

impl FixedReal {
    pub fn zero(digits: u32) -> Self {
        Self { mantissa: BigInt::zero(), exponent: 0, digits }
    }

    pub fn one(digits: u32) -> Self {
        Self::from_int(&BigInt::one(), digits)
    }

    pub fn from_i64(n: i64, digits: u32) -> Self {
        Self::from_int(&BigInt::from(n), digits)
    }

    pub fn from_int(n: &BigInt, digits: u32) -> Self {
        Self { mantissa: n.clone(), exponent: 0, digits }.normalize()
    }

    pub fn from_rational(r: &Rational, digits: u32) -> Self {
        if r.is_zero() {
            return Self::zero(digits);
        }
        let s = digits as i64 + 2 + dec_len(r.denom()) as i64 - dec_len(r.numer()) as i64;
        let mantissa = if s >= 0 {
            round_div(r.numer() * pow10(s as u64), r.denom())
        } else {
            round_div(r.numer().clone(), &(r.denom() * pow10((-s) as u64)))
        };
        Self { mantissa, exponent: -s, digits }.normalize()
    }

    /// `10^k`.
    pub fn pow10(k: i64, digits: u32) -> Self {
        Self { mantissa: BigInt::one(), exponent: k, digits }
    }

    pub fn from_f64(x: f64, digits: u32) -> Self {
        if x == 0.0 || !x.is_finite() {
            return Self::zero(digits);
        }
        let s = format!("{:.16e}", x);
        let (m, e) = s.split_once('e').expect("scientific format");
        let exp: i64 = e.parse().expect("exponent");
        let frac_len = m.split_once('.').map_or(0, |(_, f)| f.len()) as i64;
        let mantissa: BigInt = m.replace('.', "").parse().expect("mantissa");
        Self { mantissa, exponent: exp - frac_len, digits }.normalize()
    }

    pub fn to_f64(&self) -> f64 {
        format!("{}e{}", self.mantissa, self.exponent).parse().unwrap_or(f64::NAN)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn signum(&self) -> Ordering {
        match self.mantissa.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    /// `floor(log10 |x|)`, or `None` for zero.
    pub fn log10_floor(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exponent + dec_len(&self.mantissa) as i64 - 1)
        }
    }

    /// Exact test `|x| < 10^k`.
    pub fn abs_lt_pow10(&self, k: i64) -> bool {
        self.is_zero() || self.exponent + dec_len(&self.mantissa) as i64 <= k
    }

    /// `log10 |x|` as a float, `-inf` for zero; for ratio monitoring.
    pub fn log10_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let s = self.mantissa.magnitude().to_string();
        let lead = &s[..s.len().min(17)];
        let lead_val: f64 = lead.parse().unwrap_or(1.0);
        lead_val.log10() + (s.len() - lead.len()) as f64 + self.exponent as f64
    }

    fn normalize(mut self) -> Self {
        if self.mantissa.is_zero() {
            self.exponent = 0;
            return self;
        }
        let len = dec_len(&self.mantissa);
        if len > self.digits as u64 {
            let shift = len - self.digits as u64;
            self.mantissa = round_div(self.mantissa, &pow10(shift));
            self.exponent += shift as i64;
            if dec_len(&self.mantissa) > self.digits as u64 {
                self.mantissa /= 10;
                self.exponent += 1;
            }
        }
        self
    }

    /// Re-round to `digits` significant digits. Raising the precision keeps
    /// the value and only widens later rounding.
    pub fn with_digits(&self, digits: u32) -> Self {
        Self { mantissa: self.mantissa.clone(), exponent: self.exponent, digits }.normalize()
    }

    pub fn abs(&self) -> Self {
        Self { mantissa: self.mantissa.abs(), ..self.clone() }
    }

    fn top(&self) -> i64 {
        self.exponent + dec_len(&self.mantissa) as i64
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let digits = self.digits.min(rhs.digits);
        if rhs.is_zero() {
            return self.with_digits(digits);
        }
        if self.is_zero() {
            return rhs.with_digits(digits);
        }
        let gap = self.top() - rhs.top();
        if gap > digits as i64 + 3 {
            return self.with_digits(digits);
        }
        if -gap > digits as i64 + 3 {
            return rhs.with_digits(digits);
        }
        let e = self.exponent.min(rhs.exponent);
        let a = &self.mantissa * pow10((self.exponent - e) as u64);
        let b = &rhs.mantissa * pow10((rhs.exponent - e) as u64);
        Self { mantissa: a + b, exponent: e, digits }.normalize()
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self { mantissa: -&self.mantissa, ..self.clone() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            mantissa: &self.mantissa * &rhs.mantissa,
            exponent: self.exponent + rhs.exponent,
            digits: self.digits.min(rhs.digits),
        }
        .normalize()
    }

    pub fn mul_int(&self, n: &BigInt) -> Self {
        Self { mantissa: &self.mantissa * n, ..self.clone() }.normalize()
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let digits = self.digits.min(rhs.digits);
        if self.is_zero() {
            return Ok(Self::zero(digits));
        }
        let s = digits as i64 + 2 + dec_len(&rhs.mantissa) as i64 - dec_len(&self.mantissa) as i64;
        let mantissa = if s >= 0 {
            round_div(&self.mantissa * pow10(s as u64), &rhs.mantissa.abs()) * rhs.mantissa.signum()
        } else {
            round_div(self.mantissa.clone(), &(rhs.mantissa.abs() * pow10((-s) as u64)))
                * rhs.mantissa.signum()
        };
        Ok(Self { mantissa, exponent: self.exponent - rhs.exponent - s, digits }.normalize())
    }

    pub fn div_int(&self, n: &BigInt) -> Self {
        self.checked_div(&Self::from_int(n, self.digits + 2))
            .expect("nonzero divisor")
            .with_digits(self.digits)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.digits).checked_div(self)
    }

    pub fn powi(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.digits);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn sqrt(&self) -> Result<Self> {
        match self.signum() {
            Ordering::Less => return Err(Error::Domain("sqrt of a negative number")),
            Ordering::Equal => return Ok(self.clone()),
            Ordering::Greater => {}
        }
        let target = 2 * (self.digits as i64 + 2);
        let mut k = (target - dec_len(&self.mantissa) as i64).max(0);
        if (self.exponent - k).rem_euclid(2) != 0 {
            k += 1;
        }
        let root = (&self.mantissa * pow10(k as u64)).sqrt();
        Ok(Self { mantissa: root, exponent: (self.exponent - k) / 2, digits: self.digits }.normalize())
    }

    pub fn exp(&self) -> Result<Self> {
        let digits = self.digits;
        if self.is_zero() {
            return Ok(Self::one(digits));
        }
        let mag = self.log10_abs();
        if mag > 9.0 {
            return Err(Error::Domain("exp argument too large"));
        }
        // halve until |r| < 2^-10, then square back
        let halvings = if mag < -3.5 { 0 } else { ((mag / std::f64::consts::LOG10_2).ceil() as i64 + 10).max(0) as u64 };
        let work = digits + GUARD_DIGITS + (halvings as f64 * std::f64::consts::LOG10_2).ceil() as u32 + 2;
        let r = Self {
            mantissa: &self.mantissa * num_traits::pow(BigInt::from(5u32), halvings as usize),
            exponent: self.exponent - halvings as i64,
            digits: work,
        }
        .normalize();
        let mut sum = Self::one(work);
        let mut term = Self::one(work);
        let mut n = 1i64;
        loop {
            term = term.mul(&r).div_int(&BigInt::from(n));
            if term.abs_lt_pow10(-(work as i64) - 2) {
                break;
            }
            sum = sum.add(&term);
            n += 1;
        }
        for _ in 0..halvings {
            sum = sum.mul(&sum);
        }
        Ok(sum.with_digits(digits))
    }

    pub fn ln(&self) -> Result<Self> {
        if self.signum() != Ordering::Greater {
            return Err(Error::Domain("log of a non-positive number"));
        }
        let digits = self.digits;
        let work = digits + GUARD_DIGITS;
        let x = self.with_digits(work);
        let mut y = Self::from_f64(self.log10_abs() * std::f64::consts::LN_10, work);
        // Halley iteration on e^y = x; cubic convergence from ~15 digits
        for _ in 0..12 {
            let ey = y.exp()?;
            let delta = x.sub(&ey).mul(&Self::from_i64(2, work)).checked_div(&x.add(&ey))?;
            y = y.add(&delta);
            let scale = y.log10_floor().unwrap_or(0).max(0);
            if delta.abs_lt_pow10(scale - work as i64) {
                break;
            }
        }
        Ok(y.with_digits(digits))
    }

    /// π to `digits` significant digits (Machin's formula).
    pub fn pi(digits: u32) -> Self {
        let mut cache = PI_CACHE.lock().unwrap_or_else(|p| p.into_inner());
        if let Some(p) = cache.as_ref() {
            if p.digits >= digits {
                return p.with_digits(digits);
            }
        }
        let work = digits + GUARD_DIGITS;
        let scale = pow10(work as u64);
        let mantissa = atan_inv(5, &scale) * 16 - atan_inv(239, &scale) * 4;
        let pi = Self { mantissa, exponent: -(work as i64), digits: work }.normalize();
        *cache = Some(pi.clone());
        pi.with_digits(digits)
    }

    /// `|self − rhs| ≤ 10^(−k) · max(1, |rhs|)`.
    pub fn agrees_with(&self, rhs: &Self, k: i64) -> bool {
        let digits = self.digits.max(rhs.digits);
        let diff = self.with_digits(digits).sub(&rhs.with_digits(digits)).abs();
        let one = Self::one(digits);
        let scale = if rhs.abs() > one { rhs.abs() } else { one };
        diff <= Self::pow10(-k, digits).mul(&scale)
    }

    /// Scientific notation with `sig` significant digits, e.g. `1.234e-31`.
    pub fn to_sci_string(&self, sig: u32) -> String {
        let r = self.with_digits(sig.max(1));
        if r.is_zero() {
            return "0".into();
        }
        let s = r.mantissa.magnitude().to_string();
        let sign = if r.is_negative() { "-" } else { "" };
        let exp = r.exponent + s.len() as i64 - 1;
        let (head, tail) = s.split_at(1);
        let tail = tail.trim_end_matches('0');
        if tail.is_empty() {
            format!("{sign}{head}e{exp}")
        } else {
            format!("{sign}{head}.{tail}e{exp}")
        }
    }
}

/// `scale · atan(1/x)` by the alternating Taylor series in integers.
fn atan_inv(x: u64, scale: &BigInt) -> BigInt {
    let x2 = BigInt::from(x * x);
    let mut power = scale / x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

impl PartialEq for FixedReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for FixedReal {}

impl PartialOrd for FixedReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FixedReal {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == Ordering::Equal {
            return Ordering::Equal;
        }
        let by_mag = match self.top().cmp(&other.top()) {
            Ordering::Equal => {
                let e = self.exponent.min(other.exponent);
                let a = self.mantissa.magnitude() * pow10((self.exponent - e) as u64).magnitude();
                let b = other.mantissa.magnitude() * pow10((other.exponent - e) as u64).magnitude();
                a.cmp(&b)
            }
            o => o,
        };
        if sa == Ordering::Less {
            by_mag.reverse()
        } else {
            by_mag
        }
    }
}

impl fmt::Display for FixedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sci_string(self.digits))
    }
}

impl Add for &FixedReal {
    type Output = FixedReal;
    fn add(self, rhs: &FixedReal) -> FixedReal {
        FixedReal::add(self, rhs)
    }
}

impl Sub for &FixedReal {
    type Output = FixedReal;
    fn sub(self, rhs: &FixedReal) -> FixedReal {
        FixedReal::sub(self, rhs)
    }
}

impl Mul for &FixedReal {
    type Output = FixedReal;
    fn mul(self, rhs: &FixedReal) -> FixedReal {
        FixedReal::mul(self, rhs)
    }
}

impl Neg for &FixedReal {
    type Output = FixedReal;
    fn neg(self) -> FixedReal {
        FixedReal::neg(self)
    }
}
