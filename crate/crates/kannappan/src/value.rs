//! Real values that stay exact as long as every operand is exact.
//!
//! Counting functions, quadratic forms, and additive characters evaluate to
//! rationals; seeded noise evaluates to `f64`.  Arithmetic on [`Value`]
//! degrades to floating point only when a float operand enters the
//! expression, so a sweep over exact bodies certifies its bound with no
//! rounding at all.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{Signed, ToPrimitive, Zero};

/// Default absolute tolerance for float comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(BigRational),
    Float(f64),
}

impl Value {
    pub fn zero() -> Self {
        Value::Exact(BigRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Value::Exact(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Value::Exact(BigRational::from_integer(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Value::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    /// True only for the exact rational zero.
    pub fn is_exact_zero(&self) -> bool {
        matches!(self, Value::Exact(r) if r.is_zero())
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Value::Float(x) => *x,
        }
    }

    /// Exact representation when available; floats convert to the exact
    /// binary rational they denote.
    pub fn to_rational(&self) -> BigRational {
        match self {
            Value::Exact(r) => r.clone(),
            Value::Float(x) => BigRational::from_float(*x)
                .unwrap_or_else(BigRational::zero),
        }
    }

    pub fn abs(&self) -> Value {
        match self {
            Value::Exact(r) => Value::Exact(r.abs()),
            Value::Float(x) => Value::Float(x.abs()),
        }
    }

    pub fn neg(&self) -> Value {
        match self {
            Value::Exact(r) => Value::Exact(-r),
            Value::Float(x) => Value::Float(-x),
        }
    }

    pub fn add(&self, rhs: &Value) -> Value {
        match (self, rhs) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a + b),
            _ => Value::Float(self.to_f64() + rhs.to_f64()),
        }
    }

    pub fn sub(&self, rhs: &Value) -> Value {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Value) -> Value {
        match (self, rhs) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a * b),
            _ => Value::Float(self.to_f64() * rhs.to_f64()),
        }
    }

    pub fn mul_rational(&self, rhs: &BigRational) -> Value {
        match self {
            Value::Exact(a) => Value::Exact(a * rhs),
            Value::Float(x) => Value::Float(x * rhs.to_f64().unwrap_or(f64::NAN)),
        }
    }

    /// Divide by 2^k, exactly when exact.
    pub fn div_pow2(&self, k: u32) -> Value {
        match self {
            Value::Exact(r) => {
                Value::Exact(r / BigRational::from_integer(BigInt::from(1u8) << k))
            }
            Value::Float(x) => Value::Float(x / (2f64).powi(k as i32)),
        }
    }

    /// Absolute-difference comparison.  Exact operands compare exactly when
    /// `tol == 0`, otherwise within `tol`.
    pub fn approx_eq(&self, rhs: &Value, tol: f64) -> bool {
        match (self, rhs) {
            (Value::Exact(a), Value::Exact(b)) if tol == 0.0 => a == b,
            _ => (self.to_f64() - rhs.to_f64()).abs() <= tol,
        }
    }

    /// Total comparison of magnitudes, exact whenever both sides are exact.
    pub fn cmp_abs(&self, rhs: &Value) -> Ordering {
        match (self, rhs) {
            (Value::Exact(a), Value::Exact(b)) => a.abs().cmp(&b.abs()),
            _ => self
                .to_f64()
                .abs()
                .partial_cmp(&rhs.to_f64().abs())
                .unwrap_or(Ordering::Equal),
        }
    }

    /// `|self| <= bound`, exact when both sides are exact.
    pub fn abs_le(&self, bound: &Value) -> bool {
        self.cmp_abs(bound) != Ordering::Greater
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Value::Float(x) => write!(f, "{x}"),
        }
    }
}

/// Sum of values, exact when all addends are exact.
pub fn sum<'a, I: IntoIterator<Item = &'a Value>>(items: I) -> Value {
    let mut acc = Value::zero();
    for v in items {
        acc = acc.add(v);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_arithmetic_stays_exact() {
        let a = Value::ratio(1, 3);
        let b = Value::ratio(1, 6);
        let s = a.add(&b);
        assert!(s.is_exact());
        assert_eq!(s, Value::ratio(1, 2));
    }

    #[test]
    fn float_contaminates() {
        let a = Value::from_int(1);
        let b = Value::Float(0.5);
        assert!(!a.add(&b).is_exact());
    }

    #[test]
    fn div_pow2_exact() {
        let v = Value::from_int(12).div_pow2(2);
        assert_eq!(v, Value::from_int(3));
    }

    #[test]
    fn abs_le_is_exact_on_rationals() {
        // 1/3 <= 1/3 but not <= 333333333/1000000000
        let third = Value::ratio(1, 3);
        assert!(third.abs_le(&Value::ratio(1, 3)));
        assert!(!third.abs_le(&Value::ratio(333_333_333, 1_000_000_000)));
    }
}
