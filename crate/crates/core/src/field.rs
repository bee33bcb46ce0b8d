//! The coefficient-field abstraction.
//!
//! Every sequence evaluator, generating function and linearized form in this
//! crate is generic over a [`Field`]. Two instantiations are used: [`Rational`]
//! for numeric parameters, and [`crate::RatFunc`] for symbolic computation in
//! the rational-function field over the sequence parameter. One code path
//! serves both modes.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    /// Embed an exact rational into the field.
    fn from_rational(q: Rational) -> Self;

    fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    /// Multiplicative inverse; `DivisionByZero` on zero.
    fn inverse(&self) -> Result<Self>;

    /// Exact integer power by binary powering. A negative exponent requires
    /// a nonzero base.
    fn pow_int(&self, exp: i64) -> Result<Self> {
        if exp == 0 {
            return Ok(Self::one());
        }
        if self.is_zero() {
            return if exp > 0 {
                Ok(Self::zero())
            } else {
                Err(Error::DivisionByZero)
            };
        }
        if self.is_one() {
            return Ok(Self::one());
        }
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let e = exp.unsigned_abs();
        let mut acc = base.clone();
        let mut bit = 63 - e.leading_zeros();
        while bit > 0 {
            bit -= 1;
            acc = acc.clone() * acc;
            if (e >> bit) & 1 == 1 {
                acc = acc * base.clone();
            }
        }
        Ok(acc)
    }

    /// The exact rational value of a constant element, if the element is
    /// constant. Used to apply numeric-only preconditions generically.
    fn as_rational(&self) -> Option<Rational>;
}
