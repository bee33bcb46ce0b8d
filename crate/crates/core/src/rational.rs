//! Arbitrary-precision rational scalars in canonical form.
//!
//! `Rational` wraps `num::BigRational`, which maintains the canonical form
//! this crate relies on everywhere: positive denominator, fully reduced,
//! zero represented as 0/1. The wrapper adds the operation counter, the
//! canonical `p/q` text format, and exact integer powers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::opcount;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Checked constructor; reduces to canonical form.
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// Literal helper for known-good ratios. Panics on a zero denominator,
    /// which in this crate only a broken literal can produce.
    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "from_ratio literal with zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.clone() / rhs.clone())
    }

    /// Exact integer power. A negative exponent requires a nonzero base.
    pub fn pow_int(&self, exp: i64) -> Result<Self> {
        if exp == 0 {
            return Ok(Rational::one());
        }
        if self.is_zero() {
            return if exp > 0 {
                Ok(Rational::zero())
            } else {
                Err(Error::DivisionByZero)
            };
        }
        // Unit bases need no arithmetic at all.
        if self.is_one() {
            return Ok(Rational::one());
        }
        if *self == -Rational::one() {
            return Ok(if exp % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            });
        }
        let base = if exp < 0 {
            Rational(self.0.recip())
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = base.clone();
        let mut bit = 63 - e.leading_zeros();
        while bit > 0 {
            bit -= 1;
            acc = acc.clone() * acc;
            if (e >> bit) & 1 == 1 {
                acc = acc * base.clone();
            }
        }
        let _ = &mut e;
        Ok(acc)
    }

    /// Exact binomial coefficient C(n, k) as a rational.
    pub fn binomial(n: u64, k: u64) -> Self {
        if k > n {
            return Rational::zero();
        }
        Rational::from_bigint(integer::binomial(BigInt::from(n), BigInt::from(k)))
    }

    pub fn cmp_exact(&self, rhs: &Self) -> Ordering {
        self.0.cmp(&rhs.0)
    }
}

/// Euclidean gcd of magnitudes. The bigint crate's built-in gcd is Stein's
/// algorithm, whose subtraction walk is quadratic against near-unit
/// operands — the dominant case here, where most values are integers.
fn gcd_euclid(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Canonical value from a reduced-or-reducible pair; `denom` nonzero.
fn make_canonical(mut numer: BigInt, mut denom: BigInt) -> BigRational {
    debug_assert!(!denom.is_zero());
    if denom.is_negative() {
        numer = -numer;
        denom = -denom;
    }
    if numer.is_zero() {
        return BigRational::new_raw(numer, BigInt::one());
    }
    if !denom.is_one() {
        let g = gcd_euclid(&numer, &denom);
        if !g.is_one() {
            numer /= &g;
            denom /= &g;
        }
    }
    BigRational::new_raw(numer, denom)
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        let (an, ad) = (self.0.numer(), self.0.denom());
        let (bn, bd) = (rhs.0.numer(), rhs.0.denom());
        if ad.is_one() && bd.is_one() {
            return Rational(BigRational::new_raw(an + bn, BigInt::one()));
        }
        // Knuth 4.5.1: with g = gcd(ad, bd), the sum needs reduction only
        // against g, never against the full denominators.
        let g = gcd_euclid(ad, bd);
        if g.is_one() {
            return Rational(BigRational::new_raw(an * bd + bn * ad, ad * bd));
        }
        let ad_g = ad / &g;
        let bd_g = bd / &g;
        let t = an * &bd_g + bn * &ad_g;
        if t.is_zero() {
            return Rational(BigRational::new_raw(t, BigInt::one()));
        }
        let g2 = gcd_euclid(&t, &g);
        Rational(BigRational::new_raw(t / &g2, ad_g * (bd / &g2)))
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        opcount::record_mul();
        let (an, ad) = (self.0.numer(), self.0.denom());
        let (bn, bd) = (rhs.0.numer(), rhs.0.denom());
        if ad.is_one() && bd.is_one() {
            return Rational(BigRational::new_raw(an * bn, BigInt::one()));
        }
        if an.is_zero() || bn.is_zero() {
            return Rational::zero();
        }
        // cross-reduce; the product of canonical pairs is then canonical
        let g1 = if bd.is_one() {
            BigInt::one()
        } else {
            gcd_euclid(an, bd)
        };
        let g2 = if ad.is_one() {
            BigInt::one()
        } else {
            gcd_euclid(bn, ad)
        };
        Rational(BigRational::new_raw(
            (an / &g1) * (bn / &g2),
            (ad / &g2) * (bd / &g1),
        ))
    }
}

impl Div for Rational {
    type Output = Rational;
    /// Panics on a zero divisor; use [`Rational::checked_div`] on fallible paths.
    fn div(self, rhs: Rational) -> Rational {
        opcount::record_mul();
        assert!(!rhs.is_zero(), "division of rationals by zero");
        let (an, ad) = (self.0.numer(), self.0.denom());
        let (bn, bd) = (rhs.0.numer(), rhs.0.denom());
        if an.is_zero() {
            return Rational::zero();
        }
        let g1 = if bn.is_one() {
            BigInt::one()
        } else {
            gcd_euclid(an, bn)
        };
        let g2 = if ad.is_one() || bd.is_one() {
            BigInt::one()
        } else {
            gcd_euclid(bd, ad)
        };
        Rational(make_canonical(
            (an / &g1) * (bd / &g2),
            (ad / &g2) * (bn / &g1),
        ))
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    /// Canonical text format: `p/q`, or just `p` for integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `p/q` or `p` with arbitrary-precision integers. Decimal-point
    /// inputs are rejected: this crate never approximates.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            BigInt::from_str(t.trim())
                .map_err(|_| Error::InvalidParameter(format!("not an exact rational: {:?}", s)))
        };
        match s.split_once('/') {
            Some((num, den)) => {
                let n = parse_int(num)?;
                let d = parse_int(den)?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Rational::new(n, d)
            }
            None => Ok(Rational::from_bigint(parse_int(s)?)),
        }
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn one() -> Self {
        Rational::one()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        opcount::record_mul();
        Ok(Rational(self.0.recip()))
    }

    fn pow_int(&self, exp: i64) -> Result<Self> {
        Rational::pow_int(self, exp)
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}
