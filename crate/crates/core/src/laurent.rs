//! Exact Laurent polynomials in one variable with integer exponents.
//!
//! The exponent window is whatever an expression needs; nothing is
//! preallocated. Two expressions are equal exactly when their coefficient
//! maps are equal, which is what makes these suitable for identity checks.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

#[derive(Clone, PartialEq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, Rational::one())
    }

    /// The variable x.
    pub fn x() -> Self {
        LaurentPoly::monomial(1, Rational::one())
    }

    /// The inverse variable x⁻¹.
    pub fn x_inv() -> Self {
        LaurentPoly::monomial(-1, Rational::one())
    }

    pub fn monomial(exp: i64, coeff: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Exponent window (lowest, highest); `None` for zero.
    pub fn window(&self) -> Option<(i64, i64)> {
        let lo = self.coeffs.keys().next()?;
        let hi = self.coeffs.keys().next_back()?;
        Some((*lo, *hi))
    }

    /// Substitution x → x⁻¹ (an involution).
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }

    fn insert_add(map: &mut BTreeMap<i64, Rational>, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = map.entry(exp).or_insert_with(Rational::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            map.remove(&exp);
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs;
        for (e, c) in rhs.coeffs {
            LaurentPoly::insert_add(&mut coeffs, e, c);
        }
        LaurentPoly { coeffs }
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self + (-rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        let mut coeffs = BTreeMap::new();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                LaurentPoly::insert_add(&mut coeffs, e1 + e2, c1.clone() * c2.clone());
            }
        }
        LaurentPoly { coeffs }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*x", c)?,
                _ => write!(f, "{}*x^{}", c, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_square() {
        // (x - x^-1)^2 = x^2 - 2 + x^-2
        let d = LaurentPoly::x() - LaurentPoly::x_inv();
        let sq = d.pow(2);
        let expected = LaurentPoly::monomial(2, Rational::one())
            + LaurentPoly::monomial(0, Rational::from_integer(-2))
            + LaurentPoly::monomial(-2, Rational::one());
        assert_eq!(sq, expected);
    }

    #[test]
    fn difference_of_squares() {
        // (x + x^-1)(x - x^-1) = x^2 - x^-2
        let s = LaurentPoly::x() + LaurentPoly::x_inv();
        let d = LaurentPoly::x() - LaurentPoly::x_inv();
        let expected =
            LaurentPoly::monomial(2, Rational::one()) - LaurentPoly::monomial(-2, Rational::one());
        assert_eq!(s * d, expected);
    }

    #[test]
    fn depth_two_expansion() {
        // (x + x^-1) * (2(x - x^-1) + (x - x^-1)^3) = x^4 - x^-4
        let s = LaurentPoly::x() + LaurentPoly::x_inv();
        let d = LaurentPoly::x() - LaurentPoly::x_inv();
        let two = LaurentPoly::monomial(0, Rational::from_integer(2));
        let lhs = s * (two * d.clone() + d.pow(3));
        let rhs =
            LaurentPoly::monomial(4, Rational::one()) - LaurentPoly::monomial(-4, Rational::one());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn window_tracks_products() {
        let d = LaurentPoly::x() - LaurentPoly::x_inv();
        assert_eq!(d.pow(5).window(), Some((-5, 5)));
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..6, -9i64..9), 0..6).prop_map(|terms| {
            terms
                .into_iter()
                .fold(LaurentPoly::zero(), |acc, (e, c)| {
                    acc + LaurentPoly::monomial(e, Rational::from_integer(c))
                })
        })
    }

    proptest! {
        #[test]
        fn variable_inversion_is_involution(p in arb_laurent()) {
            prop_assert_eq!(p.invert_variable().invert_variable(), p);
        }

        #[test]
        fn inversion_distributes_over_mul(p in arb_laurent(), q in arb_laurent()) {
            prop_assert_eq!(
                (p.clone() * q.clone()).invert_variable(),
                p.invert_variable() * q.invert_variable()
            );
        }
    }
}
