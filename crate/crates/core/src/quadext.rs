//! Quadratic extension arithmetic: elements `a + b·W` with `W² = D`.
//!
//! The discriminant is carried per value rather than as a global, so the
//! numeric and symbolic instantiations share one code path. For this crate
//! `D = R² + 2R`, but nothing here depends on that.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Field;

#[derive(Clone, PartialEq)]
pub struct QuadExt<K: Field> {
    a: K,
    b: K,
    d: K,
}

impl<K: Field> QuadExt<K> {
    pub fn new(a: K, b: K, d: K) -> Self {
        QuadExt { a, b, d }
    }

    pub fn from_scalar(a: K, d: K) -> Self {
        QuadExt {
            a,
            b: K::zero(),
            d,
        }
    }

    /// Scalar part.
    pub fn scalar(&self) -> &K {
        &self.a
    }

    /// Coefficient of W.
    pub fn w_coeff(&self) -> &K {
        &self.b
    }

    pub fn discriminant(&self) -> &K {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// Binary powering; equals repeated multiplication.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = QuadExt::from_scalar(K::one(), self.d.clone());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl<K: Field> Add for QuadExt<K> {
    type Output = QuadExt<K>;
    fn add(self, rhs: QuadExt<K>) -> QuadExt<K> {
        debug_assert!(self.d == rhs.d, "mismatched discriminants");
        QuadExt {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            d: self.d,
        }
    }
}

impl<K: Field> Sub for QuadExt<K> {
    type Output = QuadExt<K>;
    fn sub(self, rhs: QuadExt<K>) -> QuadExt<K> {
        self + (-rhs)
    }
}

impl<K: Field> Neg for QuadExt<K> {
    type Output = QuadExt<K>;
    fn neg(self) -> QuadExt<K> {
        QuadExt {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl<K: Field> Mul for QuadExt<K> {
    type Output = QuadExt<K>;
    /// (a + bW)(c + eW) = (ac + beD) + (ae + bc)W
    fn mul(self, rhs: QuadExt<K>) -> QuadExt<K> {
        debug_assert!(self.d == rhs.d, "mismatched discriminants");
        let ac = self.a.clone() * rhs.a.clone();
        let bd = self.b.clone() * rhs.b.clone() * self.d.clone();
        let ad = self.a * rhs.b;
        let bc = self.b * rhs.a;
        QuadExt {
            a: ac + bd,
            b: ad + bc,
            d: self.d,
        }
    }
}

impl<K: Field> fmt::Display for QuadExt<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*W", self.a, self.b)
    }
}

impl<K: Field> fmt::Debug for QuadExt<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    /// Discriminant of the crate's extension at a numeric parameter.
    fn disc(rv: &Rational) -> Rational {
        rv.clone() * rv.clone() + rv.clone() * Rational::from_integer(2)
    }

    fn lambda(rv: &Rational) -> QuadExt<Rational> {
        QuadExt::new(rv.clone() / Rational::from_integer(2), r(1, 2), disc(rv))
    }

    #[test]
    fn root_product_and_sum() {
        // lambda * mu = -R/2, lambda + mu = R, for several parameter values
        for rv in [r(2, 1), r(4, 1), r(3, 2), r(-1, 2)] {
            let l = lambda(&rv);
            let m = l.conj();
            let prod = l.clone() * m.clone();
            assert!(prod.w_coeff().is_zero());
            assert_eq!(prod.scalar(), &(-(rv.clone()) / Rational::from_integer(2)));
            let sum = l + m;
            assert!(sum.w_coeff().is_zero());
            assert_eq!(sum.scalar(), &rv);
        }
    }

    #[test]
    fn square_at_two() {
        // R = 2: lambda = 1 + W/2 with D = 8, so lambda^2 = 3 + W
        let l = lambda(&r(2, 1));
        let sq = l.pow(2);
        assert_eq!(sq.scalar(), &Rational::from_integer(3));
        assert_eq!(sq.w_coeff(), &Rational::one());
    }

    #[test]
    fn conjugate_norm_is_scalar() {
        let x = QuadExt::new(r(3, 5), r(-7, 2), r(8, 1));
        let n = x.clone() * x.conj();
        assert!(n.w_coeff().is_zero());
    }

    fn arb_q() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..7).prop_map(|(n, d)| Rational::from_ratio(n, d))
    }

    proptest! {
        #[test]
        fn mul_associative_commutative(
            a in arb_q(), b in arb_q(), c in arb_q(),
            e in arb_q(), f in arb_q(), g in arb_q(), d in arb_q()
        ) {
            let x = QuadExt::new(a, b, d.clone());
            let y = QuadExt::new(c, e, d.clone());
            let z = QuadExt::new(f, g, d);
            prop_assert_eq!(
                (x.clone() * y.clone()) * z.clone(),
                x.clone() * (y.clone() * z.clone())
            );
            prop_assert_eq!(x.clone() * y.clone(), y * x);
        }

        /// pow(a + b) = pow(a) * pow(b) for exponents up to 64.
        #[test]
        fn pow_homomorphism(a in arb_q(), b in arb_q(), d in arb_q(),
                            e1 in 0u64..=64, e2 in 0u64..=64) {
            prop_assume!(e1 + e2 <= 64);
            let x = QuadExt::new(a, b, d);
            prop_assert_eq!(x.pow(e1 + e2), x.pow(e1) * x.pow(e2));
        }
    }
}
