//! Reduced rational functions over the rationals: the symbolic coefficient
//! field.
//!
//! An element is `num/den` with `gcd(num, den) = 1` and `den` monic, so
//! equality is structural. The indeterminate is the sequence parameter and
//! is written `R` throughout the crate's documentation.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{poly_gcd, Poly};
use crate::rational::Rational;

#[derive(Clone, PartialEq)]
pub struct RatFunc {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl RatFunc {
    /// Checked constructor; reduces to canonical form (coprime, monic
    /// denominator, zero as 0/1).
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        // A constant on either side is already coprime to the other side.
        let skip_gcd = num.degree() == Some(0) || den.degree() == Some(0);
        let (num, den) = if skip_gcd {
            (num, den)
        } else {
            let g = poly_gcd(&num, &den)?;
            if g.degree() == Some(0) {
                (num, den)
            } else {
                let (nq, nr) = num.divrem(&g)?;
                let (dq, dr) = den.divrem(&g)?;
                debug_assert!(nr.is_zero() && dr.is_zero());
                (nq, dq)
            }
        };
        let lead_inv = den
            .leading()
            .expect("nonzero denominator")
            .inverse()
            .expect("nonzero leading coefficient");
        Ok(RatFunc {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        })
    }

    /// Constructor for values already in canonical form (used on fast paths
    /// where both operands are polynomials).
    fn from_reduced(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        debug_assert!(!den.is_zero());
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly<Rational>) -> Self {
        if p.is_zero() {
            return RatFunc::zero_k();
        }
        RatFunc::from_reduced(p, Poly::one())
    }

    pub fn constant(q: Rational) -> Self {
        RatFunc::from_poly(Poly::constant(q))
    }

    pub fn from_integer(n: i64) -> Self {
        RatFunc::constant(Rational::from_integer(n))
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        RatFunc::from_poly(Poly::var())
    }

    fn zero_k() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one_k() -> Self {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn den(&self) -> &Poly<Rational> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Evaluate at a point of any coefficient field. Fails with
    /// `DegenerateDenominator` when the denominator vanishes there.
    pub fn eval<K: Field>(&self, x: &K) -> Result<K> {
        let den_val = self.den.eval_in(x);
        if den_val.is_zero() {
            return Err(Error::DegenerateDenominator(format!(
                "denominator {} vanishes at {}",
                self.den, x
            )));
        }
        Ok(self.num.eval_in(x) / den_val)
    }

    /// Equality by cross multiplication, without relying on canonical form.
    pub fn cross_eq(&self, rhs: &Self) -> bool {
        self.num.clone() * rhs.den.clone() == rhs.num.clone() * self.den.clone()
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        // Polynomial + polynomial stays reduced without a gcd.
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatFunc::from_poly(self.num + rhs.num);
        }
        if self.den == rhs.den {
            return RatFunc::new(self.num + rhs.num, self.den).expect("nonzero denominator");
        }
        RatFunc::new(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self + (-rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFunc::zero_k();
        }
        // Scalar times reduced value stays reduced.
        if self.den == Poly::one() && self.num.degree() == Some(0) {
            return RatFunc::from_reduced(rhs.num.scale(&self.num.coeff(0)), rhs.den);
        }
        if rhs.den == Poly::one() && rhs.num.degree() == Some(0) {
            return RatFunc::from_reduced(self.num.scale(&rhs.num.coeff(0)), self.den);
        }
        // Cross-reduce before multiplying to keep degrees small.
        let g1 = poly_gcd(&self.num, &rhs.den).expect("operands nonzero");
        let g2 = poly_gcd(&rhs.num, &self.den).expect("operands nonzero");
        let exact = |p: &Poly<Rational>, g: &Poly<Rational>| -> Poly<Rational> {
            if g.degree() == Some(0) {
                return p.clone();
            }
            let (q, r) = p.divrem(g).expect("nonzero gcd");
            debug_assert!(r.is_zero());
            q
        };
        let num = exact(&self.num, &g1) * exact(&rhs.num, &g2);
        let den = exact(&self.den, &g2) * exact(&rhs.den, &g1);
        let lead_inv = den
            .leading()
            .expect("nonzero denominator")
            .inverse()
            .expect("nonzero leading coefficient");
        RatFunc::from_reduced(num.scale(&lead_inv), den.scale(&lead_inv))
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    /// Panics on a zero divisor; use [`Field::inverse`] on fallible paths.
    fn div(self, rhs: RatFunc) -> RatFunc {
        assert!(!rhs.num.is_zero(), "division of rational functions by zero");
        // The reciprocal swaps num and den, so the new denominator must be
        // re-normalized monic to keep the value canonical.
        let lead_inv = rhs
            .num
            .leading()
            .expect("nonzero divisor")
            .inverse()
            .expect("nonzero leading coefficient");
        self * RatFunc::from_reduced(rhs.den.scale(&lead_inv), rhs.num.scale(&lead_inv))
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero_k()
    }

    fn one() -> Self {
        RatFunc::one_k()
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num == Poly::one() && self.den == Poly::one()
    }

    fn from_rational(q: Rational) -> Self {
        RatFunc::constant(q)
    }

    fn inverse(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.num.degree().map_or(true, |d| d == 0) && self.den == Poly::one() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }
}

impl fmt::Display for RatFunc {
    /// Canonical text format: `num` for polynomials, `num/den` otherwise,
    /// with both polynomials as coefficient lists, lowest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Poly<Rational> {
        Poly::from_int_coeffs(coeffs)
    }

    #[test]
    fn reduction_to_canonical_form() {
        // (z^2 - 1)/(2z - 2) reduces to (z + 1)/2
        let f = RatFunc::new(p(&[-1, 0, 1]), p(&[-2, 2])).unwrap();
        assert_eq!(f.num(), &p(&[1, 1]).scale(&Rational::from_ratio(1, 2)));
        assert_eq!(f.den(), &Poly::one());
        // denominator normalized monic
        let g = RatFunc::new(p(&[1]), p(&[0, 3])).unwrap();
        assert_eq!(g.den(), &p(&[0, 1]));
        assert_eq!(g.num(), &Poly::constant(Rational::from_ratio(1, 3)));
        assert!(RatFunc::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn field_operations() {
        let r = RatFunc::var();
        // 2/R + 1 = (R + 2)/R
        let sum = RatFunc::new(p(&[2]), p(&[0, 1])).unwrap() + RatFunc::one_k();
        assert_eq!(sum, RatFunc::new(p(&[2, 1]), p(&[0, 1])).unwrap());
        // R * (1/R) = 1
        let inv = r.inverse().unwrap();
        assert!((r.clone() * inv).is_one());
        // eval commutes: (R^2 + 1)/R at R = 2/3 equals 13/6... check
        let f = RatFunc::new(p(&[1, 0, 1]), p(&[0, 1])).unwrap();
        let v: Rational = f.eval(&Rational::from_ratio(2, 3)).unwrap();
        assert_eq!(v, Rational::from_ratio(13, 6));
        // pole detection
        let g = RatFunc::new(p(&[1]), p(&[-2, 3])).unwrap(); // 1/(3R - 2)
        assert!(matches!(
            g.eval(&Rational::from_ratio(2, 3)),
            Err(Error::DegenerateDenominator(_))
        ));
    }

    #[test]
    fn display_round_trip_shape() {
        let f = RatFunc::new(p(&[2]), p(&[0, 1])).unwrap();
        assert_eq!(f.to_string(), "[2]/[0, 1]");
        assert_eq!(RatFunc::from_integer(5).to_string(), "[5]");
    }

    fn arb_poly(max_len: usize) -> impl Strategy<Value = Poly<Rational>> {
        prop::collection::vec(-9i64..9, 0..max_len).prop_map(|cs| Poly::from_int_coeffs(&cs))
    }

    fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
        (arb_poly(5), arb_poly(4))
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        /// Reduction idempotence and agreement between cross-multiplication
        /// equality and structural equality of reduced forms.
        #[test]
        fn reduction_idempotent_and_eq_consistent(f in arb_ratfunc(), g in arb_ratfunc()) {
            let reduced_again = RatFunc::new(f.num().clone(), f.den().clone()).unwrap();
            prop_assert_eq!(&reduced_again, &f);
            prop_assert_eq!(f.cross_eq(&g), f == g);
        }

        #[test]
        fn field_axioms(f in arb_ratfunc(), g in arb_ratfunc(), h in arb_ratfunc()) {
            prop_assert_eq!(
                (f.clone() + g.clone()) + h.clone(),
                f.clone() + (g.clone() + h.clone())
            );
            prop_assert_eq!(
                f.clone() * (g.clone() + h.clone()),
                f.clone() * g.clone() + f.clone() * h.clone()
            );
            if !f.is_zero() {
                prop_assert!((f.clone() * f.inverse().unwrap()).is_one());
            }
        }

        /// Every operation must return the canonical representation:
        /// monic denominator, coprime with the numerator.
        #[test]
        fn results_stay_canonical(f in arb_ratfunc(), g in arb_ratfunc()) {
            for v in [
                f.clone() + g.clone(),
                f.clone() * g.clone(),
                f.clone() - g.clone(),
            ] {
                prop_assert!(v.den().leading().map_or(false, |l| l.is_one()));
                prop_assert_eq!(&v, &RatFunc::new(v.num().clone(), v.den().clone()).unwrap());
            }
            if !g.is_zero() {
                let q = f.clone() / g.clone();
                prop_assert!(q.den().leading().map_or(false, |l| l.is_one()));
                prop_assert_eq!(&q, &RatFunc::new(q.num().clone(), q.den().clone()).unwrap());
                prop_assert_eq!(q * g, f);
            }
        }
    }
}
