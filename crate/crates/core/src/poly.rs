//! Dense univariate polynomials over an arbitrary coefficient field.
//!
//! Degrees in this crate stay small (at most a few hundred), so a dense
//! `Vec` representation is the right trade-off: coefficient size dominates
//! everything. The invariant is that the leading coefficient is nonzero;
//! the zero polynomial is the empty vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::rational::Rational;

#[derive(Clone, PartialEq)]
pub struct Poly<K: Field> {
    coeffs: Vec<K>,
}

impl<K: Field> Poly<K> {
    /// Builds a polynomial from coefficients in ascending-degree order,
    /// trimming trailing zeros.
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Poly::new(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Poly::new(vec![K::zero(), K::one()])
    }

    pub fn monomial(coeff: K, degree: usize) -> Self {
        let mut coeffs = vec![K::zero(); degree + 1];
        coeffs[degree] = coeff;
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    /// Coefficient of the given degree (zero beyond the stored window).
    pub fn coeff(&self, degree: usize) -> K {
        self.coeffs.get(degree).cloned().unwrap_or_else(K::zero)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }

    /// Euclidean division: `self = q * rhs + r` with `deg r < deg rhs`.
    pub fn divrem(&self, rhs: &Self) -> Result<(Self, Self)> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dq = rhs.degree().expect("nonzero divisor");
        let lead_inv = rhs.leading().expect("nonzero divisor").inverse()?;
        let mut rem = self.coeffs.clone();
        if rem.len() < dq + 1 {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![K::zero(); rem.len() - dq];
        for i in (dq..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].clone() * lead_inv.clone();
            quot[i - dq] = q.clone();
            for j in 0..=dq {
                let delta = q.clone() * rhs.coeffs[j].clone();
                rem[i - dq + j] = rem[i - dq + j].clone() - delta;
            }
        }
        rem.truncate(dq);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = l.inverse().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }
}

impl Poly<Rational> {
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    /// Horner evaluation into another field, injecting the rational
    /// coefficients through [`Field::from_rational`].
    pub fn eval_in<K: Field>(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + K::from_rational(c.clone());
        }
        acc
    }
}

/// Monic greatest common divisor by the Euclidean algorithm, with each
/// remainder renormalized monic to keep coefficients tame.
///
/// Errors when both inputs are zero.
pub fn poly_gcd<K: Field>(a: &Poly<K>, b: &Poly<K>) -> Result<Poly<K>> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::InvalidParameter(
            "gcd of two zero polynomials".to_string(),
        ));
    }
    let mut x = a.monic();
    let mut y = b.monic();
    while !y.is_zero() {
        let (_, r) = x.divrem(&y)?;
        x = y;
        y = r.monic();
    }
    Ok(x)
}

impl<K: Field> Add for Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: Poly<K>) -> Poly<K> {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (i, c) in short.into_iter().enumerate() {
            long[i] = long[i].clone() + c;
        }
        Poly::new(long)
    }
}

impl<K: Field> Sub for Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: Poly<K>) -> Poly<K> {
        self + (-rhs)
    }
}

impl<K: Field> Neg for Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<K: Field> Mul for Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: Poly<K>) -> Poly<K> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<K: Field> fmt::Display for Poly<K> {
    /// Canonical text format: exact coefficient list, lowest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

impl<K: Field> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::RatFunc;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Poly<Rational> {
        Poly::from_int_coeffs(coeffs)
    }

    #[test]
    fn divrem_factors() {
        // (z^2 - 1) / (z - 1) = (z + 1, 0)
        let (q, r) = p(&[-1, 0, 1]).divrem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());

        // (z^2 + 1) / z = (z, 1)
        let (q, r) = p(&[1, 0, 1]).divrem(&p(&[0, 1])).unwrap();
        assert_eq!(q, p(&[0, 1]));
        assert_eq!(r, p(&[1]));

        assert_eq!(
            p(&[1]).divrem(&Poly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    /// Division with coefficients in the rational-function field,
    /// cross-checked by synthetic division at three numeric parameter
    /// values followed by interpolation of each coefficient.
    #[test]
    fn divrem_over_rational_functions() {
        let r_var = RatFunc::var();
        // 2 - 2Rz - Rz^2 divided by z - 1
        let dividend = Poly::new(vec![
            RatFunc::from_integer(2),
            -(r_var.clone() + r_var.clone()),
            -r_var.clone(),
        ]);
        let divisor = Poly::new(vec![RatFunc::from_integer(-1), RatFunc::one_k()]);
        let (q, rem) = dividend.divrem(&divisor).unwrap();

        // frozen symbolic expectation: quotient -Rz - 3R, remainder 2 - 3R
        let minus_three_r = -(r_var.clone() + r_var.clone() + r_var.clone());
        assert_eq!(q, Poly::new(vec![minus_three_r.clone(), -r_var.clone()]));
        assert_eq!(
            rem,
            Poly::new(vec![RatFunc::from_integer(2) + minus_three_r])
        );

        // oracle: synthetic division at R = 1, 2, 3, then Lagrange
        // interpolation of the (degree <= 1 in R) quotient coefficients.
        let points: Vec<Rational> = (1..=3).map(Rational::from_integer).collect();
        let mut q0_samples = Vec::new();
        let mut q1_samples = Vec::new();
        let mut rem_samples = Vec::new();
        for rv in &points {
            let dn = Poly::new(vec![
                Rational::from_integer(2),
                -(rv.clone() + rv.clone()),
                -rv.clone(),
            ]);
            let dv = p(&[-1, 1]);
            let (qq, rr) = dn.divrem(&dv).unwrap();
            q0_samples.push(qq.coeff(0));
            q1_samples.push(qq.coeff(1));
            rem_samples.push(rr.coeff(0));
        }
        let interp = |samples: &[Rational]| -> Poly<Rational> {
            // Lagrange interpolation through (points[i], samples[i])
            let mut acc = Poly::zero();
            for (i, yi) in samples.iter().enumerate() {
                let mut term = Poly::constant(yi.clone());
                for (j, xj) in points.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let denom = points[i].clone() - xj.clone();
                    term = term
                        * Poly::new(vec![
                            -xj.clone() / denom.clone(),
                            Rational::one() / denom,
                        ]);
                }
                acc = acc + term;
            }
            acc
        };
        assert_eq!(interp(&q1_samples), p(&[0, -1])); // -R
        assert_eq!(interp(&q0_samples), p(&[0, -3])); // -3R
        assert_eq!(interp(&rem_samples), p(&[2, -3])); // 2 - 3R
    }

    #[test]
    fn gcd_basics() {
        // gcd(z^2 - 1, z - 1) = z - 1
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        // gcd(z, z + 1) = 1
        assert_eq!(poly_gcd(&p(&[0, 1]), &p(&[1, 1])).unwrap(), Poly::one());
        assert!(poly_gcd::<Rational>(&Poly::zero(), &Poly::zero()).is_err());
        // one-sided zero
        assert_eq!(poly_gcd(&Poly::zero(), &p(&[2, 2])).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn display_is_lowest_degree_first() {
        assert_eq!(p(&[2, 0, -1]).to_string(), "[2, 0, -1]");
        assert_eq!(Poly::<Rational>::zero().to_string(), "[]");
    }

    fn arb_poly(max_len: usize) -> impl Strategy<Value = Poly<Rational>> {
        prop::collection::vec((-50i64..50, 1i64..8), 0..max_len)
            .prop_map(|cs| Poly::new(cs.into_iter().map(|(n, d)| Rational::from_ratio(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn divrem_reconstructs(a in arb_poly(7), b in arb_poly(5)) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(q * b.clone() + r.clone(), a);
            prop_assert!(r.degree().map_or(true, |d| d < b.degree().unwrap()));
        }

        #[test]
        fn degree_laws(a in arb_poly(6), b in arb_poly(6)) {
            let sum_deg = (a.clone() + b.clone()).degree();
            if let Some(d) = sum_deg {
                prop_assert!(d <= a.degree().unwrap_or(0).max(b.degree().unwrap_or(0)));
            }
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!(
                    (a.clone() * b.clone()).degree().unwrap(),
                    a.degree().unwrap() + b.degree().unwrap()
                );
            }
        }

        /// gcd(p*g, q*g) = monic(g) for coprime p, q.
        #[test]
        fn gcd_of_common_factor(p0 in arb_poly(4), q0 in arb_poly(4), g in arb_poly(4)) {
            prop_assume!(!p0.is_zero() && !q0.is_zero() && !g.is_zero());
            let h = poly_gcd(&p0, &q0).unwrap();
            // force coprimality by dividing out the common factor
            let (p1, r1) = p0.divrem(&h).unwrap();
            let (q1, r2) = q0.divrem(&h).unwrap();
            prop_assert!(r1.is_zero() && r2.is_zero());
            prop_assume!(!p1.is_zero() && !q1.is_zero());
            prop_assume!(poly_gcd(&p1, &q1).unwrap() == Poly::one());
            let got = poly_gcd(&(p1 * g.clone()), &(q1 * g.clone())).unwrap();
            prop_assert_eq!(got, g.monic());
        }
    }
}
