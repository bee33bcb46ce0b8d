//! Evaluation of the generalized Pell sequence P(n) and its companion Q(n).
//!
//! The sequence is defined by 2·P(n+2) = 2R·P(n+1) + R·P(n) with seeds
//! P(0) = 0, P(1) = 2/R, over any coefficient field containing R. Three
//! independent evaluators are provided — plain iteration, companion-matrix
//! powering, and the Binet form in the quadratic extension W² = R² + 2R —
//! and the verification suite requires them to agree exactly.
//!
//! Negative indices satisfy the backward form P(n) = 2·P(n+2)/R − 2·P(n+1),
//! equivalently the reflection P(−n) = −P(n)·(−2/R)ⁿ.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::quadext::QuadExt;
use crate::rational::Rational;
use crate::ratfunc::RatFunc;

/// The sequence parameter. R = 0 and R = −2 are excluded: 1/R and 1/(R+2)
/// prefactors appear throughout the closed forms.
#[derive(Clone, PartialEq, Debug)]
pub struct PellParams<K: Field> {
    r: K,
}

impl<K: Field> PellParams<K> {
    pub fn new(r: K) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::InvalidParameter("parameter R must be nonzero".into()));
        }
        if r == K::from_integer(-2) {
            return Err(Error::InvalidParameter("parameter R must differ from -2".into()));
        }
        Ok(PellParams { r })
    }

    pub fn r(&self) -> &K {
        &self.r
    }

    /// 2/R, the first seed value.
    pub fn seed(&self) -> K {
        K::from_integer(2) / self.r.clone()
    }

    /// −R/2, the product of the characteristic roots and the base of every
    /// geometric weight in the linearized forms.
    pub fn geo_base(&self) -> K {
        -(self.r.clone() / K::from_integer(2))
    }

    /// R² + 2R, the discriminant of the extension holding the roots.
    pub fn discriminant(&self) -> K {
        self.r.clone() * self.r.clone() + self.r.clone() + self.r.clone()
    }
}

impl PellParams<Rational> {
    pub fn numeric(r: Rational) -> Result<Self> {
        PellParams::new(r)
    }
}

/// Parameters with R as the indeterminate of the rational-function field.
pub fn symbolic_params() -> PellParams<RatFunc> {
    PellParams::new(RatFunc::var()).expect("the indeterminate is a valid parameter")
}

/// P(n) by plain iteration of the recurrence; negative n by the backward
/// form. The reference evaluator everything else is checked against.
pub fn pell_iter<K: Field>(params: &PellParams<K>, n: i64) -> K {
    let r = params.r();
    let half_r = r.clone() / K::from_integer(2);
    if n >= 0 {
        let mut prev = K::zero(); // P(0)
        let mut cur = params.seed(); // P(1)
        if n == 0 {
            return prev;
        }
        for _ in 1..n {
            let next = r.clone() * cur.clone() + half_r.clone() * prev.clone();
            prev = cur;
            cur = next;
        }
        cur
    } else {
        // backward form: P(k) = 2 P(k+2)/R - 2 P(k+1)
        let two = K::from_integer(2);
        let mut above2 = params.seed(); // P(k+2), starts at P(1)
        let mut above1 = K::zero(); // P(k+1), starts at P(0)
        let mut k = 0i64;
        while k > n {
            let below = two.clone() * above2.clone() / r.clone() - two.clone() * above1.clone();
            above2 = above1;
            above1 = below;
            k -= 1;
        }
        above1
    }
}

/// The whole prefix P(0..=n) in one sweep; cheaper than repeated calls when
/// a test needs every value.
pub fn pell_prefix<K: Field>(params: &PellParams<K>, n: u64) -> Vec<K> {
    let r = params.r();
    let half_r = r.clone() / K::from_integer(2);
    let mut values = Vec::with_capacity(n as usize + 1);
    values.push(K::zero());
    if n == 0 {
        return values;
    }
    values.push(params.seed());
    for _ in 1..n {
        let k = values.len();
        let next = r.clone() * values[k - 1].clone() + half_r.clone() * values[k - 2].clone();
        values.push(next);
    }
    values
}

/// Companion matrix [[R, R/2], [1, 0]] of the integer-seeded twin sequence
/// p(n) = (R/2)·P(n): Mⁿ[1][0] = p(n) and Mⁿ[0][0] = p(n+1).
#[derive(Clone)]
pub(crate) struct Mat2<K: Field> {
    pub a: K,
    pub b: K,
    pub c: K,
    pub d: K,
}

impl<K: Field> Mat2<K> {
    pub fn identity() -> Self {
        Mat2 {
            a: K::one(),
            b: K::zero(),
            c: K::zero(),
            d: K::one(),
        }
    }

    pub fn companion(params: &PellParams<K>) -> Self {
        Mat2 {
            a: params.r().clone(),
            b: params.r().clone() / K::from_integer(2),
            c: K::one(),
            d: K::zero(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Mat2 {
            a: self.a.clone() * rhs.a.clone() + self.b.clone() * rhs.c.clone(),
            b: self.a.clone() * rhs.b.clone() + self.b.clone() * rhs.d.clone(),
            c: self.c.clone() * rhs.a.clone() + self.d.clone() * rhs.c.clone(),
            d: self.c.clone() * rhs.b.clone() + self.d.clone() * rhs.d.clone(),
        }
    }

    /// Square with the shared-product shortcut (5 multiplications).
    pub fn square(&self) -> Self {
        let bc = self.b.clone() * self.c.clone();
        let a_plus_d = self.a.clone() + self.d.clone();
        Mat2 {
            a: self.a.clone() * self.a.clone() + bc.clone(),
            b: self.b.clone() * a_plus_d.clone(),
            c: self.c.clone() * a_plus_d,
            d: self.d.clone() * self.d.clone() + bc,
        }
    }

    pub fn pow(&self, exp: u64) -> Self {
        if exp == 0 {
            return Mat2::identity();
        }
        let mut acc = self.clone();
        let mut bit = 63 - exp.leading_zeros();
        while bit > 0 {
            bit -= 1;
            acc = acc.square();
            if (exp >> bit) & 1 == 1 {
                acc = acc.mul(self);
            }
        }
        acc
    }

    /// (p(k), p(k+1)) read off the matrix Mᵏ.
    pub fn seq_pair(&self) -> (K, K) {
        (self.c.clone(), self.a.clone())
    }
}

/// P(n) in O(log n) field multiplications via binary powering of the
/// companion matrix.
pub fn pell_fast<K: Field>(params: &PellParams<K>, n: u64) -> K {
    let (p_n, _) = Mat2::companion(params).pow(n).seq_pair();
    params.seed() * p_n
}

/// (P(n), P(n+1)) from a single matrix power.
pub fn pell_pair<K: Field>(params: &PellParams<K>, n: u64) -> (K, K) {
    let (p_n, p_n1) = Mat2::companion(params).pow(n).seq_pair();
    let scale = params.seed();
    (scale.clone() * p_n, scale * p_n1)
}

/// P(n) for any integer index in O(log |n|) multiplications, using the
/// reflection P(−n) = −P(n)·(−2/R)ⁿ for negative indices.
pub fn pell_value<K: Field>(params: &PellParams<K>, n: i64) -> K {
    if n >= 0 {
        return pell_fast(params, n as u64);
    }
    let k = n.unsigned_abs();
    let reflect = params
        .geo_base()
        .inverse()
        .expect("R is nonzero")
        .pow_int(k as i64)
        .expect("nonzero base");
    -(pell_fast(params, k) * reflect)
}

/// P(n) through the Binet form, computed entirely in the quadratic
/// extension: λ = (R + W)/2 and μ = (R − W)/2 are powered independently and
/// subtracted. The scalar part of λⁿ − μⁿ must vanish identically; a nonzero
/// scalar part signals an implementation bug, never bad input.
pub fn pell_binet<K: Field>(params: &PellParams<K>, n: u64) -> Result<K> {
    let half = K::from_rational(Rational::from_ratio(1, 2));
    let d = params.discriminant();
    let lambda = QuadExt::new(params.r().clone() * half.clone(), half.clone(), d.clone());
    let mu = QuadExt::new(params.r().clone() * half.clone(), -half, d);
    let diff = lambda.pow(n) - mu.pow(n);
    if !diff.scalar().is_zero() {
        return Err(Error::BinetInconsistency(format!(
            "scalar part of lambda^n - mu^n is {} at n = {}",
            diff.scalar(),
            n
        )));
    }
    // lambda^n - mu^n = w·W, and P(n) = (2/(RW))·w·W = 2w/R.
    Ok(K::from_integer(2) * diff.w_coeff().clone() / params.r().clone())
}

/// Companion sequence Q(n) = (2/R)(λⁿ + μⁿ) = 2·P(n+1) − R·P(n).
pub fn q_pell<K: Field>(params: &PellParams<K>, n: i64) -> K {
    K::from_integer(2) * pell_value(params, n + 1) - params.r().clone() * pell_value(params, n)
}

/// The two-parameter ancestor sequence: P(r, n) with R = 2^r is the
/// shift-by-two of this crate's sequence, P(r, n) = P_{2^r}(n + 2).
pub fn brod_convert(r: u32, n: u64) -> Rational {
    assert!(r >= 1, "the ancestor family is defined for r >= 1");
    let big_r = Rational::from_integer(2).pow_int(r as i64).expect("2^r");
    let params = PellParams::numeric(big_r).expect("2^r is a valid parameter");
    pell_fast(&params, n + 2)
}
