//! Linearization of powers: P(n)^ℓ as a combination of first-power values
//! P(K·n + B) with geometric weights (−R/2)^{j·n}.
//!
//! Coefficients are constructed once, symbolically, as reduced rational
//! functions in R; evaluation at a numeric parameter happens late so that
//! degenerate denominators are detected per parameter value rather than per
//! formula. Odd exponents ℓ = 2m+1 produce m+1 terms:
//!
//!   P(n)^{2m+1} = (2^{2m}/(R^{3m}(R+2)^m)) Σ_{j=0}^{m} (−1)^j C(2m+1,j) P((2m+1−2j)n) (−R/2)^{jn}
//!
//! Even exponents ℓ = 2m produce 2m+1 terms: for each j < m a shifted term
//! in P(2(m−j)(n+1)) and a plain term in P(2(m−j)n), both divided by
//! P(2(m−j)), plus one pure geometric term.

use crate::error::Result;
use crate::field::Field;
use crate::laurent::LaurentPoly;
use crate::pell::{pell_iter, pell_value, q_pell, symbolic_params, PellParams};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::ratfunc::RatFunc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermKind {
    /// coeff · P(K·n) · (−R/2)^{j·n}
    Pell,
    /// coeff · P(K·n + K) · (−R/2)^{j·n}, i.e. P(K(n+1))
    PellShifted,
    /// coeff · (−R/2)^{j·n}, no sequence factor
    Constant,
}

#[derive(Clone, Debug)]
pub struct LinTerm {
    /// Exact coefficient in the rational-function field over R.
    pub coeff: RatFunc,
    /// K: the multiplier of n inside P. Zero for constant terms.
    pub stride: u32,
    /// B: the constant index offset inside P; 0 or K.
    pub shift: u32,
    /// j: the geometric weight is (−R/2)^{j·n}.
    pub geo: u32,
    pub kind: TermKind,
}

#[derive(Clone, Debug)]
pub struct LinearizedForm {
    pub exponent: u32,
    pub terms: Vec<LinTerm>,
}

/// R^{3m}(R+2)^m (odd) resp. the analogous even-power denominators.
fn power_denominator(r_exp: u32, rp2_exp: u32) -> Poly<Rational> {
    Poly::var().pow(r_exp) * Poly::from_int_coeffs(&[2, 1]).pow(rp2_exp)
}

fn signed_binomial(upper: u64, j: u64) -> Rational {
    let b = Rational::binomial(upper, j);
    if j % 2 == 0 {
        b
    } else {
        -b
    }
}

/// Linearized form of P(n)^{2m+1}. The m = 0 case is the identity P(n)^1.
pub fn linearize_odd(m: u32) -> LinearizedForm {
    let ell = 2 * m + 1;
    let two_pow = Rational::from_integer(2)
        .pow_int(2 * m as i64)
        .expect("2^(2m)");
    let prefactor = RatFunc::new(
        Poly::constant(two_pow),
        power_denominator(3 * m, m),
    )
    .expect("nonzero denominator");

    let terms = (0..=m)
        .map(|j| LinTerm {
            coeff: prefactor.clone()
                * RatFunc::constant(signed_binomial(ell as u64, j as u64)),
            stride: ell - 2 * j,
            shift: 0,
            geo: j,
            kind: TermKind::Pell,
        })
        .collect();

    LinearizedForm { exponent: ell, terms }
}

/// Linearized form of P(n)^{2m}, m ≥ 1. The per-term denominators P(2(m−j))
/// are kept symbolic; they are nonzero as rational functions, and a numeric
/// parameter that annihilates one surfaces as `DegenerateDenominator` at
/// evaluation time.
pub fn linearize_even(m: u32) -> LinearizedForm {
    assert!(m >= 1, "even linearization needs a positive half-exponent");
    let ell = 2 * m;
    let sym = symbolic_params();
    let two = Rational::from_integer(2);
    let pow2 = |e: i64| two.pow_int(e).expect("2^e");

    let mut terms = Vec::with_capacity(2 * m as usize + 1);
    for j in 0..m {
        let t = m - j;
        let p_2t = pell_iter(&sym, 2 * t as i64);
        let q_2t = q_pell(&sym, 2 * t as i64);
        let bin = signed_binomial(ell as u64, j as u64);

        // (−1)^j C(2m,j) · 2^{2m+1} / (R^{3m}(R+2)^m · P(2t)) · P(2t(n+1))
        let shifted_coeff = RatFunc::new(
            Poly::constant(bin.clone() * pow2(2 * m as i64 + 1)),
            power_denominator(3 * m, m),
        )
        .expect("nonzero denominator")
            * p_2t.inverse().expect("P(2t) is nonzero symbolically");
        terms.push(LinTerm {
            coeff: shifted_coeff,
            stride: 2 * t,
            shift: 2 * t,
            geo: j,
            kind: TermKind::PellShifted,
        });

        // −(−1)^j C(2m,j) · 2^{2m−1} Q(2t) / (R^{3m−1}(R+2)^m · P(2t)) · P(2t·n)
        let plain_coeff = RatFunc::new(
            Poly::constant(-bin * pow2(2 * m as i64 - 1)),
            power_denominator(3 * m - 1, m),
        )
        .expect("nonzero denominator")
            * q_2t
            * p_2t.inverse().expect("P(2t) is nonzero symbolically");
        terms.push(LinTerm {
            coeff: plain_coeff,
            stride: 2 * t,
            shift: 0,
            geo: j,
            kind: TermKind::Pell,
        });
    }

    // (−1)^m C(2m,m) · 2^{2m} / (R^{3m}(R+2)^m) · (−R/2)^{mn}
    let constant_coeff = RatFunc::new(
        Poly::constant(signed_binomial(ell as u64, m as u64) * pow2(2 * m as i64)),
        power_denominator(3 * m, m),
    )
    .expect("nonzero denominator");
    terms.push(LinTerm {
        coeff: constant_coeff,
        stride: 0,
        shift: 0,
        geo: m,
        kind: TermKind::Constant,
    });

    LinearizedForm { exponent: ell, terms }
}

/// Linearized form for an arbitrary positive exponent.
///
/// Forms are parameter-independent, so they are built once per exponent and
/// served from a process-wide cache. The cache is behaviorally invisible
/// (construction is deterministic) and safe under concurrent use.
pub fn linearize(ell: u32) -> LinearizedForm {
    use std::collections::BTreeMap;
    use std::sync::Mutex;

    assert!(ell >= 1, "exponent must be positive");
    static CACHE: Mutex<BTreeMap<u32, LinearizedForm>> = Mutex::new(BTreeMap::new());
    let mut cache = CACHE.lock().expect("linearization cache poisoned");
    cache
        .entry(ell)
        .or_insert_with(|| {
            if ell % 2 == 1 {
                linearize_odd((ell - 1) / 2)
            } else {
                linearize_even(ell / 2)
            }
        })
        .clone()
}

/// Evaluates a linearized form at (params, n). Equals P(n)^ℓ exactly on the
/// form's valid domain; a parameter value that kills one of the symbolic
/// coefficient denominators yields `DegenerateDenominator`.
pub fn eval_linearized<K: Field>(
    form: &LinearizedForm,
    params: &PellParams<K>,
    n: u64,
) -> Result<K> {
    let base = params.geo_base();
    let mut total = K::zero();
    for term in &form.terms {
        let coeff: K = term.coeff.eval(params.r())?;
        let geo = base.pow_int(term.geo as i64 * n as i64)?;
        let contribution = match term.kind {
            TermKind::Constant => coeff * geo,
            TermKind::Pell | TermKind::PellShifted => {
                let index = term.stride as i64 * n as i64 + term.shift as i64;
                coeff * pell_value(params, index) * geo
            }
        };
        total = total + contribution;
    }
    Ok(total)
}

/// Exact check of the auxiliary Laurent identity
///
///   x^{2N} − x^{−2N} = (x + x⁻¹) Σ_{l=0}^{N−1} C(N+l, N−l−1) (x − x⁻¹)^{2l+1}
///
/// by full expansion of both sides.
pub fn laurent_identity_check(n: u32) -> bool {
    assert!(n >= 1);
    let lhs = LaurentPoly::monomial(2 * n as i64, Rational::one())
        - LaurentPoly::monomial(-2 * (n as i64), Rational::one());
    let diff = LaurentPoly::x() - LaurentPoly::x_inv();
    let mut sum = LaurentPoly::zero();
    for l in 0..n {
        let c = Rational::binomial((n + l) as u64, (n - l - 1) as u64);
        sum = sum + LaurentPoly::monomial(0, c) * diff.pow(2 * l + 1);
    }
    let rhs = (LaurentPoly::x() + LaurentPoly::x_inv()) * sum;
    lhs == rhs
}
