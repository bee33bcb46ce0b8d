//! Published variants of several identities, encoded verbatim.
//!
//! The derivable forms of these identities live in [`crate::gf`],
//! [`crate::linearize`] and [`crate::powersum`]. The variants here are kept
//! exactly as printed — including any defects — so the verification layer
//! can adjudicate each one against the oracle-checked form and report
//! where they differ. Nothing in this module is used by the computational
//! paths.

use crate::field::Field;
use crate::gf::LinearGF;
use crate::pell::{pell_value, PellParams};
use crate::poly::Poly;
use crate::powersum::GfFraction;
use crate::rational::Rational;
use crate::ratfunc::RatFunc;

/// The printed unweighted reading-off formula for Σ_{k=0}^{n} P(mk):
///
///   a/(b+c+d) + (b·P(m(n+1)) + d·P(mn))/(b+c+d)
///
/// The sign of the second summand is wrong as printed; the corrected closed
/// form lives in [`crate::gf::weighted_partial_sum`]. At (R=2, m=1, n=2)
/// this variant yields −2 where the true sum is 3.
pub fn unweighted_partial_sum_printed<K: Field>(gf: &LinearGF<K>, n: u64) -> K {
    let a = gf.n1.clone();
    let denom = gf.b.clone() + gf.c.clone() + gf.d.clone();
    assert!(!denom.is_zero(), "printed variant undefined at resonance");
    let m = gf.stride() as i64;
    let p_next = pell_value(gf.params(), m * (n as i64 + 1));
    let p_cur = pell_value(gf.params(), m * n as i64);
    (a + gf.b.clone() * p_next + gf.d.clone() * p_cur) / denom
}

/// The printed odd-power linearization:
///
///   P(n)^{2m+1} = (2^{2m}/(R^{3m}(R+2)^m)) Σ_{j=0}^{m} (−1)^j C(m,j) P((m−2j)n) (−R/2)^{jn}
///
/// with binomial C(m,j) and stride m−2j, as printed. The derivation behind
/// it manipulates C(2m+1,j) with exponents 2m+1−2j, and that corrected form
/// (in [`crate::linearize::linearize_odd`]) is the one that passes the
/// oracle; this variant already fails at m=1, R=2, n=2, where it produces
/// 1/2 instead of P(2)³ = 8.
pub fn odd_power_printed<K: Field>(m: u32, params: &PellParams<K>, n: u64) -> K {
    let r = params.r().clone();
    let two_pow = K::from_integer(2)
        .pow_int(2 * m as i64)
        .expect("2^(2m)");
    let denom = r.pow_int(3 * m as i64).expect("R^(3m)")
        * (r.clone() + K::from_integer(2))
            .pow_int(m as i64)
            .expect("(R+2)^m");
    let prefactor = two_pow / denom;
    let base = params.geo_base();
    let mut sum = K::zero();
    for j in 0..=m {
        let bin = K::from_rational(Rational::binomial(m as u64, j as u64));
        let sign = if j % 2 == 0 { K::one() } else { -K::one() };
        let stride = m as i64 - 2 * j as i64;
        let geo = base
            .pow_int(j as i64 * n as i64)
            .expect("nonnegative exponent");
        sum = sum + sign * bin * pell_value(params, stride * n as i64) * geo;
    }
    prefactor * sum
}

fn rp(coeffs: &[i64]) -> Poly<Rational> {
    Poly::from_int_coeffs(coeffs)
}

fn product(factors: &[Poly<Rational>]) -> RatFunc {
    RatFunc::from_poly(
        factors
            .iter()
            .fold(Poly::one(), |acc, f| acc * f.clone()),
    )
}

fn zpoly(coeffs: Vec<RatFunc>) -> Poly<RatFunc> {
    Poly::new(coeffs)
}

/// The printed generating function of Σ_{k=0}^{n} P(k)², verbatim, as three
/// fractions in z with coefficients in the rational-function field:
///
///   16(R−2) / ((1−z)·R²(R+2)²(3R−2))
/// + 16(−zR+zR²+2) / ((R+2)(3R−2)R² · (z²R²−4zR(R+1)+4))
/// − 16 / ((zR+2)·R²(R+2)²)
pub fn square_sum_gf_printed() -> Vec<GfFraction> {
    let k1 = product(&[rp(&[0, 0, 1]), rp(&[2, 1]), rp(&[2, 1]), rp(&[-2, 3])]);
    let f1 = GfFraction {
        num: zpoly(vec![product(&[rp(&[-32, 16])])]),
        den: zpoly(vec![k1.clone(), -k1]),
    };

    let l = product(&[rp(&[2, 1]), rp(&[-2, 3]), rp(&[0, 0, 1])]);
    let r_sq = RatFunc::from_poly(rp(&[0, 0, 1]));
    let four_r_r1 = RatFunc::from_poly(rp(&[0, 4, 4]));
    let f2 = GfFraction {
        num: zpoly(vec![
            RatFunc::from_integer(32),
            RatFunc::from_poly(rp(&[0, -16, 16])),
        ]),
        den: zpoly(vec![
            RatFunc::from_integer(4) * l.clone(),
            -four_r_r1 * l.clone(),
            r_sq * l,
        ]),
    };

    let m = product(&[rp(&[0, 0, 1]), rp(&[2, 1]), rp(&[2, 1])]);
    let f3 = GfFraction {
        num: zpoly(vec![RatFunc::from_integer(-16)]),
        den: zpoly(vec![
            RatFunc::from_integer(2) * m.clone(),
            RatFunc::from_poly(rp(&[0, 1])) * m,
        ]),
    };

    vec![f1, f2, f3]
}

/// The printed generating function of Σ_{k=0}^{n} P(2k)³, verbatim:
///
///   512(R⁶+32R⁴+32R³+64) / ((R+2)²(3R−2)(7R²−2R+4)(3R²+6R+4)(R²+2R−4)(R³−4R²−8)·(z−1))
/// − 384(zR⁶−64) / ((z²R⁶−16zR³(R+1)+64)·R·(R³−4R²−8)(R²+2R−4)(R+2)²)
/// − 128(2R+3)(2R+1)(zR⁶−64) / ((z²R⁶−16zR³(R+1)(4R²+8R+1)+64)·R·(3R²+6R+4)(7R²−2R+4)(3R−2)(R+2)²)
pub fn stride2_cube_sum_gf_printed() -> Vec<GfFraction> {
    let r6 = rp(&[0, 0, 0, 0, 0, 0, 1]);

    let c1 = product(&[
        rp(&[2, 1]),
        rp(&[2, 1]),
        rp(&[-2, 3]),
        rp(&[4, -2, 7]),
        rp(&[4, 6, 3]),
        rp(&[-4, 2, 1]),
        rp(&[-8, 0, -4, 1]),
    ]);
    let g1 = GfFraction {
        num: zpoly(vec![RatFunc::from_poly(
            rp(&[64, 0, 0, 32, 32, 0, 1]).scale(&Rational::from_integer(512)),
        )]),
        den: zpoly(vec![-c1.clone(), c1]),
    };

    let c2 = product(&[
        rp(&[0, 1]),
        rp(&[-8, 0, -4, 1]),
        rp(&[-4, 2, 1]),
        rp(&[2, 1]),
        rp(&[2, 1]),
    ]);
    // numerator −384(zR⁶−64) = 24576 − 384R⁶·z
    let g2 = GfFraction {
        num: zpoly(vec![
            RatFunc::from_integer(24576),
            RatFunc::from_poly(r6.scale(&Rational::from_integer(-384))),
        ]),
        den: zpoly(vec![
            RatFunc::from_integer(64) * c2.clone(),
            RatFunc::from_poly(rp(&[0, 0, 0, -16, -16])) * c2.clone(),
            RatFunc::from_poly(r6.clone()) * c2,
        ]),
    };

    let c3 = product(&[
        rp(&[0, 1]),
        rp(&[4, 6, 3]),
        rp(&[4, -2, 7]),
        rp(&[-2, 3]),
        rp(&[2, 1]),
        rp(&[2, 1]),
    ]);
    // −128(2R+3)(2R+1)(zR⁶−64)
    let lead = product(&[rp(&[3, 2]), rp(&[1, 2])]);
    let g3 = GfFraction {
        num: zpoly(vec![
            lead.clone() * RatFunc::from_integer(128 * 64),
            lead * RatFunc::from_poly(r6.scale(&Rational::from_integer(-128))),
        ]),
        den: zpoly(vec![
            RatFunc::from_integer(64) * c3.clone(),
            // −16R³(R+1)(4R²+8R+1)
            -(RatFunc::from_poly(
                rp(&[0, 0, 0, 16, 16]) * rp(&[1, 8, 4]),
            )) * c3.clone(),
            RatFunc::from_poly(r6) * c3,
        ]),
    };

    vec![g1, g2, g3]
}
