//! Rational generating functions of stride subsequences and their weighted
//! partial sums.
//!
//! For u(k) = P(A·k + B) the generating function is
//! (n0 + n1·z)/(b + c·z + d·z²), where b, c, d encode the order-2
//! recurrence of the stride-A subsequence and the degree-1 numerator
//! carries the shift. Weighted partial sums Σ_{k≤n} σᵏ·u(k) have a closed
//! form in u(n) and u(n+1) except at resonance (b + cσ + dσ² = 0), where
//! the evaluation falls back to exact direct summation and says so.

use std::cell::Cell;

use crate::field::Field;
use crate::pell::{pell_iter, pell_value, PellParams};

/// Generating function (n0 + n1·z)/(b + c·z + d·z²) of u(k) = P(A·k + B).
#[derive(Clone, Debug)]
pub struct LinearGF<K: Field> {
    params: PellParams<K>,
    stride: u32,
    shift: i64,
    pub n0: K,
    pub n1: K,
    pub b: K,
    pub c: K,
    pub d: K,
}

impl<K: Field> LinearGF<K> {
    pub fn params(&self) -> &PellParams<K> {
        &self.params
    }

    /// A in u(k) = P(A·k + B).
    pub fn stride(&self) -> u32 {
        self.stride
    }

    /// B in u(k) = P(A·k + B).
    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// u(k) at an explicit index, via the fast evaluator.
    pub fn term(&self, k: u64) -> K {
        pell_value(&self.params, self.stride as i64 * k as i64 + self.shift)
    }
}

thread_local! {
    static WEIGHTED_EVALS: Cell<u64> = const { Cell::new(0) };
}

/// Number of weighted-partial-sum evaluations on this thread since the last
/// reset. Purely observational; used by the complexity-witness tests.
pub fn weighted_eval_count() -> u64 {
    WEIGHTED_EVALS.with(|c| c.get())
}

pub fn reset_weighted_eval_count() {
    WEIGHTED_EVALS.with(|c| c.set(0));
}

pub(crate) fn record_weighted_eval() {
    WEIGHTED_EVALS.with(|c| c.set(c.get() + 1));
}

/// Generating function of the plain stride subsequence u(k) = P(m·k):
///
///   F_m(z) = 2^m·P(m)·z / (2^m − (R(R+1)·2^{m−1}·P(m) − R²·2^{m−2}·P(m−2))·z + (−1)^m·R^m·z²)
///
/// For m = 1 this reproduces the ordinary generating function
/// 4z/(R(2 − 2Rz − Rz²)); note the m = 1 coefficient reaches back to P(−1).
pub fn subsequence_gf<K: Field>(params: &PellParams<K>, m: u32) -> LinearGF<K> {
    assert!(m >= 1, "stride must be positive");
    let r = params.r().clone();
    let two = K::from_integer(2);
    let pow2 = |e: i64| two.pow_int(e).expect("2^e is exact");
    // Coefficient indices are tiny; plain iteration beats matrix powering.
    let p_m = pell_iter(params, m as i64);
    let p_m2 = pell_iter(params, m as i64 - 2);

    let b = pow2(m as i64);
    let c = -(r.clone() * (r.clone() + K::one()) * pow2(m as i64 - 1) * p_m.clone()
        - r.clone() * r.clone() * pow2(m as i64 - 2) * p_m2);
    let d_sign = if m % 2 == 0 { K::one() } else { -K::one() };
    let d = d_sign * r.pow_int(m as i64).expect("R^m is exact");
    let n1 = b.clone() * p_m;

    LinearGF {
        params: params.clone(),
        stride: m,
        shift: 0,
        n0: K::zero(),
        n1,
        b,
        c,
        d,
    }
}

/// Generating function of the shifted subsequence u(k) = P(A·k + B): same
/// denominator as the plain stride-A function, numerator chosen so that
/// u(0) = P(B) and u(1) = P(A + B). Reduces to [`subsequence_gf`] at B = 0.
pub fn shifted_subsequence_gf<K: Field>(params: &PellParams<K>, a: u32, b_shift: i64) -> LinearGF<K> {
    let base = subsequence_gf(params, a);
    if b_shift == 0 {
        return base;
    }
    let u0 = pell_iter(params, b_shift);
    let u1 = pell_iter(params, a as i64 + b_shift);
    let n0 = base.b.clone() * u0.clone();
    let n1 = base.b.clone() * u1 + base.c.clone() * u0;
    LinearGF {
        shift: b_shift,
        n0,
        n1,
        ..base
    }
}

/// First n+1 series coefficients u(0..=n) by running the order-2 recurrence
/// b·u(k+2) + c·u(k+1) + d·u(k) = 0 off the numerator.
pub fn gf_series<K: Field>(gf: &LinearGF<K>, n: u64) -> Vec<K> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let u0 = gf.n0.clone() / gf.b.clone();
    out.push(u0.clone());
    if n == 0 {
        return out;
    }
    out.push((gf.n1.clone() - gf.c.clone() * u0) / gf.b.clone());
    for _ in 1..n {
        let k = out.len();
        let next = -(gf.c.clone() * out[k - 1].clone() + gf.d.clone() * out[k - 2].clone())
            / gf.b.clone();
        out.push(next);
    }
    out
}

/// Result of a weighted partial sum, flagging whether the resonance
/// fallback (exact direct summation) was used.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedSum<K: Field> {
    pub value: K,
    pub used_fallback: bool,
}

/// Σ_{k=0}^{n} σᵏ·u(k) in closed form:
///
///   S = [ b·u(0) + σ·(b·u(1) + c·u(0)) − σ^{n+1}·b·u(n+1) + σ^{n+2}·d·u(n) ] / (b + cσ + dσ²)
///
/// with u(n), u(n+1) obtained from the fast evaluator. At resonance the
/// denominator vanishes and the sum is taken directly instead.
pub fn weighted_partial_sum<K: Field>(gf: &LinearGF<K>, sigma: &K, n: u64) -> WeightedSum<K> {
    weighted_sum_impl(gf, sigma, n, None)
}

/// Closed form with caller-supplied endpoint values u(n), u(n+1); used when
/// the caller can batch matrix powers across several sums.
pub fn weighted_partial_sum_with_endpoints<K: Field>(
    gf: &LinearGF<K>,
    sigma: &K,
    n: u64,
    u_n: K,
    u_n1: K,
) -> WeightedSum<K> {
    weighted_sum_impl(gf, sigma, n, Some((u_n, u_n1)))
}

fn weighted_sum_impl<K: Field>(
    gf: &LinearGF<K>,
    sigma: &K,
    n: u64,
    endpoints: Option<(K, K)>,
) -> WeightedSum<K> {
    record_weighted_eval();
    let denom = gf.b.clone()
        + gf.c.clone() * sigma.clone()
        + gf.d.clone() * sigma.clone() * sigma.clone();
    if denom.is_zero() {
        // Resonance: sum directly off the recurrence, exactly.
        let u = gf_series(gf, n);
        let mut weight = K::one();
        let mut acc = K::zero();
        for (k, uk) in u.into_iter().enumerate() {
            if k > 0 {
                weight = weight * sigma.clone();
            }
            acc = acc + weight.clone() * uk;
        }
        return WeightedSum {
            value: acc,
            used_fallback: true,
        };
    }
    let (u_n, u_n1) = endpoints.unwrap_or_else(|| {
        (
            gf.term(n),
            gf.term(n + 1),
        )
    });
    let u0 = gf.n0.clone() / gf.b.clone();
    let u1 = (gf.n1.clone() - gf.c.clone() * u0.clone()) / gf.b.clone();
    let sig_n1 = sigma.pow_int(n as i64 + 1).expect("nonnegative exponent");
    let numer = gf.b.clone() * u0.clone()
        + sigma.clone() * (gf.b.clone() * u1 + gf.c.clone() * u0)
        - sig_n1.clone() * gf.b.clone() * u_n1
        + sig_n1 * sigma.clone() * gf.d.clone() * u_n;
    WeightedSum {
        value: numer / denom,
        used_fallback: false,
    }
}

/// Exhaustively checks the stride-m subsequence recurrence
///
///   2^m·P((n+2)m) − (R(R+1)2^{m−1}P(m) − R²2^{m−2}P(m−2))·P((n+1)m) + (−1)^m R^m·P(nm) = 0
///
/// for 0 ≤ n ≤ n_max. At m = 1 this is the ordinary recursion.
pub fn subsequence_recurrence_check<K: Field>(
    params: &PellParams<K>,
    m: u32,
    n_max: u64,
) -> bool {
    let gf = subsequence_gf(params, m);
    // One iterative sweep covers every index the check needs; this keeps
    // the symbolic instantiation (polynomial coefficients) cheap.
    let prefix = crate::pell::pell_prefix(params, m as u64 * (n_max + 2));
    for n in 0..=n_max as usize {
        let u_prev = &prefix[m as usize * n];
        let u_cur = &prefix[m as usize * (n + 1)];
        let u_next = &prefix[m as usize * (n + 2)];
        let lhs = gf.b.clone() * u_next.clone()
            + gf.c.clone() * u_cur.clone()
            + gf.d.clone() * u_prev.clone();
        if !lhs.is_zero() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pell::{pell_iter, symbolic_params};
    use crate::poly::Poly;
    use crate::rational::Rational;
    use crate::ratfunc::RatFunc;

    fn num(r: i64) -> PellParams<Rational> {
        PellParams::numeric(Rational::from_integer(r)).unwrap()
    }

    fn numq(n: i64, d: i64) -> PellParams<Rational> {
        PellParams::numeric(Rational::from_ratio(n, d)).unwrap()
    }

    fn ri(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn coefficients_at_stride_one() {
        // (n0, n1, b, c, d) = (0, 4/R, 2, -2R, -R)
        let gf = subsequence_gf(&symbolic_params(), 1);
        let rf = |num: &[i64], den: &[i64]| {
            RatFunc::new(Poly::from_int_coeffs(num), Poly::from_int_coeffs(den)).unwrap()
        };
        assert!(gf.n0.is_zero());
        assert_eq!(gf.n1, rf(&[4], &[0, 1]));
        assert_eq!(gf.b, RatFunc::from_integer(2));
        assert_eq!(gf.c, rf(&[0, -2], &[1]));
        assert_eq!(gf.d, rf(&[0, -1], &[1]));
    }

    #[test]
    fn coefficients_at_stride_two() {
        let gf = subsequence_gf(&num(2), 2);
        assert_eq!(
            (gf.n0, gf.n1, gf.b, gf.c, gf.d),
            (ri(0), ri(8), ri(4), ri(-24), ri(4))
        );
        // symbolically c = -4R(R+1) and d = R^2
        let sym = subsequence_gf(&symbolic_params(), 2);
        assert_eq!(
            sym.c,
            RatFunc::from_poly(Poly::from_int_coeffs(&[0, -4, -4]))
        );
        assert_eq!(sym.d, RatFunc::from_poly(Poly::from_int_coeffs(&[0, 0, 1])));
    }

    #[test]
    fn shifted_reduces_and_shifts() {
        let plain = subsequence_gf(&num(2), 3);
        let shifted = shifted_subsequence_gf(&num(2), 3, 0);
        assert_eq!(
            (plain.n0, plain.n1),
            (shifted.n0.clone(), shifted.n1.clone())
        );

        // (R=2, A=2, B=2): n0 = 8, n1 = 0, series 2, 12, 70, 408
        let gf = shifted_subsequence_gf(&num(2), 2, 2);
        assert_eq!(gf.n0, ri(8));
        assert_eq!(gf.n1, ri(0));
        assert_eq!(gf_series(&gf, 3), vec![ri(2), ri(12), ri(70), ri(408)]);

        // (R=2, A=1, B=-1): n0 = 2, series 1, 0, 1, 2, 5
        let gf = shifted_subsequence_gf(&num(2), 1, -1);
        assert_eq!(gf.n0, ri(2));
        assert_eq!(
            gf_series(&gf, 4),
            vec![ri(1), ri(0), ri(1), ri(2), ri(5)]
        );
    }

    #[test]
    fn series_examples() {
        // symbolic stride 1: 0, 2/R, 2, 2R+1, 2R(R+1)
        let gf = subsequence_gf(&symbolic_params(), 1);
        let s = gf_series(&gf, 4);
        let sym = symbolic_params();
        for (k, v) in s.iter().enumerate() {
            assert_eq!(v, &pell_iter(&sym, k as i64));
        }
        // stride 2 at R = 2: 0, 2, 12, 70, 408
        let gf = subsequence_gf(&num(2), 2);
        assert_eq!(
            gf_series(&gf, 4),
            vec![ri(0), ri(2), ri(12), ri(70), ri(408)]
        );
        // N = 0 yields just n0/b
        let gf = shifted_subsequence_gf(&num(2), 2, 2);
        assert_eq!(gf_series(&gf, 0), vec![ri(2)]);
    }

    #[test]
    fn series_matches_direct_evaluation() {
        for params in [num(2), num(4), numq(3, 2), numq(1, 4)] {
            for a in 1..=8u32 {
                for b in -8..=8i64 {
                    let gf = shifted_subsequence_gf(&params, a, b);
                    let s = gf_series(&gf, 40);
                    for (k, v) in s.iter().enumerate() {
                        assert_eq!(
                            v,
                            &pell_value(&params, a as i64 * k as i64 + b),
                            "R={} A={} B={} k={}",
                            params.r(),
                            a,
                            b,
                            k
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn weighted_sum_examples() {
        // (m=1, R=2, sigma=1, n=2) -> 3
        let gf = subsequence_gf(&num(2), 1);
        let s = weighted_partial_sum(&gf, &ri(1), 2);
        assert_eq!(s.value, ri(3));
        assert!(!s.used_fallback);
        // (m=1, R=2, sigma=-1, n=3) -> -4
        let s = weighted_partial_sum(&gf, &ri(-1), 3);
        assert_eq!(s.value, ri(-4));
        // sigma = 0 keeps only u(0)
        let gf = shifted_subsequence_gf(&num(2), 2, 2);
        let s = weighted_partial_sum(&gf, &ri(0), 7);
        assert_eq!(s.value, ri(2));
    }

    #[test]
    fn resonance_falls_back_to_direct_sum() {
        // At R = 2/3 the characteristic root 1 makes b + c + d vanish.
        let params = numq(2, 3);
        let gf = subsequence_gf(&params, 1);
        assert!((gf.b.clone() + gf.c.clone() + gf.d.clone()).is_zero());
        let s = weighted_partial_sum(&gf, &ri(1), 5);
        assert!(s.used_fallback);
        let direct: Rational = gf_series(&gf, 5)
            .into_iter()
            .fold(Rational::zero(), |acc, v| acc + v);
        assert_eq!(s.value, direct);
    }

    #[test]
    fn weighted_sum_matches_brute_force() {
        let sigmas = [
            ri(1),
            ri(-1),
            ri(0),
            Rational::from_ratio(1, 2),
            Rational::from_ratio(-3, 4),
        ];
        for params in [num(2), num(4), numq(3, 2), numq(2, 3)] {
            // include the geometric weights that arise in power sums
            let mut all_sigmas = sigmas.to_vec();
            for jm in 1..=4i64 {
                all_sigmas.push(params.geo_base().pow_int(jm).unwrap());
            }
            for a in [1u32, 2, 3] {
                for b in [0i64, 2, -1] {
                    let gf = shifted_subsequence_gf(&params, a, b);
                    for sigma in &all_sigmas {
                        let mut acc = Rational::zero();
                        let mut weight = Rational::one();
                        for n in 0..=60u64 {
                            if n > 0 {
                                weight = weight.clone() * sigma.clone();
                            }
                            acc = acc + weight.clone() * gf.term(n);
                            let got = weighted_partial_sum(&gf, sigma, n);
                            assert_eq!(
                                got.value, acc,
                                "R={} A={} B={} sigma={} n={}",
                                params.r(), a, b, sigma, n
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_is_index_stable() {
        // S(n) - S(n-1) = sigma^n * u(n)
        for params in [num(2), numq(3, 2)] {
            let gf = shifted_subsequence_gf(&params, 2, 2);
            let sigma = Rational::from_ratio(-1, 2);
            let mut prev = weighted_partial_sum(&gf, &sigma, 0).value;
            for n in 1..=60u64 {
                let cur = weighted_partial_sum(&gf, &sigma, n).value;
                let expected =
                    sigma.pow_int(n as i64).unwrap() * gf.term(n);
                assert_eq!(cur.clone() - prev, expected);
                prev = cur;
            }
        }
    }

    #[test]
    fn recurrence_check_holds() {
        assert!(subsequence_recurrence_check(&num(2), 1, 50));
        assert!(subsequence_recurrence_check(&num(2), 3, 30));
        assert!(subsequence_recurrence_check(&symbolic_params(), 2, 10));
    }

    #[test]
    fn endpoint_variant_agrees() {
        let params = num(2);
        let gf = shifted_subsequence_gf(&params, 3, 2);
        let sigma = Rational::from_ratio(1, 3);
        for n in [0u64, 1, 5, 17] {
            let u_n = gf.term(n);
            let u_n1 = gf.term(n + 1);
            assert_eq!(
                weighted_partial_sum(&gf, &sigma, n),
                weighted_partial_sum_with_endpoints(&gf, &sigma, n, u_n, u_n1)
            );
        }
    }
}
