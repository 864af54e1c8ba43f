//! High-precision polishing of real polynomial roots.
//!
//! Irrational catalog coefficients are defined as roots of explicit
//! rational-coefficient polynomials. They are polished here in exact rational
//! arithmetic (dyadic bisection, so denominators stay powers of two) to a
//! requested number of decimal digits, then rounded to working precision.

use crate::combinatorics::BigRatio;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense univariate polynomial with exact rational coefficients,
/// lowest degree first.
#[derive(Clone, Debug)]
pub struct RatPoly(pub Vec<BigRatio>);

impl RatPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        RatPoly(coeffs.iter().map(|&c| BigRatio::from(BigInt::from(c))).collect())
    }

    pub fn from_ratios(coeffs: &[(i64, i64)]) -> Self {
        RatPoly(
            coeffs
                .iter()
                .map(|&(p, q)| BigRatio::new(BigInt::from(p), BigInt::from(q)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRatio) -> BigRatio {
        let mut acc = BigRatio::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.0.iter().rev() {
            acc = acc * x + c.to_f64().unwrap();
        }
        acc
    }
}

/// Bisect a sign change of `poly` on [lo, hi] down to width 10^-digits.
/// Panics if the bracket does not straddle a sign change.
pub fn polish_root(poly: &RatPoly, lo: f64, hi: f64, digits: u32) -> BigRatio {
    let mut lo = f64_to_ratio(lo);
    let mut hi = f64_to_ratio(hi);
    let flo = poly.eval(&lo);
    let fhi = poly.eval(&hi);
    assert!(
        flo.is_negative() != fhi.is_negative() && !flo.is_zero() && !fhi.is_zero(),
        "bracket must straddle a sign change"
    );
    let sign_lo = flo.is_negative();
    // 10^-digits < 2^-(digits * 10 / 3); a few spare iterations are cheap.
    let iters = digits * 10 / 3 + 8;
    let half = BigRatio::new(BigInt::one(), BigInt::from(2));
    for _ in 0..iters {
        let mid = (&lo + &hi) * &half;
        let fm = poly.eval(&mid);
        if fm.is_zero() {
            return mid;
        }
        if fm.is_negative() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (&lo + &hi) * half
}

/// Square root of a nonnegative rational to the requested precision,
/// via bisection on y^2 - r.
pub fn sqrt_ratio(r: &BigRatio, digits: u32) -> BigRatio {
    assert!(!r.is_negative());
    if r.is_zero() {
        return BigRatio::zero();
    }
    let poly = RatPoly(vec![-r.clone(), BigRatio::zero(), BigRatio::one()]);
    let x = r.to_f64().unwrap();
    let s = x.sqrt();
    // Widen the float bracket enough to absorb rounding.
    let lo = (s * 0.5).min(s - 1.0).max(0.0);
    let hi = s * 2.0 + 1.0;
    polish_root(&poly, lo, hi, digits)
}

fn f64_to_ratio(x: f64) -> BigRatio {
    BigRatio::from_float(x).expect("finite float")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::ratio_to_f64;

    #[test]
    fn polishes_sqrt5() {
        let p = RatPoly::from_i64(&[-5, 0, 1]);
        let r = polish_root(&p, 2.0, 3.0, 50);
        let x = ratio_to_f64(&r);
        assert!((x - 5f64.sqrt()).abs() < 1e-15);
        // residual of the defining polynomial at the polished rational is tiny
        let res = p.eval(&r);
        let resf = res.to_f64().unwrap().abs();
        assert!(resf < 1e-45, "residual {resf}");
    }

    #[test]
    fn sqrt_of_rational() {
        let r = BigRatio::new(BigInt::from(1), BigInt::from(5));
        let s = sqrt_ratio(&r, 50);
        assert!((ratio_to_f64(&s) - 1.0 / 5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn quadratic_catalog_root() {
        // 175 x^2 + 2 x - 1, positive root (-1 + 4 sqrt(11)) / 175
        let p = RatPoly::from_i64(&[-1, 2, 175]);
        let r = polish_root(&p, 0.0, 1.0, 50);
        let x = ratio_to_f64(&r);
        let expect = (-1.0 + 4.0 * 11f64.sqrt()) / 175.0;
        assert!((x - expect).abs() < 1e-15);
        assert!(p.eval_f64(x).abs() < 1e-14);
    }
}
