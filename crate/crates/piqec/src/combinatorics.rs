//! Exact integer combinatorics backing every condition formula.
//!
//! All quantities are arbitrary precision; floating point only appears
//! downstream where irrational coefficients force it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational with the invariants "always in lowest terms" and
/// "denominator positive" (maintained by `num_rational`).
pub type BigRatio = BigRational;

/// Binomial coefficient C(n, k), with C(n, k) = 0 when k < 0 or k > n.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// [`binomial`] rounded into an f64 (exact for every value used here; the
/// largest binomial in play, C(30,15), is well inside the f64 mantissa).
pub fn binomial_f64(n: u64, k: i64) -> f64 {
    binomial(n, k).to_f64().expect("binomial fits in f64")
}

/// Checks C(N,K) - C(N,K-J) = (N-2K+J)/(N+J) * C(N+J,K) in exact rational
/// arithmetic. Holds for J in {1, 2}.
pub fn check_identity_comb(n: u64, k: i64, j: u32) -> bool {
    assert!(j == 1 || j == 2, "identity is stated for J in {{1,2}}");
    let lhs = BigRatio::from(binomial(n, k) - binomial(n, k - j as i64));
    let factor = BigRatio::new(
        BigInt::from(n as i64 - 2 * k + j as i64),
        BigInt::from(n + j as u64),
    );
    let rhs = factor * BigRatio::from(binomial(n + j as u64, k));
    lhs == rhs
}

/// Exact rational -> f64 (used when condition tables are frozen for numeric
/// evaluation).
pub fn ratio_to_f64(r: &BigRatio) -> f64 {
    r.to_f64().expect("ratio fits in f64")
}

/// Decimal rendering of an exact rational with `digits` digits after the
/// decimal point, truncated toward zero. Used when writing code files whose
/// re/im fields are decimal strings.
pub fn ratio_to_decimal(r: &BigRatio, digits: u32) -> String {
    let neg = r.is_negative();
    let abs = r.abs();
    let int = abs.trunc().to_integer();
    let mut frac = abs.fract();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&int.to_string());
    out.push('.');
    let ten = BigInt::from(10);
    for _ in 0..digits {
        frac *= BigRatio::from(ten.clone());
        let d = frac.trunc().to_integer();
        out.push_str(&d.to_string());
        frac = frac.fract();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(9, 4), BigInt::from(126));
        assert_eq!(binomial(7, 2), BigInt::from(21));
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn binomial_symmetry() {
        for n in 0..=30u64 {
            for k in 0..=n as i64 {
                assert_eq!(binomial(n, k), binomial(n, n as i64 - k));
            }
        }
    }

    #[test]
    fn pascal_recurrence() {
        for n in 1..=30u64 {
            for k in 0..=n as i64 {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k) + binomial(n - 1, k - 1),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn comb_identity_examples() {
        assert!(check_identity_comb(7, 2, 2));
        assert!(check_identity_comb(6, 3, 1));
        assert!(check_identity_comb(9, 0, 1));
        // direct substitution at (7,2,2): both sides equal 14
        let lhs = binomial(7, 2) - binomial(7, 0);
        assert_eq!(lhs, BigInt::from(20));
    }

    #[test]
    fn comb_identity_exhaustive() {
        for n in 0..=30u64 {
            for k in 0..=n as i64 {
                for j in [1u32, 2] {
                    assert!(check_identity_comb(n, k, j), "N={n} K={k} J={j}");
                }
            }
        }
    }

    #[test]
    fn ratio_invariants() {
        let r = BigRatio::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn decimal_rendering() {
        let r = BigRatio::new(BigInt::from(-1), BigInt::from(8));
        assert_eq!(ratio_to_decimal(&r, 6), "-0.125000");
        let r = BigRatio::new(BigInt::from(22), BigInt::from(7));
        assert_eq!(ratio_to_decimal(&r, 4), "3.1428");
    }
}
