//! Weight-basis (Dicke) representation of permutationally invariant states
//! and the exact action of averaged and difference error operators on them.
//!
//! A vector is stored against the unnormalized weight vectors `W_k` (squared
//! norm C(n,k)); keeping the basis unnormalized keeps every condition
//! polynomial integer-coefficient. Normalization is a separate, explicit
//! operation.
//!
//! Convention for the Y axis throughout the crate: Y maps |0> to -i|1> and
//! |1> to +i|0>. Correctability verdicts are invariant under the opposite
//! phase choice; individual matrix elements are not, so the choice is fixed
//! once here and mirrored by the dense oracle.

use crate::combinatorics::{binomial, binomial_f64, BigRatio};
use crate::{Error, Result, ZERO_TOL};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

/// Permutationally invariant state: coefficient k multiplies the
/// unnormalized weight vector W_k.
#[derive(Clone, Debug, PartialEq)]
pub struct DickeVector {
    n: usize,
    coeffs: Vec<Complex64>,
}

impl DickeVector {
    pub fn new(n: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != n + 1 {
            return Err(Error::CoefficientCount {
                expected: n + 1,
                got: coeffs.len(),
            });
        }
        Ok(DickeVector { n, coeffs })
    }

    pub fn zero(n: usize) -> Self {
        DickeVector {
            n,
            coeffs: vec![Complex64::zero(); n + 1],
        }
    }

    /// The single weight vector W_k.
    pub fn basis(n: usize, k: usize) -> Self {
        let mut v = Self::zero(n);
        v.coeffs[k] = Complex64::new(1.0, 0.0);
        v
    }

    /// Builds a vector supported on even weights from coefficients for
    /// k = 0, 2, 4, ...
    pub fn from_even(n: usize, even: &[Complex64]) -> Result<Self> {
        let expected = n / 2 + 1;
        if even.len() != expected {
            return Err(Error::CoefficientCount {
                expected,
                got: even.len(),
            });
        }
        let mut v = Self::zero(n);
        for (m, &c) in even.iter().enumerate() {
            v.coeffs[2 * m] = c;
        }
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs[k]
    }

    /// <self, other> = sum_k conj(a_k) b_k C(n,k), antilinear in self.
    pub fn inner(&self, other: &DickeVector) -> Complex64 {
        assert_eq!(self.n, other.n);
        let mut acc = Complex64::zero();
        for k in 0..=self.n {
            acc += self.coeffs[k].conj() * other.coeffs[k] * binomial_f64(self.n as u64, k as i64);
        }
        acc
    }

    pub fn norm_sqr(&self) -> f64 {
        self.inner(self).re
    }

    pub fn normalized(&self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2 <= 0.0 {
            return Err(Error::ZeroWord);
        }
        Ok(self.scaled(Complex64::new(1.0 / n2.sqrt(), 0.0)))
    }

    pub fn scaled(&self, s: Complex64) -> Self {
        DickeVector {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &DickeVector) -> Self {
        assert_eq!(self.n, other.n);
        DickeVector {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Coefficient-wise mirror k -> n-k (the action of flipping every bit).
    pub fn bit_reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        DickeVector { n: self.n, coeffs }
    }

    pub fn is_even(&self, tol: f64) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| k % 2 == 0 || c.norm() <= tol)
    }

    pub fn is_odd(&self, tol: f64) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| k % 2 == 1 || c.norm() <= tol)
    }

    /// Averaged Z error: W_k is an eigenvector with eigenvalue (n-2k)/n.
    pub fn apply_avg_z(&self) -> Self {
        let n = self.n as f64;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * ((n - 2.0 * k as f64) / n))
            .collect();
        DickeVector { n: self.n, coeffs }
    }

    /// Averaged X error: n Xavg W_k = (k+1) W_{k+1} + (n-k+1) W_{k-1},
    /// out-of-range weight vectors dropped.
    pub fn apply_avg_x(&self) -> Self {
        let n = self.n;
        let nf = n as f64;
        let mut out = Self::zero(n);
        for m in 0..=n {
            let from_below = if m >= 1 {
                self.coeffs[m - 1] * (m as f64)
            } else {
                Complex64::zero()
            };
            let from_above = if m + 1 <= n {
                self.coeffs[m + 1] * ((n - m) as f64)
            } else {
                Complex64::zero()
            };
            out.coeffs[m] = (from_below + from_above) / nf;
        }
        out
    }

    /// Averaged Y error: i n Yavg W_k = (k+1) W_{k+1} - (n-k+1) W_{k-1}.
    pub fn apply_avg_y(&self) -> Self {
        let n = self.n;
        let nf = n as f64;
        let mut out = Self::zero(n);
        let minus_i = Complex64::new(0.0, -1.0);
        for m in 0..=n {
            let from_below = if m >= 1 {
                self.coeffs[m - 1] * (m as f64)
            } else {
                Complex64::zero()
            };
            let from_above = if m + 1 <= n {
                self.coeffs[m + 1] * ((n - m) as f64)
            } else {
                Complex64::zero()
            };
            out.coeffs[m] = minus_i * (from_below - from_above) / nf;
        }
        out
    }

    /// Averaged double-Z error: W_k is an eigenvector with eigenvalue
    /// ((n-2k)^2 - n) / (n(n-1)).
    pub fn apply_avg_zz(&self) -> Self {
        assert!(self.n >= 2);
        let n = self.n as f64;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let d = n - 2.0 * k as f64;
                c * ((d * d - n) / (n * (n - 1.0)))
            })
            .collect();
        DickeVector { n: self.n, coeffs }
    }

    /// Action of a difference operator on this vector, expanded over the
    /// antisymmetrized vectors V_k(r,s).
    pub fn difference_action(
        &self,
        which: DifferenceKind,
        r: usize,
        s: usize,
    ) -> Result<VExpansion> {
        if r == s {
            return Err(Error::IdenticalQubits(r));
        }
        check_qubit(r, self.n)?;
        check_qubit(s, self.n)?;
        let n = self.n;
        let c = |k: usize| -> Complex64 {
            if k <= n {
                self.coeffs[k]
            } else {
                Complex64::zero()
            }
        };
        let mut coeffs = vec![Complex64::zero(); n.max(1) - 1];
        for (m, slot) in coeffs.iter_mut().enumerate() {
            *slot = match which {
                // (Z_r - Z_s) W_k = -2 V_{k-1}(r,s) for 1 <= k <= n-1, else 0
                DifferenceKind::Z => -2.0 * c(m + 1),
                // (X_r - X_s) W_k = V_k - V_{k-2}
                DifferenceKind::X => c(m) - c(m + 2),
                // i (Y_r - Y_s) W_k = V_k + V_{k-2}
                DifferenceKind::IY => c(m) + c(m + 2),
                // (X_r - X_s) + i (Y_r - Y_s)
                DifferenceKind::XPlusIY => 2.0 * c(m),
                // (X_r - X_s) - i (Y_r - Y_s)
                DifferenceKind::XMinusIY => -2.0 * c(m + 2),
            };
        }
        Ok(VExpansion { n, r, s, coeffs })
    }
}

fn check_qubit(r: usize, n: usize) -> Result<()> {
    if r == 0 || r > n {
        Err(Error::QubitIndex { index: r, n })
    } else {
        Ok(())
    }
}

/// Which difference operator [`DickeVector::difference_action`] applies.
/// `IY` is i(Y_r - Y_s); the plus/minus variants are (X_r - X_s) +- i(Y_r - Y_s).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DifferenceKind {
    Z,
    X,
    IY,
    XPlusIY,
    XMinusIY,
}

/// Expansion over the vectors V_k(r,s) = sum_{wt(v)=k, r,s not in v}
/// (|v + e_r> - |v + e_s>), defined for k = 0..n-2.
#[derive(Clone, Debug)]
pub struct VExpansion {
    n: usize,
    r: usize,
    s: usize,
    coeffs: Vec<Complex64>,
}

impl VExpansion {
    pub fn new(n: usize, r: usize, s: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if r == s {
            return Err(Error::IdenticalQubits(r));
        }
        check_qubit(r, n)?;
        check_qubit(s, n)?;
        if coeffs.len() != n - 1 {
            return Err(Error::CoefficientCount {
                expected: n - 1,
                got: coeffs.len(),
            });
        }
        Ok(VExpansion { n, r, s, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn pair(&self) -> (usize, usize) {
        (self.r, self.s)
    }
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.norm() <= tol)
    }
}

/// Overlap factor between V_k(r1,s1) and V_k(q,t) relative to C(n-2,k):
/// +2 for identical pairs, -2 for reversed pairs, +1 / -1 for a single shared
/// index depending on position, 0 for disjoint pairs.
fn pair_overlap_factor(r1: usize, s1: usize, r2: usize, s2: usize) -> f64 {
    if (r1, s1) == (r2, s2) {
        2.0
    } else if (r1, s1) == (s2, r2) {
        -2.0
    } else if r1 == r2 || s1 == s2 {
        1.0
    } else if r1 == s2 || s1 == r2 {
        -1.0
    } else {
        0.0
    }
}

/// Exact inner product of two V-expansions, using
/// <V_k(r,s), V_k(r,s)> = 2 C(n-2,k), <V_k(r,s), V_k(r,t)> = C(n-2,k) for
/// distinct r,s,t, orthogonality across different k, and antisymmetry in the
/// index pair; disjoint pairs vanish by transposition symmetry.
pub fn v_inner_product(e1: &VExpansion, e2: &VExpansion) -> Result<Complex64> {
    if e1.n != e2.n {
        return Err(Error::QubitCountMismatch(e1.n, e2.n));
    }
    let factor = pair_overlap_factor(e1.r, e1.s, e2.r, e2.s);
    if factor == 0.0 {
        return Ok(Complex64::zero());
    }
    let mut acc = Complex64::zero();
    for k in 0..e1.coeffs.len() {
        acc += e1.coeffs[k].conj()
            * e2.coeffs[k]
            * (factor * binomial_f64(e1.n as u64 - 2, k as i64));
    }
    Ok(acc)
}

/// <Z_1 V_k(1,s), V_k(1,t)> = (2k+2-n)/(n-2) * C(n-2,k) for s != t, as an
/// exact rational.
pub fn z1_weighted_inner(k: usize, n: usize) -> BigRatio {
    assert!((1..=n - 2).contains(&k), "defined for 1 <= k <= n-2");
    let factor = BigRatio::new(
        BigInt::from(2 * k as i64 + 2 - n as i64),
        BigInt::from(n as i64 - 2),
    );
    factor * BigRatio::from(binomial(n as u64 - 2, k as i64))
}

/// A two-dimensional permutationally invariant code: a pair of orthogonal
/// weight-basis words with structural flags.
///
/// `satisfies_i`: c1 is the bit-flip mirror of c0 (coefficients reversed).
/// `satisfies_ii`: c0 is supported on even weights and c1 on odd weights.
#[derive(Clone, Debug)]
pub struct DickeCode {
    pub n: usize,
    pub c0: DickeVector,
    pub c1: DickeVector,
    pub satisfies_i: bool,
    pub satisfies_ii: bool,
}

impl DickeCode {
    /// General constructor; detects the structural flags and enforces word
    /// orthogonality relative to the word norms.
    pub fn new(c0: DickeVector, c1: DickeVector) -> Result<Self> {
        if c0.n() != c1.n() {
            return Err(Error::QubitCountMismatch(c0.n(), c1.n()));
        }
        let n = c0.n();
        let n0 = c0.norm_sqr().sqrt();
        let n1 = c1.norm_sqr().sqrt();
        if n0 == 0.0 || n1 == 0.0 {
            return Err(Error::ZeroWord);
        }
        let overlap = c0.inner(&c1).norm() / (n0 * n1);
        if overlap > 1e-6 {
            return Err(Error::NonOrthogonalWords(overlap));
        }
        let mirror = c0.bit_reversed();
        let scale = n0.max(n1);
        let satisfies_i = mirror
            .coeffs
            .iter()
            .zip(&c1.coeffs)
            .all(|(m, c)| (m - c).norm() <= ZERO_TOL * scale);
        let satisfies_ii = c0.is_even(ZERO_TOL * n0) && c1.is_odd(ZERO_TOL * n1);
        Ok(DickeCode {
            n,
            c0,
            c1,
            satisfies_i,
            satisfies_ii,
        })
    }

    /// Builds the code with both structural conditions from the even-weight
    /// coefficients (a_0, a_2, ..., a_{n-1}) of c0; c1 is the mirrored word.
    /// Requires odd n.
    pub fn from_even_coeffs(n: usize, even: &[Complex64]) -> Result<Self> {
        if n % 2 == 0 {
            return Err(Error::EvenQubitCount(n));
        }
        let c0 = DickeVector::from_even(n, even)?;
        let c1 = c0.bit_reversed();
        let code = DickeCode {
            n,
            c0,
            c1,
            satisfies_i: true,
            satisfies_ii: true,
        };
        Ok(code)
    }

    pub fn from_even_coeffs_f64(n: usize, even: &[f64]) -> Result<Self> {
        let even: Vec<Complex64> = even.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_even_coeffs(n, &even)
    }

    /// Both words normalized to unit norm.
    pub fn normalized(&self) -> Result<Self> {
        Ok(DickeCode {
            n: self.n,
            c0: self.c0.normalized()?,
            c1: self.c1.normalized()?,
            satisfies_i: self.satisfies_i,
            satisfies_ii: self.satisfies_ii,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn avg_z_eigenvalues() {
        let w0 = DickeVector::basis(9, 0);
        assert_abs_diff_eq!(w0.apply_avg_z().coeff(0).re, 1.0, epsilon = 1e-15);
        let w2 = DickeVector::basis(5, 2);
        assert_abs_diff_eq!(w2.apply_avg_z().coeff(2).re, 0.2, epsilon = 1e-15);
        let w7 = DickeVector::basis(7, 7);
        assert_abs_diff_eq!(w7.apply_avg_z().coeff(7).re, -1.0, epsilon = 1e-15);
    }

    #[test]
    fn avg_x_y_on_w0() {
        let w0 = DickeVector::basis(5, 0);
        let x = w0.apply_avg_x();
        assert_abs_diff_eq!(x.coeff(1).re, 0.2, epsilon = 1e-15);
        assert!(x.coeff(0).norm() < 1e-15);
        let y = w0.apply_avg_y();
        assert_abs_diff_eq!(y.coeff(1).im, -0.2, epsilon = 1e-15);
        // linearity: zero maps to zero
        let z = DickeVector::zero(7).apply_avg_x();
        assert!(z.coeffs().iter().all(|c| c.norm() == 0.0));
    }

    #[test]
    fn avg_zz_eigenvalues() {
        let f = |n: usize, k: usize| -> f64 {
            DickeVector::basis(n, k).apply_avg_zz().coeff(k).re
        };
        assert_abs_diff_eq!(f(9, 0), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(f(5, 2), -0.2, epsilon = 1e-15);
        assert_abs_diff_eq!(f(7, 4), -1.0 / 7.0, epsilon = 1e-15);
    }

    #[test]
    fn avg_zz_consistent_with_avg_z() {
        // n(n-1) * zz-eigenvalue = (n * z-eigenvalue)^2 - n for each k
        for n in [3usize, 5, 7, 9] {
            for k in 0..=n {
                let z = DickeVector::basis(n, k).apply_avg_z().coeff(k).re;
                let zz = DickeVector::basis(n, k).apply_avg_zz().coeff(k).re;
                let lhs = (n * (n - 1)) as f64 * zz;
                let rhs = (n as f64 * z).powi(2) - n as f64;
                assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn difference_action_examples() {
        // Z on W_0 vanishes
        let w0 = DickeVector::basis(5, 0);
        let e = w0.difference_action(DifferenceKind::Z, 1, 2).unwrap();
        assert!(e.is_zero(0.0));
        // X on W_0 is V_0(r,s)
        let e = w0.difference_action(DifferenceKind::X, 1, 2).unwrap();
        assert_abs_diff_eq!(e.coeffs()[0].re, 1.0, epsilon = 1e-15);
        assert!(e.coeffs()[1..].iter().all(|c| c.norm() == 0.0));
        // (X + iY) on an even-support word doubles the even coefficients
        let code = DickeCode::from_even_coeffs(5, &[c(0.3, 0.0), c(-0.7, 0.0), c(0.2, 0.0)])
            .unwrap();
        let e = code
            .c0
            .difference_action(DifferenceKind::XPlusIY, 2, 5)
            .unwrap();
        assert_abs_diff_eq!(e.coeffs()[0].re, 0.6, epsilon = 1e-15);
        assert_abs_diff_eq!(e.coeffs()[2].re, -1.4, epsilon = 1e-15);
        assert!(e.coeffs()[1].norm() < 1e-15 && e.coeffs()[3].norm() < 1e-15);
    }

    #[test]
    fn difference_rejects_equal_indices() {
        let w = DickeVector::basis(5, 1);
        assert!(w.difference_action(DifferenceKind::Z, 3, 3).is_err());
    }

    #[test]
    fn v_inner_product_examples() {
        let n = 7;
        let unit = |k: usize, r, s| {
            let mut coeffs = vec![Complex64::zero(); n - 1];
            coeffs[k] = c(1.0, 0.0);
            VExpansion::new(n, r, s, coeffs).unwrap()
        };
        // <V_2(1,2), V_2(1,2)> = 2 C(5,2) = 20
        let v = v_inner_product(&unit(2, 1, 2), &unit(2, 1, 2)).unwrap();
        assert_abs_diff_eq!(v.re, 20.0, epsilon = 1e-12);
        // different k are orthogonal
        let v = v_inner_product(&unit(2, 1, 2), &unit(3, 1, 2)).unwrap();
        assert!(v.norm() < 1e-15);
        // shared first index at n = 5: C(3,1) = 3
        let n5 = |k: usize, r, s| {
            let mut coeffs = vec![Complex64::zero(); 4];
            coeffs[k] = c(1.0, 0.0);
            VExpansion::new(5, r, s, coeffs).unwrap()
        };
        let v = v_inner_product(&n5(1, 1, 2), &n5(1, 1, 3)).unwrap();
        assert_abs_diff_eq!(v.re, 3.0, epsilon = 1e-12);
        // disjoint pairs vanish
        let v = v_inner_product(&n5(1, 1, 2), &n5(1, 3, 4)).unwrap();
        assert!(v.norm() == 0.0);
    }

    #[test]
    fn z1_weighted_inner_examples() {
        use num_traits::ToPrimitive;
        assert_eq!(z1_weighted_inner(2, 6).to_f64().unwrap(), 0.0);
        assert_eq!(z1_weighted_inner(3, 9).to_f64().unwrap(), -5.0);
        assert_eq!(z1_weighted_inner(1, 5).to_f64().unwrap(), -1.0);
    }

    #[test]
    fn code_flags() {
        let code =
            DickeCode::from_even_coeffs(5, &[c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!(code.satisfies_i && code.satisfies_ii);
        assert_abs_diff_eq!(code.c0.inner(&code.c1).norm(), 0.0, epsilon = 1e-15);
        // c1 mirrors c0: coefficient of W_1 is a_4
        assert_abs_diff_eq!(code.c1.coeff(1).re, 1.0, epsilon = 1e-15);

        // a code violating the parity condition is detected
        let mut c0 = DickeVector::zero(3);
        c0.coeffs[0] = c(1.0, 0.0);
        c0.coeffs[1] = c(1.0, 0.0);
        let mut c1 = DickeVector::zero(3);
        c1.coeffs[2] = c(1.0, 0.0);
        let code = DickeCode::new(c0, c1).unwrap();
        assert!(!code.satisfies_ii);
        assert!(!code.satisfies_i);
    }

    #[test]
    fn error_paths() {
        // V-expansion inner products require matching qubit counts
        let e5 = VExpansion::new(5, 1, 2, vec![Complex64::zero(); 4]).unwrap();
        let e7 = VExpansion::new(7, 1, 2, vec![Complex64::zero(); 6]).unwrap();
        assert!(v_inner_product(&e5, &e7).is_err());
        assert!(VExpansion::new(5, 2, 2, vec![Complex64::zero(); 4]).is_err());
        assert!(VExpansion::new(5, 1, 6, vec![Complex64::zero(); 4]).is_err());
        // code construction rejects wrong lengths, non-orthogonal pairs,
        // zero words, and even n for the structured form
        assert!(DickeVector::new(5, vec![Complex64::zero(); 5]).is_err());
        assert!(DickeCode::from_even_coeffs(4, &[c(1.0, 0.0); 3]).is_err());
        let w0 = DickeVector::basis(3, 0);
        assert!(DickeCode::new(w0.clone(), w0.clone()).is_err());
        assert!(DickeCode::new(w0.clone(), DickeVector::zero(3)).is_err());
    }

    #[test]
    fn norm_uses_weight_multiplicities() {
        let v = DickeVector::basis(5, 2);
        assert_abs_diff_eq!(v.norm_sqr(), 10.0, epsilon = 1e-12);
    }
}
