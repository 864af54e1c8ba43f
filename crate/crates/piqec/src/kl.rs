//! Knill-Laflamme Gram matrices over an error set, the correctability
//! verdict, and the block-structure classification that conditions (I)/(II)
//! force on the symmetrized one-bit error set.
//!
//! For a code {c0, c1} and errors {e_p}, correctability of the set is
//! equivalent to B = 0 and D00 = D11, where d^i_pq = <e_p c_i, e_q c_i> and
//! b_pq = <e_p c_0, e_q c_1>. Entries are computed through the dense oracle;
//! the comparison is entrywise.

use crate::dicke::DickeCode;
use crate::full_space::{Axis, DenseState, ErrorOp};
use crate::{Error, Result, KL_ENTRY_TOL};
use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;

/// Square complex matrix stored row-major.
#[derive(Clone, Debug)]
pub struct Gram(pub Vec<Vec<Complex64>>);

impl Gram {
    fn zeros(m: usize) -> Self {
        Gram(vec![vec![Complex64::zero(); m]; m])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Gram) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .flat_map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| (a - b).norm()))
            .fold(0.0, f64::max)
    }

    fn serialize_rows(&self) -> Vec<Vec<[f64; 2]>> {
        self.0
            .iter()
            .map(|row| row.iter().map(|c| [c.re, c.im]).collect())
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    /// An entry of B exceeds tolerance.
    CrossWord,
    /// An entry of D00 - D11 exceeds tolerance.
    DiagonalMismatch,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub row: usize,
    pub col: usize,
    pub magnitude: f64,
}

/// Gram matrices, verdict, and violation list for one code + error set.
#[derive(Clone, Debug)]
pub struct KlReport {
    pub error_labels: Vec<String>,
    pub d00: Gram,
    pub d11: Gram,
    pub b: Gram,
    pub correctable: bool,
    pub violations: Vec<Violation>,
    pub tol: f64,
}

impl KlReport {
    pub fn max_b(&self) -> f64 {
        self.b.max_abs()
    }

    pub fn max_d_mismatch(&self) -> f64 {
        self.d00.max_abs_diff(&self.d11)
    }

    /// Structured serialization: labels, matrices as [re, im] arrays,
    /// verdict, violations.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "error_labels": self.error_labels,
            "d00": self.d00.serialize_rows(),
            "d11": self.d11.serialize_rows(),
            "b": self.b.serialize_rows(),
            "correctable": self.correctable,
            "tol": self.tol,
            "violations": self.violations,
        })
    }
}

/// Computes the Gram matrices of the code words under the error set and the
/// entrywise correctability verdict at tolerance `tol` (entries measured on
/// unit-normalized code words).
pub fn kl_matrices(code: &DickeCode, errors: &[ErrorOp], tol: f64) -> Result<KlReport> {
    let normalized = code.normalized()?;
    let overlap = normalized.c0.inner(&normalized.c1).norm();
    if overlap > 1e-6 {
        return Err(Error::NonOrthogonalWords(overlap));
    }
    let c0 = DenseState::embed(&normalized.c0)?;
    let c1 = DenseState::embed(&normalized.c1)?;
    let e0: Vec<DenseState> = errors
        .iter()
        .map(|e| e.apply(&c0))
        .collect::<Result<_>>()?;
    let e1: Vec<DenseState> = errors
        .iter()
        .map(|e| e.apply(&c1))
        .collect::<Result<_>>()?;
    let m = errors.len();
    let mut d00 = Gram::zeros(m);
    let mut d11 = Gram::zeros(m);
    let mut b = Gram::zeros(m);
    for p in 0..m {
        for q in 0..m {
            d00.0[p][q] = e0[p].inner(&e0[q]);
            d11.0[p][q] = e1[p].inner(&e1[q]);
            b.0[p][q] = e0[p].inner(&e1[q]);
        }
    }
    let mut violations = Vec::new();
    for p in 0..m {
        for q in 0..m {
            let bm = b.0[p][q].norm();
            if bm > tol {
                violations.push(Violation {
                    kind: ViolationKind::CrossWord,
                    row: p,
                    col: q,
                    magnitude: bm,
                });
            }
            let dm = (d00.0[p][q] - d11.0[p][q]).norm();
            if dm > tol {
                violations.push(Violation {
                    kind: ViolationKind::DiagonalMismatch,
                    row: p,
                    col: q,
                    magnitude: dm,
                });
            }
        }
    }
    Ok(KlReport {
        error_labels: errors.iter().map(|e| e.label.clone()).collect(),
        d00,
        d11,
        b,
        correctable: violations.is_empty(),
        violations,
        tol,
    })
}

pub fn kl_matrices_default(code: &DickeCode, errors: &[ErrorOp]) -> Result<KlReport> {
    kl_matrices(code, errors, KL_ENTRY_TOL)
}

/// The symmetrized one-bit error set
/// {I, avgX, avgY, avgZ, X1-Xk, Y1-Yk, Z1-Zk for k = 2..n}, 3n+1 operators,
/// in that fixed order.
pub fn symmetrized_error_set(n: usize) -> Vec<ErrorOp> {
    let mut ops = vec![
        ErrorOp::identity(),
        ErrorOp::avg_pauli(Axis::X, n),
        ErrorOp::avg_pauli(Axis::Y, n),
        ErrorOp::avg_pauli(Axis::Z, n),
    ];
    for axis in [Axis::X, Axis::Y, Axis::Z] {
        for k in 2..=n {
            ops.push(ErrorOp::pauli_diff(axis, 1, k));
        }
    }
    ops
}

/// Commutation signs of an error against the all-Z and all-X logical
/// operators: e_p (tensor Z) = eps_z (tensor Z) e_p and likewise for X.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignClass {
    pub eps_z: i8,
    pub eps_x: i8,
}

/// Sign classes for [`symmetrized_error_set`], in the same order. Averages
/// and differences of a given axis share the class of that axis.
pub fn symmetrized_sign_classes(n: usize) -> Vec<SignClass> {
    let class = |axis: Option<Axis>| -> SignClass {
        match axis {
            None => SignClass { eps_z: 1, eps_x: 1 },
            Some(Axis::X) => SignClass { eps_z: -1, eps_x: 1 },
            Some(Axis::Y) => SignClass {
                eps_z: -1,
                eps_x: -1,
            },
            Some(Axis::Z) => SignClass { eps_z: 1, eps_x: -1 },
        }
    };
    let mut out = vec![
        class(None),
        class(Some(Axis::X)),
        class(Some(Axis::Y)),
        class(Some(Axis::Z)),
    ];
    for axis in [Axis::X, Axis::Y, Axis::Z] {
        for _ in 2..=n {
            out.push(class(Some(axis)));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BlockRule {
    /// Average-against-difference entries vanish for any permutationally
    /// invariant code (inequivalent-representation orthogonality).
    AverageDifferenceCross,
    /// D-entries between opposite all-Z commutation classes vanish under
    /// conditions (I) and (II).
    OppositeParityD,
    /// B-entries between equal all-Z commutation classes vanish under
    /// conditions (I) and (II).
    EqualParityB,
    /// D00 and D11 agree on equal all-X commutation classes under (I)/(II).
    EqualXClassMatch,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockViolation {
    pub rule: BlockRule,
    pub row: usize,
    pub col: usize,
    pub magnitude: f64,
}

/// Verifies the zero/equality pattern that conditions (I) and (II) force on
/// a report built over [`symmetrized_error_set`], regardless of whether the
/// code is actually correctable. Returns the entries violating the pattern.
///
/// The first four operators are the averaged ones; the rest are differences.
pub fn block_structure_check(
    report: &KlReport,
    classes: &[SignClass],
    tol: f64,
) -> Vec<BlockViolation> {
    let m = report.error_labels.len();
    assert_eq!(classes.len(), m, "one sign class per error");
    let is_avg = |p: usize| p < 4;
    let mut out = Vec::new();
    for p in 0..m {
        for q in 0..m {
            let cross = is_avg(p) != is_avg(q);
            let d_entries = [report.d00.0[p][q], report.d11.0[p][q]];
            if cross {
                for d in d_entries {
                    if d.norm() > tol {
                        out.push(BlockViolation {
                            rule: BlockRule::AverageDifferenceCross,
                            row: p,
                            col: q,
                            magnitude: d.norm(),
                        });
                    }
                }
                if report.b.0[p][q].norm() > tol {
                    out.push(BlockViolation {
                        rule: BlockRule::AverageDifferenceCross,
                        row: p,
                        col: q,
                        magnitude: report.b.0[p][q].norm(),
                    });
                }
                continue;
            }
            if classes[p].eps_z != classes[q].eps_z {
                for d in d_entries {
                    if d.norm() > tol {
                        out.push(BlockViolation {
                            rule: BlockRule::OppositeParityD,
                            row: p,
                            col: q,
                            magnitude: d.norm(),
                        });
                    }
                }
            } else if report.b.0[p][q].norm() > tol {
                out.push(BlockViolation {
                    rule: BlockRule::EqualParityB,
                    row: p,
                    col: q,
                    magnitude: report.b.0[p][q].norm(),
                });
            }
            if classes[p].eps_x == classes[q].eps_x {
                let dm = (report.d00.0[p][q] - report.d11.0[p][q]).norm();
                if dm > tol {
                    out.push(BlockViolation {
                        rule: BlockRule::EqualXClassMatch,
                        row: p,
                        col: q,
                        magnitude: dm,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dicke::DickeCode;

    fn rep5() -> DickeCode {
        DickeCode::from_even_coeffs_f64(5, &[1.0, 0.0, 0.0]).unwrap()
    }

    #[test]
    fn symmetrized_set_sizes() {
        assert_eq!(symmetrized_error_set(5).len(), 16);
        assert_eq!(symmetrized_error_set(7).len(), 22);
        assert_eq!(symmetrized_error_set(9).len(), 28);
        assert_eq!(symmetrized_sign_classes(9).len(), 28);
    }

    #[test]
    fn repetition_code_corrects_bit_flips() {
        let mut errors = vec![ErrorOp::identity()];
        for r in 1..=5 {
            errors.push(ErrorOp::pauli(Axis::X, r));
        }
        let report = kl_matrices_default(&rep5(), &errors).unwrap();
        assert!(report.correctable, "violations: {:?}", report.violations);
    }

    #[test]
    fn repetition_code_fails_with_phase_error_added() {
        let mut errors = vec![ErrorOp::identity()];
        for r in 1..=5 {
            errors.push(ErrorOp::pauli(Axis::X, r));
        }
        errors.push(ErrorOp::pauli(Axis::Z, 1));
        let report = kl_matrices_default(&rep5(), &errors).unwrap();
        assert!(!report.correctable);
        // the failure is a D00 vs D11 mismatch: <c0, Z1 c0> = 1, <c1, Z1 c1> = -1
        assert!(report
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::DiagonalMismatch && v.magnitude > 1.0));
        assert!(report.max_b() < 1e-12);
    }

    #[test]
    fn diagonal_grams_are_hermitian() {
        let code = DickeCode::from_even_coeffs(
            7,
            &[
                num_complex::Complex64::new(0.3, 0.2),
                num_complex::Complex64::new(-0.8, 0.1),
                num_complex::Complex64::new(0.05, -0.6),
                num_complex::Complex64::new(1.0, 0.0),
            ],
        )
        .unwrap();
        let report = kl_matrices_default(&code, &symmetrized_error_set(7)).unwrap();
        for g in [&report.d00, &report.d11] {
            for p in 0..g.dim() {
                for q in 0..g.dim() {
                    assert!((g.0[p][q] - g.0[q][p].conj()).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn report_serializes_with_labels_and_verdict() {
        let errors = vec![ErrorOp::identity(), ErrorOp::pauli(Axis::Z, 1)];
        let report = kl_matrices_default(&rep5(), &errors).unwrap();
        let json = report.to_json();
        assert_eq!(json["error_labels"][1], "Z1");
        assert_eq!(json["correctable"], false);
        assert!(json["d00"][0][0][0].as_f64().unwrap() > 0.9);
        assert!(!json["violations"].as_array().unwrap().is_empty());
    }

    #[test]
    fn raw_one_bit_blocks_are_cyclic() {
        // For any permutationally invariant code the Gram block over
        // {X_1..X_n} has equal diagonal and equal off-diagonal entries.
        let code = DickeCode::from_even_coeffs_f64(5, &[0.4, -1.1, 0.3]).unwrap();
        for axis in [Axis::X, Axis::Y, Axis::Z] {
            let errors: Vec<ErrorOp> = (1..=5).map(|r| ErrorOp::pauli(axis, r)).collect();
            let report = kl_matrices_default(&code, &errors).unwrap();
            for g in [&report.d00, &report.d11] {
                let diag = g.0[0][0];
                let off = g.0[0][1];
                for p in 0..5 {
                    for q in 0..5 {
                        let want = if p == q { diag } else { off };
                        assert!((g.0[p][q] - want).norm() < 1e-10, "axis {axis:?}");
                    }
                }
            }
        }
    }
}
