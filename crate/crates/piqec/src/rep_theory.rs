//! Symmetric-group irrep bookkeeping for the weight spaces.
//!
//! Each weight space of the n-qubit Hilbert space decomposes into
//! irreducible subspaces indexed by the two-row partitions [n-j, j], each
//! appearing once, for j = 0..min(k, n-k). Dimensions follow
//! dim = C(n,j) - C(n,j-1) and are always recomputed, never stored. The
//! decomposition doubles as the simultaneous eigenspace structure of the z
//! spin component and the total spin operator, which is what
//! [`spectral_verify`] checks against the dense oracle.

use crate::combinatorics::binomial;
use crate::full_space::{Axis, DenseState, ErrorOp};
use crate::{Error, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use std::fmt;

/// The irrep with partition [n-j, j]; spin label s = (n-2j)/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IrrepLabel {
    pub n: usize,
    pub j: usize,
}

impl IrrepLabel {
    pub fn partition(&self) -> (usize, usize) {
        (self.n - self.j, self.j)
    }

    pub fn dim(&self) -> u64 {
        let d = binomial(self.n as u64, self.j as i64)
            - binomial(self.n as u64, self.j as i64 - 1);
        d.to_u64().expect("dimension fits in u64")
    }

    /// Twice the spin label, n - 2j.
    pub fn spin_twice(&self) -> usize {
        self.n - 2 * self.j
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.partition();
        write!(f, "{}[{},{}]", self.dim(), a, b)
    }
}

/// Irreps appearing in the weight-k space: j = 0..min(k, n-k), each once.
pub fn decompose_weight_space(n: usize, k: usize) -> Vec<IrrepLabel> {
    assert!(k <= n);
    (0..=k.min(n - k)).map(|j| IrrepLabel { n, j }).collect()
}

/// Full table of weight-space decompositions for one n.
#[derive(Clone, Debug)]
pub struct DecompositionTable {
    pub n: usize,
    pub rows: Vec<Vec<IrrepLabel>>,
}

pub fn decomposition_table(n: usize) -> DecompositionTable {
    DecompositionTable {
        n,
        rows: (0..=n).map(|k| decompose_weight_space(n, k)).collect(),
    }
}

impl fmt::Display for DecompositionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            let parts: Vec<String> = row.iter().map(|l| l.to_string()).collect();
            writeln!(f, "W_{k} = {}", parts.join(" + "))?;
        }
        Ok(())
    }
}

/// Multiplicity budget across all weight spaces, plus the one-bit error
/// budget: the averaged operators {I, avgX, avgY, avgZ} need four pairs of
/// trivial-irrep subspaces and the three difference families need three
/// pairs of (n-1)-dimensional ones.
#[derive(Clone, Debug)]
pub struct CountingReport {
    pub n: usize,
    pub multiplicities: Vec<(IrrepLabel, usize)>,
    pub one_bit_trivial_pairs: usize,
    pub one_bit_standard_pairs: usize,
}

pub fn counting_report(n: usize) -> CountingReport {
    let table = decomposition_table(n);
    let mut multiplicities: Vec<(IrrepLabel, usize)> = Vec::new();
    for row in &table.rows {
        for label in row {
            if let Some(slot) = multiplicities.iter_mut().find(|(l, _)| l == label) {
                slot.1 += 1;
            } else {
                multiplicities.push((*label, 1));
            }
        }
    }
    multiplicities.sort_by_key(|(l, _)| l.j);
    CountingReport {
        n,
        multiplicities,
        one_bit_trivial_pairs: 4,
        one_bit_standard_pairs: 3,
    }
}

impl CountingReport {
    pub fn multiplicity_of(&self, j: usize) -> usize {
        self.multiplicities
            .iter()
            .find(|(l, _)| l.j == j)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }
}

impl fmt::Display for CountingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "irrep multiplicities for n = {}:", self.n)?;
        for (label, mult) in &self.multiplicities {
            writeln!(f, "  {label} x{mult}")?;
        }
        writeln!(
            f,
            "one-bit budget: {} pairs of trivial and {} pairs of (n-1)-dim subspaces",
            self.one_bit_trivial_pairs, self.one_bit_standard_pairs
        )
    }
}

/// Dimensions (1, n-1, n(n-3)/2) of the three pieces into which one family
/// of same-type double errors decomposes; they sum to n(n-1)/2.
pub fn double_error_split(n: usize) -> (u64, u64, u64) {
    assert!(n >= 4, "split defined for n >= 4");
    let n = n as u64;
    (1, n - 1, n * (n - 3) / 2)
}

/// Builds the total-spin operator in each weight block via the dense oracle,
/// diagonalizes it, and checks that the eigenvalue multiplicities of s(s+1)
/// reproduce the claimed irrep dimensions with s = (n-2j)/2.
/// Eigenvalue clustering tolerance 1e-8 (gaps between s(s+1) values are
/// at least 2).
pub fn spectral_verify(n: usize) -> Result<bool> {
    if n > 9 {
        return Err(Error::QubitCount(n));
    }
    // S_a = (n/2) avg_a; S^2 = Sx^2 + Sy^2 + Sz^2
    let sx = ErrorOp::avg_pauli(Axis::X, n);
    let sy = ErrorOp::avg_pauli(Axis::Y, n);
    let sz = ErrorOp::avg_pauli(Axis::Z, n);
    let quarter_n2 = Complex64::new((n * n) as f64 / 4.0, 0.0);
    let apply_s2 = |psi: &DenseState| -> Result<DenseState> {
        let mut acc = DenseState::zero(n)?;
        for op in [&sx, &sy, &sz] {
            let twice = op.apply(&op.apply(psi)?)?;
            acc = acc.add(&twice.scaled(quarter_n2));
        }
        Ok(acc)
    };

    for k in 0..=n {
        let block: Vec<usize> = (0..1usize << n)
            .filter(|i| i.count_ones() as usize == k)
            .collect();
        let dim = block.len();
        let mut mat = DMatrix::<f64>::zeros(dim, dim);
        for (col, &idx) in block.iter().enumerate() {
            let e = DenseState::basis_string(n, idx)?;
            let out = apply_s2(&e)?;
            for (row, &jdx) in block.iter().enumerate() {
                let v = out.amps()[jdx];
                debug_assert!(v.im.abs() < 1e-12);
                mat[(row, col)] = v.re;
            }
        }
        let eigs = mat.symmetric_eigenvalues();
        let expected = decompose_weight_space(n, k);
        let mut counted = 0usize;
        for label in &expected {
            let s = label.spin_twice() as f64 / 2.0;
            let target = s * (s + 1.0);
            let mult = eigs.iter().filter(|&&e| (e - target).abs() < 1e-8).count();
            if mult as u64 != label.dim() {
                return Ok(false);
            }
            counted += mult;
        }
        if counted != dim {
            return Ok(false);
        }
    }
    Ok(true)
}
