//! Dense 2^n statevectors and explicit error operators: the ground-truth
//! oracle behind every compressed computation.
//!
//! Basis strings are indexed with bit v_1 most significant, so qubit r
//! (1-based) lives at bit position n - r of the amplitude index. Operators
//! are applied matrix-free by bit twiddling; nothing 2^n x 2^n is ever
//! stored. Summation order is fixed, so residuals are reproducible.

use crate::dicke::{DickeCode, DickeVector};
use crate::{Error, Result, MAX_ORACLE_QUBITS, ZERO_TOL};
use num_complex::Complex64;
use num_traits::Zero;

/// Dense complex amplitude vector over all 2^n basis strings.
#[derive(Clone, Debug)]
pub struct DenseState {
    n: usize,
    amps: Vec<Complex64>,
}

impl DenseState {
    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORACLE_QUBITS {
            return Err(Error::QubitCount(n));
        }
        Ok(DenseState {
            n,
            amps: vec![Complex64::zero(); 1 << n],
        })
    }

    /// Computational basis string given as an amplitude index.
    pub fn basis_string(n: usize, index: usize) -> Result<Self> {
        let mut s = Self::zero(n)?;
        s.amps[index] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    pub fn from_amps(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        if n == 0 || n > MAX_ORACLE_QUBITS {
            return Err(Error::QubitCount(n));
        }
        if amps.len() != 1 << n {
            return Err(Error::CoefficientCount {
                expected: 1 << n,
                got: amps.len(),
            });
        }
        Ok(DenseState { n, amps })
    }

    /// Embeds a weight-basis vector: the amplitude of every string of weight
    /// k is the coefficient of W_k.
    pub fn embed(v: &DickeVector) -> Result<Self> {
        let mut s = Self::zero(v.n())?;
        for (idx, amp) in s.amps.iter_mut().enumerate() {
            *amp = v.coeff(idx.count_ones() as usize);
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn inner(&self, other: &DenseState) -> Complex64 {
        assert_eq!(self.n, other.n);
        let mut acc = Complex64::zero();
        for (a, b) in self.amps.iter().zip(&other.amps) {
            acc += a.conj() * b;
        }
        acc
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).re.sqrt()
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::ZeroWord);
        }
        Ok(self.scaled(Complex64::new(1.0 / n, 0.0)))
    }

    pub fn scaled(&self, s: Complex64) -> Self {
        DenseState {
            n: self.n,
            amps: self.amps.iter().map(|a| a * s).collect(),
        }
    }

    pub fn add(&self, other: &DenseState) -> Self {
        assert_eq!(self.n, other.n);
        DenseState {
            n: self.n,
            amps: self
                .amps
                .iter()
                .zip(&other.amps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &DenseState) -> Self {
        assert_eq!(self.n, other.n);
        DenseState {
            n: self.n,
            amps: self
                .amps
                .iter()
                .zip(&other.amps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &DenseState) -> f64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Hadamard on every qubit.
    pub fn hadamard_all(&self) -> Self {
        let mut amps = self.amps.clone();
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        for bit in 0..self.n {
            let mask = 1usize << bit;
            for i in 0..amps.len() {
                if i & mask == 0 {
                    let a = amps[i];
                    let b = amps[i | mask];
                    amps[i] = (a + b) * inv_sqrt2;
                    amps[i | mask] = (a - b) * inv_sqrt2;
                }
            }
        }
        DenseState { n: self.n, amps }
    }

    /// Extracts weight-basis coefficients, checking that all amplitudes in
    /// each weight class agree (relative to the state norm).
    pub fn to_dicke(&self) -> Result<DickeVector> {
        let n = self.n;
        let scale = self.norm().max(1e-300);
        let mut coeffs = vec![Complex64::zero(); n + 1];
        let mut seen = vec![false; n + 1];
        let mut max_dev: f64 = 0.0;
        for (idx, amp) in self.amps.iter().enumerate() {
            let k = idx.count_ones() as usize;
            if !seen[k] {
                coeffs[k] = *amp;
                seen[k] = true;
            } else {
                max_dev = max_dev.max((amp - coeffs[k]).norm() / scale);
            }
        }
        if max_dev > ZERO_TOL {
            return Err(Error::NotPermutationInvariant(max_dev));
        }
        DickeVector::new(n, coeffs)
    }
}

/// Pauli axis on a single qubit. The Y convention is fixed crate-wide:
/// Y|0> = -i|1>, Y|1> = +i|0>.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub fn letter(self) -> char {
        match self {
            Axis::X => 'X',
            Axis::Y => 'Y',
            Axis::Z => 'Z',
        }
    }
}

/// One matrix-free primitive. Two-qubit pair primitives act on qubits r, s:
/// `Exchange` swaps them; `ExchangeSigned` swaps and negates when the bits
/// differ; `DoubleFlip` flips both when they are equal; `DoubleFlipSigned`
/// additionally negates. A `Word` is a tensor product of single-qubit Paulis.
#[derive(Clone, Debug, PartialEq)]
pub enum Primitive {
    Identity,
    Pauli(Axis, usize),
    Exchange(usize, usize),
    ExchangeSigned(usize, usize),
    DoubleFlip(usize, usize),
    DoubleFlipSigned(usize, usize),
    Word(Vec<(Axis, usize)>),
}

/// A finite complex combination of primitives, with a stable display label.
#[derive(Clone, Debug)]
pub struct ErrorOp {
    pub label: String,
    pub terms: Vec<(Complex64, Primitive)>,
}

impl ErrorOp {
    pub fn identity() -> Self {
        ErrorOp {
            label: "I".into(),
            terms: vec![(Complex64::new(1.0, 0.0), Primitive::Identity)],
        }
    }

    pub fn pauli(axis: Axis, r: usize) -> Self {
        ErrorOp {
            label: format!("{}{}", axis.letter(), r),
            terms: vec![(Complex64::new(1.0, 0.0), Primitive::Pauli(axis, r))],
        }
    }

    /// Tensor product of single-qubit Paulis, e.g. X1 Z3.
    pub fn pauli_word(factors: &[(Axis, usize)]) -> Self {
        let label = if factors.is_empty() {
            "I".to_string()
        } else {
            factors
                .iter()
                .map(|(a, r)| format!("{}{}", a.letter(), r))
                .collect::<Vec<_>>()
                .join(" ")
        };
        ErrorOp {
            label,
            terms: vec![(Complex64::new(1.0, 0.0), Primitive::Word(factors.to_vec()))],
        }
    }

    /// Averaged single-qubit error (1/n) sum_r P_r.
    pub fn avg_pauli(axis: Axis, n: usize) -> Self {
        let w = Complex64::new(1.0 / n as f64, 0.0);
        ErrorOp {
            label: format!("avg{}", axis.letter()),
            terms: (1..=n).map(|r| (w, Primitive::Pauli(axis, r))).collect(),
        }
    }

    /// Averaged same-type double error (1/(n(n-1))) sum_{r != s} P_r P_s.
    pub fn avg_double_pauli(axis: Axis, n: usize) -> Self {
        let w = Complex64::new(1.0 / (n * (n - 1)) as f64, 0.0);
        let mut terms = Vec::new();
        for r in 1..=n {
            for s in 1..=n {
                if r != s {
                    terms.push((w, Primitive::Word(vec![(axis, r), (axis, s)])));
                }
            }
        }
        ErrorOp {
            label: format!("avg{0}{0}", axis.letter()),
            terms,
        }
    }

    /// Difference error P_r - P_s.
    pub fn pauli_diff(axis: Axis, r: usize, s: usize) -> Self {
        let one = Complex64::new(1.0, 0.0);
        ErrorOp {
            label: format!("{0}{1}-{0}{2}", axis.letter(), r, s),
            terms: vec![
                (one, Primitive::Pauli(axis, r)),
                (-one, Primitive::Pauli(axis, s)),
            ],
        }
    }

    pub fn exchange(r: usize, s: usize) -> Self {
        ErrorOp {
            label: format!("E({r},{s})"),
            terms: vec![(Complex64::new(1.0, 0.0), Primitive::Exchange(r, s))],
        }
    }

    pub fn exchange_signed(r: usize, s: usize) -> Self {
        ErrorOp {
            label: format!("F({r},{s})"),
            terms: vec![(Complex64::new(1.0, 0.0), Primitive::ExchangeSigned(r, s))],
        }
    }

    pub fn double_flip(r: usize, s: usize) -> Self {
        ErrorOp {
            label: format!("G({r},{s})"),
            terms: vec![(Complex64::new(1.0, 0.0), Primitive::DoubleFlip(r, s))],
        }
    }

    pub fn double_flip_signed(r: usize, s: usize) -> Self {
        ErrorOp {
            label: format!("H({r},{s})"),
            terms: vec![(Complex64::new(1.0, 0.0), Primitive::DoubleFlipSigned(r, s))],
        }
    }

    /// Fixed complex combination sum_i w_i op_i of existing operators.
    pub fn linear_combination(label: impl Into<String>, parts: &[(Complex64, &ErrorOp)]) -> Self {
        let mut terms = Vec::new();
        for (w, op) in parts {
            for (c, p) in &op.terms {
                terms.push((w * c, p.clone()));
            }
        }
        ErrorOp {
            label: label.into(),
            terms,
        }
    }

    pub fn relabeled(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Applies the operator to a dense state.
    pub fn apply(&self, psi: &DenseState) -> Result<DenseState> {
        let n = psi.n;
        let mut out = DenseState::zero(n)?;
        for (coeff, prim) in &self.terms {
            apply_primitive(prim, psi, *coeff, &mut out)?;
        }
        Ok(out)
    }
}

fn bit_mask(r: usize, n: usize) -> Result<usize> {
    if r == 0 || r > n {
        return Err(Error::QubitIndex { index: r, n });
    }
    Ok(1usize << (n - r))
}

fn apply_primitive(
    prim: &Primitive,
    psi: &DenseState,
    coeff: Complex64,
    out: &mut DenseState,
) -> Result<()> {
    let n = psi.n;
    let dim = psi.amps.len();
    match prim {
        Primitive::Identity => {
            for i in 0..dim {
                out.amps[i] += coeff * psi.amps[i];
            }
        }
        Primitive::Pauli(axis, r) => {
            let mask = bit_mask(*r, n)?;
            match axis {
                Axis::X => {
                    for i in 0..dim {
                        out.amps[i ^ mask] += coeff * psi.amps[i];
                    }
                }
                Axis::Y => {
                    // |0> -> -i|1>, |1> -> +i|0>
                    let mi = Complex64::new(0.0, -1.0);
                    let pi = Complex64::new(0.0, 1.0);
                    for i in 0..dim {
                        let phase = if i & mask == 0 { mi } else { pi };
                        out.amps[i ^ mask] += coeff * phase * psi.amps[i];
                    }
                }
                Axis::Z => {
                    for i in 0..dim {
                        let sign = if i & mask == 0 { 1.0 } else { -1.0 };
                        out.amps[i] += coeff * sign * psi.amps[i];
                    }
                }
            }
        }
        Primitive::Exchange(r, s) => {
            let (mr, ms) = pair_masks(*r, *s, n)?;
            for i in 0..dim {
                out.amps[swap_bits(i, mr, ms)] += coeff * psi.amps[i];
            }
        }
        Primitive::ExchangeSigned(r, s) => {
            let (mr, ms) = pair_masks(*r, *s, n)?;
            for i in 0..dim {
                let differ = ((i & mr) == 0) != ((i & ms) == 0);
                let sign = if differ { -1.0 } else { 1.0 };
                out.amps[swap_bits(i, mr, ms)] += coeff * sign * psi.amps[i];
            }
        }
        Primitive::DoubleFlip(r, s) => {
            let (mr, ms) = pair_masks(*r, *s, n)?;
            for i in 0..dim {
                let same = ((i & mr) == 0) == ((i & ms) == 0);
                let j = if same { i ^ mr ^ ms } else { i };
                out.amps[j] += coeff * psi.amps[i];
            }
        }
        Primitive::DoubleFlipSigned(r, s) => {
            let (mr, ms) = pair_masks(*r, *s, n)?;
            for i in 0..dim {
                let same = ((i & mr) == 0) == ((i & ms) == 0);
                let (j, sign) = if same { (i ^ mr ^ ms, -1.0) } else { (i, 1.0) };
                out.amps[j] += coeff * sign * psi.amps[i];
            }
        }
        Primitive::Word(factors) => {
            for (_, r) in factors {
                bit_mask(*r, n)?;
            }
            for i in 0..dim {
                let mut j = i;
                let mut phase = Complex64::new(1.0, 0.0);
                for (axis, r) in factors {
                    let mask = 1usize << (n - r);
                    match axis {
                        Axis::X => j ^= mask,
                        Axis::Y => {
                            phase *= if j & mask == 0 {
                                Complex64::new(0.0, -1.0)
                            } else {
                                Complex64::new(0.0, 1.0)
                            };
                            j ^= mask;
                        }
                        Axis::Z => {
                            if j & mask != 0 {
                                phase = -phase;
                            }
                        }
                    }
                }
                out.amps[j] += coeff * phase * psi.amps[i];
            }
        }
    }
    Ok(())
}

fn pair_masks(r: usize, s: usize, n: usize) -> Result<(usize, usize)> {
    if r == s {
        return Err(Error::IdenticalQubits(r));
    }
    Ok((bit_mask(r, n)?, bit_mask(s, n)?))
}

fn swap_bits(i: usize, mr: usize, ms: usize) -> usize {
    let br = (i & mr) != 0;
    let bs = (i & ms) != 0;
    if br == bs {
        i
    } else {
        i ^ mr ^ ms
    }
}

/// True iff swapping qubit 1 with every other qubit leaves the state fixed
/// (the transpositions (1 s) generate the full permutation group).
pub fn permutation_invariance_check(psi: &DenseState) -> bool {
    let n = psi.n();
    let scale = psi.norm().max(1e-300);
    for s in 2..=n {
        let swapped = ErrorOp::exchange(1, s).apply(psi).expect("valid indices");
        if swapped.max_abs_diff(psi) / scale > ZERO_TOL {
            return false;
        }
    }
    true
}

/// The involutive map sending a code to H^(x)n c0 +- H^(x)n c1 (normalized),
/// re-expressed in the weight basis. Swaps X-type and Z-type correctability.
/// Fails only if the image is not permutationally invariant, which would
/// indicate an internal bug rather than bad input.
pub fn hadamard_code_map(code: &DickeCode) -> Result<DickeCode> {
    let h0 = DenseState::embed(&code.c0)?.hadamard_all();
    let h1 = DenseState::embed(&code.c1)?.hadamard_all();
    let w0 = h0.add(&h1).normalized()?;
    let w1 = h0.sub(&h1).normalized()?;
    let d0 = w0.to_dicke()?;
    let d1 = w1.to_dicke()?;
    DickeCode::new(d0, d1)
}
