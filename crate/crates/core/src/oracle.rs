//! Dense `2^n` brute-force simulator: the ground truth every compressed
//! result is checked against.
//!
//! Basis ordering puts qubit 1 in the most significant bit, so the
//! single-excitation state `|chi_k>` (one unit at position `k`) has index
//! `2^(n-k)` and reads exactly as the printed bit pattern. Gate
//! application is matrix-free (stride-based); full `2^n x 2^n` matrices
//! are only built where commutator norms need them.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::chains::ChainSpec;
use crate::clifford::{j_diagonal, Pauli, PauliString, DENSE_OPERATOR_CAP};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::simulate::{Circuit, FockBasisState};
use crate::tol;

/// Dense states allow a few more qubits than dense operators.
pub const DENSE_STATE_CAP: usize = 20;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// A `2^n` state vector over the qubit chain.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseState {
    n: usize,
    amplitudes: Vec<Complex64>,
}

impl DenseState {
    fn check_capacity(n: usize) -> Result<()> {
        if n == 0 || n > DENSE_STATE_CAP {
            return Err(Error::CapacityExceeded {
                n,
                max: DENSE_STATE_CAP,
            });
        }
        Ok(())
    }

    /// `|0...0>`.
    pub fn vacuum(n: usize) -> Result<Self> {
        Self::check_capacity(n)?;
        let mut amplitudes = vec![c(0.0, 0.0); 1 << n];
        amplitudes[0] = c(1.0, 0.0);
        Ok(Self { n, amplitudes })
    }

    /// `|chi_k>`: a single unit at 1-based position `k`.
    pub fn single_excitation(n: usize, k: usize) -> Result<Self> {
        Self::check_capacity(n)?;
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange {
                context: "DenseState::single_excitation",
                index: k,
                bound: n,
            });
        }
        let mut amplitudes = vec![c(0.0, 0.0); 1 << n];
        amplitudes[1 << (n - k)] = c(1.0, 0.0);
        Ok(Self { n, amplitudes })
    }

    /// `|chi_K>` for a sorted occupation list; the creation-operator product
    /// over increasing indices gives this basis state with a plus sign.
    pub fn fock(n: usize, k: &FockBasisState) -> Result<Self> {
        Self::check_capacity(n)?;
        if k.max_index() > n {
            return Err(Error::IndexOutOfRange {
                context: "DenseState::fock",
                index: k.max_index(),
                bound: n,
            });
        }
        let mut index = 0usize;
        for &site in k.occupied() {
            index |= 1 << (n - site);
        }
        let mut amplitudes = vec![c(0.0, 0.0); 1 << n];
        amplitudes[index] = c(1.0, 0.0);
        Ok(Self { n, amplitudes })
    }

    pub fn from_amplitudes(n: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        Self::check_capacity(n)?;
        if amplitudes.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                context: "DenseState::from_amplitudes",
                expected: 1 << n,
                actual: amplitudes.len(),
            });
        }
        let state = Self { n, amplitudes };
        let norm = state.norm();
        if (norm - 1.0).abs() > tol::POSTCONDITION {
            return Err(Error::NotUnitary {
                deviation: (norm - 1.0).abs(),
            });
        }
        Ok(state)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn inner(&self, other: &DenseState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Apply a two-qubit gate to the ordered pair `(qa, qb)` of distinct
    /// 1-based qubits; the 4×4 matrix acts on the basis `|q_a q_b>`.
    fn apply_two_qubit(&mut self, g: &ComplexMatrix, qa: usize, qb: usize) {
        let n = self.n;
        let pa = n - qa;
        let pb = n - qb;
        let (ma, mb) = (1usize << pa, 1usize << pb);
        let dim = 1usize << n;
        let mut i = 0usize;
        while i < dim {
            if i & ma == 0 && i & mb == 0 {
                let idx = [i, i | mb, i | ma, i | ma | mb];
                let v = [
                    self.amplitudes[idx[0]],
                    self.amplitudes[idx[1]],
                    self.amplitudes[idx[2]],
                    self.amplitudes[idx[3]],
                ];
                for row in 0..4 {
                    let mut acc = c(0.0, 0.0);
                    for col in 0..4 {
                        acc += g.get(row, col) * v[col];
                    }
                    self.amplitudes[idx[row]] = acc;
                }
            }
            i += 1;
        }
    }

    /// Apply a 4×4 gate to the nearest-neighbor pair `(k, k+1)`, `k` 1-based.
    pub fn apply_gate(&mut self, g: &ComplexMatrix, k: usize) -> Result<()> {
        if g.rows() != 4 || g.cols() != 4 {
            return Err(Error::Shape {
                context: "DenseState::apply_gate",
                rows: g.rows(),
                cols: g.cols(),
            });
        }
        if k == 0 || k >= self.n {
            return Err(Error::IndexOutOfRange {
                context: "DenseState::apply_gate",
                index: k,
                bound: self.n - 1,
            });
        }
        self.apply_two_qubit(g, k, k + 1);
        Ok(())
    }

    /// Apply a 4×4 gate to the wrap pair `(n, 1)`. Intended for ring
    /// experiments only; linear-chain circuits never touch this pair.
    pub fn apply_gate_wrapping(&mut self, g: &ComplexMatrix) -> Result<()> {
        if g.rows() != 4 || g.cols() != 4 {
            return Err(Error::Shape {
                context: "DenseState::apply_gate_wrapping",
                rows: g.rows(),
                cols: g.cols(),
            });
        }
        if self.n < 2 {
            return Err(Error::IndexOutOfRange {
                context: "DenseState::apply_gate_wrapping",
                index: self.n,
                bound: 2,
            });
        }
        self.apply_two_qubit(g, self.n, 1);
        Ok(())
    }

    /// Apply every layer of a circuit in order.
    pub fn apply_circuit(&mut self, circuit: &Circuit) -> Result<()> {
        if circuit.n() != self.n {
            return Err(Error::DimensionMismatch {
                context: "DenseState::apply_circuit",
                expected: self.n,
                actual: circuit.n(),
            });
        }
        for layer in circuit.layers() {
            for (k, gate) in layer {
                self.apply_gate(gate, *k)?;
            }
        }
        Ok(())
    }

    /// Evolve by a dense unitary (matrix-vector product).
    pub fn evolve(&mut self, u: &ComplexMatrix) -> Result<()> {
        let out = u.matvec(&self.amplitudes)?;
        self.amplitudes = out;
        Ok(())
    }
}

/// `<psi| (I - Z_k)/2 |psi>`: the occupation probability of node `k`.
pub fn number_expectation(state: &DenseState, k: usize) -> Result<f64> {
    let n = state.n();
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange {
            context: "number_expectation",
            index: k,
            bound: n,
        });
    }
    let mask = 1usize << (n - k);
    Ok(state
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(b, _)| b & mask != 0)
        .map(|(_, z)| z.norm_sqr())
        .sum())
}

/// Occupation probabilities of all nodes.
pub fn number_expectations(state: &DenseState) -> Vec<f64> {
    (1..=state.n())
        .map(|k| number_expectation(state, k).unwrap())
        .collect()
}

fn check_operator_capacity(n: usize) -> Result<()> {
    if n == 0 || n > DENSE_OPERATOR_CAP {
        return Err(Error::CapacityExceeded {
            n,
            max: DENSE_OPERATOR_CAP,
        });
    }
    Ok(())
}

/// Pauli-term expansion of the chain Hamiltonian
/// `sum_k alpha_k/2 (X_k X_k' + Y_k Y_k') + beta_k/2 (Y_k X_k' - X_k Y_k')
///  + sum_k delta_k Z_k`, with `k'` the link partner of `k`.
pub fn chain_pauli_terms(spec: &ChainSpec) -> Vec<(f64, PauliString)> {
    let n = spec.n();
    let two_site = |a: usize, b: usize, la: Pauli, lb: Pauli| {
        let mut letters = vec![Pauli::I; n];
        letters[a] = la;
        letters[b] = lb;
        PauliString::new(0, letters)
    };
    let mut terms = Vec::new();
    for (idx, (a, b)) in spec.links().into_iter().enumerate() {
        let alpha = spec.alpha()[idx];
        let beta = spec.beta()[idx];
        if alpha != 0.0 {
            terms.push((alpha / 2.0, two_site(a, b, Pauli::X, Pauli::X)));
            terms.push((alpha / 2.0, two_site(a, b, Pauli::Y, Pauli::Y)));
        }
        if beta != 0.0 {
            terms.push((beta / 2.0, two_site(a, b, Pauli::Y, Pauli::X)));
            terms.push((-beta / 2.0, two_site(a, b, Pauli::X, Pauli::Y)));
        }
    }
    for (j, &delta) in spec.delta().iter().enumerate() {
        if delta != 0.0 {
            terms.push((delta, PauliString::single(n, j + 1, Pauli::Z).unwrap()));
        }
    }
    terms
}

/// Matrix-free sparse action of a Pauli-term sum on `2^n` amplitudes.
/// Every Pauli string is a signed permutation, so the whole Hamiltonian
/// has at most `terms * 2^n` entries.
struct SparsePauliSum {
    dim: usize,
    entries: Vec<(u32, u32, Complex64)>,
}

impl SparsePauliSum {
    fn build(terms: &[(f64, PauliString)], n: usize) -> Self {
        let dim = 1usize << n;
        let mut entries = Vec::with_capacity(terms.len() * dim);
        for (coeff, string) in terms {
            for col in 0..dim {
                let (amp, row) = string.map_basis(col);
                entries.push((row as u32, col as u32, amp * *coeff));
            }
        }
        Self { dim, entries }
    }

    fn apply(&self, v: &[Complex64], out: &mut [Complex64]) {
        out.fill(c(0.0, 0.0));
        for &(row, col, amp) in &self.entries {
            out[row as usize] += amp * v[col as usize];
        }
    }

    /// One-norm bound `sum |coeff|` of the term list it was built from.
    fn coefficient_budget(terms: &[(f64, PauliString)]) -> f64 {
        terms.iter().map(|(coeff, _)| coeff.abs()).sum()
    }
}

/// Evolve a dense state by `exp(-i H t)` for the chain Hamiltonian of a
/// [`ChainSpec`], without ever forming the `2^n x 2^n` matrix.
///
/// Uses time slices short enough for a rapidly converging Taylor series;
/// the truncation error is far below the crate's tolerances.
pub fn evolve_by_chain_hamiltonian(
    state: &mut DenseState,
    spec: &ChainSpec,
    t: f64,
) -> Result<()> {
    if spec.n() != state.n() {
        return Err(Error::DimensionMismatch {
            context: "evolve_by_chain_hamiltonian",
            expected: state.n(),
            actual: spec.n(),
        });
    }
    let terms = chain_pauli_terms(spec);
    if terms.is_empty() || t == 0.0 {
        return Ok(());
    }
    let n = state.n();
    let sparse = SparsePauliSum::build(&terms, n);
    let budget = SparsePauliSum::coefficient_budget(&terms) * t.abs();
    let slices = (budget / 2.0).ceil().max(1.0) as usize;
    let dt = t / slices as f64;
    let dim = sparse.dim;

    let mut power = vec![c(0.0, 0.0); dim];
    let mut next = vec![c(0.0, 0.0); dim];
    for _ in 0..slices {
        // exp(-i H dt) psi = sum_k (-i dt)^k H^k psi / k!
        let mut acc = state.amplitudes.clone();
        power.copy_from_slice(&state.amplitudes);
        for k in 1..=32u32 {
            sparse.apply(&power, &mut next);
            let factor = c(0.0, -dt / k as f64);
            let mut largest = 0.0f64;
            for (p, nx) in power.iter_mut().zip(next.iter()) {
                *p = nx * factor;
                largest = largest.max(p.norm_sqr());
            }
            for (a, p) in acc.iter_mut().zip(power.iter()) {
                *a += p;
            }
            if largest < 1e-40 {
                break;
            }
        }
        state.amplitudes.copy_from_slice(&acc);
    }
    Ok(())
}

/// Dense `2^n x 2^n` chain Hamiltonian.
pub fn dense_hamiltonian(spec: &ChainSpec) -> Result<ComplexMatrix> {
    let n = spec.n();
    check_operator_capacity(n)?;
    let dim = 1usize << n;
    let mut h = ComplexMatrix::zeros(dim, dim);
    for (coeff, string) in chain_pauli_terms(spec) {
        for col in 0..dim {
            let (amp, row) = string.map_basis(col);
            h[(row, col)] += amp * coeff;
        }
    }
    Ok(h)
}

/// Dense embedding `I ⊗ G ⊗ I` of a 4×4 gate at qubits `(k, k+1)`.
pub fn embed_gate(g: &ComplexMatrix, k: usize, n: usize) -> Result<ComplexMatrix> {
    check_operator_capacity(n)?;
    if k == 0 || k >= n {
        return Err(Error::IndexOutOfRange {
            context: "embed_gate",
            index: k,
            bound: n - 1,
        });
    }
    let left = ComplexMatrix::identity(1 << (k - 1));
    let right = ComplexMatrix::identity(1 << (n - k - 1));
    Ok(left.kron(g).kron(&right))
}

/// Dense `2^n` unitary of a whole circuit.
pub fn dense_circuit(circuit: &Circuit) -> Result<ComplexMatrix> {
    let n = circuit.n();
    check_operator_capacity(n)?;
    let mut u = ComplexMatrix::identity(1 << n);
    for layer in circuit.layers() {
        for (k, gate) in layer {
            u = &embed_gate(gate, *k, n)? * &u;
        }
    }
    Ok(u)
}

/// Projection of a dense operator onto the single-excitation sector:
/// `(restriction)_jk = <chi_j| op |chi_k>`.
pub fn restrict_single_excitation(op: &ComplexMatrix) -> Result<ComplexMatrix> {
    let dim = op.require_square("restrict_single_excitation")?;
    if !dim.is_power_of_two() || dim < 2 {
        return Err(Error::Shape {
            context: "restrict_single_excitation",
            rows: dim,
            cols: dim,
        });
    }
    let n = dim.trailing_zeros() as usize;
    check_operator_capacity(n)?;
    let index = |k: usize| 1usize << (n - k); // 1-based chi_k
    Ok(ComplexMatrix::from_fn(n, n, |j, k| {
        op.get(index(j + 1), index(k + 1))
    }))
}

/// Commutator diagnostics of a dense evolution operator.
#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibilityReport {
    /// `max |(U J - J U)_ij|` against the diagonal J spin element.
    pub j_commutator: f64,
    /// `max |(U N - N U)_ij|` against the number operator.
    pub number_commutator: f64,
    /// Both commutators below tolerance. Necessary for admissibility but
    /// not sufficient: SWAP networks also commute with J and N^z while
    /// failing the matchgate determinant condition.
    pub commutes: bool,
    pub tolerance: f64,
}

/// Check a dense evolution operator against the two conserved structures:
/// the J spin element and the particle-number operator. Both are diagonal,
/// so the commutator norms need no matrix products.
pub fn verify_admissibility_dense(u: &ComplexMatrix) -> Result<AdmissibilityReport> {
    let dim = u.require_square("verify_admissibility_dense")?;
    if !dim.is_power_of_two() || dim < 2 {
        return Err(Error::Shape {
            context: "verify_admissibility_dense",
            rows: dim,
            cols: dim,
        });
    }
    let n = dim.trailing_zeros() as usize;
    check_operator_capacity(n)?;
    let j_diag = j_diagonal(n);
    let mut j_comm = 0.0f64;
    let mut nz_comm = 0.0f64;
    for row in 0..dim {
        for col in 0..dim {
            let entry = u.get(row, col);
            if entry == c(0.0, 0.0) {
                continue;
            }
            // (D U - U D)_rc = (d_r - d_c) U_rc for diagonal D.
            j_comm = j_comm.max(((j_diag[row] - j_diag[col]) * entry).norm());
            let dn = row.count_ones() as f64 - col.count_ones() as f64;
            nz_comm = nz_comm.max((dn * entry).norm());
        }
    }
    let tolerance = tol::POSTCONDITION;
    Ok(AdmissibilityReport {
        j_commutator: j_comm,
        number_commutator: nz_comm,
        commutes: j_comm <= tolerance && nz_comm <= tolerance,
        tolerance,
    })
}
