//! The compressed engine: compiles admissible circuits and chain
//! Hamiltonians to an `n × n` mode unitary and answers state-distribution
//! queries in polynomial time.
//!
//! The mode matrix `U` is defined by `𝔘 a_k 𝔘† = sum_j U_kj a_j`.
//! Single-excitation amplitudes then evolve by `U†`, site probabilities
//! are squared entries of `U`, and multi-particle (Slater) amplitudes are
//! determinants of `U†` submatrices. Every convention here is pinned by
//! the dense oracle tests.

use alloc::vec::Vec;

use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::chains::SingleParticleHamiltonian;
use crate::clifford::mode_action;
use crate::error::{Error, Result};
use crate::linalg::{determinant, expm_hermitian, ComplexMatrix};
use crate::tol;
use crate::walks::SingleParticleState;

/// The `n × n` unitary mode transformation of a compiled evolution.
#[derive(Debug, Clone, PartialEq)]
pub struct CompressedEvolution {
    u: ComplexMatrix,
}

impl CompressedEvolution {
    pub fn identity(n: usize) -> Self {
        Self {
            u: ComplexMatrix::identity(n),
        }
    }

    /// Wrap an explicit mode matrix; must be unitary.
    pub fn from_mode_matrix(u: ComplexMatrix) -> Result<Self> {
        u.require_square("CompressedEvolution")?;
        let dev = u.unitary_deviation();
        if dev > tol::POSTCONDITION {
            return Err(Error::NotUnitary { deviation: dev });
        }
        Ok(Self { u })
    }

    pub fn n(&self) -> usize {
        self.u.rows()
    }

    pub fn mode_matrix(&self) -> &ComplexMatrix {
        &self.u
    }

    /// Composition in application order: `self` first, then `later`.
    pub fn then(&self, later: &CompressedEvolution) -> Result<CompressedEvolution> {
        if self.n() != later.n() {
            return Err(Error::DimensionMismatch {
                context: "CompressedEvolution::then",
                expected: self.n(),
                actual: later.n(),
            });
        }
        Ok(CompressedEvolution {
            u: &self.u * &later.u,
        })
    }
}

/// A layered nearest-neighbor circuit. Within a layer all gates act on
/// disjoint qubit pairs (Margolus partitioning), so they commute.
#[derive(Debug, Clone)]
pub struct Circuit {
    n: usize,
    layers: Vec<Vec<(usize, ComplexMatrix)>>,
}

impl Circuit {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            layers: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn layers(&self) -> &[Vec<(usize, ComplexMatrix)>] {
        &self.layers
    }

    pub fn gate_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// Append a layer of `(position, gate)` pairs; positions are 1-based
    /// with gate `k` acting on qubits `(k, k+1)`.
    pub fn push_layer(&mut self, layer: Vec<(usize, ComplexMatrix)>) -> Result<()> {
        let mut positions: Vec<usize> = Vec::with_capacity(layer.len());
        for (k, g) in &layer {
            if *k == 0 || *k + 1 > self.n {
                return Err(Error::IndexOutOfRange {
                    context: "Circuit::push_layer",
                    index: *k,
                    bound: self.n.saturating_sub(1),
                });
            }
            if g.rows() != 4 || g.cols() != 4 {
                return Err(Error::Shape {
                    context: "Circuit::push_layer",
                    rows: g.rows(),
                    cols: g.cols(),
                });
            }
            positions.push(*k);
        }
        positions.sort_unstable();
        for pair in positions.windows(2) {
            if pair[1] - pair[0] < 2 {
                return Err(Error::OverlappingLayer { position: pair[1] });
            }
        }
        self.layers.push(layer);
        Ok(())
    }

    /// Append a single gate as its own layer.
    pub fn push_gate(&mut self, position: usize, gate: ComplexMatrix) -> Result<()> {
        self.push_layer(alloc::vec![(position, gate)])
    }

    /// Concatenate another circuit after this one.
    pub fn extend(&mut self, other: &Circuit) -> Result<()> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                context: "Circuit::extend",
                expected: self.n,
                actual: other.n,
            });
        }
        self.layers.extend(other.layers.iter().cloned());
        Ok(())
    }
}

/// Compile a circuit to its mode matrix: the product of the embedded
/// 2×2 mode actions in gate-application order.
///
/// Rejects gates that do not classify as admissible matchgates, with the
/// classification attached to the error.
pub fn compile_circuit(circuit: &Circuit) -> Result<CompressedEvolution> {
    let n = circuit.n();
    let mut u = ComplexMatrix::identity(n);
    for layer in circuit.layers() {
        for (k, gate) in layer {
            let m = mode_action(gate)?;
            apply_mode_block(&mut u, *k, &m);
        }
    }
    Ok(CompressedEvolution { u })
}

/// Right-multiply `u` by the identity-embedded 2×2 block at modes
/// `(k, k+1)`, 1-based: only columns `k-1` and `k` change.
fn apply_mode_block(u: &mut ComplexMatrix, k: usize, m: &ComplexMatrix) {
    let n = u.rows();
    let (a, b) = (k - 1, k);
    let (m00, m01) = (m.get(0, 0), m.get(0, 1));
    let (m10, m11) = (m.get(1, 0), m.get(1, 1));
    for row in u.data_mut().chunks_exact_mut(n) {
        let ua = row[a];
        let ub = row[b];
        row[a] = ua * m00 + ub * m10;
        row[b] = ua * m01 + ub * m11;
    }
}

/// Compile evolution under a chain Hamiltonian for time `t`.
///
/// The mode matrix is `exp(+i h t)`; conjugating `a_k` by `exp(-iHt)`
/// rotates the modes with the *reversed* sign, and state amplitudes then
/// pick up the Schrödinger factor `U† = exp(-i h t)` in [`evolve_single`].
pub fn compile_hamiltonian(
    h: &SingleParticleHamiltonian,
    t: f64,
) -> Result<CompressedEvolution> {
    Ok(CompressedEvolution {
        u: expm_hermitian(h.matrix(), -t)?,
    })
}

/// Evolve a single-particle state: `psi' = U† psi`.
pub fn evolve_single(
    psi: &SingleParticleState,
    e: &CompressedEvolution,
) -> Result<SingleParticleState> {
    let n = e.n();
    if psi.n() != n {
        return Err(Error::DimensionMismatch {
            context: "evolve_single",
            expected: n,
            actual: psi.n(),
        });
    }
    let out = e.u.adjoint().matvec(psi.amplitudes())?;
    SingleParticleState::new(out)
}

/// Probabilities `p_k = |U_jk|^2` of finding the excitation on node `k`
/// after starting on node `j` (1-based).
pub fn single_site_probabilities(j: usize, e: &CompressedEvolution) -> Result<Vec<f64>> {
    let n = e.n();
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange {
            context: "single_site_probabilities",
            index: j,
            bound: n,
        });
    }
    Ok((0..n).map(|k| e.u.get(j - 1, k).norm_sqr()).collect())
}

/// A multi-particle computational basis state: strictly increasing
/// occupied node indices (1-based). The ordering fixes the sign convention
/// of the associated creation-operator product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockBasisState {
    occupied: Vec<usize>,
}

impl FockBasisState {
    pub fn new(occupied: Vec<usize>) -> Result<Self> {
        if occupied.is_empty() || occupied[0] == 0 {
            return Err(Error::InvalidOccupation {
                context: "FockBasisState::new",
            });
        }
        for pair in occupied.windows(2) {
            if pair[1] <= pair[0] {
                return Err(Error::InvalidOccupation {
                    context: "FockBasisState::new",
                });
            }
        }
        Ok(Self { occupied })
    }

    /// Sort an arbitrary list of distinct indices, returning the state and
    /// the permutation parity (+1.0 or -1.0) of the exterior reordering.
    pub fn from_unsorted(indices: &[usize]) -> Result<(Self, f64)> {
        let mut sorted: Vec<usize> = indices.to_vec();
        // Count inversions to get the parity of the sorting permutation.
        let mut sign = 1.0;
        for i in 0..sorted.len() {
            for j in (i + 1)..sorted.len() {
                if sorted[i] > sorted[j] {
                    sign = -sign;
                }
            }
        }
        sorted.sort_unstable();
        let state = Self::new(sorted)?;
        Ok((state, sign))
    }

    pub fn occupied(&self) -> &[usize] {
        &self.occupied
    }

    pub fn particles(&self) -> usize {
        self.occupied.len()
    }

    pub fn max_index(&self) -> usize {
        *self.occupied.last().unwrap()
    }
}

fn check_occupation(k: &FockBasisState, n: usize, context: &'static str) -> Result<()> {
    if k.max_index() > n {
        return Err(Error::IndexOutOfRange {
            context,
            index: k.max_index(),
            bound: n,
        });
    }
    Ok(())
}

/// Per-node occupation probabilities of an evolved multi-particle basis
/// state: `p_k = sum_{l in K} |U_lk|^2`. The probabilities sum to the
/// particle number.
pub fn multi_site_probabilities(k: &FockBasisState, e: &CompressedEvolution) -> Result<Vec<f64>> {
    let n = e.n();
    check_occupation(k, n, "multi_site_probabilities")?;
    let mut p = alloc::vec![0.0f64; n];
    for &l in k.occupied() {
        for (node, slot) in p.iter_mut().enumerate() {
            *slot += e.u.get(l - 1, node).norm_sqr();
        }
    }
    Ok(p)
}

/// Slater amplitude `<chi_K_out| 𝔘 |chi_K_in>`: the determinant of the
/// `U†` submatrix with rows `K_out` and columns `K_in`.
///
/// Evolutions here conserve particle number, so unequal particle counts
/// are an error rather than a silent zero.
pub fn multi_amplitude(
    k_in: &FockBasisState,
    k_out: &FockBasisState,
    e: &CompressedEvolution,
) -> Result<Complex64> {
    if k_in.particles() != k_out.particles() {
        return Err(Error::UnequalParticleNumber {
            m_in: k_in.particles(),
            m_out: k_out.particles(),
        });
    }
    let n = e.n();
    check_occupation(k_in, n, "multi_amplitude")?;
    check_occupation(k_out, n, "multi_amplitude")?;
    let rows: Vec<usize> = k_out.occupied().iter().map(|&l| l - 1).collect();
    let cols: Vec<usize> = k_in.occupied().iter().map(|&l| l - 1).collect();
    let sub = e.u.adjoint().submatrix(&rows, &cols);
    determinant(&sub)
}

/// [`multi_amplitude`] for arbitrary (unsorted, distinct) index lists,
/// with the exterior-product sign of both reorderings applied.
pub fn multi_amplitude_signed(
    in_indices: &[usize],
    out_indices: &[usize],
    e: &CompressedEvolution,
) -> Result<Complex64> {
    let (k_in, sign_in) = FockBasisState::from_unsorted(in_indices)?;
    let (k_out, sign_out) = FockBasisState::from_unsorted(out_indices)?;
    let amp = multi_amplitude(&k_in, &k_out, e)?;
    Ok(amp * sign_in * sign_out)
}
