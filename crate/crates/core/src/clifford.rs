//! Jordan-Wigner generators, fermionic ladder operators, the J element and
//! matrix, and the OSp(2n) ↔ U(n) correspondence behind the compression.
//!
//! The `2n` Clifford generators are realized as Pauli strings
//! `e_k = i Z_1 .. Z_{k-1} X_k` and `e_{k+n} = i Z_1 .. Z_{k-1} Y_k`;
//! ladder operators are the standard combinations `(e_k ± i e_{k+n}) / 2i`.
//! Indexing is 1-based throughout this module.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::gates::{classify_gate, GateClass};
use crate::linalg::ComplexMatrix;
use crate::tol;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Dense operators are capped at 12 qubits (4096-dimensional space).
pub const DENSE_OPERATOR_CAP: usize = 12;

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// Product `self * other` as `(i^phase, letter)`.
    fn mul(self, other: Pauli) -> (u8, Pauli) {
        use Pauli::*;
        match (self, other) {
            (I, p) | (p, I) => (0, p),
            (X, X) | (Y, Y) | (Z, Z) => (0, I),
            (X, Y) => (1, Z),
            (Y, X) => (3, Z),
            (Y, Z) => (1, X),
            (Z, Y) => (3, X),
            (Z, X) => (1, Y),
            (X, Z) => (3, Y),
        }
    }

    /// Action on a basis bit: `P|b> = amp |b ^ flip>`.
    fn action(self, bit: bool) -> (Complex64, bool) {
        match self {
            Pauli::I => (c(1.0, 0.0), bit),
            Pauli::X => (c(1.0, 0.0), !bit),
            Pauli::Y => {
                if bit {
                    (c(0.0, -1.0), false)
                } else {
                    (c(0.0, 1.0), true)
                }
            }
            Pauli::Z => (if bit { c(-1.0, 0.0) } else { c(1.0, 0.0) }, bit),
        }
    }
}

/// A phase in {1, i, -1, -i} times a tensor product of Pauli letters.
///
/// Products of strings stay in this set, so phases are tracked exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliString {
    /// Power of i in 0..4.
    phase_power: u8,
    letters: Vec<Pauli>,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        Self {
            phase_power: 0,
            letters: vec![Pauli::I; n],
        }
    }

    pub fn new(phase_power: u8, letters: Vec<Pauli>) -> Self {
        Self {
            phase_power: phase_power % 4,
            letters,
        }
    }

    /// A single letter at 1-based position `k` on `n` qubits.
    pub fn single(n: usize, k: usize, letter: Pauli) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange {
                context: "PauliString::single",
                index: k,
                bound: n,
            });
        }
        let mut letters = vec![Pauli::I; n];
        letters[k - 1] = letter;
        Ok(Self {
            phase_power: 0,
            letters,
        })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Pauli] {
        &self.letters
    }

    /// The phase i^p as a complex number.
    pub fn phase(&self) -> Complex64 {
        match self.phase_power % 4 {
            0 => c(1.0, 0.0),
            1 => c(0.0, 1.0),
            2 => c(-1.0, 0.0),
            _ => c(0.0, -1.0),
        }
    }

    pub fn phase_power(&self) -> u8 {
        self.phase_power
    }

    /// String product with exact phase bookkeeping.
    pub fn mul(&self, other: &PauliString) -> PauliString {
        debug_assert_eq!(self.len(), other.len());
        let mut phase_power = (self.phase_power + other.phase_power) % 4;
        let letters = self
            .letters
            .iter()
            .zip(&other.letters)
            .map(|(&a, &b)| {
                let (p, l) = a.mul(b);
                phase_power = (phase_power + p) % 4;
                l
            })
            .collect();
        PauliString {
            phase_power,
            letters,
        }
    }

    /// Map a basis index to `(amplitude, image index)`. Qubit 1 is the most
    /// significant bit.
    pub fn map_basis(&self, index: usize) -> (Complex64, usize) {
        let n = self.len();
        let mut amp = self.phase();
        let mut out = index;
        for (pos, &letter) in self.letters.iter().enumerate() {
            let bit_pos = n - 1 - pos;
            let bit = (index >> bit_pos) & 1 == 1;
            let (factor, new_bit) = letter.action(bit);
            amp *= factor;
            if new_bit != bit {
                out ^= 1 << bit_pos;
            }
        }
        (amp, out)
    }

    /// Dense `2^n x 2^n` realization.
    pub fn to_dense(&self) -> Result<ComplexMatrix> {
        let n = self.len();
        if n > DENSE_OPERATOR_CAP {
            return Err(Error::CapacityExceeded {
                n,
                max: DENSE_OPERATOR_CAP,
            });
        }
        let dim = 1usize << n;
        let mut m = ComplexMatrix::zeros(dim, dim);
        for col in 0..dim {
            let (amp, row) = self.map_basis(col);
            m[(row, col)] = amp;
        }
        Ok(m)
    }

    /// Apply to a dense amplitude vector.
    pub fn apply(&self, amplitudes: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![c(0.0, 0.0); amplitudes.len()];
        for (col, &a) in amplitudes.iter().enumerate() {
            if a != c(0.0, 0.0) {
                let (amp, row) = self.map_basis(col);
                out[row] += amp * a;
            }
        }
        out
    }
}

/// Jordan-Wigner Clifford generator, `1 <= k <= 2n`.
///
/// For `k <= n` this is `i Z^(k-1) X I^(n-k)`; for `k > n` the Y variant.
pub fn jw_generator(k: usize, n: usize) -> Result<PauliString> {
    if k == 0 || k > 2 * n {
        return Err(Error::IndexOutOfRange {
            context: "jw_generator",
            index: k,
            bound: 2 * n,
        });
    }
    let (site, letter) = if k <= n {
        (k, Pauli::X)
    } else {
        (k - n, Pauli::Y)
    };
    let mut letters = vec![Pauli::I; n];
    for z in 0..site - 1 {
        letters[z] = Pauli::Z;
    }
    letters[site - 1] = letter;
    Ok(PauliString {
        phase_power: 1,
        letters,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderKind {
    Annihilation,
    Creation,
}

/// A fermionic ladder operator as a two-term Pauli combination.
#[derive(Debug, Clone, PartialEq)]
pub struct LadderOperator {
    kind: LadderKind,
    index: usize,
    terms: [(Complex64, PauliString); 2],
}

impl LadderOperator {
    pub fn kind(&self) -> LadderKind {
        self.kind
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn terms(&self) -> &[(Complex64, PauliString); 2] {
        &self.terms
    }

    pub fn to_dense(&self) -> Result<ComplexMatrix> {
        let t0 = self.terms[0].1.to_dense()?.scale(self.terms[0].0);
        let t1 = self.terms[1].1.to_dense()?.scale(self.terms[1].0);
        Ok(&t0 + &t1)
    }
}

/// `a_k = (e_k + i e_{k+n}) / 2i` or its adjoint, `1 <= k <= n`.
pub fn ladder_operator(k: usize, n: usize, kind: LadderKind) -> Result<LadderOperator> {
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange {
            context: "ladder_operator",
            index: k,
            bound: n,
        });
    }
    let ek = jw_generator(k, n)?;
    let ekn = jw_generator(k + n, n)?;
    // 1/(2i) = -i/2; (i)/(2i) = 1/2.
    let terms = match kind {
        LadderKind::Annihilation => [(c(0.0, -0.5), ek), (c(0.5, 0.0), ekn)],
        LadderKind::Creation => [(c(0.0, -0.5), ek), (c(-0.5, 0.0), ekn)],
    };
    Ok(LadderOperator { kind, index: k, terms })
}

/// Real `2n x 2n` rotation, optionally symplectic (commuting with J).
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalRotation {
    dim: usize,
    data: Vec<f64>,
}

impl OrthogonalRotation {
    pub fn new(dim: usize, data: Vec<f64>) -> Result<Self> {
        if dim == 0 || data.len() != dim * dim {
            return Err(Error::Shape {
                context: "OrthogonalRotation",
                rows: dim,
                cols: data.len() / dim.max(1),
            });
        }
        let r = Self { dim, data };
        let dev = r.orthogonality_deviation();
        if dev > tol::POSTCONDITION {
            return Err(Error::NotUnitary { deviation: dev });
        }
        Ok(r)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    /// `max |(R^T R - I)_ij|`.
    pub fn orthogonality_deviation(&self) -> f64 {
        let d = self.dim;
        let mut worst = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                let mut dot = 0.0;
                for k in 0..d {
                    dot += self.get(k, i) * self.get(k, j);
                }
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    /// `max |(RJ - JR)_ij|` for the block form J = [[0, I], [-I, 0]];
    /// infinite for odd dimensions.
    pub fn symplectic_deviation(&self) -> f64 {
        if self.dim % 2 != 0 {
            return f64::INFINITY;
        }
        let n = self.dim / 2;
        // RJ = JR iff the blocks satisfy T = P and S = -Q.
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let p = self.get(i, j);
                let q = self.get(i, j + n);
                let s = self.get(i + n, j);
                let t = self.get(i + n, j + n);
                worst = worst.max((t - p).abs()).max((s + q).abs());
            }
        }
        worst
    }

    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut data = vec![0.0; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..d {
                    data[i * d + j] += a * other.get(k, j);
                }
            }
        }
        Self { dim: d, data }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// The substitution matrix J = [[0, I_n], [-I_n, 0]] as a 2n x 2n rotation.
pub fn j_matrix(n: usize) -> OrthogonalRotation {
    let d = 2 * n;
    let mut data = vec![0.0; d * d];
    for k in 0..n {
        data[k * d + (k + n)] = 1.0;
        data[(k + n) * d + k] = -1.0;
    }
    OrthogonalRotation { dim: d, data }
}

/// Diagonal of the dense J spin element: entry `e^{i pi (n - 2 N_b) / 4}`
/// on the basis state `b` with `N_b` set bits.
pub fn j_diagonal(n: usize) -> Vec<Complex64> {
    let dim = 1usize << n;
    (0..dim)
        .map(|b: usize| {
            let ones = b.count_ones() as f64;
            Complex64::new(0.0, core::f64::consts::FRAC_PI_4 * (n as f64 - 2.0 * ones)).exp()
        })
        .collect()
}

/// Dense `2^n` realization of the Spin-group element
/// `J = prod_k (I + i Z_k) / sqrt(2)`, a diagonal matrix equal to
/// `e^{i pi n / 4} e^{-i (pi/2) N^z}`.
pub fn j_spin_element(n: usize) -> Result<ComplexMatrix> {
    if n == 0 || n > DENSE_OPERATOR_CAP {
        return Err(Error::CapacityExceeded {
            n,
            max: DENSE_OPERATOR_CAP,
        });
    }
    let diag = j_diagonal(n);
    let dim = diag.len();
    let mut m = ComplexMatrix::zeros(dim, dim);
    for (i, z) in diag.into_iter().enumerate() {
        m[(i, i)] = z;
    }
    Ok(m)
}

/// Forward OSp(2n) image of a unitary: `R = [[Re U, Im U], [-Im U, Re U]]`.
pub fn osp_from_unitary(u: &ComplexMatrix) -> Result<OrthogonalRotation> {
    let n = u.require_square("osp_from_unitary")?;
    let dev = u.unitary_deviation();
    if dev > tol::POSTCONDITION {
        return Err(Error::NotUnitary { deviation: dev });
    }
    let d = 2 * n;
    let mut data = vec![0.0; d * d];
    for i in 0..n {
        for j in 0..n {
            let z = u.get(i, j);
            data[i * d + j] = z.re;
            data[i * d + (j + n)] = z.im;
            data[(i + n) * d + j] = -z.im;
            data[(i + n) * d + (j + n)] = z.re;
        }
    }
    Ok(OrthogonalRotation { dim: d, data })
}

/// Inverse of [`osp_from_unitary`]: requires an orthogonal and symplectic
/// rotation in block form and returns the unitary `U = P + iQ`.
pub fn unitary_from_osp(r: &OrthogonalRotation) -> Result<ComplexMatrix> {
    if r.dim % 2 != 0 {
        return Err(Error::Shape {
            context: "unitary_from_osp",
            rows: r.dim,
            cols: r.dim,
        });
    }
    let sympl = r.symplectic_deviation();
    if sympl > tol::POSTCONDITION {
        return Err(Error::NotSymplectic { deviation: sympl });
    }
    let ortho = r.orthogonality_deviation();
    if ortho > tol::POSTCONDITION {
        return Err(Error::NotUnitary { deviation: ortho });
    }
    let n = r.dim / 2;
    Ok(ComplexMatrix::from_fn(n, n, |i, j| {
        c(r.get(i, j), r.get(i, j + n))
    }))
}

/// The 2×2 mode matrix `m` of an admissible two-qubit gate:
/// `G a_k G† = sum_j m_kj a_j` for the two modes the gate touches.
///
/// Extracted numerically by conjugating the dense ladder operators on a
/// two-qubit system; the Z-string prefix of the Jordan-Wigner generators
/// commutes through any block-diagonal gate left of the pair, so the same
/// coefficients embed at any chain position.
pub fn mode_action(g: &ComplexMatrix) -> Result<ComplexMatrix> {
    let class = classify_gate(g)?;
    if class != GateClass::AdmissibleMatchgate {
        return Err(Error::NotAdmissible { class });
    }
    // Dense a_1 = sigma+ ⊗ I and a_2 = Z ⊗ sigma+ on two qubits; written
    // out directly (and pinned to the Jordan-Wigner realization by tests).
    let mut a1 = ComplexMatrix::zeros(4, 4);
    a1[(0, 2)] = c(1.0, 0.0);
    a1[(1, 3)] = c(1.0, 0.0);
    let mut a2 = ComplexMatrix::zeros(4, 4);
    a2[(0, 1)] = c(1.0, 0.0);
    a2[(2, 3)] = c(-1.0, 0.0);
    let gd = g.adjoint();
    let modes = [&a1, &a2];
    let mut m = ComplexMatrix::zeros(2, 2);
    for (k, ak) in modes.iter().enumerate() {
        let conjugated = &(g * ak) * &gd;
        for (j, aj) in modes.iter().enumerate() {
            // <a_j, b> / <a_j, a_j> with the Hilbert-Schmidt inner product;
            // tr(a_j† a_j) = 2 on two qubits.
            m[(k, j)] = (&aj.adjoint() * &conjugated).trace() * 0.5;
        }
        // The conjugated operator must stay in the span of the two modes.
        let mut rec = ComplexMatrix::zeros(4, 4);
        for (j, aj) in modes.iter().enumerate() {
            rec = &rec + &aj.scale(m.get(k, j));
        }
        let residual = rec.max_abs_diff(&conjugated);
        if residual > tol::POSTCONDITION {
            return Err(Error::NotAdmissible { class });
        }
    }
    let dev = m.unitary_deviation();
    if dev > tol::POSTCONDITION {
        return Err(Error::NotUnitary { deviation: dev });
    }
    Ok(m)
}
