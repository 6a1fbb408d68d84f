//! Dense complex matrix kernel: Hermitian eigendecomposition via cyclic
//! Jacobi rotations, unitary matrix exponentials, determinants, adjoints
//! and products.
//!
//! Matrices are stored row-major with double-precision complex entries.
//! All operations are pure functions of immutable inputs.

use alloc::{vec, vec::Vec};
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::tol;

/// Dense complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Build from row-major entries; `data.len()` must equal `rows * cols`.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::Shape {
                context: "ComplexMatrix::new",
                rows,
                cols,
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Build from real entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Result<Self> {
        let data = entries.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::new(rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn require_square(&self, context: &'static str) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::Shape {
                context,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub(crate) fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).conj())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Kronecker (tensor) product.
    pub fn kron(&self, other: &Self) -> Self {
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        Self::from_fn(r1 * r2, c1 * c2, |i, j| {
            self.get(i / r2, j / c2) * other.get(i % r2, j % c2)
        })
    }

    /// Matrix-vector product.
    pub fn matvec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matvec",
                expected: self.cols,
                actual: v.len(),
            });
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.rows];
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            out[i] = row.iter().zip(v).map(|(&a, &x)| a * x).sum();
        }
        Ok(out)
    }

    /// Submatrix selecting the given rows and columns (0-based).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]))
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }

    /// Largest entry-wise difference `max |a_ij - b_ij|`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `max |(M†M - I)_ij|`.
    pub fn unitary_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let p = &self.adjoint() * self;
        p.max_abs_diff(&Self::identity(self.rows))
    }

    /// `max |(M - M†)_ij|`.
    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitary_deviation() <= tol
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// Commutator norm `max |(AB - BA)_ij|`.
    pub fn commutator_norm(&self, other: &Self) -> f64 {
        let ab = self * other;
        let ba = other * self;
        ab.max_abs_diff(&ba)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self.get(i, j);
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order and a unitary `V` whose columns
/// are the matching eigenvectors, so `H = V diag(λ) V†`.
pub fn hermitian_eig(h: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    let n = h.require_square("hermitian_eig")?;
    let dev = h.hermitian_deviation();
    if dev > tol::CONSTRUCTION {
        return Err(Error::NotHermitian { deviation: dev });
    }
    // Work on the symmetrized copy so accumulated round-off in the input
    // cannot bias the rotations.
    let mut a = ComplexMatrix::from_fn(n, n, |i, j| {
        (h.get(i, j) + h.get(j, i).conj()) * 0.5
    });
    let mut v = ComplexMatrix::identity(n);

    let scale = a.max_abs().max(1.0);
    let threshold = 1e-15 * scale;
    let max_sweeps = 64;

    for _sweep in 0..max_sweeps {
        let mut off_max = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off_max = off_max.max(a.get(p, q).norm());
            }
        }
        if off_max <= threshold {
            return Ok(sorted_eigensystem(&a, v));
        }
        for p in 0..n {
            for q in (p + 1)..n {
                jacobi_rotate(&mut a, &mut v, p, q, threshold);
            }
        }
    }
    Err(Error::NoConvergence { sweeps: max_sweeps })
}

/// One complex Jacobi rotation zeroing `a[(p, q)]`.
fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize, skip: f64) {
    let apq = a.get(p, q);
    let mag = apq.norm();
    if mag <= skip {
        return;
    }
    let phase = apq / mag; // e^{i phi}
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    // Rotation angle from the phase-absorbed real symmetric 2x2 block.
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (tau - (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // V2 = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]; apply A <- V2† A V2.
    let vpp = Complex64::new(c, 0.0);
    let vpq = Complex64::new(s, 0.0);
    let vqp = -phase.conj() * s;
    let vqq = phase.conj() * c;

    let n = a.rows();
    // Columns: A <- A V2.
    for i in 0..n {
        let aip = a.get(i, p);
        let aiq = a.get(i, q);
        a[(i, p)] = aip * vpp + aiq * vqp;
        a[(i, q)] = aip * vpq + aiq * vqq;
    }
    // Rows: A <- V2† A.
    for j in 0..n {
        let apj = a.get(p, j);
        let aqj = a.get(q, j);
        a[(p, j)] = vpp.conj() * apj + vqp.conj() * aqj;
        a[(q, j)] = vpq.conj() * apj + vqq.conj() * aqj;
    }
    // Clean the pivot pair exactly; the diagonal stays real.
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a.get(p, p).re, 0.0);
    a[(q, q)] = Complex64::new(a.get(q, q).re, 0.0);

    // Accumulate eigenvectors: V <- V V2.
    for i in 0..n {
        let vip = v.get(i, p);
        let viq = v.get(i, q);
        v[(i, p)] = vip * vpp + viq * vqp;
        v[(i, q)] = vip * vpq + viq * vqq;
    }
}

fn sorted_eigensystem(a: &ComplexMatrix, v: ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    let n = a.rows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).re.partial_cmp(&a.get(j, j).re).unwrap());
    let eigenvalues = order.iter().map(|&i| a.get(i, i).re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v.get(i, order[j]));
    (eigenvalues, vectors)
}

/// Unitary evolution operator `exp(-i H t)` of a Hermitian generator,
/// computed through [`hermitian_eig`].
pub fn expm_hermitian(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let (eigenvalues, v) = hermitian_eig(h)?;
    let n = h.rows();
    // exp(-iHt) = V diag(e^{-i lambda t}) V†
    let mut w = v.clone();
    for j in 0..n {
        let phase = Complex64::new(0.0, -eigenvalues[j] * t).exp();
        for i in 0..n {
            w[(i, j)] *= phase;
        }
    }
    Ok(&w * &v.adjoint())
}

/// Determinant by partially pivoted Gaussian elimination.
pub fn determinant(m: &ComplexMatrix) -> Result<Complex64> {
    let n = m.require_square("determinant")?;
    let mut a = m.clone();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        // Partial pivoting on column k.
        let mut pivot = k;
        let mut best = a.get(k, k).norm();
        for i in (k + 1)..n {
            let mag = a.get(i, k).norm();
            if mag > best {
                best = mag;
                pivot = i;
            }
        }
        if best == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if pivot != k {
            for j in 0..n {
                let tmp = a.get(k, j);
                a[(k, j)] = a.get(pivot, j);
                a[(pivot, j)] = tmp;
            }
            det = -det;
        }
        let akk = a.get(k, k);
        det *= akk;
        for i in (k + 1)..n {
            let factor = a.get(i, k) / akk;
            if factor == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in (k + 1)..n {
                let sub = factor * a.get(k, j);
                a[(i, j)] -= sub;
            }
        }
    }
    Ok(det)
}

/// Spectral decomposition of a unitary matrix: eigenphases in `(-pi, pi]`
/// and a unitary eigenvector matrix `V` with `G = V diag(e^{i phi}) V†`.
///
/// The Hermitian parts `C = (G + G†)/2` and `S = (G - G†)/2i` commute for
/// unitary `G`; `C` is diagonalized first and `S` is rediagonalized inside
/// near-degenerate clusters of `C`. An eigenphase that lands exactly on the
/// branch cut is reported as `+pi`.
pub fn unitary_eig(g: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    let n = g.require_square("unitary_eig")?;
    let dev = g.unitary_deviation();
    if dev > tol::POSTCONDITION {
        return Err(Error::NotUnitary { deviation: dev });
    }
    let c = ComplexMatrix::from_fn(n, n, |i, j| (g.get(i, j) + g.get(j, i).conj()) * 0.5);
    let s = ComplexMatrix::from_fn(n, n, |i, j| {
        (g.get(i, j) - g.get(j, i).conj()) * Complex64::new(0.0, -0.5)
    });

    let (c_values, mut v) = hermitian_eig(&c)?;

    // Rediagonalize S inside clusters of nearly equal cos-eigenvalues.
    let cluster_gap = 1e-7;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (c_values[end] - c_values[end - 1]).abs() <= cluster_gap {
            end += 1;
        }
        if end - start > 1 {
            let cols: Vec<usize> = (start..end).collect();
            let basis = v.submatrix(&(0..n).collect::<Vec<_>>(), &cols);
            let block = &(&basis.adjoint() * &s) * &basis;
            let sym = ComplexMatrix::from_fn(block.rows(), block.cols(), |i, j| {
                (block.get(i, j) + block.get(j, i).conj()) * 0.5
            });
            let (_sv, r) = hermitian_eig(&sym)?;
            let rotated = &basis * &r;
            for (local, &col) in cols.iter().enumerate() {
                for i in 0..n {
                    v[(i, col)] = rotated.get(i, local);
                }
            }
        }
        start = end;
    }

    // Read eigenphases from the diagonal of V† G V.
    let d = &(&v.adjoint() * g) * &v;
    let mut phases = Vec::with_capacity(n);
    let mut residual = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                residual = residual.max(d.get(i, j).norm());
            }
        }
        let z = d.get(i, i);
        let im = if z.im == 0.0 { 0.0 } else { z.im };
        phases.push(libm_atan2(im, z.re));
    }
    if residual > 1e-6 {
        return Err(Error::NoConvergence { sweeps: 0 });
    }
    Ok((phases, v))
}

#[inline]
fn libm_atan2(y: f64, x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        f64::atan2(y, x)
    }
    #[cfg(not(feature = "std"))]
    {
        Float::atan2(y, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_hermitian, random_unitary};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eig_diagonal_case() {
        let h = ComplexMatrix::from_real(2, 2, &[2.0, 0.0, 0.0, -1.0]).unwrap();
        let (vals, v) = hermitian_eig(&h).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-14);
        assert!((vals[1] - 2.0).abs() < 1e-14);
        // Column-permuted identity: first column picks the -1 eigenvector.
        assert!((v.get(1, 0).norm() - 1.0).abs() < 1e-14);
        assert!((v.get(0, 1).norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eig_pauli_x_spectrum() {
        let h = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let (vals, v) = hermitian_eig(&h).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-14);
        assert!((vals[1] - 1.0).abs() < 1e-14);
        assert!(v.is_unitary(1e-12));
    }

    #[test]
    fn eig_reconstructs_random_hermitian() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let h = random_hermitian(&mut rng, 6);
        let (vals, v) = hermitian_eig(&h).unwrap();
        assert!(v.is_unitary(1e-12));
        let mut rec = ComplexMatrix::zeros(6, 6);
        for j in 0..6 {
            for a in 0..6 {
                for b in 0..6 {
                    let term = v.get(a, j) * vals[j] * v.get(b, j).conj();
                    rec[(a, b)] += term;
                }
            }
        }
        assert!(rec.max_abs_diff(&h) < 1e-10);
        for w in vals.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(hermitian_eig(&m), Err(Error::NotHermitian { .. })));
        let m = ComplexMatrix::from_real(2, 3, &[0.0; 6]).unwrap();
        assert!(matches!(hermitian_eig(&m), Err(Error::Shape { .. })));
    }

    #[test]
    fn expm_zero_generator_is_identity() {
        for n in [1, 3, 5] {
            let u = expm_hermitian(&ComplexMatrix::zeros(n, n), 1.0).unwrap();
            assert!(u.max_abs_diff(&ComplexMatrix::identity(n)) < 1e-14);
        }
    }

    #[test]
    fn expm_pauli_z_at_pi() {
        let h = ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0]).unwrap();
        let u = expm_hermitian(&h, core::f64::consts::PI).unwrap();
        let minus_i2 = ComplexMatrix::identity(2).scale(c(-1.0, 0.0));
        assert!(u.max_abs_diff(&minus_i2) < 1e-12);
    }

    /// Independent oracle: partial sums of the exponential series.
    fn taylor_expm(h: &ComplexMatrix, t: f64, terms: usize) -> ComplexMatrix {
        let n = h.rows();
        let gen = h.scale(c(0.0, -t));
        let mut sum = ComplexMatrix::identity(n);
        let mut power = ComplexMatrix::identity(n);
        let mut factorial = 1.0;
        for k in 1..=terms {
            power = &power * &gen;
            factorial *= k as f64;
            sum = &sum + &power.scale(c(1.0 / factorial, 0.0));
        }
        sum
    }

    #[test]
    fn expm_matches_taylor_series_on_ring() {
        // 3-node ring adjacency.
        let h = ComplexMatrix::from_real(3, 3, &[0., 1., 1., 1., 0., 1., 1., 1., 0.]).unwrap();
        let u = expm_hermitian(&h, 0.4).unwrap();
        let series = taylor_expm(&h, 0.4, 40);
        assert!(u.max_abs_diff(&series) < 1e-8);
        assert!(u.is_unitary(1e-10));
    }

    #[test]
    fn expm_group_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [2, 5, 16] {
            let h = random_hermitian(&mut rng, n);
            let us = expm_hermitian(&h, 0.3).unwrap();
            let ut = expm_hermitian(&h, 0.9).unwrap();
            let ust = expm_hermitian(&h, 1.2).unwrap();
            assert!((&us * &ut).max_abs_diff(&ust) < 1e-9);
            let back = expm_hermitian(&h, -0.3).unwrap();
            assert!(us.adjoint().max_abs_diff(&back) < 1e-10);
        }
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(
            determinant(&ComplexMatrix::identity(4)).unwrap(),
            c(1.0, 0.0)
        );
        let swap = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        assert!((determinant(&swap).unwrap() - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn determinant_of_unitary_has_unit_modulus() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let u = random_unitary(&mut rng, 5);
        let d = determinant(&u).unwrap();
        assert!((d.norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn determinant_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..5 {
            let a = random_hermitian(&mut rng, 6);
            let b = random_hermitian(&mut rng, 6);
            let da = determinant(&a).unwrap();
            let db = determinant(&b).unwrap();
            let dab = determinant(&(&a * &b)).unwrap();
            let denom = (da * db).norm().max(1e-30);
            assert!((dab - da * db).norm() / denom < 1e-8);
        }
    }

    #[test]
    fn unitary_eig_recovers_phases() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let g = random_unitary(&mut rng, 4);
        let (phases, v) = unitary_eig(&g).unwrap();
        assert!(v.is_unitary(1e-11));
        let mut rec = ComplexMatrix::zeros(4, 4);
        for j in 0..4 {
            let lambda = Complex64::new(0.0, phases[j]).exp();
            for a in 0..4 {
                for b in 0..4 {
                    let term = v.get(a, j) * lambda * v.get(b, j).conj();
                    rec[(a, b)] += term;
                }
            }
        }
        assert!(rec.max_abs_diff(&g) < 1e-10);
    }

    #[test]
    fn unitary_eig_branch_cut_is_plus_pi() {
        let g = ComplexMatrix::identity(3).scale(c(-1.0, 0.0));
        let (phases, _) = unitary_eig(&g).unwrap();
        for p in phases {
            assert!((p - core::f64::consts::PI).abs() < 1e-12);
        }
    }

    #[test]
    fn unitary_eig_handles_degenerate_mirror_phases() {
        // diag(e^{i a}, e^{-i a}) rotated by a dense basis: cos is degenerate,
        // the sin stage must split the pair.
        let a = 0.7;
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let w = random_unitary(&mut rng, 2);
        let d = ComplexMatrix::from_fn(2, 2, |i, j| {
            if i != j {
                c(0.0, 0.0)
            } else if i == 0 {
                Complex64::new(0.0, a).exp()
            } else {
                Complex64::new(0.0, -a).exp()
            }
        });
        let g = &(&w * &d) * &w.adjoint();
        let (mut phases, v) = unitary_eig(&g).unwrap();
        assert!(v.is_unitary(1e-11));
        phases.sort_by(|x, y| x.partial_cmp(y).unwrap());
        assert!((phases[0] + a).abs() < 1e-11);
        assert!((phases[1] - a).abs() < 1e-11);
    }
}
