//! Chain Hamiltonian constructors: adjacency matrices, the perfect-transfer
//! spin family, general XY + chiral + field chains, and the spin-rotation
//! reference matrix.
//!
//! All of these are `n × n` single-particle operators acting on amplitudes
//! over chain nodes; the [`crate::oracle`] module pins them against the
//! dense qubit realization.

use alloc::vec::Vec;

use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::tol;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Chain topology.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    Linear,
    Ring,
}

/// Axis of the perfect-transfer spin Hamiltonian family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Couplings of an XY + chiral + local-field chain.
///
/// `alpha[j]`, `beta[j]` couple nodes `j+1` and `j+2` (1-based); for a ring
/// the last entries couple nodes `n` and `1`. `delta[j]` is the local field
/// on node `j+1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainSpec {
    n: usize,
    topology: Topology,
    alpha: Vec<f64>,
    beta: Vec<f64>,
    delta: Vec<f64>,
}

impl ChainSpec {
    pub fn new(
        n: usize,
        topology: Topology,
        alpha: Vec<f64>,
        beta: Vec<f64>,
        delta: Vec<f64>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::IndexOutOfRange {
                context: "ChainSpec: node count",
                index: n,
                bound: 2,
            });
        }
        let links = match topology {
            Topology::Linear => n - 1,
            Topology::Ring => n,
        };
        for (name, list, expected) in [
            ("alpha", &alpha, links),
            ("beta", &beta, links),
            ("delta", &delta, n),
        ] {
            if list.len() != expected {
                return Err(Error::CoefficientArity {
                    name,
                    expected,
                    actual: list.len(),
                });
            }
            if list.iter().any(|x| !x.is_finite()) {
                return Err(Error::CoefficientArity {
                    name,
                    expected,
                    actual: list.len(),
                });
            }
        }
        Ok(Self {
            n,
            topology,
            alpha,
            beta,
            delta,
        })
    }

    pub fn linear(n: usize, alpha: Vec<f64>, beta: Vec<f64>, delta: Vec<f64>) -> Result<Self> {
        Self::new(n, Topology::Linear, alpha, beta, delta)
    }

    pub fn ring(n: usize, alpha: Vec<f64>, beta: Vec<f64>, delta: Vec<f64>) -> Result<Self> {
        Self::new(n, Topology::Ring, alpha, beta, delta)
    }

    /// Uniform XY chain: all alpha one, no chiral or field terms.
    pub fn uniform_xy(n: usize, topology: Topology) -> Result<Self> {
        let links = match topology {
            Topology::Linear => n.saturating_sub(1),
            Topology::Ring => n,
        };
        Self::new(
            n,
            topology,
            alloc::vec![1.0; links],
            alloc::vec![0.0; links],
            alloc::vec![0.0; n],
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    pub fn beta(&self) -> &[f64] {
        &self.beta
    }

    pub fn delta(&self) -> &[f64] {
        &self.delta
    }

    /// Link list as 0-based ordered node pairs with their coupling index.
    pub(crate) fn links(&self) -> Vec<(usize, usize)> {
        let mut links: Vec<(usize, usize)> =
            (0..self.n - 1).map(|j| (j, j + 1)).collect();
        if self.topology == Topology::Ring {
            links.push((self.n - 1, 0));
        }
        links
    }
}

/// An `n × n` Hermitian operator on single-excitation amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct SingleParticleHamiltonian {
    h: ComplexMatrix,
}

impl SingleParticleHamiltonian {
    pub fn new(h: ComplexMatrix) -> Result<Self> {
        h.require_square("SingleParticleHamiltonian")?;
        let dev = h.hermitian_deviation();
        if dev > tol::CONSTRUCTION {
            return Err(Error::NotHermitian { deviation: dev });
        }
        Ok(Self { h })
    }

    pub fn n(&self) -> usize {
        self.h.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.h
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.h
    }
}

/// Adjacency matrix of a linear chain or ring: unit entries on the links.
///
/// A ring on two nodes has its single pair linked twice (the wrap edge
/// coincides with the inner edge), so the couplings add up to 2.
pub fn adjacency_hamiltonian(topology: Topology, n: usize) -> Result<SingleParticleHamiltonian> {
    if n < 2 {
        return Err(Error::IndexOutOfRange {
            context: "adjacency_hamiltonian: node count",
            index: n,
            bound: 2,
        });
    }
    let mut h = ComplexMatrix::zeros(n, n);
    let mut add_edge = |a: usize, b: usize| {
        h[(a, b)] += c(1.0, 0.0);
        h[(b, a)] += c(1.0, 0.0);
    };
    for j in 0..n - 1 {
        add_edge(j, j + 1);
    }
    if topology == Topology::Ring {
        add_edge(n - 1, 0);
    }
    SingleParticleHamiltonian::new(h)
}

/// Perfect-transfer Hamiltonian family: couplings `(1/2)sqrt(k(n-k))`.
///
/// `Axis::X` gives the real symmetric form, `Axis::Y` the pure imaginary
/// antisymmetric form with the same magnitudes, `Axis::Z` the diagonal
/// `k - (n-1)/2` for `k = 0..n-1`. X and Y generate perfect end-to-end
/// transfer at `t = pi`; any Z admixture spoils it.
pub fn perfect_transfer_hamiltonian(n: usize, axis: Axis) -> Result<SingleParticleHamiltonian> {
    if n < 2 {
        return Err(Error::IndexOutOfRange {
            context: "perfect_transfer_hamiltonian: node count",
            index: n,
            bound: 2,
        });
    }
    let mut h = ComplexMatrix::zeros(n, n);
    match axis {
        Axis::X => {
            for j in 0..n - 1 {
                let w = 0.5 * (((j + 1) * (n - 1 - j)) as f64).sqrt();
                h[(j, j + 1)] = c(w, 0.0);
                h[(j + 1, j)] = c(w, 0.0);
            }
        }
        Axis::Y => {
            for j in 0..n - 1 {
                let w = 0.5 * (((j + 1) * (n - 1 - j)) as f64).sqrt();
                h[(j, j + 1)] = c(0.0, w);
                h[(j + 1, j)] = c(0.0, -w);
            }
        }
        Axis::Z => {
            for k in 0..n {
                h[(k, k)] = c(k as f64 - 0.5 * (n as f64 - 1.0), 0.0);
            }
        }
    }
    SingleParticleHamiltonian::new(h)
}

/// Single-particle restriction of the chain Hamiltonian
/// `sum alpha_k/2 (X X + Y Y) + beta_k/2 (Y X - X Y) + sum delta_k Z`.
///
/// The hopping between linked nodes `(j, j+1)` is `alpha_j + i beta_j`; the
/// diagonal carries `sum(delta) - 2 delta_j`, which makes the restriction of
/// the dense evolution exact with no leftover global phase.
pub fn single_particle_hamiltonian(spec: &ChainSpec) -> SingleParticleHamiltonian {
    let n = spec.n();
    let mut h = ComplexMatrix::zeros(n, n);
    for (idx, (a, b)) in spec.links().into_iter().enumerate() {
        let hop = c(spec.alpha[idx], spec.beta[idx]);
        h[(a, b)] += hop;
        h[(b, a)] += hop.conj();
    }
    let field_sum: f64 = spec.delta.iter().sum();
    for j in 0..n {
        h[(j, j)] += c(field_sum - 2.0 * spec.delta[j], 0.0);
    }
    SingleParticleHamiltonian::new(h).expect("Hermitian by construction")
}

fn binomial(n: usize, k: usize) -> f64 {
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * ((n - i) as f64) / ((i + 1) as f64);
    }
    acc
}

/// The `n × n` unitary induced on the degree-`(n-1)` polynomial basis
/// `p_k = sqrt(C(n-1, k)) alpha^k beta^{n-1-k}` by a 2×2 unitary acting on
/// `(alpha, beta)`.
///
/// Computed by exact binomial expansion of the substituted monomials, so
/// `spin_rotation_matrix(VW) = spin_rotation_matrix(V) * spin_rotation_matrix(W)`
/// and `spin_rotation_matrix(exp(-i sigma_x t/2), n)` reproduces the
/// perfect-transfer evolution `exp(-i H^x t)`.
pub fn spin_rotation_matrix(v: &ComplexMatrix, n: usize) -> Result<ComplexMatrix> {
    if v.rows() != 2 || v.cols() != 2 {
        return Err(Error::Shape {
            context: "spin_rotation_matrix",
            rows: v.rows(),
            cols: v.cols(),
        });
    }
    let dev = v.unitary_deviation();
    if dev > tol::POSTCONDITION {
        return Err(Error::NotUnitary { deviation: dev });
    }
    if n == 0 {
        return Err(Error::IndexOutOfRange {
            context: "spin_rotation_matrix: dimension",
            index: 0,
            bound: 1,
        });
    }
    let deg = n - 1;
    // Powers of the four entries up to the polynomial degree.
    let pow = |z: Complex64| -> Vec<Complex64> {
        let mut acc = Vec::with_capacity(deg + 1);
        acc.push(c(1.0, 0.0));
        for i in 0..deg {
            let next = acc[i] * z;
            acc.push(next);
        }
        acc
    };
    let (p11, p21) = (pow(v.get(0, 0)), pow(v.get(1, 0)));
    let (p12, p22) = (pow(v.get(0, 1)), pow(v.get(1, 1)));

    let mut m = ComplexMatrix::zeros(n, n);
    for k in 0..n {
        // (V e1)^k (V e2)^{deg-k} expanded over monomials e1^j e2^{deg-j}.
        for a in 0..=k {
            let ca = binomial(k, a);
            let left = p11[a] * p21[k - a];
            for b in 0..=(deg - k) {
                let j = a + b;
                let cb = binomial(deg - k, b);
                let right = p12[b] * p22[deg - k - b];
                let weight = (binomial(deg, k) / binomial(deg, j)).sqrt();
                m[(j, k)] += left * right * c(ca * cb * weight, 0.0);
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::expm_hermitian;
    use core::f64::consts::PI;

    #[test]
    fn adjacency_linear_three() {
        let h = adjacency_hamiltonian(Topology::Linear, 3).unwrap();
        let expect =
            ComplexMatrix::from_real(3, 3, &[0., 1., 0., 1., 0., 1., 0., 1., 0.]).unwrap();
        assert!(h.matrix().max_abs_diff(&expect) < 1e-15);
    }

    #[test]
    fn adjacency_ring_three() {
        let h = adjacency_hamiltonian(Topology::Ring, 3).unwrap();
        let expect =
            ComplexMatrix::from_real(3, 3, &[0., 1., 1., 1., 0., 1., 1., 1., 0.]).unwrap();
        assert!(h.matrix().max_abs_diff(&expect) < 1e-15);
    }

    #[test]
    fn adjacency_ring_two_doubles_the_edge() {
        let ring = adjacency_hamiltonian(Topology::Ring, 2).unwrap();
        assert_eq!(ring.matrix().get(0, 1), c(2.0, 0.0));
        let linear = adjacency_hamiltonian(Topology::Linear, 2).unwrap();
        assert_eq!(linear.matrix().get(0, 1), c(1.0, 0.0));
        assert!(adjacency_hamiltonian(Topology::Linear, 1).is_err());
    }

    #[test]
    fn perfect_transfer_x_couplings() {
        let h = perfect_transfer_hamiltonian(4, Axis::X).unwrap();
        let m = h.matrix();
        let root3_half = 0.5 * 3.0f64.sqrt();
        assert!((m.get(0, 1).re - root3_half).abs() < 1e-12);
        assert!((m.get(1, 2).re - 1.0).abs() < 1e-12);
        assert!((m.get(2, 3).re - root3_half).abs() < 1e-12);

        let h2 = perfect_transfer_hamiltonian(2, Axis::X).unwrap();
        assert_eq!(h2.matrix().get(0, 1), c(0.5, 0.0));
        assert_eq!(h2.matrix().get(1, 0), c(0.5, 0.0));
    }

    #[test]
    fn perfect_transfer_z_diagonal() {
        let h = perfect_transfer_hamiltonian(3, Axis::Z).unwrap();
        for (k, expect) in [-1.0, 0.0, 1.0].into_iter().enumerate() {
            assert_eq!(h.matrix().get(k, k), c(expect, 0.0));
        }
    }

    #[test]
    fn perfect_transfer_at_pi_for_x_and_y() {
        for axis in [Axis::X, Axis::Y] {
            for n in 2..=8 {
                let h = perfect_transfer_hamiltonian(n, axis).unwrap();
                let u = expm_hermitian(h.matrix(), PI).unwrap();
                let amp = u.get(n - 1, 0).norm();
                assert!(
                    (amp - 1.0).abs() < 1e-9,
                    "axis {axis:?} n {n}: transfer amplitude {amp}"
                );
            }
        }
    }

    #[test]
    fn z_admixture_spoils_transfer() {
        let n = 4;
        let hx = perfect_transfer_hamiltonian(n, Axis::X).unwrap();
        let hz = perfect_transfer_hamiltonian(n, Axis::Z).unwrap();
        let mixed = &hx.matrix().scale(c(1.0, 0.0)) + &hz.matrix().scale(c(0.5, 0.0));
        let mut best = 0.0f64;
        for i in 0..200 {
            let t = 4.0 * PI * (i as f64) / 200.0;
            let u = expm_hermitian(&mixed, t).unwrap();
            best = best.max(u.get(n - 1, 0).norm());
        }
        assert!(best < 1.0 - 1e-3, "max fidelity {best}");
    }

    #[test]
    fn chain_spec_arity_checks() {
        assert!(matches!(
            ChainSpec::linear(4, alloc::vec![1.0; 2], alloc::vec![0.0; 3], alloc::vec![0.0; 4]),
            Err(Error::CoefficientArity { name: "alpha", .. })
        ));
        assert!(ChainSpec::ring(4, alloc::vec![1.0; 4], alloc::vec![0.0; 4], alloc::vec![0.0; 4]).is_ok());
    }

    #[test]
    fn uniform_chain_restricts_to_adjacency() {
        let spec = ChainSpec::uniform_xy(5, Topology::Linear).unwrap();
        let h = single_particle_hamiltonian(&spec);
        let adj = adjacency_hamiltonian(Topology::Linear, 5).unwrap();
        assert!(h.matrix().max_abs_diff(adj.matrix()) < 1e-15);
    }

    #[test]
    fn field_only_chain_is_diagonal() {
        let spec = ChainSpec::linear(
            3,
            alloc::vec![0.0; 2],
            alloc::vec![0.0; 2],
            alloc::vec![0.3, -0.1, 0.7],
        )
        .unwrap();
        let h = single_particle_hamiltonian(&spec);
        let sum = 0.3 - 0.1 + 0.7;
        for j in 0..3 {
            for k in 0..3 {
                if j == k {
                    let expect = sum - 2.0 * spec.delta()[j];
                    assert!((h.matrix().get(j, j).re - expect).abs() < 1e-15);
                } else {
                    assert_eq!(h.matrix().get(j, k), c(0.0, 0.0));
                }
            }
        }
    }

    #[test]
    fn chiral_coupling_is_imaginary_hermitian() {
        let spec = ChainSpec::linear(
            3,
            alloc::vec![0.0, 0.0],
            alloc::vec![0.5, -0.25],
            alloc::vec![0.0; 3],
        )
        .unwrap();
        let h = single_particle_hamiltonian(&spec);
        assert_eq!(h.matrix().get(0, 1), c(0.0, 0.5));
        assert_eq!(h.matrix().get(1, 0), c(0.0, -0.5));
        assert!(h.matrix().is_hermitian(1e-15));
    }

    #[test]
    fn spin_rotation_identity() {
        let m = spin_rotation_matrix(&ComplexMatrix::identity(2), 4).unwrap();
        assert!(m.max_abs_diff(&ComplexMatrix::identity(4)) < 1e-14);
    }

    #[test]
    fn spin_rotation_not_gate_exchanges_ends() {
        let not = ComplexMatrix::from_real(2, 2, &[0., 1., 1., 0.]).unwrap();
        let m = spin_rotation_matrix(&not, 3).unwrap();
        let expect =
            ComplexMatrix::from_real(3, 3, &[0., 0., 1., 0., 1., 0., 1., 0., 0.]).unwrap();
        assert!(m.max_abs_diff(&expect) < 1e-14);
    }

    #[test]
    fn spin_rotation_matches_transfer_evolution() {
        let sx = ComplexMatrix::from_real(2, 2, &[0., 0.5, 0.5, 0.]).unwrap();
        for n in [2, 5, 8] {
            let hx = perfect_transfer_hamiltonian(n, Axis::X).unwrap();
            for t in [0.3, 1.0, PI] {
                let v = expm_hermitian(&sx, t).unwrap();
                let induced = spin_rotation_matrix(&v, n).unwrap();
                let direct = expm_hermitian(hx.matrix(), t).unwrap();
                assert!(
                    induced.max_abs_diff(&direct) < 1e-9,
                    "n {n} t {t}: {:.3e}",
                    induced.max_abs_diff(&direct)
                );
                assert!(induced.is_unitary(1e-10));
            }
        }
    }

    #[test]
    fn spin_rotation_is_a_homomorphism() {
        use crate::random::random_su2;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
        for _ in 0..5 {
            let v = random_su2(&mut rng);
            let w = random_su2(&mut rng);
            let lhs = spin_rotation_matrix(&(&v * &w), 6).unwrap();
            let rhs = &spin_rotation_matrix(&v, 6).unwrap() * &spin_rotation_matrix(&w, 6).unwrap();
            assert!(lhs.max_abs_diff(&rhs) < 1e-9);
        }
    }
}
