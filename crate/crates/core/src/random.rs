//! Seeded random inputs for tests, verification runs and benchmarks.
//!
//! Everything here is deterministic given the caller's RNG; the CLI seeds a
//! ChaCha stream from `SPINCHAIN_SEED` so runs are reproducible.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;

use crate::chains::ChainSpec;
use crate::gates::{compose_matchgate, MatchgateParams};
use crate::linalg::{expm_hermitian, ComplexMatrix};
use crate::simulate::Circuit;

/// Random Hermitian matrix with entries of order one.
pub fn random_hermitian<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    let mut h = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        h[(i, i)] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
        for j in (i + 1)..n {
            let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            h[(i, j)] = z;
            h[(j, i)] = z.conj();
        }
    }
    h
}

/// Random unitary matrix (exponential of a random Hermitian generator).
pub fn random_unitary<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    let h = random_hermitian(rng, n);
    expm_hermitian(&h, 1.0).expect("random Hermitian generator")
}

/// Random SU(2) element, uniform on the 3-sphere of (alpha, beta) pairs.
pub fn random_su2<R: Rng>(rng: &mut R) -> ComplexMatrix {
    loop {
        let x: [f64; 4] = [
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ];
        let norm_sq: f64 = x.iter().map(|v| v * v).sum();
        if !(1e-6..=1.0).contains(&norm_sq) {
            continue;
        }
        let inv = 1.0 / norm_sq.sqrt();
        let alpha = Complex64::new(x[0] * inv, x[1] * inv);
        let beta = Complex64::new(x[2] * inv, x[3] * inv);
        // [[alpha, beta], [-conj(beta), conj(alpha)]]
        return ComplexMatrix::new(
            2,
            2,
            alloc::vec![alpha, beta, -beta.conj(), alpha.conj()],
        )
        .unwrap();
    }
}

/// Random matchgate parameters (theta plus two dense SU(2) blocks). The
/// composed gate is a *general* matchgate: the outer block mixes the
/// corners, so it does not preserve particle number.
pub fn random_matchgate_params<R: Rng>(rng: &mut R) -> MatchgateParams {
    let theta = rng.gen_range(-core::f64::consts::PI..core::f64::consts::PI);
    MatchgateParams::new(theta, random_su2(rng), random_su2(rng)).expect("random SU(2) blocks")
}

/// Random *admissible* matchgate parameters: the outer block is a diagonal
/// SU(2) element, which is exactly the number-preserving case.
pub fn random_admissible_matchgate_params<R: Rng>(rng: &mut R) -> MatchgateParams {
    let theta = rng.gen_range(-core::f64::consts::PI..core::f64::consts::PI);
    let phi = rng.gen_range(-core::f64::consts::PI..core::f64::consts::PI);
    let outer = ComplexMatrix::new(
        2,
        2,
        alloc::vec![
            Complex64::new(0.0, phi).exp(),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, -phi).exp(),
        ],
    )
    .unwrap();
    MatchgateParams::new(theta, outer, random_su2(rng)).expect("diagonal SU(2) block")
}

/// Random admissible two-qubit gate: exponential of a generator in the
/// span of the admissible term basis, so it has the block-diagonal pattern.
pub fn random_admissible_gate<R: Rng>(rng: &mut R) -> ComplexMatrix {
    use crate::gates::{hamiltonian_from_terms, TermCoefficients};
    let coeffs = TermCoefficients {
        lambda0: rng.gen_range(-1.0..1.0),
        sigma: rng.gen_range(-1.0..1.0),
        lambda: rng.gen_range(-1.0..1.0),
        delta: rng.gen_range(-1.0..1.0),
        delta_p: rng.gen_range(-1.0..1.0),
        ..TermCoefficients::default()
    };
    let h = hamiltonian_from_terms(&coeffs);
    expm_hermitian(&h, rng.gen_range(0.1..2.0)).expect("term basis is Hermitian")
}

/// Random admissible circuit on `n` qubits with `depth` layers, each layer a
/// Margolus-style set of non-overlapping nearest-neighbor matchgates.
pub fn random_admissible_circuit<R: Rng>(rng: &mut R, n: usize, depth: usize) -> Circuit {
    let mut circuit = Circuit::new(n);
    for layer_idx in 0..depth {
        let offset = if layer_idx % 2 == 0 { 1 } else { 2 };
        let mut layer = Vec::new();
        let mut k = offset;
        while k + 1 <= n {
            if rng.gen_bool(0.8) {
                let gate = if rng.gen_bool(0.5) {
                    compose_matchgate(&random_admissible_matchgate_params(rng)).unwrap()
                } else {
                    random_admissible_gate(rng)
                };
                layer.push((k, gate));
            }
            k += 2;
        }
        if !layer.is_empty() {
            circuit.push_layer(layer).expect("non-overlapping by construction");
        }
    }
    circuit
}

/// Random chain specification with couplings of order one.
pub fn random_chain_spec<R: Rng>(rng: &mut R, n: usize) -> ChainSpec {
    let links = n - 1;
    let alpha = (0..links).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let beta = (0..links).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let delta = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    ChainSpec::linear(n, alpha, beta, delta).expect("matching coefficient arities")
}
