//! Property-based invariants over randomly generated inputs.

use proptest::prelude::*;

use spinchain_core::clifford::{Pauli, PauliString};
use spinchain_core::gates::{
    classify_gate, compose_matchgate, decompose_matchgate, GateClass, MatchgateParams,
};
use spinchain_core::linalg::{determinant, expm_hermitian, ComplexMatrix};
use spinchain_core::simulate::FockBasisState;
use spinchain_core::walks::{coin_to_scalar, scalar_to_coin};
use spinchain_core::Complex64;

fn hermitian_strategy(n: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(-1.0f64..1.0, n * n).prop_map(move |raw| {
        let mut h = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            h[(i, i)] = Complex64::new(raw[i * n + i], 0.0);
            for j in (i + 1)..n {
                let z = Complex64::new(raw[i * n + j], raw[j * n + i]);
                h[(i, j)] = z;
                h[(j, i)] = z.conj();
            }
        }
        h
    })
}

fn su2_strategy() -> impl Strategy<Value = ComplexMatrix> {
    (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0)
        .prop_filter("nonzero quaternion", |(a, b, c, d)| {
            a * a + b * b + c * c + d * d > 1e-3
        })
        .prop_map(|(a, b, c, d)| {
            let inv = 1.0 / (a * a + b * b + c * c + d * d).sqrt();
            let alpha = Complex64::new(a * inv, b * inv);
            let beta = Complex64::new(c * inv, d * inv);
            ComplexMatrix::new(2, 2, vec![alpha, beta, -beta.conj(), alpha.conj()]).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expm_composes_additively(h in hermitian_strategy(5), s in -2.0f64..2.0, t in -2.0f64..2.0) {
        let us = expm_hermitian(&h, s).unwrap();
        let ut = expm_hermitian(&h, t).unwrap();
        let ust = expm_hermitian(&h, s + t).unwrap();
        prop_assert!((&us * &ut).max_abs_diff(&ust) < 1e-9);
        prop_assert!(us.adjoint().max_abs_diff(&expm_hermitian(&h, -s).unwrap()) < 1e-10);
        prop_assert!(us.is_unitary(1e-10));
    }

    #[test]
    fn determinant_multiplies(a in hermitian_strategy(4), b in hermitian_strategy(4)) {
        let da = determinant(&a).unwrap();
        let db = determinant(&b).unwrap();
        let dab = determinant(&(&a * &b)).unwrap();
        let scale = (da * db).norm().max(1.0);
        prop_assert!((dab - da * db).norm() / scale < 1e-8);
    }

    #[test]
    fn pauli_products_are_associative_with_unit_phases(
        letters in prop::collection::vec(0usize..4, 3),
    ) {
        let to_pauli = |idx: usize| match idx {
            0 => Pauli::I,
            1 => Pauli::X,
            2 => Pauli::Y,
            _ => Pauli::Z,
        };
        let n = 3;
        let strings: Vec<PauliString> = (0..3)
            .map(|i| PauliString::single(n, i + 1, to_pauli(letters[i])).unwrap())
            .collect();
        let left = strings[0].mul(&strings[1]).mul(&strings[2]);
        let right = strings[0].mul(&strings[1].mul(&strings[2]));
        prop_assert_eq!(left, right);
        // Phase stays in {1, i, -1, -i}.
        let product = strings[0].mul(&strings[1]);
        prop_assert!((product.phase().norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn matchgate_round_trip(theta in -3.0f64..3.0, a in su2_strategy(), b in su2_strategy()) {
        let params = MatchgateParams::new(theta, a, b).unwrap();
        let gate = compose_matchgate(&params).unwrap();
        let class = classify_gate(&gate).unwrap();
        prop_assert!(
            class == GateClass::AdmissibleMatchgate || class == GateClass::GeneralMatchgate
        );
        let recovered = decompose_matchgate(&gate).unwrap();
        let back = compose_matchgate(&recovered).unwrap();
        prop_assert!(back.max_abs_diff(&gate) < 1e-10);
    }

    #[test]
    fn fock_state_parity_matches_inversion_count(perm in Just(()).prop_flat_map(|_| {
        prop::collection::vec(1usize..=8, 2..=4).prop_filter("distinct", |v| {
            let mut sorted = v.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.len() == v.len()
        })
    })) {
        let (state, sign) = FockBasisState::from_unsorted(&perm).unwrap();
        let inversions = (0..perm.len())
            .flat_map(|i| ((i + 1)..perm.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        prop_assert_eq!(sign, if inversions % 2 == 0 { 1.0 } else { -1.0 });
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        prop_assert_eq!(state.occupied(), sorted.as_slice());
    }

    #[test]
    fn interleave_is_a_bijection(n in 2usize..16, index in 0usize..32) {
        prop_assume!(index < 2 * n);
        let (c, k) = scalar_to_coin(index, n).unwrap();
        prop_assert!(c < 2 && k < n);
        prop_assert_eq!(coin_to_scalar(c, k, n).unwrap(), index);
    }
}
