//! Compressed classical simulation of qubit chains driven by nearest-neighbor
//! matchgates and XY-type Hamiltonians.
//!
//! A chain of `n` qubits evolving under number-preserving nearest-neighbor
//! matchgates (the *admissible* evolutions) never leaves the subspaces of
//! fixed particle number. Conjugation of the Jordan-Wigner ladder operators
//! by such an evolution is described by an `n × n` unitary *mode matrix*,
//! so state distribution along the chain can be simulated with `n`-dimensional
//! linear algebra instead of the full `2^n`-dimensional state vector.
//!
//! The crate is organized around that compression:
//!
//! - [`linalg`] — dense complex matrices, Hermitian eigendecomposition
//!   (cyclic Jacobi), unitary matrix exponentials and determinants;
//! - [`gates`] — two-qubit matchgate algebra: composition, decomposition,
//!   the seven-term Hamiltonian basis and gate classification;
//! - [`clifford`] — Jordan-Wigner generators, ladder operators, the J
//!   element and the OSp(2n) ↔ U(n) correspondence;
//! - [`chains`] — chain Hamiltonian constructors (adjacency, perfect state
//!   transfer, XY + chiral + field couplings);
//! - [`walks`] — coined and continuous quantum walks on scalar chains;
//! - [`simulate`] — the compressed engine: compile circuits/Hamiltonians to
//!   mode matrices, evolve states, occupation probabilities and Slater
//!   amplitudes;
//! - [`oracle`] — the dense `2^n` brute-force simulator used as ground truth;
//! - [`random`] — seeded generators for random gates, circuits and chains.
//!
//! The default `std` feature only affects the float backend; the crate is
//! `no_std`-compatible (with `alloc`) when built with
//! `--no-default-features`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod chains;
pub mod clifford;
pub mod error;
pub mod gates;
pub mod linalg;
pub mod oracle;
pub mod random;
pub mod simulate;
pub mod tol;
pub mod walks;

pub use error::{Error, Result};
pub use linalg::ComplexMatrix;
pub use num_complex::Complex64;
