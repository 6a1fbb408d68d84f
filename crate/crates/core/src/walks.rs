//! Coined (discrete) and continuous quantum walks on scalar chains and
//! rings.
//!
//! The coined walk on `n` positions runs on a scalar chain with `2n`
//! nodes: scalar node `2k + c` corresponds to coin value `c` and position
//! `k`. One step is `W = S2 S1 C`, where `S1` exchanges pairs `(2k, 2k+1)`,
//! `S2` exchanges `(2k+1, 2k+2)` and the coin acts on the same pairs as
//! `S1`. Scalar nodes are 0-based here, matching the modular arithmetic of
//! the shift operators; continuous walks use 1-based chain nodes.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::chains::SingleParticleHamiltonian;
use crate::error::{Error, Result};
use crate::linalg::{expm_hermitian, ComplexMatrix};
use crate::tol;

/// Normalized amplitude vector over chain nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct SingleParticleState {
    amplitudes: Vec<Complex64>,
}

impl SingleParticleState {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq.sqrt() - 1.0).abs() > tol::POSTCONDITION {
            return Err(Error::DimensionMismatch {
                context: "SingleParticleState: not normalized",
                expected: 1,
                actual: 0,
            });
        }
        Ok(Self { amplitudes })
    }

    /// Basis state concentrated on 1-based node `k`.
    pub fn basis(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange {
                context: "SingleParticleState::basis",
                index: k,
                bound: n,
            });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); n];
        amplitudes[k - 1] = Complex64::new(1.0, 0.0);
        Ok(Self { amplitudes })
    }

    pub fn n(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|z| z.norm_sqr()).collect()
    }
}

/// Boundary handling for the coined walk's scalar chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// Shifts wrap modulo `2n`.
    Cyclic,
    /// The unpaired end nodes are fixed points of the modified exchange.
    Reflecting,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkKind {
    Coined,
    Continuous,
}

/// Initial condition of a walk.
#[derive(Debug, Clone, PartialEq)]
pub enum WalkInitial {
    /// Basis node: 0-based scalar node for coined walks, 1-based chain
    /// node for continuous walks.
    Node(usize),
    State(SingleParticleState),
}

/// Coined-walk configuration on `n` positions (a `2n`-node scalar chain).
#[derive(Debug, Clone)]
pub struct CoinedWalkConfig {
    pub n: usize,
    pub coin: ComplexMatrix,
    pub boundary: Boundary,
    pub steps: usize,
    pub initial: WalkInitial,
}

/// Continuous-walk configuration: repeated application of `exp(-iH tau)`.
#[derive(Debug, Clone)]
pub struct ContinuousWalkConfig {
    pub hamiltonian: SingleParticleHamiltonian,
    pub tau: f64,
    pub steps: usize,
    pub initial: WalkInitial,
}

#[derive(Debug, Clone)]
pub enum WalkConfig {
    Coined(CoinedWalkConfig),
    Continuous(ContinuousWalkConfig),
}

/// Map a scalar-chain node to its `(coin, position)` pair: `2k + c <-> (c, k)`.
pub fn scalar_to_coin(index: usize, n: usize) -> Result<(usize, usize)> {
    if index >= 2 * n {
        return Err(Error::IndexOutOfRange {
            context: "scalar_to_coin",
            index,
            bound: 2 * n - 1,
        });
    }
    Ok((index % 2, index / 2))
}

/// Inverse of [`scalar_to_coin`].
pub fn coin_to_scalar(c: usize, k: usize, n: usize) -> Result<usize> {
    if c > 1 || k >= n {
        return Err(Error::IndexOutOfRange {
            context: "coin_to_scalar",
            index: 2 * k + c,
            bound: 2 * n - 1,
        });
    }
    Ok(2 * k + c)
}

fn permutation_matrix(dim: usize, image: impl Fn(usize) -> usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(dim, dim);
    for j in 0..dim {
        m[(image(j), j)] = Complex64::new(1.0, 0.0);
    }
    m
}

/// The pair exchanges `S1: |2k> <-> |2k+1>` and `S2: |2k+1> <-> |2k+2>`.
///
/// With a reflecting boundary, `S2` leaves the unpaired end nodes `0` and
/// `2n-1` fixed; `S1` pairs every node either way.
pub fn exchange_operators(n: usize, boundary: Boundary) -> (ComplexMatrix, ComplexMatrix) {
    let dim = 2 * n;
    let s1 = permutation_matrix(dim, |j| j ^ 1);
    let s2 = match boundary {
        Boundary::Cyclic => permutation_matrix(dim, |j| {
            if j % 2 == 1 {
                (j + 1) % dim
            } else {
                (j + dim - 1) % dim
            }
        }),
        Boundary::Reflecting => permutation_matrix(dim, |j| {
            if j == 0 || j == dim - 1 {
                j
            } else if j % 2 == 1 {
                j + 1
            } else {
                j - 1
            }
        }),
    };
    (s1, s2)
}

/// Block-diagonal coin acting on the `S1` pairs `(2k, 2k+1)`.
pub fn coin_on_pairs(n: usize, coin: &ComplexMatrix) -> ComplexMatrix {
    let dim = 2 * n;
    let mut m = ComplexMatrix::zeros(dim, dim);
    for k in 0..n {
        for row in 0..2 {
            for col in 0..2 {
                m[(2 * k + row, 2 * k + col)] = coin.get(row, col);
            }
        }
    }
    m
}

/// One step of the coined walk as a `2n x 2n` unitary: `W = S2 S1 C`.
pub fn coined_step_operator(
    n: usize,
    coin: &ComplexMatrix,
    boundary: Boundary,
) -> Result<ComplexMatrix> {
    if n < 2 {
        return Err(Error::IndexOutOfRange {
            context: "coined_step_operator",
            index: n,
            bound: 2,
        });
    }
    if coin.rows() != 2 || coin.cols() != 2 {
        return Err(Error::Shape {
            context: "coined_step_operator",
            rows: coin.rows(),
            cols: coin.cols(),
        });
    }
    let dev = coin.unitary_deviation();
    if dev > tol::POSTCONDITION {
        return Err(Error::NotUnitary { deviation: dev });
    }
    let (s1, s2) = exchange_operators(n, boundary);
    let c = coin_on_pairs(n, coin);
    Ok(&s2 * &(&s1 * &c))
}

/// Per-step view of a coined walk in coin-position indexing.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinPositionStep {
    /// Probability at `(c = 0, k)` for each position `k`.
    pub coin0: Vec<f64>,
    /// Probability at `(c = 1, k)`.
    pub coin1: Vec<f64>,
    /// Position marginal `coin0 + coin1`.
    pub position: Vec<f64>,
}

/// Walk output: one probability distribution per step, step 0 being the
/// initial state. Coined walks also report the coin-position view.
#[derive(Debug, Clone)]
pub struct WalkOutput {
    pub node_probabilities: Vec<Vec<f64>>,
    pub coin_position: Option<Vec<CoinPositionStep>>,
}

fn resolve_initial(initial: &WalkInitial, dim: usize, one_based: bool) -> Result<Vec<Complex64>> {
    match initial {
        WalkInitial::Node(node) => {
            let index = if one_based {
                if *node == 0 || *node > dim {
                    return Err(Error::IndexOutOfRange {
                        context: "walk initial node",
                        index: *node,
                        bound: dim,
                    });
                }
                node - 1
            } else {
                if *node >= dim {
                    return Err(Error::IndexOutOfRange {
                        context: "walk initial node",
                        index: *node,
                        bound: dim - 1,
                    });
                }
                *node
            };
            let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
            amplitudes[index] = Complex64::new(1.0, 0.0);
            Ok(amplitudes)
        }
        WalkInitial::State(state) => {
            if state.n() != dim {
                return Err(Error::DimensionMismatch {
                    context: "walk initial state",
                    expected: dim,
                    actual: state.n(),
                });
            }
            Ok(state.amplitudes().to_vec())
        }
    }
}

/// Run a walk and emit the node probability distribution at every step
/// `s = 0..=steps`.
pub fn run_walk(config: &WalkConfig) -> Result<WalkOutput> {
    match config {
        WalkConfig::Coined(cfg) => {
            let dim = 2 * cfg.n;
            let w = coined_step_operator(cfg.n, &cfg.coin, cfg.boundary)?;
            let mut psi = resolve_initial(&cfg.initial, dim, false)?;
            let mut node_probabilities = Vec::with_capacity(cfg.steps + 1);
            let mut coin_view = Vec::with_capacity(cfg.steps + 1);
            for step in 0..=cfg.steps {
                if step > 0 {
                    psi = w.matvec(&psi)?;
                }
                let probs: Vec<f64> = psi.iter().map(|z| z.norm_sqr()).collect();
                let mut coin0 = vec![0.0; cfg.n];
                let mut coin1 = vec![0.0; cfg.n];
                for (scalar, &p) in probs.iter().enumerate() {
                    let (c, k) = scalar_to_coin(scalar, cfg.n)?;
                    if c == 0 {
                        coin0[k] = p;
                    } else {
                        coin1[k] = p;
                    }
                }
                let position = coin0.iter().zip(&coin1).map(|(a, b)| a + b).collect();
                coin_view.push(CoinPositionStep {
                    coin0,
                    coin1,
                    position,
                });
                node_probabilities.push(probs);
            }
            Ok(WalkOutput {
                node_probabilities,
                coin_position: Some(coin_view),
            })
        }
        WalkConfig::Continuous(cfg) => {
            let n = cfg.hamiltonian.n();
            let u = expm_hermitian(cfg.hamiltonian.matrix(), cfg.tau)?;
            let mut psi = resolve_initial(&cfg.initial, n, true)?;
            let mut node_probabilities = Vec::with_capacity(cfg.steps + 1);
            for step in 0..=cfg.steps {
                if step > 0 {
                    psi = u.matvec(&psi)?;
                }
                node_probabilities.push(psi.iter().map(|z| z.norm_sqr()).collect());
            }
            Ok(WalkOutput {
                node_probabilities,
                coin_position: None,
            })
        }
    }
}
