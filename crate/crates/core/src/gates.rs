//! Two-qubit gate algebra: matchgate composition and decomposition, the
//! seven-term Hamiltonian basis, gate classification and built-in gates.
//!
//! A matchgate splits into an outer 2×2 block `A` acting on
//! span{|00⟩, |11⟩} and an inner block `B` acting on span{|01⟩, |10⟩},
//! with equal determinants. Basis order throughout is |00⟩, |01⟩, |10⟩,
//! |11⟩.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{determinant, expm_hermitian, unitary_eig, ComplexMatrix};
use crate::tol;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Matchgate parameters: global phase `theta` and two SU(2) blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchgateParams {
    theta: f64,
    a: ComplexMatrix,
    b: ComplexMatrix,
}

impl MatchgateParams {
    /// Validates that both blocks are 2×2, unitary and of unit determinant.
    pub fn new(theta: f64, a: ComplexMatrix, b: ComplexMatrix) -> Result<Self> {
        for block in [&a, &b] {
            if block.rows() != 2 || block.cols() != 2 {
                return Err(Error::Shape {
                    context: "MatchgateParams",
                    rows: block.rows(),
                    cols: block.cols(),
                });
            }
            let dev = block.unitary_deviation();
            if dev > tol::POSTCONDITION {
                return Err(Error::NotUnitary { deviation: dev });
            }
            let det = determinant(block)?;
            let det_dev = (det - c(1.0, 0.0)).norm();
            if det_dev > tol::POSTCONDITION {
                return Err(Error::NotSpecialUnitary { det_deviation: det_dev });
            }
        }
        Ok(Self { theta, a, b })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn outer(&self) -> &ComplexMatrix {
        &self.a
    }

    pub fn inner(&self) -> &ComplexMatrix {
        &self.b
    }
}

/// Coefficients of a 4×4 Hamiltonian over the term basis
/// {I, Σ, Λ, Δ, Δ′, Θ, Σ′, Λ′}.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TermCoefficients {
    pub lambda0: f64,
    pub sigma: f64,
    pub lambda: f64,
    pub delta: f64,
    pub delta_p: f64,
    pub theta_t: f64,
    pub sigma_p: f64,
    pub lambda_p: f64,
}

impl TermCoefficients {
    /// Admissible generators carry no Σ′, Λ′ or Θ weight.
    pub fn is_admissible(&self, tolerance: f64) -> bool {
        self.sigma_p.abs() <= tolerance
            && self.lambda_p.abs() <= tolerance
            && self.theta_t.abs() <= tolerance
    }
}

/// Classification of a two-qubit unitary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateClass {
    /// Block-diagonal pattern with equal outer/inner determinants; the
    /// gates this crate can compress.
    AdmissibleMatchgate,
    /// Matchgate pattern with corner (Σ′/Λ′-type) mixing.
    GeneralMatchgate,
    /// Block-diagonal pattern but unequal determinants (e.g. SWAP).
    NumberPreserving,
    Other,
}

/// Σ = (X⊗X + Y⊗Y)/2.
pub fn sigma_term() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    m[(1, 2)] = c(1.0, 0.0);
    m[(2, 1)] = c(1.0, 0.0);
    m
}

/// Λ = (Y⊗X - X⊗Y)/2.
pub fn lambda_term() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    m[(1, 2)] = c(0.0, -1.0);
    m[(2, 1)] = c(0.0, 1.0);
    m
}

/// Δ = (Z⊗I - I⊗Z)/2.
pub fn delta_term() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    m[(1, 1)] = c(1.0, 0.0);
    m[(2, 2)] = c(-1.0, 0.0);
    m
}

/// Δ′ = (Z⊗I + I⊗Z)/2.
pub fn delta_prime_term() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    m[(0, 0)] = c(1.0, 0.0);
    m[(3, 3)] = c(-1.0, 0.0);
    m
}

/// Θ = (I - Z⊗Z)/2.
pub fn theta_term() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    m[(1, 1)] = c(1.0, 0.0);
    m[(2, 2)] = c(1.0, 0.0);
    m
}

/// Σ′ = (X⊗X - Y⊗Y)/2.
pub fn sigma_prime_term() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    m[(0, 3)] = c(1.0, 0.0);
    m[(3, 0)] = c(1.0, 0.0);
    m
}

/// Λ′ = (Y⊗X + X⊗Y)/2.
pub fn lambda_prime_term() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    m[(0, 3)] = c(0.0, -1.0);
    m[(3, 0)] = c(0.0, 1.0);
    m
}

/// Assemble `e^{iθ} M(A, B)`: `A` in the outer block (rows/cols 1 and 4),
/// `B` in the inner block (rows/cols 2 and 3).
pub fn compose_matchgate(p: &MatchgateParams) -> Result<ComplexMatrix> {
    let phase = Complex64::new(0.0, p.theta).exp();
    let (a, b) = (&p.a, &p.b);
    let mut g = ComplexMatrix::zeros(4, 4);
    g[(0, 0)] = a.get(0, 0);
    g[(0, 3)] = a.get(0, 1);
    g[(3, 0)] = a.get(1, 0);
    g[(3, 3)] = a.get(1, 1);
    g[(1, 1)] = b.get(0, 0);
    g[(1, 2)] = b.get(0, 1);
    g[(2, 1)] = b.get(1, 0);
    g[(2, 2)] = b.get(1, 1);
    Ok(g.scale(phase))
}

/// Indices (0-based) that must vanish for the matchgate pattern.
const PATTERN_ZEROS: [(usize, usize); 8] = [
    (0, 1),
    (0, 2),
    (1, 0),
    (2, 0),
    (1, 3),
    (2, 3),
    (3, 1),
    (3, 2),
];

fn check_pattern(g: &ComplexMatrix) -> Result<()> {
    for &(i, j) in &PATTERN_ZEROS {
        let mag = g.get(i, j).norm();
        if mag > tol::STRUCTURAL_ZERO {
            return Err(Error::NotAMatchgate {
                row: i + 1,
                col: j + 1,
                magnitude: mag,
            });
        }
    }
    Ok(())
}

fn outer_block(g: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::new(
        2,
        2,
        vec![g.get(0, 0), g.get(0, 3), g.get(3, 0), g.get(3, 3)],
    )
    .unwrap()
}

fn inner_block(g: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::new(
        2,
        2,
        vec![g.get(1, 1), g.get(1, 2), g.get(2, 1), g.get(2, 2)],
    )
    .unwrap()
}

/// Recover `(theta, A, B)` from a matchgate.
///
/// The phase convention is fixed by the round-trip contract
/// `compose_matchgate(decompose_matchgate(G)) = G`: theta is half the
/// principal argument of the outer-block determinant, so it lands in
/// `(-pi/2, pi/2]`.
pub fn decompose_matchgate(g: &ComplexMatrix) -> Result<MatchgateParams> {
    if g.rows() != 4 || g.cols() != 4 {
        return Err(Error::Shape {
            context: "decompose_matchgate",
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    let dev = g.unitary_deviation();
    if dev > tol::POSTCONDITION {
        return Err(Error::NotUnitary { deviation: dev });
    }
    check_pattern(g)?;
    let a = outer_block(g);
    let b = inner_block(g);
    let det_a = determinant(&a)?;
    let det_b = determinant(&b)?;
    let det_dev = (det_a - det_b).norm();
    if det_dev > tol::POSTCONDITION {
        return Err(Error::UnequalDeterminants { deviation: det_dev });
    }
    let theta = det_a.arg() / 2.0;
    let unphase = Complex64::new(0.0, -theta).exp();
    MatchgateParams::new(theta, a.scale(unphase), b.scale(unphase))
}

/// λ₀I + σΣ + λΛ + δΔ + δ′Δ′ + θ_TΘ + σ′Σ′ + λ′Λ′.
pub fn hamiltonian_from_terms(t: &TermCoefficients) -> ComplexMatrix {
    let mut h = ComplexMatrix::identity(4).scale(c(t.lambda0, 0.0));
    for (coeff, term) in [
        (t.sigma, sigma_term()),
        (t.lambda, lambda_term()),
        (t.delta, delta_term()),
        (t.delta_p, delta_prime_term()),
        (t.theta_t, theta_term()),
        (t.sigma_p, sigma_prime_term()),
        (t.lambda_p, lambda_prime_term()),
    ] {
        if coeff != 0.0 {
            h = &h + &term.scale(c(coeff, 0.0));
        }
    }
    h
}

/// Project a 4×4 Hermitian matrix onto the term basis.
///
/// Rejects matrices whose reconstruction residual exceeds the span
/// tolerance (the basis spans only the matchgate-pattern Hermitians).
pub fn terms_from_hamiltonian(h: &ComplexMatrix) -> Result<TermCoefficients> {
    if h.rows() != 4 || h.cols() != 4 {
        return Err(Error::Shape {
            context: "terms_from_hamiltonian",
            rows: h.rows(),
            cols: h.cols(),
        });
    }
    let dev = h.hermitian_deviation();
    if dev > tol::CONSTRUCTION {
        return Err(Error::NotHermitian { deviation: dev });
    }
    let lambda0 = (h.get(0, 0).re + h.get(3, 3).re) / 2.0;
    let coeffs = TermCoefficients {
        lambda0,
        sigma: h.get(1, 2).re,
        lambda: -h.get(1, 2).im,
        delta: (h.get(1, 1).re - h.get(2, 2).re) / 2.0,
        delta_p: (h.get(0, 0).re - h.get(3, 3).re) / 2.0,
        theta_t: (h.get(1, 1).re + h.get(2, 2).re) / 2.0 - lambda0,
        sigma_p: h.get(0, 3).re,
        lambda_p: -h.get(0, 3).im,
    };
    let residual = hamiltonian_from_terms(&coeffs).max_abs_diff(h);
    if residual > tol::SPAN_RESIDUAL {
        return Err(Error::NotInTermBasis { residual });
    }
    Ok(coeffs)
}

/// Classify a two-qubit unitary by its block pattern and determinants.
pub fn classify_gate(g: &ComplexMatrix) -> Result<GateClass> {
    if g.rows() != 4 || g.cols() != 4 {
        return Err(Error::Shape {
            context: "classify_gate",
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    let dev = g.unitary_deviation();
    if dev > tol::POSTCONDITION {
        return Err(Error::NotUnitary { deviation: dev });
    }
    if check_pattern(g).is_err() {
        return Ok(GateClass::Other);
    }
    let corners_vanish = g.get(0, 3).norm() <= tol::STRUCTURAL_ZERO
        && g.get(3, 0).norm() <= tol::STRUCTURAL_ZERO;
    let det_a = determinant(&outer_block(g))?;
    let det_b = determinant(&inner_block(g))?;
    let determinants_match = (det_a - det_b).norm() <= tol::POSTCONDITION;
    Ok(match (corners_vanish, determinants_match) {
        (true, true) => GateClass::AdmissibleMatchgate,
        (true, false) => GateClass::NumberPreserving,
        (false, true) => GateClass::GeneralMatchgate,
        (false, false) => GateClass::Other,
    })
}

/// Hermitian generator `H` with `G = exp(-iH)`, eigenphases on the
/// principal branch `(-pi, pi]`.
pub fn gate_generator(g: &ComplexMatrix) -> Result<ComplexMatrix> {
    let (phases, v) = unitary_eig(g)?;
    let n = g.rows();
    let mut w = v.clone();
    for j in 0..n {
        for i in 0..n {
            w[(i, j)] *= c(-phases[j], 0.0);
        }
    }
    Ok(&w * &v.adjoint())
}

/// Built-in gates: the exchange pair and the parametric admissible family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BuiltinGate {
    /// Spin exchange (SWAP). Number preserving but *not* a matchgate.
    Swap,
    /// Signed SWAP: exchange with a sign on |11⟩. An admissible matchgate.
    SignedSwap,
    /// `exp(-i angle Σ)`: XY rotation across the link.
    Xy(f64),
    /// `exp(-i angle Λ)`: chiral rotation across the link.
    Chiral(f64),
    /// `exp(-i (delta Δ + delta_p Δ′))`: local phases.
    PhaseZ(f64, f64),
}

impl BuiltinGate {
    pub fn matrix(&self) -> ComplexMatrix {
        match *self {
            BuiltinGate::Swap => {
                let mut m = ComplexMatrix::zeros(4, 4);
                m[(0, 0)] = c(1.0, 0.0);
                m[(1, 2)] = c(1.0, 0.0);
                m[(2, 1)] = c(1.0, 0.0);
                m[(3, 3)] = c(1.0, 0.0);
                m
            }
            BuiltinGate::SignedSwap => {
                let mut m = ComplexMatrix::zeros(4, 4);
                m[(0, 0)] = c(1.0, 0.0);
                m[(1, 2)] = c(1.0, 0.0);
                m[(2, 1)] = c(1.0, 0.0);
                m[(3, 3)] = c(-1.0, 0.0);
                m
            }
            BuiltinGate::Xy(angle) => expm_hermitian(&sigma_term(), angle).unwrap(),
            BuiltinGate::Chiral(angle) => expm_hermitian(&lambda_term(), angle).unwrap(),
            BuiltinGate::PhaseZ(delta, delta_p) => {
                let h = &delta_term().scale(c(delta, 0.0))
                    + &delta_prime_term().scale(c(delta_p, 0.0));
                expm_hermitian(&h, 1.0).unwrap()
            }
        }
    }

    /// Parse a gate expression: `swap`, `signed_swap`, `xy(0.5)`,
    /// `chiral(-1.2)` or `phase_z(0.1, 0.2)`.
    pub fn parse(text: &str) -> Result<BuiltinGate> {
        let text = text.trim();
        let unknown = || Error::UnknownGate {
            name: String::from(text),
        };
        match text {
            "swap" => return Ok(BuiltinGate::Swap),
            "signed_swap" => return Ok(BuiltinGate::SignedSwap),
            _ => {}
        }
        let (name, rest) = text.split_once('(').ok_or_else(unknown)?;
        let args = rest.strip_suffix(')').ok_or_else(unknown)?;
        let values: Vec<f64> = args
            .split(',')
            .map(|s| s.trim().parse::<f64>())
            .collect::<core::result::Result<_, _>>()
            .map_err(|_| unknown())?;
        match (name.trim(), values.as_slice()) {
            ("xy", [angle]) => Ok(BuiltinGate::Xy(*angle)),
            ("chiral", [angle]) => Ok(BuiltinGate::Chiral(*angle)),
            ("phase_z", [d, dp]) => Ok(BuiltinGate::PhaseZ(*d, *dp)),
            _ => Err(unknown()),
        }
    }
}

/// Spec'd entry point: build a named gate.
pub fn builtin_gate(name: &str) -> Result<ComplexMatrix> {
    Ok(BuiltinGate::parse(name)?.matrix())
}
