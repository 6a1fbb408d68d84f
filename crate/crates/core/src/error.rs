//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

use crate::gates::GateClass;

pub type Result<T> = core::result::Result<T, Error>;

/// Validation and capacity errors.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A matrix had the wrong shape for the requested operation.
    Shape {
        context: &'static str,
        rows: usize,
        cols: usize,
    },
    /// Operand dimensions do not match.
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },
    /// Input expected to be Hermitian deviated from `M = M†`.
    NotHermitian { deviation: f64 },
    /// Input expected to be unitary deviated from `M†M = I`.
    NotUnitary { deviation: f64 },
    /// A 2×2 block expected in SU(2) has `det ≠ 1`.
    NotSpecialUnitary { det_deviation: f64 },
    /// A 4×4 matrix violates the matchgate zero pattern; `row`/`col` name
    /// the first offending entry (1-based).
    NotAMatchgate {
        row: usize,
        col: usize,
        magnitude: f64,
    },
    /// Matchgate pattern holds but the outer and inner block determinants
    /// differ (e.g. SWAP), so the matrix is not a matchgate.
    UnequalDeterminants { deviation: f64 },
    /// A 4×4 Hermitian matrix lies outside the span of the term basis.
    NotInTermBasis { residual: f64 },
    /// A gate required to be an admissible matchgate classified otherwise.
    NotAdmissible { class: GateClass },
    /// A 2n×2n rotation does not commute with the symplectic form J.
    NotSymplectic { deviation: f64 },
    /// Slater amplitudes connect only equal particle numbers.
    UnequalParticleNumber { m_in: usize, m_out: usize },
    /// An index fell outside its valid 1-based range.
    IndexOutOfRange {
        context: &'static str,
        index: usize,
        bound: usize,
    },
    /// A dense operation exceeded the qubit capacity cap.
    CapacityExceeded { n: usize, max: usize },
    /// Occupied-index lists must be strictly increasing and in range.
    InvalidOccupation { context: &'static str },
    /// Chain coefficient array has the wrong length.
    CoefficientArity {
        name: &'static str,
        expected: usize,
        actual: usize,
    },
    /// Two gates in one layer touch a common qubit.
    OverlappingLayer { position: usize },
    /// Unknown built-in gate name.
    UnknownGate { name: String },
    /// The Jacobi eigensolver failed to converge (should not happen for
    /// Hermitian input within capacity).
    NoConvergence { sweeps: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape {
                context,
                rows,
                cols,
            } => write!(f, "{context}: invalid shape {rows}x{cols}"),
            Error::DimensionMismatch {
                context,
                expected,
                actual,
            } => write!(
                f,
                "{context}: dimension mismatch (expected {expected}, got {actual})"
            ),
            Error::NotHermitian { deviation } => {
                write!(f, "matrix is not Hermitian (deviation {deviation:.3e})")
            }
            Error::NotUnitary { deviation } => {
                write!(f, "matrix is not unitary (deviation {deviation:.3e})")
            }
            Error::NotSpecialUnitary { det_deviation } => write!(
                f,
                "2x2 block is not in SU(2): |det - 1| = {det_deviation:.3e}"
            ),
            Error::NotAMatchgate {
                row,
                col,
                magnitude,
            } => write!(
                f,
                "not a matchgate: entry ({row},{col}) violates the pattern \
                 (magnitude {magnitude:.3e})"
            ),
            Error::UnequalDeterminants { deviation } => write!(
                f,
                "not a matchgate: outer and inner determinants differ by {deviation:.3e}"
            ),
            Error::NotInTermBasis { residual } => write!(
                f,
                "matrix lies outside the term basis span (residual {residual:.3e})"
            ),
            Error::NotAdmissible { class } => {
                write!(f, "gate is not an admissible matchgate (classified {class:?})")
            }
            Error::NotSymplectic { deviation } => write!(
                f,
                "rotation does not commute with J (deviation {deviation:.3e})"
            ),
            Error::UnequalParticleNumber { m_in, m_out } => write!(
                f,
                "amplitude between different particle numbers ({m_in} vs {m_out})"
            ),
            Error::IndexOutOfRange {
                context,
                index,
                bound,
            } => write!(f, "{context}: index {index} out of range 1..={bound}"),
            Error::CapacityExceeded { n, max } => {
                write!(f, "dense capacity exceeded: n = {n} > {max}")
            }
            Error::InvalidOccupation { context } => write!(
                f,
                "{context}: occupied indices must be strictly increasing and in range"
            ),
            Error::CoefficientArity {
                name,
                expected,
                actual,
            } => write!(
                f,
                "coefficient list `{name}` has length {actual}, expected {expected}"
            ),
            Error::OverlappingLayer { position } => write!(
                f,
                "layer contains overlapping gates around position {position}"
            ),
            Error::UnknownGate { name } => write!(f, "unknown gate `{name}`"),
            Error::NoConvergence { sweeps } => {
                write!(f, "eigensolver did not converge after {sweeps} sweeps")
            }
        }
    }
}

impl core::error::Error for Error {}
