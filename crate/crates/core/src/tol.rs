//! Centralized numerical tolerances.
//!
//! Every validation and post-condition check in the crate reads its
//! threshold from one [`Tolerances`] record so that no module carries
//! ad-hoc magic numbers.

/// Tolerance configuration shared by all modules.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Construction-time checks (Hermiticity of inputs, phase magnitudes,
    /// exact algebraic identities): `1e-12`.
    pub construction: f64,
    /// Post-condition checks (unitarity of results, reconstruction
    /// residuals, round trips): `1e-10`.
    pub postcondition: f64,
    /// Structural zeros of gate patterns: `1e-10` absolute.
    pub structural_zero: f64,
    /// Residual above which a matrix is rejected as outside a projection
    /// span: `1e-8`.
    pub span_residual: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        construction: 1e-12,
        postcondition: 1e-10,
        structural_zero: 1e-10,
        span_residual: 1e-8,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Construction-time tolerance, `1e-12`.
pub const CONSTRUCTION: f64 = Tolerances::DEFAULT.construction;
/// Post-condition tolerance, `1e-10`.
pub const POSTCONDITION: f64 = Tolerances::DEFAULT.postcondition;
/// Structural-zero tolerance for gate patterns, `1e-10`.
pub const STRUCTURAL_ZERO: f64 = Tolerances::DEFAULT.structural_zero;
/// Span-membership residual threshold, `1e-8`.
pub const SPAN_RESIDUAL: f64 = Tolerances::DEFAULT.span_residual;
