//! Error types shared by every module of the crate.

use crate::radial::CenterResult;
use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument computation received an operand whose modulus is at or
    /// below `eps_min`; the requested angle is ill-defined.
    #[error("operand modulus {modulus:e} is at or below eps_min {eps_min:e}; argument undefined")]
    NearZeroOperand { modulus: f64, eps_min: f64 },

    /// `sin(y ln 2)` vanished; the closed form for the first center is
    /// singular at this point. Fall back to the geometric intersection.
    #[error("sin(y ln 2) = {value:e} is below the singular guard; use the geometric route")]
    SingularPitch { value: f64 },

    /// A trigonometric factor of the step formula is below the guard; the
    /// step is formula-singular at this index.
    #[error("trigonometric factor {value:e} below 1e-12 at n = {n}; step formula singular")]
    SingularStep { n: u64, value: f64 },

    /// The tangent argument of the closed form sits within the guard of a
    /// multiple of pi. Bumping N by one always clears it.
    #[error("tangent argument within 1e-12 of a multiple of pi at N = {n}")]
    SingularTangent { n: u64 },

    /// The 2x2 intersection system is numerically degenerate.
    #[error("degenerate intersection system at n = {n}: |det| = {det:e}")]
    DegenerateSystem { n: u64, det: f64 },

    /// `1 - 2^(1-z)` vanished; the eta-to-zeta conversion has a pole here.
    #[error("|1 - 2^(1-z)| = {modulus:e}: too close to the eta pole line")]
    EtaPole { modulus: f64 },

    /// The iteration budget ran out before the requested tolerance was
    /// reached. Carries the best estimate produced so far.
    #[error("budget n_max = {n_max} exhausted; best tail bound {:e}", best.tail_bound)]
    BudgetExceeded { n_max: u64, best: CenterResult },

    /// The radicand of the sine induction formula is not positive.
    #[error("sine induction radicand {radicand:e} not positive at n = {n}")]
    NumericalBreakdown { n: u64, radicand: f64 },

    /// A zeros table could not be parsed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Ordinates in a zeros table must be strictly increasing.
    #[error("line {line}: ordinates must be strictly increasing")]
    Monotonicity { line: usize },

    /// An input violated a domain bound. The message names the bound.
    #[error("{0}")]
    Domain(String),

    /// I/O failure while reading or writing a table.
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
