use thiserror::Error;

use crate::state::{Block, ValidationReport};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateError {
    #[error("diagonal entry rho_{index}{index} = {value} is negative")]
    NegativeDiagonal { index: usize, value: f64 },
    #[error("trace is {trace}, expected 1")]
    TraceNotOne { trace: f64 },
    #[error("{0} block violates positivity")]
    BlockPositivityViolated(Block),
    #[error("entry {0:?} is not finite")]
    NonFinite(&'static str),
    #[error("matrix is not X-shaped; offending entries (1-based): {0:?}")]
    NotXShaped(Vec<(usize, usize)>),
    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(Box<ValidationReport>),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EigenError {
    #[error("matrix is not Hermitian (residual {residual:e})")]
    NotHermitian { residual: f64 },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EntropyError {
    #[error("entropy index q = {0} must be positive and different from 1")]
    BadParameter(f64),
    #[error("probabilities do not form a distribution")]
    NotDistribution,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WernerError {
    #[error("(p, b) = ({p}, {b}) lies outside the state region")]
    OutOfRegion { p: f64, b: f64 },
    #[error("grid needs at least 2 steps per axis, got {p_steps}x{b_steps}")]
    BadGrid { p_steps: usize, b_steps: usize },
    #[error("scaled b-rule needs k > 0, got {0}")]
    BadRule(f64),
    #[error("bad sweep range: {0}")]
    BadRange(String),
}

/// Position-tagged failure while reading a matrix file or a flag value.
/// Lines and columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}
