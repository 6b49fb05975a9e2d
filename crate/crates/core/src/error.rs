//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Input violates a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Argument lies outside the admissible domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A quadrature routine could not reach the requested tolerance.
    #[error("quadrature failed on [{lo}, {hi}]: {reason}")]
    Quadrature { lo: f64, hi: f64, reason: String },
    /// Generic numerical failure (overflow, lost bracket, NaN).
    #[error("numeric failure: {0}")]
    Numeric(String),
    /// A limit or an iteration did not stabilize.
    #[error("no convergence: {0}")]
    NonConvergence(String),
    /// Damped Newton ran out of step reductions.
    #[error("Newton stagnated at iteration {iteration} (scaled residual {residual:e})")]
    NewtonStagnation {
        iteration: usize,
        residual: f64,
        /// Last iterate, for post-mortem inspection.
        iterate: Vec<f64>,
    },
    /// An iterate lost positivity where u^p or f(u) requires u >= 0.
    #[error("positivity lost at node {node} (u = {value:e})")]
    Positivity { node: usize, value: f64 },
    /// Monotone iteration left the sub/super-solution bracket.
    #[error("sub/super-solution bracket violated at iteration {0}")]
    Bracket(usize),
    /// Rate-fit window does not contain enough usable nodes.
    #[error("fit window error: {0}")]
    Window(String),
    /// Inconsistent configuration (declared vs computed quantities).
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
