//! Interval estimation for a positive measurand observed with Gaussian noise.
//!
//! The library builds Neyman confidence intervals (belt inversion under a
//! choice of boundary policy for the positivity constraint) and Bayesian
//! credible intervals (truncated-Gaussian posterior under a uniform prior on
//! `[0, inf)`), and checks their long-run success rates with seeded Monte
//! Carlo experiments against independent analytic oracles.

pub mod bayes;
pub mod model;
pub mod montecarlo;
pub mod neyman;
pub mod oracle;
pub mod specfun;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("probability {0} outside the open interval (0, 1)")]
    InvalidProbability(f64),
    #[error("quantile constraint requires 0 < q_lo < q_hi < 1, got ({0}, {1})")]
    InvalidConstraint(f64, f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("root finder did not converge, residual {residual:e}")]
    NoConvergence { residual: f64 },
    #[error("quadrature tolerance {tol:e} not met, error estimate {estimate:e}")]
    QuadratureTolerance { tol: f64, estimate: f64 },
    #[error("resampling cap of {0} draws exhausted")]
    ResamplingCapExhausted(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
