//! Neyman confidence intervals for the Gaussian model, built by inverting
//! the confidence belt under a boundary policy for the positivity
//! constraint on the measurand.

use crate::bayes::TruncatedGaussianPosterior;
use crate::model::MeasurementModel;
use crate::specfun::{std_normal_cdf, std_normal_quantile};
use crate::{Error, Result};

/// A closed real interval, in units of `u`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        // negated form deliberately rejects NaN endpoints
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(lo <= hi) {
            return Err(Error::InvalidParameter(format!(
                "interval requires lo <= hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Interval { lo, hi })
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// Intersection with `[0, inf)`; a fully negative interval collapses
    /// to the degenerate `[0, 0]`.
    pub fn clamp_nonnegative(&self) -> Interval {
        Interval {
            lo: self.lo.max(0.0),
            hi: self.hi.max(0.0),
        }
    }
}

/// The pair of tail probabilities pinning an equal-tail interval; the
/// coverage is `q_hi - q_lo`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantileConstraint {
    q_lo: f64,
    q_hi: f64,
}

impl QuantileConstraint {
    pub fn new(q_lo: f64, q_hi: f64) -> Result<Self> {
        if !(0.0 < q_lo && q_lo < q_hi && q_hi < 1.0) {
            return Err(Error::InvalidConstraint(q_lo, q_hi));
        }
        Ok(QuantileConstraint { q_lo, q_hi })
    }

    /// Exact one-sigma tails (Phi(-1), Phi(1)), making the central
    /// interval exactly `[x0 - u, x0 + u]`.
    pub fn central_one_sigma() -> Self {
        let q_hi = std_normal_cdf(1.0);
        QuantileConstraint {
            q_lo: 1.0 - q_hi,
            q_hi,
        }
    }

    /// The tails rounded to two digits, (0.16, 0.84).
    pub fn rounded_one_sigma() -> Self {
        QuantileConstraint {
            q_lo: 0.16,
            q_hi: 0.84,
        }
    }

    pub fn q_lo(&self) -> f64 {
        self.q_lo
    }

    pub fn q_hi(&self) -> f64 {
        self.q_hi
    }

    pub fn alpha(&self) -> f64 {
        self.q_hi - self.q_lo
    }
}

impl Default for QuantileConstraint {
    fn default() -> Self {
        QuantileConstraint::central_one_sigma()
    }
}

/// How the construction treats the `a > 0` constraint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryPolicy {
    /// Negative (even entirely non-physical) intervals are legal outputs.
    AllowNegative,
    /// The raw interval is intersected with `[0, inf)`.
    ClipToZero,
    /// Below `threshold` (in units of u) switch to an upper limit
    /// `[0, hi]` with the upper tail probability held at `upper_tail`.
    FlipFlop { threshold: f64, upper_tail: f64 },
}

impl BoundaryPolicy {
    pub fn flip_flop_default() -> Self {
        BoundaryPolicy::FlipFlop {
            threshold: 1.0,
            upper_tail: 0.32,
        }
    }
}

/// The belt section at measurand `a`: `[x1(a), x2(a)]` with
/// `F_x(x1|a) = q_lo` and `F_x(x2|a) = q_hi`.
pub fn belt_bounds(model: &MeasurementModel, a: f64, c: &QuantileConstraint) -> Interval {
    let z_lo = std_normal_quantile(c.q_lo()).expect("constraint validated");
    let z_hi = std_normal_quantile(c.q_hi()).expect("constraint validated");
    Interval {
        lo: a + model.u() * z_lo,
        hi: a + model.u() * z_hi,
    }
}

/// Invert the belt at the observed datum `x0` under the given policy.
///
/// The raw (allow-negative) endpoints solve `F_x(x0|lo) = q_hi` and
/// `F_x(x0|hi) = q_lo`, which for the Gaussian is the closed form
/// `[x0 - u z(q_hi), x0 - u z(q_lo)]`.
pub fn confidence_interval(
    model: &MeasurementModel,
    x0: f64,
    c: &QuantileConstraint,
    policy: BoundaryPolicy,
) -> Result<Interval> {
    let z_lo = std_normal_quantile(c.q_lo())?;
    let z_hi = std_normal_quantile(c.q_hi())?;
    let raw = Interval {
        lo: x0 - model.u() * z_hi,
        hi: x0 - model.u() * z_lo,
    };
    match policy {
        BoundaryPolicy::AllowNegative => Ok(raw),
        BoundaryPolicy::ClipToZero => Ok(raw.clamp_nonnegative()),
        BoundaryPolicy::FlipFlop {
            threshold,
            upper_tail,
        } => {
            if !(upper_tail > 0.0 && upper_tail < 1.0) {
                return Err(Error::InvalidProbability(upper_tail));
            }
            if x0 / model.u() < threshold {
                // upper limit [0, hi] with F_x(x0|hi) = upper_tail
                let hi = x0 - model.u() * std_normal_quantile(upper_tail)?;
                Ok(Interval {
                    lo: 0.0,
                    hi: hi.max(0.0),
                })
            } else {
                Ok(raw)
            }
        }
    }
}

/// `Prob(a in iv | x0)` under the truncated-Gaussian posterior, with the
/// endpoints clamped to the physical region. An interval entirely below
/// zero has no posterior mass.
pub fn coverage_probability_given_x0(model: &MeasurementModel, iv: &Interval, x0: f64) -> f64 {
    let posterior = TruncatedGaussianPosterior::new(x0, model.u()).expect("u validated");
    let c = iv.clamp_nonnegative();
    posterior.cdf(c.hi) - posterior.cdf(c.lo)
}
