//! Truncated-Gaussian posterior for a positive measurand under a uniform
//! prior on `[0, inf)`, with its CDF, quantile inversion, and equal-tail
//! credible intervals.

use crate::neyman::{Interval, QuantileConstraint};
use crate::specfun::{erfc, erfc_inv, std_normal_pdf, SQRT_2};
use crate::{Error, Result};

/// The post-data distribution of the measurand given the datum `x0`:
/// a Gaussian `N(x0, u^2)` restricted to `[0, inf)` and renormalized by
/// `erfc(-x0/(sqrt(2) u))/2`. Proper for every finite `x0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedGaussianPosterior {
    x0: f64,
    u: f64,
}

impl TruncatedGaussianPosterior {
    pub fn new(x0: f64, u: f64) -> Result<Self> {
        if !x0.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "measured value must be finite, got {x0}"
            )));
        }
        if !(u > 0.0 && u.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "standard uncertainty must be positive and finite, got {u}"
            )));
        }
        Ok(TruncatedGaussianPosterior { x0, u })
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    /// Mass of the untruncated Gaussian above zero, `erfc(-x0/(sqrt2 u))/2`.
    pub fn normalizer(&self) -> f64 {
        0.5 * erfc(-self.x0 / (SQRT_2 * self.u))
    }

    pub fn pdf(&self, phi: f64) -> f64 {
        if phi < 0.0 {
            return 0.0;
        }
        std_normal_pdf((phi - self.x0) / self.u) / (self.u * self.normalizer())
    }

    /// Posterior cumulative. Written as
    /// `1 - erfc[(phi-x0)/sqrt2] / erfc[-x0/sqrt2]` (in units of u), which
    /// is algebraically the erf form but stays accurate for very negative
    /// `x0`, where both erfc factors are tiny.
    pub fn cdf(&self, phi: f64) -> f64 {
        if phi < 0.0 {
            return 0.0;
        }
        let t = (phi - self.x0) / (SQRT_2 * self.u);
        let t0 = -self.x0 / (SQRT_2 * self.u);
        1.0 - erfc(t) / erfc(t0)
    }

    /// Quantile: the phi >= 0 with `cdf(phi) = q`. Closed form through the
    /// inverse complementary error function, polished by Newton steps.
    pub fn quantile(&self, q: f64) -> Result<f64> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::InvalidProbability(q));
        }
        let t0 = -self.x0 / (SQRT_2 * self.u);
        // cdf(phi) = q  <=>  erfc(t) = (1-q) erfc(t0)
        let target = (1.0 - q) * erfc(t0);
        let mut phi = (self.x0 + SQRT_2 * self.u * erfc_inv(target)?).max(0.0);
        for _ in 0..3 {
            let resid = self.cdf(phi) - q;
            if resid.abs() < 1e-13 {
                break;
            }
            let d = self.pdf(phi);
            if d <= 0.0 {
                break;
            }
            phi = (phi - resid / d).max(0.0);
        }
        Ok(phi)
    }

    /// Equal-tail credible interval `[quantile(q_lo), quantile(q_hi)]`.
    pub fn credible_interval(&self, c: &QuantileConstraint) -> Result<Interval> {
        let lo = self.quantile(c.q_lo())?;
        let hi = self.quantile(c.q_hi())?;
        Interval::new(lo, hi)
    }
}
