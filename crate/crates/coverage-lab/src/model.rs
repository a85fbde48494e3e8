//! Gaussian measurement model: the sampling distribution of the datum
//! given the measurand, with everything expressed in units of the standard
//! uncertainty `u`.

use crate::montecarlo::RandomStream;
use crate::specfun::{erfc, std_normal_pdf, std_normal_quantile, SQRT_2};
use crate::{Error, Result};

/// Measurement model `x ~ N(a, u^2)` for measurand value `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementModel {
    u: f64,
}

impl Default for MeasurementModel {
    fn default() -> Self {
        MeasurementModel { u: 1.0 }
    }
}

impl MeasurementModel {
    pub fn new(u: f64) -> Result<Self> {
        if !(u > 0.0 && u.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "standard uncertainty must be positive and finite, got {u}"
            )));
        }
        Ok(MeasurementModel { u })
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    /// Density of the datum at `x` given measurand `a`.
    pub fn sampling_pdf(&self, x: f64, a: f64) -> f64 {
        std_normal_pdf((x - a) / self.u) / self.u
    }

    /// Cumulative of the datum, `erfc[(a - x)/(sqrt(2) u)]/2`.
    pub fn sampling_cdf(&self, x: f64, a: f64) -> f64 {
        0.5 * erfc((a - x) / (SQRT_2 * self.u))
    }

    /// Quantile of the datum distribution given measurand `a`.
    pub fn sampling_quantile(&self, p: f64, a: f64) -> Result<f64> {
        Ok(a + self.u * std_normal_quantile(p)?)
    }

    /// One variate `x ~ N(a, u^2)`, by inverse-CDF transform of a uniform
    /// draw so the sequence is an exact function of the stream state.
    pub fn draw(&self, a: f64, rng: &mut RandomStream) -> f64 {
        let p = rng.next_uniform();
        // p is strictly inside (0, 1), so the quantile cannot fail
        a + self.u * std_normal_quantile(p).expect("uniform draw in (0,1)")
    }
}
