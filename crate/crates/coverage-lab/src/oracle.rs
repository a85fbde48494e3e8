//! Analytic and quadrature ground truth for every success-rate curve the
//! Monte Carlo engine estimates.

use crate::bayes::TruncatedGaussianPosterior;
use crate::model::MeasurementModel;
use crate::neyman::{coverage_probability_given_x0, Interval, QuantileConstraint};
use crate::specfun::{std_normal_cdf, std_normal_quantile};
use crate::{Error, Result};

/// Tolerance and truncation for the quadrature routines. The 8-sigma
/// default cutoff leaves a tail mass below 1.3e-15.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub range_half_width: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-9,
            range_half_width: 8.0,
        }
    }
}

fn simpson(f: &impl Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
    let m = 0.5 * (a + b);
    let fm = f(m);
    (m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb))
}

#[allow(clippy::too_many_arguments)]
fn adaptive_step(
    f: &impl Fn(f64) -> f64,
    a: f64,
    fa: f64,
    b: f64,
    fb: f64,
    whole: f64,
    m: f64,
    fm: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let (lm, flm, left) = simpson(f, a, fa, m, fm);
    let (rm, frm, right) = simpson(f, m, fm, b, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::QuadratureTolerance {
            tol,
            estimate: delta.abs() / 15.0,
        });
    }
    let l = adaptive_step(f, a, fa, m, fm, left, lm, flm, 0.5 * tol, depth - 1)?;
    let r = adaptive_step(f, m, fm, b, fb, right, rm, frm, 0.5 * tol, depth - 1)?;
    Ok(l + r)
}

/// Adaptive Simpson quadrature of a smooth integrand.
pub fn adaptive_simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, abs_tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    // seed the recursion with a handful of panels so a locally flat
    // integrand cannot fool the first error estimate
    const SEED_PANELS: usize = 8;
    let h = (b - a) / SEED_PANELS as f64;
    let mut total = 0.0;
    for i in 0..SEED_PANELS {
        let (lo, hi) = (a + i as f64 * h, a + (i + 1) as f64 * h);
        let (flo, fhi) = (f(lo), f(hi));
        let (m, fm, whole) = simpson(&f, lo, flo, hi, fhi);
        total += adaptive_step(
            &f,
            lo,
            flo,
            hi,
            fhi,
            whole,
            m,
            fm,
            abs_tol / SEED_PANELS as f64,
            48,
        )?;
    }
    Ok(total)
}

/// Bisection with bracket auto-expansion for a continuous function with a
/// single sign change; `f` must be monotone near the root.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut flo = f(lo);
    let mut fhi = f(hi);
    let mut span = hi - lo;
    for _ in 0..64 {
        if flo * fhi <= 0.0 {
            break;
        }
        span *= 2.0;
        if flo.abs() < fhi.abs() {
            lo -= span;
            flo = f(lo);
        } else {
            hi += span;
            fhi = f(hi);
        }
    }
    if flo * fhi > 0.0 {
        return Err(Error::NoConvergence {
            residual: flo.abs().min(fhi.abs()),
        });
    }
    for _ in 0..200 {
        let m = 0.5 * (lo + hi);
        if m <= lo || m >= hi {
            break;
        }
        let fm = f(m);
        if flo * fm <= 0.0 {
            hi = m;
        } else {
            lo = m;
            flo = fm;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `Prob(a in [lo, hi] | x0)` for the Neyman interval built at `x0`:
/// closed-form posterior mass with endpoints clamped to the physical
/// region.
pub fn neyman_success_given_x0(
    model: &MeasurementModel,
    x0: f64,
    c: &QuantileConstraint,
) -> Result<f64> {
    let iv = crate::neyman::confidence_interval(
        model,
        x0,
        c,
        crate::neyman::BoundaryPolicy::AllowNegative,
    )?;
    Ok(coverage_probability_given_x0(model, &iv, x0))
}

/// Success probability of credible intervals on the fixed-measurand
/// sample space: the Gaussian measure of the datum values whose credible
/// interval contains `a0`.
///
/// The credible endpoints are monotone increasing in the datum, so the
/// containment region is a single interval `[x_lo, x_hi]` found by
/// root-finding the endpoint crossings; the measure is then a difference
/// of two normal CDF values.
#[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN too
pub fn willink_success_given_a(
    model: &MeasurementModel,
    a0: f64,
    c: &QuantileConstraint,
    _spec: &QuadratureSpec,
) -> Result<f64> {
    if !(a0 > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "measurand must be positive, got {a0}"
        )));
    }
    let u = model.u();
    // a0 lies in [q(q_lo|x), q(q_hi|x)]  <=>  F_a(a0|x) in [q_lo, q_hi];
    // F_a(a0|x) decreases in x, so the region is [x_lo, x_hi] with
    // F_a(a0|x_lo) = q_hi and F_a(a0|x_hi) = q_lo.
    let cdf_at = |x: f64| {
        TruncatedGaussianPosterior::new(x, u)
            .expect("u validated")
            .cdf(a0)
    };
    let x_lo = bisect(|x| cdf_at(x) - c.q_hi(), a0 - 2.0 * u, a0 + 2.0 * u)?;
    let x_hi = bisect(|x| cdf_at(x) - c.q_lo(), a0 - 2.0 * u, a0 + 2.0 * u)?;
    Ok(std_normal_cdf((x_hi - a0) / u) - std_normal_cdf((x_lo - a0) / u))
}

/// Cross-check for `willink_success_given_a`: fixed-step midpoint
/// integration of the sampling density times the containment indicator.
pub fn willink_success_indicator(
    model: &MeasurementModel,
    a0: f64,
    c: &QuantileConstraint,
    panels: u32,
    half_width: f64,
) -> Result<f64> {
    let u = model.u();
    let (lo, hi) = (a0 - half_width * u, a0 + half_width * u);
    let h = (hi - lo) / panels as f64;
    let mut total = 0.0;
    for i in 0..panels {
        let x = lo + (i as f64 + 0.5) * h;
        let iv = TruncatedGaussianPosterior::new(x, u)?.credible_interval(c)?;
        if iv.contains(a0) {
            total += model.sampling_pdf(x, a0) * h;
        }
    }
    Ok(total)
}

/// Confidence level of the rejection-inflated procedure: when samples
/// whose interval is entirely negative are thrown away, the success rate
/// becomes alpha / Prob(accept). For the default one-sigma constraint
/// this is `alpha / Phi(1 + a0/u)`; other constraints are integrated
/// numerically.
#[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN too
pub fn rejection_inflated_confidence(
    model: &MeasurementModel,
    a0: f64,
    c: &QuantileConstraint,
) -> Result<f64> {
    if !(a0 > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "measurand must be positive, got {a0}"
        )));
    }
    let u = model.u();
    let z_lo = std_normal_quantile(c.q_lo())?;
    let z_hi = std_normal_quantile(c.q_hi())?;
    // acceptance: interval upper end positive, i.e. x > u z(q_lo)
    let p_accept = 1.0 - std_normal_cdf(z_lo - a0 / u);
    let default = QuantileConstraint::central_one_sigma();
    if (c.q_lo() - default.q_lo()).abs() < 1e-12 && (c.q_hi() - default.q_hi()).abs() < 1e-12 {
        return Ok(c.alpha() / p_accept);
    }
    // containment: a0 in [x - u z_hi, x - u z_lo], an x-interval that for
    // a0 > 0 lies inside the acceptance region
    let lo = (a0 + u * z_lo).max(u * z_lo);
    let hi = a0 + u * z_hi;
    let joint = adaptive_simpson(|x| model.sampling_pdf(x, a0), lo, hi, 1e-12)?;
    Ok(joint / p_accept)
}

/// Numeric integral of the posterior density from 0 to `phi`; a test
/// oracle for the closed-form posterior CDF.
pub fn posterior_cdf_quadrature(
    x0: f64,
    u: f64,
    phi: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    if phi < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "phi must be nonnegative, got {phi}"
        )));
    }
    let posterior = TruncatedGaussianPosterior::new(x0, u)?;
    let hi = phi.min((x0 + spec.range_half_width * u).max(0.0));
    adaptive_simpson(|t| posterior.pdf(t), 0.0, hi, spec.abs_tol)
}

/// Posterior mass of an interval by quadrature, clamped to the physical
/// region; the crude-route counterpart of `coverage_probability_given_x0`.
pub fn interval_mass_quadrature(
    model: &MeasurementModel,
    iv: &Interval,
    x0: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let c = iv.clamp_nonnegative();
    let hi = posterior_cdf_quadrature(x0, model.u(), c.hi, spec)?;
    let lo = posterior_cdf_quadrature(x0, model.u(), c.lo, spec)?;
    Ok(hi - lo)
}
