//! Seeded, reproducible Monte Carlo experiments for the success rates of
//! confidence and credible intervals under the two conditioning schemes.
//!
//! Trials are partitioned into fixed-size chunks, each bound to its own
//! counter-derived substream, and chunk counts are merged by summation, so
//! a report depends only on (seed, configuration) and never on how many
//! worker threads executed it.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;

use crate::bayes::TruncatedGaussianPosterior;
use crate::model::MeasurementModel;
use crate::neyman::{
    confidence_interval, coverage_probability_given_x0, BoundaryPolicy,
    QuantileConstraint,
};
use crate::oracle::{self, QuadratureSpec};
use crate::{Error, Result};

const CHUNK_SIZE: u64 = 1 << 16;

/// Default per-trial resampling cap for the rejection experiments.
pub const DEFAULT_RESAMPLE_CAP: u64 = 1_000_000;

/// A reproducible random stream: identical (seed, stream_id) pairs yield
/// identical variate sequences, and distinct stream ids are independent.
#[derive(Debug, Clone)]
pub struct RandomStream {
    seed: u64,
    stream_id: u64,
    rng: ChaCha8Rng,
}

impl RandomStream {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream_id);
        RandomStream {
            seed,
            stream_id,
            rng,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    /// A fresh stream with the same seed and an offset stream id.
    pub fn substream(&self, offset: u64) -> RandomStream {
        RandomStream::new(self.seed, self.stream_id.wrapping_add(offset))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform variate strictly inside (0, 1).
    pub fn next_uniform(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }
}

/// Outcome of a success-rate experiment, with the binomial standard error
/// and the matching analytic value when one is available.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ExperimentReport {
    pub n_trials: u64,
    pub n_success: u64,
    pub rate: f64,
    pub std_err: f64,
    pub analytic: Option<f64>,
}

impl ExperimentReport {
    pub fn from_counts(n_trials: u64, n_success: u64, analytic: Option<f64>) -> Self {
        let n = n_trials as f64;
        let rate = n_success as f64 / n;
        ExperimentReport {
            n_trials,
            n_success,
            rate,
            std_err: (rate * (1.0 - rate) / n).sqrt(),
            analytic,
        }
    }
}

/// Run `n` Bernoulli trials in fixed-size chunks bound to deterministic
/// substreams; the count is independent of scheduling and worker count.
fn run_chunked<F>(stream: &RandomStream, n: u64, per_trial: F) -> Result<u64>
where
    F: Fn(&mut RandomStream) -> Result<bool> + Sync,
{
    let n_chunks = n.div_ceil(CHUNK_SIZE);
    (0..n_chunks)
        .into_par_iter()
        .map(|k| {
            let mut rng = stream.substream(k);
            let trials = CHUNK_SIZE.min(n - k * CHUNK_SIZE);
            let mut successes = 0u64;
            for _ in 0..trials {
                if per_trial(&mut rng)? {
                    successes += 1;
                }
            }
            Ok(successes)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

fn check_trials(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n_trials must be >= 1".into()));
    }
    Ok(())
}

fn check_positive_measurand(a0: f64) -> Result<()> {
    if !(a0 > 0.0 && a0.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "measurand must be positive and finite, got {a0}"
        )));
    }
    Ok(())
}

/// Fixed-measurand coverage test: sample `x_i ~ N(a0, u^2)`, build a
/// confidence interval for each sample and count how often it contains
/// `a0`. With the allow-negative policy the expected rate is alpha.
pub fn run_fixed_measurand(
    model: &MeasurementModel,
    a0: f64,
    c: &QuantileConstraint,
    policy: BoundaryPolicy,
    n: u64,
    stream: &RandomStream,
) -> Result<ExperimentReport> {
    check_positive_measurand(a0)?;
    check_trials(n)?;
    let successes = run_chunked(stream, n, |rng| {
        let x = model.draw(a0, rng);
        let iv = confidence_interval(model, x, c, policy)?;
        Ok(iv.contains(a0))
    })?;
    let analytic = match policy {
        BoundaryPolicy::AllowNegative => Some(c.alpha()),
        _ => None,
    };
    Ok(ExperimentReport::from_counts(n, successes, analytic))
}

/// Variant that redraws the measurement until the (allow-negative)
/// interval is not entirely non-physical, inflating the confidence level
/// to alpha / Prob(accept).
pub fn run_fixed_measurand_rejecting_negative(
    model: &MeasurementModel,
    a0: f64,
    c: &QuantileConstraint,
    n: u64,
    cap: u64,
    stream: &RandomStream,
) -> Result<ExperimentReport> {
    check_positive_measurand(a0)?;
    check_trials(n)?;
    let successes = run_chunked(stream, n, |rng| {
        for _ in 0..cap {
            let x = model.draw(a0, rng);
            let iv = confidence_interval(model, x, c, BoundaryPolicy::AllowNegative)?;
            if iv.hi > 0.0 {
                return Ok(iv.contains(a0));
            }
        }
        Err(Error::ResamplingCapExhausted(cap))
    })?;
    let analytic = oracle::rejection_inflated_confidence(model, a0, c)?;
    Ok(ExperimentReport::from_counts(n, successes, Some(analytic)))
}

/// One accepted measurand value consistent with the datum `x0`, produced
/// by the shift construction: draw `x_i ~ N(a_seed, u^2)`, shift to
/// `a_i = a_seed + x0 - x_i`, reject negative values.
fn shift_sample(
    model: &MeasurementModel,
    x0: f64,
    a_seed: f64,
    cap: u64,
    rng: &mut RandomStream,
) -> Result<f64> {
    for _ in 0..cap {
        let x = model.draw(a_seed, rng);
        let a = a_seed + x0 - x;
        if a >= 0.0 {
            return Ok(a);
        }
    }
    Err(Error::ResamplingCapExhausted(cap))
}

/// Fixed-result test of the credible interval: one interval is built from
/// `x0` and tested against measurand values sampled by the shift
/// construction. The expected rate is alpha, whatever `a_seed` is.
pub fn run_fixed_result(
    model: &MeasurementModel,
    x0: f64,
    c: &QuantileConstraint,
    a_seed: f64,
    n: u64,
    cap: u64,
    stream: &RandomStream,
) -> Result<ExperimentReport> {
    check_trials(n)?;
    let posterior = TruncatedGaussianPosterior::new(x0, model.u())?;
    let interval = posterior.credible_interval(c)?;
    let successes = run_chunked(stream, n, |rng| {
        let a = shift_sample(model, x0, a_seed, cap, rng)?;
        Ok(interval.contains(a))
    })?;
    Ok(ExperimentReport::from_counts(n, successes, Some(c.alpha())))
}

/// Fixed-result test of the Neyman interval: the same shift sampler, but
/// containment is tested against the single confidence interval built
/// from `x0`. The analytic value is its posterior coverage given `x0`.
#[allow(clippy::too_many_arguments)]
pub fn run_fixed_result_neyman(
    model: &MeasurementModel,
    x0: f64,
    c: &QuantileConstraint,
    policy: BoundaryPolicy,
    a_seed: f64,
    n: u64,
    cap: u64,
    stream: &RandomStream,
) -> Result<ExperimentReport> {
    check_trials(n)?;
    let interval = confidence_interval(model, x0, c, policy)?;
    let analytic = coverage_probability_given_x0(model, &interval, x0);
    let successes = run_chunked(stream, n, |rng| {
        let a = shift_sample(model, x0, a_seed, cap, rng)?;
        Ok(interval.contains(a))
    })?;
    Ok(ExperimentReport::from_counts(n, successes, Some(analytic)))
}

/// Credible intervals tested on the fixed-measurand sample space: a new
/// interval per sampled datum, containment of the fixed `a0`. The
/// analytic value comes from the oracle quadrature.
pub fn run_willink(
    model: &MeasurementModel,
    a0: f64,
    c: &QuantileConstraint,
    n: u64,
    stream: &RandomStream,
) -> Result<ExperimentReport> {
    check_positive_measurand(a0)?;
    check_trials(n)?;
    let successes = run_chunked(stream, n, |rng| {
        let x = model.draw(a0, rng);
        let posterior = TruncatedGaussianPosterior::new(x, model.u())?;
        let iv = posterior.credible_interval(c)?;
        Ok(iv.contains(a0))
    })?;
    let analytic = oracle::willink_success_given_a(model, a0, c, &QuadratureSpec::default())?;
    Ok(ExperimentReport::from_counts(n, successes, Some(analytic)))
}

/// Joint draws `(a_i, x_i)` with `a_i` uniform on `[0, a_max]` and
/// `x_i ~ N(a_i, u^2)`, for the joint-distribution scatter data.
pub fn sample_joint(
    model: &MeasurementModel,
    n: u64,
    a_max: f64,
    stream: &RandomStream,
) -> Result<Vec<(f64, f64)>> {
    check_trials(n)?;
    if !(a_max > 0.0 && a_max.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "a_max must be positive and finite, got {a_max}"
        )));
    }
    let mut rng = stream.clone();
    Ok((0..n)
        .map(|_| {
            let a = a_max * rng.next_uniform();
            let x = model.draw(a, &mut rng);
            (a, x)
        })
        .collect())
}

/// `n` accepted shift-sampler draws, exposed so their distribution can be
/// compared against the posterior CDF.
pub fn shift_sampler_draws(
    model: &MeasurementModel,
    x0: f64,
    a_seed: f64,
    n: u64,
    cap: u64,
    stream: &RandomStream,
) -> Result<Vec<f64>> {
    let mut rng = stream.clone();
    (0..n)
        .map(|_| shift_sample(model, x0, a_seed, cap, &mut rng))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model() -> MeasurementModel {
        MeasurementModel::default()
    }

    fn c() -> QuantileConstraint {
        QuantileConstraint::default()
    }

    #[test]
    fn stream_reproducibility_and_independence() {
        let mut a = RandomStream::new(9, 4);
        let mut b = RandomStream::new(9, 4);
        let mut other = RandomStream::new(9, 5);
        let seq_a: Vec<u64> = (0..16).map(|_| a.next_u64()).collect();
        let seq_b: Vec<u64> = (0..16).map(|_| b.next_u64()).collect();
        let seq_o: Vec<u64> = (0..16).map(|_| other.next_u64()).collect();
        assert_eq!(seq_a, seq_b);
        assert_ne!(seq_a, seq_o);
    }

    #[test]
    fn uniform_stays_in_open_interval() {
        let mut rng = RandomStream::new(3, 0);
        for _ in 0..10_000 {
            let v = rng.next_uniform();
            assert!(v > 0.0 && v < 1.0);
        }
    }

    #[test]
    fn report_counts_are_consistent() {
        let r = ExperimentReport::from_counts(10_000, 6_827, None);
        assert!((r.rate - 0.6827).abs() < 1e-15);
        assert!((r.std_err - (0.6827_f64 * 0.3173 / 10_000.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn single_trial_is_bernoulli() {
        let r = run_fixed_measurand(
            &model(),
            2.0,
            &c(),
            BoundaryPolicy::AllowNegative,
            1,
            &RandomStream::new(1, 0),
        )
        .unwrap();
        assert!(r.rate == 0.0 || r.rate == 1.0);
    }

    #[test]
    fn fixed_measurand_matches_alpha() {
        let r = run_fixed_measurand(
            &model(),
            2.0,
            &c(),
            BoundaryPolicy::AllowNegative,
            200_000,
            &RandomStream::new(5, 0),
        )
        .unwrap();
        assert!((r.rate - c().alpha()).abs() < 4.0 * r.std_err, "rate {}", r.rate);
    }

    #[test]
    fn result_is_independent_of_worker_count() {
        let job = || {
            run_fixed_measurand(
                &model(),
                0.5,
                &c(),
                BoundaryPolicy::AllowNegative,
                300_000,
                &RandomStream::new(77, 0),
            )
            .unwrap()
        };
        let reports: Vec<ExperimentReport> = [1usize, 4, 8]
            .iter()
            .map(|&workers| {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(workers)
                    .build()
                    .unwrap()
                    .install(job)
            })
            .collect();
        assert_eq!(reports[0], reports[1]);
        assert_eq!(reports[0], reports[2]);
    }

    #[test]
    fn clip_rate_not_below_allow_negative_rate() {
        let m = model();
        let stream = RandomStream::new(21, 0);
        let allow = run_fixed_measurand(&m, 0.3, &c(), BoundaryPolicy::AllowNegative, 200_000, &stream)
            .unwrap();
        let clip = run_fixed_measurand(&m, 0.3, &c(), BoundaryPolicy::ClipToZero, 200_000, &stream)
            .unwrap();
        assert!(clip.rate >= allow.rate - 3.0 * allow.std_err);
        assert_eq!(clip.analytic, None);
    }

    #[test]
    fn fixed_result_invariant_in_a_seed() {
        let m = model();
        let mut rates = vec![];
        for (i, a_seed) in [0.1, 1.0, 7.0].iter().enumerate() {
            let r = run_fixed_result(
                &m,
                0.5,
                &c(),
                *a_seed,
                100_000,
                DEFAULT_RESAMPLE_CAP,
                &RandomStream::new(13, (i as u64) << 32),
            )
            .unwrap();
            assert!((r.rate - c().alpha()).abs() < 4.0 * r.std_err, "a_seed={a_seed}");
            rates.push((r.rate, r.std_err));
        }
        for w in rates.windows(2) {
            assert!((w[0].0 - w[1].0).abs() < 3.0 * (w[0].1 + w[1].1));
        }
    }

    #[test]
    fn fixed_result_neyman_fully_negative_interval_never_succeeds() {
        let r = run_fixed_result_neyman(
            &model(),
            -2.0,
            &c(),
            BoundaryPolicy::AllowNegative,
            1.0,
            50_000,
            DEFAULT_RESAMPLE_CAP,
            &RandomStream::new(2, 0),
        )
        .unwrap();
        assert_eq!(r.rate, 0.0);
        assert_eq!(r.analytic, Some(0.0));
    }

    #[test]
    fn joint_sample_properties() {
        let m = model();
        let pairs = sample_joint(&m, 100_000, 4.0, &RandomStream::new(8, 0)).unwrap();
        assert_eq!(pairs.len(), 100_000);
        let n = pairs.len() as f64;
        let mut sum = 0.0;
        let mut sum2 = 0.0;
        for &(a, x) in &pairs {
            assert!((0.0..=4.0).contains(&a));
            let d = x - a;
            sum += d;
            sum2 += d * d;
        }
        let mean = sum / n;
        let var = sum2 / n - mean * mean;
        assert!(mean.abs() < 4.0 / n.sqrt(), "mean {mean}");
        assert!((var - 1.0).abs() < 0.01, "var {var}");
    }

    #[test]
    fn preconditions_rejected() {
        let m = model();
        let s = RandomStream::new(0, 0);
        assert!(run_fixed_measurand(&m, -1.0, &c(), BoundaryPolicy::AllowNegative, 10, &s).is_err());
        assert!(run_fixed_measurand(&m, 1.0, &c(), BoundaryPolicy::AllowNegative, 0, &s).is_err());
        assert!(run_willink(&m, 0.0, &c(), 10, &s).is_err());
        assert!(sample_joint(&m, 10, 0.0, &s).is_err());
    }
}
