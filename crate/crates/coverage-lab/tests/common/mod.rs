#![allow(dead_code)]

pub mod tables;

/// Two-sided Kolmogorov-Smirnov statistic of a sample against a CDF.
pub fn ks_statistic(sample: &mut [f64], cdf: impl Fn(f64) -> f64) -> f64 {
    sample.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = sample.len() as f64;
    let mut ks = 0.0_f64;
    for (i, &x) in sample.iter().enumerate() {
        let f = cdf(x);
        ks = ks.max(f - i as f64 / n);
        ks = ks.max((i + 1) as f64 / n - f);
    }
    ks
}

/// Asymptotic KS critical value at significance level `alpha`.
pub fn ks_critical(n: usize, alpha: f64) -> f64 {
    ((2.0 / alpha).ln() / 2.0).sqrt() / (n as f64).sqrt()
}
