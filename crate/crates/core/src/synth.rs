//! Synthetic scenarios with a known common signal.
//!
//! `A` is a sine over a whole number of cycles. Each background is either a
//! cosine at half of `A`'s frequency or Gaussian white noise, mean-centered
//! and rescaled so its deviation is exactly `beta_j * |alpha_j| * sd(A)`.
//!
//! Noise comes from `ChaCha8Rng` seeded with `seed_from_u64`, which yields
//! the same stream on every platform.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Result, SignalError};
use crate::series::{self, Series};

pub const MIN_SAMPLES: usize = 16;
pub const DEFAULT_SAMPLES: usize = 10_000;
pub const DEFAULT_PERIODS: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BackgroundKind {
    /// Cosine with twice the period of `A`.
    DoublePeriodCosine,
    GaussianWhiteNoise,
}

/// Recipe for one synthetic scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioSpec {
    pub n: usize,
    /// Full sine cycles of `A` over the window.
    pub periods: f64,
    /// Signal strengths; the first is conventionally 1.
    pub alphas: Vec<f64>,
    pub betas: Vec<f64>,
    pub background_kinds: Vec<BackgroundKind>,
    pub seed: u64,
}

impl ScenarioSpec {
    /// The two-signal layout: cosine background on `S1`, white noise on `S2`.
    pub fn two_signal(alpha: f64, beta1: f64, beta2: f64, seed: u64) -> Self {
        Self {
            n: DEFAULT_SAMPLES,
            periods: DEFAULT_PERIODS,
            alphas: vec![1.0, alpha],
            betas: vec![beta1, beta2],
            background_kinds: vec![BackgroundKind::DoublePeriodCosine, BackgroundKind::GaussianWhiteNoise],
            seed,
        }
    }

    /// Three signals with `alpha_1 = 1` and white-noise backgrounds.
    pub fn three_signal(alpha2: f64, alpha3: f64, betas: [f64; 3], seed: u64) -> Self {
        Self {
            n: DEFAULT_SAMPLES,
            periods: DEFAULT_PERIODS,
            alphas: vec![1.0, alpha2, alpha3],
            betas: betas.to_vec(),
            background_kinds: vec![BackgroundKind::GaussianWhiteNoise; 3],
            seed,
        }
    }

    pub fn with_samples(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    pub fn with_periods(mut self, periods: f64) -> Self {
        self.periods = periods;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(SignalError::InvalidSpec(msg));
        if self.n < MIN_SAMPLES {
            return bad(format!("n must be at least {MIN_SAMPLES}, got {}", self.n));
        }
        if !(self.periods.is_finite() && self.periods > 0.0) {
            return bad(format!("periods must be positive, got {}", self.periods));
        }
        let k = self.alphas.len();
        if k < 2 || self.betas.len() != k || self.background_kinds.len() != k {
            return bad(format!(
                "need matching alphas/betas/kinds for at least 2 signals, got {}/{}/{}",
                k,
                self.betas.len(),
                self.background_kinds.len()
            ));
        }
        if let Some(a) = self.alphas.iter().find(|a| !a.is_finite() || **a == 0.0) {
            return bad(format!("alpha must be finite and nonzero, got {a}"));
        }
        if let Some(b) = self.betas.iter().find(|b| !(b.is_finite() && **b >= 0.0)) {
            return bad(format!("beta must be finite and >= 0, got {b}"));
        }
        Ok(())
    }
}

/// A generated scenario; `signals[j] = alphas[j] * a + backgrounds[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub a: Series,
    pub backgrounds: Vec<Series>,
    pub signals: Vec<Series>,
    pub spec: ScenarioSpec,
}

pub fn generate(spec: &ScenarioSpec) -> Result<Scenario> {
    spec.validate()?;
    let n = spec.n;
    let omega = 2.0 * std::f64::consts::PI * spec.periods / n as f64;
    let a = Series::new((0..n).map(|i| (omega * i as f64).sin()).collect())?;
    let sd_a = series::nonzero_std_dev(&a)
        .map_err(|_| SignalError::InvalidSpec(format!("{} cycles over {n} samples alias to a constant", spec.periods)))?;

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut backgrounds = Vec::with_capacity(spec.alphas.len());
    let mut signals = Vec::with_capacity(spec.alphas.len());
    for ((&alpha, &beta), &kind) in spec.alphas.iter().zip(&spec.betas).zip(&spec.background_kinds) {
        let raw: Vec<f64> = match kind {
            BackgroundKind::DoublePeriodCosine => (0..n).map(|i| (0.5 * omega * i as f64).cos()).collect(),
            BackgroundKind::GaussianWhiteNoise => (0..n).map(|_| StandardNormal.sample(&mut rng)).collect(),
        };
        let b = rescale(raw, beta * alpha.abs() * sd_a)?;
        let s = Series::linear_combination(&[(alpha, &a), (1.0, &b)])?;
        backgrounds.push(b);
        signals.push(s);
    }
    Ok(Scenario { a, backgrounds, signals, spec: spec.clone() })
}

fn rescale(raw: Vec<f64>, target_sd: f64) -> Result<Series> {
    if target_sd == 0.0 {
        return Series::new(vec![0.0; raw.len()]);
    }
    let raw = Series::new(raw)?;
    let m = raw.mean();
    let sd = series::nonzero_std_dev(&raw)?;
    Series::new(raw.iter().map(|x| (x - m) / sd * target_sd).collect())
}

/// Empirical correlations of a scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct Measurement {
    /// Correlation of each signal with the true `A`.
    pub gammas: Vec<f64>,
    /// `(i, j, gamma_ij)` for every pair `i < j`.
    pub pairwise: Vec<(usize, usize, f64)>,
}

impl Measurement {
    pub fn pair(&self, i: usize, j: usize) -> Option<f64> {
        let (i, j) = (i.min(j), i.max(j));
        self.pairwise.iter().find(|(a, b, _)| *a == i && *b == j).map(|p| p.2)
    }
}

pub fn measure(sc: &Scenario) -> Result<Measurement> {
    let gammas = sc
        .signals
        .iter()
        .map(|s| series::correlation(s, &sc.a))
        .collect::<Result<Vec<_>>>()?;
    let k = sc.signals.len();
    let mut pairwise = Vec::with_capacity(k * (k - 1) / 2);
    for i in 0..k {
        for j in i + 1..k {
            pairwise.push((i, j, series::correlation(&sc.signals[i], &sc.signals[j])?));
        }
    }
    Ok(Measurement { gammas, pairwise })
}
