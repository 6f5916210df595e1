//! Common signal between two correlated signals.
//!
//! The forward model is `S1 = A + B1`, `S2 = alpha * A + B2` with `A`, `B1`,
//! `B2` mutually independent. `beta_j` is the ratio of the deviation of `B_j`
//! to that of the common part of `S_j`, and `sigma` is the deviation of `A`.
//!
//! Every extraction reports its weights in the `(S1, S2)` basis, so
//! `S_best = w1 * S1 + w2 * S2` regardless of which route produced it.
//!
//! Sign convention: `A` is oriented so that `S1` correlates positively with
//! it (`gamma1 >= 0`); the sign of `gamma2` then follows the sign of `gamma12`.

use crate::error::{Result, SignalError};
use crate::series::{self, Series};

/// Ground-truth parameters of the two-signal decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSignalModel {
    alpha: f64,
    beta1: f64,
    beta2: f64,
    sigma: f64,
}

impl TwoSignalModel {
    pub fn new(alpha: f64, beta1: f64, beta2: f64, sigma: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha == 0.0 {
            return Err(SignalError::InvalidModel(format!("alpha must be finite and nonzero, got {alpha}")));
        }
        if !(beta1.is_finite() && beta1 >= 0.0 && beta2.is_finite() && beta2 >= 0.0) {
            return Err(SignalError::InvalidModel(format!(
                "background strengths must be finite and >= 0, got ({beta1}, {beta2})"
            )));
        }
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(SignalError::InvalidModel(format!("sigma must be positive, got {sigma}")));
        }
        Ok(Self { alpha, beta1, beta2, sigma })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta1(&self) -> f64 {
        self.beta1
    }

    pub fn beta2(&self) -> f64 {
        self.beta2
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn sigma1(&self) -> f64 {
        (1.0 + self.beta1 * self.beta1).sqrt() * self.sigma
    }

    pub fn sigma2(&self) -> f64 {
        (1.0 + self.beta2 * self.beta2).sqrt() * self.alpha.abs() * self.sigma
    }
}

/// Correlations and deviations implied by a [`TwoSignalModel`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForwardCorrelations {
    pub gamma12: f64,
    pub gamma1: f64,
    pub gamma2: f64,
    pub sigma1: f64,
    pub sigma2: f64,
}

pub fn forward_correlations(m: &TwoSignalModel) -> ForwardCorrelations {
    let gamma1 = 1.0 / (1.0 + m.beta1 * m.beta1).sqrt();
    let gamma2 = m.alpha.signum() / (1.0 + m.beta2 * m.beta2).sqrt();
    ForwardCorrelations {
        gamma12: gamma1 * gamma2,
        gamma1,
        gamma2,
        sigma1: m.sigma1(),
        sigma2: m.sigma2(),
    }
}

/// Combination weights in the `(S1, S2)` basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Weights {
    pub w1: f64,
    pub w2: f64,
}

impl Weights {
    /// `chi1` of the construction `S1 - chi1 * (alpha * S1 - S2)`.
    pub fn chi1(&self) -> f64 {
        self.w2
    }

    /// `chi2` of the construction `S2 + chi2 * (alpha * S1 - S2)`, which equals
    /// `alpha * S_best`.
    pub fn chi2(&self) -> f64 {
        self.w1
    }

    /// Weights of `S1 - chi1 * (alpha * S1 - S2)`.
    pub fn from_chi1(alpha: f64, chi1: f64) -> Self {
        Self { w1: 1.0 - alpha * chi1, w2: chi1 }
    }

    pub fn apply(&self, s1: &Series, s2: &Series) -> Result<Series> {
        Series::linear_combination(&[(self.w1, s1), (self.w2, s2)])
    }
}

/// Outcome of a two-signal extraction.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtractionResult {
    pub weights: Weights,
    /// Present when the extraction ran on sampled series.
    pub s_best: Option<Series>,
    /// Predicted correlation of `S_best` with the common signal.
    pub gamma_best: f64,
    /// `gamma1`, `gamma2` implied by the extraction.
    pub gamma1: f64,
    pub gamma2: f64,
}

impl ExtractionResult {
    fn with_series(mut self, s1: &Series, s2: &Series) -> Result<Self> {
        self.s_best = Some(self.weights.apply(s1, s2)?);
        Ok(self)
    }
}

/// Optimal combination when the model is known.
pub fn optimal_weights(m: &TwoSignalModel) -> Result<ExtractionResult> {
    let b1 = m.beta1 * m.beta1;
    let b2 = m.beta2 * m.beta2;
    let total = b1 + b2;
    if total == 0.0 {
        return Err(SignalError::DegenerateModel);
    }
    let fwd = forward_correlations(m);
    Ok(ExtractionResult {
        weights: Weights { w1: b2 / total, w2: b1 / (total * m.alpha) },
        s_best: None,
        gamma_best: (total / (total + b1 * b2)).sqrt(),
        gamma1: fwd.gamma1,
        gamma2: fwd.gamma2,
    })
}

/// `alpha * S1 - S2`, which carries no common signal.
pub fn null_signal(m: &TwoSignalModel, s1: &Series, s2: &Series) -> Result<Series> {
    Series::linear_combination(&[(m.alpha, s1), (-1.0, s2)])
}

/// Correlation with `A` of `w1 * S1 + w2 * S2` under model `m`, in closed form.
pub fn predicted_extraction_correlation(m: &TwoSignalModel, w1: f64, w2: f64) -> Result<f64> {
    let common = w1 + w2 * m.alpha;
    let var = common * common
        + (w1 * m.beta1).powi(2)
        + (w2 * m.beta2 * m.alpha).powi(2);
    if var.is_nan() || var <= 0.0 {
        return Err(SignalError::DegenerateCombination);
    }
    Ok(common / var.sqrt())
}

/// The three measurable statistics of a signal pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairStatistics {
    gamma12: f64,
    sigma1: f64,
    sigma2: f64,
}

impl PairStatistics {
    pub fn new(gamma12: f64, sigma1: f64, sigma2: f64) -> Result<Self> {
        if !(gamma12.is_finite() && gamma12.abs() <= 1.0) {
            return Err(SignalError::InvalidModel(format!("|gamma12| must be <= 1, got {gamma12}")));
        }
        if !(sigma1.is_finite() && sigma1 > 0.0 && sigma2.is_finite() && sigma2 > 0.0) {
            return Err(SignalError::ZeroVariance);
        }
        Ok(Self { gamma12, sigma1, sigma2 })
    }

    /// Statistics a model would produce if measured exactly.
    pub fn from_model(m: &TwoSignalModel) -> Self {
        let f = forward_correlations(m);
        Self { gamma12: f.gamma12, sigma1: f.sigma1, sigma2: f.sigma2 }
    }

    pub fn gamma12(&self) -> f64 {
        self.gamma12
    }

    pub fn sigma1(&self) -> f64 {
        self.sigma1
    }

    pub fn sigma2(&self) -> f64 {
        self.sigma2
    }

    fn require_correlated(&self) -> Result<()> {
        if self.gamma12 == 0.0 {
            return Err(SignalError::NoCommonSignal);
        }
        Ok(())
    }

    /// `|gamma1|` clipped into `[|gamma12|, 1]` when it lies within rounding of it.
    fn admissible_gamma1(&self, gamma1: f64) -> Result<f64> {
        self.require_correlated()?;
        let g = gamma1.abs();
        let low = self.gamma12.abs();
        let slack = 4.0 * f64::EPSILON;
        if !g.is_finite() || g < low * (1.0 - slack) || g > 1.0 + slack {
            return Err(SignalError::OutOfRange { gamma1, low });
        }
        Ok(g.clamp(low, 1.0))
    }

    /// Model parameters implied by the statistics and a chosen `gamma1`.
    /// `sigma` is reported in units of `S1`.
    pub fn invert_model(&self, gamma1: f64) -> Result<TwoSignalModel> {
        let g1 = self.admissible_gamma1(gamma1)?;
        let g2 = (self.gamma12 / g1).clamp(-1.0, 1.0);
        let beta1_sq = (1.0 - g1) * (1.0 + g1) / (g1 * g1);
        let beta2_sq = (1.0 - g2.abs()) * (1.0 + g2.abs()) / (g2 * g2);
        let alpha = self.gamma12.signum() * g2.abs() * self.sigma2 / (g1 * self.sigma1);
        TwoSignalModel::new(alpha, beta1_sq.sqrt(), beta2_sq.sqrt(), g1 * self.sigma1)
    }

    /// Extraction with `gamma1` as the free parameter.
    pub fn parametric_weights(&self, gamma1: f64) -> Result<ExtractionResult> {
        let g1 = self.admissible_gamma1(gamma1)?;
        if self.gamma12.abs() == 1.0 {
            return Ok(ExtractionResult {
                weights: Weights { w1: 1.0, w2: 0.0 },
                s_best: None,
                gamma_best: 1.0,
                gamma1: 1.0,
                gamma2: self.gamma12,
            });
        }
        let g2 = (self.gamma12 / g1).clamp(-1.0, 1.0);
        let g1_sq = g1 * g1;
        let c = self.gamma12 * self.gamma12;
        // 1 - gamma1^2 and gamma1^2 - gamma12^2, factored to avoid cancellation
        let rest1 = (1.0 - g1) * (1.0 + g1);
        let excess = g1_sq * (1.0 - g2.abs()) * (1.0 + g2.abs());
        let denom = g1_sq * excess + c * rest1;
        if denom == 0.0 {
            // gamma1 = |gamma12| = 1 handled above; only reachable for gamma12 = 0
            return Err(SignalError::NoCommonSignal);
        }
        let w1 = g1_sq * excess / denom;
        let w2 = self.sigma1 / self.sigma2 * self.gamma12 * g1_sq * rest1 / denom;
        // 1 - gamma12^2 written as rest1 + excess so both routes share rounding
        let gamma_best_sq = denom / (g1_sq * (rest1 + excess));
        Ok(ExtractionResult {
            weights: Weights { w1, w2 },
            s_best: None,
            gamma_best: gamma_best_sq.sqrt().min(1.0),
            gamma1: g1,
            gamma2: g2,
        })
    }

    /// Extraction assuming both signals hold the same share of common signal:
    /// `S_best / sigma1 = (S1 / sigma1 + sgn(gamma12) * S2 / sigma2) / 2`.
    pub fn symmetric_weights(&self) -> Result<ExtractionResult> {
        self.require_correlated()?;
        let c = self.gamma12.abs();
        let g = c.sqrt();
        Ok(ExtractionResult {
            weights: Weights { w1: 0.5, w2: 0.5 * self.gamma12.signum() * self.sigma1 / self.sigma2 },
            s_best: None,
            gamma_best: (2.0 * c / (c + 1.0)).sqrt(),
            gamma1: g,
            gamma2: self.gamma12.signum() * g,
        })
    }
}

/// Two measured series together with their cached statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoSignalObservation {
    s1: Series,
    s2: Series,
    stats: PairStatistics,
}

impl TwoSignalObservation {
    pub fn new(s1: Series, s2: Series) -> Result<Self> {
        let gamma12 = series::correlation(&s1, &s2)?;
        let stats = PairStatistics::new(gamma12, series::nonzero_std_dev(&s1)?, series::nonzero_std_dev(&s2)?)?;
        Ok(Self { s1, s2, stats })
    }

    pub fn s1(&self) -> &Series {
        &self.s1
    }

    pub fn s2(&self) -> &Series {
        &self.s2
    }

    pub fn stats(&self) -> &PairStatistics {
        &self.stats
    }

    pub fn gamma12(&self) -> f64 {
        self.stats.gamma12
    }

    pub fn sigma1(&self) -> f64 {
        self.stats.sigma1
    }

    pub fn sigma2(&self) -> f64 {
        self.stats.sigma2
    }
}

pub fn invert_model(obs: &TwoSignalObservation, gamma1: f64) -> Result<TwoSignalModel> {
    obs.stats.invert_model(gamma1)
}

pub fn parametric_extract(obs: &TwoSignalObservation, gamma1: f64) -> Result<ExtractionResult> {
    obs.stats.parametric_weights(gamma1)?.with_series(&obs.s1, &obs.s2)
}

pub fn symmetric_extract(obs: &TwoSignalObservation) -> Result<ExtractionResult> {
    obs.stats.symmetric_weights()?.with_series(&obs.s1, &obs.s2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(alpha: f64, beta1: f64, beta2: f64) -> TwoSignalModel {
        TwoSignalModel::new(alpha, beta1, beta2, 1.0).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn forward_examples() {
        let f = forward_correlations(&model(2.0, 1.0, 1.0));
        assert!(close(f.gamma1, std::f64::consts::FRAC_1_SQRT_2, 1e-15));
        assert!(close(f.gamma12, 0.5, 1e-15));

        let f = forward_correlations(&model(1.0, 0.0, 0.0));
        assert_eq!((f.gamma12, f.gamma1, f.gamma2), (1.0, 1.0, 1.0));

        let f = forward_correlations(&model(-1.0, 0.0, 0.0));
        assert_eq!((f.gamma12, f.gamma1, f.gamma2), (-1.0, 1.0, -1.0));
    }

    #[test]
    fn model_rejects_bad_parameters() {
        assert!(TwoSignalModel::new(0.0, 1.0, 1.0, 1.0).is_err());
        assert!(TwoSignalModel::new(1.0, -0.1, 1.0, 1.0).is_err());
        assert!(TwoSignalModel::new(1.0, 1.0, 1.0, 0.0).is_err());
        assert!(TwoSignalModel::new(f64::NAN, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn optimal_examples() {
        let r = optimal_weights(&model(2.0, 1.0, 1.0)).unwrap();
        assert!(close(r.weights.chi1(), 0.25, 1e-15));
        assert!(close(r.gamma_best, (2.0_f64 / 3.0).sqrt(), 1e-15));

        // noiseless S2: S_best = S2 / alpha
        let r = optimal_weights(&model(-3.0, 0.7, 0.0)).unwrap();
        assert_eq!(r.weights.w1, 0.0);
        assert!(close(r.weights.w2, -1.0 / 3.0, 1e-15));
        assert_eq!(r.gamma_best, 1.0);

        // noiseless S1
        let r = optimal_weights(&model(5.0, 0.0, 1.3)).unwrap();
        assert_eq!(r.weights, Weights { w1: 1.0, w2: 0.0 });
        assert_eq!(r.gamma_best, 1.0);

        assert_eq!(optimal_weights(&model(2.0, 0.0, 0.0)), Err(SignalError::DegenerateModel));
    }

    #[test]
    fn chi_coordinates() {
        let m = model(2.0, 0.5, 2.0);
        let w = optimal_weights(&m).unwrap().weights;
        let b1 = 0.25;
        let b2 = 4.0;
        assert!(close(w.chi1(), b1 / (b1 + b2) / 2.0, 1e-15));
        assert!(close(w.chi2(), b2 / (b1 + b2), 1e-15));
        let back = Weights::from_chi1(m.alpha(), w.chi1());
        assert!(close(back.w1, w.w1, 1e-15) && close(back.w2, w.w2, 1e-15));
    }

    #[test]
    fn null_signal_examples() {
        let s1 = Series::new(vec![1.0, 0.0]).unwrap();
        let s2 = Series::new(vec![0.0, 1.0]).unwrap();
        let n = null_signal(&model(2.0, 1.0, 1.0), &s1, &s2).unwrap();
        assert_eq!(n.as_slice(), &[2.0, -1.0]);

        let n = null_signal(&model(1.0, 1.0, 1.0), &s1, &s1).unwrap();
        assert!(n.iter().all(|&x| x == 0.0));

        let short = Series::new(vec![0.0, 1.0, 2.0]).unwrap();
        assert_eq!(
            null_signal(&model(1.0, 1.0, 1.0), &s1, &short),
            Err(SignalError::LengthMismatch(2, 3))
        );
    }

    #[test]
    fn invert_example_roundtrips() {
        let stats = PairStatistics::new(0.4, 1.25_f64.sqrt(), 2.0 * 5.0_f64.sqrt()).unwrap();
        let m = stats.invert_model(0.8_f64.sqrt()).unwrap();
        assert!(close(m.alpha(), 2.0, 1e-12));
        assert!(close(m.beta1(), 0.5, 1e-12));
        assert!(close(m.beta2(), 2.0, 1e-12));
        assert!(close(m.sigma(), 1.0, 1e-12));

        let f = forward_correlations(&m);
        assert!(close(f.gamma12, 0.4, 1e-12));
        assert!(close(f.sigma1, stats.sigma1(), 1e-12));
        assert!(close(f.sigma2, stats.sigma2(), 1e-12));
    }

    #[test]
    fn invert_boundaries() {
        let stats = PairStatistics::new(-0.3, 2.0, 5.0).unwrap();
        let m = stats.invert_model(1.0).unwrap();
        assert_eq!(m.beta1(), 0.0);
        assert_eq!(m.sigma(), 2.0);
        assert!(m.alpha() < 0.0);

        let m = stats.invert_model(0.3).unwrap();
        assert_eq!(m.beta2(), 0.0);
        assert_eq!(forward_correlations(&m).gamma2, -1.0);
    }

    #[test]
    fn invert_errors() {
        let stats = PairStatistics::new(0.4, 1.0, 1.0).unwrap();
        assert!(matches!(stats.invert_model(0.39), Err(SignalError::OutOfRange { .. })));
        assert!(matches!(stats.invert_model(1.01), Err(SignalError::OutOfRange { .. })));
        let zero = PairStatistics::new(0.0, 1.0, 1.0).unwrap();
        assert_eq!(zero.invert_model(0.5), Err(SignalError::NoCommonSignal));
        assert_eq!(zero.parametric_weights(0.5).unwrap_err(), SignalError::NoCommonSignal);
    }

    #[test]
    fn parametric_examples() {
        let stats = PairStatistics::new(0.4, 1.25_f64.sqrt(), 2.0 * 5.0_f64.sqrt()).unwrap();

        let r = stats.parametric_weights(1.0).unwrap();
        assert_eq!(r.weights, Weights { w1: 1.0, w2: 0.0 });
        assert_eq!(r.gamma_best, 1.0);

        let r = stats.parametric_weights(0.8_f64.sqrt()).unwrap();
        let expected = (0.544_f64 / 0.672).sqrt();
        assert!(close(r.gamma_best, expected, 1e-12));
        let known = optimal_weights(&model(2.0, 0.5, 2.0)).unwrap();
        assert!(close(r.gamma_best, known.gamma_best, 1e-12));

        let sym = stats.symmetric_weights().unwrap();
        let r = stats.parametric_weights(0.4_f64.sqrt()).unwrap();
        assert!(close(r.gamma_best, sym.gamma_best, 1e-12));
        assert!(close(r.weights.w1, sym.weights.w1, 1e-12));
        assert!(close(r.weights.w2, sym.weights.w2, 1e-12));
    }

    #[test]
    fn parametric_perfect_correlation_returns_s1() {
        let stats = PairStatistics::new(-1.0, 1.0, 3.0).unwrap();
        let r = stats.parametric_weights(1.0).unwrap();
        assert_eq!(r.weights, Weights { w1: 1.0, w2: 0.0 });
        assert_eq!(r.gamma_best, 1.0);
        assert_eq!(r.gamma2, -1.0);
    }

    #[test]
    fn symmetric_sign_follows_gamma12() {
        let stats = PairStatistics::new(-0.25, 2.0, 8.0).unwrap();
        let r = stats.symmetric_weights().unwrap();
        assert_eq!(r.weights, Weights { w1: 0.5, w2: -0.125 });
        assert_eq!(r.gamma1, 0.5);
        assert_eq!(r.gamma2, -0.5);
        assert!(close(r.gamma_best, (0.5_f64 / 1.25).sqrt(), 1e-15));
    }

    #[test]
    fn symmetric_examples() {
        let stats = PairStatistics::new(0.5, 1.0, 1.0).unwrap();
        assert!(close(stats.symmetric_weights().unwrap().gamma_best, (2.0_f64 / 3.0).sqrt(), 1e-15));

        let stats = PairStatistics::new(1.0, 2.0, 4.0).unwrap();
        let r = stats.symmetric_weights().unwrap();
        assert_eq!(r.gamma_best, 1.0);
        // S_best / sigma1 = (S1/sigma1 + S2/sigma2) / 2
        assert_eq!(r.weights, Weights { w1: 0.5, w2: 0.25 });

        let stats = PairStatistics::new(0.0, 1.0, 1.0).unwrap();
        assert_eq!(stats.symmetric_weights(), Err(SignalError::NoCommonSignal));
    }

    #[test]
    fn predicted_correlation_examples() {
        let m = model(2.0, 0.5, 2.0);
        let opt = optimal_weights(&m).unwrap();
        let p = predicted_extraction_correlation(&m, opt.weights.w1, opt.weights.w2).unwrap();
        assert!(close(p, opt.gamma_best, 1e-12));

        let p = predicted_extraction_correlation(&m, 1.0, 0.0).unwrap();
        assert!(close(p, forward_correlations(&m).gamma1, 1e-15));

        // weights (1/2, sigma1 / (2 sigma2)) = (1/2, 1/8): 0.75 / sqrt(0.875)
        let sym = PairStatistics::from_model(&m).symmetric_weights().unwrap();
        assert!(close(sym.weights.w2, 0.125, 1e-15));
        let p = predicted_extraction_correlation(&m, sym.weights.w1, sym.weights.w2).unwrap();
        assert!(close(p, 0.75 / 0.875_f64.sqrt(), 1e-12), "{p}");
        // the symmetric assumption is false here, so the combination loses to S1
        assert!(p < forward_correlations(&m).gamma1);

        assert_eq!(
            predicted_extraction_correlation(&m, 0.0, 0.0),
            Err(SignalError::DegenerateCombination)
        );
        // alpha * S1 - S2 with beta = 0 everywhere has zero variance
        let clean = model(2.0, 0.0, 0.0);
        assert_eq!(
            predicted_extraction_correlation(&clean, 2.0, -1.0),
            Err(SignalError::DegenerateCombination)
        );
    }

    #[test]
    fn observation_caches_statistics() {
        let s1 = Series::new(vec![1.0, 2.0, 4.0, 3.0]).unwrap();
        let s2 = Series::new(vec![2.0, 1.0, 5.0, 3.5]).unwrap();
        let obs = TwoSignalObservation::new(s1.clone(), s2.clone()).unwrap();
        assert_eq!(obs.gamma12(), series::correlation(&s1, &s2).unwrap());
        assert_eq!(obs.sigma1(), s1.std_dev());
        assert_eq!(obs.sigma2(), s2.std_dev());

        let flat = Series::new(vec![1.0; 4]).unwrap();
        assert_eq!(TwoSignalObservation::new(s1, flat), Err(SignalError::ZeroVariance));
    }

    #[test]
    fn extraction_on_series_matches_weights() {
        let s1 = Series::new(vec![1.0, 2.0, 4.0, 3.0, -1.0]).unwrap();
        let s2 = Series::new(vec![2.0, 1.0, 5.0, 3.5, 0.0]).unwrap();
        let obs = TwoSignalObservation::new(s1.clone(), s2.clone()).unwrap();
        let r = symmetric_extract(&obs).unwrap();
        let best = r.s_best.as_ref().unwrap();
        for i in 0..s1.len() {
            let expect = r.weights.w1 * s1.as_slice()[i] + r.weights.w2 * s2.as_slice()[i];
            assert!(close(best.as_slice()[i], expect, 1e-12));
        }

        let r = parametric_extract(&obs, 1.0).unwrap();
        assert_eq!(r.s_best.unwrap(), s1);
    }

    #[test]
    fn identical_series_give_perfect_extraction() {
        let s = Series::new(vec![0.5, -1.0, 2.0, 0.0]).unwrap();
        let obs = TwoSignalObservation::new(s.clone(), s.clone()).unwrap();
        assert_eq!(obs.gamma12(), 1.0);
        let r = symmetric_extract(&obs).unwrap();
        assert_eq!(r.gamma_best, 1.0);
        assert_eq!(r.s_best.unwrap(), s);
    }
}
