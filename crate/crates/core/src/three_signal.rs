//! Ideal common-signal extraction among three signals.
//!
//! With `S_j = alpha_j * A + B_j`, `alpha_1 = 1` and mutually uncorrelated
//! backgrounds, the three pairwise correlations fix every strength. The
//! triple is *ideal* when each implied `gamma_j^2` is at most one and the
//! signs of the correlations agree with a single common factor; anything
//! else is reported as [`SignalError::NotIdeal`] and never resolved.

use crate::error::{Result, SignalError};
use crate::series::{self, Series};

/// Default slack on `gamma_j^2 <= 1` for sampled data.
pub const DEFAULT_IDEALITY_TOL: f64 = 0.02;

/// Ground truth for three signals. `alpha_1` is fixed to one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeSignalModel {
    alphas: [f64; 3],
    betas_sq: [f64; 3],
    sigma: f64,
}

impl ThreeSignalModel {
    pub fn new(alpha2: f64, alpha3: f64, betas_sq: [f64; 3], sigma: f64) -> Result<Self> {
        for a in [alpha2, alpha3] {
            if !a.is_finite() || a == 0.0 {
                return Err(SignalError::InvalidModel(format!("alpha must be finite and nonzero, got {a}")));
            }
        }
        if betas_sq.iter().any(|b| !(b.is_finite() && *b >= 0.0)) {
            return Err(SignalError::InvalidModel(format!(
                "squared background strengths must be finite and >= 0, got {betas_sq:?}"
            )));
        }
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(SignalError::InvalidModel(format!("sigma must be positive, got {sigma}")));
        }
        Ok(Self { alphas: [1.0, alpha2, alpha3], betas_sq, sigma })
    }

    pub fn alphas(&self) -> [f64; 3] {
        self.alphas
    }

    pub fn betas_sq(&self) -> [f64; 3] {
        self.betas_sq
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn sigmas(&self) -> [f64; 3] {
        std::array::from_fn(|j| (1.0 + self.betas_sq[j]).sqrt() * self.alphas[j].abs() * self.sigma)
    }

    /// Signed correlation of each signal with `A`.
    pub fn gammas(&self) -> [f64; 3] {
        std::array::from_fn(|j| self.alphas[j].signum() / (1.0 + self.betas_sq[j]).sqrt())
    }

    /// The correlation triple this model produces when measured exactly.
    pub fn correlations(&self) -> CorrelationTriple {
        let g = self.gammas();
        let s = self.sigmas();
        CorrelationTriple {
            gamma12: g[0] * g[1],
            gamma13: g[0] * g[2],
            gamma23: g[1] * g[2],
            sigmas: s,
        }
    }
}

/// Measured pairwise correlations and deviations of three signals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationTriple {
    pub gamma12: f64,
    pub gamma13: f64,
    pub gamma23: f64,
    pub sigmas: [f64; 3],
}

impl CorrelationTriple {
    pub fn new(gamma12: f64, gamma13: f64, gamma23: f64, sigmas: [f64; 3]) -> Result<Self> {
        for g in [gamma12, gamma13, gamma23] {
            if !(g.is_finite() && g.abs() <= 1.0) {
                return Err(SignalError::InvalidModel(format!("correlation must lie in [-1, 1], got {g}")));
            }
            if g == 0.0 {
                return Err(SignalError::NoCommonSignal);
            }
        }
        if sigmas.iter().any(|s| !(s.is_finite() && *s > 0.0)) {
            return Err(SignalError::ZeroVariance);
        }
        Ok(Self { gamma12, gamma13, gamma23, sigmas })
    }

    /// Correlation between signals `i` and `j` (zero-based, `i != j`).
    pub fn get(&self, i: usize, j: usize) -> f64 {
        match (i.min(j), i.max(j)) {
            (0, 1) => self.gamma12,
            (0, 2) => self.gamma13,
            (1, 2) => self.gamma23,
            _ => panic!("no correlation between signals {i} and {j}"),
        }
    }
}

pub fn pairwise_correlations(s1: &Series, s2: &Series, s3: &Series) -> Result<CorrelationTriple> {
    let sigmas = [
        series::nonzero_std_dev(s1)?,
        series::nonzero_std_dev(s2)?,
        series::nonzero_std_dev(s3)?,
    ];
    CorrelationTriple::new(
        series::correlation(s1, s2)?,
        series::correlation(s1, s3)?,
        series::correlation(s2, s3)?,
        sigmas,
    )
}

/// Outcome of the ideality test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ideality {
    pub ideal: bool,
    /// Implied `gamma_j^2`; clamped to one when ideal, raw otherwise.
    pub gammas_sq: [f64; 3],
    /// `gamma12 * gamma13 * gamma23 > 0`, required of any single-factor triple.
    pub sign_consistent: bool,
}

pub fn check_ideality(c: &CorrelationTriple, tol: f64) -> Ideality {
    let raw = [
        (c.gamma12 * c.gamma13 / c.gamma23).abs(),
        (c.gamma12 * c.gamma23 / c.gamma13).abs(),
        (c.gamma13 * c.gamma23 / c.gamma12).abs(),
    ];
    let sign_consistent = c.gamma12 * c.gamma13 * c.gamma23 > 0.0;
    let ideal = sign_consistent && raw.iter().all(|g| *g <= 1.0 + tol);
    let gammas_sq = if ideal { raw.map(|g| g.min(1.0)) } else { raw };
    Ideality { ideal, gammas_sq, sign_consistent }
}

/// Recovered strengths and the optimal combination of three signals.
#[derive(Debug, Clone, PartialEq)]
pub struct ThreeSignalSolution {
    /// `|gamma_j|`, each in `(0, 1]`.
    pub gammas: [f64; 3],
    pub betas_sq: [f64; 3],
    /// `(1, alpha2, alpha3)`.
    pub alphas: [f64; 3],
    /// Deviation of `A` in units of `S1`.
    pub sigma: f64,
    /// `S_best = sum_j weights[j] * S_j`.
    pub weights: [f64; 3],
    pub gamma_best: f64,
    /// Two or more backgrounds vanished; `weights` select a single noiseless signal.
    pub degenerate_background: bool,
    pub s_best: Option<Series>,
}

/// Strengths and weights from the correlation set alone.
pub fn recover_strengths(c: &CorrelationTriple, tol: f64) -> Result<ThreeSignalSolution> {
    let ideality = check_ideality(c, tol);
    if !ideality.ideal {
        return Err(SignalError::NotIdeal {
            gammas_sq: ideality.gammas_sq,
            sign_consistent: ideality.sign_consistent,
        });
    }
    let gammas = ideality.gammas_sq.map(f64::sqrt);
    let betas_sq = gammas.map(|g| (1.0 - g) * (1.0 + g) / (g * g));
    let alpha_for = |gij: f64, j: usize| gij.signum() * (gammas[j] * c.sigmas[j] / (gammas[0] * c.sigmas[0])).abs();
    let alphas = [1.0, alpha_for(c.gamma12, 1), alpha_for(c.gamma13, 2)];
    let (weights, gamma_best, degenerate_background) = combine(&alphas, &betas_sq);
    Ok(ThreeSignalSolution {
        gammas,
        betas_sq,
        alphas,
        sigma: gammas[0] * c.sigmas[0],
        weights,
        gamma_best,
        degenerate_background,
        s_best: None,
    })
}

fn combine(alphas: &[f64; 3], b: &[f64; 3]) -> ([f64; 3], f64, bool) {
    let zeros = b.iter().filter(|x| **x == 0.0).count();
    if zeros >= 2 {
        // 0/0 in the closed form; every noiseless signal is exactly A up to scale
        let j = b.iter().position(|x| *x == 0.0).unwrap_or(0);
        let mut w = [0.0; 3];
        w[j] = 1.0 / alphas[j];
        return (w, 1.0, true);
    }
    let pair = [b[1] * b[2], b[0] * b[2], b[0] * b[1]];
    let denom: f64 = pair.iter().sum();
    let triple = b[0] * b[1] * b[2];
    let weights = std::array::from_fn(|j| pair[j] / (alphas[j] * denom));
    let gamma_best_sq = 1.0 - triple / (denom + triple);
    (weights, gamma_best_sq.sqrt(), false)
}

/// Full extraction from three sampled series.
pub fn extract3(s1: &Series, s2: &Series, s3: &Series, tol: f64) -> Result<ThreeSignalSolution> {
    let c = pairwise_correlations(s1, s2, s3)?;
    let mut sol = recover_strengths(&c, tol)?;
    let w = sol.weights;
    sol.s_best = Some(Series::linear_combination(&[(w[0], s1), (w[1], s2), (w[2], s3)])?);
    Ok(sol)
}

/// `alpha_j * S_i - alpha_i * S_j`, free of common signal in an ideal set.
pub fn null_composition(alphas: &[f64; 3], signals: [&Series; 3], i: usize, j: usize) -> Result<Series> {
    Series::linear_combination(&[(alphas[j], signals[i]), (-alphas[i], signals[j])])
}
