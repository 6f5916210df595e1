//! Sampled series and the population moments every other module builds on.
//!
//! All statistics use the divide-by-n (population) normalization.

use crate::error::{Result, SignalError};

/// A finite sampled real signal with at least two samples.
#[derive(Debug, Clone, PartialEq)]
pub struct Series(Vec<f64>);

impl Series {
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(SignalError::TooShort(samples.len()));
        }
        if let Some((index, &value)) = samples.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(SignalError::NonFinite { index, value });
        }
        Ok(Self(samples))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.0.iter()
    }

    pub fn mean(&self) -> f64 {
        mean(self)
    }

    pub fn variance(&self) -> f64 {
        variance(self)
    }

    pub fn std_dev(&self) -> f64 {
        variance(self).sqrt()
    }

    /// Sample-wise `factor * self`.
    pub fn scaled(&self, factor: f64) -> Series {
        Series(self.0.iter().map(|x| factor * x).collect())
    }

    /// Sample-wise `sum_j weights[j] * parts[j]`.
    pub fn linear_combination(terms: &[(f64, &Series)]) -> Result<Series> {
        let (_, first) = terms
            .first()
            .ok_or_else(|| SignalError::InvalidModel("empty linear combination".into()))?;
        let n = first.len();
        for (_, s) in terms {
            check_lengths(first, s)?;
        }
        let samples = (0..n)
            .map(|i| terms.iter().map(|(w, s)| w * s.0[i]).sum())
            .collect();
        Series::new(samples)
    }
}

impl AsRef<[f64]> for Series {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for Series {
    type Error = SignalError;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Series::new(v)
    }
}

impl<'a> IntoIterator for &'a Series {
    type Item = &'a f64;
    type IntoIter = std::slice::Iter<'a, f64>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

fn check_lengths(a: &Series, b: &Series) -> Result<()> {
    if a.len() != b.len() {
        return Err(SignalError::LengthMismatch(a.len(), b.len()));
    }
    Ok(())
}

pub fn mean(s: &Series) -> f64 {
    s.0.iter().sum::<f64>() / s.len() as f64
}

pub fn variance(s: &Series) -> f64 {
    let m = mean(s);
    s.0.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / s.len() as f64
}

pub fn covariance(a: &Series, b: &Series) -> Result<f64> {
    check_lengths(a, b)?;
    let (ma, mb) = (mean(a), mean(b));
    let sum: f64 = a.0.iter().zip(&b.0).map(|(x, y)| (x - ma) * (y - mb)).sum();
    Ok(sum / a.len() as f64)
}

/// Pearson correlation, clamped to `[-1, 1]`.
pub fn correlation(a: &Series, b: &Series) -> Result<f64> {
    let cov = covariance(a, b)?;
    let (va, vb) = (variance(a), variance(b));
    if is_zero_variance(a, va) || is_zero_variance(b, vb) {
        return Err(SignalError::ZeroVariance);
    }
    Ok((cov / (va * vb).sqrt()).clamp(-1.0, 1.0))
}

/// Population deviation, failing on a constant series.
pub fn nonzero_std_dev(s: &Series) -> Result<f64> {
    let v = variance(s);
    if is_zero_variance(s, v) {
        return Err(SignalError::ZeroVariance);
    }
    Ok(v.sqrt())
}

// A constant series can pick up a variance of a few ulps from rounding in the mean.
fn is_zero_variance(s: &Series, var: f64) -> bool {
    let scale = s.0.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let floor = 8.0 * f64::EPSILON * scale;
    var <= floor * floor
}
