//! Best obtainable common signal of two or three correlated series.
//!
//! A set of signals `S_j = alpha_j * A + B_j` shares the latent component `A`.
//! This crate finds the linear combination of the signals that correlates
//! best with `A`, using only measured correlations and deviations plus, for
//! two signals, one extra assumption about how the common part is shared.

pub mod cli;
pub mod error;
pub mod series;
pub mod synth;
pub mod three_signal;
pub mod two_signal;
pub mod validation;

pub use error::{Result, SignalError};
pub use series::Series;
