#![allow(dead_code)]

use common_signal::Series;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// Independent standard-normal series, drawn without going through `synth`.
pub fn gaussian(n: usize, seed: u64) -> Series {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Series::new((0..n).map(|_| StandardNormal.sample(&mut rng)).collect()).unwrap()
}

pub fn combine(terms: &[(f64, &Series)]) -> Series {
    Series::linear_combination(terms).unwrap()
}
