use common_signal::series::correlation;
use common_signal::synth::{self, ScenarioSpec};
use common_signal::three_signal::{
    check_ideality, extract3, null_composition, pairwise_correlations, recover_strengths, CorrelationTriple,
    ThreeSignalModel, DEFAULT_IDEALITY_TOL,
};
use proptest::prelude::*;

fn alpha() -> impl Strategy<Value = f64> {
    prop_oneof![-4.0..-0.01f64, 0.01..4.0f64]
}

fn model() -> impl Strategy<Value = ThreeSignalModel> {
    (alpha(), alpha(), prop::array::uniform3(0.0001..16.0f64), 0.1..10.0f64)
        .prop_map(|(a2, a3, b, s)| ThreeSignalModel::new(a2, a3, b, s).unwrap())
}

/// The triple seen when the signals are presented in the order `perm`.
fn permuted(c: &CorrelationTriple, perm: [usize; 3]) -> CorrelationTriple {
    CorrelationTriple::new(
        c.get(perm[0], perm[1]),
        c.get(perm[0], perm[2]),
        c.get(perm[1], perm[2]),
        perm.map(|j| c.sigmas[j]),
    )
    .unwrap()
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn model_correlations_are_exactly_ideal(m in model()) {
        let i = check_ideality(&m.correlations(), 0.0);
        prop_assert!(i.ideal);
        let g = m.gammas();
        for (sq, g) in i.gammas_sq.iter().zip(g) {
            prop_assert!((sq - g * g).abs() <= 1e-12);
        }
    }

    #[test]
    fn recovery_returns_the_model(m in model()) {
        let sol = recover_strengths(&m.correlations(), 0.0).unwrap();
        for j in 0..3 {
            prop_assert!((sol.alphas[j] - m.alphas()[j]).abs() <= 1e-10 * m.alphas()[j].abs().max(1.0));
            let b = m.betas_sq()[j];
            prop_assert!((sol.betas_sq[j] - b).abs() <= 1e-10 * b.max(1.0));
        }
        prop_assert!((sol.sigma - m.sigma()).abs() <= 1e-10 * m.sigma());
    }

    #[test]
    fn best_dominates_each_signal(m in model()) {
        let sol = recover_strengths(&m.correlations(), 0.0).unwrap();
        let best_sq = sol.gamma_best * sol.gamma_best;
        for g in sol.gammas {
            prop_assert!(best_sq >= g * g - 1e-12);
        }
    }

    #[test]
    fn permutation_symmetry(m in model()) {
        let c = m.correlations();
        let base = recover_strengths(&c, 0.0).unwrap();
        for perm in PERMUTATIONS {
            let sol = recover_strengths(&permuted(&c, perm), 0.0).unwrap();
            prop_assert!((sol.gamma_best - base.gamma_best).abs() <= 1e-12);
            // weights are in units of whichever signal is listed first
            let scale = base.alphas[perm[0]];
            for (k, &j) in perm.iter().enumerate() {
                let expect = base.weights[j] * scale;
                prop_assert!((sol.weights[k] - expect).abs() <= 1e-12 * expect.abs().max(1.0));
            }
        }
    }
}

#[test]
fn paired_synthetic_correlations() {
    let sc = synth::generate(&ScenarioSpec::three_signal(1.0, 1.0, [1.0; 3], 3)).unwrap();
    let c = pairwise_correlations(&sc.signals[0], &sc.signals[1], &sc.signals[2]).unwrap();
    for g in [c.gamma12, c.gamma13, c.gamma23] {
        assert!((g - 0.5).abs() <= 0.05, "{g}");
    }
}

#[test]
fn synthetic_end_to_end() {
    let (alpha2, alpha3) = (2.0, -0.5);
    let betas = [1.0, 0.5, 1.5];
    let truth = ThreeSignalModel::new(alpha2, alpha3, betas.map(|b| b * b), 1.0).unwrap();
    let predicted = recover_strengths(&truth.correlations(), 0.0).unwrap().gamma_best;

    let seeds = 10;
    let (mut err2, mut err3, mut err_best) = (0.0, 0.0, 0.0);
    for seed in 0..seeds {
        let sc = synth::generate(&ScenarioSpec::three_signal(alpha2, alpha3, betas, seed).with_samples(100_000)).unwrap();
        let sol = extract3(&sc.signals[0], &sc.signals[1], &sc.signals[2], DEFAULT_IDEALITY_TOL).unwrap();
        err2 += (sol.alphas[1] / alpha2 - 1.0).abs();
        err3 += (sol.alphas[2] / alpha3 - 1.0).abs();
        err_best += (correlation(sol.s_best.as_ref().unwrap(), &sc.a).unwrap() - predicted).abs();
    }
    let k = seeds as f64;
    assert!(err2 / k <= 0.05 && err3 / k <= 0.05, "{} {}", err2 / k, err3 / k);
    assert!(err_best / k <= 0.03, "{}", err_best / k);
}

#[test]
fn null_compositions_carry_no_common_signal() {
    let alphas = [1.0, 1.5, -0.8];
    for seed in 0..5 {
        let sc = synth::generate(&ScenarioSpec::three_signal(alphas[1], alphas[2], [1.0, 0.7, 1.2], seed)).unwrap();
        let signals = [&sc.signals[0], &sc.signals[1], &sc.signals[2]];
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let n = null_composition(&alphas, signals, i, j).unwrap();
            assert!(correlation(&n, &sc.a).unwrap().abs() <= 0.05);
        }
    }
}
