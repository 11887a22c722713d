//! Statistical behavior of the Monte Carlo sampler: concentration, χ²
//! calibration, and the empirical no-signaling check.

use std::f64::consts::TAU;

use spinpair::bloch::BasisSpec;
use spinpair::correlations::{joint_probs, local_probs, JointProbs, Party};
use spinpair::pairstate::{PairKind, PairStateZ};
use spinpair::sampler::{chi_square, sample};

// 95% quantile of χ² with 3 degrees of freedom
const CHI2_95_DOF3: f64 = 7.815;

#[test]
fn chi_square_exceedance_rate_is_calibrated() {
    let j = JointProbs::new([0.25, 0.25, 0.25, 0.25]).unwrap();
    let n = 100_000;
    let mut exceed = 0;
    for seed in 0..100u64 {
        let counts = sample(&j, n, 1000 + seed);
        let r = chi_square(&counts, &j).unwrap();
        assert_eq!(r.dof, 3);
        if r.statistic > CHI2_95_DOF3 {
            exceed += 1;
        }
    }
    // loose two-sided band around the nominal 5%
    assert!(
        (1..=15).contains(&exceed),
        "{exceed} of 100 runs exceeded the 95% quantile"
    );
}

#[test]
fn pooled_a_marginals_agree_with_local_probs_across_b_sweeps() {
    let state = PairStateZ::new(PairKind::MinusCorrelated, 0.6, 0.8, 1.3).unwrap();
    let e = BasisSpec::new(1.0, 0.4).unwrap();
    let n = 200_000u64;
    for (k, seed) in (0..8).zip(7000..) {
        let ep = BasisSpec::new(0.2 + 0.35 * k as f64, k as f64 * TAU / 8.0).unwrap();
        let j = joint_probs(&state, &e, Some(&ep)).unwrap();
        let counts = sample(&j, n, seed);
        let c = counts.counts();
        let freq_a_e = (c[0] + c[1]) as f64 / n as f64;
        let (pa, _) = local_probs(&state, &e, Some(&ep), Party::A).unwrap();
        let sigma = (pa * (1.0 - pa) / n as f64).sqrt();
        assert!(
            (freq_a_e - pa).abs() < 5.0 * sigma,
            "basis {k}: freq {freq_a_e} vs marginal {pa}"
        );
    }
}

#[test]
fn counts_concentrate_for_biased_distribution() {
    let j = JointProbs::new([0.7, 0.1, 0.15, 0.05]).unwrap();
    let n = 500_000u64;
    let counts = sample(&j, n, 99);
    for (obs, p) in counts.counts().iter().zip(j.as_array()) {
        let expected = n as f64 * p;
        let sigma = (n as f64 * p * (1.0 - p)).sqrt();
        assert!((*obs as f64 - expected).abs() < 5.0 * sigma);
    }
}
