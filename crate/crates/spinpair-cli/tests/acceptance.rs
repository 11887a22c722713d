//! Acceptance suite: one test per shipped guarantee, each printing a PASS
//! line with the measured margin once its assertions hold.
//!
//! Run with `cargo test -p spinpair-cli --test acceptance -- --nocapture`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI, TAU};
use std::process::Command;
use std::time::Instant;

use rand_core::{Rng, SeedableRng};
use rand_pcg::Pcg32;
use serde_json::Value;

use spinpair::bloch::{BasisSpec, BlochAngles, Rotation2, SingleQubitState};
use spinpair::correlations::{
    equal_weight_basis, joint_probs, local_probs, pair_visibility, probs_minus, probs_mixed,
    probs_plus, Party,
};
use spinpair::pairstate::{PairKind, PairStateZ};
use spinpair::sampler::{chi_square, sample};
use spinpair::{Amplitude, Error};

const TIGHT: f64 = 1e-12;

struct Draw(Pcg32);

impl Draw {
    fn new(seed: u64) -> Self {
        Self(Pcg32::seed_from_u64(seed))
    }

    fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    fn basis(&mut self) -> BasisSpec {
        BasisSpec::new(self.unit() * PI, self.unit() * TAU).unwrap()
    }
}

fn singlet() -> PairStateZ {
    PairStateZ::singlet()
}

fn minus(p: f64, q: f64, alpha: f64) -> PairStateZ {
    PairStateZ::new(PairKind::MinusCorrelated, p, q, alpha).unwrap()
}

fn plus(p: f64, q: f64, alpha: f64) -> PairStateZ {
    PairStateZ::new(PairKind::PlusCorrelated, p, q, alpha).unwrap()
}

/// 1. The CLI oracle run over 10^4 tuples exits 0 with every family within
///    1e-12, in under 5 seconds.
#[test]
fn criterion_01_oracle_equivalence_via_cli() {
    let started = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_spinpair"))
        .args(["verify", "--trials", "10000", "--seed", "42", "--tol", "1e-12"])
        .output()
        .expect("binary runs");
    let elapsed = started.elapsed();
    assert_eq!(out.status.code(), Some(0), "verify must exit 0");
    let json: Value = serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let families = json["results"]["families"].as_array().unwrap();
    assert_eq!(families.len(), 5);
    let mut worst = 0.0f64;
    for f in families {
        let dev = f["max_deviation"].as_f64().unwrap();
        assert!(dev <= 1e-12, "family {} deviates {dev}", f["family"]);
        worst = worst.max(dev);
    }
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    println!(
        "acceptance criterion 01: PASS — verify exit 0, worst family deviation {worst:.3e}, {:.2}s",
        elapsed.as_secs_f64()
    );
}

/// 2. The singlet shows zero (+) weight in 1000 random shared bases and 1000
///    mixed-basis calls restricted to e′ = e.
#[test]
fn criterion_02_singlet_minus_correlations_everywhere() {
    let state = singlet();
    let mut rng = Draw::new(2);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let e = rng.basis();
        worst = worst.max(probs_minus(&state, &e).unwrap().p_plus());
    }
    for _ in 0..1000 {
        let e = rng.basis();
        worst = worst.max(probs_mixed(&state, &e, &e).unwrap().p_plus());
    }
    assert!(worst < TIGHT, "worst P+ {worst}");
    println!("acceptance criterion 02: PASS — singlet worst P+ {worst:.3e} over 2000 bases");
}

/// 3. The α = 0 equally-weighted state converts fully on the equator (any δ)
///    and visibly fails to convert at χ = π/4.
#[test]
fn criterion_03_triplet_conversion_on_equator_only() {
    let state = minus(FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0);
    let mut rng = Draw::new(3);
    let mut worst = 0.0f64;
    for _ in 0..500 {
        let e = BasisSpec::equatorial(rng.unit() * TAU);
        worst = worst.max(probs_minus(&state, &e).unwrap().p_minus());
    }
    assert!(worst < TIGHT, "worst equatorial P- {worst}");

    let off = BasisSpec::new(PI / 4.0, 0.0).unwrap();
    let residue = probs_minus(&state, &off).unwrap().p_minus();
    assert!(residue > 0.1, "off-equator P- {residue}");
    println!(
        "acceptance criterion 03: PASS — equatorial P- {worst:.3e}, off-equator P- {residue:.3}"
    );
}

/// 4. Equal-weight basis solver: both branches land on P⁺ = 1/2 for
///    cos α ≥ 0, and cos α < 0 yields no real solution, 1000 cases each side.
#[test]
fn criterion_04_equal_weight_solver() {
    let mut rng = Draw::new(4);
    let mut solved = 0u32;
    let mut refused = 0u32;
    let mut worst = 0.0f64;
    while solved < 1000 || refused < 1000 {
        let p = 0.001 + 0.998 * rng.unit();
        let q = (1.0 - p * p).sqrt();
        let alpha = rng.unit() * TAU;
        let state = minus(p, q, alpha);
        match equal_weight_basis(&state) {
            Ok((hi, lo)) => {
                assert!(alpha.cos() >= 0.0);
                if solved >= 1000 {
                    continue;
                }
                for m2 in [hi, lo] {
                    let chi = 2.0 * m2.min(1.0).sqrt().acos();
                    let j = probs_minus(&state, &BasisSpec::new(chi, 0.0).unwrap()).unwrap();
                    worst = worst.max((j.p_plus() - 0.5).abs());
                }
                solved += 1;
            }
            Err(Error::NoRealSolution) => {
                assert!(alpha.cos() < 0.0, "refused despite cos α = {}", alpha.cos());
                refused += 1;
            }
            Err(other) => panic!("unexpected error {other}"),
        }
    }
    assert!(worst < TIGHT, "worst |P+ - 1/2| = {worst}");
    println!(
        "acceptance criterion 04: PASS — 1000 solved (worst |P+ - 1/2| {worst:.3e}), 1000 refused"
    );
}

/// 5. Coherence transfer: across 100 random parameter sets, a 100-point phase
///    sweep leaves both marginals flat to 1e-12 while the P⁺ fringe
///    half-amplitude equals the visibility within 1e-9.
#[test]
fn criterion_05_no_signaling_with_visible_fringes() {
    let mut rng = Draw::new(5);
    let mut worst_spread = 0.0f64;
    let mut worst_fringe = 0.0f64;
    for trial in 0..100 {
        let p = 0.05 + 0.9 * rng.unit();
        let q = (1.0 - p * p).sqrt();
        let e = rng.basis();
        let (kind, e_prime, offset) = match trial % 3 {
            0 => (PairKind::MinusCorrelated, None, 0.0),
            1 => (PairKind::PlusCorrelated, None, 2.0 * e.delta()),
            _ => {
                let ep = rng.basis();
                (PairKind::MinusCorrelated, Some(ep), e.delta())
            }
        };
        let e_prime = e_prime.as_ref();
        let offset = match e_prime {
            Some(ep) => offset - ep.delta(),
            None => offset,
        };

        let mut marg = [f64::INFINITY, f64::NEG_INFINITY];
        let mut marg_b = [f64::INFINITY, f64::NEG_INFINITY];
        let mut fringe = [f64::INFINITY, f64::NEG_INFINITY];
        for k in 0..100 {
            let alpha = offset + k as f64 * TAU / 100.0;
            let state = PairStateZ::new(kind, p, q, alpha).unwrap();
            let j = joint_probs(&state, &e, e_prime).unwrap();
            fringe = [fringe[0].min(j.p_plus()), fringe[1].max(j.p_plus())];
            let (pa, _) = local_probs(&state, &e, e_prime, Party::A).unwrap();
            let (pb, _) = local_probs(&state, &e, e_prime, Party::B).unwrap();
            marg = [marg[0].min(pa), marg[1].max(pa)];
            marg_b = [marg_b[0].min(pb), marg_b[1].max(pb)];
        }
        let spread = (marg[1] - marg[0]).max(marg_b[1] - marg_b[0]);
        assert!(spread < TIGHT, "marginal spread {spread}");
        worst_spread = worst_spread.max(spread);

        let state = PairStateZ::new(kind, p, q, 0.0).unwrap();
        let v = pair_visibility(&state, &e, e_prime);
        let err = ((fringe[1] - fringe[0]) / 2.0 - v).abs();
        assert!(err < 1e-9, "fringe error {err}");
        worst_fringe = worst_fringe.max(err);
    }
    println!(
        "acceptance criterion 05: PASS — marginal spread ≤ {worst_spread:.3e}, fringe error ≤ {worst_fringe:.3e}"
    );
}

/// 6. The (+) state criteria: δ = α/2 keeps P⁻ at zero; the converting basis
///    (equatorial, δ = (α−π)/2) keeps P⁺ at zero — 100 random α each.
#[test]
fn criterion_06_plus_state_criteria() {
    let mut rng = Draw::new(6);
    let mut worst_minus = 0.0f64;
    let mut worst_plus = 0.0f64;
    for _ in 0..100 {
        let alpha = rng.unit() * TAU;
        let state = plus(FRAC_1_SQRT_2, FRAC_1_SQRT_2, alpha);

        let keep = BasisSpec::new(rng.unit() * PI, alpha / 2.0).unwrap();
        worst_minus = worst_minus.max(probs_plus(&state, &keep).unwrap().p_minus());

        let convert = BasisSpec::equatorial((alpha - PI) / 2.0);
        worst_plus = worst_plus.max(probs_plus(&state, &convert).unwrap().p_plus());
    }
    assert!(worst_minus < TIGHT, "worst preserved P- {worst_minus}");
    assert!(worst_plus < TIGHT, "worst converted P+ {worst_plus}");
    println!(
        "acceptance criterion 06: PASS — preserving P- ≤ {worst_minus:.3e}, converting P+ ≤ {worst_plus:.3e}"
    );
}

/// 7. Mixed-basis formulas reduce to the shared-basis ones at e′ = e over
///    10^4 tuples, and the singlet measured along z ⊗ x is uniform.
#[test]
fn criterion_07_mixed_basis_reduction() {
    let mut rng = Draw::new(7);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let p = rng.unit();
        let q = (1.0 - p * p).max(0.0).sqrt();
        let state = minus(p, q, rng.unit() * TAU);
        let e = rng.basis();
        let same = probs_minus(&state, &e).unwrap().as_array();
        let mixed = probs_mixed(&state, &e, &e).unwrap().as_array();
        for k in 0..4 {
            worst = worst.max((same[k] - mixed[k]).abs());
        }
    }
    assert!(worst < TIGHT, "worst reduction deviation {worst}");

    let j = probs_mixed(&singlet(), &BasisSpec::reference(), &BasisSpec::equatorial(0.0)).unwrap();
    let mut uniform_err = 0.0f64;
    for v in j.as_array() {
        uniform_err = uniform_err.max((v - 0.25).abs());
    }
    assert!(uniform_err < TIGHT, "z⊗x outcomes deviate {uniform_err}");
    println!(
        "acceptance criterion 07: PASS — reduction ≤ {worst:.3e}, z⊗x uniformity ≤ {uniform_err:.3e}"
    );
}

/// 8. Single-particle layer: completeness, the reference-basis limits
///    (bitwise), the canonical overlaps, and the determinant law.
#[test]
fn criterion_08_single_particle_layer() {
    let mut rng = Draw::new(8);
    let mut worst_sum = 0.0f64;
    let mut worst_det = 0.0f64;
    for _ in 0..10_000 {
        let s = SingleQubitState::from_angles(
            BlochAngles::new(rng.unit() * PI, rng.unit() * TAU).unwrap(),
        );
        let e = rng.basis();
        let (pe, peb) = s.measure_probs(&e);
        worst_sum = worst_sum.max((pe + peb - 1.0).abs());

        let det = Rotation2::from_basis(&e).det();
        worst_det = worst_det.max((det + Amplitude::from_polar(1.0, e.delta())).norm());
    }
    assert!(worst_sum < TIGHT);
    assert!(worst_det < TIGHT);

    // reference-basis limits are exact
    let up = SingleQubitState::from_angles(BlochAngles::new(0.0, 0.0).unwrap());
    let e = BasisSpec::new(1.1, 2.0).unwrap();
    assert_eq!(up.measure_probs(&e), (e.m() * e.m(), e.n() * e.n()));
    let s = SingleQubitState::from_angles(BlochAngles::new(1.3, 0.7).unwrap());
    assert_eq!(
        s.measure_probs(&BasisSpec::reference()),
        (s.a() * s.a(), s.b() * s.b())
    );

    // overlaps of the canonical directions with |↓⟩
    let down = SingleQubitState::from_angles(BlochAngles::new(PI, 0.0).unwrap());
    let right = SingleQubitState::from_angles(BlochAngles::new(FRAC_PI_2, FRAC_PI_2).unwrap());
    let towards = SingleQubitState::from_angles(BlochAngles::new(FRAC_PI_2, 0.0).unwrap());
    let right_overlap = (right.inner(&down).norm() - FRAC_1_SQRT_2).abs();
    let towards_overlap = (towards.inner(&down) - Amplitude::from(FRAC_1_SQRT_2)).norm();
    assert!(right_overlap < TIGHT);
    assert!(towards_overlap < TIGHT);
    println!(
        "acceptance criterion 08: PASS — completeness ≤ {worst_sum:.3e}, det law ≤ {worst_det:.3e}, overlaps ≤ {:.3e}",
        right_overlap.max(towards_overlap)
    );
}

/// 9. Monte Carlo calibration: 100 seeds at n = 10^6 on the singlet
///    distribution keep every frequency within ±0.0025 of 1/2 and the χ²
///    statistic under 10.83 in at least 95 runs, all inside 10 seconds.
#[test]
fn criterion_09_monte_carlo_calibration() {
    let started = Instant::now();
    let j = joint_probs(&singlet(), &BasisSpec::new(1.0, 0.4).unwrap(), None).unwrap();
    let n = 1_000_000u64;
    let mut healthy = 0u32;
    for seed in 0..100u64 {
        let counts = sample(&j, n, 9000 + seed);
        let freq = counts.frequencies();
        let in_band = (freq[1] - 0.5).abs() < 0.0025 && (freq[2] - 0.5).abs() < 0.0025;
        let stats = chi_square(&counts, &j).unwrap();
        if in_band && stats.statistic < 10.83 {
            healthy += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(healthy >= 95, "only {healthy} healthy runs of 100");
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!(
        "acceptance criterion 09: PASS — {healthy}/100 runs healthy in {:.2}s",
        elapsed.as_secs_f64()
    );
}

/// 10. Coupled-basis decomposition reproduces the closed-form singlet and
///     triplet amplitudes against explicit inner products, norm preserved.
#[test]
fn criterion_10_coupled_decomposition() {
    let mut rng = Draw::new(10);
    let mut worst = 0.0f64;
    for _ in 0..2_000 {
        let p = rng.unit();
        let q = (1.0 - p * p).max(0.0).sqrt();
        let alpha = rng.unit() * TAU;
        let state = minus(p, q, alpha);
        let split = state.to_general().decompose_coupled();
        let expect_singlet =
            (Amplitude::from(state.p()) - state.q_tilde()) * FRAC_1_SQRT_2;
        let expect_triplet0 =
            (Amplitude::from(state.p()) + state.q_tilde()) * FRAC_1_SQRT_2;
        worst = worst.max((split.c_singlet - expect_singlet).norm());
        worst = worst.max((split.c_triplet0 - expect_triplet0).norm());
        worst = worst.max((split.norm_sq() - 1.0).abs());
    }
    assert!(worst < TIGHT, "worst decomposition deviation {worst}");
    println!("acceptance criterion 10: PASS — decomposition deviation ≤ {worst:.3e}");
}
