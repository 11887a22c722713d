//! Alice and Bob measuring along different directions: generalized (+)/(−)
//! correlations, the phase ζ = α − δ + δ′, and the geometry marker e·e′ that
//! tells you how meaningful the labels still are.
//!
//! Run with: cargo run --example mixed_bases

use std::f64::consts::PI;

use spinpair::bloch::BasisSpec;
use spinpair::correlations::{local_probs, probs_mixed, Party};
use spinpair::pairstate::{PairKind, PairStateZ};

fn main() {
    let state = PairStateZ::new(PairKind::MinusCorrelated, 0.6, 0.8, 1.3).unwrap();
    let alice = BasisSpec::new(1.0, 0.4).unwrap();

    println!("Alice fixed at (χ = 1.0, δ = 0.4); Bob sweeps his polar angle:\n");
    println!(
        "{:>6} {:>8} {:>10} {:>10} {:>10} {:>10}",
        "χ′", "e·e′", "P(e,e′)", "P(e,ē′)", "P(ē,e′)", "P(ē,ē′)"
    );
    for k in 0..=6 {
        let chi2 = k as f64 * PI / 6.0;
        let bob = BasisSpec::new(chi2, 0.4).unwrap();
        let j = probs_mixed(&state, &alice, &bob).unwrap();
        println!(
            "{chi2:>6.3} {:>8.3} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
            alice.dot(&bob),
            j.p_ee(),
            j.p_eeb(),
            j.p_ebe(),
            j.p_ebeb()
        );
    }
    println!("\n(e·e′ < 0 means Bob's ē is geometrically closer to Alice's e;");
    println!(" the structural (+)/(−) labels stay fixed to the outcome pairing)");

    // The coefficients behind one of those rows.
    let bob = BasisSpec::new(2.0, 1.9).unwrap();
    let coeffs = state.rewrite_mixed(&alice, &bob).unwrap();
    println!("\nrewrite coefficients at (χ′ = 2.0, δ′ = 1.9), ζ = {:.4}:", coeffs.zeta);
    println!("  |μ̃|² = {:.6}", coeffs.mu.norm_sqr());
    println!("  |ν̃|² = {:.6}", coeffs.nu.norm_sqr());
    println!("  |σ̃|² = {:.6}", coeffs.sigma.norm_sqr());
    println!("  |τ̃|² = {:.6}", coeffs.tau.norm_sqr());

    // Whatever Bob does, Alice's marginal depends only on her own basis.
    let (pa, pa_bar) = local_probs(&state, &alice, Some(&bob), Party::A).unwrap();
    println!("\nAlice's marginal with that Bob basis: ({pa:.6}, {pa_bar:.6})");
    let elsewhere = BasisSpec::new(0.3, 5.1).unwrap();
    let (pa2, _) = local_probs(&state, &alice, Some(&elsewhere), Party::A).unwrap();
    println!("Alice's marginal with another one:    ({pa2:.6}, …) — unchanged");
}
