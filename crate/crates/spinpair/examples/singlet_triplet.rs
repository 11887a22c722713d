//! Decomposing reference-correlated states in the coupled total-spin basis:
//! the phase α interpolates between the singlet and the middle triplet.
//!
//! Run with: cargo run --example singlet_triplet

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use spinpair::pairstate::{PairKind, PairStateZ};

fn main() {
    println!("equally-weighted (−) state, sweeping α from 0 to π:\n");
    println!(
        "{:>8} {:>12} {:>12} {:>10}",
        "α", "|⟨singlet⟩|²", "|⟨triplet₀⟩|²", "norm"
    );
    for k in 0..=8 {
        let alpha = k as f64 * PI / 8.0;
        let state = PairStateZ::new(
            PairKind::MinusCorrelated,
            FRAC_1_SQRT_2,
            FRAC_1_SQRT_2,
            alpha,
        )
        .unwrap();
        let split = state.to_general().decompose_coupled();
        let probs = split.probabilities();
        println!(
            "{alpha:>8.4} {:>12.6} {:>12.6} {:>10.6}",
            probs[0],
            probs[1],
            split.norm_sq()
        );
    }
    println!("\nα = 0 is the pure middle triplet, α = π the pure singlet; in");
    println!("between the state is a superposition of both with zero net");
    println!("z-component.");

    let phi = PairStateZ::new(PairKind::PlusCorrelated, 0.6, 0.8, 1.2).unwrap();
    let split = phi.to_general().decompose_coupled();
    println!("\n(+) correlated state (p = 0.6, q = 0.8):");
    println!("  singlet amplitude:      {:.6}", split.c_singlet.norm());
    println!("  triplet (+1) amplitude: {:.6}", split.c_triplet_up.norm());
    println!("  triplet (−1) amplitude: {:.6}", split.c_triplet_down.norm());
    println!("(|↑↑⟩ and |↓↓⟩ are pure total-spin-1 states: no singlet part at all)");
}
