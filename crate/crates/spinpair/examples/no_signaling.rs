//! Coherence transfer in action: sweeping the pair phase α makes the joint
//! probabilities oscillate with full visibility while each party's local
//! marginal stays perfectly flat — no signaling through the entanglement.
//!
//! Run with: cargo run --example no_signaling

use std::f64::consts::TAU;

use spinpair::bloch::BasisSpec;
use spinpair::correlations::{joint_probs, local_probs, pair_visibility, Party};
use spinpair::pairstate::{PairKind, PairStateZ};

fn main() {
    let p = 1.0 / 2f64.sqrt();
    let e = BasisSpec::equatorial(0.0);

    println!("equally-weighted (−) state, equatorial basis, α from 0 to 2π:\n");
    println!("{:>8} {:>10} {:>10} {:>10}", "α", "P⁺", "P⁻", "P_A(e)");
    let mut plus_min = f64::INFINITY;
    let mut plus_max = f64::NEG_INFINITY;
    let mut marg_min = f64::INFINITY;
    let mut marg_max = f64::NEG_INFINITY;
    for k in 0..=16 {
        let alpha = k as f64 * TAU / 16.0;
        let state = PairStateZ::new(PairKind::MinusCorrelated, p, p, alpha).unwrap();
        let j = joint_probs(&state, &e, None).unwrap();
        let (pa, _) = local_probs(&state, &e, None, Party::A).unwrap();
        if k % 2 == 0 {
            println!("{alpha:>8.4} {:>10.6} {:>10.6} {:>10.6}", j.p_plus(), j.p_minus(), pa);
        }
        plus_min = plus_min.min(j.p_plus());
        plus_max = plus_max.max(j.p_plus());
        marg_min = marg_min.min(pa);
        marg_max = marg_max.max(pa);
    }

    let state = PairStateZ::new(PairKind::MinusCorrelated, p, p, 0.0).unwrap();
    println!("\nfringe half-amplitude: {:.6}", (plus_max - plus_min) / 2.0);
    println!("predicted visibility:  {:.6}", pair_visibility(&state, &e, None));
    println!("marginal spread:       {:.3e}", marg_max - marg_min);
    println!("\nThe nonlocal outcomes carry the full interference contrast; the");
    println!("local ones carry none. The coherence lives in the pair, not in");
    println!("either particle.");
}
