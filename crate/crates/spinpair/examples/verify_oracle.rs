//! Cross-checks every closed-form probability family against the explicit
//! state-vector projection oracle on random parameter tuples.
//!
//! Run with: cargo run --example verify_oracle

use spinpair::oracle::{project, verify_closed_forms};
use spinpair::pairstate::PairStateZ;
use spinpair::bloch::BasisSpec;

fn main() {
    let summary = verify_closed_forms(10_000, 42, 1e-12);
    println!(
        "{} trials, seed {}, tolerance {:.0e}\n",
        summary.trials(),
        summary.seed(),
        summary.tol()
    );
    println!("{:<18} {:>14} {:>6}", "family", "max deviation", "pass");
    for f in summary.families() {
        println!("{:<18} {:>14.3e} {:>6}", f.name, f.max_deviation, f.pass);
    }
    println!(
        "\nall families pass: {} (worst {:.3e})",
        summary.all_pass(),
        summary.max_deviation()
    );

    // The oracle itself, by hand: project the singlet onto a tilted basis.
    let singlet = PairStateZ::singlet().to_general();
    let e = BasisSpec::new(1.234, 2.345).unwrap();
    let r = project(&singlet, &e, &e).unwrap();
    println!("\nsinglet projected onto an arbitrary shared basis:");
    println!("  probabilities: {:?}", r.probs());
    println!("  (opposite outcomes with weight 1/2 each, in every basis)");
}
