//! The analytic criteria: when is a reference-correlated state a pure singlet,
//! a pure triplet in disguise, or balanced between the two — and when does a
//! (+) state keep or fully convert its correlations.
//!
//! Run with: cargo run --example criteria

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use spinpair::bloch::BasisSpec;
use spinpair::correlations::{
    check_plus_preserving, check_plus_to_minus, check_singlet, check_triplet,
    equal_weight_basis, probs_minus, CriterionReport,
};
use spinpair::pairstate::{PairKind, PairStateZ};
use spinpair::Error;

fn show(report: &CriterionReport) {
    println!("  {:<16} {}", report.id.as_str(), report.verdict);
    for r in &report.residuals {
        println!("      {:<24} {:.3e}", r.name, r.value);
    }
    if let Some(note) = report.note {
        println!("      note: {note}");
    }
}

fn main() {
    let singlet = PairStateZ::singlet();
    println!("singlet candidate (p = q, α = π):");
    show(&check_singlet(&singlet).unwrap());

    let triplet = PairStateZ::new(
        PairKind::MinusCorrelated,
        FRAC_1_SQRT_2,
        FRAC_1_SQRT_2,
        0.0,
    )
    .unwrap();
    println!("\ntriplet candidate (p = q, α = 0) at the equator:");
    show(&check_triplet(&triplet, &BasisSpec::equatorial(0.9)).unwrap());
    println!("same state off the equator (χ = π/4):");
    show(&check_triplet(&triplet, &BasisSpec::new(PI / 4.0, 0.0).unwrap()).unwrap());

    // Equal-weight basis: where (+) and (−) correlations balance.
    println!("\nequal-weight basis for the α = 0 state:");
    match equal_weight_basis(&triplet) {
        Ok((hi, lo)) => {
            for m2 in [hi, lo] {
                let chi = 2.0 * m2.sqrt().acos();
                let j = probs_minus(&triplet, &BasisSpec::new(chi, 0.0).unwrap()).unwrap();
                println!("  m² = {m2:.6} → P⁺ = {:.6}, P⁻ = {:.6}", j.p_plus(), j.p_minus());
            }
        }
        Err(Error::NoRealSolution) => println!("  no real solution"),
        Err(e) => println!("  {e}"),
    }
    println!("for the singlet (cos α < 0):");
    match equal_weight_basis(&singlet) {
        Err(Error::NoRealSolution) => println!("  no real solution, as expected"),
        other => println!("  unexpected: {other:?}"),
    }

    // (+) state criteria tie the basis azimuth to the state phase.
    let alpha = 0.8;
    let plus = PairStateZ::new(PairKind::PlusCorrelated, FRAC_1_SQRT_2, FRAC_1_SQRT_2, alpha)
        .unwrap();
    println!("\n(+) state with α = {alpha}: basis δ = α/2 preserves the correlations:");
    show(&check_plus_preserving(&plus, &BasisSpec::new(1.2, alpha / 2.0).unwrap()).unwrap());
    println!("equatorial basis with δ = (α − π)/2 converts them fully:");
    show(&check_plus_to_minus(&plus, &BasisSpec::equatorial((alpha - PI) / 2.0)).unwrap());
}
