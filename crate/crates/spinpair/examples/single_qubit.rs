//! Single-qubit basics: states on the Bloch sphere, antipodes, basis
//! rotations, and measurement statistics with their interference visibility.
//!
//! Run with: cargo run --example single_qubit

use std::f64::consts::{FRAC_PI_2, PI};

use spinpair::bloch::{spin_cone_angle, BasisSpec, BlochAngles, Rotation2, SingleQubitState};

fn main() {
    // A state halfway between the pole and the equator, with some azimuth.
    let angles = BlochAngles::new(PI / 3.0, 0.8).unwrap();
    let s = SingleQubitState::from_angles(angles);
    println!("state  (θ = π/3, φ = 0.8):  a = {:.6}, b = {:.6}", s.a(), s.b());

    let antipode = s.antipode();
    println!(
        "antipode:                   a = {:.6}, b = {:.6}, φ = {:.6}",
        antipode.a(),
        antipode.b(),
        antipode.phi()
    );
    println!("⟨s|antipode⟩ = {:.3e}  (orthogonal)", s.inner(&antipode).norm());

    // Measurement along a tilted direction.
    let e = BasisSpec::new(1.1, 0.3).unwrap();
    let (p_e, p_ebar) = s.measure_probs(&e);
    println!("\nmeasuring along (χ = 1.1, δ = 0.3):");
    println!("  P(e)  = {p_e:.6}");
    println!("  P(ē)  = {p_ebar:.6}");
    println!("  ΔP    = {:.6}", s.delta_p(&e));
    println!("  V     = {:.6}  (half peak-to-trough over the phase)", s.visibility(&e));

    // The rotation matrix behind that basis and its determinant law.
    let r = Rotation2::from_basis(&e);
    println!("\nbasis rotation determinant: {:.6}  (should be −e^{{iδ}})", r.det());
    println!("unitarity defect: {:.3e}", r.unitarity_defect());

    // Equatorial states are equally weighted; measuring one along its own
    // axis is deterministic.
    let towards = SingleQubitState::from_angles(BlochAngles::new(FRAC_PI_2, 0.0).unwrap());
    let x_axis = BasisSpec::equatorial(0.0);
    println!("\nequatorial state measured along its own axis: P(e) = {:.1}",
        towards.measure_probs(&x_axis).0);

    // The spin cone: a spin-1/2 vector never aligns with an axis.
    let xi = spin_cone_angle(0.5, 0.5).unwrap();
    println!("\nspin-1/2 cone half-angle: {xi:.6} rad ({:.2}°)", xi.to_degrees());
}
