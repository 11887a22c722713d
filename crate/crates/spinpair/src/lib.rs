//! Measurement statistics of spin-entangled qubit pairs under Bloch-sphere
//! basis rotations.
//!
//! A two-qubit state that is (−) correlated in the reference basis
//! (`p|↑↓⟩ + q e^{iα}|↓↑⟩`) or (+) correlated (`p|↑↑⟩ + q e^{iα}|↓↓⟩`)
//! shows a different mix of correlated outcomes in every other measurement
//! basis. This crate computes that mix in closed form and cross-checks every
//! formula against an independent brute-force state-vector oracle:
//!
//! - [`bloch`] — single-qubit states, measurement bases `(χ, δ)`, the 2×2
//!   rotation matrices connecting them, and single-particle probabilities.
//! - [`pairstate`] — the composite states, their rewrite coefficients in
//!   arbitrary (same or mixed) bases, entanglement degree, and the
//!   singlet/triplet decomposition in the coupled basis.
//! - [`correlations`] — joint, aggregate and local (marginal) probabilities,
//!   the correlation ratio ρ = P⁺/P⁻, interference visibility, the
//!   singlet/triplet/conversion criteria, and the equal-weight basis solver.
//! - [`oracle`] — explicit 4-amplitude projections used as ground truth for
//!   all of the above.
//! - [`sampler`] — seeded Monte Carlo draws from a joint distribution plus a
//!   χ² goodness-of-fit check.
//!
//! Everything is pure and immutable after construction; all operations are
//! safe to call from any number of threads.
//!
//! ```
//! use spinpair::bloch::BasisSpec;
//! use spinpair::correlations::{correlation_summary, pair_visibility, probs_minus};
//! use spinpair::pairstate::PairStateZ;
//!
//! let singlet = PairStateZ::singlet();
//! let basis = BasisSpec::new(1.0, 0.3).unwrap();
//! let joint = probs_minus(&singlet, &basis).unwrap();
//! let summary = correlation_summary(&joint, pair_visibility(&singlet, &basis, None));
//! assert!(summary.p_plus() < 1e-12); // (−) correlated in every basis
//! ```

pub mod bloch;
pub mod correlations;
pub mod error;
pub mod oracle;
pub mod pairstate;
pub mod sampler;

pub use bloch::Amplitude;
pub use error::{Error, Result};

/// Tolerance applied to user-supplied normalized quantities (state weights,
/// raw amplitude vectors). One decade of headroom over typical input rounding.
pub const CONSTRUCTION_TOL: f64 = 1e-9;

/// Tolerance for internal algebraic identities (unitarity, probability sums,
/// closed-form vs. oracle agreement).
pub const ALGEBRA_TOL: f64 = 1e-12;

/// Tolerance for criterion residuals in user-facing verdicts.
pub const CRITERION_TOL: f64 = 1e-9;
