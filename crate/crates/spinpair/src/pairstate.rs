//! Composite two-qubit states and their rewrite coefficients in arbitrary bases.
//!
//! Two reference-basis families are covered:
//!
//! ```text
//! (−) correlated   p|↑↓⟩ + q e^{iα}|↓↑⟩      (net z-component 0)
//! (+) correlated   p|↑↑⟩ + q e^{iα}|↓↓⟩
//! ```
//!
//! with `p, q` real non-negative and `p² + q² = 1`. Rewriting the (−) state in
//! a basis `e = (χ, δ)` for both parties gives, up to a global `e^{−iδ}`,
//!
//! ```text
//! f̃ (|ee⟩ − |ēē⟩) − g̃ |eē⟩ − h̃ |ēe⟩
//! f̃ = (p + q̃) m n      g̃ = p m² − q̃ n²      h̃ = p n² − q̃ m²      q̃ = q e^{iα}
//! ```
//!
//! For the (+) state the global phase cannot be factored out; the δ-dependence
//! is physical and enters through `ξ = α − 2δ`:
//!
//! ```text
//! F̃ |ee⟩ + G̃ |ēē⟩ + H̃ (|eē⟩ + |ēe⟩)
//! F̃ = p m² + q e^{iξ} n²      G̃ = p n² + q e^{iξ} m²      H̃ = (p − q e^{iξ}) m n
//! ```
//!
//! With different bases `e` (party A) and `e′` (party B), the (−) state becomes
//! `μ̃|ee′⟩ + ν̃|ēē′⟩ + σ̃|eē′⟩ + τ̃|ēe′⟩` with the phase combination
//! `ζ = α − δ + δ′` driving all interference terms.
//!
//! Coefficients are stored with the sign layout written above; only their
//! moduli carry the probability contract.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::bloch::{reduce_angle, Amplitude, BasisSpec};
use crate::error::{Error, Result};

/// Which reference-basis correlation family a [`PairStateZ`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// `p|↑↓⟩ + q e^{iα}|↓↑⟩` — opposite components in the reference basis.
    MinusCorrelated,
    /// `p|↑↑⟩ + q e^{iα}|↓↓⟩` — identical components in the reference basis.
    PlusCorrelated,
}

/// A two-qubit state correlated in the reference basis, parameterized by
/// non-negative weights `p, q` and relative phase α.
///
/// Constructors fold any sign of `p` or `q` into α and store weights
/// renormalized to `p² + q² = 1` at full precision, so downstream probability
/// sums close to machine accuracy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairStateZ {
    kind: PairKind,
    p: f64,
    q: f64,
    alpha: f64,
}

impl PairStateZ {
    /// Builds a state, rejecting weights whose squared norm is off by more
    /// than the construction tolerance.
    pub fn new(kind: PairKind, p: f64, q: f64, alpha: f64) -> Result<Self> {
        Self::build(kind, p, q, alpha, false)
    }

    /// Builds a state, rescaling the weights to satisfy `p² + q² = 1`.
    pub fn normalized(kind: PairKind, p: f64, q: f64, alpha: f64) -> Result<Self> {
        Self::build(kind, p, q, alpha, true)
    }

    fn build(kind: PairKind, p: f64, q: f64, alpha: f64, normalize: bool) -> Result<Self> {
        for (name, value) in [("p", p), ("q", q), ("alpha", alpha)] {
            if !value.is_finite() {
                return Err(Error::NonFinite { name, value });
            }
        }
        // Phases of negative weights fold into alpha; a simultaneous flip of
        // both is a global phase and cancels.
        let mut alpha = alpha;
        if p < 0.0 {
            alpha += PI;
        }
        if q < 0.0 {
            alpha += PI;
        }
        let (p, q) = (p.abs(), q.abs());
        let norm_sq = p * p + q * q;
        if norm_sq == 0.0 {
            return Err(Error::ZeroState);
        }
        if !normalize {
            crate::bloch::norm_gate(norm_sq)?;
        }
        let scale = norm_sq.sqrt();
        Ok(Self {
            kind,
            p: p / scale,
            q: q / scale,
            alpha: reduce_angle(alpha),
        })
    }

    /// The maximally entangled (−) state with α = π: the singlet.
    pub fn singlet() -> Self {
        Self::new(PairKind::MinusCorrelated, FRAC_1_SQRT_2, FRAC_1_SQRT_2, PI)
            .expect("singlet parameters are valid")
    }

    pub fn kind(&self) -> PairKind {
        self.kind
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// The complex second weight `q̃ = q e^{iα}`.
    pub fn q_tilde(&self) -> Amplitude {
        Amplitude::from_polar(self.q, self.alpha)
    }

    /// Entanglement degree `ε = p²/q²`. 1 means maximal entanglement; the
    /// limit q → 0 diverges and is reported as an error.
    pub fn epsilon(&self) -> Result<f64> {
        if self.q == 0.0 {
            return Err(Error::DegenerateRatio);
        }
        Ok((self.p * self.p) / (self.q * self.q))
    }

    /// Reference-basis outcome weights `(p², q²)` of the two composite
    /// eigenstates.
    pub fn weights(&self) -> (f64, f64) {
        (self.p * self.p, self.q * self.q)
    }

    /// Expands into the 4-amplitude form over the reference product basis.
    pub fn to_general(&self) -> TwoQubitVector {
        let zero = Amplitude::from(0.0);
        let p = Amplitude::from(self.p);
        let qt = self.q_tilde();
        let amps = match self.kind {
            PairKind::MinusCorrelated => [zero, p, qt, zero],
            PairKind::PlusCorrelated => [p, zero, zero, qt],
        };
        TwoQubitVector::reference(amps).expect("weights are normalized")
    }

    fn require(&self, kind: PairKind, expected: &'static str) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::KindMismatch { expected })
        }
    }

    /// Rewrite coefficients of a (−) correlated state in the basis `e` used
    /// by both parties.
    pub fn rewrite_minus(&self, e: &BasisSpec) -> Result<CoefficientsMinus> {
        self.require(PairKind::MinusCorrelated, "(-) correlated")?;
        let (m, n) = (e.m(), e.n());
        let p = Amplitude::from(self.p);
        let qt = self.q_tilde();
        Ok(CoefficientsMinus {
            f: (p + qt) * (m * n),
            g: p * (m * m) - qt * (n * n),
            h: p * (n * n) - qt * (m * m),
            delta: e.delta(),
        })
    }

    /// Rewrite coefficients of a (+) correlated state in the basis `e` used
    /// by both parties.
    pub fn rewrite_plus(&self, e: &BasisSpec) -> Result<CoefficientsPlus> {
        self.require(PairKind::PlusCorrelated, "(+) correlated")?;
        let (m, n) = (e.m(), e.n());
        let xi = reduce_angle(self.alpha - 2.0 * e.delta());
        let p = Amplitude::from(self.p);
        let q_xi = Amplitude::from_polar(self.q, xi);
        Ok(CoefficientsPlus {
            f: p * (m * m) + q_xi * (n * n),
            g: p * (n * n) + q_xi * (m * m),
            h: (p - q_xi) * (m * n),
            xi,
        })
    }

    /// Rewrite coefficients of a (−) correlated state with party A measured
    /// along `e` and party B along `e_prime`.
    pub fn rewrite_mixed(&self, e: &BasisSpec, e_prime: &BasisSpec) -> Result<CoefficientsMixed> {
        self.require(PairKind::MinusCorrelated, "(-) correlated")?;
        let (m, n) = (e.m(), e.n());
        let (mp, np) = (e_prime.m(), e_prime.n());
        let first = Amplitude::from_polar(self.p, -e_prime.delta());
        let second = Amplitude::from_polar(self.q, self.alpha - e.delta());
        Ok(CoefficientsMixed {
            mu: first * (m * np) + second * (n * mp),
            nu: first * (n * mp) + second * (m * np),
            sigma: first * (m * mp) - second * (n * np),
            tau: first * (n * np) - second * (m * mp),
            zeta: reduce_angle(self.alpha - e.delta() + e_prime.delta()),
        })
    }
}

/// Identifies the product basis a [`TwoQubitVector`]'s amplitudes refer to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BasisLabel {
    /// The reference (z) basis.
    Reference,
    /// An arbitrary measured direction.
    Measured { chi: f64, delta: f64 },
}

impl BasisLabel {
    pub fn from_basis(e: &BasisSpec) -> Self {
        Self::Measured {
            chi: e.chi(),
            delta: e.delta(),
        }
    }
}

/// A general 4-amplitude composite state over a labeled product basis, in the
/// fixed ordering `(ee′, eē′, ēe′, ēē′)` (first slot is party A).
///
/// For the reference basis this reads `(↑↑, ↑↓, ↓↑, ↓↓)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitVector {
    amps: [Amplitude; 4],
    labels: (BasisLabel, BasisLabel),
}

impl TwoQubitVector {
    /// Accepts amplitudes whose total squared norm is within the construction
    /// tolerance of 1 and stores them rescaled to exact unit norm.
    pub fn new(amps: [Amplitude; 4], labels: (BasisLabel, BasisLabel)) -> Result<Self> {
        let norm_sq: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        crate::bloch::norm_gate(norm_sq)?;
        let scale = norm_sq.sqrt();
        Ok(Self {
            amps: amps.map(|a| a / scale),
            labels,
        })
    }

    /// A vector over the reference (z ⊗ z) product basis.
    pub fn reference(amps: [Amplitude; 4]) -> Result<Self> {
        Self::new(amps, (BasisLabel::Reference, BasisLabel::Reference))
    }

    pub fn amps(&self) -> &[Amplitude; 4] {
        &self.amps
    }

    pub fn labels(&self) -> (BasisLabel, BasisLabel) {
        self.labels
    }

    pub fn norm_sq(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Projects a reference-basis vector onto the coupled total-spin basis
    /// `{(|↑↓⟩−|↓↑⟩)/√2, (|↑↓⟩+|↓↑⟩)/√2, |↑↑⟩, |↓↓⟩}`.
    ///
    /// The amplitudes must refer to the reference product basis.
    pub fn decompose_coupled(&self) -> SingletTripletSplit {
        let [uu, ud, du, dd] = self.amps;
        SingletTripletSplit {
            c_singlet: (ud - du) * FRAC_1_SQRT_2,
            c_triplet0: (ud + du) * FRAC_1_SQRT_2,
            c_triplet_up: uu,
            c_triplet_down: dd,
        }
    }
}

/// Rewrite coefficients `(f̃, g̃, h̃)` of a (−) correlated state, with the
/// dropped global phase `e^{−iδ}` recorded in `delta`.
///
/// Completeness: `2|f̃|² + |g̃|² + |h̃|² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientsMinus {
    pub f: Amplitude,
    pub g: Amplitude,
    pub h: Amplitude,
    /// Azimuth of the measurement basis whose global phase was dropped.
    pub delta: f64,
}

impl CoefficientsMinus {
    /// Outcome probabilities in the `(ee, eē, ēe, ēē)` ordering.
    pub fn probabilities(&self) -> [f64; 4] {
        let f2 = self.f.norm_sqr();
        [f2, self.g.norm_sqr(), self.h.norm_sqr(), f2]
    }

    pub fn completeness_defect(&self) -> f64 {
        (self.probabilities().iter().sum::<f64>() - 1.0).abs()
    }
}

/// Rewrite coefficients `(F̃, G̃, H̃)` of a (+) correlated state, with the
/// physical phase `ξ = α − 2δ`.
///
/// Completeness: `|F̃|² + |G̃|² + 2|H̃|² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientsPlus {
    pub f: Amplitude,
    pub g: Amplitude,
    pub h: Amplitude,
    /// `ξ = α − 2δ`, reduced into `[0, 2π)`.
    pub xi: f64,
}

impl CoefficientsPlus {
    /// Outcome probabilities in the `(ee, eē, ēe, ēē)` ordering.
    pub fn probabilities(&self) -> [f64; 4] {
        let h2 = self.h.norm_sqr();
        [self.f.norm_sqr(), h2, h2, self.g.norm_sqr()]
    }

    pub fn completeness_defect(&self) -> f64 {
        (self.probabilities().iter().sum::<f64>() - 1.0).abs()
    }
}

/// Rewrite coefficients `(μ̃, ν̃, σ̃, τ̃)` of a (−) correlated state measured in
/// different bases by the two parties, with `ζ = α − δ + δ′`.
///
/// Completeness: `|μ̃|² + |ν̃|² + |σ̃|² + |τ̃|² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientsMixed {
    pub mu: Amplitude,
    pub nu: Amplitude,
    pub sigma: Amplitude,
    pub tau: Amplitude,
    /// `ζ = α − δ + δ′`, reduced into `[0, 2π)`.
    pub zeta: f64,
}

impl CoefficientsMixed {
    /// Outcome probabilities in the `(ee′, eē′, ēe′, ēē′)` ordering.
    pub fn probabilities(&self) -> [f64; 4] {
        [
            self.mu.norm_sqr(),
            self.sigma.norm_sqr(),
            self.tau.norm_sqr(),
            self.nu.norm_sqr(),
        ]
    }

    pub fn completeness_defect(&self) -> f64 {
        (self.probabilities().iter().sum::<f64>() - 1.0).abs()
    }
}

/// Projections of a reference-basis vector onto the coupled total-spin
/// eigenstates: the singlet `|0,0⟩` and the triplet `|1,0⟩`, `|1,+1⟩`,
/// `|1,−1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingletTripletSplit {
    pub c_singlet: Amplitude,
    pub c_triplet0: Amplitude,
    pub c_triplet_up: Amplitude,
    pub c_triplet_down: Amplitude,
}

impl SingletTripletSplit {
    pub fn norm_sq(&self) -> f64 {
        self.c_singlet.norm_sqr()
            + self.c_triplet0.norm_sqr()
            + self.c_triplet_up.norm_sqr()
            + self.c_triplet_down.norm_sqr()
    }

    /// Outcome probabilities `(singlet, triplet0, triplet+1, triplet−1)`.
    pub fn probabilities(&self) -> [f64; 4] {
        [
            self.c_singlet.norm_sqr(),
            self.c_triplet0.norm_sqr(),
            self.c_triplet_up.norm_sqr(),
            self.c_triplet_down.norm_sqr(),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, TAU};

    const EPS: f64 = 1e-12;

    #[test]
    fn exact_weights_accepted_without_normalize() {
        let s = PairStateZ::new(PairKind::MinusCorrelated, 0.6, 0.8, PI / 3.0).unwrap();
        assert!((s.p() - 0.6).abs() < EPS);
        assert!((s.q() - 0.8).abs() < EPS);
    }

    #[test]
    fn off_norm_weights_rejected_then_normalized() {
        let err = PairStateZ::new(PairKind::MinusCorrelated, 0.6, 0.9, 0.0);
        assert!(matches!(err, Err(Error::NotNormalized { .. })));
        let s = PairStateZ::normalized(PairKind::MinusCorrelated, 0.6, 0.9, 0.0).unwrap();
        assert!((s.p() * s.p() + s.q() * s.q() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn zero_state_rejected() {
        assert!(matches!(
            PairStateZ::normalized(PairKind::MinusCorrelated, 0.0, 0.0, 0.0),
            Err(Error::ZeroState)
        ));
    }

    #[test]
    fn negative_weights_fold_into_alpha() {
        let s = PairStateZ::new(PairKind::MinusCorrelated, 0.6, -0.8, 0.0).unwrap();
        assert!((s.q() - 0.8).abs() < EPS);
        assert!((s.alpha() - PI).abs() < EPS);

        // both negative: a pure global phase
        let s = PairStateZ::new(PairKind::MinusCorrelated, -0.6, -0.8, 0.5).unwrap();
        assert!((s.alpha() - 0.5).abs() < EPS);
    }

    #[test]
    fn epsilon_values() {
        let max = PairStateZ::new(
            PairKind::MinusCorrelated,
            FRAC_1_SQRT_2,
            FRAC_1_SQRT_2,
            0.0,
        )
        .unwrap();
        assert!((max.epsilon().unwrap() - 1.0).abs() < EPS);

        let s = PairStateZ::new(PairKind::MinusCorrelated, 0.6, 0.8, 0.0).unwrap();
        assert!((s.epsilon().unwrap() - 0.5625).abs() < EPS);
        // weights recoverable from epsilon
        let eps = s.epsilon().unwrap();
        assert!((eps / (1.0 + eps) - 0.36).abs() < EPS);
        assert!((1.0 / (1.0 + eps) - 0.64).abs() < EPS);

        let single = PairStateZ::new(PairKind::MinusCorrelated, 0.0, 1.0, 0.0).unwrap();
        assert_eq!(single.epsilon().unwrap(), 0.0);

        let degenerate = PairStateZ::new(PairKind::MinusCorrelated, 1.0, 0.0, 0.0).unwrap();
        assert!(matches!(degenerate.epsilon(), Err(Error::DegenerateRatio)));
    }

    #[test]
    fn to_general_layouts() {
        let singlet = PairStateZ::singlet().to_general();
        let a = singlet.amps();
        assert!(a[0].norm() < EPS);
        assert!((a[1].re - FRAC_1_SQRT_2).abs() < EPS);
        assert!((a[2].re + FRAC_1_SQRT_2).abs() < 1e-9);
        assert!(a[2].im.abs() < EPS);
        assert!(a[3].norm() < EPS);

        let plus = PairStateZ::new(
            PairKind::PlusCorrelated,
            FRAC_1_SQRT_2,
            FRAC_1_SQRT_2,
            0.0,
        )
        .unwrap()
        .to_general();
        let a = plus.amps();
        assert!((a[0].re - FRAC_1_SQRT_2).abs() < 1e-9);
        assert!(a[1].norm() < EPS);
        assert!(a[2].norm() < EPS);
        assert!((a[3].re - FRAC_1_SQRT_2).abs() < 1e-9);

        let ket = PairStateZ::new(PairKind::MinusCorrelated, 1.0, 0.0, 0.3)
            .unwrap()
            .to_general();
        assert_eq!(ket.amps()[1], Amplitude::from(1.0));
    }

    #[test]
    fn rewrite_minus_singlet_has_no_plus_component() {
        let singlet = PairStateZ::singlet();
        for &(chi, delta) in &[(0.4, 1.0), (FRAC_PI_2, 2.0), (2.8, 5.1)] {
            let e = BasisSpec::new(chi, delta).unwrap();
            let c = singlet.rewrite_minus(&e).unwrap();
            assert!(c.f.norm() < EPS);
            assert!(c.completeness_defect() < EPS);
        }
    }

    #[test]
    fn rewrite_minus_triplet_kills_minus_terms() {
        let s = PairStateZ::new(
            PairKind::MinusCorrelated,
            FRAC_1_SQRT_2,
            FRAC_1_SQRT_2,
            0.0,
        )
        .unwrap();
        let c = s.rewrite_minus(&BasisSpec::equatorial(0.7)).unwrap();
        assert!(c.g.norm() < EPS);
        assert!(c.h.norm() < EPS);
    }

    #[test]
    fn rewrite_minus_reference_basis_recovers_weights() {
        let s = PairStateZ::new(PairKind::MinusCorrelated, 0.6, 0.8, 1.1).unwrap();
        let c = s.rewrite_minus(&BasisSpec::reference()).unwrap();
        assert!(c.f.norm() < EPS);
        assert!((c.g - Amplitude::from(0.6)).norm() < EPS);
        assert!((c.h + s.q_tilde()).norm() < EPS);
    }

    #[test]
    fn rewrite_plus_criteria_points() {
        // p = q, δ = α/2 kills H
        let s = PairStateZ::new(
            PairKind::PlusCorrelated,
            FRAC_1_SQRT_2,
            FRAC_1_SQRT_2,
            0.8,
        )
        .unwrap();
        let e = BasisSpec::new(PI / 3.0, 0.4).unwrap();
        let c = s.rewrite_plus(&e).unwrap();
        assert!(c.h.norm() < EPS);
        assert!(c.completeness_defect() < EPS);

        // p = q, m = n, δ = (α−π)/2 kills F and G
        let e = BasisSpec::equatorial((0.8 - PI) / 2.0 + TAU);
        let c = s.rewrite_plus(&e).unwrap();
        assert!(c.f.norm() < 1e-9);
        assert!(c.g.norm() < 1e-9);

        // reference basis is the trivial case
        let c = s.rewrite_plus(&BasisSpec::reference()).unwrap();
        assert!((c.f - Amplitude::from(s.p())).norm() < EPS);
        assert!((c.g - Amplitude::from_polar(s.q(), c.xi)).norm() < EPS);
        assert!(c.h.norm() < EPS);
    }

    #[test]
    fn rewrite_mixed_reduces_to_same_basis_moduli() {
        let s = PairStateZ::new(PairKind::MinusCorrelated, 0.6, 0.8, 2.2).unwrap();
        let e = BasisSpec::new(1.2, 0.9).unwrap();
        let mixed = s.rewrite_mixed(&e, &e).unwrap();
        let same = s.rewrite_minus(&e).unwrap();
        assert!((mixed.mu.norm() - same.f.norm()).abs() < EPS);
        assert!((mixed.nu.norm() - same.f.norm()).abs() < EPS);
        assert!((mixed.sigma.norm() - same.g.norm()).abs() < EPS);
        assert!((mixed.tau.norm() - same.h.norm()).abs() < EPS);
        assert!(mixed.completeness_defect() < EPS);
    }

    #[test]
    fn rewrite_mixed_singlet_perpendicular_axes() {
        let singlet = PairStateZ::singlet();
        let z = BasisSpec::reference();
        let x = BasisSpec::equatorial(0.0);
        let c = singlet.rewrite_mixed(&z, &x).unwrap();
        assert!((c.mu.norm_sqr() - 0.25).abs() < 1e-9);
    }

    #[test]
    fn rewrite_mixed_product_state_factorizes() {
        let s = PairStateZ::new(PairKind::MinusCorrelated, 1.0, 0.0, 0.0).unwrap();
        let e = BasisSpec::new(0.8, 0.5).unwrap();
        let ep = BasisSpec::new(2.1, 1.7).unwrap();
        let c = s.rewrite_mixed(&e, &ep).unwrap();
        let ph = Amplitude::from_polar(1.0, -ep.delta());
        assert!((c.mu - ph * (e.m() * ep.n())).norm() < EPS);
        assert!((c.sigma - ph * (e.m() * ep.m())).norm() < EPS);
        assert!(c.zeta == reduce_angle(-e.delta() + ep.delta()));
    }

    #[test]
    fn wrong_kind_is_rejected() {
        let minus = PairStateZ::singlet();
        let plus = PairStateZ::new(
            PairKind::PlusCorrelated,
            FRAC_1_SQRT_2,
            FRAC_1_SQRT_2,
            0.0,
        )
        .unwrap();
        let e = BasisSpec::equatorial(0.0);
        assert!(minus.rewrite_plus(&e).is_err());
        assert!(plus.rewrite_minus(&e).is_err());
        assert!(plus.rewrite_mixed(&e, &e).is_err());
    }

    #[test]
    fn decompose_singlet_is_pure() {
        let split = PairStateZ::singlet().to_general().decompose_coupled();
        assert!((split.c_singlet.norm() - 1.0).abs() < EPS);
        assert!(split.c_triplet0.norm() < EPS);
        assert!(split.c_triplet_up.norm() < EPS);
        assert!(split.c_triplet_down.norm() < EPS);
    }

    #[test]
    fn decompose_general_minus_and_plus() {
        let s = PairStateZ::new(PairKind::MinusCorrelated, 0.6, 0.8, 1.3).unwrap();
        let split = s.to_general().decompose_coupled();
        let p = Amplitude::from(s.p());
        let qt = s.q_tilde();
        assert!((split.c_singlet - (p - qt) * FRAC_1_SQRT_2).norm() < EPS);
        assert!((split.c_triplet0 - (p + qt) * FRAC_1_SQRT_2).norm() < EPS);
        assert!((split.norm_sq() - 1.0).abs() < EPS);

        let phi = PairStateZ::new(PairKind::PlusCorrelated, 0.6, 0.8, 1.3).unwrap();
        let split = phi.to_general().decompose_coupled();
        assert!(split.c_singlet.norm() < EPS);
        assert!((split.c_triplet_up - Amplitude::from(0.6)).norm() < EPS);
        assert!((split.c_triplet_down - phi.q_tilde()).norm() < EPS);
    }

    #[test]
    fn vector_norm_gate() {
        let zero = Amplitude::from(0.0);
        let bad = [Amplitude::from(0.5), zero, zero, zero];
        assert!(matches!(
            TwoQubitVector::reference(bad),
            Err(Error::NotNormalized { .. })
        ));
    }
}
