//! Joint, aggregate and local measurement probabilities, the correlation
//! ratio ρ, interference visibility, and the analytic state/basis criteria.
//!
//! Outcomes `(e, e′)` and `(ē, ē′)` are labeled (+) correlated, `(e, ē′)` and
//! `(ē, e′)` (−) correlated; with mixed bases this is the generalized
//! labeling, meaningful while `e · e′ > 0` ([`BasisSpec::dot`] lets callers
//! judge). For a (−) correlated state measured along `e` by both parties:
//!
//! ```text
//! P⁺(e,e) = P⁺(ē,ē) = (mn)² (1 + 2pq cos α)
//! P⁻(e,ē) = (pm²)² + (qn²)² − 2pq (mn)² cos α
//! P⁻(ē,e) = (pn²)² + (qm²)² − 2pq (mn)² cos α
//! ```
//!
//! For a (+) correlated state the same roles swap and the phase is
//! `ξ = α − 2δ`; with mixed bases the phase is `ζ = α − δ + δ′`. In every
//! case the marginal seen by either party alone is phase-independent: the
//! interference lives only in the joint outcomes (coherence transfer).

use crate::bloch::{circular_distance, BasisSpec};
use crate::error::{Error, Result};
use crate::pairstate::{PairKind, PairStateZ};
use crate::{ALGEBRA_TOL, CRITERION_TOL};

use std::f64::consts::PI;
use std::fmt;

/// The four joint outcome probabilities in the fixed ordering
/// `(e e′), (e ē′), (ē e′), (ē ē′)` — party A first.
///
/// Entries are clamped into `[0, 1]`; construction rejects sets that deviate
/// from a distribution by more than the algebra tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointProbs {
    p_ee: f64,
    p_eeb: f64,
    p_ebe: f64,
    p_ebeb: f64,
}

impl JointProbs {
    pub fn new(values: [f64; 4]) -> Result<Self> {
        let mut sum = 0.0;
        for &v in &values {
            if !v.is_finite() {
                return Err(Error::NonFinite {
                    name: "probability",
                    value: v,
                });
            }
            if !(-ALGEBRA_TOL..=1.0 + ALGEBRA_TOL).contains(&v) {
                return Err(Error::NotNormalized {
                    deviation: if v < 0.0 { -v } else { v - 1.0 },
                    tolerance: ALGEBRA_TOL,
                });
            }
            sum += v;
        }
        if (sum - 1.0).abs() > ALGEBRA_TOL {
            return Err(Error::NotNormalized {
                deviation: (sum - 1.0).abs(),
                tolerance: ALGEBRA_TOL,
            });
        }
        let [p_ee, p_eeb, p_ebe, p_ebeb] = values.map(|v| v.clamp(0.0, 1.0));
        Ok(Self {
            p_ee,
            p_eeb,
            p_ebe,
            p_ebeb,
        })
    }

    /// Probability of `(e, e′)`.
    pub fn p_ee(&self) -> f64 {
        self.p_ee
    }

    /// Probability of `(e, ē′)`.
    pub fn p_eeb(&self) -> f64 {
        self.p_eeb
    }

    /// Probability of `(ē, e′)`.
    pub fn p_ebe(&self) -> f64 {
        self.p_ebe
    }

    /// Probability of `(ē, ē′)`.
    pub fn p_ebeb(&self) -> f64 {
        self.p_ebeb
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.p_ee, self.p_eeb, self.p_ebe, self.p_ebeb]
    }

    /// Total (+) correlated weight.
    pub fn p_plus(&self) -> f64 {
        self.p_ee + self.p_ebeb
    }

    /// Total (−) correlated weight.
    pub fn p_minus(&self) -> f64 {
        self.p_eeb + self.p_ebe
    }
}

/// Joint probabilities of a (−) correlated state measured along `e` by both
/// parties.
pub fn probs_minus(state: &PairStateZ, e: &BasisSpec) -> Result<JointProbs> {
    if state.kind() != PairKind::MinusCorrelated {
        return Err(Error::KindMismatch {
            expected: "(-) correlated",
        });
    }
    let (p, q) = (state.p(), state.q());
    let (m, n) = (e.m(), e.n());
    let mn_sq = (m * n) * (m * n);
    let fringe = 2.0 * p * q * state.alpha().cos();
    let plus = mn_sq * (1.0 + fringe);
    let pm2 = p * m * m;
    let qn2 = q * n * n;
    let pn2 = p * n * n;
    let qm2 = q * m * m;
    JointProbs::new([
        plus,
        pm2 * pm2 + qn2 * qn2 - mn_sq * fringe,
        pn2 * pn2 + qm2 * qm2 - mn_sq * fringe,
        plus,
    ])
}

/// Joint probabilities of a (+) correlated state measured along `e` by both
/// parties. The phase entering the fringes is `ξ = α − 2δ`.
pub fn probs_plus(state: &PairStateZ, e: &BasisSpec) -> Result<JointProbs> {
    if state.kind() != PairKind::PlusCorrelated {
        return Err(Error::KindMismatch {
            expected: "(+) correlated",
        });
    }
    let (p, q) = (state.p(), state.q());
    let (m, n) = (e.m(), e.n());
    let (m2, n2) = (m * m, n * n);
    let mn_sq = (m * n) * (m * n);
    let fringe = 2.0 * p * q * (state.alpha() - 2.0 * e.delta()).cos();
    let minus = mn_sq * (1.0 - fringe);
    JointProbs::new([
        p * p * m2 * m2 + q * q * n2 * n2 + mn_sq * fringe,
        minus,
        minus,
        p * p * n2 * n2 + q * q * m2 * m2 + mn_sq * fringe,
    ])
}

/// Joint probabilities of a (−) correlated state with party A measuring along
/// `e` and party B along `e_prime`. The phase is `ζ = α − δ + δ′`.
pub fn probs_mixed(state: &PairStateZ, e: &BasisSpec, e_prime: &BasisSpec) -> Result<JointProbs> {
    if state.kind() != PairKind::MinusCorrelated {
        return Err(Error::KindMismatch {
            expected: "(-) correlated",
        });
    }
    let (p, q) = (state.p(), state.q());
    let (m, n) = (e.m(), e.n());
    let (mp, np) = (e_prime.m(), e_prime.n());
    let fringe =
        2.0 * p * q * m * n * mp * np * (state.alpha() - e.delta() + e_prime.delta()).cos();
    let (p2, q2) = (p * p, q * q);
    let (mnp, nmp, mmp, nnp) = (m * np, n * mp, m * mp, n * np);
    JointProbs::new([
        p2 * mnp * mnp + q2 * nmp * nmp + fringe,
        p2 * mmp * mmp + q2 * nnp * nnp - fringe,
        p2 * nnp * nnp + q2 * mmp * mmp - fringe,
        p2 * nmp * nmp + q2 * mnp * mnp + fringe,
    ])
}

/// Dispatches to the joint-probability formula matching the state kind and
/// basis mode. Mixed bases are defined for (−) correlated states.
pub fn joint_probs(
    state: &PairStateZ,
    e: &BasisSpec,
    e_prime: Option<&BasisSpec>,
) -> Result<JointProbs> {
    match (state.kind(), e_prime) {
        (PairKind::MinusCorrelated, None) => probs_minus(state, e),
        (PairKind::PlusCorrelated, None) => probs_plus(state, e),
        (PairKind::MinusCorrelated, Some(ep)) => probs_mixed(state, e, ep),
        (PairKind::PlusCorrelated, Some(_)) => Err(Error::KindMismatch {
            expected: "(-) correlated for mixed bases",
        }),
    }
}

/// Which party's marginal to extract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Party {
    A,
    B,
}

/// Local outcome probabilities `(P(e), P(ē))` for one party, obtained by
/// summing the joint entries. The result is phase-independent — for a (−)
/// correlated state it always equals `(p²m² + q²n², p²n² + q²m²)` in that
/// party's own basis — while the joint entries it sums are not.
pub fn local_probs(
    state: &PairStateZ,
    e: &BasisSpec,
    e_prime: Option<&BasisSpec>,
    party: Party,
) -> Result<(f64, f64)> {
    let j = joint_probs(state, e, e_prime)?;
    Ok(match party {
        Party::A => (j.p_ee + j.p_eeb, j.p_ebe + j.p_ebeb),
        Party::B => (j.p_ee + j.p_ebe, j.p_eeb + j.p_ebeb),
    })
}

/// Aggregates of a joint distribution: (+)/(−) weights, their ratio ρ, and
/// the interference visibility supplied by the caller.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationSummary {
    p_plus: f64,
    p_minus: f64,
    rho: f64,
    visibility: f64,
}

impl CorrelationSummary {
    pub fn p_plus(&self) -> f64 {
        self.p_plus
    }

    pub fn p_minus(&self) -> f64 {
        self.p_minus
    }

    /// `ρ = P⁺/P⁻`; `f64::INFINITY` marks the pure-(+) limit `P⁻ = 0`.
    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn visibility(&self) -> f64 {
        self.visibility
    }
}

/// Collapses a joint distribution into `P⁺`, `P⁻` and `ρ = P⁺/P⁻`, attaching
/// the visibility of the underlying fringe (see [`pair_visibility`]).
pub fn correlation_summary(j: &JointProbs, visibility: f64) -> CorrelationSummary {
    let p_plus = j.p_plus();
    let p_minus = j.p_minus();
    let rho = if p_minus == 0.0 {
        f64::INFINITY
    } else {
        p_plus / p_minus
    };
    CorrelationSummary {
        p_plus,
        p_minus,
        rho,
        visibility,
    }
}

/// Half peak-to-trough amplitude of the joint-probability fringes over a full
/// phase period: `4pq(mn)²` when both parties share a basis, `4pq·mn·m′n′`
/// with mixed bases.
pub fn pair_visibility(state: &PairStateZ, e: &BasisSpec, e_prime: Option<&BasisSpec>) -> f64 {
    let scale = match e_prime {
        None => (e.m() * e.n()) * (e.m() * e.n()),
        Some(ep) => e.m() * e.n() * ep.m() * ep.n(),
    };
    4.0 * state.p() * state.q() * scale
}

/// Identifies one of the analytic criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriterionId {
    /// The state stays (−) correlated in every basis (pure singlet).
    Singlet,
    /// The state converts to pure (+) correlations in the given equatorial
    /// basis (pure triplet).
    Triplet,
    /// A basis exists where (+) and (−) correlations have equal weight.
    EqualWeight,
    /// A (+) correlated state stays (+) correlated in the given basis.
    PlusPreserving,
    /// A (+) correlated state converts to pure (−) correlations in the given
    /// basis.
    PlusToMinus,
}

impl CriterionId {
    pub fn as_str(&self) -> &'static str {
        match self {
            CriterionId::Singlet => "singlet",
            CriterionId::Triplet => "triplet",
            CriterionId::EqualWeight => "equal_weight",
            CriterionId::PlusPreserving => "plus_preserving",
            CriterionId::PlusToMinus => "plus_to_minus",
        }
    }
}

impl fmt::Display for CriterionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Satisfied,
    Violated,
}

impl Verdict {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, Verdict::Satisfied)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Satisfied => "satisfied",
            Verdict::Violated => "violated",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named deviation from a criterion's exact conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    pub name: &'static str,
    pub value: f64,
}

/// Verdict and residuals for one criterion. The verdict is decided by the
/// leading residuals (all of them for most criteria; the coefficient modulus
/// alone for [`CriterionId::PlusPreserving`], where a trivial basis satisfies
/// the criterion regardless of the state — `note` flags that case).
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionReport {
    pub id: CriterionId,
    pub verdict: Verdict,
    pub residuals: Vec<Residual>,
    pub note: Option<&'static str>,
}

impl CriterionReport {
    pub fn satisfied(&self) -> bool {
        self.verdict.is_satisfied()
    }
}

fn verdict_from(residuals: &[Residual], count: usize) -> Verdict {
    if residuals[..count].iter().all(|r| r.value <= CRITERION_TOL) {
        Verdict::Satisfied
    } else {
        Verdict::Violated
    }
}

/// A (−) correlated state is a pure singlet — (−) correlated in every basis —
/// exactly when `p = q` and `α = π`.
pub fn check_singlet(state: &PairStateZ) -> Result<CriterionReport> {
    if state.kind() != PairKind::MinusCorrelated {
        return Err(Error::KindMismatch {
            expected: "(-) correlated",
        });
    }
    let residuals = vec![
        Residual {
            name: "p_minus_q",
            value: (state.p() - state.q()).abs(),
        },
        Residual {
            name: "alpha_from_pi",
            value: circular_distance(state.alpha(), PI),
        },
    ];
    let verdict = verdict_from(&residuals, 2);
    Ok(CriterionReport {
        id: CriterionId::Singlet,
        verdict,
        residuals,
        note: None,
    })
}

/// A (−) correlated state converts to pure (+) correlations — the triplet
/// signature — exactly when `p = q`, `α = 0` and the basis is equatorial
/// (`m = n`). Off the equator the conversion is incomplete.
pub fn check_triplet(state: &PairStateZ, e: &BasisSpec) -> Result<CriterionReport> {
    if state.kind() != PairKind::MinusCorrelated {
        return Err(Error::KindMismatch {
            expected: "(-) correlated",
        });
    }
    let residuals = vec![
        Residual {
            name: "p_minus_q",
            value: (state.p() - state.q()).abs(),
        },
        Residual {
            name: "alpha_from_zero",
            value: circular_distance(state.alpha(), 0.0),
        },
        Residual {
            name: "m_minus_n",
            value: (e.m() - e.n()).abs(),
        },
    ];
    let verdict = verdict_from(&residuals, 3);
    Ok(CriterionReport {
        id: CriterionId::Triplet,
        verdict,
        residuals,
        note: None,
    })
}

/// Both solutions `m²` of the basis in which (+) and (−) correlations carry
/// equal weight:
///
/// ```text
/// m² = ½ (1 ± √(2pq cos α / (1 + 2pq cos α)))
/// ```
///
/// Real solutions exist only for entangled states with `cos α ≥ 0`; the two
/// branches coincide at `cos α = 0`. Returned as `(m²₊, m²₋)` with
/// `n² = 1 − m²`.
pub fn equal_weight_basis(state: &PairStateZ) -> Result<(f64, f64)> {
    if state.kind() != PairKind::MinusCorrelated {
        return Err(Error::KindMismatch {
            expected: "(-) correlated",
        });
    }
    if state.p() == 0.0 || state.q() == 0.0 {
        return Err(Error::Disentangled);
    }
    let c = 2.0 * state.p() * state.q() * state.alpha().cos();
    if c < 0.0 {
        return Err(Error::NoRealSolution);
    }
    let root = (c / (1.0 + c)).sqrt();
    Ok((0.5 * (1.0 + root), 0.5 * (1.0 - root)))
}

/// A (+) correlated state keeps pure (+) correlations in the basis `e` iff
/// the cross coefficient `H̃ = (p − q e^{iξ}) mn` vanishes — i.e. `p = q` and
/// `δ = α/2`, or trivially a polar basis (`mn = 0`).
pub fn check_plus_preserving(state: &PairStateZ, e: &BasisSpec) -> Result<CriterionReport> {
    let coeffs = state.rewrite_plus(e)?;
    let h_abs = coeffs.h.norm();
    let residuals = vec![
        Residual {
            name: "h_abs",
            value: h_abs,
        },
        Residual {
            name: "p_minus_q",
            value: (state.p() - state.q()).abs(),
        },
        Residual {
            name: "delta_from_half_alpha",
            value: circular_distance(e.delta(), state.alpha() / 2.0),
        },
    ];
    let verdict = verdict_from(&residuals, 1);
    let note = if e.m() * e.n() <= CRITERION_TOL {
        Some("trivial basis")
    } else {
        None
    };
    Ok(CriterionReport {
        id: CriterionId::PlusPreserving,
        verdict,
        residuals,
        note,
    })
}

/// A (+) correlated state converts to pure (−) correlations iff both
/// same-outcome coefficients vanish: `F̃ = G̃ = 0`, i.e. `p = q`, `m = n` and
/// `δ = (α − π)/2`.
pub fn check_plus_to_minus(state: &PairStateZ, e: &BasisSpec) -> Result<CriterionReport> {
    let coeffs = state.rewrite_plus(e)?;
    let residuals = vec![
        Residual {
            name: "f_abs",
            value: coeffs.f.norm(),
        },
        Residual {
            name: "g_abs",
            value: coeffs.g.norm(),
        },
    ];
    let verdict = verdict_from(&residuals, 2);
    Ok(CriterionReport {
        id: CriterionId::PlusToMinus,
        verdict,
        residuals,
        note: None,
    })
}
