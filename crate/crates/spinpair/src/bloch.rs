//! Single-qubit states, measurement bases and rotation matrices.
//!
//! A pure qubit state is `|s⟩ = a|↑⟩ + b e^{iφ}|↓⟩` with `a = cos(θ/2)`,
//! `b = sin(θ/2)` for Bloch angles `(θ, φ)`. A measurement direction `e`
//! with polar angle χ and azimuth δ defines the basis pair
//!
//! ```text
//! |e⟩ = m|↑⟩ + n e^{iδ}|↓⟩        m = cos(χ/2)
//! |ē⟩ = n|↑⟩ − m e^{iδ}|↓⟩        n = sin(χ/2)
//! ```
//!
//! and the unitary `R_e = [[m, n e^{iδ}], [n, −m e^{iδ}]]` with determinant
//! `−e^{iδ}`. Measuring `|s⟩` along `e` gives
//!
//! ```text
//! P(e) = a²m² + b²n² + 2abmn cos η        η = φ − δ
//! P(ē) = a²n² + b²m² − 2abmn cos η
//! ```
//!
//! There is deliberately no API that parameterizes a basis change by a single
//! real angle between `s` and `e`: such an angle generally does not exist in
//! the complex Hilbert space, only the pair `(u, v)` of [`Rotation2::basis_change`]
//! does.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::CONSTRUCTION_TOL;

/// Complex probability amplitude. All coefficients across the crate use this.
pub type Amplitude = Complex64;

/// Reduces an angle into `[0, 2π)`.
pub fn reduce_angle(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Circular distance between two angles: the smallest `|a − b + 2πk|`.
pub fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

fn check_finite(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { name, value })
    }
}

fn check_polar(name: &'static str, value: f64) -> Result<()> {
    check_finite(name, value)?;
    if (0.0..=PI).contains(&value) {
        Ok(())
    } else {
        Err(Error::AngleOutOfRange { name, value })
    }
}

/// A point on the Bloch sphere: polar angle `theta` in `[0, π]`, azimuth
/// `phi` reduced into `[0, 2π)`. At the poles the azimuth is indeterminate
/// and is canonicalized to 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochAngles {
    theta: f64,
    phi: f64,
}

impl BlochAngles {
    /// Polar angles outside `[0, π]` are rejected rather than reflected, to
    /// avoid silently aliasing the double cover.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        check_polar("theta", theta)?;
        check_finite("phi", phi)?;
        let phi = if theta == 0.0 || theta == PI {
            0.0
        } else {
            reduce_angle(phi)
        };
        Ok(Self { theta, phi })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// A pure qubit state `a|↑⟩ + b e^{iφ}|↓⟩` with `a, b ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleQubitState {
    a: f64,
    b: f64,
    phi: f64,
}

impl SingleQubitState {
    pub fn from_angles(angles: BlochAngles) -> Self {
        let half = angles.theta / 2.0;
        Self {
            a: half.cos(),
            b: half.sin(),
            phi: angles.phi,
        }
    }

    /// Weight of `|↑⟩`, equals `cos(θ/2)`.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Weight of `|↓⟩`, equals `sin(θ/2)`.
    pub fn b(&self) -> f64 {
        self.b
    }

    /// Relative phase of the `|↓⟩` component.
    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Amplitudes `(a, b e^{iφ})` over `(|↑⟩, |↓⟩)`.
    pub fn amplitudes(&self) -> [Amplitude; 2] {
        [
            Amplitude::from(self.a),
            Amplitude::from_polar(self.b, self.phi),
        ]
    }

    /// The antipodal state `b|↑⟩ − a e^{iφ}|↓⟩`, re-expressed in canonical
    /// form via `θ̄ = π − θ`, `φ̄ = φ + π`. Orthogonal to `self` exactly.
    pub fn antipode(&self) -> Self {
        let a = self.b;
        let b = self.a;
        let phi = if a == 0.0 || b == 0.0 {
            0.0
        } else {
            reduce_angle(self.phi + PI)
        };
        Self { a, b, phi }
    }

    /// Inner product `⟨self|other⟩` (conjugate-linear in `self`).
    pub fn inner(&self, other: &Self) -> Amplitude {
        let s = self.amplitudes();
        let o = other.amplitudes();
        s[0].conj() * o[0] + s[1].conj() * o[1]
    }

    /// Outcome probabilities `(P(e), P(ē))` of measuring along `e`.
    pub fn measure_probs(&self, e: &BasisSpec) -> (f64, f64) {
        let (a, b) = (self.a, self.b);
        let (m, n) = (e.m, e.n);
        let cross = 2.0 * a * b * m * n * (self.phi - e.delta).cos();
        (
            a * a * m * m + b * b * n * n + cross,
            a * a * n * n + b * b * m * m - cross,
        )
    }

    /// `P(e) − P(ē) = (a²−b²)(m²−n²) + 4abmn cos η`.
    pub fn delta_p(&self, e: &BasisSpec) -> f64 {
        let (a, b) = (self.a, self.b);
        let (m, n) = (e.m, e.n);
        (a * a - b * b) * (m * m - n * n) + 4.0 * a * b * m * n * (self.phi - e.delta).cos()
    }

    /// Interference visibility `V = 2abmn`: the half peak-to-trough amplitude
    /// of `P(e)` as the phase η sweeps a full period. Equals `mn` for an
    /// equally-weighted state, `ab` for an equatorial basis, and 1/2 when
    /// both hold.
    pub fn visibility(&self, e: &BasisSpec) -> f64 {
        2.0 * self.a * self.b * e.m * e.n
    }
}

/// A measurement direction on the Bloch sphere with precomputed half-angle
/// weights `m = cos(χ/2)`, `n = sin(χ/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisSpec {
    chi: f64,
    delta: f64,
    m: f64,
    n: f64,
}

impl BasisSpec {
    pub fn new(chi: f64, delta: f64) -> Result<Self> {
        check_polar("chi", chi)?;
        check_finite("delta", delta)?;
        let delta = if chi == 0.0 || chi == PI {
            0.0
        } else {
            reduce_angle(delta)
        };
        let half = chi / 2.0;
        Ok(Self {
            chi,
            delta,
            m: half.cos(),
            n: half.sin(),
        })
    }

    /// The reference (z) basis: χ = 0.
    pub fn reference() -> Self {
        Self::new(0.0, 0.0).expect("reference basis is valid")
    }

    /// A basis in the equatorial plane: χ = π/2.
    pub fn equatorial(delta: f64) -> Self {
        Self::new(PI / 2.0, delta).expect("equatorial basis is valid")
    }

    pub fn chi(&self) -> f64 {
        self.chi
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn n(&self) -> f64 {
        self.n
    }

    /// Amplitudes of `|e⟩` over `(|↑⟩, |↓⟩)`: `(m, n e^{iδ})`.
    pub fn ket_e(&self) -> [Amplitude; 2] {
        [
            Amplitude::from(self.m),
            Amplitude::from_polar(self.n, self.delta),
        ]
    }

    /// Amplitudes of `|ē⟩` over `(|↑⟩, |↓⟩)`: `(n, −m e^{iδ})`.
    pub fn ket_ebar(&self) -> [Amplitude; 2] {
        [
            Amplitude::from(self.n),
            -Amplitude::from_polar(self.m, self.delta),
        ]
    }

    /// Unit vector of the direction in real space.
    pub fn direction(&self) -> [f64; 3] {
        let (s, c) = self.chi.sin_cos();
        [s * self.delta.cos(), s * self.delta.sin(), c]
    }

    /// Dot product of the two directions in real space. 1 for identical
    /// bases, −1 for antipodal ones.
    pub fn dot(&self, other: &Self) -> f64 {
        let u = self.direction();
        let v = other.direction();
        u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
    }
}

/// A 2×2 unitary over `(|↑⟩, |↓⟩)` rows/columns.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation2 {
    entries: [[Amplitude; 2]; 2],
}

impl Rotation2 {
    pub fn identity() -> Self {
        Self {
            entries: [
                [Amplitude::from(1.0), Amplitude::from(0.0)],
                [Amplitude::from(0.0), Amplitude::from(1.0)],
            ],
        }
    }

    /// The basis rotation `R_e = [[m, n e^{iδ}], [n, −m e^{iδ}]]` mapping
    /// reference eigenstates onto `(|e⟩, |ē⟩)`. Its determinant is `−e^{iδ}`.
    pub fn from_basis(e: &BasisSpec) -> Self {
        let ph = Amplitude::from_polar(1.0, e.delta);
        Self {
            entries: [
                [Amplitude::from(e.m), ph * e.n],
                [Amplitude::from(e.n), -(ph * e.m)],
            ],
        }
    }

    /// The inverse rotation `R_e⁻¹ = R_e†`.
    pub fn inverse_from_basis(e: &BasisSpec) -> Self {
        Self::from_basis(e).dagger()
    }

    /// The composed change `R_s R_e⁻¹` expressing the `s`-basis pair directly
    /// in the `e`-basis:
    ///
    /// ```text
    /// [[u, v], [−e^{iη} v*, e^{iη} u*]]    u = am + bn e^{iη}
    ///                                      v = an − bm e^{iη}
    /// ```
    ///
    /// with `(a, b, φ)` the half-angle data of `s`, and `η = φ − δ`.
    pub fn basis_change(s: &BasisSpec, e: &BasisSpec) -> Self {
        let (a, b) = (s.m, s.n);
        let (m, n) = (e.m, e.n);
        let eta = Amplitude::from_polar(1.0, s.delta - e.delta);
        let u = Amplitude::from(a * m) + eta * (b * n);
        let v = Amplitude::from(a * n) - eta * (b * m);
        Self {
            entries: [[u, v], [-(eta * v.conj()), eta * u.conj()]],
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> Amplitude {
        self.entries[row][col]
    }

    pub fn entries(&self) -> &[[Amplitude; 2]; 2] {
        &self.entries
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = [[Amplitude::from(0.0); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.entries[i][0] * other.entries[0][j]
                    + self.entries[i][1] * other.entries[1][j];
            }
        }
        Self { entries: out }
    }

    pub fn dagger(&self) -> Self {
        let e = &self.entries;
        Self {
            entries: [
                [e[0][0].conj(), e[1][0].conj()],
                [e[0][1].conj(), e[1][1].conj()],
            ],
        }
    }

    pub fn det(&self) -> Amplitude {
        let e = &self.entries;
        e[0][0] * e[1][1] - e[0][1] * e[1][0]
    }

    /// Largest elementwise deviation of `R R†` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let prod = self.mul(&self.dagger());
        let id = Self::identity();
        let mut worst: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((prod.entries[i][j] - id.entries[i][j]).norm());
            }
        }
        worst
    }

    /// Applies the matrix to a 2-amplitude column.
    pub fn apply(&self, v: [Amplitude; 2]) -> [Amplitude; 2] {
        [
            self.entries[0][0] * v[0] + self.entries[0][1] * v[1],
            self.entries[1][0] * v[0] + self.entries[1][1] * v[1],
        ]
    }
}

/// Half opening angle of the spin cone: `arccos(|component| / √(s(s+1)))`.
///
/// For spin 1/2 the only value is `arccos(1/√3)`.
pub fn spin_cone_angle(spin: f64, component: f64) -> Result<f64> {
    check_finite("spin", spin)?;
    check_finite("component", component)?;
    if spin <= 0.0 || component.abs() > spin {
        return Err(Error::SpinDomain { spin, component });
    }
    Ok((component.abs() / (spin * (spin + 1.0)).sqrt()).acos())
}

/// Checks a squared norm against the construction tolerance.
pub(crate) fn norm_gate(norm_sq: f64) -> Result<()> {
    let deviation = (norm_sq - 1.0).abs();
    if !deviation.is_finite() || deviation > CONSTRUCTION_TOL {
        Err(Error::NotNormalized {
            deviation,
            tolerance: CONSTRUCTION_TOL,
        })
    } else {
        Ok(())
    }
}
