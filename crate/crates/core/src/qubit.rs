//! Gibbs-preserving ordering of qubit states on the Bloch ball.
//!
//! The equilibrium state sits at `(0, 0, zeta)` with `0 <= zeta <= 1`. For
//! `zeta < 1` a state `rho` reaches `sigma` iff `R+(rho) >= R+(sigma)` and
//! `R-(rho) >= R-(sigma)`, where `R± = delta ± zeta z` and
//! `delta = sqrt((z - zeta)² + (x² + y²)(1 - zeta²))`. Each inequality is a
//! ball about a point of the z axis, so future cones are lens-shaped solids
//! of revolution and joins/meets are intersections of two circles in the
//! `xz` half-plane.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Comparison slack for every inequality decided in this module.
pub const TOLERANCE: f64 = 1e-9;
const BALL_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QubitState {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl QubitState {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let s = QubitState { x, y, z };
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::InvalidQubit("non-finite Bloch coordinate".into()));
        }
        if s.norm() > 1.0 + BALL_SLACK {
            return Err(Error::InvalidQubit(format!("Bloch vector length {} exceeds 1", s.norm())));
        }
        Ok(s)
    }

    pub fn from_array(v: [f64; 3]) -> Result<Self> {
        QubitState::new(v[0], v[1], v[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Incoherent state with Bloch coordinate `z`.
    pub fn diagonal(z: f64) -> Result<Self> {
        QubitState::new(0.0, 0.0, z)
    }

    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Distance from the z axis.
    pub fn transverse(&self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Eigenvalues `(1 ± |r|)/2`, larger first.
    pub fn spectrum(&self) -> [f64; 2] {
        let r = self.norm().min(1.0);
        [(1.0 + r) / 2.0, (1.0 - r) / 2.0]
    }
}

/// Representative of the orbit under rotations about the energy axis:
/// `(sqrt(x² + y²), 0, z)`.
pub fn canonical_rep(rho: &QubitState) -> QubitState {
    QubitState { x: rho.transverse(), y: 0.0, z: rho.z }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QubitGibbs {
    zeta: f64,
}

impl QubitGibbs {
    pub fn new(zeta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&zeta) {
            return Err(Error::OutOfRange(format!("zeta = {zeta} must lie in [0, 1]")));
        }
        Ok(QubitGibbs { zeta })
    }

    /// From inverse temperature and excited-level energy (ground at zero):
    /// `Z = 1 + exp(-beta E1)`, `zeta = 2/Z - 1`.
    pub fn from_temperature(beta: f64, excited_energy: f64) -> Result<Self> {
        if beta.is_nan() || excited_energy.is_nan() || beta < 0.0 || excited_energy < 0.0 {
            return Err(Error::OutOfRange("beta and the excited energy must be non-negative".into()));
        }
        let z = 1.0 + (-beta * excited_energy).exp();
        QubitGibbs::new(2.0 / z - 1.0)
    }

    pub fn zeta(&self) -> f64 {
        self.zeta
    }

    pub fn state(&self) -> QubitState {
        QubitState { x: 0.0, y: 0.0, z: self.zeta }
    }

    pub fn is_zero_temperature(&self) -> bool {
        self.zeta == 1.0
    }

    /// Equilibrium populations `((1 + zeta)/2, (1 - zeta)/2)`.
    pub fn populations(&self) -> [f64; 2] {
        [(1.0 + self.zeta) / 2.0, (1.0 - self.zeta) / 2.0]
    }
}

pub fn delta(rho: &QubitState, g: &QubitGibbs) -> f64 {
    let z = g.zeta;
    let t2 = rho.x * rho.x + rho.y * rho.y;
    ((rho.z - z).powi(2) + t2 * (1.0 - z * z)).sqrt()
}

fn finite_only(g: &QubitGibbs) -> Result<()> {
    if g.is_zero_temperature() {
        Err(Error::ZeroTemperature("use the zero-temperature conditions (R3 and z) instead".into()))
    } else {
        Ok(())
    }
}

/// `(R+, R-)`; finite temperature only.
pub fn r_plus_minus(rho: &QubitState, g: &QubitGibbs) -> Result<(f64, f64)> {
    finite_only(g)?;
    let d = delta(rho, g);
    Ok((d + g.zeta * rho.z, d - g.zeta * rho.z))
}

/// `(x² + (1 - z)²) / (2 (1 - z))`, zero for the ground state itself.
pub fn r3(rho: &QubitState) -> f64 {
    let t2 = rho.x * rho.x + rho.y * rho.y;
    let gap = 1.0 - rho.z;
    if gap <= 0.0 {
        0.0
    } else {
        (t2 + gap * gap) / (2.0 * gap)
    }
}

/// Signed slack of each condition for `rho -> rho_prime`; all non-negative
/// (up to tolerance) exactly when a Gibbs-preserving channel exists.
/// Finite temperature: `[R+(rho) - R+(rho'), R-(rho) - R-(rho')]`;
/// zero temperature: `[R3(rho) - R3(rho'), z' - z]`.
pub fn decision_gaps(rho: &QubitState, rho_prime: &QubitState, g: &QubitGibbs) -> [f64; 2] {
    if g.is_zero_temperature() {
        [r3(rho) - r3(rho_prime), rho_prime.z - rho.z]
    } else {
        let (a, b) = (r_plus_minus(rho, g).unwrap(), r_plus_minus(rho_prime, g).unwrap());
        [a.0 - b.0, a.1 - b.1]
    }
}

pub fn gp_exists_qubit(rho: &QubitState, rho_prime: &QubitState, g: &QubitGibbs) -> bool {
    decision_gaps(rho, rho_prime, g).iter().all(|&s| s >= -TOLERANCE)
}

/// Closed disk in the `xz` half-plane centred on the z axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub radius: f64,
    /// z coordinate of the centre.
    pub center: f64,
}

impl Disk {
    /// Signed distance of `(r, z)` outside the boundary circle.
    pub fn excess(&self, r: f64, z: f64) -> f64 {
        r.hypot(z - self.center) - self.radius
    }
}

/// Future thermal cone of a qubit state, as revolved disks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "regime", rename_all = "kebab-case")]
pub enum ConeDescriptor {
    /// `D1 ∩ D2`: `D1` bounds `R-`, `D2` bounds `R+`.
    FiniteTemperature { d1: Disk, d2: Disk },
    /// One disk intersected with the half-space `z' >= z_min`. A degenerate
    /// disk of radius zero at `z = 1` is the cone of the ground state.
    ZeroTemperature { d3: Disk, z_min: f64 },
}

impl ConeDescriptor {
    pub fn contains(&self, sigma: &QubitState) -> bool {
        let r = sigma.transverse();
        match self {
            ConeDescriptor::FiniteTemperature { d1, d2 } => {
                d1.excess(r, sigma.z) <= TOLERANCE && d2.excess(r, sigma.z) <= TOLERANCE
            }
            ConeDescriptor::ZeroTemperature { d3, z_min } => {
                d3.excess(r, sigma.z) <= TOLERANCE && sigma.z >= z_min - TOLERANCE
            }
        }
    }
}

/// `R1 = (R- + zeta²)/(1 - zeta²)`, `R2 = (R+ - zeta²)/(1 - zeta²)`,
/// centres `zeta (1 + R1)` and `zeta (1 - R2)`.
pub fn cone_disks(rho: &QubitState, g: &QubitGibbs) -> Result<(Disk, Disk)> {
    let (rp, rm) = r_plus_minus(rho, g)?;
    let z2 = g.zeta * g.zeta;
    let r1 = (rm + z2) / (1.0 - z2);
    let r2 = (rp - z2) / (1.0 - z2);
    Ok((Disk { radius: r1, center: g.zeta * (1.0 + r1) }, Disk { radius: r2, center: g.zeta * (1.0 - r2) }))
}

pub fn future_cone(rho: &QubitState, g: &QubitGibbs) -> ConeDescriptor {
    if g.is_zero_temperature() {
        let r = r3(rho);
        return ConeDescriptor::ZeroTemperature { d3: Disk { radius: r, center: 1.0 - r }, z_min: rho.z };
    }
    let (d1, d2) = cone_disks(rho, g).expect("finite temperature");
    ConeDescriptor::FiniteTemperature { d1, d2 }
}

/// Intersection with `x >= 0` of two circles centred on the z axis.
fn circle_intersection(a: Disk, b: Disk) -> Result<QubitState> {
    let gap = b.center - a.center;
    if gap.abs() < 1e-300 {
        return Err(Error::Inapplicable("concentric circles".into()));
    }
    let z = (a.radius * a.radius - b.radius * b.radius - a.center * a.center + b.center * b.center) / (2.0 * gap);
    let x2 = a.radius * a.radius - (z - a.center).powi(2);
    Ok(QubitState { x: x2.max(0.0).sqrt(), y: 0.0, z })
}

enum Bound {
    Upper,
    Lower,
}

fn lattice_bound(rho: &QubitState, rho_prime: &QubitState, g: &QubitGibbs, which: Bound) -> Result<QubitState> {
    finite_only(g)?;
    let (a, b) = (canonical_rep(rho), canonical_rep(rho_prime));
    let forward = gp_exists_qubit(&a, &b, g);
    let backward = gp_exists_qubit(&b, &a, g);
    match (&which, forward, backward) {
        (Bound::Upper, true, _) | (Bound::Lower, false, true) => return Ok(a),
        (Bound::Upper, false, true) | (Bound::Lower, true, _) => return Ok(b),
        _ => {}
    }
    let ((a1, a2), (b1, b2)) = (cone_disks(&a, g)?, cone_disks(&b, g)?);
    let pick = |u: Disk, v: Disk| match which {
        Bound::Upper if u.radius >= v.radius => u,
        Bound::Upper => v,
        Bound::Lower if u.radius <= v.radius => u,
        Bound::Lower => v,
    };
    circle_intersection(pick(a1, b1), pick(a2, b2))
}

/// Least state reaching both inputs; canonical `xz` representative.
pub fn qubit_join(rho: &QubitState, rho_prime: &QubitState, g: &QubitGibbs) -> Result<QubitState> {
    lattice_bound(rho, rho_prime, g, Bound::Upper)
}

/// Greatest state reachable from both inputs; canonical `xz` representative.
pub fn qubit_meet(rho: &QubitState, rho_prime: &QubitState, g: &QubitGibbs) -> Result<QubitState> {
    lattice_bound(rho, rho_prime, g, Bound::Lower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn q(x: f64, y: f64, z: f64) -> QubitState {
        QubitState::new(x, y, z).unwrap()
    }

    fn g(z: f64) -> QubitGibbs {
        QubitGibbs::new(z).unwrap()
    }

    #[test]
    fn validates_states_and_zeta() {
        assert!(QubitState::new(0.8, 0.8, 0.0).is_err());
        assert!(QubitState::new(f64::NAN, 0.0, 0.0).is_err());
        assert!(QubitGibbs::new(-0.1).is_err());
        assert!(QubitGibbs::new(1.1).is_err());
    }

    #[test]
    fn canonical_representatives() {
        assert_eq!(canonical_rep(&q(0.3, 0.4, 0.2)), q(0.5, 0.0, 0.2));
        assert_eq!(canonical_rep(&q(0.0, 0.0, 0.7)), q(0.0, 0.0, 0.7));
        assert_eq!(canonical_rep(&q(-0.4, 0.0, 0.6)), q(0.4, 0.0, 0.6));
    }

    #[test]
    fn zeta_from_temperature() {
        assert_eq!(QubitGibbs::from_temperature(0.0, 1.0).unwrap().zeta(), 0.0);
        let z = QubitGibbs::from_temperature(1.0, 2.0).unwrap().zeta();
        assert_abs_diff_eq!(z, (1.0 - (-2.0f64).exp()) / (1.0 + (-2.0f64).exp()), epsilon = 1e-15);
    }

    #[test]
    fn r_values() {
        let (rp, rm) = r_plus_minus(&q(0.6, 0.0, 0.8), &g(0.5)).unwrap();
        assert_abs_diff_eq!(rp, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rm, 1.0 - 2.0 * 0.8 * 0.5, epsilon = 1e-12);

        let gb = g(0.5);
        let (rp, rm) = r_plus_minus(&gb.state(), &gb).unwrap();
        assert_abs_diff_eq!(rp, 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(rm, -0.25, epsilon = 1e-15);

        let (rp, rm) = r_plus_minus(&q(0.4, 0.0, 0.6), &g(0.5)).unwrap();
        assert_abs_diff_eq!(delta(&q(0.4, 0.0, 0.6), &g(0.5)), 0.13f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(rp, 0.13f64.sqrt() + 0.3, epsilon = 1e-12);
        assert_abs_diff_eq!(rm, 0.13f64.sqrt() - 0.3, epsilon = 1e-12);

        assert_eq!(r_plus_minus(&q(0.0, 0.0, 0.0), &g(1.0)).unwrap_err().kind(), "zero-temperature");
    }

    #[test]
    fn existence_basics() {
        let gb = g(0.5);
        let rho = q(0.4, 0.0, 0.6);
        assert!(gp_exists_qubit(&rho, &gb.state(), &gb));
        assert!(gp_exists_qubit(&rho, &rho, &gb));
        let other = q(0.3, 0.0, 0.2);
        assert!(!gp_exists_qubit(&rho, &other, &gb));
        assert!(!gp_exists_qubit(&other, &rho, &gb));
    }

    #[test]
    fn cone_of_coherent_state() {
        let ConeDescriptor::FiniteTemperature { d1, d2 } = future_cone(&q(0.4, 0.0, 0.6), &g(0.5)) else { panic!() };
        let s = 0.13f64.sqrt();
        // R1 = (s - 0.3 + 0.25)/0.75, R2 = (s + 0.3 - 0.25)/0.75
        assert_abs_diff_eq!(d1.radius, (s - 0.05) / 0.75, epsilon = 1e-12);
        assert_abs_diff_eq!(d2.radius, (s + 0.05) / 0.75, epsilon = 1e-12);
        assert_abs_diff_eq!(d1.radius, 0.4140735, epsilon = 1e-7);
        assert_abs_diff_eq!(d2.radius, 0.5474068, epsilon = 1e-7);
        assert_abs_diff_eq!(d1.center, 0.7070367, epsilon = 1e-7);
        assert_abs_diff_eq!(d2.center, 0.2262966, epsilon = 1e-7);
    }

    #[test]
    fn equilibrium_cone_is_a_point() {
        let gb = g(0.3);
        let ConeDescriptor::FiniteTemperature { d1, d2 } = future_cone(&gb.state(), &gb) else { panic!() };
        assert_abs_diff_eq!(d1.radius, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(d2.radius, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(d1.center, 0.3, epsilon = 1e-15);
        assert_abs_diff_eq!(d2.center, 0.3, epsilon = 1e-15);
    }

    #[test]
    fn incoherent_state_above_equilibrium_is_bounded_by_d1() {
        let gb = g(0.4);
        let (d1, d2) = cone_disks(&q(0.0, 0.0, 0.7), &gb).unwrap();
        // D1 inside D2
        assert!(d1.center - d1.radius >= d2.center - d2.radius - 1e-12);
        assert!(d1.center + d1.radius <= d2.center + d2.radius + 1e-12);
        let (d1, d2) = cone_disks(&q(0.0, 0.0, -0.5), &gb).unwrap();
        assert!(d2.center - d2.radius >= d1.center - d1.radius - 1e-12);
        assert!(d2.center + d2.radius <= d1.center + d1.radius + 1e-12);
    }

    #[test]
    fn zero_temperature_rules() {
        let gb = g(1.0);
        let rho = q(0.6, 0.0, 0.0);
        assert!(gp_exists_qubit(&rho, &gb.state(), &gb));
        assert!(gp_exists_qubit(&rho, &rho, &gb));
        // z cannot decrease
        assert!(!gp_exists_qubit(&q(0.0, 0.0, 0.5), &q(0.0, 0.0, 0.2), &gb));
        let ConeDescriptor::ZeroTemperature { d3, z_min } = future_cone(&rho, &gb) else { panic!() };
        assert_abs_diff_eq!(d3.radius, (0.36 + 1.0) / 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(d3.center, 1.0 - d3.radius, epsilon = 1e-15);
        assert_eq!(z_min, 0.0);
        let ground = future_cone(&gb.state(), &gb);
        assert!(ground.contains(&gb.state()));
        assert!(!ground.contains(&q(0.0, 0.0, 0.9)));
        assert!(qubit_join(&rho, &rho, &gb).is_err());
    }

    #[test]
    fn comparable_bounds_coincide_with_inputs() {
        let gb = g(0.2);
        let rho = q(0.0, 0.0, -0.8);
        let rp = q(0.4, 0.0, 0.4);
        assert_eq!(qubit_join(&rho, &rp, &gb).unwrap(), rho);
        assert_eq!(qubit_meet(&rho, &rp, &gb).unwrap(), rp);
    }

    #[test]
    fn incomparable_bounds_sit_on_the_right_circles() {
        let gb = g(0.5);
        let rho = q(0.4, 0.0, 0.6);
        let rp = q(0.3, 0.0, 0.2);
        let (r1, r2) = cone_disks(&rho, &gb).unwrap();
        let (p1, p2) = cone_disks(&rp, &gb).unwrap();
        let join = qubit_join(&rho, &rp, &gb).unwrap();
        assert!(p1.excess(join.x, join.z).abs() < 1e-9);
        assert!(r2.excess(join.x, join.z).abs() < 1e-9);
        let meet = qubit_meet(&rho, &rp, &gb).unwrap();
        assert!(r1.excess(meet.x, meet.z).abs() < 1e-9);
        assert!(p2.excess(meet.x, meet.z).abs() < 1e-9);
        assert!(meet.x > 0.0);
        for s in [&rho, &rp] {
            assert!(gp_exists_qubit(&join, s, &gb));
            assert!(gp_exists_qubit(s, &meet, &gb));
        }
    }

    #[test]
    fn idempotent_and_bottom() {
        let gb = g(0.5);
        let rho = q(0.1, 0.2, -0.3);
        let c = canonical_rep(&rho);
        assert_eq!(qubit_join(&rho, &rho, &gb).unwrap(), c);
        assert_eq!(qubit_meet(&rho, &rho, &gb).unwrap(), c);
        assert_eq!(qubit_meet(&rho, &gb.state(), &gb).unwrap(), gb.state());
    }
}
