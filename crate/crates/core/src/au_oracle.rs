//! Two-state trace-norm test for qubits.
//!
//! A channel sending `rho -> rho'` while fixing `gamma` exists iff
//! `||l rho - (1-l) gamma||_1 >= ||l rho' - (1-l) gamma||_1` for all `l` in
//! `[0, 1]`. [`au_oracle`] samples that condition on a grid, so it can miss
//! violations confined to windows narrower than the grid spacing; treat it as
//! a necessary-condition check, not ground truth near the boundary.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qubit::{delta, QubitGibbs, QubitState};

pub const DEFAULT_GRID: usize = 1001;
/// Slack allowed on each sampled difference.
pub const ORACLE_TOLERANCE: f64 = 1e-9;

/// `||l rho - (1 - l) gamma||_1²` from the eigenvalues of the 2×2 Hermitian
/// matrix.
pub fn trace_distance_sq(lambda: f64, rho: &QubitState, g: &QubitGibbs) -> f64 {
    let (l, m) = (lambda, 1.0 - lambda);
    let zeta = g.zeta();
    let a = l * (1.0 + rho.z) / 2.0 - m * (1.0 + zeta) / 2.0;
    let d = l * (1.0 - rho.z) / 2.0 - m * (1.0 - zeta) / 2.0;
    let off = l * rho.x.hypot(rho.y) / 2.0;
    let mid = (a + d) / 2.0;
    let rad = ((a - d) / 2.0).hypot(off);
    let norm = (mid + rad).abs() + (mid - rad).abs();
    norm * norm
}

/// `true` iff every grid point has `D(rho) - D(rho') >= -1e-9`.
pub fn au_oracle(rho: &QubitState, rho_prime: &QubitState, g: &QubitGibbs, grid_size: usize) -> Result<bool> {
    if grid_size < 2 {
        return Err(Error::OutOfRange(format!("grid size {grid_size} must be at least 2")));
    }
    let last = (grid_size - 1) as f64;
    Ok((0..grid_size).all(|i| {
        let l = i as f64 / last;
        trace_distance_sq(l, rho, g) - trace_distance_sq(l, rho_prime, g) >= -ORACLE_TOLERANCE
    }))
}

/// Roots of the quadratic `c(l) = A l² + B l + C` whose positive part
/// separates the squared trace distance from `(1 - 2l)²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AUProfile {
    pub lambda1: f64,
    pub lambda2: f64,
    pub quad_a: f64,
    pub quad_b: f64,
    pub quad_c: f64,
}

impl AUProfile {
    pub fn c(&self, lambda: f64) -> f64 {
        (self.quad_a * lambda + self.quad_b) * lambda + self.quad_c
    }

    /// Squared trace distance via `(1 - 2l)² + 2 max(c, 0)`.
    pub fn trace_distance_sq(&self, lambda: f64) -> f64 {
        (1.0 - 2.0 * lambda).powi(2) + 2.0 * self.c(lambda).max(0.0)
    }

    /// Radius `|1/l - 2|` of the level circle for root `m` (1 or 2).
    pub fn radius(&self, m: usize) -> f64 {
        (1.0 / self.root(m) - 2.0).abs()
    }

    /// z coordinate `zeta (1/l - 1)` of the level circle's centre.
    pub fn center(&self, m: usize, g: &QubitGibbs) -> f64 {
        g.zeta() * (1.0 / self.root(m) - 1.0)
    }

    fn root(&self, m: usize) -> f64 {
        match m {
            1 => self.lambda1,
            2 => self.lambda2,
            _ => panic!("root index must be 1 or 2"),
        }
    }
}

const ROOT_SLACK: f64 = 1e-12;

/// `l_{1,2} = (2 - zeta(z + zeta) ∓ delta) / (4 - (z + zeta)² - x²)`.
pub fn lambda_roots(rho: &QubitState, g: &QubitGibbs) -> Result<AUProfile> {
    if g.is_zero_temperature() {
        return Err(Error::ZeroTemperature("lambda roots need zeta < 1".into()));
    }
    let zeta = g.zeta();
    let x = rho.transverse();
    let s = rho.z + zeta;
    let den = 4.0 - s * s - x * x;
    assert!(den > 0.0, "denominator vanishes only outside the Bloch ball");
    let dl = delta(rho, g);
    let base = 2.0 - zeta * s;
    let (l1, l2) = ((base - dl) / den, (base + dl) / den);
    debug_assert!(
        (-ROOT_SLACK..=0.5 + ROOT_SLACK).contains(&l1) && (0.5 - ROOT_SLACK..=1.0 + ROOT_SLACK).contains(&l2),
        "root ordering violated: {l1} {l2}"
    );
    Ok(AUProfile {
        lambda1: l1,
        lambda2: l2,
        quad_a: (x * x + s * s) / 2.0 - 2.0,
        quad_b: base,
        quad_c: (zeta * zeta - 1.0) / 2.0,
    })
}
