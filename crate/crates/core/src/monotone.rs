//! Thermodynamic monotones in nats.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dims, Error, Result};
use crate::gibbs::GibbsContext;
use crate::prob::ProbVector;
use crate::qubit::{QubitGibbs, QubitState};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Monotone {
    /// `ln d - H(p)`; non-increasing under unital maps.
    ShannonEntropy,
    RelativeEntropy,
    Renyi {
        alpha: f64,
    },
}

impl Monotone {
    pub fn renyi(alpha: f64) -> Result<Self> {
        let m = Monotone::Renyi { alpha };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Monotone::Renyi { alpha } if !alpha.is_finite() || alpha <= 0.0 || alpha == 1.0 => {
                Err(Error::InvalidMonotone(format!("Renyi order {alpha} must be positive, finite and not 1")))
            }
            _ => Ok(()),
        }
    }

    pub fn label(&self) -> String {
        self.to_string()
    }

    /// Value at a classical state.
    pub fn classical(&self, p: &ProbVector, ctx: &GibbsContext) -> Result<f64> {
        self.validate()?;
        check_dims(p.dim(), ctx.dim())?;
        Ok(match *self {
            Monotone::ShannonEntropy => (p.dim() as f64).ln() - shannon(&p.to_f64()),
            Monotone::RelativeEntropy => relative_entropy(&p.to_f64(), &ctx.gamma().to_f64()),
            Monotone::Renyi { alpha } => renyi(&p.to_f64(), &ctx.gamma().to_f64(), alpha),
        })
    }

    /// Value at a qubit state; divergences need `zeta < 1`.
    pub fn qubit(&self, rho: &QubitState, g: &QubitGibbs) -> Result<f64> {
        self.validate()?;
        let spec = rho.spectrum();
        if *self == Monotone::ShannonEntropy {
            return Ok(2f64.ln() - shannon(&spec));
        }
        if g.is_zero_temperature() {
            return Err(Error::ZeroTemperature("divergences to a pure Gibbs state are unbounded".into()));
        }
        let gp = g.populations();
        Ok(match *self {
            Monotone::RelativeEntropy => {
                let cross = (1.0 + rho.z) / 2.0 * gp[0].ln() + (1.0 - rho.z) / 2.0 * gp[1].ln();
                -shannon(&spec) - cross
            }
            Monotone::Renyi { alpha } => {
                // Petz form tr(rho^a gamma^(1-a)); the eigenprojector of the
                // larger eigenvalue has diagonal (1 ± n_z)/2.
                let r = rho.norm();
                let nz = if r > 0.0 { rho.z / r } else { 0.0 };
                let (g0, g1) = (gp[0].powf(1.0 - alpha), gp[1].powf(1.0 - alpha));
                let weight = |s: f64| g0 * (1.0 + s * nz) / 2.0 + g1 * (1.0 - s * nz) / 2.0;
                let t = pow0(spec[0], alpha) * weight(1.0) + pow0(spec[1], alpha) * weight(-1.0);
                t.ln() / (alpha - 1.0)
            }
            Monotone::ShannonEntropy => unreachable!(),
        })
    }
}

impl fmt::Display for Monotone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monotone::ShannonEntropy => write!(f, "shannon-entropy"),
            Monotone::RelativeEntropy => write!(f, "relative-entropy"),
            Monotone::Renyi { alpha } => write!(f, "renyi-{alpha}"),
        }
    }
}

/// Monotones reported by default.
pub fn standard_monotones() -> Vec<Monotone> {
    vec![
        Monotone::ShannonEntropy,
        Monotone::RelativeEntropy,
        Monotone::Renyi { alpha: 0.5 },
        Monotone::Renyi { alpha: 2.0 },
    ]
}

fn pow0(x: f64, a: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x.powf(a)
    }
}

/// `-sum p ln p` with `0 ln 0 = 0`.
pub fn shannon(p: &[f64]) -> f64 {
    -p.iter().filter(|&&v| v > 0.0).map(|&v| v * v.ln()).sum::<f64>()
}

pub fn relative_entropy(p: &[f64], gamma: &[f64]) -> f64 {
    p.iter().zip(gamma).filter(|(&v, _)| v > 0.0).map(|(&v, &g)| v * (v / g).ln()).sum()
}

pub fn renyi(p: &[f64], gamma: &[f64], alpha: f64) -> f64 {
    let s: f64 = p.iter().zip(gamma).map(|(&v, &g)| pow0(v, alpha) * g.powf(1.0 - alpha)).sum();
    s.ln() / (alpha - 1.0)
}
