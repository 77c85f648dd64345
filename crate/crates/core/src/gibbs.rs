use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prob::ProbVector;
use crate::rational::{format_rational, from_f64_exact, to_f64, Rational};

/// Inverse temperature: a finite non-negative `beta`, or the infinite
/// temperature limit (`beta -> 0`, uniform equilibrium).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Temperature {
    Infinite,
    Beta(Rational),
    /// Only the equilibrium distribution is known.
    FromGamma,
}

impl Temperature {
    pub fn is_infinite(&self) -> bool {
        match self {
            Temperature::Infinite => true,
            Temperature::Beta(b) => b.is_zero(),
            Temperature::FromGamma => false,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Temperature::Infinite => "inf".to_string(),
            Temperature::Beta(b) => format_rational(b),
            Temperature::FromGamma => "gamma".to_string(),
        }
    }
}

/// Equilibrium data for a classical `d`-level system.
///
/// `gamma` is always an exact rational distribution. When built from
/// `(beta, energies)` the Boltzmann weights `exp(-beta (E_i - E_1))` are
/// evaluated in binary64, taken as exact rationals, and normalized exactly,
/// so every ordering decision downstream is exact for that `gamma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GibbsContext {
    temperature: Temperature,
    energies: Option<Vec<Rational>>,
    gamma: ProbVector,
}

impl GibbsContext {
    pub fn infinite_temperature(d: usize) -> Result<Self> {
        Ok(GibbsContext { temperature: Temperature::Infinite, energies: None, gamma: ProbVector::uniform(d)? })
    }

    pub fn from_temperature(beta: Rational, energies: Vec<Rational>) -> Result<Self> {
        if beta.is_negative() {
            return Err(Error::InvalidContext("beta must be non-negative".into()));
        }
        if energies.is_empty() {
            return Err(Error::InvalidContext("no energy levels".into()));
        }
        if energies.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidContext("energies must be non-decreasing".into()));
        }
        let d = energies.len();
        if beta.is_zero() {
            return Ok(GibbsContext {
                temperature: Temperature::Beta(beta),
                energies: Some(energies),
                gamma: ProbVector::uniform(d)?,
            });
        }
        let b = to_f64(&beta);
        let e0 = to_f64(&energies[0]);
        let mut weights = Vec::with_capacity(d);
        for e in &energies {
            let w = (-b * (to_f64(e) - e0)).exp();
            if w.is_nan() || w <= 0.0 {
                return Err(Error::InvalidContext("Boltzmann weight underflows to zero".into()));
            }
            weights.push(from_f64_exact(w)?);
        }
        // Degenerate levels must stay exactly equal after rounding.
        for i in 1..d {
            if energies[i] == energies[i - 1] {
                weights[i] = weights[i - 1].clone();
            }
        }
        Ok(GibbsContext {
            temperature: Temperature::Beta(beta),
            energies: Some(energies),
            gamma: ProbVector::normalized(weights)?,
        })
    }

    /// Context given directly by a strictly positive, non-increasing `gamma`.
    pub fn from_gamma(gamma: ProbVector) -> Result<Self> {
        if gamma.entries().iter().any(|g| g.is_zero()) {
            return Err(Error::InvalidContext("gamma must be strictly positive".into()));
        }
        if gamma.entries().windows(2).any(|w| w[1] > w[0]) {
            return Err(Error::InvalidContext("gamma must be non-increasing (levels sorted by energy)".into()));
        }
        let uniform = gamma.entries().iter().all(|g| g == &gamma.entries()[0]);
        let temperature = if uniform { Temperature::Infinite } else { Temperature::FromGamma };
        Ok(GibbsContext { temperature, energies: None, gamma })
    }

    /// Two-level equilibrium `(gamma0, 1 - gamma0)`.
    pub fn two_level(gamma0: Rational) -> Result<Self> {
        let rest = Rational::one() - &gamma0;
        GibbsContext::from_gamma(ProbVector::new(vec![gamma0, rest])?)
    }

    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    pub fn gamma(&self) -> &ProbVector {
        &self.gamma
    }

    pub fn temperature(&self) -> &Temperature {
        &self.temperature
    }

    pub fn energies(&self) -> Option<&[Rational]> {
        self.energies.as_deref()
    }

    /// True when every level has the same equilibrium weight.
    pub fn is_uniform(&self) -> bool {
        let g = self.gamma.entries();
        g.iter().all(|x| x == &g[0])
    }
}

/// Serialized form used by state files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ContextSpec {
    Temperature {
        beta: String,
        #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_vec")]
        energies: Option<Vec<Rational>>,
    },
    Gamma {
        gamma: ProbVector,
    },
}

mod opt_vec {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => crate::rational::serde_str::vec::serialize(v, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Rational>>, D::Error> {
        #[derive(Deserialize)]
        struct W(#[serde(with = "crate::rational::serde_str::vec")] Vec<Rational>);
        Ok(Option::<W>::deserialize(d)?.map(|w| w.0))
    }
}

impl ContextSpec {
    /// `d` is needed for the infinite-temperature form, which carries no levels.
    pub fn build(&self, d: usize) -> Result<GibbsContext> {
        let ctx = match self {
            ContextSpec::Gamma { gamma } => GibbsContext::from_gamma(gamma.clone())?,
            ContextSpec::Temperature { beta, energies } => {
                if beta.trim() == "inf" {
                    GibbsContext::infinite_temperature(d)?
                } else {
                    let b = crate::rational::parse_rational(beta)?;
                    match energies {
                        Some(e) => GibbsContext::from_temperature(b, e.clone())?,
                        None if b.is_zero() => GibbsContext::infinite_temperature(d)?,
                        None => return Err(Error::InvalidContext("finite beta requires energies".into())),
                    }
                }
            }
        };
        crate::error::check_dims(ctx.dim(), d)?;
        Ok(ctx)
    }

    pub fn from_context(ctx: &GibbsContext) -> ContextSpec {
        match (&ctx.temperature, &ctx.energies) {
            (Temperature::Infinite, _) => ContextSpec::Temperature { beta: "inf".into(), energies: None },
            (t @ Temperature::Beta(_), Some(e)) => {
                ContextSpec::Temperature { beta: t.label(), energies: Some(e.clone()) }
            }
            _ => ContextSpec::Gamma { gamma: ctx.gamma.clone() },
        }
    }
}
