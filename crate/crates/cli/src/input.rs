use std::path::Path;

use serde::{Deserialize, Serialize};
use thermolattice::{ContextSpec, GibbsContext, ProbVector, QubitGibbs, QubitState};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QubitContext {
    pub zeta: f64,
}

/// On-disk state description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum StateFile {
    Classical {
        entries: ProbVector,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        context: Option<ContextSpec>,
    },
    Qubit {
        bloch: [f64; 3],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        context: Option<QubitContext>,
    },
}

#[derive(Debug, Clone)]
pub enum Loaded {
    Classical(ProbVector, GibbsContext),
    Qubit(QubitState, QubitGibbs),
}

impl StateFile {
    pub fn read(path: &Path) -> Result<StateFile, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }

    /// Missing contexts mean infinite temperature.
    pub fn load(&self) -> Result<Loaded, CliError> {
        Ok(match self {
            StateFile::Classical { entries, context } => {
                let ctx = match context {
                    Some(spec) => spec.build(entries.dim())?,
                    None => GibbsContext::infinite_temperature(entries.dim())?,
                };
                Loaded::Classical(entries.clone(), ctx)
            }
            StateFile::Qubit { bloch, context } => {
                let zeta = context.map_or(0.0, |c| c.zeta);
                Loaded::Qubit(QubitState::from_array(*bloch)?, QubitGibbs::new(zeta)?)
            }
        })
    }
}

pub fn load(path: &Path) -> Result<Loaded, CliError> {
    StateFile::read(path)?.load()
}

pub fn classical(path: &Path) -> Result<(ProbVector, GibbsContext), CliError> {
    match load(path)? {
        Loaded::Classical(p, ctx) => Ok((p, ctx)),
        Loaded::Qubit(..) => {
            Err(CliError::Input(format!("{} holds a qubit state; expected classical", path.display())))
        }
    }
}

pub fn qubit(path: &Path) -> Result<(QubitState, QubitGibbs), CliError> {
    match load(path)? {
        Loaded::Qubit(r, g) => Ok((r, g)),
        Loaded::Classical(..) => {
            Err(CliError::Input(format!("{} holds a classical state; expected qubit", path.display())))
        }
    }
}

pub fn classical_pair(a: &Path, b: &Path) -> Result<(ProbVector, ProbVector, GibbsContext), CliError> {
    let (p, cp) = classical(a)?;
    let (q, cq) = classical(b)?;
    if p.dim() != q.dim() {
        return Err(thermolattice::Error::DimensionMismatch { left: p.dim(), right: q.dim() }.into());
    }
    if cp.gamma() != cq.gamma() {
        return Err(thermolattice::Error::InvalidContext("the two states carry different equilibria".into()).into());
    }
    Ok((p, q, cp))
}

pub fn qubit_pair(a: &Path, b: &Path) -> Result<(QubitState, QubitState, QubitGibbs), CliError> {
    let (r, gr) = qubit(a)?;
    let (s, gs) = qubit(b)?;
    if gr != gs {
        return Err(thermolattice::Error::InvalidContext("the two states carry different zeta".into()).into());
    }
    Ok((r, s, gr))
}

pub enum Pair {
    Classical(ProbVector, ProbVector, GibbsContext),
    Qubit(QubitState, QubitState, QubitGibbs),
}

pub fn any_pair(a: &Path, b: &Path) -> Result<Pair, CliError> {
    match load(a)? {
        Loaded::Classical(..) => classical_pair(a, b).map(|(p, q, c)| Pair::Classical(p, q, c)),
        Loaded::Qubit(..) => qubit_pair(a, b).map(|(r, s, g)| Pair::Qubit(r, s, g)),
    }
}
