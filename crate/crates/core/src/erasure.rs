//! History erasure and future creation.
//!
//! Erasing the record of which of two states a system started in means
//! driving it into the common future of both; the cheapest such target is
//! the meet. Creating a state that could have become either input is the
//! dual problem and uses the join. Reversing the order swaps the two, so
//! the creation optimum of a pair is its erasure optimum in the reversed
//! order.

use serde::{Deserialize, Serialize};

use crate::candidates::{join_candidates, meet_candidates, MAX_CANDIDATE_DIM};
use crate::error::{check_dims, Result};
use crate::gibbs::GibbsContext;
use crate::majorization::{join, meet};
use crate::monotone::{shannon, standard_monotones, Monotone};
use crate::prob::ProbVector;
use crate::qubit::{canonical_rep, qubit_join, qubit_meet, QubitGibbs, QubitState};
use crate::thermo::{same_beta_join, same_beta_meet, thermo_majorizes};

/// Tolerance on the supermodularity inequality.
pub const SUPERMODULARITY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReportState {
    Classical { entries: ProbVector },
    Qubit { bloch: [f64; 3] },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Operation {
    EraseHistory,
    CreateFutures,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErasureVerdict {
    UniqueOptimum,
    MultipleCandidates,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonotoneCost {
    pub monotone: Monotone,
    /// Values at the two inputs.
    pub inputs: [f64; 2],
    /// Value at each optimal state, in report order.
    pub optimal: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErasureReport {
    pub operation: Operation,
    pub optimal_states: Vec<ReportState>,
    pub costs: Vec<MonotoneCost>,
    pub verdict: ErasureVerdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ErasureReport {
    pub fn classical_states(&self) -> Vec<&ProbVector> {
        self.optimal_states
            .iter()
            .filter_map(|s| match s {
                ReportState::Classical { entries } => Some(entries),
                ReportState::Qubit { .. } => None,
            })
            .collect()
    }

    pub fn qubit_states(&self) -> Vec<QubitState> {
        self.optimal_states
            .iter()
            .filter_map(|s| match s {
                ReportState::Qubit { bloch } => Some(QubitState { x: bloch[0], y: bloch[1], z: bloch[2] }),
                ReportState::Classical { .. } => None,
            })
            .collect()
    }
}

/// Optimal common future of `p` and `q`.
pub fn erase_history(p: &ProbVector, q: &ProbVector, ctx: &GibbsContext) -> Result<ErasureReport> {
    classical_report(p, q, ctx, Operation::EraseHistory)
}

/// Optimal common past of `p` and `q`.
pub fn create_futures(p: &ProbVector, q: &ProbVector, ctx: &GibbsContext) -> Result<ErasureReport> {
    classical_report(p, q, ctx, Operation::CreateFutures)
}

fn classical_report(p: &ProbVector, q: &ProbVector, ctx: &GibbsContext, op: Operation) -> Result<ErasureReport> {
    check_dims(p.dim(), q.dim())?;
    check_dims(p.dim(), ctx.dim())?;
    let erase = op == Operation::EraseHistory;
    let mut notes = Vec::new();
    let (states, unique) = if thermo_majorizes(p, q, ctx)? {
        (vec![if erase { q.clone() } else { p.clone() }], true)
    } else if thermo_majorizes(q, p, ctx)? {
        (vec![if erase { p.clone() } else { q.clone() }], true)
    } else if ctx.is_uniform() {
        (vec![if erase { meet(p, q)? } else { join(p, q)? }], true)
    } else if p.dim() <= MAX_CANDIDATE_DIM {
        let set = if erase { meet_candidates(p, q, ctx)? } else { join_candidates(p, q, ctx)? };
        let unique = set.verdict.is_unique();
        (set.candidates.into_iter().map(|c| c.state).collect(), unique)
    } else {
        notes.push("optimum computed within the shared beta-ordering only".into());
        (vec![if erase { same_beta_meet(p, q, ctx)? } else { same_beta_join(p, q, ctx)? }], true)
    };
    let mut costs = Vec::new();
    for m in standard_monotones() {
        costs.push(MonotoneCost {
            monotone: m,
            inputs: [m.classical(p, ctx)?, m.classical(q, ctx)?],
            optimal: states.iter().map(|s| m.classical(s, ctx)).collect::<Result<_>>()?,
        });
    }
    Ok(ErasureReport {
        operation: op,
        optimal_states: states.into_iter().map(|entries| ReportState::Classical { entries }).collect(),
        costs,
        verdict: if unique { ErasureVerdict::UniqueOptimum } else { ErasureVerdict::MultipleCandidates },
        notes,
    })
}

pub fn erase_history_qubit(rho: &QubitState, sigma: &QubitState, g: &QubitGibbs) -> Result<ErasureReport> {
    qubit_report(rho, sigma, g, Operation::EraseHistory)
}

pub fn create_futures_qubit(rho: &QubitState, sigma: &QubitState, g: &QubitGibbs) -> Result<ErasureReport> {
    qubit_report(rho, sigma, g, Operation::CreateFutures)
}

fn qubit_report(rho: &QubitState, sigma: &QubitState, g: &QubitGibbs, op: Operation) -> Result<ErasureReport> {
    let state = match op {
        Operation::EraseHistory => qubit_meet(rho, sigma, g)?,
        Operation::CreateFutures => qubit_join(rho, sigma, g)?,
    };
    let (rho, sigma) = (canonical_rep(rho), canonical_rep(sigma));
    let mut costs = Vec::new();
    for m in standard_monotones() {
        costs.push(MonotoneCost {
            monotone: m,
            inputs: [m.qubit(&rho, g)?, m.qubit(&sigma, g)?],
            optimal: vec![m.qubit(&state, g)?],
        });
    }
    Ok(ErasureReport {
        operation: op,
        optimal_states: vec![ReportState::Qubit { bloch: state.to_array() }],
        costs,
        verdict: ErasureVerdict::UniqueOptimum,
        notes: vec!["whether coherence lowers erasure cost beyond two levels is not addressed".into()],
    })
}

/// `(H(p∧q) - (H(p) + H(q))/2, (H(p) + H(q))/2 - H(p∨q))` on the
/// majorization lattice; supermodularity of `H` says `lhs >= rhs`.
pub fn asymmetry_gap(p: &ProbVector, q: &ProbVector) -> Result<(f64, f64)> {
    let (lo, hi) = (meet(p, q)?, join(p, q)?);
    let avg = (shannon(&p.to_f64()) + shannon(&q.to_f64())) / 2.0;
    Ok((shannon(&lo.to_f64()) - avg, avg - shannon(&hi.to_f64())))
}

/// Finite-temperature analogue of supermodularity for a pair sharing a
/// beta-ordering: `D(p) + D(q) - D(p∧q) - D(p∨q)` in relative entropy to
/// gamma, with the same-ordering meet and join. Negative values are
/// violations. `None` when the orderings differ.
pub fn free_energy_submodularity_gap(p: &ProbVector, q: &ProbVector, ctx: &GibbsContext) -> Result<Option<f64>> {
    let (lo, hi) = match (same_beta_meet(p, q, ctx), same_beta_join(p, q, ctx)) {
        (Ok(lo), Ok(hi)) => (lo, hi),
        (Err(crate::Error::OrderingMismatch), _) | (_, Err(crate::Error::OrderingMismatch)) => return Ok(None),
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    let d = |s: &ProbVector| Monotone::RelativeEntropy.classical(s, ctx);
    Ok(Some(d(p)? + d(q)? - d(&lo)? - d(&hi)?))
}
