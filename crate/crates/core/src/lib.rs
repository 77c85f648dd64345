//! Thermodynamic ordering of classical distributions and qubit states under
//! Gibbs-preserving maps.
//!
//! Classical states are exact rational distributions ([`ProbVector`]). At
//! infinite temperature they are ordered by majorization, which forms a
//! lattice ([`majorization`]). At finite temperature the order is
//! thermo-majorization ([`thermo`]); joins and meets then exist only inside a
//! fixed beta-ordering, and [`candidates`] enumerates the competing bounds
//! across orderings. [`gp_oracle`] decides the same questions from scratch by
//! exact linear feasibility.
//!
//! Qubit states ([`qubit`]) are handled in binary64 geometry on the Bloch
//! ball, with a sampled two-state trace-norm oracle in [`au_oracle`].
//! [`erasure`] combines both worlds into history-erasure and
//! future-creation reports.

pub mod au_oracle;
pub mod candidates;
pub mod counterexample;
pub mod curve;
pub mod erasure;
pub mod error;
pub mod gibbs;
pub mod gp_oracle;
pub mod majorization;
pub mod monotone;
pub mod prob;
pub mod qubit;
pub mod rational;
pub mod sample;
pub mod simplex;
pub mod sweep;
pub mod thermo;

pub use au_oracle::{au_oracle, lambda_roots, AUProfile};
pub use candidates::{join_candidates, meet_candidates, Candidate, CandidateSet, Verdict};
pub use curve::PLCurve;
pub use erasure::{asymmetry_gap, create_futures, erase_history, ErasureReport, ErasureVerdict};
pub use error::{Error, Result};
pub use gibbs::{ContextSpec, GibbsContext, Temperature};
pub use gp_oracle::{gp_matrix_exists, unital_matrix_exists, Feasibility, StochasticMatrix};
pub use majorization::{join, majorization_curve, majorizes, meet, spectrum_majorizes};
pub use monotone::Monotone;
pub use prob::{canonicalize, CanonicalClass, ProbVector};
pub use qubit::{
    canonical_rep, future_cone, gp_exists_qubit, qubit_join, qubit_meet, r_plus_minus, ConeDescriptor, QubitGibbs,
    QubitState,
};
pub use rational::Rational;
pub use sweep::{run_sweep, Suite, SweepConfig, SweepSummary};
pub use thermo::{
    beta_order, gibbs_rescale, same_beta_join, same_beta_meet, thermo_curve, thermo_majorizes, BetaOrdering,
};
