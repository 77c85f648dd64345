//! Majorization preorder and the information lattice on sorted distributions.

use serde::{Deserialize, Serialize};

use crate::curve::PLCurve;
use crate::error::{check_dims, Result};
use crate::prob::{canonicalize, prefix_sums, ProbVector};
use crate::rational::{int, Rational};

fn sorted_prefix(p: &ProbVector) -> Vec<Rational> {
    prefix_sums(canonicalize(p).representative.entries())
}

pub fn majorizes(p: &ProbVector, q: &ProbVector) -> Result<bool> {
    check_dims(p.dim(), q.dim())?;
    let (a, b) = (sorted_prefix(p), sorted_prefix(q));
    Ok(a.iter().zip(&b).all(|(x, y)| x >= y))
}

/// Infinite-temperature ordering of quantum states, decided on their spectra.
pub fn spectrum_majorizes(spec_rho: &ProbVector, spec_sigma: &ProbVector) -> Result<bool> {
    majorizes(spec_rho, spec_sigma)
}

pub fn majorization_curve(p: &ProbVector) -> PLCurve {
    let ys = sorted_prefix(p);
    let pts = ys.into_iter().enumerate().map(|(i, y)| (int(i as i64), y)).collect();
    PLCurve::new(pts).expect("prefix sums of a distribution form a valid curve")
}

pub fn meet(p: &ProbVector, q: &ProbVector) -> Result<ProbVector> {
    check_dims(p.dim(), q.dim())?;
    let lower: Vec<Rational> = sorted_prefix(p).into_iter().zip(sorted_prefix(q)).map(|(a, b)| a.min(b)).collect();
    Ok(ProbVector::from_unchecked(differences(&lower)))
}

/// Output of the join construction, kept for inspection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinTrace {
    /// Increments of the pointwise-maximum curve, before smoothing.
    #[serde(with = "crate::rational::serde_str::vec")]
    pub initial: Vec<Rational>,
    /// Number of flattening passes applied.
    pub steps: usize,
    pub join: ProbVector,
}

pub fn join(p: &ProbVector, q: &ProbVector) -> Result<ProbVector> {
    Ok(join_traced(p, q)?.join)
}

pub fn join_traced(p: &ProbVector, q: &ProbVector) -> Result<JoinTrace> {
    check_dims(p.dim(), q.dim())?;
    let upper: Vec<Rational> = sorted_prefix(p).into_iter().zip(sorted_prefix(q)).map(|(a, b)| a.max(b)).collect();
    let initial = differences(&upper);
    let weights = vec![int(1); initial.len()];
    let (smoothed, steps) = flatten_to_concave(initial.clone(), &weights);
    Ok(JoinTrace { initial, steps, join: ProbVector::from_unchecked(smoothed) })
}

pub(crate) fn differences(prefix: &[Rational]) -> Vec<Rational> {
    prefix.windows(2).map(|w| &w[1] - &w[0]).collect()
}

/// Smooths `g` until the ratios `g[i] / weights[i]` are non-increasing.
///
/// Each pass takes the first index `n` whose ratio rises above its
/// predecessor's, then the largest `m < n` such that the ratio at `m - 1`
/// is at least the pooled ratio `b = sum(g[m..=n]) / sum(weights[m..=n])`
/// (`m = 0` always qualifies), and resets `g[i] = b * weights[i]` on
/// `m..=n`. Mass is preserved and the violation index strictly advances,
/// so at most `len - 1` passes run.
pub(crate) fn flatten_to_concave(mut g: Vec<Rational>, weights: &[Rational]) -> (Vec<Rational>, usize) {
    let ratio = |g: &[Rational], i: usize| &g[i] / &weights[i];
    let mut steps = 0;
    loop {
        let Some(n) = (1..g.len()).find(|&n| ratio(&g, n) > ratio(&g, n - 1)) else {
            return (g, steps);
        };
        let pooled = |m: usize, g: &[Rational]| {
            let mass: Rational = g[m..=n].iter().sum();
            let weight: Rational = weights[m..=n].iter().sum();
            mass / weight
        };
        let m = (1..n).rev().find(|&m| ratio(&g, m - 1) >= pooled(m, &g)).unwrap_or(0);
        let b = pooled(m, &g);
        for i in m..=n {
            g[i] = &b * &weights[i];
        }
        steps += 1;
        debug_assert!(steps < g.len(), "flattening must finish within len - 1 passes");
    }
}
