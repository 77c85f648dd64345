//! Join and meet candidates across all beta-orderings.
//!
//! Within one ordering the grid of curve abscissae is fixed, so states of
//! that ordering are compared by their curve heights on the grid alone.
//!
//! * Lower bounds of `p` and `q` inside an ordering have a greatest element:
//!   the curve sampled from `min(f_p, f_q)` on the grid.
//! * Upper bounds inside an ordering are the concave grid curves lying above
//!   `f_p` and `f_q` everywhere. The least concave grid curve above
//!   `max(f_p, f_q)` *at the grid points* is tried first (weighted
//!   flattening); when it dips below an input curve between grid points, an
//!   exact LP picks a minimal element by minimizing the sum of grid heights.
//!   Such an ordering is flagged `pinned = false`, since its upper bounds may
//!   have no least element.
//!
//! Survivors are the candidates not strictly dominated by another candidate
//! (equivalent candidates keep the first one found). Two or more survivors
//! rule out a join. A single survivor is the join when every ordering with a
//! unique minimal bound is above it, which holds by construction, and every
//! unpinned ordering's whole feasible region lies above it, checked by LP.

use std::collections::HashSet;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::curve::PLCurve;
use crate::error::{check_dims, Error, Result};
use crate::gibbs::GibbsContext;
use crate::majorization::differences;
use crate::prob::{prefix_sums, ProbVector};
use crate::rational::Rational;
use crate::simplex::{LpOutcome, StandardForm};
use crate::thermo::{curve_along, smooth_along, thermo_curve, BetaOrdering};

pub const MAX_CANDIDATE_DIM: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    UniqueJoin,
    NoJoin,
    UniqueMeet,
    NoMeet,
}

impl Verdict {
    pub fn is_unique(self) -> bool {
        matches!(self, Verdict::UniqueJoin | Verdict::UniqueMeet)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub state: ProbVector,
    /// The ordering whose grid produced this state.
    pub ordering: BetaOrdering,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateSet {
    pub candidates: Vec<Candidate>,
    pub verdict: Verdict,
}

impl CandidateSet {
    pub fn states(&self) -> Vec<&ProbVector> {
        self.candidates.iter().map(|c| &c.state).collect()
    }

    pub fn contains(&self, p: &ProbVector) -> bool {
        self.candidates.iter().any(|c| &c.state == p)
    }
}

fn guard(p: &ProbVector, q: &ProbVector, ctx: &GibbsContext) -> Result<()> {
    check_dims(p.dim(), q.dim())?;
    check_dims(p.dim(), ctx.dim())?;
    if p.dim() > MAX_CANDIDATE_DIM {
        return Err(Error::DimensionTooLarge { d: p.dim(), max: MAX_CANDIDATE_DIM, what: "ordering enumeration" });
    }
    Ok(())
}

/// Grid heights of one ordering as affine forms in the free heights
/// `y_1..y_{d-1}` (`y_0 = 0`, `y_d = 1` are fixed).
struct Grid {
    order: BetaOrdering,
    xs: Vec<Rational>,
    weights: Vec<Rational>,
}

struct Affine {
    coeffs: Vec<Rational>,
    constant: Rational,
}

impl Grid {
    fn new(order: BetaOrdering, ctx: &GibbsContext) -> Self {
        let weights: Vec<Rational> = order.as_slice().iter().map(|&i| ctx.gamma().entries()[i].clone()).collect();
        let xs = prefix_sums(&weights);
        Grid { order, xs, weights }
    }

    fn d(&self) -> usize {
        self.weights.len()
    }

    fn height(&self, k: usize) -> Affine {
        let mut coeffs = vec![Rational::zero(); self.d() - 1];
        let constant = if k == 0 {
            Rational::zero()
        } else if k == self.d() {
            Rational::one()
        } else {
            coeffs[k - 1] = Rational::one();
            Rational::zero()
        };
        Affine { coeffs, constant }
    }

    /// Curve value at `x` as an affine form.
    fn at(&self, x: &Rational) -> Affine {
        let d = self.d();
        if x >= &self.xs[d] {
            return self.height(d);
        }
        let k = self.xs.partition_point(|g| g < x);
        if &self.xs[k] == x || k == 0 {
            return self.height(k);
        }
        let t = (x - &self.xs[k - 1]) / (&self.xs[k] - &self.xs[k - 1]);
        let (a, b) = (self.height(k - 1), self.height(k));
        let s = Rational::one() - &t;
        Affine {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(u, v)| &s * u + &t * v).collect(),
            constant: &s * &a.constant + &t * &b.constant,
        }
    }

    /// Concave, non-decreasing grid curves lying above every curve in `above`.
    fn upper_bound_region(&self, above: &[&PLCurve]) -> StandardForm {
        let d = self.d();
        let mut lp = StandardForm::new(d - 1);
        let ge = |lp: &mut StandardForm, form: Affine, rhs: Rational| {
            let rhs = rhs - &form.constant;
            lp.push_ge(form.coeffs, rhs);
        };
        // slope_k >= slope_{k+1}, i.e. w_{k+1}(y_k - y_{k-1}) - w_k(y_{k+1} - y_k) >= 0
        for k in 1..d {
            let (lo, mid, hi) = (self.height(k - 1), self.height(k), self.height(k + 1));
            let (wl, wr) = (&self.weights[k - 1], &self.weights[k]);
            let coeffs = (0..d - 1)
                .map(|i| wr * (&mid.coeffs[i] - &lo.coeffs[i]) - wl * (&hi.coeffs[i] - &mid.coeffs[i]))
                .collect();
            let constant = wr * (&mid.constant - &lo.constant) - wl * (&hi.constant - &mid.constant);
            ge(&mut lp, Affine { coeffs, constant }, Rational::zero());
        }
        // last slope non-negative
        let last = self.height(d - 1);
        ge(
            &mut lp,
            Affine { coeffs: last.coeffs.iter().map(|c| -c).collect(), constant: -last.constant },
            -Rational::one(),
        );
        for curve in above {
            let pts = curve.points().iter().map(|p| (p.x.clone(), p.y.clone()));
            let grid = self.xs.iter().map(|x| (x.clone(), curve.eval(x)));
            for (x, y) in pts.chain(grid) {
                ge(&mut lp, self.at(&x), y);
            }
        }
        lp
    }

    fn state_from_heights(&self, inner: &[Rational]) -> ProbVector {
        let mut ys = Vec::with_capacity(self.d() + 1);
        ys.push(Rational::zero());
        ys.extend(inner.iter().take(self.d() - 1).cloned());
        ys.push(Rational::one());
        ProbVector::scatter(differences(&ys), self.order.as_slice()).expect("grid heights form a distribution")
    }

    fn heights_of(&self, f: impl Fn(&Rational) -> Rational) -> Vec<Rational> {
        self.xs.iter().map(f).collect()
    }
}

fn orderings(d: usize) -> impl Iterator<Item = BetaOrdering> {
    (0..d).permutations(d).map(|o| BetaOrdering::new(o).expect("permutation"))
}

struct Found {
    candidate: Candidate,
    curve: PLCurve,
}

/// Keeps the candidates not strictly beaten by another; `beats(a, b)` means
/// `a` is preferable to `b`. Among mutually equivalent candidates the first wins.
fn survivors(found: Vec<Found>, beats: impl Fn(&PLCurve, &PLCurve) -> bool) -> Vec<Found> {
    let n = found.len();
    let keep: Vec<bool> = (0..n)
        .map(|i| {
            !(0..n).any(|j| {
                if i == j {
                    return false;
                }
                let (a, b) = (&found[j].curve, &found[i].curve);
                let j_beats_i = beats(a, b);
                let i_beats_j = beats(b, a);
                (j_beats_i && !i_beats_j) || (j_beats_i && i_beats_j && j < i)
            })
        })
        .collect();
    found.into_iter().zip(keep).filter_map(|(f, k)| k.then_some(f)).collect()
}

fn dominates(a: &PLCurve, b: &PLCurve) -> bool {
    a.dominates(b)
}

fn dedup_push(
    found: &mut Vec<Found>,
    seen: &mut HashSet<ProbVector>,
    state: ProbVector,
    ordering: BetaOrdering,
    ctx: &GibbsContext,
) -> Result<()> {
    if seen.insert(state.clone()) {
        let curve = thermo_curve(&state, ctx)?;
        found.push(Found { candidate: Candidate { state, ordering }, curve });
    }
    Ok(())
}

/// Minimal upper bounds of `p` and `q` across all `d!` beta-orderings.
pub fn join_candidates(p: &ProbVector, q: &ProbVector, ctx: &GibbsContext) -> Result<CandidateSet> {
    guard(p, q, ctx)?;
    let (fp, fq) = (thermo_curve(p, ctx)?, thermo_curve(q, ctx)?);
    let mut found = Vec::new();
    let mut seen = HashSet::new();
    let mut unpinned = Vec::new();
    for order in orderings(p.dim()) {
        let grid = Grid::new(order.clone(), ctx);
        let upper = grid.heights_of(|x| fp.eval(x).max(fq.eval(x)));
        let smoothed = smooth_along(differences(&upper), ctx, &order);
        let curve = curve_along(&smoothed, ctx, &order)?;
        let state = if curve.dominates(&fp) && curve.dominates(&fq) {
            smoothed
        } else {
            let mut lp = grid.upper_bound_region(&[&fp, &fq]);
            for c in lp.cost.iter_mut().take(p.dim() - 1) {
                *c = Rational::one();
            }
            match lp.solve() {
                LpOutcome::Optimal { x, .. } => {
                    let s = grid.state_from_heights(&x);
                    unpinned.push(grid);
                    s
                }
                // no state of this ordering lies above both inputs
                _ => continue,
            }
        };
        dedup_push(&mut found, &mut seen, state, order, ctx)?;
    }
    let kept = survivors(found, |a, b| dominates(b, a));
    let verdict = match kept.as_slice() {
        [only] if unpinned.iter().all(|g| region_above(g, &only.curve, &fp, &fq)) => Verdict::UniqueJoin,
        _ => Verdict::NoJoin,
    };
    Ok(CandidateSet { candidates: kept.into_iter().map(|f| f.candidate).collect(), verdict })
}

/// Every upper bound realizable on `grid` lies on or above `curve`.
fn region_above(grid: &Grid, curve: &PLCurve, fp: &PLCurve, fq: &PLCurve) -> bool {
    let probes = curve.points().iter().map(|p| p.x.clone()).chain(grid.xs.iter().cloned());
    for x in probes {
        let target = curve.eval(&x);
        let mut lp = grid.upper_bound_region(&[fp, fq]);
        let form = grid.at(&x);
        for (c, f) in lp.cost.iter_mut().zip(&form.coeffs) {
            *c = f.clone();
        }
        match lp.solve() {
            LpOutcome::Optimal { value, .. } if &value + &form.constant >= target => {}
            LpOutcome::Infeasible => return true,
            _ => return false,
        }
    }
    true
}

/// Maximal lower bounds of `p` and `q` across all `d!` beta-orderings.
pub fn meet_candidates(p: &ProbVector, q: &ProbVector, ctx: &GibbsContext) -> Result<CandidateSet> {
    guard(p, q, ctx)?;
    let (fp, fq) = (thermo_curve(p, ctx)?, thermo_curve(q, ctx)?);
    let mut found = Vec::new();
    let mut seen = HashSet::new();
    for order in orderings(p.dim()) {
        let grid = Grid::new(order.clone(), ctx);
        let lower = grid.heights_of(|x| fp.eval(x).min(fq.eval(x)));
        let state = ProbVector::scatter(differences(&lower), order.as_slice())?;
        dedup_push(&mut found, &mut seen, state, order, ctx)?;
    }
    let kept = survivors(found, dominates);
    let verdict = if kept.len() == 1 { Verdict::UniqueMeet } else { Verdict::NoMeet };
    Ok(CandidateSet { candidates: kept.into_iter().map(|f| f.candidate).collect(), verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::majorization::{join, meet};
    use crate::rational::ratio;
    use crate::thermo::thermo_majorizes;

    fn pv(s: &[&str]) -> ProbVector {
        ProbVector::parse(s).unwrap()
    }

    fn assert_pairwise_incomparable(set: &CandidateSet, ctx: &GibbsContext) {
        for a in &set.candidates {
            for b in &set.candidates {
                if a != b {
                    assert!(!thermo_majorizes(&a.state, &b.state, ctx).unwrap(), "{} vs {}", a.state, b.state);
                }
            }
        }
    }

    #[test]
    fn two_level_pair_has_two_join_candidates() {
        let ctx = GibbsContext::two_level(ratio(3, 4)).unwrap();
        let p = pv(&["7/8", "1/8"]);
        let q = pv(&["2/3", "1/3"]);
        let set = join_candidates(&p, &q, &ctx).unwrap();
        assert_eq!(set.verdict, Verdict::NoJoin);
        assert_eq!(set.candidates.len(), 2);
        assert!(set.contains(&pv(&["1", "0"])));
        assert!(set.contains(&pv(&["3/8", "5/8"])));
        assert_pairwise_incomparable(&set, &ctx);
        for c in set.states() {
            assert!(thermo_majorizes(c, &p, &ctx).unwrap());
            assert!(thermo_majorizes(c, &q, &ctx).unwrap());
        }
    }

    #[test]
    fn comparable_pair_has_unique_bounds() {
        let ctx = GibbsContext::from_gamma(pv(&["0.5", "0.3", "0.2"])).unwrap();
        let p = pv(&["0.1", "0.1", "0.8"]);
        let q = pv(&["0.4", "0.3", "0.3"]);
        assert!(thermo_majorizes(&p, &q, &ctx).unwrap());
        let j = join_candidates(&p, &q, &ctx).unwrap();
        assert_eq!(j.verdict, Verdict::UniqueJoin);
        assert_eq!(j.states(), vec![&p]);
        let m = meet_candidates(&p, &q, &ctx).unwrap();
        assert_eq!(m.verdict, Verdict::UniqueMeet);
        assert_eq!(m.states(), vec![&q]);
    }

    #[test]
    fn infinite_temperature_reduces_to_classical_lattice() {
        let ctx = GibbsContext::infinite_temperature(4).unwrap();
        let p = pv(&["0.6", "0.15", "0.15", "0.1"]);
        let q = pv(&["0.5", "0.25", "0.2", "0.05"]);
        let j = join_candidates(&p, &q, &ctx).unwrap();
        assert_eq!(j.verdict, Verdict::UniqueJoin);
        assert_eq!(j.states(), vec![&join(&p, &q).unwrap()]);
        let m = meet_candidates(&p, &q, &ctx).unwrap();
        assert_eq!(m.verdict, Verdict::UniqueMeet);
        assert_eq!(m.states(), vec![&meet(&p, &q).unwrap()]);
    }

    #[test]
    fn dimension_guard() {
        let u = ProbVector::uniform(7).unwrap();
        let ctx = GibbsContext::infinite_temperature(7).unwrap();
        assert_eq!(join_candidates(&u, &u, &ctx).unwrap_err().kind(), "dimension-too-large");
        assert!(meet_candidates(&u, &u, &ctx).is_err());
    }
}
