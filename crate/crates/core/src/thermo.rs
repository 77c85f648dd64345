//! Thermo-majorization: the classical ordering at finite temperature.

use serde::{Deserialize, Serialize};

use crate::curve::PLCurve;
use crate::error::{check_dims, Error, Result};
use crate::gibbs::GibbsContext;
use crate::majorization::{differences, flatten_to_concave};
use crate::prob::{descending_order, prefix_sums, ProbVector};
use crate::rational::Rational;

/// A permutation listing level indices by non-increasing `p_i / gamma_i`.
/// `order[k]` is the level placed at position `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BetaOrdering {
    order: Vec<usize>,
}

impl BetaOrdering {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; order.len()];
        for &i in &order {
            if i >= order.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::OutOfRange(format!("{order:?} is not a permutation")));
            }
        }
        Ok(BetaOrdering { order })
    }

    pub fn identity(d: usize) -> Self {
        BetaOrdering { order: (0..d).collect() }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Whether the rescaled entries of `p` are non-increasing along this order,
    /// i.e. it is *a* valid beta-ordering of `p` (ties admit several).
    pub fn admits(&self, p: &ProbVector, ctx: &GibbsContext) -> bool {
        let r = rescaled(p, ctx);
        self.order.windows(2).all(|w| r[w[0]] >= r[w[1]])
    }
}

fn rescaled(p: &ProbVector, ctx: &GibbsContext) -> Vec<Rational> {
    p.entries().iter().zip(ctx.gamma().entries()).map(|(a, g)| a / g).collect()
}

pub fn gibbs_rescale(p: &ProbVector, ctx: &GibbsContext) -> Result<Vec<Rational>> {
    check_dims(p.dim(), ctx.dim())?;
    Ok(rescaled(p, ctx))
}

/// Ties between equal rescaled entries are broken by ascending level index.
pub fn beta_order(p: &ProbVector, ctx: &GibbsContext) -> Result<BetaOrdering> {
    Ok(BetaOrdering { order: descending_order(&gibbs_rescale(p, ctx)?) })
}

/// Curve through `(sum gamma, sum p)` accumulated along an arbitrary order.
/// Concave exactly when `order` is a valid beta-ordering of `p`.
pub fn curve_along(p: &ProbVector, ctx: &GibbsContext, order: &BetaOrdering) -> Result<PLCurve> {
    check_dims(p.dim(), ctx.dim())?;
    check_dims(p.dim(), order.len())?;
    let xs = prefix_sums(order.order.iter().map(|&i| &ctx.gamma().entries()[i]));
    let ys = prefix_sums(order.order.iter().map(|&i| &p.entries()[i]));
    PLCurve::new(xs.into_iter().zip(ys).collect())
}

pub fn thermo_curve(p: &ProbVector, ctx: &GibbsContext) -> Result<PLCurve> {
    curve_along(p, ctx, &beta_order(p, ctx)?)
}

/// `p` thermo-majorizes `q`: the curve of `p` lies nowhere below that of `q`.
/// Both curves are concave, so comparing at the breakpoints of `q` decides it.
pub fn thermo_majorizes(p: &ProbVector, q: &ProbVector, ctx: &GibbsContext) -> Result<bool> {
    check_dims(p.dim(), q.dim())?;
    let fp = thermo_curve(p, ctx)?;
    let fq = thermo_curve(q, ctx)?;
    Ok(fq.points().iter().all(|pt| fp.eval(&pt.x) >= pt.y))
}

/// A beta-ordering admitted by both states, preferring that of `p`.
pub fn shared_ordering(p: &ProbVector, q: &ProbVector, ctx: &GibbsContext) -> Result<BetaOrdering> {
    check_dims(p.dim(), q.dim())?;
    let op = beta_order(p, ctx)?;
    if op.admits(q, ctx) {
        return Ok(op);
    }
    let oq = beta_order(q, ctx)?;
    if oq.admits(p, ctx) {
        return Ok(oq);
    }
    Err(Error::OrderingMismatch)
}

fn prefix_along(p: &ProbVector, order: &BetaOrdering) -> Vec<Rational> {
    prefix_sums(order.order.iter().map(|&i| &p.entries()[i]))
}

/// Greatest lower bound within a shared beta-ordering.
pub fn same_beta_meet(p: &ProbVector, q: &ProbVector, ctx: &GibbsContext) -> Result<ProbVector> {
    let order = shared_ordering(p, q, ctx)?;
    Ok(meet_along(p, q, &order))
}

pub(crate) fn meet_along(p: &ProbVector, q: &ProbVector, order: &BetaOrdering) -> ProbVector {
    let lower: Vec<Rational> =
        prefix_along(p, order).into_iter().zip(prefix_along(q, order)).map(|(a, b)| a.min(b)).collect();
    ProbVector::scatter(differences(&lower), &order.order).expect("increments of a distribution curve")
}

/// Least upper bound within a shared beta-ordering.
pub fn same_beta_join(p: &ProbVector, q: &ProbVector, ctx: &GibbsContext) -> Result<ProbVector> {
    let order = shared_ordering(p, q, ctx)?;
    let upper: Vec<Rational> =
        prefix_along(p, &order).into_iter().zip(prefix_along(q, &order)).map(|(a, b)| a.max(b)).collect();
    Ok(smooth_along(differences(&upper), ctx, &order))
}

/// Applies the weighted flattening to increments laid out along `order`.
pub(crate) fn smooth_along(increments: Vec<Rational>, ctx: &GibbsContext, order: &BetaOrdering) -> ProbVector {
    let weights: Vec<Rational> = order.order.iter().map(|&i| ctx.gamma().entries()[i].clone()).collect();
    let (g, _) = flatten_to_concave(increments, &weights);
    ProbVector::scatter(g, &order.order).expect("flattening preserves mass")
}
