//! Piecewise-linear curves through rational breakpoints.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Point {
    #[serde(with = "crate::rational::serde_str")]
    pub x: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub y: Rational,
}

/// Breakpoints start at the origin with strictly increasing `x`. Beyond the
/// last breakpoint the curve is held constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PLCurve {
    points: Vec<Point>,
}

impl PLCurve {
    pub fn new(points: Vec<(Rational, Rational)>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::OutOfRange("curve needs at least one breakpoint".into()));
        };
        if !first.0.is_zero() || !first.1.is_zero() {
            return Err(Error::OutOfRange("curve must start at (0,0)".into()));
        }
        for w in points.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(Error::OutOfRange("breakpoint x must be strictly increasing".into()));
            }
            if w[1].1 < w[0].1 {
                return Err(Error::OutOfRange("breakpoint y must be non-decreasing".into()));
            }
        }
        Ok(PLCurve { points: points.into_iter().map(|(x, y)| Point { x, y }).collect() })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn ys(&self) -> Vec<Rational> {
        self.points.iter().map(|p| p.y.clone()).collect()
    }

    pub fn xs(&self) -> Vec<Rational> {
        self.points.iter().map(|p| p.x.clone()).collect()
    }

    /// Exact linear interpolation; `x` below zero is clamped to the origin.
    pub fn eval(&self, x: &Rational) -> Rational {
        let pts = &self.points;
        if x <= &pts[0].x {
            return pts[0].y.clone();
        }
        // first breakpoint with px >= x
        let k = pts.partition_point(|p| &p.x < x);
        if k == pts.len() {
            return pts[k - 1].y.clone();
        }
        if &pts[k].x == x {
            return pts[k].y.clone();
        }
        let (a, b) = (&pts[k - 1], &pts[k]);
        &a.y + (&b.y - &a.y) * (x - &a.x) / (&b.x - &a.x)
    }

    /// Segment slopes are non-increasing.
    pub fn is_concave(&self) -> bool {
        let slopes: Vec<Rational> = self.points.windows(2).map(|w| (&w[1].y - &w[0].y) / (&w[1].x - &w[0].x)).collect();
        slopes.windows(2).all(|s| s[0] >= s[1])
    }

    /// `self(x) >= other(x)` for every `x`. Checking the breakpoints of
    /// `other` suffices when `self` is concave; otherwise the breakpoints of
    /// both curves are checked.
    pub fn dominates(&self, other: &PLCurve) -> bool {
        let ok_at = |x: &Rational| self.eval(x) >= other.eval(x);
        if !other.points.iter().all(|p| ok_at(&p.x)) {
            return false;
        }
        self.is_concave() || self.points.iter().all(|p| ok_at(&p.x))
    }
}
