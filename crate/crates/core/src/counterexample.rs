//! Explicit pairs of classical states with no join or no meet.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gibbs::GibbsContext;
use crate::prob::ProbVector;
use crate::rational::{format_rational, int, ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatePair {
    pub p: ProbVector,
    pub q: ProbVector,
}

fn check_gamma0(g: &Rational) -> Result<()> {
    if g > &ratio(1, 2) && g < &int(1) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("gamma0 = {} must lie strictly between 1/2 and 1", format_rational(g))))
    }
}

fn two_level(a: Rational) -> ProbVector {
    let b = Rational::one() - &a;
    ProbVector::new(vec![a, b]).expect("entries in [0,1]")
}

/// `p = (1 + g)/2`, `q = (2g - 1)/g` on the equilibrium `(g, 1 - g)`.
///
/// The pair is incomparable, and hence lacks a join, only for
/// `g > 2 - sqrt(2)`. Below that `q` thermo-majorizes `p` and is their join.
pub fn two_level_counterexample(gamma0: &Rational) -> Result<StatePair> {
    check_gamma0(gamma0)?;
    let p = (int(1) + gamma0) / int(2);
    let q = (int(2) * gamma0 - int(1)) / gamma0;
    Ok(StatePair { p: two_level(p), q: two_level(q) })
}

/// `p = (3 + g)/4`, `q = (g² + 2g - 1)/(4g)`; these admit no meet.
pub fn no_meet_counterexample(gamma0: &Rational) -> Result<StatePair> {
    check_gamma0(gamma0)?;
    let p = (int(3) + gamma0) / int(4);
    let q = (gamma0 * gamma0 + int(2) * gamma0 - int(1)) / (int(4) * gamma0);
    Ok(StatePair { p: two_level(p), q: two_level(q) })
}

/// Bounds of the open interval allowed for `1 - q` in the `d`-level construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleInterval {
    pub lower: Rational,
    pub upper: Rational,
}

/// Both states occupy only the two highest levels: `p` on level `d-1` with
/// weight `(1 + max(g_{d-1}/g_{d-2}, g_{d-1}/(g_d + g_{d-1})))/2`, and
/// `1 - q` at the midpoint of `(g_d/g_{d-1}) p < 1 - q < min(g_d/g_{d-1}, 1 - (g_{d-1}/g_d)(1 - p))`
/// (levels counted from one).
pub fn d_level_counterexample(ctx: &GibbsContext) -> Result<StatePair> {
    let (pair, _) = d_level_counterexample_with_interval(ctx)?;
    Ok(pair)
}

pub fn d_level_counterexample_with_interval(ctx: &GibbsContext) -> Result<(StatePair, AdmissibleInterval)> {
    let d = ctx.dim();
    if d < 3 {
        return Err(Error::Inapplicable(format!("needs at least three levels, got {d}")));
    }
    let g = ctx.gamma().entries();
    let (third, second, top) = (&g[d - 3], &g[d - 2], &g[d - 1]);
    if second == top {
        return Err(Error::Inapplicable("the two highest levels are degenerate".into()));
    }
    let p = (int(1) + (second / third).max(second / (top + second))) / int(2);
    let lower = top / second * &p;
    let upper = (top / second).min(int(1) - second / top * (int(1) - &p));
    if lower >= upper {
        return Err(Error::Inapplicable(format!(
            "empty admissible interval ({}, {}) for 1 - q",
            format_rational(&lower),
            format_rational(&upper)
        )));
    }
    let one_minus_q = (&lower + &upper) / int(2);
    let q = int(1) - &one_minus_q;
    let embed = |a: Rational| {
        let mut v = vec![int(0); d];
        v[d - 1] = int(1) - &a;
        v[d - 2] = a;
        ProbVector::new(v).expect("entries in [0,1]")
    };
    Ok((StatePair { p: embed(p), q: embed(q) }, AdmissibleInterval { lower, upper }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn two_level_pair_is_comparable_near_one_half() {
        use crate::gp_oracle::gp_matrix_exists;
        use crate::thermo::thermo_majorizes;
        // 2 - sqrt(2) = 0.5857...
        for (g, comparable) in [("0.55", true), ("0.585", true), ("0.586", false), ("0.75", false)] {
            let ctx = GibbsContext::two_level(r(g)).unwrap();
            let c = two_level_counterexample(&r(g)).unwrap();
            assert_eq!(gp_matrix_exists(&c.q, &c.p, ctx.gamma()).unwrap().feasible, comparable, "{g}");
            assert_eq!(thermo_majorizes(&c.q, &c.p, &ctx).unwrap(), comparable, "{g}");
            assert!(!thermo_majorizes(&c.p, &c.q, &ctx).unwrap());
        }
    }

    #[test]
    fn two_level_values() {
        let c = two_level_counterexample(&r("0.75")).unwrap();
        assert_eq!(c.p.entries(), &[r("7/8"), r("1/8")]);
        assert_eq!(c.q.entries(), &[r("2/3"), r("1/3")]);
        let c = two_level_counterexample(&r("0.6")).unwrap();
        assert_eq!(c.p.entries(), &[r("0.8"), r("0.2")]);
        assert_eq!(c.q.entries(), &[r("1/3"), r("2/3")]);
        // approaching 1/2 from above
        let c = two_level_counterexample(&r("0.500001")).unwrap();
        assert!((crate::rational::to_f64(&c.p.entries()[0]) - 0.75).abs() < 1e-5);
        assert!(crate::rational::to_f64(&c.q.entries()[0]).abs() < 1e-5);
    }

    #[test]
    fn gamma0_range() {
        for g in ["0.5", "1", "0.3", "1.2"] {
            assert_eq!(two_level_counterexample(&r(g)).unwrap_err().kind(), "out-of-range");
            assert!(no_meet_counterexample(&r(g)).is_err());
        }
    }

    #[test]
    fn no_meet_values() {
        let c = no_meet_counterexample(&r("0.75")).unwrap();
        assert_eq!(c.p.entries()[0], r("15/16"));
        assert_eq!(c.q.entries()[0], r("17/48"));
        let c = no_meet_counterexample(&r("0.6")).unwrap();
        assert_eq!(c.p.entries()[0], r("0.9"));
        assert_eq!(c.q.entries()[0], r("7/30"));
    }

    #[test]
    fn d_level_values() {
        let ctx = GibbsContext::from_gamma(ProbVector::parse(&["0.5", "0.3", "0.2"]).unwrap()).unwrap();
        let (c, iv) = d_level_counterexample_with_interval(&ctx).unwrap();
        assert_eq!(c.p.entries(), &[r("0"), r("0.8"), r("0.2")]);
        assert_eq!(iv.lower, r("8/15"));
        assert_eq!(iv.upper, r("2/3"));
        assert_eq!(c.q.entries(), &[r("0"), r("2/5"), r("3/5")]);
    }

    #[test]
    fn d_level_rejections() {
        let two = GibbsContext::two_level(r("0.75")).unwrap();
        assert!(d_level_counterexample(&two).is_err());
        let degenerate = GibbsContext::from_gamma(ProbVector::parse(&["0.4", "0.3", "0.3"]).unwrap()).unwrap();
        assert_eq!(d_level_counterexample(&degenerate).unwrap_err().kind(), "inapplicable");
        let flat_low = GibbsContext::from_gamma(ProbVector::parse(&["0.4", "0.4", "0.2"]).unwrap()).unwrap();
        assert_eq!(d_level_counterexample(&flat_low).unwrap_err().kind(), "inapplicable");
    }
}
