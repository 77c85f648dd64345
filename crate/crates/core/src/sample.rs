//! Seeded random states for sweeps and tests.
//!
//! Every trial draws from its own ChaCha stream keyed by `(seed, index)`, so
//! results do not depend on how trials are scheduled.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gibbs::GibbsContext;
use crate::prob::ProbVector;
use crate::qubit::QubitState;
use crate::rational::{int, ratio, Rational};

/// Denominator scale for sampled rational weights.
pub const RESOLUTION: i64 = 24;

pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Random distribution with integer weights in `0..=RESOLUTION`, normalized.
pub fn distribution<R: Rng>(rng: &mut R, d: usize) -> ProbVector {
    loop {
        let w: Vec<Rational> = (0..d).map(|_| int(rng.gen_range(0..=RESOLUTION))).collect();
        if w.iter().any(|x| !x.is_zero()) {
            return ProbVector::normalized(w).expect("non-negative weights");
        }
    }
}

/// Strictly positive, non-increasing equilibrium distribution.
pub fn gamma<R: Rng>(rng: &mut R, d: usize) -> ProbVector {
    let mut w: Vec<i64> = (0..d).map(|_| rng.gen_range(1..=RESOLUTION)).collect();
    w.sort_unstable_by(|a, b| b.cmp(a));
    ProbVector::normalized(w.into_iter().map(int).collect()).expect("positive weights")
}

pub fn context<R: Rng>(rng: &mut R, d: usize) -> GibbsContext {
    GibbsContext::from_gamma(gamma(rng, d)).expect("valid gamma")
}

/// A state reachable from `p` by a Gibbs-preserving map: thermalize a random
/// subset of levels, then mix with `gamma`.
pub fn gp_image<R: Rng>(rng: &mut R, p: &ProbVector, ctx: &GibbsContext) -> ProbVector {
    let d = p.dim();
    let g = ctx.gamma().entries();
    let mut levels: Vec<usize> = (0..d).collect();
    levels.shuffle(rng);
    let subset = &levels[..rng.gen_range(0..=d)];
    let mass: Rational = subset.iter().map(|&i| p.entries()[i].clone()).sum();
    let weight: Rational = subset.iter().map(|&i| g[i].clone()).sum();
    let mut out = p.entries().to_vec();
    for &i in subset {
        out[i] = &mass * &g[i] / &weight;
    }
    let t = ratio(rng.gen_range(0..=RESOLUTION), RESOLUTION);
    let out = out.iter().zip(g).map(|(a, b)| &t * a + (Rational::one() - &t) * b).collect();
    ProbVector::new(out).expect("convex combination of distributions")
}

/// Uniform on the Bloch ball.
pub fn qubit<R: Rng>(rng: &mut R) -> QubitState {
    loop {
        let v: [f64; 3] = [rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)];
        if v.iter().map(|c| c * c).sum::<f64>() <= 1.0 {
            return QubitState::from_array(v).expect("inside the ball");
        }
    }
}

/// Uniform on the Bloch sphere.
pub fn pure_qubit<R: Rng>(rng: &mut R) -> QubitState {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let t = (1.0 - z * z).max(0.0).sqrt();
    QubitState { x: t * phi.cos(), y: t * phi.sin(), z }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thermo::thermo_majorizes;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a = distribution(&mut trial_rng(7, 3), 5);
        assert_eq!(a, distribution(&mut trial_rng(7, 3), 5));
        assert_ne!((0..4).map(|i| distribution(&mut trial_rng(7, i), 5)).collect::<Vec<_>>(), vec![a.clone(); 4]);
    }

    #[test]
    fn samples_are_valid() {
        let mut rng = trial_rng(1, 0);
        for d in 2..=6 {
            let ctx = context(&mut rng, d);
            let p = distribution(&mut rng, d);
            let q = gp_image(&mut rng, &p, &ctx);
            assert!(thermo_majorizes(&p, &q, &ctx).unwrap());
        }
        for _ in 0..100 {
            assert!(qubit(&mut rng).norm() <= 1.0);
            assert!((pure_qubit(&mut rng).norm() - 1.0).abs() < 1e-12);
        }
    }
}
