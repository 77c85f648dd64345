use num_traits::One;
use proptest::prelude::*;
use thermolattice::candidates::{join_candidates, meet_candidates};
use thermolattice::erasure::{asymmetry_gap, erase_history, SUPERMODULARITY_TOLERANCE};
use thermolattice::majorization::{join, majorizes, meet};
use thermolattice::monotone::{shannon, Monotone};
use thermolattice::prob::canonicalize;
use thermolattice::rational::{int, ratio, Rational};
use thermolattice::sample::gp_image;
use thermolattice::thermo::{same_beta_join, same_beta_meet, thermo_majorizes};
use thermolattice::{gp_matrix_exists, GibbsContext, ProbVector};

fn weights(d: usize, lo: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(lo..=20u32, d).prop_filter("non-zero mass", |w| w.iter().any(|&x| x > 0))
}

fn normalize(w: &[u32]) -> ProbVector {
    ProbVector::normalized(w.iter().map(|&x| int(x as i64)).collect()).unwrap()
}

fn dist(d: usize) -> impl Strategy<Value = ProbVector> {
    weights(d, 0).prop_map(|w| normalize(&w))
}

fn ctx(d: usize) -> impl Strategy<Value = GibbsContext> {
    weights(d, 1).prop_map(|mut w| {
        w.sort_unstable_by(|a, b| b.cmp(a));
        GibbsContext::from_gamma(normalize(&w)).unwrap()
    })
}

fn mix(t: &Rational, a: &ProbVector, b: &ProbVector) -> ProbVector {
    let e = a.entries().iter().zip(b.entries()).map(|(x, y)| t * x + (Rational::one() - t) * y).collect();
    ProbVector::new(e).unwrap()
}

fn same(a: &ProbVector, b: &ProbVector) -> bool {
    canonicalize(a).representative == canonicalize(b).representative
}

fn pair(dims: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (ProbVector, ProbVector)> {
    dims.prop_flat_map(|d| (dist(d), dist(d)))
}

fn triple(dims: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (ProbVector, ProbVector, ProbVector)> {
    dims.prop_flat_map(|d| (dist(d), dist(d), dist(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn majorization_is_a_partial_order_on_classes((p, x, y) in triple(2..=6)) {
        prop_assert!(majorizes(&p, &p).unwrap());
        let q = meet(&p, &x).unwrap();
        let r = meet(&q, &y).unwrap();
        prop_assert!(majorizes(&p, &q).unwrap() && majorizes(&q, &r).unwrap());
        prop_assert!(majorizes(&p, &r).unwrap());
        if majorizes(&p, &x).unwrap() && majorizes(&x, &p).unwrap() {
            prop_assert!(same(&p, &x));
        }
    }

    #[test]
    fn lattice_identities((p, q, r) in triple(2..=6)) {
        prop_assert!(same(&meet(&p, &q).unwrap(), &meet(&q, &p).unwrap()));
        prop_assert!(same(&join(&p, &q).unwrap(), &join(&q, &p).unwrap()));
        prop_assert!(same(&meet(&meet(&p, &q).unwrap(), &r).unwrap(), &meet(&p, &meet(&q, &r).unwrap()).unwrap()));
        prop_assert!(same(&join(&join(&p, &q).unwrap(), &r).unwrap(), &join(&p, &join(&q, &r).unwrap()).unwrap()));
        prop_assert!(same(&join(&p, &meet(&p, &q).unwrap()).unwrap(), &p));
        prop_assert!(same(&meet(&p, &join(&p, &q).unwrap()).unwrap(), &p));
        prop_assert!(same(&meet(&p, &p).unwrap(), &p));
        prop_assert!(same(&join(&p, &p).unwrap(), &p));
    }

    #[test]
    fn meet_and_join_are_extremal((p, q, x) in triple(2..=5), s in 0i64..=20) {
        let d = p.dim();
        let (lo, hi) = (meet(&p, &q).unwrap(), join(&p, &q).unwrap());
        prop_assert!(majorizes(&p, &lo).unwrap() && majorizes(&q, &lo).unwrap());
        prop_assert!(majorizes(&hi, &p).unwrap() && majorizes(&hi, &q).unwrap());
        let t = ratio(s, 20);
        let below = mix(&t, &x, &ProbVector::uniform(d).unwrap());
        if majorizes(&p, &below).unwrap() && majorizes(&q, &below).unwrap() {
            prop_assert!(majorizes(&lo, &below).unwrap());
        }
        let above = mix(&t, &ProbVector::pure(d, 0).unwrap(), &x);
        if majorizes(&above, &p).unwrap() && majorizes(&above, &q).unwrap() {
            prop_assert!(majorizes(&above, &hi).unwrap());
        }
    }

    #[test]
    fn infinite_temperature_thermo_is_majorization((p, q) in pair(2..=5)) {
        let c = GibbsContext::infinite_temperature(p.dim()).unwrap();
        prop_assert_eq!(thermo_majorizes(&p, &q, &c).unwrap(), majorizes(&p, &q).unwrap());
    }

    #[test]
    fn thermo_is_reflexive_and_transitive(seed in any::<u64>(), c in (2usize..=5).prop_flat_map(ctx)) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let p = thermolattice::sample::distribution(&mut rng, c.dim());
        let q = gp_image(&mut rng, &p, &c);
        let r = gp_image(&mut rng, &q, &c);
        prop_assert!(thermo_majorizes(&p, &p, &c).unwrap());
        prop_assert!(thermo_majorizes(&p, &q, &c).unwrap() && thermo_majorizes(&q, &r, &c).unwrap());
        prop_assert!(thermo_majorizes(&p, &r, &c).unwrap());
    }

    #[test]
    fn shared_ordering_bounds((c, p, q) in (2usize..=5).prop_flat_map(|d| (ctx(d), dist(d), dist(d)))) {
        if let (Ok(lo), Ok(hi)) = (same_beta_meet(&p, &q, &c), same_beta_join(&p, &q, &c)) {
            prop_assert!(thermo_majorizes(&p, &lo, &c).unwrap() && thermo_majorizes(&q, &lo, &c).unwrap());
            prop_assert!(thermo_majorizes(&hi, &p, &c).unwrap() && thermo_majorizes(&hi, &q, &c).unwrap());
        }
    }

    #[test]
    fn supermodular_and_subadditive((p, q) in pair(3..=6)) {
        let (lhs, rhs) = asymmetry_gap(&p, &q).unwrap();
        prop_assert!(lhs >= rhs - SUPERMODULARITY_TOLERANCE);
        let h = |v: &ProbVector| shannon(&v.to_f64());
        prop_assert!(h(&meet(&p, &q).unwrap()) <= h(&p) + h(&q) + SUPERMODULARITY_TOLERANCE);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn lp_agrees_and_witnesses((c, p, q) in (2usize..=4).prop_flat_map(|d| (ctx(d), dist(d), dist(d)))) {
        let f = gp_matrix_exists(&p, &q, c.gamma()).unwrap();
        prop_assert_eq!(f.feasible, thermo_majorizes(&p, &q, &c).unwrap());
        if let Some(w) = f.witness {
            prop_assert!(w.is_stochastic());
            prop_assert_eq!(w.apply(p.entries()), q.entries().to_vec());
            prop_assert_eq!(w.apply(c.gamma().entries()), c.gamma().entries().to_vec());
            let kl = |v: &ProbVector| Monotone::RelativeEntropy.classical(v, &c).unwrap();
            prop_assert!(kl(&q) <= kl(&p) + 1e-12);
        }
    }

    #[test]
    fn candidates_are_bounds((c, p, q) in (2usize..=3).prop_flat_map(|d| (ctx(d), dist(d), dist(d)))) {
        for cand in join_candidates(&p, &q, &c).unwrap().candidates {
            prop_assert!(thermo_majorizes(&cand.state, &p, &c).unwrap());
            prop_assert!(thermo_majorizes(&cand.state, &q, &c).unwrap());
        }
        for cand in meet_candidates(&p, &q, &c).unwrap().candidates {
            prop_assert!(thermo_majorizes(&p, &cand.state, &c).unwrap());
            prop_assert!(thermo_majorizes(&q, &cand.state, &c).unwrap());
        }
    }

    #[test]
    fn comparable_erasure_is_free(seed in any::<u64>(), c in (2usize..=4).prop_flat_map(ctx)) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let p = thermolattice::sample::distribution(&mut rng, c.dim());
        let q = gp_image(&mut rng, &p, &c);
        let r = erase_history(&p, &q, &c).unwrap();
        prop_assert_eq!(r.classical_states(), vec![&q]);
        for cost in r.costs {
            prop_assert_eq!(cost.optimal[0], cost.inputs[1]);
        }
    }
}

#[test]
fn two_level_grid_agrees_with_lp() {
    for g in 11..=19 {
        let c = GibbsContext::two_level(ratio(g, 20)).unwrap();
        for a in 0..=20 {
            for b in 0..=20 {
                let p = ProbVector::new(vec![ratio(a, 20), ratio(20 - a, 20)]).unwrap();
                let q = ProbVector::new(vec![ratio(b, 20), ratio(20 - b, 20)]).unwrap();
                let lp = gp_matrix_exists(&p, &q, c.gamma()).unwrap().feasible;
                assert_eq!(lp, thermo_majorizes(&p, &q, &c).unwrap(), "{p} {q} at {g}/20");
            }
        }
    }
}
