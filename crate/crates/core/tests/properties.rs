use std::sync::OnceLock;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tautilt::decompose::{decompose, is_isomorphic};
use tautilt::hom::hom_dim;
use tautilt::homology::{ext1_dim, tau, tau_inverse};
use tautilt::regression::{brute_force_hom_dim, fixture, scramble, Fixture};
use tautilt::subcat::{fac_members, sub_members, Subcat};
use tautilt::tau_tilt::{is_tau_rigid, support_tau_tilting_report};
use tautilt::Module;

fn fx() -> &'static Fixture {
    static FX: OnceLock<Fixture> = OnceLock::new();
    FX.get_or_init(|| fixture().unwrap())
}

fn subset(mask: u32) -> Subcat {
    let pool = &fx().pool;
    Subcat::new(pool, (0..pool.len()).filter(|i| mask & (1 << i) != 0))
}

fn sum_of(mults: &[usize]) -> Module {
    let pool = &fx().pool;
    let mut m = Module::zero(pool.algebra().clone());
    for (i, &k) in mults.iter().enumerate() {
        m = m.sum(&pool.member(i).power(k));
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn hom_dimension_matches_brute_force(
        a in prop::collection::vec(0usize..2, 5),
        b in prop::collection::vec(0usize..2, 5),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = scramble(&sum_of(&a), &mut rng);
        let n = scramble(&sum_of(&b), &mut rng);
        prop_assert_eq!(hom_dim(&m, &n).unwrap(), brute_force_hom_dim(&m, &n));
    }

    #[test]
    fn decomposition_recovers_summands(
        mults in prop::collection::vec(0usize..3, 5),
        seed in any::<u64>(),
    ) {
        let pool = &fx().pool;
        let m = scramble(&sum_of(&mults), &mut ChaCha8Rng::seed_from_u64(seed));
        let mut got = vec![0; pool.len()];
        for (x, k) in decompose(&m) {
            let i = pool.find(&x).expect("summand is in the pool");
            got[i] += k;
        }
        prop_assert_eq!(got, mults);
    }

    #[test]
    fn scrambled_modules_stay_isomorphic(i in 0usize..5, seed in any::<u64>()) {
        let m = fx().pool.member(i);
        let s = scramble(m, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(is_isomorphic(&s, m));
        prop_assert!(is_isomorphic(&tau(&s), &tau(m)));
    }

    #[test]
    fn ar_formula(i in 0usize..5, j in 0usize..5) {
        // Ext¹(X, Y) ≅ D Hom(Y, τX) when pd X ≤ 1, i.e. Hom(DΛ, τX) = 0.
        let pool = &fx().pool;
        let alg = pool.algebra();
        let (x, y) = (pool.member(i), pool.member(j));
        let tx = tau(x);
        let injectives = (0..alg.vertex_count())
            .map(|v| Module::injective(alg.clone(), v).unwrap())
            .fold(Module::zero(alg.clone()), |a, b| a.sum(&b));
        if hom_dim(&injectives, &tx).unwrap() == 0 {
            prop_assert_eq!(ext1_dim(x, y).unwrap(), hom_dim(y, &tx).unwrap());
        }
        if !pool.is_projective(i) {
            prop_assert!(is_isomorphic(&tau_inverse(&tx), x));
        }
    }

    #[test]
    fn fac_through_deflations_is_the_trace_closure(mask in 0u32..32) {
        let t = subset(mask);
        let ctx = &fx().modules;
        prop_assert_eq!(ctx.fac(&t), fac_members(&t));
        prop_assert_eq!(ctx.sub(&t), sub_members(&t));
    }

    #[test]
    fn fac_is_a_closure(mask in 0u32..32) {
        let t = subset(mask);
        let ctx = &fx().e;
        let e = t.intersection(ctx.ambient());
        let f = ctx.fac(&e);
        prop_assert!(e.is_subset(&f));
        prop_assert_eq!(ctx.fac(&f), f);
    }

    #[test]
    fn support_tau_tilting_objects_are_tau_rigid(mask in 0u32..32) {
        for ctx in [&fx().modules, &fx().e] {
            let t = subset(mask);
            if support_tau_tilting_report(&t, ctx).is_support_tau_tilting() {
                prop_assert!(is_tau_rigid(&t, ctx));
            }
        }
    }
}
