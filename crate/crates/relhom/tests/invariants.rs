//! Property tests for the exact linear algebra substrate and the
//! abelian-category calculus.

use proptest::prelude::*;
use relhom::algebra::{Algebra, AlgebraRef, Quiver, RelationTerm};
use relhom::field::Fp;
use relhom::matrix::Matrix;
use relhom::module::{hom_basis, kernel, Module};
use relhom::sample::Sampler;

fn arb_matrix() -> impl Strategy<Value = Matrix> {
    (prop_oneof![Just(2u64), Just(3), Just(5)], 0usize..5, 0usize..5).prop_flat_map(
        |(p, rows, cols)| {
            let fp = Fp::new(p).unwrap();
            proptest::collection::vec(0..p, rows * cols)
                .prop_map(move |flat| Matrix::from_flat(fp, rows, cols, &flat))
        },
    )
}

fn arb_system() -> impl Strategy<Value = (Matrix, Matrix)> {
    (prop_oneof![Just(2u64), Just(3), Just(5)], 1usize..5, 1usize..5).prop_flat_map(
        |(p, rows, cols)| {
            let fp = Fp::new(p).unwrap();
            (
                proptest::collection::vec(0..p, rows * cols),
                proptest::collection::vec(0..p, cols),
            )
                .prop_map(move |(aflat, xflat)| {
                    let a = Matrix::from_flat(fp, rows, cols, &aflat);
                    let x = Matrix::from_flat(fp, cols, 1, &xflat);
                    (a, x)
                })
        },
    )
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in arb_matrix()) {
        let once = m.rref().reduced;
        let twice = once.rref().reduced;
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn rank_nullity(m in arb_matrix()) {
        prop_assert_eq!(m.rank() + m.kernel_basis().cols(), m.cols());
    }

    #[test]
    fn solve_is_sound_on_consistent_systems((a, x) in arb_system()) {
        let b = a.mul(&x);
        let sol = a.solve(&b).expect("constructed system is consistent");
        prop_assert_eq!(a.mul(&sol.particular), b);
        for j in 0..sol.kernel.cols() {
            prop_assert!(a.mul(&sol.kernel.column(j)).is_zero());
        }
    }

    #[test]
    fn row_space_is_preserved_by_rref(m in arb_matrix()) {
        // stacking rref(m) under m must not grow the rank
        let r = m.rref().reduced;
        prop_assert_eq!(m.vstack(&r).rank(), m.rank());
        prop_assert_eq!(r.rank(), m.rank());
    }
}

fn kx2() -> AlgebraRef {
    let rel = vec![RelationTerm { coeff: 1, path: vec!["x".into(), "x".into()] }];
    Algebra::build("kx2", Quiver::new(1, vec![(0, 0, "x")]), &[rel], Fp::new(2).unwrap(), 4)
        .unwrap()
}

fn a2() -> AlgebraRef {
    Algebra::build("a2", Quiver::new(2, vec![(0, 1, "a")]), &[], Fp::new(2).unwrap(), 2).unwrap()
}

fn corpus(alg: &AlgebraRef) -> Vec<Module> {
    let mut out: Vec<Module> = (0..alg.vertex_count()).map(|i| alg.simple(i)).collect();
    out.extend((0..alg.vertex_count()).map(|i| alg.projective(i)));
    out.extend((0..alg.vertex_count()).map(|i| alg.injective(i)));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernel_inclusion_composes_to_zero(seed in 0u64..10_000) {
        for alg in [kx2(), a2()] {
            let mods = corpus(&alg);
            let mut sampler = Sampler::new(seed);
            let m = sampler.pick(&mods).clone();
            let n = sampler.pick(&mods).clone();
            let f = sampler.morphism(&m, &n);
            let (k, incl) = kernel(&f);
            prop_assert!(incl.then(&f).is_zero());
            for v in 0..alg.vertex_count() {
                prop_assert_eq!(f.block(v).rank() + k.dim_at(v), m.dim_at(v));
            }
        }
    }

    #[test]
    fn hom_basis_elements_intertwine(seed in 0u64..10_000) {
        for alg in [kx2(), a2()] {
            let mods = corpus(&alg);
            let mut sampler = Sampler::new(seed);
            let m = sampler.pick(&mods).clone();
            let n = sampler.pick(&mods).clone();
            for f in hom_basis(&m, &n) {
                prop_assert!(f.validate().is_ok());
            }
        }
    }
}
