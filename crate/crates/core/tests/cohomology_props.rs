mod common;

use common::{brute_coboundary, brute_coboundary_matrix, brute_dims};
use omnilie::catalog;
use omnilie::cohomology::{coboundary_matrix, coboundary_matrix_dense};
use omnilie::random;
use omnilie::{coboundary, cohomology_dims, Representation};
use proptest::prelude::*;

fn reps() -> Vec<(String, Representation)> {
    let mut out = Vec::new();
    for (name, alg) in catalog::algebras() {
        out.push((format!("{name}/trivial"), Representation::trivial(alg.clone(), 1)));
        let ad = Representation::adjoint(alg);
        out.push((format!("{name}/dual-tensor"), ad.dual_tensor_rep().unwrap()));
        out.push((format!("{name}/adjoint"), ad));
    }
    for (name, rep) in catalog::reps() {
        out.push((name, rep));
    }
    out
}

#[test]
fn coboundary_squares_to_zero() {
    for (name, rep) in reps() {
        let n = rep.algebra().dim();
        let mut rng = random::rng(11);
        for k in 0..=2 {
            let c = random::cochain(&mut rng, k, n, rep.dim_v());
            let dd = coboundary(&rep, &coboundary(&rep, &c).unwrap()).unwrap();
            assert!(dd.is_zero(), "{name}, degree {k}");
        }
    }
}

#[test]
fn coboundary_matrices_compose_to_zero() {
    for (name, rep) in reps() {
        for k in 0..=2 {
            let prod = coboundary_matrix(&rep, k + 1).mul(&coboundary_matrix(&rep, k));
            assert!(prod.is_zero(), "{name}, degree {k}");
        }
    }
}

#[test]
fn dense_matrix_matches_brute_force() {
    for (name, rep) in reps().into_iter().filter(|(_, r)| r.dim_v() <= 3) {
        for k in 0..=2 {
            assert_eq!(
                coboundary_matrix_dense(&rep, k),
                brute_coboundary_matrix(&rep, k),
                "{name}, degree {k}"
            );
        }
    }
}

#[test]
fn dims_match_brute_force() {
    for (name, rep) in reps().into_iter().filter(|(_, r)| r.dim_v() <= 3) {
        let top = if rep.algebra().dim() <= 2 { 3 } else { 2 };
        assert_eq!(cohomology_dims(&rep, top).unwrap(), brute_dims(&rep, top), "{name}");
    }
}

#[test]
fn l2_trivial_goldens() {
    let rep = Representation::trivial(catalog::algebra("L2").unwrap(), 1);
    let dims = cohomology_dims(&rep, 3).unwrap();
    // H^0 = 1 since the differential on constants vanishes; H^1 = (g/[g,g])^* = span{e2*}
    assert_eq!(dims[..2], [1, 1]);
    let oracle = brute_dims(&rep, 3);
    assert_eq!(dims, oracle);
    assert_eq!(dims[2], 1);
}

#[test]
fn lie_algebra_first_cohomology_is_abelianization_dual() {
    for (name, expect) in [("lie2", 1), ("heis3", 2), ("sl2", 0), ("abelian3", 3)] {
        let alg = catalog::algebra(name).unwrap();
        let dims = cohomology_dims(&Representation::trivial(alg.clone(), 1), 1).unwrap();
        assert_eq!(dims, vec![1, expect], "{name}");
        assert_eq!(alg.dim() - alg.derived_subalgebra().len(), expect);
    }
}

#[test]
fn sl2_trivial_higher_degrees_vanish() {
    let rep = Representation::trivial(catalog::algebra("sl2").unwrap(), 1);
    assert_eq!(cohomology_dims(&rep, 3).unwrap(), vec![1, 0, 0, 0]);
}

#[test]
fn parallel_and_sequential_agree() {
    let rep = Representation::adjoint(catalog::algebra("nf3").unwrap());
    let all = cohomology_dims(&rep, 3).unwrap();
    for k in 0..=3 {
        assert_eq!(cohomology_dims(&rep, k).unwrap()[..], all[..=k]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn literal_coboundary_matches_oracle(seed in any::<u64>(), pick in 0usize..64, k in 0usize..=2) {
        let all = reps();
        let (name, rep) = &all[pick % all.len()];
        prop_assume!(rep.dim_v() <= 4);
        let c = random::cochain(&mut random::rng(seed), k, rep.algebra().dim(), rep.dim_v());
        prop_assert_eq!(coboundary(rep, &c).unwrap(), brute_coboundary(rep, &c), "{}", name);
    }

    #[test]
    fn coboundary_squares_to_zero_in_random_bases(seed in any::<u64>(), dim in 1usize..=3, k in 0usize..=2) {
        let mut rng = random::rng(seed);
        let alg = random::leibniz_algebra(&mut rng, dim);
        let rep = Representation::adjoint(alg);
        let c = random::cochain(&mut rng, k, dim, dim);
        let dd = coboundary(&rep, &coboundary(&rep, &c).unwrap()).unwrap();
        prop_assert!(dd.is_zero());
    }
}
