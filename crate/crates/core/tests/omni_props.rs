mod common;

use common::{brute_coboundary, brute_dims};
use omnilie::catalog;
use omnilie::cochain::MultiIndices;
use omnilie::omni::{
    compare_adjoint, compare_graph, compare_trivial, graph_check, graph_element, induced_bracket,
    induced_lr, omni_bracket, omni_cohomology_dims, trivial_omnireps, AdjointCorrespondence,
    OmniComplex, OmniElement, OmniRep,
};
use omnilie::random;
use omnilie::rational::int;
use omnilie::rep::unflatten;
use omnilie::{coboundary, Matrix, Representation};
use proptest::prelude::*;

fn element(seed: u64, d: usize) -> OmniElement {
    let mut rng = random::rng(seed);
    OmniElement::new(random::matrix(&mut rng, d, d), random::vector(&mut rng, d)).unwrap()
}

/// Closure of the graph under the omni bracket, checked on basis pairs without the embedding-tensor formula.
fn graph_closed(phi: &[Matrix]) -> bool {
    let d = phi.len();
    (0..d).all(|a| {
        (0..d).all(|b| {
            let x = graph_element(phi, &common::unit(d, a));
            let y = graph_element(phi, &common::unit(d, b));
            let z = omni_bracket(&x, &y).unwrap();
            z == graph_element(phi, &z.u)
        })
    })
}

proptest! {
    #[test]
    fn omni_bracket_is_leibniz(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>(), d in 1usize..=3) {
        let (x, y, z) = (element(s1, d), element(s2, d), element(s3, d));
        let b = |p: &OmniElement, q: &OmniElement| omni_bracket(p, q).unwrap();
        let lhs = b(&x, &b(&y, &z));
        let rhs = b(&b(&x, &y), &z).add(&b(&y, &b(&x, &z)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn graph_check_is_closure(seed in any::<u64>(), d in 1usize..=3, tensor in any::<bool>()) {
        let mut rng = random::rng(seed);
        let phi = if tensor { random::embedding_tensor(&mut rng, d) } else { random::phi_map(&mut rng, d) };
        let ok = graph_check(&phi).is_ok();
        prop_assert_eq!(ok, graph_closed(&phi));
        if ok {
            prop_assert!(induced_bracket(&phi).unwrap().is_leibniz());
        }
    }
}

#[test]
fn graph_elements_stay_in_graph() {
    let mut rng = random::rng(31);
    for d in 1..=3 {
        let phi = random::embedding_tensor(&mut rng, d);
        for _ in 0..10 {
            let u = random::vector(&mut rng, d);
            let v = random::vector(&mut rng, d);
            let z = omni_bracket(&graph_element(&phi, &u), &graph_element(&phi, &v)).unwrap();
            assert_eq!(z, graph_element(&phi, &z.u));
        }
    }
}

#[test]
fn usual_reps_give_omnireps() {
    for (name, rep) in catalog::reps() {
        let rho = OmniRep::from_usual_rep(&rep).unwrap();
        assert_eq!(rho.check().unwrap(), Ok(()), "{name}");
    }
}

#[test]
fn right_action_is_a_dual_tensor_cocycle() {
    for (name, rep) in catalog::reps() {
        let dual = rep.dual_tensor_rep().unwrap();
        let r = rep.right_action_cochain();
        assert!(coboundary(&dual, &r).unwrap().is_zero(), "{name}");
        let d = rep.dim_v();
        let mut rng = random::rng(3);
        for i in 0..rep.algebra().dim() {
            let a = random::matrix(&mut rng, d, d);
            let flat: Vec<_> = a.as_slice().to_vec();
            let acted = unflatten(d, &dual.left()[i].mul_vec(&flat));
            assert_eq!(acted, rep.left()[i].commutator(&a), "{name}");
        }
    }
}

#[test]
fn trivial_omnirep_bases() {
    assert_eq!(trivial_omnireps(&catalog::algebra("abelian2").unwrap()).len(), 2);
    assert_eq!(
        trivial_omnireps(&catalog::algebra("L2").unwrap()),
        vec![vec![int(0), int(1)]]
    );
    assert!(trivial_omnireps(&catalog::algebra("sl2").unwrap()).is_empty());
}

fn omnireps() -> Vec<(String, OmniRep)> {
    let mut out = Vec::new();
    for (name, alg) in catalog::algebras() {
        out.push((format!("{name}/adjoint"), OmniRep::adjoint(alg.clone())));
        for (i, xi) in trivial_omnireps(&alg).iter().enumerate() {
            out.push((format!("{name}/trivial:{}", i + 1), OmniRep::trivial(alg.clone(), xi).unwrap()));
        }
    }
    for g in random::graph_instances(5, 2, 10) {
        out.push((format!("{}/graph", g.algebra_name), g.rho));
    }
    out
}

#[test]
fn omni_coboundary_squares_to_zero() {
    let mut rng = random::rng(8);
    for (name, rho) in omnireps() {
        let cx = OmniComplex::new(rho).unwrap();
        let n = cx.rho().algebra().dim();
        for k in 0..=2 {
            let f = random::cochain(&mut rng, k, n, cx.image().dim());
            let dd = cx.coboundary(&cx.coboundary(&f).unwrap()).unwrap();
            assert!(dd.is_zero(), "{name}, degree {k}");
        }
    }
}

#[test]
fn literal_delta_matches_induced_representation() {
    let mut rng = random::rng(12);
    for (name, rho) in omnireps() {
        let cx = OmniComplex::new(rho).unwrap();
        let rep = cx.induced_rep().unwrap();
        assert!(rep.is_valid(), "{name}");
        let n = cx.rho().algebra().dim();
        for k in 0..=2 {
            let f = random::cochain(&mut rng, k, n, cx.image().dim());
            assert_eq!(cx.coboundary(&f).unwrap(), brute_coboundary(&rep, &f), "{name}, degree {k}");
        }
    }
}

#[test]
fn omni_dims_match_oracle() {
    for (name, rho) in omnireps() {
        let cx = OmniComplex::new(rho.clone()).unwrap();
        let top = if rho.algebra().dim() <= 2 { 3 } else { 2 };
        let rep = cx.induced_rep().unwrap();
        assert_eq!(omni_cohomology_dims(&rho, top).unwrap(), brute_dims(&rep, top), "{name}");
    }
}

#[test]
fn adjoint_correspondence_intertwines() {
    let mut rng = random::rng(50);
    for (name, alg) in catalog::algebras() {
        let corr = AdjointCorrespondence::new(alg.clone()).unwrap();
        let ad = Representation::adjoint(alg.clone());
        let n = alg.dim();
        for k in 0..=2 {
            let frak = random::cochain(&mut rng, k, n, n);
            let f = corr.to_omni(&frak).unwrap();
            assert_eq!(corr.to_frak(&f).unwrap(), frak, "{name}");
            let lhs = corr.complex().coboundary(&f).unwrap();
            let rhs = corr.to_omni(&coboundary(&ad, &frak).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "{name}, degree {k}");
            for idx in MultiIndices::new(n, k) {
                let v = corr.complex().value(&f, &idx);
                let expect = frak.value(&idx);
                assert_eq!(v.u, expect.to_vec());
                let mut a = Matrix::zeros(n, n);
                for (i, c) in expect.iter().enumerate() {
                    a = a.add(&alg.left_mult(i).scale(c));
                }
                assert_eq!(v.a, a);
            }
        }
    }
}

#[test]
fn comparisons_on_catalog() {
    for (name, alg) in catalog::algebras() {
        assert!(compare_adjoint(&alg, 3).unwrap().agrees(), "{name}");
        let trivial = compare_trivial(&alg, 3).unwrap();
        let expect_agree = name != "sl2";
        assert_eq!(trivial.iter().all(|c| c.agrees()), expect_agree, "{name}");
    }
    let sl2 = compare_trivial(&catalog::algebra("sl2").unwrap(), 3).unwrap();
    assert_eq!(sl2.len(), 1);
    assert_eq!(sl2[0].lp, vec![1, 0, 0, 0]);
    assert_eq!(sl2[0].omni, vec![0, 0, 0, 0]);
}

#[test]
fn graph_comparisons_agree() {
    let found = random::graph_instances(0, 2, 20);
    assert!(found.iter().any(|g| g.phi.iter().any(|m| !m.is_zero())));
    for g in found {
        let rep = induced_lr(&g.rho, &g.phi).unwrap();
        assert!(rep.is_valid());
        let c = compare_graph(&g.rho, &g.phi, 3).unwrap();
        assert!(c.agrees(), "{}: {:?}", g.algebra_name, c);
    }
}

#[test]
fn zero_phi_graph_case() {
    let alg = catalog::algebra("L2").unwrap();
    let rho = OmniRep::trivial(alg, &[int(0), int(1)]).unwrap();
    let c = compare_graph(&rho, &[Matrix::zeros(1, 1)], 3).unwrap();
    assert!(c.agrees());
    assert_eq!(c.lp, vec![1, 1, 1, 1]);
}
