mod common;

use std::collections::BTreeSet;

use sjplane::classify::{classify, construct, CanonicalLabel::*};
use sjplane::exactmath::{char_poly, rational};
use sjplane::modtheory::*;
use sjplane::{Mat, Rational, Rep};

fn sample(seed: u64, count: usize, max_dim: usize) -> Vec<Rep> {
    let mut rng = common::rng(seed);
    (0..count).map(|_| common::rand_valid_rep(&mut rng, max_dim).0).collect()
}

#[test]
fn matrix_forms_of_the_relations() {
    for rep in sample(1, 100, 5) {
        let n = rep.dim() as u32;
        let (x1, x2, s, t) = (rep.x1(), rep.x2(), rep.s(), rep.t());
        assert!(s.pow(n).is_zero(), "S not nilpotent on\n{rep}");
        assert!(x2.commutator(&t).is_zero());
        assert!(x1.commutator(&s).is_zero());
        assert_eq!(&t * x1, x1 * &(&t + &s));
    }
}

#[test]
fn v0_is_s_and_t_stable() {
    for rep in sample(2, 100, 5) {
        let v0 = v0_basis(&rep);
        assert!(v0.dim() > 0);
        assert!(v0.is_invariant(&rep.s()));
        assert!(v0.is_invariant(&rep.t()));
    }
}

#[test]
fn lemma24_subspaces_are_submodules() {
    for rep in sample(3, 100, 5) {
        let r = lemma24_subspaces(&rep).unwrap();
        assert!(r.w_closed && r.u_closed, "{rep}");
        assert!(is_submodule(&rep, &r.w));
        assert!(is_submodule(&rep, &r.u));
        let (v, sv, tv) = &r.common_eigenvector;
        assert!(r.v0.contains(v));
        let sv_vec: Vec<Rational> = v.iter().map(|x| x * sv).collect();
        let tv_vec: Vec<Rational> = v.iter().map(|x| x * tv).collect();
        assert_eq!(rep.s().mul_vec(v), sv_vec);
        assert_eq!(rep.t().mul_vec(v), tv_vec);
    }
}

#[test]
fn decompose_by_t_properties() {
    for rep in sample(4, 100, 5) {
        let parts = decompose_by_t(&rep).unwrap();
        let total = parts
            .iter()
            .fold(Subspace::zero(rep.dim()), |acc, p| acc.sum(&p.subspace));
        assert_eq!(total.dim(), rep.dim());
        assert_eq!(parts.iter().map(|p| p.subspace.dim()).sum::<usize>(), rep.dim());
        for p in &parts {
            assert!(check_representation(p.rep.x1(), p.rep.x2()).unwrap().is_valid());
            let cp = char_poly(&p.rep.t()).unwrap();
            let split = sjplane::exactmath::rational_eigenvalues(&cp);
            assert_eq!(split.distinct_roots(), vec![p.eigenvalue.clone()]);
        }
    }
}

#[test]
fn indecomposables_have_one_dim_composition_factors() {
    let mut rng = common::rng(6);
    for fam in common::ALL_FAMILIES {
        for _ in 0..5 {
            let label = common::rand_label(&mut rng, fam);
            if label.dim() > 3 {
                continue;
            }
            let rep = construct(&label).unwrap();
            let series = composition_series(&rep).unwrap();
            assert_eq!(series.chain.len(), rep.dim() + 1, "{label}");
            for (k, sub) in series.chain.iter().enumerate() {
                assert_eq!(sub.dim(), k);
                assert!(is_submodule(&rep, sub));
            }
        }
    }
}

#[test]
fn image_algebra_mod_radical_is_commutative() {
    for rep in sample(7, 50, 4) {
        let alg = generated_matrix_algebra(rep.dim(), &[rep.x1().clone(), rep.x2().clone()]);
        alg.check_closure().unwrap();
        let report = algebra_radical(&alg).unwrap();
        assert!(report.nilpotent);
        assert!(report.quotient_commutative, "{rep}");
        let characters: BTreeSet<Rational> =
            composition_series(&rep).unwrap().factors.into_iter().collect();
        assert_eq!(report.quotient_dim, characters.len(), "{rep}");
    }
}

#[test]
fn line_of_v1_is_never_a_summand_when_rank_is_one() {
    let mut rng = common::rng(8);
    let mut checked = 0;
    for _ in 0..200 {
        let (rep, _) = common::rand_valid_rep(&mut rng, 5);
        if rep.x1().rank() != 1 {
            continue;
        }
        let line = Subspace::span(rep.dim(), &rep.x1().columns());
        if !is_submodule(&rep, &line) {
            continue;
        }
        checked += 1;
        assert!(!is_direct_summand(&rep, &line), "{rep}");
    }
    assert!(checked >= 20, "only {checked} cases");
}

#[test]
fn direct_summand_found_for_split_sums() {
    // k_2 sits as a summand of Dim2U(1,0) + k_2
    let a = construct(&Dim2U(rational(1), rational(0))).unwrap();
    let b = construct(&JordanChain(rational(2), 1)).unwrap();
    let rep = Rep::direct_sum(&[&a, &b]);
    let e3 = vec![rational(0), rational(0), rational(1)];
    assert!(is_direct_summand(&rep, &Subspace::span(3, &[e3])));
    let e1 = vec![rational(1), rational(0), rational(0)];
    assert!(!is_direct_summand(&rep, &Subspace::span(3, &[e1])));
}

#[test]
fn isomorphism_is_reflexive_and_symmetric() {
    let mut rng = common::rng(9);
    for _ in 0..40 {
        let (a, _) = common::rand_valid_rep(&mut rng, 4);
        let p = common::rand_invertible(&mut rng, a.dim());
        let b = a.conjugate(&p).unwrap();
        assert!(is_isomorphic(&a, &a).unwrap());
        assert!(is_isomorphic(&a, &b).unwrap());
        assert!(is_isomorphic(&b, &a).unwrap());
        let (c, _) = common::rand_valid_rep(&mut rng, 4);
        assert_eq!(is_isomorphic(&a, &c).unwrap(), is_isomorphic(&c, &a).unwrap());
    }
}

#[test]
fn isomorphism_agrees_with_label_multisets() {
    let mut rng = common::rng(10);
    let reps: Vec<Rep> = (0..30).map(|_| common::rand_valid_rep(&mut rng, 3).0).collect();
    for a in &reps {
        for b in &reps {
            if a.dim() != b.dim() {
                continue;
            }
            let la: Vec<String> = classify(a).unwrap().labels().iter().map(|l| l.to_string()).collect();
            let lb: Vec<String> = classify(b).unwrap().labels().iter().map(|l| l.to_string()).collect();
            assert_eq!(is_isomorphic(a, b).unwrap(), la == lb, "{la:?} vs {lb:?}");
        }
    }
}

#[test]
fn full_decompose_dimensions_are_conjugation_invariant() {
    let mut rng = common::rng(12);
    for _ in 0..40 {
        let (rep, labels) = common::rand_valid_rep(&mut rng, 5);
        let mut dims: Vec<usize> = full_decompose(&rep).unwrap().iter().map(|s| s.rep.dim()).collect();
        dims.sort();
        let mut expected: Vec<usize> = labels.iter().map(|l| l.dim()).collect();
        expected.sort();
        assert_eq!(dims, expected, "{labels:?}");
        for s in full_decompose(&rep).unwrap() {
            assert!(is_indecomposable(&s.rep).unwrap());
        }
    }
}

#[test]
fn hom_space_dimension_matches_oracle_on_jordan_blocks() {
    // Hom(J_m(l), J_n(l)) for X1 = 0 has dimension min(m, n)
    for m in 1..=4 {
        for n in 1..=4 {
            let a = Rep::from_x2(Mat::jordan_block(rational(3), m)).unwrap();
            let b = Rep::from_x2(Mat::jordan_block(rational(3), n)).unwrap();
            assert_eq!(hom_space(&a, &b).dim(), m.min(n));
            let c = Rep::from_x2(Mat::jordan_block(rational(4), n)).unwrap();
            assert_eq!(hom_space(&a, &c).dim(), 0);
        }
    }
}
