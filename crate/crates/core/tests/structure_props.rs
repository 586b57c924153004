//! Invariants of closures, socles, heads and composition factors.

mod common;

use fkverma::linalg::{add, unit_vector, Subspace};
use fkverma::nichols::Letter::{L12, L13, L23};
use fkverma::structure::*;
use fkverma::verma::VermaModule;
use fkverma::Cyc;
use proptest::prelude::*;

use common::{all_vermas, g, verma, weights};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn closure_is_monotone_and_idempotent(
        which in 0usize..8,
        small in proptest::collection::vec(0usize..400, 1..3),
        extra in proptest::collection::vec(0usize..400, 0..3),
    ) {
        let m = VermaModule::build(g().weights()[which]);
        let pick = |ix: &[usize]| -> Vec<_> {
            ix.iter().map(|i| unit_vector(m.dim(), i % m.dim())).collect()
        };
        let a = pick(&small);
        let mut b = a.clone();
        b.extend(pick(&extra));
        let ca = closure(&m, &a);
        let cb = closure(&m, &b);
        prop_assert!(Subspace::spanned_by(m.dim(), a.clone()).is_subspace_of(&ca));
        prop_assert!(ca.is_subspace_of(&cb));
        prop_assert_eq!(closure_of(&m, &ca), ca.clone());
        prop_assert!(is_submodule(&m, &ca));
    }
}

#[test]
fn maximal_submodules_are_homogeneous_and_complete_the_head() {
    let dims = simple_dims();
    for m in all_vermas() {
        let x = maximal_submodule(&m);
        assert!(is_homogeneous(&m, &x));
        assert!(is_submodule(&m, &x));
        let (head_dim, _) = head(&m);
        assert_eq!(head_dim + x.dim(), m.dim());
        assert_eq!(head_dim, dims[&m.weight()]);
        let factor_sum: usize = composition_factors(&m).iter().map(|w| dims[w]).sum();
        assert_eq!(factor_sum, m.dim());
        assert_eq!(is_simple_verma(&m), x.is_zero());
    }
}

#[test]
fn socles_are_simple_with_the_verma_weight_at_the_bottom() {
    for m in all_vermas() {
        assert!(socle_is_simple(&m), "{}", g().weight_id(m.weight()));
        let s = socle(&m);
        let zero = Subspace::new(m.dim());
        assert_eq!(lowest_weights(&m, &s, &zero).unwrap(), vec![m.weight()]);
    }
}

#[test]
fn head_and_socle_correspondences() {
    for id in ["e+", "e-", "sigma+", "sigma-", "tau1", "tau2"] {
        let m = verma(id);
        assert!(head_socle_match(&m, &m), "{id}");
    }
    let (t, e) = (verma("tau0"), verma("erho"));
    assert!(head_socle_match(&t, &e));
    assert!(head_socle_match(&e, &t));
}

#[test]
fn mixed_pencil_member_is_not_homogeneous() {
    let m = verma("sigma-");
    let t = add(
        &named_generator(&m, "me1").unwrap(),
        &named_generator(&m, "me3").unwrap(),
    );
    let s = closure(&m, std::slice::from_ref(&t));
    assert!(!is_homogeneous(&m, &s));
    let outside = (0..=4).any(|n| !s.contains(&m.graded_part(&t, n)));
    assert!(outside);
    let generic = named_generator(&m, "t2,-1").unwrap();
    assert_eq!(closure(&m, &[generic]).dim(), 11);
}

#[test]
fn literal_generators() {
    let m = verma("sigma-");
    let z = Cyc::zeta;
    let q = m.vector(&[(&[L12, L23], 1, Cyc::one()), (&[L12, L13], 2, Cyc::int(-1))]);
    assert_eq!(named_generator(&m, "q").unwrap(), q);
    let o0 = m.vector(&[
        (&[L13], 0, Cyc::one()),
        (&[L12], 1, Cyc::one()),
        (&[L23], 2, Cyc::one()),
    ]);
    assert_eq!(named_generator(&m, "o0").unwrap(), o0);
    let t = verma("tau0");
    let z2 = &z() * &z();
    let gv = t.vector(&[
        (&[L13, L23], 0, Cyc::one()),
        (&[L12, L13], 0, -z2.clone()),
        (&[L13, L12], 1, Cyc::one()),
        (&[L12, L23], 1, -z2),
    ]);
    assert_eq!(named_generator(&t, "g").unwrap(), gv);
}

#[test]
fn closure_examples() {
    let m = verma("sigma-");
    let top = m.soc_generators()[0].clone();
    assert_eq!(closure(&m, &[top]).dim(), 10);
    assert_eq!(closure(&m, &[named_generator(&m, "v").unwrap()]).dim(), 17);
    let e = verma("e+");
    assert_eq!(closure(&e, &[unit_vector(e.dim(), 0)]).dim(), 12);
    assert_eq!(socle(&verma("e-")).dim(), 12);
}

#[test]
fn weight_closure_examples() {
    let m = verma("sigma-");
    let o0 = m
        .dg_module()
        .span_of(g(), &[named_generator(&m, "o0").unwrap()]);
    let s = weight_closure(&m, &o0, Direction::Highest).unwrap();
    assert_eq!(s.dim(), 17);
    assert_eq!(s, closure(&m, &[named_generator(&m, "u").unwrap()]));
    let soc = Subspace::spanned_by(m.dim(), m.soc_generators());
    assert_eq!(
        weight_closure(&m, &soc, Direction::Lowest).unwrap().dim(),
        10
    );
}

#[test]
fn composition_factors_of_all_vermas() {
    let expected = [
        (
            "sigma-",
            vec!["sigma-", "tau0", "erho", "e+", "e+", "sigma-"],
        ),
        ("e+", vec!["e+", "sigma-", "e+"]),
        ("tau0", vec!["tau0", "sigma-", "erho"]),
        ("erho", vec!["erho", "sigma-", "tau0"]),
        ("e-", vec!["e-"]),
        ("sigma+", vec!["sigma+"]),
        ("tau1", vec!["tau1"]),
        ("tau2", vec!["tau2"]),
    ];
    for (id, f) in expected {
        assert_eq!(composition_factors(&verma(id)), weights(&f), "{id}");
    }
}
