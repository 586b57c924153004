//! Rewriting against a degree-by-degree quotient of the tensor algebra.

mod common;

use fkverma::dgmod::decompose;
use fkverma::group::s3;
use fkverma::nichols::{AlgElem, Letter, Nichols, Pbw};
use fkverma::Cyc;

use common::oracle::{degree_three_map, ideal, tensor_vector, word_index, words};
use common::{g, weights};

#[test]
fn quotient_dimensions_match_the_pbw_basis() {
    let dims: Vec<usize> = (0..=5)
        .map(|n| 3usize.pow(n as u32) - ideal(n).dim())
        .collect();
    assert_eq!(dims, [1, 3, 4, 3, 1, 0]);
    assert_eq!(Nichols::fk3().graded_dims(), [1, 3, 4, 3, 1]);
}

#[test]
fn normal_form_agrees_with_the_quotient_up_to_length_five() {
    let n = Nichols::fk3();
    for len in 0..=5 {
        let i = ideal(len);
        for w in words(len) {
            let nf = n.word(&w);
            assert!(
                i.contains(&tensor_vector(len, &w, &nf)),
                "{w:?} -> {}",
                nf.render('x')
            );
            if len == 5 {
                assert!(nf.is_zero());
            }
        }
    }
}

#[test]
fn pbw_words_stay_independent_modulo_the_ideal() {
    for len in 0..=4 {
        let mut s = ideal(len);
        let before = s.dim();
        for p in Pbw::all().filter(|p| p.len() == len) {
            let mut v = vec![Cyc::zero(); 3usize.pow(len as u32)];
            v[word_index(&p.letters())] = Cyc::one();
            s.insert(v);
        }
        assert_eq!(s.dim(), 3usize.pow(len as u32), "degree {len}: {before}");
    }
}

#[test]
fn sample_products() {
    use Letter::*;
    let n = Nichols::fk3();
    assert!(n.word(&[L12, L12]).is_zero());
    let mut want = AlgElem::zero();
    want.add_term(Pbw::from_letters(&[L12, L13]).unwrap(), Cyc::int(-1));
    want.add_term(Pbw::from_letters(&[L13, L23]).unwrap(), Cyc::int(-1));
    assert_eq!(n.word(&[L23, L12]), want);
    assert!(n.mul(&n.word(&[L13]), &n.word(&[L13, L12])).is_zero());
    assert_eq!(
        n.mul(&n.word(&[L12, L13, L12]), &n.word(&[L23])),
        AlgElem::monomial(Pbw::TOP, Cyc::one())
    );
    assert_eq!(
        n.mul(&n.word(&[L12, L13, L23]), &n.word(&[L13])),
        AlgElem::monomial(Pbw::TOP, Cyc::int(-1))
    );
}

#[test]
fn group_action_samples() {
    use Letter::*;
    let n = Nichols::fk3();
    let top = AlgElem::monomial(Pbw::TOP, Cyc::one());
    assert_eq!(n.act(s3::SIGMA, &top), top);
    let w = n.word(&[L13, L12, L23]);
    let mut neg = AlgElem::zero();
    neg.add_scaled(&w, &Cyc::int(-1));
    assert_eq!(n.act(s3::SIGMA, &w), neg);
}

#[test]
fn graded_pieces_decompose() {
    let n = Nichols::fk3();
    let expected = [
        weights(&["e+"]),
        weights(&["sigma-"]),
        weights(&["tau1", "tau2"]),
        weights(&["sigma-"]),
        weights(&["e+"]),
    ];
    for prefix in ['x', 'y'] {
        for (deg, want) in expected.iter().enumerate() {
            let piece = n.graded_module(deg, prefix);
            let mut got: Vec<_> = decompose(g(), &piece)
                .into_iter()
                .map(|s| s.weight)
                .collect();
            got.sort();
            assert_eq!(&got, want, "{prefix} degree {deg}");
        }
        assert_eq!(n.full_module(prefix).dim(), 12);
    }
}

#[test]
fn degree_three_assignment_is_a_morphism() {
    let (simple, piece, map) = degree_three_map();
    assert!(map.is_morphism(g(), &simple, &piece));
    assert_eq!(map.matrix.rank(), 3);
}
