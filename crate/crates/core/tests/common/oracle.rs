//! Independent oracles shared by the integration suites.

use fkverma::dgmod::{make_simple, DGMap, DGModule};
use fkverma::group::s3;
use fkverma::linalg::{unit_vector, Mat, Subspace, Vector};
use fkverma::nichols::{fk3_relations, AlgElem, Letter, Nichols, Pbw};
use fkverma::verma::{Generator, VermaModule};
use fkverma::Cyc;

use super::{g, weights};

pub type Word = Vec<Letter>;

pub fn words(n: usize) -> Vec<Word> {
    (0..n).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|w| {
                Letter::ALL.iter().map(move |&a| {
                    let mut nw = w.clone();
                    nw.push(a);
                    nw
                })
            })
            .collect()
    })
}

pub fn word_index(w: &[Letter]) -> usize {
    w.iter().fold(0, |acc, l| {
        3 * acc + Letter::ALL.iter().position(|m| m == l).unwrap()
    })
}

/// Span of `u r v` in degree `n` for every relation `r`.
pub fn ideal(n: usize) -> Subspace {
    let dim = 3usize.pow(n as u32);
    let mut s = Subspace::new(dim);
    if n < 2 {
        return s;
    }
    for rel in fk3_relations() {
        for left in 0..=n - 2 {
            for u in words(left) {
                for v in words(n - 2 - left) {
                    let mut vec = vec![Cyc::zero(); dim];
                    for (w, c) in &rel {
                        let mut full = u.clone();
                        full.extend(w);
                        full.extend(&v);
                        vec[word_index(&full)] += c.clone();
                    }
                    s.insert(vec);
                }
            }
        }
    }
    s
}

pub fn tensor_vector(n: usize, word: &[Letter], nf: &AlgElem) -> Vector {
    let mut v = vec![Cyc::zero(); 3usize.pow(n as u32)];
    v[word_index(word)] += Cyc::one();
    for (p, c) in nf.terms() {
        v[word_index(&p.letters())] -= c.clone();
    }
    v
}

/// The assignment `m12 -> x13 x12 x23`, `m23 -> -x12 x13 x12` from the
/// simple module of weight `sigma-` to the degree-3 piece, extended along the
/// group action.
pub fn degree_three_map() -> (DGModule, DGModule, DGMap) {
    use Letter::*;
    let n = Nichols::fk3();
    let simple = make_simple(g(), weights(&["sigma-"])[0]);
    let piece = n.graded_module(3, 'x');
    let basis: Vec<Pbw> = Pbw::all().filter(|p| p.len() == 3).collect();
    let coords = |a: &AlgElem| -> Vector { basis.iter().map(|&p| a.coeff(p)).collect() };
    let m12 = coords(&n.word(&[L13, L12, L23]));
    let m23: Vector = coords(&n.word(&[L12, L13, L12]))
        .iter()
        .map(|c| -c.clone())
        .collect();
    // m13 = t . m12 / s where t . m12 = s m13 in the simple module
    let t = s3::C132;
    let moved = simple.act(t, &[Cyc::one(), Cyc::zero(), Cyc::zero()]);
    let s = moved[2].clone();
    assert!(!s.is_zero(), "(132) moves m12 to m13");
    let inv = s.inv().unwrap();
    let m13: Vector = piece.act(t, &m12).iter().map(|c| c * &inv).collect();
    let map = DGMap {
        matrix: Mat::from_columns(3, &[m12, m23, m13]),
    };
    (simple, piece, map)
}

/// Degree-one letters in the basis order of the degree-one piece.
pub fn letters() -> Vec<Letter> {
    Pbw::all()
        .filter(|p| p.len() == 1)
        .map(|p| p.letters()[0])
        .collect()
}

/// The map `V (x) M -> M`, `x (x) m -> x.m` (or the same with `y`).
pub fn action_map(m: &VermaModule, prefix: char) -> DGMap {
    let k = m.dim();
    let cols: Vec<_> = letters()
        .into_iter()
        .flat_map(|l| {
            let op = match prefix {
                'x' => Generator::X(l),
                _ => Generator::Y(l),
            };
            (0..k).map(move |j| m.apply(op, &unit_vector(k, j)))
        })
        .collect();
    DGMap {
        matrix: Mat::from_columns(k, &cols),
    }
}
