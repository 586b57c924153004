//! Verma modules `D (x)_{D>=0} M(w)`, realised on `B(V) (x) M(w)`.

mod appendix;

pub use appendix::{
    appendix_tables, listed_y12, verify_appendix, AppendixLine, AppendixReport, AppendixResult,
    AppendixTable,
};

use std::fmt;

use serde::Serialize;

use crate::dgmod::{make_simple, tensor, DGModule};
use crate::double::QuantumDouble;
use crate::group::{Elem, GroupData, Weight};
use crate::linalg::{axpy, is_zero, sub, unit_vector, zero_vector, Mat, Subspace, Vector};
use crate::nichols::{Letter, Nichols, Pbw};
use crate::scalar::Cyc;
use crate::status::Status;

/// Top degree of `FK3`.
pub const N_TOP: usize = 4;

/// The letters of `y_top`, mirroring those of `x_top`.
pub const Y_TOP: [Letter; 4] = [Letter::L12, Letter::L13, Letter::L12, Letter::L23];

/// A generator of the double acting on a module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X(Letter),
    Y(Letter),
    Group(Elem),
    Delta(Elem),
}

impl Generator {
    /// The 18 operators used for closures: `x`'s, `y`'s, all of `G` and all `d_h`.
    pub fn all() -> Vec<Generator> {
        let g = GroupData::s3();
        Letter::ALL
            .iter()
            .map(|&l| Generator::X(l))
            .chain(Letter::ALL.iter().map(|&l| Generator::Y(l)))
            .chain(g.elements().map(Generator::Group))
            .chain(g.elements().map(Generator::Delta))
            .collect()
    }

    /// Shift of the `Z`-degree.
    pub fn z_shift(self) -> i64 {
        match self {
            Generator::X(_) => -1,
            Generator::Y(_) => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = GroupData::s3();
        match self {
            Generator::X(l) => write!(f, "x{}", l.subscript()),
            Generator::Y(l) => write!(f, "y{}", l.subscript()),
            Generator::Group(e) => write!(f, "{}", g.name(*e)),
            Generator::Delta(e) => write!(f, "d[{}]", g.name(*e)),
        }
    }
}

fn letter_pos(l: Letter) -> usize {
    Letter::ALL.iter().position(|&m| m == l).expect("letter")
}

/// A Verma module with cached generator actions. Basis index of `p (x) m_j` is
/// `p.index() * d + j`.
#[derive(Clone, Debug)]
pub struct VermaModule {
    weight: Weight,
    simple: DGModule,
    dg: DGModule,
    x_ops: Vec<Mat>,
    y_ops: Vec<Mat>,
}

impl VermaModule {
    pub fn build(w: Weight) -> VermaModule {
        let g = GroupData::s3();
        let n = Nichols::fk3();
        let simple = make_simple(g, w);
        let dg = tensor(g, &n.full_module('x'), &simple);
        let d = simple.dim();
        let dim = dg.dim();
        let x_ops: Vec<Mat> = Letter::ALL
            .iter()
            .map(|&a| {
                let left = Pbw::from_letters(&[a]).expect("letter");
                let cols: Vec<Vector> = (0..dim)
                    .map(|i| {
                        let (p, j) = (Pbw::from_index(i / d), i % d);
                        let mut v = zero_vector(dim);
                        for (q, c) in n.mul_pbw(left, p).terms() {
                            v[q.index() * d + j] = c.clone();
                        }
                        v
                    })
                    .collect();
                Mat::from_columns(dim, &cols)
            })
            .collect();
        let y_ops = y_by_recursion(g, &dg, &x_ops, d);
        VermaModule {
            weight: w,
            simple,
            dg,
            x_ops,
            y_ops,
        }
    }

    pub fn weight(&self) -> Weight {
        self.weight
    }

    pub fn dim(&self) -> usize {
        self.dg.dim()
    }

    pub fn simple(&self) -> &DGModule {
        &self.simple
    }

    /// The module restricted to `D(G)`, that is `B(V) (x) M(w)`.
    pub fn dg_module(&self) -> &DGModule {
        &self.dg
    }

    pub fn index(&self, p: Pbw, j: usize) -> usize {
        p.index() * self.simple.dim() + j
    }

    pub fn basis_vector(&self, p: Pbw, j: usize) -> Vector {
        unit_vector(self.dim(), self.index(p, j))
    }

    pub fn split_index(&self, i: usize) -> (Pbw, usize) {
        let d = self.simple.dim();
        (Pbw::from_index(i / d), i % d)
    }

    /// `Z`-degree of a basis vector: minus the length of its monomial.
    pub fn z_degree(&self, i: usize) -> i64 {
        -(self.split_index(i).0.len() as i64)
    }

    /// Dimensions of the pieces of degree `0, -1, ..., -4`.
    pub fn graded_dims(&self) -> Vec<usize> {
        (0..=N_TOP)
            .map(|n| {
                (0..self.dim())
                    .filter(|&i| self.z_degree(i) == -(n as i64))
                    .count()
            })
            .collect()
    }

    /// The piece of degree `-n`.
    pub fn graded_piece(&self, n: usize) -> Subspace {
        Subspace::spanned_by(
            self.dim(),
            (0..self.dim())
                .filter(|&i| self.z_degree(i) == -(n as i64))
                .map(|i| unit_vector(self.dim(), i)),
        )
    }

    /// Degree-`-n` component of `v`.
    pub fn graded_part(&self, v: &[Cyc], n: usize) -> Vector {
        v.iter()
            .enumerate()
            .map(|(i, c)| {
                if self.z_degree(i) == -(n as i64) {
                    c.clone()
                } else {
                    Cyc::zero()
                }
            })
            .collect()
    }

    /// `B^4(V) (x) M(w)`.
    pub fn soc_generators(&self) -> Vec<Vector> {
        (0..self.simple.dim())
            .map(|j| self.basis_vector(Pbw::TOP, j))
            .collect()
    }

    pub fn x_op(&self, l: Letter) -> &Mat {
        &self.x_ops[letter_pos(l)]
    }

    pub fn y_op(&self, l: Letter) -> &Mat {
        &self.y_ops[letter_pos(l)]
    }

    pub fn op(&self, gen: Generator) -> Mat {
        match gen {
            Generator::X(l) => self.x_op(l).clone(),
            Generator::Y(l) => self.y_op(l).clone(),
            Generator::Group(e) => self.dg.action(e).clone(),
            Generator::Delta(e) => self.dg.delta(e),
        }
    }

    pub fn apply(&self, gen: Generator, v: &[Cyc]) -> Vector {
        match gen {
            Generator::X(l) => self.x_op(l).apply(v),
            Generator::Y(l) => self.y_op(l).apply(v),
            Generator::Group(e) => self.dg.act(e, v),
            Generator::Delta(e) => self.dg.project(e, v),
        }
    }

    /// Applies the letters of a word from right to left, as `w_1 (w_2 (... v))`.
    pub fn apply_y_word(&self, word: &[Letter], v: &[Cyc]) -> Vector {
        word.iter()
            .rev()
            .fold(v.to_vec(), |acc, &l| self.y_op(l).apply(&acc))
    }

    /// `y_l v` computed independently by straightening `y_l x` in the double.
    pub fn y_via_double(&self, l: Letter, v: &[Cyc]) -> Vector {
        let d = QuantumDouble::get();
        let yl = Pbw::from_letters(&[l]).expect("letter");
        let mut out = zero_vector(self.dim());
        for i in crate::linalg::support(v) {
            let (p, j) = self.split_index(i);
            for (b, c) in d.straighten(yl, p).terms() {
                if !b.y.is_one() || self.simple.degree(j) != b.h {
                    continue;
                }
                let m = self.simple.act(b.g, &unit_vector(self.simple.dim(), j));
                let coef = c * &v[i];
                for (k, mk) in m.iter().enumerate() {
                    if !mk.is_zero() {
                        out[self.index(b.x, k)] += &coef * mk;
                    }
                }
            }
        }
        out
    }

    /// `y_top (x_top (x) m_j)`.
    pub fn y_top_x_top(&self, j: usize) -> Vector {
        self.apply_y_word(&Y_TOP, &self.basis_vector(Pbw::TOP, j))
    }

    /// The coefficient of `1 (x) m_j` in `y_top (x_top (x) m_j)`.
    pub fn y_top_x_top_scalar(&self, j: usize) -> Cyc {
        self.y_top_x_top(j)[self.index(Pbw::ONE, j)].clone()
    }

    /// Builds `sum c (word (x) m_j)`; words need not be in normal form.
    pub fn vector(&self, terms: &[(&[Letter], usize, Cyc)]) -> Vector {
        let n = Nichols::fk3();
        let mut v = zero_vector(self.dim());
        for (w, j, c) in terms {
            for (p, pc) in n.word(w).terms() {
                v[self.index(p, *j)] += c * pc;
            }
        }
        v
    }

    pub fn symbol(&self, i: usize) -> String {
        let (p, j) = self.split_index(i);
        let m = &self.simple.symbols()[j];
        if p.is_one() {
            m.clone()
        } else {
            format!("{} {m}", p.render('x'))
        }
    }

    pub fn render(&self, v: &[Cyc]) -> String {
        if is_zero(v) {
            return "0".into();
        }
        crate::linalg::support(v)
            .map(|i| {
                if v[i].is_one() {
                    self.symbol(i)
                } else {
                    format!("({}) {}", v[i], self.symbol(i))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Whether `y_{t (12) t^-1} = sgn(t) t y12 t^-1` holds as operators.
    pub fn conjugation_identity(&self, t: Elem) -> bool {
        let g = GroupData::s3();
        let target = Letter::from_transposition(g.conj(t, Letter::L12.transposition()));
        let rhs = self
            .dg
            .action(t)
            .mul(self.y_op(Letter::L12))
            .mul(self.dg.action(g.inv(t)))
            .scale(&Cyc::int(g.sign(t)));
        *self.y_op(target) == rhs
    }

    /// The two sides of a defining relation between `y_b` and `x_a` as operators:
    /// `y_b x_a + x_a y_{aba}` and `[a=b] + a (d_b - d_{ba})`.
    pub fn cross_relation(&self, b: Letter, a: Letter) -> (Mat, Mat) {
        let g = GroupData::s3();
        let (ta, tb) = (a.transposition(), b.transposition());
        let c = Letter::from_transposition(g.conj(ta, tb));
        let lhs = self
            .y_op(b)
            .mul(self.x_op(a))
            .add(&self.x_op(a).mul(self.y_op(c)));
        let mut rhs = self
            .dg
            .action(ta)
            .mul(&self.dg.delta(tb).sub(&self.dg.delta(g.mul(tb, ta))));
        if a == b {
            rhs = rhs.add(&Mat::identity(self.dim()));
        }
        (lhs, rhs)
    }
}

fn y_by_recursion(g: &GroupData, dg: &DGModule, x_ops: &[Mat], d: usize) -> Vec<Mat> {
    let dim = dg.dim();
    let mut cols = vec![vec![zero_vector(dim); dim]; 3];
    let mut order: Vec<Pbw> = Pbw::all().collect();
    order.sort_by_key(|p| p.len());
    for p in order {
        if p.is_one() {
            continue;
        }
        let letters = p.letters();
        let a = letters[0];
        let rest = Pbw::from_letters(&letters[1..]).expect("tails of normal words are normal");
        let ta = a.transposition();
        for j in 0..d {
            let w = unit_vector(dim, rest.index() * d + j);
            for b in Letter::ALL {
                let tb = b.transposition();
                let mut out = zero_vector(dim);
                if a == b {
                    axpy(&mut out, &Cyc::one(), &w);
                }
                let proj = sub(&dg.project(tb, &w), &dg.project(g.mul(tb, ta), &w));
                axpy(&mut out, &Cyc::one(), &dg.act(ta, &proj));
                let c = Letter::from_transposition(g.conj(ta, tb));
                let inner = &cols[letter_pos(c)][rest.index() * d + j];
                axpy(&mut out, &Cyc::int(-1), &x_ops[letter_pos(a)].apply(inner));
                cols[letter_pos(b)][p.index() * d + j] = out;
            }
        }
    }
    cols.iter().map(|c| Mat::from_columns(dim, c)).collect()
}

/// A stated value of `y_top (x_top (x) m)` as a multiple of `m`.
#[derive(Clone, Debug, Serialize)]
pub struct TopScalarClaim {
    pub weight: String,
    pub symbol: String,
    pub stated: Cyc,
    pub computed: Option<Cyc>,
    pub status: Status,
}

/// The simplicity scalars for `M(e,-)`, `M(sigma,+)`, `M(tau,1)`, `M(tau,2)`.
/// The value 2 stated for `M(sigma,+)` is a misprint for -4.
pub fn top_scalar_claims() -> Vec<TopScalarClaim> {
    let g = GroupData::s3();
    [
        ("e-", 0, -12, None),
        ("sigma+", 1, 2, Some(-4)),
        ("tau1", 1, -3, None),
        ("tau2", 1, -3, None),
    ]
    .into_iter()
    .map(|(id, j, stated, fixed)| {
        let m = VermaModule::build(g.parse_weight(id).expect("weight"));
        let v = m.y_top_x_top(j);
        let c = m.y_top_x_top_scalar(j);
        let multiple = v == crate::linalg::scaled(&m.basis_vector(Pbw::ONE, j), &c);
        let computed = multiple.then_some(c);
        let is = |k: i64| computed.as_ref() == Some(&Cyc::int(k));
        TopScalarClaim {
            weight: id.into(),
            symbol: m.simple().symbols()[j].clone(),
            stated: Cyc::int(stated),
            status: Status::of(is(stated), fixed.is_some_and(is)),
            computed,
        }
    })
    .collect()
}

/// Summary of one Verma module.
#[derive(Clone, Debug, Serialize)]
pub struct VermaReport {
    pub weight: String,
    pub dimension: usize,
    pub graded_dims: Vec<usize>,
    pub graded_weights: Vec<Vec<String>>,
    pub y_top: String,
    pub y_top_x_top: Vec<String>,
}

impl VermaReport {
    pub fn new(m: &VermaModule) -> VermaReport {
        let g = GroupData::s3();
        let graded_weights = (0..=N_TOP)
            .map(|n| {
                let piece = m.graded_piece(n);
                crate::dgmod::weights_of_span(g, m.dg_module(), &piece)
                    .expect("graded pieces are submodules")
                    .into_iter()
                    .map(|w| g.weight_id(w))
                    .collect()
            })
            .collect();
        let y_top = Y_TOP
            .iter()
            .map(|l| format!("y{}", l.subscript()))
            .collect::<Vec<_>>()
            .join("*");
        let y_top_x_top = (0..m.simple().dim())
            .map(|j| {
                format!(
                    "{}: {}",
                    m.simple().symbols()[j],
                    m.render(&m.y_top_x_top(j))
                )
            })
            .collect();
        VermaReport {
            weight: g.weight_id(m.weight()),
            dimension: m.dim(),
            graded_dims: m.graded_dims(),
            graded_weights,
            y_top,
            y_top_x_top,
        }
    }
}
