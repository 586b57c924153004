//! The Fomin-Kirillov algebra `FK3`, the Nichols algebra of the transpositions of
//! `S3` with the sign cocycle: rewriting to PBW normal form, multiplication and
//! the `D(S3)`-module structure of its graded pieces.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::dgmod::DGModule;
use crate::group::{s3, Elem, GroupData};
use crate::linalg::Mat;
use crate::scalar::Cyc;

/// A generator `x_12`, `x_13` or `x_23`, ordered `x_12 < x_13 < x_23`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    L12,
    L13,
    L23,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::L12, Letter::L13, Letter::L23];

    /// The transposition labelling the generator.
    pub fn transposition(self) -> Elem {
        match self {
            Letter::L12 => s3::T12,
            Letter::L13 => s3::T13,
            Letter::L23 => s3::T23,
        }
    }

    pub fn from_transposition(t: Elem) -> Letter {
        match t {
            s3::T12 => Letter::L12,
            s3::T13 => Letter::L13,
            s3::T23 => Letter::L23,
            _ => panic!("{t:?} is not a transposition"),
        }
    }

    pub fn subscript(self) -> &'static str {
        match self {
            Letter::L12 => "12",
            Letter::L13 => "13",
            Letter::L23 => "23",
        }
    }

    /// `g . x_a = sgn(g) x_{g a g^-1}`.
    pub fn conjugate(self, g: Elem) -> (i64, Letter) {
        let grp = GroupData::s3();
        (
            grp.sign(g),
            Letter::from_transposition(grp.conj(g, self.transposition())),
        )
    }
}

pub type Word = Vec<Letter>;

/// Product of the letters read left to right.
pub fn word_degree(w: &[Letter]) -> Elem {
    let g = GroupData::s3();
    w.iter()
        .fold(g.identity(), |acc, l| g.mul(acc, l.transposition()))
}

fn deglex(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Linear combination of words.
pub type Poly = BTreeMap<Word, Cyc>;

fn poly_add(p: &mut Poly, w: Word, c: Cyc) {
    if c.is_zero() {
        return;
    }
    match p.entry(w) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

fn leading(p: &Poly) -> Option<(&Word, &Cyc)> {
    p.iter().max_by(|a, b| deglex(a.0, b.0))
}

/// A rewriting rule `lhs -> rhs` with every word of `rhs` smaller than `lhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Poly,
}

/// A confluent rewriting system obtained by completing a set of relations with
/// respect to the degree-lexicographic order.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    rules: Vec<Rule>,
}

fn find_sub(hay: &[Letter], needle: &[Letter]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&i| &hay[i..i + needle.len()] == needle)
}

impl RewriteSystem {
    /// Completes `relations` (each meaning `p = 0`), processing critical pairs up
    /// to total length `max_len`.
    pub fn complete(relations: Vec<Poly>, max_len: usize) -> RewriteSystem {
        let mut sys = RewriteSystem { rules: Vec::new() };
        let mut pending = relations;
        while let Some(p) = pending.pop() {
            let r = sys.reduce_poly(&p);
            let Some((lead, c)) = leading(&r) else {
                continue;
            };
            let lead = lead.clone();
            let inv = c.inv().expect("nonzero leading coefficient");
            let rhs: Poly = r
                .iter()
                .filter(|(w, _)| **w != lead)
                .map(|(w, v)| (w.clone(), -(v * &inv)))
                .collect();
            let rule = Rule { lhs: lead, rhs };
            for other in sys.rules.iter().chain(std::iter::once(&rule)) {
                for s in critical_pairs(&rule, other)
                    .into_iter()
                    .chain(critical_pairs(other, &rule))
                {
                    if s.0 <= max_len {
                        pending.push(s.1);
                    }
                }
            }
            sys.rules.push(rule);
        }
        sys.interreduce();
        sys
    }

    fn interreduce(&mut self) {
        let mut kept: Vec<Rule> = Vec::new();
        for (i, r) in self.rules.iter().enumerate() {
            let redundant = self.rules.iter().enumerate().any(|(j, o)| {
                j != i
                    && find_sub(&r.lhs, &o.lhs).is_some()
                    && (o.lhs.len() < r.lhs.len() || (o.lhs == r.lhs && j < i))
            });
            if !redundant {
                kept.push(r.clone());
            }
        }
        self.rules = kept;
        let snapshot = self.clone();
        for r in self.rules.iter_mut() {
            r.rhs = snapshot.reduce_poly(&r.rhs);
        }
        self.rules.sort_by(|a, b| deglex(&a.lhs, &b.lhs));
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn is_normal(&self, w: &[Letter]) -> bool {
        self.rules.iter().all(|r| find_sub(w, &r.lhs).is_none())
    }

    pub fn normal_form(&self, w: &[Letter]) -> Poly {
        let mut p = Poly::new();
        p.insert(w.to_vec(), Cyc::one());
        self.reduce_poly(&p)
    }

    pub fn reduce_poly(&self, p: &Poly) -> Poly {
        let mut todo: Poly = p.clone();
        let mut done = Poly::new();
        while let Some((w, c)) = todo.pop_last() {
            let hit = self
                .rules
                .iter()
                .find_map(|r| find_sub(&w, &r.lhs).map(|i| (r, i)));
            match hit {
                None => poly_add(&mut done, w, c),
                Some((r, i)) => {
                    for (rw, rc) in &r.rhs {
                        let mut nw = w[..i].to_vec();
                        nw.extend_from_slice(rw);
                        nw.extend_from_slice(&w[i + r.lhs.len()..]);
                        poly_add(&mut todo, nw, &c * rc);
                    }
                }
            }
        }
        done
    }
}

fn wrap(prefix: &[Letter], p: &Poly, suffix: &[Letter]) -> Poly {
    p.iter()
        .map(|(w, c)| {
            let mut nw = prefix.to_vec();
            nw.extend_from_slice(w);
            nw.extend_from_slice(suffix);
            (nw, c.clone())
        })
        .collect()
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (w, c) in b {
        poly_add(&mut out, w.clone(), -c);
    }
    out
}

/// S-polynomials of `r1` against `r2` with the length of the ambiguous word.
fn critical_pairs(r1: &Rule, r2: &Rule) -> Vec<(usize, Poly)> {
    let (u, v) = (&r1.lhs, &r2.lhs);
    let mut out = Vec::new();
    // Overlap: a proper suffix of u equals a proper prefix of v.
    for k in 1..u.len().min(v.len()) {
        if u[u.len() - k..] == v[..k] {
            let left = wrap(&[], &r1.rhs, &v[k..]);
            let right = wrap(&u[..u.len() - k], &r2.rhs, &[]);
            out.push((u.len() + v.len() - k, poly_sub(&left, &right)));
        }
    }
    // Inclusion of v in u.
    if v.len() < u.len() || (v.len() == u.len() && u != v) {
        if let Some(i) = find_sub(u, v) {
            let inner = wrap(&u[..i], &r2.rhs, &u[i + v.len()..]);
            out.push((u.len(), poly_sub(&r1.rhs, &inner)));
        }
    }
    out
}

/// A PBW monomial `x_12^a (1 | x_13 | x_13 x_12)_b x_23^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pbw(u8);

impl Pbw {
    pub const ONE: Pbw = Pbw(0);
    pub const TOP: Pbw = Pbw(11);

    pub fn all() -> impl Iterator<Item = Pbw> {
        (0..12).map(Pbw)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Pbw {
        assert!(i < 12);
        Pbw(i as u8)
    }

    pub fn letters(self) -> Word {
        let i = self.0;
        let mut w = Vec::new();
        if i / 6 == 1 {
            w.push(Letter::L12);
        }
        match (i / 2) % 3 {
            1 => w.push(Letter::L13),
            2 => w.extend([Letter::L13, Letter::L12]),
            _ => {}
        }
        if i % 2 == 1 {
            w.push(Letter::L23);
        }
        w
    }

    pub fn from_letters(w: &[Letter]) -> Option<Pbw> {
        Pbw::all().find(|p| p.letters() == w)
    }

    /// Degree of the monomial.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> usize {
        self.letters().len()
    }

    pub fn is_one(self) -> bool {
        self == Pbw::ONE
    }

    pub fn degree(self) -> Elem {
        word_degree(&self.letters())
    }

    /// Rendering with generator prefix `x` or `y`, e.g. `x12*x13`.
    pub fn render(self, prefix: char) -> String {
        if self.is_one() {
            return "1".into();
        }
        self.letters()
            .iter()
            .map(|l| format!("{prefix}{}", l.subscript()))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Pbw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render('x'))
    }
}

/// An element of `FK3` in the PBW basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgElem {
    terms: BTreeMap<Pbw, Cyc>,
}

impl AlgElem {
    pub fn zero() -> Self {
        AlgElem::default()
    }

    pub fn monomial(p: Pbw, c: Cyc) -> Self {
        let mut e = AlgElem::zero();
        e.add_term(p, c);
        e
    }

    pub fn add_term(&mut self, p: Pbw, c: Cyc) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(p).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn add_scaled(&mut self, other: &AlgElem, c: &Cyc) {
        for (p, v) in &other.terms {
            self.add_term(*p, v * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Pbw, &Cyc)> {
        self.terms.iter().map(|(p, c)| (*p, c))
    }

    pub fn coeff(&self, p: Pbw) -> Cyc {
        self.terms.get(&p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_vector(&self) -> Vec<Cyc> {
        Pbw::all().map(|p| self.coeff(p)).collect()
    }

    pub fn render(&self, prefix: char) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(p, c)| format!("({c}) {}", p.render(prefix)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `FK3` with precomputed multiplication and `S3`-action tables.
#[derive(Debug)]
pub struct Nichols {
    system: RewriteSystem,
    products: Vec<Vec<AlgElem>>,
    actions: Vec<Vec<AlgElem>>,
}

fn single(w: Word) -> Poly {
    [(w, Cyc::one())].into_iter().collect()
}

/// The defining quadratic relations: `x_a^2 = 0` and the two three-term relations.
pub fn fk3_relations() -> Vec<Poly> {
    use Letter::*;
    let mut rels: Vec<Poly> = Letter::ALL.iter().map(|&a| single(vec![a, a])).collect();
    rels.push(
        [
            (vec![L12, L13], Cyc::one()),
            (vec![L23, L12], Cyc::one()),
            (vec![L13, L23], Cyc::one()),
        ]
        .into_iter()
        .collect(),
    );
    rels.push(
        [
            (vec![L13, L12], Cyc::one()),
            (vec![L12, L23], Cyc::one()),
            (vec![L23, L13], Cyc::one()),
        ]
        .into_iter()
        .collect(),
    );
    rels
}

impl Nichols {
    pub fn fk3() -> &'static Nichols {
        static FK3: OnceLock<Nichols> = OnceLock::new();
        FK3.get_or_init(Nichols::build)
    }

    fn build() -> Nichols {
        let system = RewriteSystem::complete(fk3_relations(), 8);
        let to_elem = |p: &Poly| {
            let mut e = AlgElem::zero();
            for (w, c) in p {
                let m = Pbw::from_letters(w).expect("normal words are PBW monomials");
                e.add_term(m, c.clone());
            }
            e
        };
        let products = Pbw::all()
            .map(|a| {
                Pbw::all()
                    .map(|b| {
                        let mut w = a.letters();
                        w.extend(b.letters());
                        to_elem(&system.normal_form(&w))
                    })
                    .collect()
            })
            .collect();
        let g = GroupData::s3();
        let actions = g
            .elements()
            .map(|h| {
                Pbw::all()
                    .map(|p| {
                        let mut sign = 1;
                        let w: Word = p
                            .letters()
                            .into_iter()
                            .map(|l| {
                                let (s, m) = l.conjugate(h);
                                sign *= s;
                                m
                            })
                            .collect();
                        let mut e = AlgElem::zero();
                        e.add_scaled(&to_elem(&system.normal_form(&w)), &Cyc::int(sign));
                        e
                    })
                    .collect()
            })
            .collect();
        Nichols {
            system,
            products,
            actions,
        }
    }

    pub fn rewrite_system(&self) -> &RewriteSystem {
        &self.system
    }

    pub fn dim(&self) -> usize {
        12
    }

    pub fn graded_dims(&self) -> Vec<usize> {
        let mut dims = vec![0; 5];
        for p in Pbw::all() {
            dims[p.len()] += 1;
        }
        dims
    }

    /// Normal form of a word.
    pub fn word(&self, w: &[Letter]) -> AlgElem {
        let mut e = AlgElem::zero();
        for (nw, c) in self.system.normal_form(w) {
            e.add_term(Pbw::from_letters(&nw).expect("PBW"), c);
        }
        e
    }

    pub fn mul_pbw(&self, a: Pbw, b: Pbw) -> &AlgElem {
        &self.products[a.index()][b.index()]
    }

    pub fn mul(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        let mut out = AlgElem::zero();
        for (p, c) in a.terms() {
            for (q, d) in b.terms() {
                out.add_scaled(self.mul_pbw(p, q), &(c * d));
            }
        }
        out
    }

    /// `g . p` for the diagonal action twisted by the sign.
    pub fn act_pbw(&self, g: Elem, p: Pbw) -> &AlgElem {
        &self.actions[g.0][p.index()]
    }

    pub fn act(&self, g: Elem, a: &AlgElem) -> AlgElem {
        let mut out = AlgElem::zero();
        for (p, c) in a.terms() {
            out.add_scaled(self.act_pbw(g, p), c);
        }
        out
    }

    /// The graded piece of degree `n` as a `D(S3)`-module, with prefix `x` or `y`.
    pub fn graded_module(&self, n: usize, prefix: char) -> DGModule {
        self.module_on(Pbw::all().filter(|p| p.len() == n).collect(), prefix)
    }

    /// The whole algebra as a `D(S3)`-module, basis in PBW order.
    pub fn full_module(&self, prefix: char) -> DGModule {
        self.module_on(Pbw::all().collect(), prefix)
    }

    fn module_on(&self, basis: Vec<Pbw>, prefix: char) -> DGModule {
        let g = GroupData::s3();
        let pos = |p: Pbw| basis.iter().position(|&q| q == p).expect("same degree");
        let actions = g
            .elements()
            .map(|h| {
                let cols: Vec<Vec<Cyc>> = basis
                    .iter()
                    .map(|&p| {
                        let mut v = vec![Cyc::zero(); basis.len()];
                        for (q, c) in self.act_pbw(h, p).terms() {
                            v[pos(q)] = c.clone();
                        }
                        v
                    })
                    .collect();
                Mat::from_columns(basis.len(), &cols)
            })
            .collect();
        DGModule::new(
            g,
            basis.iter().map(|p| p.render(prefix)).collect(),
            basis.iter().map(|p| p.degree()).collect(),
            actions,
        )
        .expect("graded pieces are D(G)-modules")
    }
}

#[cfg(test)]
mod tests {
    use super::Letter::*;
    use super::*;

    #[test]
    fn completion_finds_the_cubic_rule() {
        let n = Nichols::fk3();
        let lhs: Vec<Word> = n
            .rewrite_system()
            .rules()
            .iter()
            .map(|r| r.lhs.clone())
            .collect();
        assert_eq!(
            lhs,
            vec![
                vec![L12, L12],
                vec![L13, L13],
                vec![L23, L12],
                vec![L23, L13],
                vec![L23, L23],
                vec![L13, L12, L13],
            ]
        );
        let cubic = &n.rewrite_system().rules()[5];
        assert_eq!(cubic.rhs, single(vec![L12, L13, L12]));
    }

    #[test]
    fn normal_words_are_the_pbw_basis() {
        let n = Nichols::fk3();
        let mut normal = Vec::new();
        let mut layer: Vec<Word> = vec![vec![]];
        for _ in 0..6 {
            let mut next = Vec::new();
            for w in &layer {
                if n.rewrite_system().is_normal(w) {
                    normal.push(w.clone());
                    for a in Letter::ALL {
                        let mut nw = w.clone();
                        nw.push(a);
                        next.push(nw);
                    }
                }
            }
            layer = next;
        }
        let mut expected: Vec<Word> = Pbw::all().map(Pbw::letters).collect();
        expected.sort();
        normal.sort();
        assert_eq!(normal, expected);
        assert_eq!(n.graded_dims(), vec![1, 3, 4, 3, 1]);
    }

    #[test]
    fn top_degree_is_an_integral() {
        let n = Nichols::fk3();
        assert_eq!(Pbw::TOP.letters(), vec![L12, L13, L12, L23]);
        for a in Letter::ALL {
            let x = n.word(&[a]);
            let top = AlgElem::monomial(Pbw::TOP, Cyc::one());
            assert!(n.mul(&x, &top).is_zero());
            assert!(n.mul(&top, &x).is_zero());
        }
    }

    #[test]
    fn pbw_order_and_degrees() {
        let names: Vec<String> = Pbw::all().map(|p| p.to_string()).collect();
        assert_eq!(
            names,
            [
                "1",
                "x23",
                "x13",
                "x13*x23",
                "x13*x12",
                "x13*x12*x23",
                "x12",
                "x12*x23",
                "x12*x13",
                "x12*x13*x23",
                "x12*x13*x12",
                "x12*x13*x12*x23"
            ]
        );
        assert_eq!(Pbw::from_letters(&[L12, L23]).unwrap().degree(), s3::C123);
        assert_eq!(Pbw::TOP.degree(), s3::E);
    }

    #[test]
    fn prefixes_and_suffixes_of_pbw_words_are_pbw() {
        for p in Pbw::all() {
            let w = p.letters();
            for k in 0..=w.len() {
                assert!(Pbw::from_letters(&w[..k]).is_some());
                assert!(Pbw::from_letters(&w[k..]).is_some());
            }
        }
    }

    #[test]
    fn action_is_by_algebra_automorphisms() {
        let n = Nichols::fk3();
        let g = GroupData::s3();
        for h in g.elements() {
            for a in Pbw::all() {
                for b in Pbw::all() {
                    let lhs = n.act(h, n.mul_pbw(a, b));
                    let rhs = n.mul(n.act_pbw(h, a), n.act_pbw(h, b));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
