//! The Drinfeld double of `FK3 # kS3` in its triangular basis `x . g d_h . y`,
//! with multiplication by straightening.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::group::{Elem, GroupData};
use crate::nichols::{AlgElem, Letter, Nichols, Pbw};
use crate::scalar::Cyc;

/// The basis element `x . g d_h . y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoubleBasis {
    pub x: Pbw,
    pub g: Elem,
    pub h: Elem,
    pub y: Pbw,
}

impl DoubleBasis {
    /// `deg y - deg x`.
    pub fn z_degree(&self) -> i64 {
        self.y.len() as i64 - self.x.len() as i64
    }

    pub fn render(&self) -> String {
        let g = GroupData::s3();
        let mut parts = Vec::new();
        if !self.x.is_one() {
            parts.push(self.x.render('x'));
        }
        let group = if self.g == g.identity() {
            String::new()
        } else {
            g.name(self.g).to_string()
        };
        parts.push(format!("{group}d[{}]", g.name(self.h)));
        if !self.y.is_one() {
            parts.push(self.y.render('y'));
        }
        parts.join(" . ")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DoubleElem {
    terms: BTreeMap<DoubleBasis, Cyc>,
}

impl DoubleElem {
    pub fn zero() -> Self {
        DoubleElem::default()
    }

    pub fn basis(b: DoubleBasis) -> Self {
        let mut e = DoubleElem::zero();
        e.add_term(b, Cyc::one());
        e
    }

    pub fn add_term(&mut self, b: DoubleBasis, c: Cyc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
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

    pub fn add_scaled(&mut self, other: &DoubleElem, c: &Cyc) {
        for (b, v) in &other.terms {
            self.add_term(*b, v * c);
        }
    }

    pub fn scaled(&self, c: &Cyc) -> DoubleElem {
        let mut e = DoubleElem::zero();
        e.add_scaled(self, c);
        e
    }

    pub fn plus(&self, other: &DoubleElem) -> DoubleElem {
        let mut e = self.clone();
        e.add_scaled(other, &Cyc::one());
        e
    }

    pub fn minus(&self, other: &DoubleElem) -> DoubleElem {
        let mut e = self.clone();
        e.add_scaled(other, &Cyc::int(-1));
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DoubleBasis, &Cyc)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The `Z`-degrees occurring in the element.
    pub fn z_degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(DoubleBasis::z_degree).collect();
        d.sort();
        d.dedup();
        d
    }

    /// Reads the element as `sum c_p x_p` (unit in the middle, no `y`), if possible.
    pub fn as_x_element(&self) -> Option<AlgElem> {
        self.as_outer(|b| (b.x, b.y))
    }

    /// Reads the element as `sum c_p y_p`, if possible.
    pub fn as_y_element(&self) -> Option<AlgElem> {
        self.as_outer(|b| (b.y, b.x))
    }

    fn as_outer(&self, pick: impl Fn(&DoubleBasis) -> (Pbw, Pbw)) -> Option<AlgElem> {
        let g = GroupData::s3();
        let mut by_mono: BTreeMap<Pbw, BTreeMap<Elem, Cyc>> = BTreeMap::new();
        for (b, c) in &self.terms {
            let (keep, other) = pick(b);
            if !other.is_one() || b.g != g.identity() {
                return None;
            }
            by_mono.entry(keep).or_default().insert(b.h, c.clone());
        }
        let mut out = AlgElem::zero();
        for (p, coeffs) in by_mono {
            let first = coeffs.values().next()?.clone();
            if coeffs.len() != g.order() || coeffs.values().any(|c| *c != first) {
                return None;
            }
            out.add_term(p, first);
        }
        Some(out)
    }
}

impl fmt::Display for DoubleElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| {
                if c.is_one() {
                    b.render()
                } else {
                    format!("({c}) {}", b.render())
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize)]
struct TermRepr<'a> {
    x: String,
    g: String,
    h: String,
    y: String,
    coeff: &'a Cyc,
}

impl Serialize for DoubleElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let g = GroupData::s3();
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(b, c)| TermRepr {
                x: b.x.render('x'),
                g: g.name(b.g).to_string(),
                h: g.name(b.h).to_string(),
                y: b.y.render('y'),
                coeff: c,
            })
            .collect();
        terms.serialize(s)
    }
}

/// The double with its table of straightened products `y . x` of PBW monomials.
#[derive(Debug)]
pub struct QuantumDouble {
    straightened: HashMap<(Pbw, Pbw), DoubleElem>,
}

impl QuantumDouble {
    pub fn get() -> &'static QuantumDouble {
        static D: OnceLock<QuantumDouble> = OnceLock::new();
        D.get_or_init(QuantumDouble::build)
    }

    fn build() -> QuantumDouble {
        let mut d = QuantumDouble {
            straightened: HashMap::new(),
        };
        let mut pairs: Vec<(Pbw, Pbw)> = Pbw::all()
            .filter(|p| !p.is_one())
            .flat_map(|y| Pbw::all().filter(|p| !p.is_one()).map(move |x| (y, x)))
            .collect();
        pairs.sort_by_key(|(y, x)| y.len() + x.len());
        for (y, x) in pairs {
            let v = d.straighten_step(y, x);
            d.straightened.insert((y, x), v);
        }
        d
    }

    fn nichols(&self) -> &'static Nichols {
        Nichols::fk3()
    }

    /// `y_b x_a = [b=a] + a (d_b - d_{ba}) - x_a y_{aba}`, applied to the last
    /// letter of `y` and the first letter of `x`.
    fn straighten_step(&self, y: Pbw, x: Pbw) -> DoubleElem {
        let g = GroupData::s3();
        let yl = y.letters();
        let xl = x.letters();
        let b = *yl.last().expect("nonempty");
        let a = xl[0];
        let y_rest = self.y_word(&yl[..yl.len() - 1]);
        let x_rest = self.x_word(&xl[1..]);
        let (ta, tb) = (a.transposition(), b.transposition());
        let mut inner = DoubleElem::zero();
        if a == b {
            inner.add_scaled(&x_rest, &Cyc::one());
        }
        let ga = QuantumDouble::group(ta);
        inner.add_scaled(
            &self.mul(&self.mul(&ga, &QuantumDouble::delta(tb)), &x_rest),
            &Cyc::one(),
        );
        inner.add_scaled(
            &self.mul(
                &self.mul(&ga, &QuantumDouble::delta(g.mul(tb, ta))),
                &x_rest,
            ),
            &Cyc::int(-1),
        );
        let mut out = self.mul(&y_rest, &inner);
        let conj = Letter::from_transposition(g.conj(ta, tb));
        let left = self.mul(&y_rest, &self.x_letter(a));
        let right = self.mul(&self.y_letter(conj), &x_rest);
        out.add_scaled(&self.mul(&left, &right), &Cyc::int(-1));
        out
    }

    fn x_word(&self, w: &[Letter]) -> DoubleElem {
        let mut e = DoubleElem::zero();
        for (p, c) in self.nichols().word(w).terms() {
            e.add_scaled(&QuantumDouble::x_mono(p), c);
        }
        e
    }

    fn y_word(&self, w: &[Letter]) -> DoubleElem {
        let mut e = DoubleElem::zero();
        for (p, c) in self.nichols().word(w).terms() {
            e.add_scaled(&QuantumDouble::y_mono(p), c);
        }
        e
    }

    pub fn one() -> DoubleElem {
        QuantumDouble::group(GroupData::s3().identity())
    }

    /// `g = sum_h g d_h`.
    pub fn group(gr: Elem) -> DoubleElem {
        let g = GroupData::s3();
        let mut e = DoubleElem::zero();
        for h in g.elements() {
            e.add_term(
                DoubleBasis {
                    x: Pbw::ONE,
                    g: gr,
                    h,
                    y: Pbw::ONE,
                },
                Cyc::one(),
            );
        }
        e
    }

    pub fn delta(h: Elem) -> DoubleElem {
        DoubleElem::basis(DoubleBasis {
            x: Pbw::ONE,
            g: GroupData::s3().identity(),
            h,
            y: Pbw::ONE,
        })
    }

    /// `g d_h`.
    pub fn group_delta(gr: Elem, h: Elem) -> DoubleElem {
        DoubleElem::basis(DoubleBasis {
            x: Pbw::ONE,
            g: gr,
            h,
            y: Pbw::ONE,
        })
    }

    pub fn x_mono(p: Pbw) -> DoubleElem {
        let g = GroupData::s3();
        let mut e = DoubleElem::zero();
        for h in g.elements() {
            e.add_term(
                DoubleBasis {
                    x: p,
                    g: g.identity(),
                    h,
                    y: Pbw::ONE,
                },
                Cyc::one(),
            );
        }
        e
    }

    pub fn y_mono(p: Pbw) -> DoubleElem {
        let g = GroupData::s3();
        let mut e = DoubleElem::zero();
        for h in g.elements() {
            e.add_term(
                DoubleBasis {
                    x: Pbw::ONE,
                    g: g.identity(),
                    h,
                    y: p,
                },
                Cyc::one(),
            );
        }
        e
    }

    pub fn x_letter(&self, a: Letter) -> DoubleElem {
        QuantumDouble::x_mono(Pbw::from_letters(&[a]).expect("letter"))
    }

    pub fn y_letter(&self, b: Letter) -> DoubleElem {
        QuantumDouble::y_mono(Pbw::from_letters(&[b]).expect("letter"))
    }

    pub fn from_x(&self, a: &AlgElem) -> DoubleElem {
        let mut e = DoubleElem::zero();
        for (p, c) in a.terms() {
            e.add_scaled(&QuantumDouble::x_mono(p), c);
        }
        e
    }

    pub fn from_y(&self, a: &AlgElem) -> DoubleElem {
        let mut e = DoubleElem::zero();
        for (p, c) in a.terms() {
            e.add_scaled(&QuantumDouble::y_mono(p), c);
        }
        e
    }

    /// `y . x` in the triangular basis.
    pub fn straighten(&self, y: Pbw, x: Pbw) -> DoubleElem {
        if y.is_one() {
            return QuantumDouble::x_mono(x);
        }
        if x.is_one() {
            return QuantumDouble::y_mono(y);
        }
        self.straightened[&(y, x)].clone()
    }

    fn mul_basis(&self, l: &DoubleBasis, r: &DoubleBasis, out: &mut DoubleElem, coef: &Cyc) {
        let g = GroupData::s3();
        let n = self.nichols();
        let middle = self.straighten(l.y, r.x);
        for (m, c) in middle.terms() {
            // l.g d_{l.h} m.x = (l.g . m.x) l.g d_k with k = deg(m.x)^-1 l.h
            let k = g.mul(g.inv(m.x.degree()), l.h);
            // l.g d_k m.g d_{m.h} is nonzero only if m.g^-1 k m.g = m.h
            if g.conj(g.inv(m.g), k) != m.h {
                continue;
            }
            let gg = g.mul(l.g, m.g);
            // d_{m.h} m.y r.g = r.g d_{r.g^-1 m.h r.g} (r.g^-1 . m.y)
            // and (r.g^-1 . m.y) d_{r.h} = d_{d r.h} (r.g^-1 . m.y), d its degree
            let rg_inv = g.inv(r.g);
            let d = g.conj(rg_inv, m.y.degree());
            let hh = g.mul(d, r.h);
            if g.conj(rg_inv, m.h) != hh {
                continue;
            }
            let xs = n.mul(&AlgElem::monomial(l.x, Cyc::one()), n.act_pbw(l.g, m.x));
            let ys = n.mul(n.act_pbw(rg_inv, m.y), &AlgElem::monomial(r.y, Cyc::one()));
            let base = coef * c;
            for (xp, xc) in xs.terms() {
                for (yp, yc) in ys.terms() {
                    out.add_term(
                        DoubleBasis {
                            x: xp,
                            g: g.mul(gg, r.g),
                            h: hh,
                            y: yp,
                        },
                        &base * &(xc * yc),
                    );
                }
            }
        }
    }

    /// The product `p q` rewritten in the triangular basis.
    pub fn mul(&self, p: &DoubleElem, q: &DoubleElem) -> DoubleElem {
        let mut out = DoubleElem::zero();
        for (l, a) in p.terms() {
            for (r, b) in q.terms() {
                self.mul_basis(l, r, &mut out, &(a * b));
            }
        }
        out
    }

    /// Antipode on the `D(G)` part: `S(g d_k) = d_{k^-1} g^-1`.
    pub fn antipode_dg(&self, u: &DoubleElem) -> Option<DoubleElem> {
        let g = GroupData::s3();
        let mut out = DoubleElem::zero();
        for (b, c) in u.terms() {
            if !b.x.is_one() || !b.y.is_one() {
                return None;
            }
            let s = self.mul(
                &QuantumDouble::delta(g.inv(b.h)),
                &QuantumDouble::group(g.inv(b.g)),
            );
            out.add_scaled(&s, c);
        }
        Some(out)
    }

    /// `ad(u) z = u_1 z S(u_2)` for `u` in `D(G)`, using
    /// `Delta(g d_k) = sum_t g d_t (x) g d_{t^-1 k}`.
    pub fn adjoint(&self, u: &DoubleElem, z: &DoubleElem) -> Option<DoubleElem> {
        let g = GroupData::s3();
        let mut out = DoubleElem::zero();
        for (b, c) in u.terms() {
            if !b.x.is_one() || !b.y.is_one() {
                return None;
            }
            for t in g.elements() {
                let first = QuantumDouble::group_delta(b.g, t);
                let second = QuantumDouble::group_delta(b.g, g.mul(g.inv(t), b.h));
                let s = self.antipode_dg(&second)?;
                out.add_scaled(&self.mul(&self.mul(&first, z), &s), c);
            }
        }
        Some(out)
    }

    /// `ad(u)` on an element of `V`.
    pub fn adjoint_x(&self, u: &DoubleElem, x: &AlgElem) -> Option<AlgElem> {
        self.adjoint(u, &self.from_x(x))?.as_x_element()
    }

    /// `ad(u)` on an element of the dual space of `y`'s.
    pub fn adjoint_y(&self, u: &DoubleElem, y: &AlgElem) -> Option<AlgElem> {
        self.adjoint(u, &self.from_y(y))?.as_y_element()
    }

    /// The right-hand side of the general `yx` commutation rule for generators,
    /// built from the comodule structures of `V` and its dual:
    /// `y x - <y_-1, x_-1> x_0 y_0 = <y, x> + <y_-2, x_-2> <y_0, S(x_0)> x_-1 y_-1`.
    pub fn cross_rule(&self, b: Letter, a: Letter) -> DoubleElem {
        let g = GroupData::s3();
        let ta = a.transposition();
        let mut out = DoubleElem::zero();
        if a == b {
            out.add_scaled(&QuantumDouble::one(), &Cyc::one());
        }
        for (f, sign, c) in y_coaction(b) {
            // <d_f, a> picks f = a in the correction term.
            if f == ta {
                let xy = self.mul(&self.x_letter(a), &self.y_letter(c));
                out.add_scaled(&xy, &Cyc::int(sign));
            }
            // Coproduct d_f = sum_t d_t (x) d_{t^-1 f}; <d_t, a> picks t = a.
            let pairing = pair_with_antipode(c, a);
            if pairing != 0 {
                let term = QuantumDouble::group_delta(ta, g.mul(g.inv(ta), f));
                out.add_scaled(&term, &Cyc::int(sign * pairing));
            }
        }
        out
    }
}

/// Outcome of an associativity sample.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AssociativitySample {
    pub seed: u64,
    pub triples: usize,
    pub nonzero: usize,
    pub failures: usize,
}

/// A basis element, or `x . g . y` summed over all projections, with short
/// monomials favoured so that most products are nonzero.
fn sample_element(rng: &mut rand_chacha::ChaCha8Rng) -> DoubleElem {
    use rand::Rng;
    let d = QuantumDouble::get();
    let mut short = || loop {
        let p = Pbw::from_index(rng.gen_range(0..12));
        if p.len() <= 2 || rng.gen_bool(0.2) {
            return p;
        }
    };
    let (x, y) = (short(), short());
    let (g, h) = (Elem(rng.gen_range(0..6)), Elem(rng.gen_range(0..6)));
    if rng.gen_bool(0.5) {
        return DoubleElem::basis(DoubleBasis { x, g, h, y });
    }
    let middle = d.mul(&QuantumDouble::x_mono(x), &QuantumDouble::group(g));
    d.mul(&middle, &QuantumDouble::y_mono(y))
}

/// Checks `(ab)c = a(bc)` on `count` seeded triples.
pub fn sample_associativity(seed: u64, count: usize) -> AssociativitySample {
    use rand::SeedableRng;
    let d = QuantumDouble::get();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = AssociativitySample {
        seed,
        triples: count,
        ..Default::default()
    };
    for _ in 0..count {
        let [a, b, c] = [(); 3].map(|_| sample_element(&mut rng));
        let left = d.mul(&d.mul(&a, &b), &c);
        if left != d.mul(&a, &d.mul(&b, &c)) {
            out.failures += 1;
        }
        out.nonzero += usize::from(!left.is_zero());
    }
    out
}

/// Coaction of `y_b` in the form `sum_f d_f (x) sign * y_c`.
pub fn y_coaction(b: Letter) -> Vec<(Elem, i64, Letter)> {
    let g = GroupData::s3();
    g.elements()
        .map(|f| {
            let c = Letter::from_transposition(g.conj(g.inv(f), b.transposition()));
            (f, g.sign(f), c)
        })
        .collect()
}

/// `<y_c, S(x_a)>` with the bosonization antipode `S(x_a) = -(a^-1 . x_a) # a^-1`.
fn pair_with_antipode(c: Letter, a: Letter) -> i64 {
    let g = GroupData::s3();
    let (s, image) = a.conjugate(g.inv(a.transposition()));
    if image == c {
        -s
    } else {
        0
    }
}

/// `<y, x>` for elements of degree one, with `<y_i, x_j> = [i = j]`.
pub fn pairing(y: &AlgElem, x: &AlgElem) -> Cyc {
    Letter::ALL
        .iter()
        .map(|&l| {
            let p = Pbw::from_letters(&[l]).expect("letter");
            y.coeff(p) * x.coeff(p)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::s3::*;
    use Letter::*;

    fn qd() -> &'static QuantumDouble {
        QuantumDouble::get()
    }

    #[test]
    fn yx_same_letter() {
        let d = qd();
        let lhs = d.mul(&d.y_letter(L12), &d.x_letter(L12));
        let mut rhs = QuantumDouble::one();
        rhs.add_scaled(&QuantumDouble::group_delta(T12, T12), &Cyc::one());
        rhs.add_scaled(&QuantumDouble::group_delta(T12, E), &Cyc::int(-1));
        rhs.add_scaled(&d.mul(&d.x_letter(L12), &d.y_letter(L12)), &Cyc::int(-1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn yx_different_letters() {
        let d = qd();
        let g = GroupData::s3();
        let lhs = d.mul(&d.y_letter(L13), &d.x_letter(L12));
        let mut rhs = QuantumDouble::group_delta(T12, T13);
        rhs.add_scaled(
            &QuantumDouble::group_delta(T12, g.mul(T13, T12)),
            &Cyc::int(-1),
        );
        rhs.add_scaled(&d.mul(&d.x_letter(L12), &d.y_letter(L23)), &Cyc::int(-1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_past_group() {
        let g = GroupData::s3();
        let d = qd();
        let lhs = d.mul(&QuantumDouble::delta(SIGMA), &QuantumDouble::group(TAU));
        let rhs = d.mul(
            &QuantumDouble::group(TAU),
            &QuantumDouble::delta(g.conj(g.inv(TAU), SIGMA)),
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cross_rule_matches_straightening() {
        let d = qd();
        for b in Letter::ALL {
            for a in Letter::ALL {
                let direct = d.mul(&d.y_letter(b), &d.x_letter(a));
                assert_eq!(direct, d.cross_rule(b, a), "y{b:?} x{a:?}");
            }
        }
    }

    #[test]
    fn adjoint_examples() {
        let d = qd();
        let n = Nichols::fk3();
        let x12 = n.word(&[L12]);
        let y12 = n.word(&[L12]);
        let y13 = n.word(&[L13]);
        let neg = {
            let mut e = AlgElem::zero();
            e.add_scaled(&x12, &Cyc::int(-1));
            e
        };
        assert_eq!(d.adjoint_x(&QuantumDouble::group(SIGMA), &x12), Some(neg));
        assert_eq!(
            d.adjoint_y(&QuantumDouble::delta(T13), &y13),
            Some(y13.clone())
        );
        assert_eq!(
            d.adjoint_y(&QuantumDouble::group(TAU), &y12),
            Some(n.word(&[L23]))
        );
    }

    #[test]
    fn render_basis() {
        let b = DoubleBasis {
            x: Pbw::from_letters(&[L12, L13]).unwrap(),
            g: T12,
            h: T13,
            y: Pbw::from_letters(&[L23]).unwrap(),
        };
        assert_eq!(b.render(), "x12*x13 . (12)d[(13)] . y23");
        assert_eq!(b.z_degree(), -1);
    }

    #[test]
    fn seeded_sample_is_reproducible() {
        let a = sample_associativity(11, 60);
        assert_eq!(a, sample_associativity(11, 60));
        assert_eq!(a.failures, 0);
        assert!(a.nonzero > 0);
    }
}
