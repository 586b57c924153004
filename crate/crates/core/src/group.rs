//! Finite group data: multiplication table, conjugacy classes, centralizers and
//! their irreducible representations over `Q(z)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::GroupError;
use crate::linalg::Mat;
use crate::scalar::Cyc;

/// Index of a group element in its `GroupData`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Elem(pub usize);

/// A simple `D(G)`-module label: a conjugacy class together with an irrep of its
/// representative's centralizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub class: usize,
    pub irrep: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irrep {
    pub label: String,
    pub dim: usize,
    /// Matrix of each centralizer element.
    pub matrices: BTreeMap<Elem, Mat>,
}

impl Irrep {
    pub fn matrix(&self, h: Elem) -> &Mat {
        &self.matrices[&h]
    }

    pub fn character(&self, h: Elem) -> Cyc {
        let m = self.matrix(h);
        (0..self.dim).map(|i| m.get(i, i)).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub name: String,
    pub rep: Elem,
    pub members: Vec<Elem>,
    pub centralizer: Vec<Elem>,
    /// `transversal[i] * rep * transversal[i]^-1` runs over the class; induced
    /// modules use these as coset representatives.
    pub transversal: Vec<Elem>,
    pub irreps: Vec<Irrep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupData {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: Elem,
    inverse: Vec<usize>,
    sign: Vec<i64>,
    classes: Vec<ConjClass>,
}

/// Element indices of the built-in symmetric group on three letters.
pub mod s3 {
    use super::Elem;
    pub const E: Elem = Elem(0);
    pub const T12: Elem = Elem(1);
    pub const T13: Elem = Elem(2);
    pub const T23: Elem = Elem(3);
    pub const C123: Elem = Elem(4);
    pub const C132: Elem = Elem(5);
    pub const SIGMA: Elem = T12;
    pub const TAU: Elem = C123;
    pub const TRANSPOSITIONS: [Elem; 3] = [T12, T13, T23];

    /// Images of 1, 2, 3 under each element, in index order.
    pub const PERMS: [[usize; 3]; 6] = [
        [1, 2, 3],
        [2, 1, 3],
        [3, 2, 1],
        [1, 3, 2],
        [2, 3, 1],
        [3, 1, 2],
    ];
    pub const NAMES: [&str; 6] = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];
}

impl GroupData {
    /// The symmetric group on three letters, with classes `e`, `sigma = (12)`,
    /// `tau = (123)` and composition read right to left.
    pub fn s3() -> &'static GroupData {
        static S3: OnceLock<GroupData> = OnceLock::new();
        S3.get_or_init(build_s3)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order()).map(Elem)
    }

    pub fn name(&self, g: Elem) -> &str {
        &self.names[g.0]
    }

    pub fn element(&self, name: &str) -> Result<Elem, GroupError> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(Elem)
            .ok_or_else(|| GroupError::UnknownElement(name.to_string()))
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn mul(&self, g: Elem, h: Elem) -> Elem {
        Elem(self.table[g.0][h.0])
    }

    pub fn inv(&self, g: Elem) -> Elem {
        Elem(self.inverse[g.0])
    }

    /// `g h g^-1`.
    pub fn conj(&self, g: Elem, h: Elem) -> Elem {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn pow(&self, g: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(g) } else { g };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    /// The distinguished one-dimensional character (the sign for `S3`).
    pub fn sign(&self, g: Elem) -> i64 {
        self.sign[g.0]
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_of(&self, g: Elem) -> usize {
        self.classes
            .iter()
            .position(|c| c.members.contains(&g))
            .expect("every element lies in a class")
    }

    pub fn weights(&self) -> Vec<Weight> {
        self.classes
            .iter()
            .enumerate()
            .flat_map(|(class, c)| (0..c.irreps.len()).map(move |irrep| Weight { class, irrep }))
            .collect()
    }

    pub fn irrep(&self, w: Weight) -> &Irrep {
        &self.classes[w.class].irreps[w.irrep]
    }

    /// Dimension of the simple `D(G)`-module of weight `w`.
    pub fn simple_dim(&self, w: Weight) -> usize {
        self.classes[w.class].members.len() * self.irrep(w).dim
    }

    /// Short identifier such as `sigma-` or `erho`.
    pub fn weight_id(&self, w: Weight) -> String {
        format!("{}{}", self.classes[w.class].name, self.irrep(w).label)
    }

    /// Display form such as `(sigma,-)`.
    pub fn weight_label(&self, w: Weight) -> String {
        format!("({},{})", self.classes[w.class].name, self.irrep(w).label)
    }

    /// Parses `sigma-`, `(sigma,-)`, `(σ,−)` and similar spellings.
    pub fn parse_weight(&self, s: &str) -> Result<Weight, GroupError> {
        let cleaned: String = s
            .trim()
            .replace('σ', "sigma")
            .replace('τ', "tau")
            .replace('ρ', "rho")
            .replace('−', "-")
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | ',' | ' ' | '_'))
            .collect();
        self.weights()
            .into_iter()
            .find(|&w| self.weight_id(w) == cleaned)
            .ok_or_else(|| GroupError::UnknownWeight(s.to_string()))
    }

    /// Serializes to the plain-text format read by [`GroupData::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("elements {}\n", self.names.join(" ")));
        for (i, row) in self.table.iter().enumerate() {
            let prods: Vec<&str> = row.iter().map(|&j| self.names[j].as_str()).collect();
            out.push_str(&format!("row {} : {}\n", self.names[i], prods.join(" ")));
        }
        let signs: Vec<String> = self
            .names
            .iter()
            .zip(&self.sign)
            .map(|(n, s)| format!("{n} {s}"))
            .collect();
        out.push_str(&format!("sign {}\n", signs.join(" ")));
        for c in &self.classes {
            let tr: Vec<&str> = c.transversal.iter().map(|&g| self.name(g)).collect();
            out.push_str(&format!(
                "class {} {} transversal {}\n",
                self.name(c.rep),
                c.name,
                tr.join(" ")
            ));
            for ir in &c.irreps {
                out.push_str(&format!("irrep {} {} {}\n", c.name, ir.label, ir.dim));
                for (h, m) in &ir.matrices {
                    let entries: Vec<String> = m
                        .to_rows()
                        .into_iter()
                        .flatten()
                        .map(|x| x.to_string())
                        .collect();
                    out.push_str(&format!("  act {} {}\n", self.name(*h), entries.join(", ")));
                }
            }
        }
        out
    }

    /// Reads a group from the plain-text format:
    ///
    /// ```text
    /// elements e a a2
    /// row e : e a a2
    /// row a : a a2 e
    /// row a2 : a2 e a
    /// sign e 1 a 1 a2 1          (optional)
    /// class e e transversal e
    /// irrep e 0 1
    ///   act e 1
    ///   ...
    /// ```
    pub fn parse(text: &str) -> Result<GroupData, GroupError> {
        Parser::default().run(text)
    }

    fn validate_and_finish(
        names: Vec<String>,
        table: Vec<Vec<usize>>,
        sign: Vec<i64>,
        declared: Vec<(Elem, String, Vec<Elem>, Vec<Irrep>)>,
    ) -> Result<GroupData, GroupError> {
        let n = names.len();
        let not_group = |m: &str| GroupError::NotAGroup(m.to_string());
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(not_group("table is not square"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| not_group("no identity"))?;
        let mut inverse = vec![0; n];
        for g in 0..n {
            inverse[g] = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| not_group("missing inverse"))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(not_group("not associative"));
                    }
                }
            }
        }
        for g in 0..n {
            for h in 0..n {
                if sign[table[g][h]] != sign[g] * sign[h] {
                    return Err(not_group("sign is not a character"));
                }
            }
        }
        let mut g = GroupData {
            names,
            table,
            identity: Elem(identity),
            inverse,
            sign,
            classes: Vec::new(),
        };
        let mut covered = vec![false; n];
        for (rep, name, transversal, irreps) in declared {
            let members: Vec<Elem> = {
                let mut m: Vec<Elem> = g.elements().map(|x| g.conj(x, rep)).collect();
                m.sort();
                m.dedup();
                m
            };
            let centralizer: Vec<Elem> = g
                .elements()
                .filter(|&x| g.mul(x, rep) == g.mul(rep, x))
                .collect();
            let mut image: Vec<Elem> = transversal.iter().map(|&x| g.conj(x, rep)).collect();
            image.sort();
            if image != members {
                return Err(GroupError::BadTransversal(g.name(rep).to_string()));
            }
            for m in &members {
                if covered[m.0] {
                    return Err(not_group("class declared twice"));
                }
                covered[m.0] = true;
            }
            check_irreps(&g, rep, &centralizer, &irreps)?;
            g.classes.push(ConjClass {
                name,
                rep,
                members,
                centralizer,
                transversal,
                irreps,
            });
        }
        if covered.iter().any(|c| !c) {
            return Err(not_group("some conjugacy class is not declared"));
        }
        Ok(g)
    }
}

fn check_irreps(
    g: &GroupData,
    rep: Elem,
    centralizer: &[Elem],
    irreps: &[Irrep],
) -> Result<(), GroupError> {
    let bad = |ir: &Irrep, msg: &str| GroupError::BadIrrep {
        rep: g.name(rep).to_string(),
        label: ir.label.clone(),
        msg: msg.to_string(),
    };
    let order = Cyc::int(centralizer.len() as i64);
    let mut dim_sq = 0;
    for ir in irreps {
        if ir.matrices.len() != centralizer.len()
            || centralizer.iter().any(|h| !ir.matrices.contains_key(h))
        {
            return Err(bad(ir, "needs one matrix per centralizer element"));
        }
        if ir
            .matrices
            .values()
            .any(|m| m.nrows() != ir.dim || m.ncols() != ir.dim)
        {
            return Err(bad(ir, "matrix has wrong size"));
        }
        for &a in centralizer {
            for &b in centralizer {
                if ir.matrix(a).mul(ir.matrix(b)) != *ir.matrix(g.mul(a, b)) {
                    return Err(bad(ir, "not a homomorphism"));
                }
            }
        }
        let norm: Cyc = centralizer
            .iter()
            .map(|&h| ir.character(h) * ir.character(h).conj())
            .sum();
        if norm != order {
            return Err(bad(ir, "not irreducible"));
        }
        dim_sq += ir.dim * ir.dim;
    }
    for (i, a) in irreps.iter().enumerate() {
        for b in &irreps[i + 1..] {
            let ip: Cyc = centralizer
                .iter()
                .map(|&h| a.character(h) * b.character(h).conj())
                .sum();
            if !ip.is_zero() {
                return Err(bad(b, "equivalent to an earlier irrep"));
            }
        }
    }
    if dim_sq != centralizer.len() {
        let msg = "irreps do not exhaust the centralizer";
        return Err(GroupError::BadIrrep {
            rep: g.name(rep).to_string(),
            label: String::new(),
            msg: msg.to_string(),
        });
    }
    Ok(())
}

#[derive(Default)]
struct Parser {
    names: Vec<String>,
    rows: BTreeMap<usize, Vec<usize>>,
    sign: Option<Vec<i64>>,
    classes: Vec<(Elem, String, Vec<Elem>, Vec<Irrep>)>,
}

impl Parser {
    fn elem(&self, s: &str, line: usize) -> Result<usize, GroupError> {
        self.names
            .iter()
            .position(|n| n == s)
            .ok_or_else(|| GroupError::Syntax {
                line,
                msg: format!("unknown element `{s}`"),
            })
    }

    fn run(mut self, text: &str) -> Result<GroupData, GroupError> {
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let syn = |msg: &str| GroupError::Syntax {
                line,
                msg: msg.to_string(),
            };
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut words = body.split_whitespace();
            let head = words.next().unwrap_or_default();
            let rest: Vec<&str> = words.collect();
            match head {
                "elements" => self.names.extend(rest.iter().map(|s| s.to_string())),
                "row" => {
                    let (lhs, rhs) = body["row".len()..]
                        .split_once(':')
                        .ok_or_else(|| syn("expected `row <elem> : <products>`"))?;
                    let a = self.elem(lhs.trim(), line)?;
                    let prods = rhs
                        .split_whitespace()
                        .map(|s| self.elem(s, line))
                        .collect::<Result<Vec<_>, _>>()?;
                    self.rows.insert(a, prods);
                }
                "sign" => {
                    if !rest.len().is_multiple_of(2) {
                        return Err(syn("expected pairs `<elem> <+1|-1>`"));
                    }
                    let mut sign = vec![1; self.names.len()];
                    for pair in rest.chunks(2) {
                        let g = self.elem(pair[0], line)?;
                        sign[g] = match pair[1] {
                            "1" | "+1" => 1,
                            "-1" => -1,
                            _ => return Err(syn("sign values must be 1 or -1")),
                        };
                    }
                    self.sign = Some(sign);
                }
                "class" => {
                    if rest.len() < 4 || rest[2] != "transversal" {
                        return Err(syn("expected `class <rep> <name> transversal <elems>`"));
                    }
                    let rep = Elem(self.elem(rest[0], line)?);
                    let tr = rest[3..]
                        .iter()
                        .map(|s| self.elem(s, line).map(Elem))
                        .collect::<Result<Vec<_>, _>>()?;
                    self.classes
                        .push((rep, rest[1].to_string(), tr, Vec::new()));
                }
                "irrep" => {
                    if rest.len() != 3 {
                        return Err(syn("expected `irrep <class> <label> <dim>`"));
                    }
                    let dim: usize = rest[2].parse().map_err(|_| syn("bad dimension"))?;
                    let class = self
                        .classes
                        .iter_mut()
                        .find(|c| c.1 == rest[0])
                        .ok_or_else(|| syn("irrep for an undeclared class"))?;
                    class.3.push(Irrep {
                        label: rest[1].to_string(),
                        dim,
                        matrices: BTreeMap::new(),
                    });
                }
                "act" => {
                    let (g, entries) = body["act".len()..]
                        .trim()
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| syn("expected `act <elem> <entries>`"))?;
                    let g = Elem(self.elem(g, line)?);
                    let vals = entries
                        .split(',')
                        .map(|e| e.parse::<Cyc>())
                        .collect::<Result<Vec<_>, _>>()?;
                    let irrep = self
                        .classes
                        .last_mut()
                        .and_then(|c| c.3.last_mut())
                        .ok_or_else(|| syn("`act` outside an irrep"))?;
                    if vals.len() != irrep.dim * irrep.dim {
                        return Err(syn("wrong number of matrix entries"));
                    }
                    let rows: Vec<Vec<Cyc>> = vals.chunks(irrep.dim).map(<[Cyc]>::to_vec).collect();
                    irrep.matrices.insert(g, Mat::from_rows(&rows));
                }
                other => return Err(syn(&format!("unknown directive `{other}`"))),
            }
        }
        let n = self.names.len();
        let table = (0..n)
            .map(|a| {
                self.rows.remove(&a).ok_or_else(|| {
                    GroupError::NotAGroup(format!("missing row for `{}`", self.names[a]))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let sign = self.sign.unwrap_or_else(|| vec![1; n]);
        GroupData::validate_and_finish(self.names, table, sign, self.classes)
    }
}

fn compose(p: [usize; 3], q: [usize; 3]) -> [usize; 3] {
    // Right to left: apply q first.
    [p[q[0] - 1], p[q[1] - 1], p[q[2] - 1]]
}

fn build_s3() -> GroupData {
    use s3::*;
    let idx = |p: [usize; 3]| PERMS.iter().position(|&x| x == p).expect("closed");
    let table: Vec<Vec<usize>> = (0..6)
        .map(|a| (0..6).map(|b| idx(compose(PERMS[a], PERMS[b]))).collect())
        .collect();
    let sign = vec![1, -1, -1, -1, 1, 1];
    let z = Cyc::zeta_pow;
    let scalar = |c: Cyc| Mat::from_rows(&[vec![c]]);
    let one_dim = |label: &str, vals: &[(Elem, Cyc)]| Irrep {
        label: label.to_string(),
        dim: 1,
        matrices: vals.iter().map(|(g, c)| (*g, scalar(c.clone()))).collect(),
    };
    let all: Vec<Elem> = (0..6).map(Elem).collect();
    let trivial_e = one_dim(
        "+",
        &all.iter().map(|&g| (g, Cyc::one())).collect::<Vec<_>>(),
    );
    let sign_e = one_dim(
        "-",
        &all.iter()
            .map(|&g| (g, Cyc::int(sign[g.0])))
            .collect::<Vec<_>>(),
    );
    // The two-dimensional irrep in the basis (m_tau, m_tau^-1): tau = diag(z, z^2),
    // sigma tau^t sends m_tau to z^t m_tau^-1.
    let zero = Cyc::zero;
    let mut rho = BTreeMap::new();
    for t in 0..3i64 {
        let tau_t = (0..t).fold(E, |acc, _| Elem(table[TAU.0][acc.0]));
        rho.insert(
            tau_t,
            Mat::from_rows(&[vec![z(t), zero()], vec![zero(), z(-t)]]),
        );
        let sigma_tau_t = Elem(table[SIGMA.0][tau_t.0]);
        rho.insert(
            sigma_tau_t,
            Mat::from_rows(&[vec![zero(), z(-t)], vec![z(t), zero()]]),
        );
    }
    let rho_e = Irrep {
        label: "rho".into(),
        dim: 2,
        matrices: rho,
    };
    let sigma_irreps = vec![
        one_dim("+", &[(E, Cyc::one()), (SIGMA, Cyc::one())]),
        one_dim("-", &[(E, Cyc::one()), (SIGMA, Cyc::int(-1))]),
    ];
    let tau_irreps = (0..3)
        .map(|l| {
            one_dim(
                &l.to_string(),
                &[(E, Cyc::one()), (C123, z(l)), (C132, z(2 * l))],
            )
        })
        .collect();
    let declared = vec![
        (E, "e".to_string(), vec![E], vec![trivial_e, sign_e, rho_e]),
        (
            SIGMA,
            "sigma".to_string(),
            vec![E, C123, C132],
            sigma_irreps,
        ),
        (TAU, "tau".to_string(), vec![E, SIGMA], tau_irreps),
    ];
    GroupData::validate_and_finish(
        NAMES.iter().map(|s| s.to_string()).collect(),
        table,
        sign,
        declared,
    )
    .expect("built-in S3 data is valid")
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::s3::*;
    use super::*;

    #[test]
    fn s3_products_follow_right_to_left_convention() {
        let g = GroupData::s3();
        assert_eq!(g.mul(SIGMA, TAU), T23);
        assert_eq!(g.mul(SIGMA, g.pow(TAU, 2)), T13);
        assert_eq!(g.mul(TAU, SIGMA), T13);
        assert_eq!(g.mul(T12, T13), C132);
        assert_eq!(g.mul(T13, T12), C123);
        assert_eq!(g.mul(T12, T23), C123);
        assert_eq!(g.inv(C123), C132);
        assert_eq!(g.pow(TAU, 3), E);
    }

    #[test]
    fn s3_classes_and_centralizers() {
        let g = GroupData::s3();
        let cl = g.classes();
        assert_eq!(cl.len(), 3);
        assert_eq!(cl[1].members, vec![T12, T13, T23]);
        assert_eq!(cl[1].centralizer, vec![E, T12]);
        assert_eq!(cl[2].centralizer, vec![E, C123, C132]);
        assert_eq!(g.weights().len(), 8);
        let dims: Vec<usize> = g.weights().iter().map(|&w| g.simple_dim(w)).collect();
        assert_eq!(dims, vec![1, 1, 2, 3, 3, 2, 2, 2]);
    }

    #[test]
    fn weight_names_parse() {
        let g = GroupData::s3();
        for w in g.weights() {
            assert_eq!(g.parse_weight(&g.weight_id(w)).unwrap(), w);
            assert_eq!(g.parse_weight(&g.weight_label(w)).unwrap(), w);
        }
        assert_eq!(
            g.parse_weight("(σ,−)").unwrap(),
            g.parse_weight("sigma-").unwrap()
        );
        assert!(g.parse_weight("tau3").is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = GroupData::s3();
        let again = GroupData::parse(&g.to_text()).unwrap();
        assert_eq!(&again, g);
    }

    #[test]
    fn parse_rejects_non_irreducible() {
        let text = "elements e a\nrow e : e a\nrow a : a e\nclass e e transversal e\n\
                    irrep e x 2\n act e 1,0,0,1\n act a 1,0,0,1\n\
                    class a a transversal e\nirrep a 0 1\n act e 1\n act a 1\nirrep a 1 1\n act e 1\n act a -1\n";
        assert!(matches!(
            GroupData::parse(text),
            Err(GroupError::BadIrrep { .. })
        ));
    }
}
