//! Checks of the submodule lattices of `M(sigma,-)`, `M(tau,0)`, `M(e,rho)` and
//! `M(e,+)` against their explicit generators.

use serde::Serialize;

use crate::status::Status;

use super::named::{e_rho_alternative, named_generators, NamedVector};
use super::{
    closure, composition_factors, highest_weights, is_homogeneous, lowest_weights,
    maximal_submodule, socle, weight_closure, weights_of, weights_of_quotient, Direction,
};
use crate::group::{s3, GroupData, Weight};
use crate::linalg::{add, scaled, sub, Subspace, Vector};
use crate::nichols::Letter::{L12, L13};
use crate::scalar::Cyc;
use crate::verma::{Generator, VermaModule};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub claim: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeNode {
    pub name: String,
    pub dim: usize,
    pub contains: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct LatticeReport {
    pub lattice: Vec<LatticeNode>,
    pub checks: Vec<Check>,
}

impl LatticeReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn errata(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Erratum)
    }

    pub(super) fn push_check(&mut self, claim: impl Into<String>, ok: bool) {
        self.check(claim, ok);
    }

    fn check(&mut self, claim: impl Into<String>, ok: bool) {
        self.checks.push(Check {
            claim: claim.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: None,
        });
    }

    /// Records `Erratum` when only the corrected form holds.
    fn check_corrected(
        &mut self,
        claim: impl Into<String>,
        literal: bool,
        corrected: bool,
        note: &str,
    ) {
        let status = Status::of(literal, corrected);
        self.checks.push(Check {
            claim: claim.into(),
            status,
            detail: (status == Status::Erratum).then(|| note.to_string()),
        });
    }

    fn check_eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        claim: impl Into<String>,
        got: T,
        want: T,
    ) {
        let ok = got == want;
        self.checks.push(Check {
            claim: claim.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: (!ok).then(|| format!("got {got:?}, expected {want:?}")),
        });
    }

    fn node(&mut self, name: &str, space: &Subspace, known: &[(String, Subspace)]) {
        let contains = known
            .iter()
            .filter(|(n, s)| n != name && s.is_subspace_of(space))
            .map(|(n, _)| n.clone())
            .collect();
        self.lattice.push(LatticeNode {
            name: name.into(),
            dim: space.dim(),
            contains,
        });
    }

    fn nodes(&mut self, spaces: Vec<(String, Subspace)>) {
        for (name, s) in &spaces {
            self.node(name, s, &spaces);
        }
    }
}

struct Ctx<'a> {
    m: &'a VermaModule,
    names: Vec<NamedVector>,
}

impl Ctx<'_> {
    fn get(&self, name: &str) -> Vector {
        self.names
            .iter()
            .find(|n| n.name == name)
            .unwrap_or_else(|| panic!("generator {name}"))
            .vector
            .clone()
    }

    fn closure(&self, names: &[&str]) -> Subspace {
        let gens: Vec<Vector> = names.iter().map(|n| self.get(n)).collect();
        closure(self.m, &gens)
    }

    /// `D(G)`-span of one named vector.
    fn dg(&self, name: &str) -> Subspace {
        self.m
            .dg_module()
            .span_of(GroupData::s3(), &[self.get(name)])
    }

    fn act(&self, op: Generator, v: &[Cyc]) -> Vector {
        self.m.apply(op, v)
    }

    fn weights(&self, s: &Subspace) -> Vec<Weight> {
        weights_of(self.m, s).unwrap_or_default()
    }
}

fn ws(ids: &[&str]) -> Vec<Weight> {
    let g = GroupData::s3();
    let mut v: Vec<Weight> = ids
        .iter()
        .map(|s| g.parse_weight(s).expect("weight"))
        .collect();
    v.sort();
    v
}

fn sorted(mut v: Vec<Weight>) -> Vec<Weight> {
    v.sort();
    v
}

fn direct_sum(parts: &[&Subspace]) -> (Subspace, bool) {
    let n = parts[0].ambient();
    let total = parts.iter().fold(Subspace::new(n), |acc, s| acc.sum(s));
    let independent = parts.iter().map(|s| s.dim()).sum::<usize>() == total.dim();
    (total, independent)
}

fn z(k: i64) -> Cyc {
    Cyc::zeta_pow(k)
}

fn group(g: crate::group::Elem) -> Generator {
    Generator::Group(g)
}

fn sigma_minus(r: &mut LatticeReport, c: &Ctx) {
    let m = c.m;
    let full = Subspace::full(m.dim());
    let soc = socle(m);
    let msoc = Subspace::spanned_by(m.dim(), m.soc_generators());
    let (n1, n2, rr) = (c.dg("n1"), c.dg("n2"), c.dg("r"));
    let (named_soc, indep) = direct_sum(&[&msoc, &n1, &n2, &rr]);
    r.check(
        "socle = M_soc + N1 + N2 + R, direct",
        indep && named_soc == soc,
    );
    r.check_eq("dim socle", soc.dim(), 10);

    let vqn = c.closure(&["v"]);
    r.check_eq("dim closure(v)", vqn.dim(), 17);
    r.check(
        "closure(v) = closure(q) = closure(n0)",
        vqn == c.closure(&["q"]) && vqn == c.closure(&["n0"]),
    );
    let (named, indep) = direct_sum(&[&soc, &c.dg("v"), &c.dg("q"), &c.dg("n0")]);
    r.check("closure(v) = S + V + Q + N0, direct", indep && named == vqn);

    let opu = c.closure(&["o0"]);
    r.check_eq("dim closure(o0)", opu.dim(), 17);
    r.check(
        "closure(o0) = closure(u) = closure(p)",
        opu == c.closure(&["u"]) && opu == c.closure(&["p"]),
    );
    let (named, indep) = direct_sum(&[&soc, &c.dg("u"), &c.dg("p"), &c.dg("o0")]);
    r.check(
        "closure(o0) = S + U + P + O0, direct",
        indep && named == opu,
    );

    let t10 = c.closure(&["me1"]);
    let t01 = c.closure(&["me3"]);
    for (name, t) in [("me1", &t10), ("me3", &t01)] {
        let (named, indep) = direct_sum(&[&soc, &c.dg(name)]);
        r.check(
            format!("closure({name}) = D(G) {name} + S, dim 11"),
            indep && named == *t && t.dim() == 11,
        );
    }
    let t11 = closure(m, &[add(&c.get("me1"), &c.get("me3"))]);
    r.check(
        "closure(me1 + me3) is not homogeneous",
        !is_homogeneous(m, &t11),
    );
    r.check("closure(me1 + me3) has dim 11", t11.dim() == 11);

    let x = maximal_submodule(m);
    let named_x = opu.sum(&vqn).sum(&t10).sum(&t01);
    r.check_eq("dim X", x.dim(), 26);
    r.check(
        "X = closure(o0) + closure(v) + closure(me1) + closure(me3)",
        named_x == x,
    );

    // identities among the generators
    let v = c.get("v");
    let q = c.get("q");
    let rv = c.get("r");
    let x12v = c.act(Generator::X(L12), &v);
    let s_x12v = c.act(group(s3::SIGMA), &x12v);
    let t13 = |w: &[Cyc]| c.act(group(s3::T13), w);
    let d = z(-1) - z(1);
    r.check(
        "(1+sigma) x12 v = (z^-1 - z) q",
        add(&x12v, &s_x12v) == scaled(&q, &d),
    );
    r.check("(1-sigma) x12 v = (13) r", sub(&x12v, &s_x12v) == t13(&rv));
    let lhs = scaled(&c.act(Generator::Y(L12), &q), &Cyc::from_ratio(1, 2));
    let mid = scaled(
        &c.act(Generator::Y(L12), &c.act(Generator::Y(L13), &c.get("n0"))),
        &Cyc::from_ratio(1, 3),
    );
    let rhs = scaled(
        &sub(&v, &c.act(group(s3::SIGMA), &v)),
        &d.inv().expect("nonzero"),
    );
    r.check(
        "y12 q / 2 = y12 y13 n0 / 3 = (z^-1 - z)^-1 (1-sigma) v",
        lhs == mid && mid == rhs,
    );
    for l in 0..3 {
        let got = c.act(Generator::Y(L12), &c.get(&format!("o{l}")));
        let printed = m.vector(&[(&[], 1, z(-l) - z(l))]);
        let corrected = m.vector(&[(&[], 1, z(l) - z(-l))]);
        r.check_corrected(
            format!("y12 o{l} = (z^-{l} - z^{l}) m23"),
            got == printed,
            got == corrected,
            "holds with the opposite sign (z^l - z^-l) m23",
        );
    }
    let (e1, e3) = (c.get("me1"), c.get("me3"));
    let minus_13r = scaled(&t13(&rv), &Cyc::int(-1));
    r.check(
        "y12 me1 = 0",
        crate::linalg::is_zero(&c.act(Generator::Y(L12), &e1)),
    );
    r.check(
        "y12 me3 = -(13) r",
        c.act(Generator::Y(L12), &e3) == minus_13r,
    );
    r.check(
        "x12 me1 = -(13) r",
        c.act(Generator::X(L12), &e1) == minus_13r,
    );
    let x13o = c.act(Generator::X(L13), &c.get("o0"));
    let s_x13o = c.act(group(s3::SIGMA), &x13o);
    r.check(
        "(1+sigma) x13 o0 = -p",
        add(&x13o, &s_x13o) == scaled(&c.get("p"), &Cyc::int(-1)),
    );
    r.check("(1-sigma) x13 o0 = (13) r", sub(&x13o, &s_x13o) == t13(&rv));

    // sample generators from the case analysis of submodules
    let uv = closure(m, &[add(&c.get("u"), &v)]);
    r.check(
        "closure(u + v) = closure(o0) + closure(v), dim 24",
        uv == opu.sum(&vqn) && uv.dim() == 24,
    );
    let no = closure(m, &[add(&c.get("n1"), &c.get("o1"))]);
    r.check("closure(n1 + o1) = M", no == full);
    let top = m.vector(&[(&[], 0, Cyc::one())]);
    r.check(
        "closure(m12 + r) = M",
        closure(m, &[add(&top, &rv)]) == full,
    );
    let on = closure(m, &[add(&c.get("o0"), &c.get("n0"))]);
    r.check(
        "closure(o0 + n0) within closure(o0) + closure(v)",
        on.is_subspace_of(&opu.sum(&vqn)),
    );

    let ho = weight_closure(m, &c.dg("o0"), Direction::Highest);
    r.check(
        "weight closure of D(G) o0 = closure(o0), dim 17",
        ho.is_ok_and(|s| s == opu && s.dim() == 17),
    );

    r.check_eq(
        "head weights",
        sorted(weights_of_quotient(m, &full, &x).unwrap_or_default()),
        ws(&["sigma-", "tau1", "tau2", "sigma-"]),
    );
    r.check_eq(
        "socle weights",
        c.weights(&soc),
        ws(&["sigma-", "tau1", "tau2", "sigma-"]),
    );
    r.check_eq(
        "composition factors",
        composition_factors(m),
        ws(&["sigma-", "tau0", "erho", "e+", "e+", "sigma-"]),
    );

    r.nodes(vec![
        ("M".into(), full),
        ("X".into(), x),
        ("closure(o0)".into(), opu),
        ("closure(v)".into(), vqn),
        ("closure(me1)".into(), t10),
        ("closure(me3)".into(), t01),
        ("closure(me1+me3)".into(), t11),
        ("S".into(), soc),
        ("M_soc".into(), closure(m, &m.soc_generators())),
    ]);
}

/// Shared shape of `M(tau,0)` and `M(e,rho)`: `X` generated by a family of three
/// degree -1 vectors, `S` generated by one degree -2 vector and its `sigma` image.
fn three_plus_one(
    r: &mut LatticeReport,
    c: &Ctx,
    family: &[&str],
    alternative: Option<Vec<Vector>>,
    seed: &str,
    factors: &[&str],
    head: &[&str],
) {
    let m = c.m;
    let full = Subspace::full(m.dim());
    let x = maximal_submodule(m);
    let soc = socle(m);
    let xf = c.closure(family);
    let alt_ok = alternative.is_some_and(|alt| closure(m, &alt) == x);
    r.check_corrected(
        format!("X = closure({}), dim 17", family.join(",")),
        xf == x && x.dim() == 17,
        alt_ok && x.dim() == 17,
        "holds with x_{sigma tau^i} in place of x_{sigma tau^(i+2)}",
    );
    let s = c.closure(&[seed]);
    let sigma_seed = format!("sigma.{seed}");
    r.check_eq(format!("dim closure({seed})"), s.dim(), 7);
    r.check(
        format!("S = closure({seed}) = closure({sigma_seed})"),
        s == soc && s == c.closure(&[&sigma_seed]),
    );
    r.check_eq("composition factors", composition_factors(m), ws(factors));
    r.check_eq(
        "head weights",
        sorted(weights_of_quotient(m, &full, &x).unwrap_or_default()),
        ws(head),
    );
    r.nodes(vec![
        ("M".into(), full),
        ("X".into(), x),
        ("S".into(), soc),
        ("M_soc".into(), closure(m, &m.soc_generators())),
    ]);
}

fn e_plus(r: &mut LatticeReport, c: &Ctx) {
    let m = c.m;
    let full = Subspace::full(m.dim());
    let soc = socle(m);
    let x = maximal_submodule(m);
    r.check_eq("dim socle", soc.dim(), 1);
    r.check("S = M_soc", soc == c.closure(&["soc"]));
    r.check_eq("dim X", x.dim(), 11);
    r.check(
        "X = closure(x12 m, x13 m, x23 m)",
        x == c.closure(&["x12", "x13", "x23"]),
    );
    r.check_eq(
        "composition factors",
        composition_factors(m),
        ws(&["e+", "sigma-", "e+"]),
    );
    r.nodes(vec![("M".into(), full), ("X".into(), x), ("S".into(), soc)]);
}

/// Runs every check available for `m`. Weights without a known lattice get an
/// empty report.
pub fn verify_lattice(m: &VermaModule) -> LatticeReport {
    let mut r = LatticeReport::default();
    let Ok(names) = named_generators(m) else {
        return r;
    };
    let c = Ctx { m, names };
    match GroupData::s3().weight_id(m.weight()).as_str() {
        "sigma-" => sigma_minus(&mut r, &c),
        "tau0" => {
            let head = ["tau0", "sigma+", "erho"];
            three_plus_one(
                &mut r,
                &c,
                &["j0", "j1", "j2"],
                None,
                "g",
                &["tau0", "sigma-", "erho"],
                &head,
            );
        }
        "erho" => {
            let alt = e_rho_alternative(m).into_iter().map(|n| n.vector).collect();
            let head = ["erho", "sigma+", "tau0"];
            three_plus_one(
                &mut r,
                &c,
                &["e0", "e1", "e2"],
                Some(alt),
                "c",
                &["erho", "sigma-", "tau0"],
                &head,
            );
        }
        "e+" => e_plus(&mut r, &c),
        _ => {}
    }
    engine_agreement(&mut r, &c);
    r
}

/// The weight-by-weight closure agrees with the generic one on every named
/// generator killed by the `y`'s, and on the socle from `M_soc`.
fn engine_agreement(r: &mut LatticeReport, c: &Ctx) {
    let m = c.m;
    let mut agree = true;
    let mut used = Vec::new();
    for n in &c.names {
        let span = c.dg(&n.name);
        if let Ok(s) = weight_closure(m, &span, Direction::Highest) {
            agree &= s == closure(m, std::slice::from_ref(&n.vector));
            used.push(n.name.clone());
        }
    }
    let msoc = Subspace::spanned_by(m.dim(), m.soc_generators());
    agree &= weight_closure(m, &msoc, Direction::Lowest).is_ok_and(|s| s == socle(m));
    r.check(
        format!("weight closure = closure for M_soc and {}", used.join(",")),
        agree,
    );
}

/// `L(a) ≅ S(b)` compared through weights of the head of `M(a)` and the socle of
/// `M(b)`, together with highest and lowest weights.
pub fn head_socle_match(a: &VermaModule, b: &VermaModule) -> bool {
    let full_a = Subspace::full(a.dim());
    let xa = maximal_submodule(a);
    let sb = socle(b);
    let zero_b = Subspace::new(b.dim());
    let head_w = weights_of_quotient(a, &full_a, &xa).map(sorted);
    let soc_w = weights_of(b, &sb).map(sorted);
    head_w.is_ok()
        && head_w == soc_w
        && highest_weights(a, &full_a, &xa).ok() == highest_weights(b, &sb, &zero_b).ok()
        && lowest_weights(a, &full_a, &xa).ok() == lowest_weights(b, &sb, &zero_b).ok()
}
