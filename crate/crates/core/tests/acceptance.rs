//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! A criterion passes only if every stated value holds as written. Values that
//! are known misprints show up as errata: the criterion prints FAIL, and the
//! run still succeeds provided the errata are exactly the documented ones and
//! each corrected form holds. Any other mismatch makes the run fail.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;

use fkverma::dgmod::{check_fusion_rules, decompose, fusion_table, listed_fusion_rules, tensor};
use fkverma::double::{pairing, sample_associativity, QuantumDouble};
use fkverma::nichols::{AlgElem, Letter, Nichols};
use fkverma::structure::{
    closure, head, head_socle_match, is_homogeneous, maximal_submodule, named_generator,
    simple_dims, ModuleReport,
};
use fkverma::verma::{top_scalar_claims, verify_appendix};
use fkverma::{Cyc, Status, Weight};

use common::oracle::{action_map, degree_three_map, ideal, tensor_vector, words};
use common::{all_vermas, g, verma, weight, weights};

const SEED: u64 = 0xacce_5500;

/// Misprints whose corrected form is verified; `(criterion, claim)`.
const DOCUMENTED_ERRATA: [(u8, &str); 9] = [
    (3, "tau1 x tau1 = e+ + e- + tau2"),
    (3, "tau2 x tau2 = e+ + e- + tau1"),
    (4, "e-rho: x13x12 => -z^s x23 m-"),
    (4, "sigma-23: x12x13x23 => 1 x13x23 m23; -1-s x12x13 m23"),
    (4, "tau-132: x13x23 => z^l x12 m123; -1 x13 m132"),
    (5, "sigma+: y_top x_top = 2"),
    (7, "erho: X = closure(e0,e1,e2), dim 17"),
    (7, "sigma-: y12 o1 = (z^-1 - z^1) m23"),
    (7, "sigma-: y12 o2 = (z^-2 - z^2) m23"),
];

struct Criterion {
    number: u8,
    title: &'static str,
    checks: Vec<(String, Status)>,
}

impl Criterion {
    fn new(number: u8, title: &'static str) -> Self {
        Criterion {
            number,
            title,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, claim: impl Into<String>, ok: bool) {
        self.checks
            .push((claim.into(), if ok { Status::Pass } else { Status::Fail }));
    }

    fn status(&mut self, claim: impl Into<String>, status: Status) {
        self.checks.push((claim.into(), status));
    }

    fn with(&self, s: Status) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.1 == s)
            .map(|c| c.0.as_str())
            .collect()
    }

    fn passes(&self) -> bool {
        self.checks.iter().all(|c| c.1 == Status::Pass)
    }

    fn line(&self) -> String {
        let verdict = if self.passes() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{verdict} criterion {}: {} ({} checks)",
            self.number,
            self.title,
            self.checks.len()
        );
        let errata = self.with(Status::Erratum);
        if !errata.is_empty() {
            s += &format!(
                "; misprinted as stated, corrected form holds: {}",
                errata.join(" | ")
            );
        }
        let fails = self.with(Status::Fail);
        if !fails.is_empty() {
            s += &format!("; FAILED: {}", fails.join(" | "));
        }
        s
    }
}

fn id(w: Weight) -> String {
    g().weight_id(w)
}

fn nichols() -> Criterion {
    let mut c = Criterion::new(1, "Nichols algebra dimensions and rewriting");
    let n = Nichols::fk3();
    for prefix in ['x', 'y'] {
        let dims: Vec<usize> = (0..=4).map(|k| n.graded_module(k, prefix).dim()).collect();
        c.check(
            format!("{prefix}: graded dims (1,3,4,3,1)"),
            dims == [1, 3, 4, 3, 1],
        );
        c.check(
            format!("{prefix}: dim 12"),
            n.full_module(prefix).dim() == 12,
        );
    }
    c.check("dim 12", n.dim() == 12);
    for len in 0..=4 {
        let i = ideal(len);
        let ok = words(len)
            .iter()
            .all(|w| i.contains(&tensor_vector(len, w, &n.word(w))));
        c.check(
            format!("rewriting matches the quotient on words of length {len}"),
            ok,
        );
    }
    c
}

fn decomposition() -> Criterion {
    let mut c = Criterion::new(2, "D(S3)-decomposition of the graded pieces");
    let n = Nichols::fk3();
    let stated = [
        weights(&["e+"]),
        weights(&["sigma-"]),
        weights(&["tau1", "tau2"]),
        weights(&["sigma-"]),
        weights(&["e+"]),
    ];
    for (deg, want) in stated.iter().enumerate() {
        let mut got: Vec<Weight> = decompose(g(), &n.graded_module(deg, 'x'))
            .into_iter()
            .map(|s| s.weight)
            .collect();
        got.sort();
        c.check(format!("degree {deg}"), &got == want);
    }
    let (simple, piece, map) = degree_three_map();
    c.check(
        "degree-3 assignment is an isomorphism of D(S3)-modules",
        map.is_morphism(g(), &simple, &piece) && map.matrix.rank() == 3,
    );
    c
}

fn fusion() -> Criterion {
    let mut c = Criterion::new(3, "listed fusion rules");
    let table = fusion_table(g());
    c.check("table has 64 entries", table.len() == 64);
    for r in check_fusion_rules(&table, &listed_fusion_rules()) {
        c.status(r.rule, r.status);
    }
    c
}

fn appendix() -> Criterion {
    let mut c = Criterion::new(4, "tables of y12-actions");
    let report = verify_appendix();
    c.check("77 lines", report.lines_checked == 77);
    for r in report.results {
        c.status(format!("{}: {}", r.table, r.line), r.status);
    }
    c
}

fn simplicity() -> Criterion {
    let mut c = Criterion::new(5, "simple Verma modules");
    for claim in top_scalar_claims() {
        c.status(
            format!("{}: y_top x_top = {}", claim.weight, claim.stated),
            claim.status,
        );
    }
    for (w, dim) in [("e-", 12), ("sigma+", 36), ("tau1", 24), ("tau2", 24)] {
        let m = verma(w);
        c.check(format!("{w}: dim {dim}"), m.dim() == dim);
        c.check(
            format!("{w}: maximal submodule is 0"),
            maximal_submodule(&m).is_zero(),
        );
    }
    c
}

/// Weights of `B(V) (x) L` for a simple `D(S3)`-module `L`, from the fusion
/// table and the graded pieces of `B(V)`.
fn verma_weights(w: Weight) -> Vec<Weight> {
    let table = fusion_table(g());
    let n = Nichols::fk3();
    let mut out: Vec<Weight> = (0..=4)
        .flat_map(|deg| decompose(g(), &n.graded_module(deg, 'x')))
        .flat_map(|s| {
            table
                .iter()
                .find(|e| e.left == s.weight && e.right == w)
                .map(|e| e.summands.clone())
                .unwrap_or_default()
        })
        .collect();
    out.sort();
    out
}

fn simple_modules() -> Criterion {
    let mut c = Criterion::new(6, "simple module dimensions and weights");
    let dims = simple_dims();
    let stated_heads: [(&str, usize, Option<&[&str]>); 8] = [
        ("e+", 1, Some(&["e+"])),
        ("e-", 12, None),
        ("erho", 7, Some(&["erho", "sigma+", "tau0"])),
        ("sigma+", 36, None),
        ("sigma-", 10, Some(&["sigma-", "tau1", "tau2", "sigma-"])),
        ("tau0", 7, Some(&["tau0", "sigma+", "erho"])),
        ("tau1", 24, None),
        ("tau2", 24, None),
    ];
    for (w, dim, stated) in stated_heads {
        let m = verma(w);
        c.check(format!("dim L{w} = {dim}"), dims[&weight(w)] == dim);
        let mut got = head(&m).1;
        got.sort();
        let want = match stated {
            Some(ids) => weights(ids),
            None => verma_weights(weight(w)),
        };
        let shown: Vec<String> = want.iter().map(|&x| id(x)).collect();
        c.check(
            format!("weights of L{w} = {{{}}}", shown.join(", ")),
            got == want,
        );
    }
    c
}

fn node_dim(r: &ModuleReport, name: &str) -> Option<usize> {
    r.lattice.iter().find(|n| n.name == name).map(|n| n.dim)
}

fn lattices() -> Criterion {
    let mut c = Criterion::new(7, "submodule lattices");
    let stated_factors: [(&str, &[&str], usize); 4] = [
        (
            "sigma-",
            &["sigma-", "sigma-", "e+", "e+", "tau0", "erho"],
            36,
        ),
        ("e+", &["e+", "e+", "sigma-"], 12),
        ("tau0", &["tau0", "sigma-", "erho"], 24),
        ("erho", &["erho", "sigma-", "tau0"], 24),
    ];
    let dims = simple_dims();
    for (w, factors, total) in stated_factors {
        let m = verma(w);
        let r = ModuleReport::new(&m);
        for check in &r.checks {
            c.status(format!("{w}: {}", check.claim), check.status);
        }
        let mut got = fkverma::structure::composition_factors(&m);
        got.sort();
        c.check(format!("{w}: composition factors"), got == weights(factors));
        let sum: usize = got.iter().map(|f| dims[f]).sum();
        c.check(format!("{w}: factor dims sum to {total}"), sum == total);
        let expect: &[(&str, usize)] = match w {
            "sigma-" => &[
                ("S", 10),
                ("closure(o0)", 17),
                ("closure(v)", 17),
                ("closure(me1+me3)", 11),
                ("X", 26),
            ],
            "e+" => &[("S", 1), ("X", 11)],
            _ => &[("S", 7), ("X", 17)],
        };
        for &(name, d) in expect {
            c.check(
                format!("{w}: dim {name} = {d}"),
                node_dim(&r, name) == Some(d),
            );
        }
    }
    let tau0 = verma("tau0");
    let js: Vec<_> = ["j0", "j1", "j2"]
        .iter()
        .map(|n| named_generator(&tau0, n).unwrap())
        .collect();
    c.check(
        "tau0: X = closure(j0,j1,j2)",
        closure(&tau0, &js) == maximal_submodule(&tau0),
    );
    c
}

fn letter(l: Letter) -> AlgElem {
    Nichols::fk3().word(&[l])
}

fn properties() -> Criterion {
    let mut c = Criterion::new(8, "property suites");
    let sample = sample_associativity(SEED, 500);
    c.check(
        format!(
            "associativity on {} seeded triples ({} nonzero)",
            sample.triples, sample.nonzero
        ),
        sample.failures == 0 && sample.triples >= 500,
    );
    let n = Nichols::fk3();
    for m in all_vermas() {
        let w = id(m.weight());
        let relations = Letter::ALL.iter().all(|&b| {
            Letter::ALL.iter().all(|&a| {
                let (lhs, rhs) = m.cross_relation(b, a);
                lhs == rhs
            })
        });
        let conj = g().elements().all(|t| m.conjugation_identity(t));
        c.check(format!("{w}: generator relations"), relations && conj);
        let equivariant = ['x', 'y'].iter().all(|&p| {
            let dom = tensor(g(), &n.graded_module(1, p), m.dg_module());
            action_map(&m, p).is_morphism(g(), &dom, m.dg_module())
        });
        c.check(format!("{w}: action maps are equivariant"), equivariant);
        c.check(
            format!("{w}: maximal submodule is homogeneous"),
            is_homogeneous(&m, &maximal_submodule(&m)),
        );
    }
    let d = QuantumDouble::get();
    let dg = g()
        .elements()
        .map(QuantumDouble::group)
        .chain(g().elements().map(QuantumDouble::delta));
    let mut invariant = true;
    for u in dg {
        let su = d.antipode_dg(&u).unwrap();
        for a in Letter::ALL {
            for b in Letter::ALL {
                let lhs = pairing(&d.adjoint_y(&u, &letter(b)).unwrap(), &letter(a));
                let rhs = pairing(&letter(b), &d.adjoint_x(&su, &letter(a)).unwrap());
                invariant &= lhs == rhs;
            }
        }
    }
    let dual = Letter::ALL.iter().all(|&a| {
        Letter::ALL.iter().all(|&b| {
            let want = if a == b { Cyc::one() } else { Cyc::zero() };
            pairing(&letter(b), &letter(a)) == want
        })
    });
    c.check(
        "pairing of V and its dual is invariant and nondegenerate",
        invariant && dual,
    );
    let m = verma("sigma-");
    let t11 = closure(&m, &[named_generator(&m, "t1,1").unwrap()]);
    c.check("T11 is not homogeneous", !is_homogeneous(&m, &t11));
    for w in ["e+", "e-", "sigma+", "sigma-", "tau1", "tau2"] {
        let m = verma(w);
        c.check(
            format!("head and socle of M{w} match"),
            head_socle_match(&m, &m),
        );
    }
    let (t, e) = (verma("tau0"), verma("erho"));
    c.check("L(tau,0) matches S(e,rho)", head_socle_match(&t, &e));
    c.check("L(e,rho) matches S(tau,0)", head_socle_match(&e, &t));
    c
}

fn main() -> ExitCode {
    let criteria = [
        nichols(),
        decomposition(),
        fusion(),
        appendix(),
        simplicity(),
        simple_modules(),
        lattices(),
        properties(),
    ];
    for c in &criteria {
        println!("{}", c.line());
    }
    let found: BTreeSet<(u8, String)> = criteria
        .iter()
        .flat_map(|c| {
            c.with(Status::Erratum)
                .into_iter()
                .map(|s| (c.number, s.to_string()))
        })
        .collect();
    let documented: BTreeSet<(u8, String)> = DOCUMENTED_ERRATA
        .iter()
        .map(|&(n, s)| (n, s.to_string()))
        .collect();
    let failures: Vec<String> = criteria
        .iter()
        .flat_map(|c| {
            c.with(Status::Fail)
                .into_iter()
                .map(|s| format!("{}: {s}", c.number))
        })
        .collect();
    let mut ok = true;
    if !failures.is_empty() {
        println!("undocumented failures: {failures:?}");
        ok = false;
    }
    if found != documented {
        println!("errata differ from the documented list");
        println!(
            "  unexpected: {:?}",
            found.difference(&documented).collect::<Vec<_>>()
        );
        println!(
            "  missing:    {:?}",
            documented.difference(&found).collect::<Vec<_>>()
        );
        ok = false;
    }
    let passing = criteria.iter().filter(|c| c.passes()).count();
    println!(
        "{passing}/{} criteria pass as stated; {} documented errata",
        criteria.len(),
        found.len()
    );
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
