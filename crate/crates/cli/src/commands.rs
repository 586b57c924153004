use std::fmt::Write as _;
use std::path::Path;

use anyhow::Context;
use fkverma::dgmod::{
    check_fusion_rules, decompose, fusion_table, listed_fusion_rules, FusionRule,
};
use fkverma::double::sample_associativity;
use fkverma::nichols::{Letter, Nichols, Pbw, Poly};
use fkverma::structure::{simple_dims, ModuleReport};
use fkverma::verma::{self, top_scalar_claims, VermaModule, VermaReport};
use fkverma::{GroupData, Status, Weight};
use rayon::prelude::*;
use serde_json::json;

use crate::output::Report;

const ASSOCIATIVITY_SAMPLES: usize = 500;

fn g() -> &'static GroupData {
    GroupData::s3()
}

fn ids(ws: &[Weight]) -> Vec<String> {
    ws.iter().map(|&w| g().weight_id(w)).collect()
}

fn weight(id: &str) -> Weight {
    g().parse_weight(id).expect("known weight id")
}

pub fn fusion(golden: Option<&Path>) -> anyhow::Result<Report> {
    let rules = match golden {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            FusionRule::parse_list(g(), &text)
                .with_context(|| format!("parsing {}", path.display()))?
        }
        None => listed_fusion_rules(),
    };
    let table = fusion_table(g());
    let mut r = Report::new("fusion");
    for e in &table {
        let _ = writeln!(
            r.body,
            "{:<6} x {:<6} = {}",
            g().weight_id(e.left),
            g().weight_id(e.right),
            ids(&e.summands).join(" + ")
        );
    }
    let checks = check_fusion_rules(&table, &rules);
    for c in &checks {
        r.check(
            c.rule.clone(),
            c.status,
            c.computed.as_ref().map(|s| format!("computed {s}")),
        );
    }
    r.data = json!({
        "table": table.iter().map(|e| json!({
            "left": g().weight_id(e.left),
            "right": g().weight_id(e.right),
            "summands": ids(&e.summands),
        })).collect::<Vec<_>>(),
        "rules": checks,
    });
    Ok(r)
}

fn render_word(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|l| format!("x{}", l.subscript())).collect()
}

fn render_poly(p: &Poly) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.iter()
        .map(|(w, c)| format!("({c}) {}", render_word(w)))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn nichols_info() -> Report {
    let n = Nichols::fk3();
    let mut r = Report::new("nichols");
    let dims = n.graded_dims();
    let _ = writeln!(r.body, "dimension {}, graded dimensions {dims:?}", n.dim());
    let basis: Vec<String> = Pbw::all().map(|p| p.render('x')).collect();
    let _ = writeln!(r.body, "PBW basis: {}", basis.join(", "));
    let rules: Vec<String> = n
        .rewrite_system()
        .rules()
        .iter()
        .map(|rule| format!("{} -> {}", render_word(&rule.lhs), render_poly(&rule.rhs)))
        .collect();
    let _ = writeln!(r.body, "rewriting rules ({}):", rules.len());
    for line in &rules {
        let _ = writeln!(r.body, "  {line}");
    }
    let expected: [&[&str]; 5] = [
        &["e+"],
        &["sigma-"],
        &["tau1", "tau2"],
        &["sigma-"],
        &["e+"],
    ];
    let mut pieces = Vec::new();
    for (deg, want) in expected.iter().enumerate() {
        let mut got: Vec<Weight> = decompose(g(), &n.graded_module(deg, 'x'))
            .into_iter()
            .map(|s| s.weight)
            .collect();
        got.sort();
        let got = ids(&got);
        let _ = writeln!(r.body, "degree {deg}: {}", got.join(" + "));
        r.check_bool(
            format!("degree {deg} piece is {}", want.join(" + ")),
            got == *want,
        );
        pieces.push(got);
    }
    r.check_bool(
        "graded dimensions are 1, 3, 4, 3, 1",
        dims == [1, 3, 4, 3, 1],
    );
    r.check_bool(
        "PBW words are in normal form",
        Pbw::all().all(|p| n.rewrite_system().is_normal(&p.letters())),
    );
    r.data = json!({
        "dimension": n.dim(),
        "graded_dims": dims,
        "pbw_basis": basis,
        "rewriting_rules": rules,
        "graded_pieces": pieces,
    });
    r
}

pub fn verma(weights: &[Weight]) -> Report {
    let mut r = Report::new("verma");
    let reports: Vec<VermaReport> = weights
        .par_iter()
        .map(|&w| VermaReport::new(&VermaModule::build(w)))
        .collect();
    for (vr, &w) in reports.iter().zip(weights) {
        let _ = writeln!(
            r.body,
            "{}: dim {}, graded {:?}",
            vr.weight, vr.dimension, vr.graded_dims
        );
        for (n, ws) in vr.graded_weights.iter().enumerate() {
            let _ = writeln!(r.body, "  degree {n}: {}", ws.join(" + "));
        }
        for line in &vr.y_top_x_top {
            let _ = writeln!(r.body, "  {} {line}", vr.y_top);
        }
        r.check_bool(
            format!("dim M{} = 12 dim {}", g().weight_label(w), vr.weight),
            vr.dimension == 12 * g().simple_dim(w),
        );
    }
    r.data = json!(reports);
    r
}

pub fn lattice(weights: &[Weight]) -> Report {
    let mut r = Report::new("lattice");
    let reports: Vec<ModuleReport> = weights
        .par_iter()
        .map(|&w| ModuleReport::new(&VermaModule::build(w)))
        .collect();
    for mr in &reports {
        let _ = writeln!(
            r.body,
            "{}: dim {}, simple {}, head {} [{}], socle {} [{}], factors [{}]",
            mr.weight,
            mr.dim,
            mr.simple,
            mr.head.dim,
            mr.head.weights.join(", "),
            mr.socle.dim,
            mr.socle.weights.join(", "),
            mr.factors.join(", "),
        );
        for node in &mr.lattice {
            let _ = writeln!(r.body, "  {} (dim {})", node.name, node.dim);
        }
        for c in &mr.checks {
            r.check(
                format!("{}: {}", mr.weight, c.claim),
                c.status,
                c.detail.clone(),
            );
        }
    }
    r.data = json!(reports);
    r
}

/// Dimensions of the simple modules as stated, keyed by weight id.
const STATED_SIMPLE_DIMS: [(&str, usize); 8] = [
    ("e+", 1),
    ("e-", 12),
    ("erho", 7),
    ("sigma+", 36),
    ("sigma-", 10),
    ("tau0", 7),
    ("tau1", 24),
    ("tau2", 24),
];

pub fn simples() -> Report {
    let mut r = Report::new("simples");
    let dims = simple_dims();
    let mut rows = Vec::new();
    for (id, stated) in STATED_SIMPLE_DIMS {
        let got = dims[&weight(id)];
        let _ = writeln!(r.body, "L{}: dim {got}", g().weight_label(weight(id)));
        r.check_bool(
            format!("dim L{} = {stated}", g().weight_label(weight(id))),
            got == stated,
        );
        rows.push(json!({ "weight": id, "dim": got }));
    }
    r.data = json!(rows);
    r
}

pub fn verify_appendix() -> Report {
    let report = verma::verify_appendix();
    let mut r = Report::new("appendix");
    let _ = writeln!(
        r.body,
        "{} rows: {} match, {} errata, {} fail",
        report.lines_checked, report.matching, report.errata, report.failures
    );
    for res in &report.results {
        let detail = match (&res.corrected, res.mismatches.first()) {
            (Some(fix), _) => Some(format!("corrected: {fix}")),
            (None, Some(m)) => Some(m.clone()),
            _ => None,
        };
        r.check(format!("{}: {}", res.table, res.line), res.status, detail);
    }
    r.data = json!(report);
    r
}

fn top_scalars() -> Report {
    let mut r = Report::new("simplicity scalars");
    let claims = top_scalar_claims();
    for c in &claims {
        let computed = c
            .computed
            .as_ref()
            .map_or("not a multiple".to_string(), |v| v.to_string());
        r.check(
            format!(
                "{}: y_top x_top {} = {} {}",
                c.weight, c.symbol, c.stated, c.symbol
            ),
            c.status,
            (c.status != Status::Pass).then(|| format!("computed {computed}")),
        );
    }
    r.data = json!(claims);
    r
}

fn associativity(seed: u64) -> Report {
    let mut r = Report::new("double");
    let s = sample_associativity(seed, ASSOCIATIVITY_SAMPLES);
    let _ = writeln!(
        r.body,
        "seed {}: {} triples, {} nonzero products",
        s.seed, s.triples, s.nonzero
    );
    r.check_bool(
        format!("associativity on {} sampled triples", s.triples),
        s.failures == 0,
    );
    r.data = json!(s);
    r
}

pub fn verify_all(seed: u64) -> Report {
    let all = g().weights();
    let jobs: Vec<Box<dyn Fn() -> Report + Send + Sync>> = vec![
        Box::new(nichols_info),
        Box::new(|| fusion(None).expect("built-in rules need no IO")),
        Box::new(|| verma(&all)),
        Box::new(simples),
        Box::new(|| lattice(&all)),
        Box::new(verify_appendix),
        Box::new(top_scalars),
        Box::new(move || associativity(seed)),
    ];
    let parts: Vec<Report> = jobs.par_iter().map(|job| job()).collect();
    Report::merge("verify-all", parts)
}
