use std::fmt::Write as _;
use std::path::Path;

use anyhow::Context;
use fkverma::Status;
use serde_json::{json, Value};

/// One checked claim.
#[derive(Clone, Debug)]
pub struct Line {
    pub claim: String,
    pub status: Status,
    pub detail: Option<String>,
}

/// A titled report: free text, a JSON payload and a list of checks.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub title: String,
    pub body: String,
    pub data: Value,
    pub checks: Vec<Line>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            data: Value::Null,
            ..Default::default()
        }
    }

    pub fn check(&mut self, claim: impl Into<String>, status: Status, detail: Option<String>) {
        self.checks.push(Line {
            claim: claim.into(),
            status,
            detail,
        });
    }

    pub fn check_bool(&mut self, claim: impl Into<String>, ok: bool) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.check(claim, status, None);
    }

    pub fn worst(&self) -> Status {
        self.checks
            .iter()
            .map(|c| c.status)
            .max()
            .unwrap_or(Status::Pass)
    }

    fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: {} checks, {} pass, {} errata, {} fail",
            self.title,
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Erratum),
            self.count(Status::Fail)
        )
    }

    /// Concatenates sections under one title, prefixing their claims.
    pub fn merge(title: &str, parts: Vec<Report>) -> Report {
        let mut out = Report::new(title);
        let mut data = serde_json::Map::new();
        for p in parts {
            let _ = writeln!(out.body, "== {} ==", p.title);
            out.body.push_str(&p.body);
            out.checks.extend(p.checks.iter().map(|c| Line {
                claim: format!("[{}] {}", p.title, c.claim),
                ..c.clone()
            }));
            data.insert(
                p.title.clone(),
                json!({ "data": p.data, "checks": checks_json(&p.checks) }),
            );
        }
        out.data = Value::Object(data);
        out
    }

    pub fn render_text(&self, verbose: bool) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# {}", self.title);
        s.push_str(&self.body);
        for c in &self.checks {
            if verbose || c.status != Status::Pass {
                let _ = write!(s, "{:<8} {}", c.status.to_string(), c.claim);
                if let Some(d) = &c.detail {
                    let _ = write!(s, "  ({d})");
                }
                s.push('\n');
            }
        }
        let _ = writeln!(s, "{}", self.summary_line());
        s
    }

    pub fn render_json(&self) -> String {
        let v = json!({
            "title": self.title,
            "data": self.data,
            "checks": checks_json(&self.checks),
            "summary": {
                "checks": self.checks.len(),
                "pass": self.count(Status::Pass),
                "errata": self.count(Status::Erratum),
                "fail": self.count(Status::Fail),
            }
        });
        let mut s = serde_json::to_string_pretty(&v).expect("serializable");
        s.push('\n');
        s
    }
}

fn checks_json(checks: &[Line]) -> Value {
    checks
        .iter()
        .map(|c| {
            let mut v = json!({ "claim": c.claim, "status": c.status });
            if let Some(d) = &c.detail {
                v["detail"] = json!(d);
            }
            v
        })
        .collect()
}

pub fn write_file(path: &Path, contents: &str) -> anyhow::Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    std::fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("demo");
        r.check_bool("holds", true);
        r.check("misprint", Status::Erratum, Some("fixed".into()));
        r
    }

    #[test]
    fn worst_status_orders_fail_last() {
        let mut r = sample();
        assert_eq!(r.worst(), Status::Erratum);
        r.check_bool("broken", false);
        assert_eq!(r.worst(), Status::Fail);
        assert_eq!(Report::new("empty").worst(), Status::Pass);
    }

    #[test]
    fn text_hides_passes_unless_verbose() {
        let r = sample();
        let quiet = r.render_text(false);
        assert!(!quiet.contains("holds"));
        assert!(quiet.contains("ERRATUM  misprint  (fixed)"));
        assert!(r.render_text(true).contains("PASS     holds"));
        assert!(quiet.ends_with("demo: 2 checks, 1 pass, 1 errata, 0 fail\n"));
    }

    #[test]
    fn merge_prefixes_claims_and_nests_data() {
        let mut a = sample();
        a.data = json!({ "n": 1 });
        let m = Report::merge("all", vec![a, Report::new("other")]);
        assert_eq!(m.checks[1].claim, "[demo] misprint");
        assert_eq!(m.data["demo"]["data"]["n"], 1);
        assert_eq!(m.data["demo"]["checks"][1]["status"], "erratum");
        let v: Value = serde_json::from_str(&m.render_json()).unwrap();
        assert_eq!(v["summary"]["errata"], 1);
    }

    #[test]
    fn write_file_creates_parents() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a/b/c.txt");
        write_file(&path, "x").unwrap();
        assert_eq!(std::fs::read_to_string(path).unwrap(), "x");
    }
}
