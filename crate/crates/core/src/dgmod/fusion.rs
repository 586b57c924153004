use std::fmt;

use serde::Serialize;

use crate::error::GroupError;
use crate::group::{GroupData, Weight};
use crate::status::Status;

use super::{make_simple, tensor, weights};

/// One product of simple modules and the weights of its summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionEntry {
    pub left: Weight,
    pub right: Weight,
    pub summands: Vec<Weight>,
}

/// A fusion rule to be checked, `left x right = summands` as multisets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRule {
    pub left: Weight,
    pub right: Weight,
    pub summands: Vec<Weight>,
}

impl FusionRule {
    pub fn display(&self, g: &GroupData) -> String {
        let rhs: Vec<String> = self.summands.iter().map(|&w| g.weight_id(w)).collect();
        format!(
            "{} x {} = {}",
            g.weight_id(self.left),
            g.weight_id(self.right),
            rhs.join(" + ")
        )
    }

    /// Parses one line such as `sigma- x sigma+ = e- + erho + tau0 + tau1 + tau2`.
    pub fn parse(g: &GroupData, line: &str) -> Result<FusionRule, GroupError> {
        let syntax = || GroupError::Syntax {
            line: 0,
            msg: format!("bad fusion rule `{line}`"),
        };
        let (lhs, rhs) = line.split_once('=').ok_or_else(syntax)?;
        let (l, r) = lhs.split_once(" x ").ok_or_else(syntax)?;
        let mut summands = rhs
            .split('+')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| g.parse_weight(s))
            .collect::<Result<Vec<_>, _>>();
        // `+` also appears inside weight names such as `e+`.
        if summands.is_err() {
            summands = rhs
                .split(" + ")
                .map(|s| g.parse_weight(s.trim()))
                .collect::<Result<Vec<_>, _>>();
        }
        let mut summands = summands?;
        summands.sort();
        Ok(FusionRule {
            left: g.parse_weight(l)?,
            right: g.parse_weight(r)?,
            summands,
        })
    }

    /// Parses a list of rules, one per line; `#` starts a comment.
    pub fn parse_list(g: &GroupData, text: &str) -> Result<Vec<FusionRule>, GroupError> {
        text.lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(|l| FusionRule::parse(g, l))
            .collect()
    }
}

impl fmt::Display for FusionEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rule = FusionRule {
            left: self.left,
            right: self.right,
            summands: self.summands.clone(),
        };
        f.write_str(&rule.display(GroupData::s3()))
    }
}

/// All products of pairs of simple modules.
pub fn fusion_table(g: &GroupData) -> Vec<FusionEntry> {
    let simples: Vec<_> = g
        .weights()
        .into_iter()
        .map(|w| (w, make_simple(g, w)))
        .collect();
    let mut out = Vec::new();
    for (a, ma) in &simples {
        for (b, mb) in &simples {
            out.push(FusionEntry {
                left: *a,
                right: *b,
                summands: weights(g, &tensor(g, ma, mb)),
            });
        }
    }
    out
}

/// The fusion rules for `S3` as stated in the literature, one instance per
/// parameter value.
pub fn listed_fusion_rules() -> Vec<FusionRule> {
    let g = GroupData::s3();
    let mut lines: Vec<String> = vec![
        "e- x e- = e+".into(),
        "sigma+ x e- = sigma-".into(),
        "sigma- x e- = sigma+".into(),
        "erho x e- = erho".into(),
        "sigma- x sigma- = e+ + erho + tau0 + tau1 + tau2".into(),
        "sigma- x sigma+ = e- + erho + tau0 + tau1 + tau2".into(),
        "sigma- x erho = sigma+ + sigma-".into(),
    ];
    for l in 0..3 {
        lines.push(format!("tau{l} x e- = tau{l}"));
        lines.push(format!("tau{l} x tau{l} = e+ + e- + tau{}", (2 * l) % 3));
        lines.push(format!(
            "tau{l} x erho = tau{} + tau{}",
            (l + 1) % 3,
            (l + 2) % 3
        ));
        lines.push(format!("tau{l} x sigma- = sigma+ + sigma-"));
        lines.push(format!("sigma- x tau{l} = sigma+ + sigma-"));
        lines.push(format!("tau{l} x sigma+ = sigma+ + sigma-"));
        for m in 0..3 {
            if m != l {
                lines.push(format!("tau{l} x tau{m} = erho + tau{}", 3 - l - m));
            }
        }
    }
    lines
        .iter()
        .map(|l| FusionRule::parse(g, l).expect("well-formed rule"))
        .collect()
}

/// Pairs `(listed, corrected)` for the misprinted rules `tau_l x tau_l`,
/// `l = 1, 2`, whose third summand is `tau_l`, not `tau_{2l}`.
pub fn fusion_corrections() -> Vec<(FusionRule, FusionRule)> {
    let g = GroupData::s3();
    let rule = |s: String| FusionRule::parse(g, &s).expect("well-formed rule");
    (1..3)
        .map(|l| {
            (
                rule(format!("tau{l} x tau{l} = e+ + e- + tau{}", (2 * l) % 3)),
                rule(format!("tau{l} x tau{l} = e+ + e- + tau{l}")),
            )
        })
        .collect()
}

/// One rule compared with the table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleCheck {
    pub rule: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<String>,
}

/// Checks every rule; a mismatch counts as an erratum only when the rule is a
/// known misprint and the table agrees with its correction.
pub fn check_fusion_rules(table: &[FusionEntry], rules: &[FusionRule]) -> Vec<RuleCheck> {
    let g = GroupData::s3();
    let corrections = fusion_corrections();
    rules
        .iter()
        .map(|r| {
            let entry = table
                .iter()
                .find(|e| e.left == r.left && e.right == r.right);
            let agrees = |rule: &FusionRule| entry.is_some_and(|e| e.summands == rule.summands);
            let corrected = corrections
                .iter()
                .find(|(listed, _)| listed == r)
                .is_some_and(|(_, fixed)| agrees(fixed));
            let status = Status::of(agrees(r), corrected);
            RuleCheck {
                rule: r.display(g),
                status,
                computed: (status != Status::Pass).then(|| {
                    entry.map_or("missing".into(), |e| {
                        FusionRule {
                            left: e.left,
                            right: e.right,
                            summands: e.summands.clone(),
                        }
                        .display(g)
                    })
                }),
            }
        })
        .collect()
}

/// Compares rules against a computed table; returns the rules that disagree.
pub fn mismatched_rules<'a>(table: &[FusionEntry], rules: &'a [FusionRule]) -> Vec<&'a FusionRule> {
    rules
        .iter()
        .filter(|r| {
            table
                .iter()
                .find(|e| e.left == r.left && e.right == r.right)
                .is_none_or(|e| e.summands != r.summands)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_handles_plus_in_names() {
        let g = GroupData::s3();
        let r = FusionRule::parse(g, "tau1 x tau1 = e+ + e- + tau2").unwrap();
        assert_eq!(r.summands.len(), 3);
        assert_eq!(FusionRule::parse(g, &r.display(g)).unwrap(), r);
    }

    #[test]
    fn listed_rules_hold_up_to_two_misprints() {
        let g = GroupData::s3();
        let checks = check_fusion_rules(&fusion_table(g), &listed_fusion_rules());
        let errata: Vec<&str> = checks
            .iter()
            .filter(|c| c.status == Status::Erratum)
            .map(|c| c.rule.as_str())
            .collect();
        assert_eq!(
            errata,
            [
                "tau1 x tau1 = e+ + e- + tau2",
                "tau2 x tau2 = e+ + e- + tau1"
            ]
        );
        assert!(checks.iter().all(|c| c.status != Status::Fail));
        let mut wrong = listed_fusion_rules();
        wrong[0].summands = wrong[1].summands.clone();
        assert_eq!(
            check_fusion_rules(&fusion_table(g), &wrong)[0].status,
            Status::Fail
        );
    }

    #[test]
    fn table_has_all_products_with_right_dimensions() {
        let g = GroupData::s3();
        let t = fusion_table(g);
        assert_eq!(t.len(), 64);
        for e in &t {
            let lhs = g.simple_dim(e.left) * g.simple_dim(e.right);
            let rhs: usize = e.summands.iter().map(|&w| g.simple_dim(w)).sum();
            assert_eq!(lhs, rhs);
        }
    }
}
