use std::collections::BTreeMap;

use serde::Serialize;

use crate::analysis::{Analysis, DependencyPair, Outcome};
use crate::typing::{Diagnostic, ValidatedRule};

pub const SCHEMA_VERSION: u32 = 1;

/// JSON report of `check`.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub schema_version: u32,
    pub command: &'static str,
    pub file: String,
    /// `TERMINATING`, `UNKNOWN`, `INVALID` or `PARSE_ERROR`.
    pub outcome: &'static str,
    pub diagnostics: Vec<Diagnostic>,
    pub rules: Vec<RuleReport>,
    pub dependency_pairs: Vec<DpReport>,
    pub edges: Vec<[usize; 2]>,
    pub sccs: Vec<SccReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl Report {
    pub fn new(command: &'static str, file: &str) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            file: file.to_string(),
            outcome: "PARSE_ERROR",
            diagnostics: Vec::new(),
            rules: Vec::new(),
            dependency_pairs: Vec::new(),
            edges: Vec::new(),
            sccs: Vec::new(),
            oracle: None,
            timing: None,
        }
    }

    pub fn fill_analysis(&mut self, a: &Analysis) {
        self.outcome = match a.verdict.outcome {
            Outcome::Terminating => "TERMINATING",
            Outcome::Unknown => "UNKNOWN",
        };
        self.dependency_pairs = a
            .graph
            .nodes
            .iter()
            .enumerate()
            .map(|(i, d)| DpReport::new(i, d))
            .collect();
        self.edges = a.graph.edges().map(|(x, y)| [x, y]).collect();
        self.sccs = scc_reports(a);
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ContextEntry {
    pub var: String,
    #[serde(rename = "type")]
    pub ty: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RuleReport {
    pub index: usize,
    pub line: usize,
    pub head: String,
    pub context: Vec<ContextEntry>,
    pub recursive_patterns: Vec<String>,
    pub lhs_type: String,
    pub rhs_type: String,
}

impl RuleReport {
    pub fn new(v: &ValidatedRule) -> RuleReport {
        RuleReport {
            index: v.index,
            line: v.rule.span.line,
            head: v.rule.head.clone(),
            context: v
                .min
                .context
                .entries()
                .iter()
                .map(|(x, t)| ContextEntry {
                    var: x.clone(),
                    ty: t.to_string(),
                })
                .collect(),
            recursive_patterns: v
                .min
                .recursive_patterns
                .iter()
                .map(|p| p.to_string())
                .collect(),
            lhs_type: v.min.lhs_type.to_string(),
            rhs_type: v.rhs_type.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DpReport {
    pub id: usize,
    pub label: String,
    pub lhs_symbol: String,
    pub lhs_args: Vec<String>,
    pub rhs_symbol: String,
    pub rhs_args: Vec<String>,
    pub origin_rules: Vec<usize>,
}

impl DpReport {
    pub fn new(id: usize, d: &DependencyPair) -> DpReport {
        DpReport {
            id,
            label: d.to_string(),
            lhs_symbol: d.lhs_symbol.clone(),
            lhs_args: d.lhs_args.iter().map(|p| p.to_string()).collect(),
            rhs_symbol: d.rhs_symbol.clone(),
            rhs_args: d.rhs_args.iter().map(|p| p.to_string()).collect(),
            origin_rules: d.origin_rules.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SccReport {
    pub nodes: Vec<usize>,
    pub nontrivial: bool,
    /// `certified`, `failed` or `exempt`.
    pub status: &'static str,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub indices: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub strict: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub weak: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

fn scc_reports(a: &Analysis) -> Vec<SccReport> {
    let v = &a.verdict;
    v.sccs
        .iter()
        .map(|scc| {
            let nodes: Vec<usize> = scc.iter().copied().collect();
            if let Some(c) = v.certificates.iter().find(|c| c.nodes == *scc) {
                let strict = c.strict_nodes();
                SccReport {
                    nodes,
                    nontrivial: true,
                    status: "certified",
                    indices: c.indices.clone(),
                    weak: scc
                        .iter()
                        .filter(|n| !strict.contains(n))
                        .copied()
                        .collect(),
                    strict: strict.into_iter().collect(),
                    failure: None,
                }
            } else if let Some(f) = v.failures.iter().find(|f| f.nodes == *scc) {
                SccReport {
                    nodes,
                    nontrivial: true,
                    status: "failed",
                    indices: BTreeMap::new(),
                    strict: Vec::new(),
                    weak: Vec::new(),
                    failure: Some(f.reason.to_string()),
                }
            } else {
                SccReport {
                    nodes,
                    nontrivial: false,
                    status: "exempt",
                    indices: BTreeMap::new(),
                    strict: Vec::new(),
                    weak: Vec::new(),
                    failure: None,
                }
            }
        })
        .collect()
}

/// Empirical normalization of every symbol on small ground trees.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleReport {
    pub depth: usize,
    pub samples: usize,
    pub fuel_exhausted: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Timing {
    pub millis: f64,
}
