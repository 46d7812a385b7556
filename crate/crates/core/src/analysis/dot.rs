use std::collections::BTreeMap;
use std::fmt::Write;

use super::criterion::Verdict;
use super::graph::DependencyGraph;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering. With a verdict, nontrivial SCCs become clusters,
/// strict pairs are bold and SCCs without a certificate are red.
pub fn to_dot(g: &DependencyGraph, verdict: Option<&Verdict>) -> String {
    let mut out = String::from("digraph dependencies {\n");
    if g.is_empty() {
        out.push_str("}\n");
        return out;
    }
    out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    let mut cluster_of = BTreeMap::new();
    let mut strict = Default::default();
    if let Some(v) = verdict {
        strict = v.strict_nodes();
        for (i, c) in v.certificates.iter().enumerate() {
            let iota: Vec<String> = c.indices.iter().map(|(s, k)| format!("{s}={k}")).collect();
            writeln!(out, "  subgraph cluster_{i} {{").unwrap();
            writeln!(out, "    label=\"ι: {}\";", escape(&iota.join(", "))).unwrap();
            for n in &c.nodes {
                writeln!(out, "    n{n};").unwrap();
                cluster_of.insert(*n, ());
            }
            out.push_str("  }\n");
        }
        for (i, f) in v.failures.iter().enumerate() {
            writeln!(out, "  subgraph cluster_failed_{i} {{").unwrap();
            writeln!(out, "    label=\"{}\";", escape(&f.reason.to_string())).unwrap();
            out.push_str("    color=red;\n");
            for n in &f.nodes {
                writeln!(out, "    n{n};").unwrap();
            }
            out.push_str("  }\n");
        }
    }
    for (i, dp) in g.nodes.iter().enumerate() {
        let style = if strict.contains(&i) {
            ", style=bold"
        } else {
            ""
        };
        writeln!(
            out,
            "  n{i} [label=\"{}\"{style}];",
            escape(&dp.to_string())
        )
        .unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
