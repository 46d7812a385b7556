use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::dp::{extract_dps, DependencyPair};
use super::embed::{embeds_strict, embeds_weak};
use super::graph::{build_graph, DependencyGraph};
use super::scc::{find_cycle_within, is_nontrivial, sccs};
use crate::typing::ValidatedSystem;

/// Recursive index per symbol, 1-based.
pub type IndexAssignment = BTreeMap<String, usize>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Decrease {
    Strict,
    Weak,
}

/// A successful check of one SCC.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccCertificate {
    pub nodes: BTreeSet<usize>,
    pub indices: IndexAssignment,
    pub decrease: BTreeMap<usize, Decrease>,
}

impl SccCertificate {
    pub fn strict_nodes(&self) -> BTreeSet<usize> {
        self.decrease
            .iter()
            .filter(|(_, d)| **d == Decrease::Strict)
            .map(|(n, _)| *n)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SccFailure {
    /// The pair at `node` has no weak decrease at the chosen positions.
    NoDecrease {
        node: usize,
        lhs: String,
        rhs: String,
    },
    /// The symbol has no index to choose.
    MissingIndex { node: usize, symbol: String },
    /// A cycle without any strict decrease.
    StrictFreeCycle { cycle: Vec<usize> },
}

impl fmt::Display for SccFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SccFailure::NoDecrease { node, lhs, rhs } => {
                write!(f, "n{node}: `{lhs}` does not embed `{rhs}`")
            }
            SccFailure::MissingIndex { node, symbol } => {
                write!(f, "n{node}: no recursive index for `{symbol}`")
            }
            SccFailure::StrictFreeCycle { cycle } => {
                let names: Vec<String> = cycle.iter().map(|n| format!("n{n}")).collect();
                write!(f, "cycle {} has no strict decrease", names.join(" → "))
            }
        }
    }
}

fn classify(
    dp: &DependencyPair,
    node: usize,
    iota: &IndexAssignment,
) -> Result<Decrease, SccFailure> {
    let pick = |sym: &str, args: &[crate::syntax::Pattern]| {
        iota.get(sym)
            .and_then(|&i| i.checked_sub(1))
            .and_then(|i| args.get(i).cloned())
            .ok_or_else(|| SccFailure::MissingIndex {
                node,
                symbol: sym.to_string(),
            })
    };
    let p = pick(&dp.lhs_symbol, &dp.lhs_args)?;
    let q = pick(&dp.rhs_symbol, &dp.rhs_args)?;
    if embeds_strict(&p, &q) {
        Ok(Decrease::Strict)
    } else if embeds_weak(&p, &q) {
        Ok(Decrease::Weak)
    } else {
        Err(SccFailure::NoDecrease {
            node,
            lhs: p.to_string(),
            rhs: q.to_string(),
        })
    }
}

/// Checks the decrease condition on an SCC for a fixed index assignment:
/// every pair decreases weakly and every cycle contains a strict pair.
pub fn check_scc(
    scc: &BTreeSet<usize>,
    g: &DependencyGraph,
    iota: &IndexAssignment,
) -> Result<SccCertificate, SccFailure> {
    let mut decrease = BTreeMap::new();
    for &n in scc {
        decrease.insert(n, classify(&g.nodes[n], n, iota)?);
    }
    let weak_only: BTreeSet<usize> = decrease
        .iter()
        .filter(|(_, d)| **d == Decrease::Weak)
        .map(|(n, _)| *n)
        .collect();
    if let Some(cycle) = find_cycle_within(g, &weak_only) {
        return Err(SccFailure::StrictFreeCycle { cycle });
    }
    Ok(SccCertificate {
        nodes: scc.clone(),
        indices: iota.clone(),
        decrease,
    })
}

/// No index assignment works for an SCC.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotFound {
    pub search_space: usize,
    /// Symbols with no recursive argument.
    pub zero_arity: Vec<String>,
    /// The assignment that got furthest, with why it failed.
    pub near_miss: Option<(IndexAssignment, SccFailure)>,
}

impl fmt::Display for NotFound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.zero_arity.is_empty() {
            return write!(
                f,
                "no recursive argument for {}",
                self.zero_arity.join(", ")
            );
        }
        write!(
            f,
            "none of the {} index assignments works",
            self.search_space
        )?;
        if let Some((iota, why)) = &self.near_miss {
            let shown: Vec<String> = iota.iter().map(|(s, i)| format!("{s}={i}")).collect();
            write!(f, "; closest: {} ({why})", shown.join(", "))?;
        }
        Ok(())
    }
}

/// Recursive arity of each lhs symbol of the SCC.
fn arities(scc: &BTreeSet<usize>, g: &DependencyGraph) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for &n in scc {
        let dp = &g.nodes[n];
        out.insert(dp.lhs_symbol.clone(), dp.lhs_args.len());
    }
    for &n in scc {
        out.entry(g.nodes[n].rhs_symbol.clone()).or_insert(0);
    }
    out
}

/// Searches index assignments deterministically (symbols in order, indices
/// ascending), pruning as soon as a fully indexed pair fails.
pub fn find_indices(
    scc: &BTreeSet<usize>,
    g: &DependencyGraph,
) -> Result<SccCertificate, NotFound> {
    let ar = arities(scc, g);
    let zero_arity: Vec<String> = ar
        .iter()
        .filter(|(_, k)| **k == 0)
        .map(|(s, _)| s.clone())
        .collect();
    let search_space = ar.values().fold(1usize, |acc, &k| acc.saturating_mul(k));
    if !zero_arity.is_empty() {
        return Err(NotFound {
            search_space: 0,
            zero_arity,
            near_miss: None,
        });
    }
    let symbols: Vec<(&String, usize)> = ar.iter().map(|(s, k)| (s, *k)).collect();
    let mut best: Option<(usize, IndexAssignment, SccFailure)> = None;
    let mut iota = IndexAssignment::new();
    let found = search(0, &symbols, scc, g, &mut iota, &mut best);
    found.ok_or_else(|| NotFound {
        search_space,
        zero_arity: Vec::new(),
        near_miss: best.map(|(_, i, f)| (i, f)),
    })
}

fn note(
    best: &mut Option<(usize, IndexAssignment, SccFailure)>,
    depth: usize,
    f: SccFailure,
    iota: &IndexAssignment,
) {
    if best.as_ref().is_none_or(|(d, _, _)| depth > *d) {
        *best = Some((depth, iota.clone(), f));
    }
}

fn search(
    depth: usize,
    symbols: &[(&String, usize)],
    scc: &BTreeSet<usize>,
    g: &DependencyGraph,
    iota: &mut IndexAssignment,
    best: &mut Option<(usize, IndexAssignment, SccFailure)>,
) -> Option<SccCertificate> {
    if depth == symbols.len() {
        return match check_scc(scc, g, iota) {
            Ok(c) => Some(c),
            Err(f) => {
                note(best, depth, f, iota);
                None
            }
        };
    }
    let (sym, k) = symbols[depth];
    for i in 1..=k {
        iota.insert(sym.clone(), i);
        let failing = scc.iter().find_map(|&n| {
            let dp = &g.nodes[n];
            let touches = dp.lhs_symbol == *sym || dp.rhs_symbol == *sym;
            if touches && iota.contains_key(&dp.lhs_symbol) && iota.contains_key(&dp.rhs_symbol) {
                classify(dp, n, iota).err()
            } else {
                None
            }
        });
        match failing {
            Some(f) => note(best, depth, f, iota),
            None => {
                if let Some(c) = search(depth + 1, symbols, scc, g, iota, best) {
                    return Some(c);
                }
            }
        }
    }
    iota.remove(sym.as_str());
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Terminating,
    Unknown,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Terminating => "TERMINATING",
            Outcome::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccFailureReport {
    pub nodes: BTreeSet<usize>,
    pub reason: NotFound,
}

/// Result of the criterion with its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    /// Every SCC in order of least member.
    pub sccs: Vec<BTreeSet<usize>>,
    /// One per nontrivial SCC that passed.
    pub certificates: Vec<SccCertificate>,
    /// Nontrivial SCCs without a valid index assignment.
    pub failures: Vec<SccFailureReport>,
}

impl Verdict {
    pub fn is_terminating(&self) -> bool {
        self.outcome == Outcome::Terminating
    }

    pub fn first_failure(&self) -> Option<&SccFailureReport> {
        self.failures.first()
    }

    pub fn strict_nodes(&self) -> BTreeSet<usize> {
        self.certificates
            .iter()
            .flat_map(|c| c.strict_nodes())
            .collect()
    }
}

/// Applies the criterion to every nontrivial SCC; trivial SCCs are exempt.
pub fn check_graph(g: &DependencyGraph) -> Verdict {
    let all = sccs(g);
    let mut certificates = Vec::new();
    let mut failures = Vec::new();
    for scc in all.iter().filter(|s| is_nontrivial(s, g)) {
        match find_indices(scc, g) {
            Ok(c) => certificates.push(c),
            Err(reason) => failures.push(SccFailureReport {
                nodes: scc.clone(),
                reason,
            }),
        }
    }
    Verdict {
        outcome: if failures.is_empty() {
            Outcome::Terminating
        } else {
            Outcome::Unknown
        },
        sccs: all,
        certificates,
        failures,
    }
}

/// Dependency pairs, graph and verdict of a validated system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub graph: DependencyGraph,
    pub verdict: Verdict,
}

pub fn analyze(sys: &ValidatedSystem) -> Analysis {
    let graph = build_graph(extract_dps(sys));
    let verdict = check_graph(&graph);
    Analysis { graph, verdict }
}

pub fn check_criterion(sys: &ValidatedSystem) -> Verdict {
    analyze(sys).verdict
}
