use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::syntax::{Pattern, Signature, SpineArg, Term};
use crate::typing::{ValidatedRule, ValidatedSystem};

/// `f♯(p1,..,pk) → g♯(q1,..,ql)`.
///
/// `lhs_args` has the recursive arity of `f`; `rhs_args` is the full list of
/// call-site pattern arguments of `g`. Variables are canonically named.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependencyPair {
    pub lhs_symbol: String,
    pub lhs_args: Vec<Pattern>,
    pub rhs_symbol: String,
    pub rhs_args: Vec<Pattern>,
    /// Indices of the rules this pair arises from, ascending.
    pub origin_rules: Vec<usize>,
}

impl DependencyPair {
    /// Equality ignoring the origin rules.
    pub fn same_pair(&self, other: &DependencyPair) -> bool {
        self.lhs_symbol == other.lhs_symbol
            && self.lhs_args == other.lhs_args
            && self.rhs_symbol == other.rhs_symbol
            && self.rhs_args == other.rhs_args
    }
}

impl fmt::Display for DependencyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |ps: &[Pattern]| {
            ps.iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "{}♯({}) → {}♯({})",
            self.lhs_symbol,
            list(&self.lhs_args),
            self.rhs_symbol,
            list(&self.rhs_args)
        )
    }
}

/// `i`-th canonical variable name: `a`..`z`, then `v26`, `v27`, ...
pub fn canonical_var(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("v{i}")
    }
}

fn canonicalize(lhs: &[Pattern], rhs: &[Pattern]) -> (Vec<Pattern>, Vec<Pattern>) {
    let mut order = Vec::new();
    for p in lhs.iter().chain(rhs) {
        p.vars_in_order(&mut order);
    }
    let map: BTreeMap<String, Pattern> = order
        .into_iter()
        .enumerate()
        .map(|(i, v)| (v, Pattern::Var(canonical_var(i))))
        .collect();
    (
        lhs.iter().map(|p| p.subst(&map)).collect(),
        rhs.iter().map(|p| p.subst(&map)).collect(),
    )
}

/// One occurrence of a declared symbol in a right-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CallSite {
    pub pair: DependencyPair,
    /// Term arguments applied at the occurrence, in order.
    pub args: Vec<Term>,
    /// The occurrence lies under a lambda or pattern abstraction.
    pub under_binder: bool,
}

struct Raw {
    symbol: String,
    patterns: Vec<Pattern>,
    args: Vec<Term>,
    under_binder: bool,
}

// Pre-order walk over the rhs. Pattern variables bound by `/\` are renamed
// apart from the lhs variables.
fn calls(
    t: &Term,
    sig: &Signature,
    bound: &mut Vec<(String, String)>,
    depth: usize,
    counter: &mut usize,
    out: &mut Vec<Raw>,
) {
    let (head, args) = t.spine();
    if let Term::Sym(g) = head {
        if let Some(d) = sig.get(g) {
            let n = d.quantifiers();
            // later entries win, so inner binders shadow outer ones
            let map: BTreeMap<String, Pattern> = bound
                .iter()
                .map(|(from, to)| (from.clone(), Pattern::Var(to.clone())))
                .collect();
            let patterns: Vec<Pattern> = args
                .iter()
                .filter_map(|a| match a {
                    SpineArg::Pattern(p) => Some(p.subst(&map)),
                    SpineArg::Term(_) => None,
                })
                .take(n)
                .collect();
            let term_args = args
                .iter()
                .filter_map(|a| match a {
                    SpineArg::Term(t) => Some((*t).clone()),
                    SpineArg::Pattern(_) => None,
                })
                .collect();
            out.push(Raw {
                symbol: g.clone(),
                patterns,
                args: term_args,
                under_binder: depth > 0,
            });
        }
    }
    match head {
        Term::Lam(_, _, body) => calls(body, sig, bound, depth + 1, counter, out),
        Term::PatLam(a, body) => {
            *counter += 1;
            bound.push((a.clone(), format!("#{counter}")));
            calls(body, sig, bound, depth + 1, counter, out);
            bound.pop();
        }
        _ => {}
    }
    for a in args {
        if let SpineArg::Term(a) = a {
            calls(a, sig, bound, depth, counter, out);
        }
    }
}

/// Every occurrence of a declared symbol in the rhs of a validated rule,
/// in pre-order, with its dependency pair.
pub fn call_sites(vr: &ValidatedRule, sig: &Signature) -> Vec<CallSite> {
    let mut raw = Vec::new();
    calls(&vr.rule.rhs, sig, &mut Vec::new(), 0, &mut 0, &mut raw);
    raw.into_iter()
        .map(|r| {
            let (lhs_args, rhs_args) = canonicalize(&vr.min.recursive_patterns, &r.patterns);
            CallSite {
                pair: DependencyPair {
                    lhs_symbol: vr.rule.head.clone(),
                    lhs_args,
                    rhs_symbol: r.symbol,
                    rhs_args,
                    origin_rules: vec![vr.index],
                },
                args: r.args,
                under_binder: r.under_binder,
            }
        })
        .collect()
}

/// Dependency pairs of a validated system, one per occurrence of a
/// declared symbol in a right-hand side, deduplicated up to renaming.
pub fn extract_dps(sys: &ValidatedSystem) -> Vec<DependencyPair> {
    let sig = &sys.system.signature;
    let mut dps: Vec<DependencyPair> = Vec::new();
    for vr in &sys.rules {
        for site in call_sites(vr, sig) {
            match dps.iter_mut().find(|d| d.same_pair(&site.pair)) {
                Some(d) => {
                    if !d.origin_rules.contains(&vr.index) {
                        d.origin_rules.push(vr.index);
                    }
                }
                None => dps.push(site.pair),
            }
        }
    }
    dps
}

/// Symbols occurring as lhs or rhs symbol of the given pairs.
pub fn symbols_of<'a>(dps: impl IntoIterator<Item = &'a DependencyPair>) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for d in dps {
        out.insert(d.lhs_symbol.clone());
        out.insert(d.rhs_symbol.clone());
    }
    out
}
