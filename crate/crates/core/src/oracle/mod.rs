//! Executable forms of the semantic constructions used in the soundness
//! argument: pattern forms, term matching, pattern valuations, type
//! matching, the embedding preorder on normal forms and size.
//!
//! Nothing here takes part in a verdict; these functions exist to test the
//! checker against its semantics.

mod empirical;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::rewrite::{ErasedTerm, ReductionOutcome, Rewriter};
use crate::syntax::Pattern;
use crate::typing::pattern_sub;

pub use empirical::{empirical_sn, ground_trees, term_arity, SnSample};

/// Finite map from pattern variables to non-empty sets of closed patterns.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Valuation {
    map: BTreeMap<String, BTreeSet<Pattern>>,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ValuationError {
    #[error("`{0}` is not in the domain of the valuation")]
    Unbound(String),
    #[error("`{0}` would be mapped to an empty set")]
    Empty(String),
    #[error("`{1}` assigned to `{0}` is not closed")]
    Open(String, Pattern),
}

impl Valuation {
    pub fn new() -> Valuation {
        Valuation::default()
    }

    pub fn insert(
        &mut self,
        var: impl Into<String>,
        set: BTreeSet<Pattern>,
    ) -> Result<(), ValuationError> {
        let var = var.into();
        if set.is_empty() {
            return Err(ValuationError::Empty(var));
        }
        if let Some(p) = set.iter().find(|p| !p.is_closed()) {
            return Err(ValuationError::Open(var, p.clone()));
        }
        self.map.insert(var, set);
        Ok(())
    }

    pub fn get(&self, var: &str) -> Option<&BTreeSet<Pattern>> {
        self.map.get(var)
    }

    pub fn domain(&self) -> impl Iterator<Item = &String> {
        self.map.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &BTreeSet<Pattern>)> {
        self.map.iter()
    }
}

/// `pat(v)` of a normal form: `bot` if neutral, `leaf`, `node` of the
/// components, `_` for abstractions.
pub fn pattern_form(v: &ErasedTerm) -> Pattern {
    if let Some((l, r)) = v.as_node() {
        return Pattern::node(pattern_form(l), pattern_form(r));
    }
    match v {
        ErasedTerm::Leaf => Pattern::Leaf,
        ErasedTerm::Lam(..) => Pattern::Wildcard,
        _ => Pattern::Bottom,
    }
}

/// `v ⇓ p` for a normal form `v` and a closed pattern `p`.
pub fn term_matches(v: &ErasedTerm, p: &Pattern) -> bool {
    if *p == Pattern::Wildcard || v.is_neutral() {
        return true;
    }
    match (v.as_node(), p) {
        (Some((v1, v2)), Pattern::Node(p1, p2)) => term_matches(v1, p1) && term_matches(v2, p2),
        (None, Pattern::Leaf) => *v == ErasedTerm::Leaf,
        _ => false,
    }
}

/// `v ⇓ P`: `v` matches some element of `P`.
pub fn term_matches_set(v: &ErasedTerm, set: &BTreeSet<Pattern>) -> bool {
    set.iter().any(|p| term_matches(v, p))
}

/// `pθ`, choosing independently at each occurrence of a variable.
pub fn apply_valuation(
    p: &Pattern,
    theta: &Valuation,
) -> Result<BTreeSet<Pattern>, ValuationError> {
    Ok(match p {
        Pattern::Var(a) => theta
            .get(a)
            .cloned()
            .ok_or_else(|| ValuationError::Unbound(a.clone()))?,
        Pattern::Node(p1, p2) => {
            let l = apply_valuation(p1, theta)?;
            let r = apply_valuation(p2, theta)?;
            l.iter()
                .flat_map(|q1| {
                    r.iter()
                        .map(move |q2| Pattern::node(q1.clone(), q2.clone()))
                })
                .collect()
        }
        other => BTreeSet::from([other.clone()]),
    })
}

/// `P ≪ Q`: every element of `P` is below some element of `Q`.
pub fn set_sub(ps: &BTreeSet<Pattern>, qs: &BTreeSet<Pattern>) -> bool {
    ps.iter().all(|p| qs.iter().any(|q| pattern_sub(p, q)))
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum MatchError {
    #[error("type matching is undefined")]
    Undefined,
    #[error("normalization of `{0}` ran out of fuel")]
    FuelExhausted(ErasedTerm),
}

/// `match_P(ts, ps)`.
///
/// `node` and `leaf` are decomposed against literal `Node`/`Leaf` terms.
/// Once only variables remain, repeated variables must face alpha-equal
/// terms and each variable receives the pattern forms of all normal forms
/// of its term.
pub fn match_patterns(
    ts: &[ErasedTerm],
    ps: &[Pattern],
    rw: &Rewriter,
    fuel: usize,
) -> Result<Valuation, MatchError> {
    if ts.len() != ps.len() {
        return Err(MatchError::Undefined);
    }
    let mut work: Vec<(ErasedTerm, Pattern)> =
        ts.iter().cloned().zip(ps.iter().cloned()).rev().collect();
    let mut vars: Vec<(String, ErasedTerm)> = Vec::new();
    while let Some((t, p)) = work.pop() {
        match p {
            Pattern::Var(a) => vars.push((a, t)),
            Pattern::Leaf if t == ErasedTerm::Leaf => {}
            Pattern::Node(p1, p2) => match t.as_node() {
                Some((u1, u2)) => {
                    work.push((u2.clone(), *p2));
                    work.push((u1.clone(), *p1));
                }
                None => return Err(MatchError::Undefined),
            },
            _ => return Err(MatchError::Undefined),
        }
    }
    let mut bound: BTreeMap<String, ErasedTerm> = BTreeMap::new();
    for (a, t) in &vars {
        match bound.get(a) {
            Some(u) if !u.alpha_eq(t) => return Err(MatchError::Undefined),
            Some(_) => {}
            None => {
                bound.insert(a.clone(), t.clone());
            }
        }
    }
    let mut theta = Valuation::new();
    for (a, t) in bound {
        let nfs = match rw.normalize(&t, fuel) {
            ReductionOutcome::Normalized { normal_forms, .. } => normal_forms,
            ReductionOutcome::FuelExhausted { .. } => return Err(MatchError::FuelExhausted(t)),
        };
        let set: BTreeSet<Pattern> = nfs.iter().map(pattern_form).collect();
        theta
            .insert(a, set)
            .expect("pattern forms are closed and normal-form sets non-empty");
    }
    Ok(theta)
}

fn strict(t: &ErasedTerm, u: &ErasedTerm) -> bool {
    let Some((t1, t2)) = t.as_node() else {
        return false;
    };
    if weak(t1, u) || weak(t2, u) {
        return true;
    }
    match u.as_node() {
        Some((u1, u2)) => (strict(t1, u1) && weak(t2, u2)) || (weak(t1, u1) && strict(t2, u2)),
        None => false,
    }
}

fn weak(t: &ErasedTerm, u: &ErasedTerm) -> bool {
    (*t == ErasedTerm::Leaf && *u == ErasedTerm::Leaf)
        || (t.is_neutral() && u.is_neutral())
        || strict(t, u)
}

/// `t ⊳ u` on normal forms.
pub fn term_embeds_strict(t: &ErasedTerm, u: &ErasedTerm) -> bool {
    strict(t, u)
}

/// `t ⊵ u` on normal forms: `Leaf ⊵ Leaf`, neutral `⊵` neutral, or `⊳`.
/// Not reflexive on `Node` terms.
pub fn term_embeds_weak(t: &ErasedTerm, u: &ErasedTerm) -> bool {
    weak(t, u)
}

/// Number of fully applied `Node` constructors along the value spine.
pub fn term_size(v: &ErasedTerm) -> usize {
    match v.as_node() {
        Some((l, r)) => term_size(l) + term_size(r) + 1,
        None => 0,
    }
}
