use std::collections::BTreeMap;

use thiserror::Error;

use crate::syntax::Pattern;

/// Idempotent substitution of pattern variables.
pub type PatternSubst = BTreeMap<String, Pattern>;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum NoUnifier {
    #[error("constructor clash between `{0}` and `{1}`")]
    Clash(Pattern, Pattern),
    #[error("`{0}` occurs in `{1}`")]
    Occurs(String, Pattern),
    #[error("`_` cannot be unified; freshen wildcards first")]
    Wildcard,
}

fn walk(p: &Pattern, s: &PatternSubst) -> Pattern {
    let mut p = p.clone();
    while let Pattern::Var(x) = &p {
        match s.get(x) {
            Some(q) => p = q.clone(),
            None => break,
        }
    }
    p
}

fn resolve(p: &Pattern, s: &PatternSubst) -> Pattern {
    match walk(p, s) {
        Pattern::Node(a, b) => Pattern::node(resolve(&a, s), resolve(&b, s)),
        other => other,
    }
}

fn occurs(x: &str, p: &Pattern, s: &PatternSubst) -> bool {
    match walk(p, s) {
        Pattern::Var(y) => x == y,
        Pattern::Node(a, b) => occurs(x, &a, s) || occurs(x, &b, s),
        _ => false,
    }
}

/// Most general unifier over `{leaf/0, node/2, bot/0}` with occurs check.
pub fn unify_patterns(p: &Pattern, q: &Pattern) -> Result<PatternSubst, NoUnifier> {
    unify_all(&[(p.clone(), q.clone())])
}

/// Simultaneous most general unifier of a list of equations.
pub fn unify_all(eqs: &[(Pattern, Pattern)]) -> Result<PatternSubst, NoUnifier> {
    let mut s = PatternSubst::new();
    let mut work: Vec<(Pattern, Pattern)> = eqs.iter().rev().cloned().collect();
    while let Some((a, b)) = work.pop() {
        let (a, b) = (walk(&a, &s), walk(&b, &s));
        match (&a, &b) {
            (Pattern::Wildcard, _) | (_, Pattern::Wildcard) => return Err(NoUnifier::Wildcard),
            (Pattern::Var(x), Pattern::Var(y)) if x == y => {}
            (Pattern::Var(x), t) | (t, Pattern::Var(x)) => {
                if occurs(x, t, &s) {
                    return Err(NoUnifier::Occurs(x.clone(), resolve(t, &s)));
                }
                s.insert(x.clone(), t.clone());
            }
            (Pattern::Leaf, Pattern::Leaf) | (Pattern::Bottom, Pattern::Bottom) => {}
            (Pattern::Node(a1, a2), Pattern::Node(b1, b2)) => {
                work.push(((**a2).clone(), (**b2).clone()));
                work.push(((**a1).clone(), (**b1).clone()));
            }
            _ => return Err(NoUnifier::Clash(resolve(&a, &s), resolve(&b, &s))),
        }
    }
    let keys: Vec<String> = s.keys().cloned().collect();
    Ok(keys
        .into_iter()
        .map(|k| {
            let v = resolve(&Pattern::Var(k.clone()), &s);
            (k, v)
        })
        .collect())
}

/// Replaces every variable and wildcard occurrence by a distinct variable.
pub fn freshen(p: &Pattern, counter: &mut usize) -> Pattern {
    match p {
        Pattern::Var(_) | Pattern::Wildcard => {
            *counter += 1;
            Pattern::Var(format!("#{counter}"))
        }
        Pattern::Node(a, b) => {
            let a = freshen(a, counter);
            Pattern::node(a, freshen(b, counter))
        }
        other => other.clone(),
    }
}

/// `p ⋈ q`: unifiable after freshening every variable and wildcard
/// occurrence. `bot` is an ordinary constant.
pub fn pattern_unifiable(p: &Pattern, q: &Pattern) -> bool {
    let mut c = 0;
    let p = freshen(p, &mut c);
    let q = freshen(q, &mut c);
    unify_patterns(&p, &q).is_ok()
}
