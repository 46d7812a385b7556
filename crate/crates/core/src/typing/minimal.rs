use std::collections::{BTreeMap, BTreeSet};

use super::context::Context;
use super::diagnostic::codes;
use super::synth::TypeError;
use crate::syntax::{CtorTerm, Pattern, RewriteRule, Signature, Type};

/// Outcome of minimal typing of a left-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinTypingResult {
    /// `x : B(α_x)` for each lhs term variable, in order of first occurrence.
    pub context: Context,
    pub lhs_type: Type,
    /// Minimal patterns of the recursive arguments.
    pub recursive_patterns: Vec<Pattern>,
    /// Pattern variables bound by the lhs pattern arguments.
    pub pattern_vars: BTreeSet<String>,
}

// Internal names contain a character the lexer rejects, so they never clash
// with user names.
fn internal(x: &str) -> String {
    format!("?{x}")
}

fn error(code: &'static str, message: String, rule: &RewriteRule) -> TypeError {
    TypeError {
        code,
        message,
        subterm: rule.lhs().to_string(),
        expected: None,
        actual: None,
    }
}

/// Minimal pattern of a constructor term, using `?x` for the variable `x`.
fn forced_pattern(t: &CtorTerm) -> Pattern {
    match t {
        CtorTerm::Var(x) => Pattern::Var(internal(x)),
        CtorTerm::Leaf => Pattern::Leaf,
        CtorTerm::Node { left, right, .. } => {
            Pattern::node(forced_pattern(left), forced_pattern(right))
        }
    }
}

/// Extends the injective renaming `rho` of internal variables to user
/// variables so that `rho(forced) = user`.
fn match_renaming(
    forced: &Pattern,
    user: &Pattern,
    rho: &mut BTreeMap<String, String>,
    used: &mut BTreeSet<String>,
) -> bool {
    match (forced, user) {
        (Pattern::Var(i), Pattern::Var(u)) => match rho.get(i) {
            Some(v) => v == u,
            None => {
                if !used.insert(u.clone()) {
                    return false;
                }
                rho.insert(i.clone(), u.clone());
                true
            }
        },
        (Pattern::Leaf, Pattern::Leaf) => true,
        (Pattern::Node(f1, f2), Pattern::Node(u1, u2)) => {
            match_renaming(f1, u1, rho, used) && match_renaming(f2, u2, rho, used)
        }
        _ => false,
    }
}

fn rename(p: &Pattern, rho: &BTreeMap<String, String>) -> Pattern {
    let map: BTreeMap<String, Pattern> = rho
        .iter()
        .map(|(k, v)| (k.clone(), Pattern::Var(v.clone())))
        .collect();
    p.subst(&map)
}

fn readable(p: &Pattern) -> String {
    p.to_string().replace('?', "α_")
}

fn check_annotations(
    t: &CtorTerm,
    rho: &BTreeMap<String, String>,
    rule: &RewriteRule,
) -> Result<(), TypeError> {
    if let CtorTerm::Node { annot, left, right } = t {
        if let Some((p, q)) = annot {
            let lp = rename(&forced_pattern(left), rho);
            let rq = rename(&forced_pattern(right), rho);
            if *p != lp || *q != rq {
                return Err(error(
                    codes::MIN_ANNOTATION_MISMATCH,
                    format!("annotation Node[{p},{q}] differs from the minimal Node[{lp},{rq}]"),
                    rule,
                ));
            }
        }
        check_annotations(left, rho, rule)?;
        check_annotations(right, rho, rule)?;
    }
    Ok(())
}

/// Minimal typing of the left-hand side of `rule`.
///
/// The lhs pattern arguments must be the minimal patterns of the recursive
/// arguments followed by distinct fresh variables, up to an injective
/// renaming; the user's names are kept. When `k = 0` a prefix of the
/// pattern arguments may be given.
pub fn min_type_lhs(rule: &RewriteRule, sig: &Signature) -> Result<MinTypingResult, TypeError> {
    let decl = sig.get(&rule.head).ok_or_else(|| {
        error(
            codes::UNDECLARED_SYMBOL,
            format!("symbol `{}` is not declared", rule.head),
            rule,
        )
    })?;
    let (binders, body) = decl.ty.split_foralls();
    let n = binders.len();
    let k = decl.recursive;
    let m = rule.pattern_args.len();
    if !(m == n || (k == 0 && m < n)) {
        return Err(error(
            codes::LHS_ARITY,
            format!(
                "`{}` takes {n} pattern arguments, the lhs gives {m}",
                rule.head
            ),
            rule,
        ));
    }
    if rule.args.len() != k {
        return Err(error(
            codes::LHS_ARITY,
            format!(
                "`{}` has {k} recursive arguments, the lhs gives {}",
                rule.head,
                rule.args.len()
            ),
            rule,
        ));
    }
    let mut ctors = Vec::with_capacity(k);
    for (i, a) in rule.args.iter().enumerate() {
        match CtorTerm::from_term(a) {
            Some(c) => ctors.push(c),
            None => {
                return Err(error(
                    codes::LHS_NOT_CONSTRUCTOR,
                    format!(
                        "recursive argument {} `{a}` is not a constructor term",
                        i + 1
                    ),
                    rule,
                ))
            }
        }
    }
    for (i, p) in rule.pattern_args.iter().enumerate() {
        if !p.is_minimal() {
            return Err(error(
                codes::LHS_NONMINIMAL,
                format!("pattern argument {} `{p}` contains `_` or `bot`", i + 1),
                rule,
            ));
        }
    }

    let mut vars = Vec::new();
    for c in &ctors {
        c.vars_in_order(&mut vars);
    }
    let forced: Vec<Pattern> = (0..m)
        .map(|i| match ctors.get(i) {
            Some(c) => forced_pattern(c),
            None => Pattern::Var(format!("?{i}")),
        })
        .collect();

    let mut rho = BTreeMap::new();
    let mut used = BTreeSet::new();
    for (i, (f, u)) in forced.iter().zip(&rule.pattern_args).enumerate() {
        if !match_renaming(f, u, &mut rho, &mut used) {
            let what = if i < k {
                format!(
                    "the minimal pattern {} of recursive argument {}",
                    readable(f),
                    i + 1
                )
            } else {
                "a fresh variable".to_string()
            };
            return Err(error(
                codes::MIN_PATTERN_MISMATCH,
                format!(
                    "pattern argument {} is `{u}` but minimal typing forces {what}, distinct from all other variables",
                    i + 1
                ),
                rule,
            ));
        }
    }
    for c in &ctors {
        check_annotations(c, &rho, rule)?;
    }

    let context = Context::from_entries(vars.iter().map(|x| {
        (
            x.clone(),
            Type::base(Pattern::Var(rho[&internal(x)].clone())),
        )
    }));
    let recursive_patterns = rule.pattern_args[..k].to_vec();

    let (doms, _) = body.split_arrows();
    if doms.len() < k {
        return Err(error(
            codes::SIG_SHAPE,
            format!("`{}` has fewer than {k} arguments", rule.head),
            rule,
        ));
    }
    let mut tail = body;
    for _ in 0..k {
        if let Type::Arrow(_, cod) = tail {
            tail = cod;
        }
    }
    let phi: BTreeMap<String, Pattern> = binders[..m]
        .iter()
        .cloned()
        .zip(rule.pattern_args.iter().cloned())
        .collect();
    let lhs_type =
        Type::forall_many(binders[m..].iter().cloned(), tail.clone()).subst_patterns(&phi);

    let mut pattern_vars = BTreeSet::new();
    for p in &rule.pattern_args {
        p.collect_vars(&mut pattern_vars);
    }
    Ok(MinTypingResult {
        context,
        lhs_type,
        recursive_patterns,
        pattern_vars,
    })
}
