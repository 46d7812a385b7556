use std::collections::BTreeSet;

use super::diagnostic::{codes, Diagnostic};
use super::minimal::{min_type_lhs, MinTypingResult};
use super::polarity::polarity;
use super::subtype::type_sub;
use super::synth::synthesize;
use crate::syntax::{
    Pattern, RewriteRule, RewriteSystem, Signature, SpineArg, SymbolDecl, Term, Type,
};

/// A rule that passed validation, with its minimal typing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidatedRule {
    pub index: usize,
    pub rule: RewriteRule,
    pub min: MinTypingResult,
    pub rhs_type: Type,
}

/// A well-typed system: valid signature, every rule validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidatedSystem {
    pub system: RewriteSystem,
    pub rules: Vec<ValidatedRule>,
}

/// Length of the longest prefix of domains of the form `B(α_i)` with `α_i`
/// the i-th quantifier, not reusing an earlier quantifier.
pub fn shape_arity(ty: &Type) -> usize {
    let (binders, body) = ty.split_foralls();
    let (doms, _) = body.split_arrows();
    let mut k = 0;
    while k < binders.len() && k < doms.len() {
        let expected = Type::base(Pattern::Var(binders[k].clone()));
        if *doms[k] != expected || binders[..k].contains(&binders[k]) {
            break;
        }
        k += 1;
    }
    k
}

/// `T_f`: the type after the quantifiers and the first `k` arrows.
pub fn result_type(ty: &Type, k: usize) -> &Type {
    let (_, mut t) = ty.split_foralls();
    for _ in 0..k {
        match t {
            Type::Arrow(_, cod) => t = cod,
            _ => break,
        }
    }
    t
}

fn validate_decl(d: &SymbolDecl, out: &mut Vec<Diagnostic>) {
    let diag = |code, msg: String| Diagnostic::new(code, msg).at(d.span).for_symbol(&d.name);
    let fv = d.ty.free_vars();
    if !fv.is_empty() {
        let names: Vec<_> = fv.into_iter().collect();
        out.push(diag(
            codes::SIG_FREE_VAR,
            format!(
                "type of `{}` has free pattern variables {}",
                d.name,
                names.join(", ")
            ),
        ));
    }
    let (binders, body) = d.ty.split_foralls();
    let n = binders.len();
    let k = d.recursive;
    let mut seen = BTreeSet::new();
    for b in &binders {
        if !seen.insert(b) {
            out.push(diag(
                codes::SIG_DISTINCT,
                format!("type of `{}` quantifies `{b}` more than once", d.name),
            ));
        }
    }
    if k > n {
        out.push(diag(
            codes::SIG_ARITY,
            format!(
                "`{}` declares {k} recursive arguments but has only {n} quantifiers",
                d.name
            ),
        ));
    }
    let shape = shape_arity(&d.ty);
    if shape < k {
        let doms = body.split_arrows().0;
        let detail = match (binders.get(shape), doms.get(shape)) {
            (Some(b), Some(_)) if binders[..shape].contains(b) => {
                format!("argument {} reuses the quantifier `{b}`", shape + 1)
            }
            (Some(b), Some(dom)) => format!("argument {} is `{dom}`, expected `B({b})`", shape + 1),
            (None, _) => format!("argument {} has no quantifier of its own", shape + 1),
            (_, None) => format!("there is no argument {}", shape + 1),
        };
        out.push(diag(
            codes::SIG_SHAPE,
            format!("`{}` declares {k} recursive arguments but {detail}", d.name),
        ));
    } else if shape > k {
        out.push(diag(
            codes::SIG_SHAPE,
            format!(
                "`{}` declares {k} recursive arguments but its type has {shape} leading arguments of the form B(α_i)",
                d.name
            ),
        ));
    }
    let k = k.min(shape);
    let tf = result_type(&d.ty, k);
    for b in &binders[..k] {
        if polarity(b, tf).has_negative() {
            out.push(diag(
                codes::SIG_POSITIVITY,
                format!(
                    "`{b}` occurs negatively in the result type `{tf}` of `{}`",
                    d.name
                ),
            ));
        }
    }
}

/// Checks every declaration; empty iff the signature is valid.
pub fn validate_signature(sig: &Signature) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for d in &sig.decls {
        if !seen.insert(d.name.as_str()) {
            out.push(
                Diagnostic::new(
                    codes::SIG_DUPLICATE,
                    format!("symbol `{}` is declared twice", d.name),
                )
                .at(d.span)
                .for_symbol(&d.name),
            );
        }
        validate_decl(d, &mut out);
    }
    out
}

fn check_fully_applied(t: &Term, sig: &Signature, out: &mut Vec<String>) {
    let (head, args) = t.spine();
    if let Term::Sym(f) = head {
        if let Some(d) = sig.get(f) {
            let n = d.quantifiers();
            let given = args
                .iter()
                .take_while(|a| matches!(a, SpineArg::Pattern(_)))
                .count();
            if given < n {
                out.push(format!(
                    "`{f}` is given {given} of its {n} pattern arguments"
                ));
            }
        }
    }
    match head {
        Term::Lam(_, _, b) | Term::PatLam(_, b) => check_fully_applied(b, sig, out),
        _ => {}
    }
    for a in args {
        if let SpineArg::Term(a) = a {
            check_fully_applied(a, sig, out);
        }
    }
}

/// Validates one rule: minimal typing of the lhs, the variable conditions,
/// full application of defined symbols, and `Γ ⊢ rhs : lhsType`.
pub fn validate_rule(
    rule: &RewriteRule,
    sig: &Signature,
) -> Result<ValidatedRule, Vec<Diagnostic>> {
    validate_rule_at(0, rule, sig)
}

fn validate_rule_at(
    index: usize,
    rule: &RewriteRule,
    sig: &Signature,
) -> Result<ValidatedRule, Vec<Diagnostic>> {
    let diag = |code, msg: String| Diagnostic::new(code, msg).at(rule.span).for_rule(index);
    let mut out = Vec::new();

    let lhs_fv = rule.lhs().free_vars().terms;
    let rhs_fv = rule.rhs.free_vars();
    for x in rhs_fv.terms.difference(&lhs_fv) {
        out.push(diag(
            codes::RHS_FREE_VAR,
            format!("rhs variable `{x}` does not occur in the lhs"),
        ));
    }
    let mut partial = Vec::new();
    check_fully_applied(&rule.rhs, sig, &mut partial);
    for msg in partial {
        out.push(diag(codes::RHS_NOT_FULLY_APPLIED, msg));
    }

    let min = match min_type_lhs(rule, sig) {
        Ok(min) => min,
        Err(e) => {
            out.push(diag(e.code, e.message));
            return Err(out);
        }
    };
    for a in rhs_fv.patterns.difference(&min.pattern_vars) {
        out.push(diag(
            codes::RHS_FREE_PATTERN_VAR,
            format!("rhs pattern variable `{a}` is not bound by the lhs"),
        ));
    }
    if !out.is_empty() {
        return Err(out);
    }
    match synthesize(sig, &min.context, &rule.rhs) {
        Ok(rhs_type) if type_sub(&rhs_type, &min.lhs_type) => Ok(ValidatedRule {
            index,
            rule: rule.clone(),
            min,
            rhs_type,
        }),
        Ok(rhs_type) => Err(vec![diag(
            codes::RHS_MISMATCH,
            format!(
                "rhs has type `{rhs_type}`, not a subtype of the lhs type `{}`",
                min.lhs_type
            ),
        )]),
        Err(e) => {
            let mut msg = format!("{} in `{}`", e.message, e.subterm);
            if let Some(x) = &e.expected {
                msg.push_str(&format!("; expected `{x}`"));
            }
            if let Some(x) = &e.actual {
                msg.push_str(&format!("; found `{x}`"));
            }
            Err(vec![diag(e.code, msg)])
        }
    }
}

/// Validates the signature and every rule, collecting all diagnostics.
pub fn validate_system(sys: &RewriteSystem) -> Result<ValidatedSystem, Vec<Diagnostic>> {
    let mut diags = validate_signature(&sys.signature);
    let mut rules = Vec::new();
    for (i, r) in sys.rules.iter().enumerate() {
        match validate_rule_at(i, r, &sys.signature) {
            Ok(v) => rules.push(v),
            Err(ds) => diags.extend(ds),
        }
    }
    if diags.is_empty() {
        Ok(ValidatedSystem {
            system: sys.clone(),
            rules,
        })
    } else {
        Err(diags)
    }
}
