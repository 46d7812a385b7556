use thiserror::Error;

use super::context::Context;
use super::diagnostic::codes;
use super::subtype::type_sub;
use crate::syntax::{Pattern, Signature, Term, Type};

/// A failed typing judgement, pointing at the innermost failing subterm.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("{message} in `{subterm}`")]
pub struct TypeError {
    pub code: &'static str,
    pub message: String,
    pub subterm: String,
    pub expected: Option<Type>,
    pub actual: Option<Type>,
}

impl TypeError {
    fn new(code: &'static str, message: impl Into<String>, subterm: &Term) -> TypeError {
        TypeError {
            code,
            message: message.into(),
            subterm: subterm.to_string(),
            expected: None,
            actual: None,
        }
    }
}

/// Type of the `Node` constructor: `∀a b. B(a) → B(b) → B(node(a,b))`.
pub fn node_type() -> Type {
    Type::forall_many(
        ["a", "b"],
        Type::arrow(
            Type::base(Pattern::var("a")),
            Type::arrow(
                Type::base(Pattern::var("b")),
                Type::base(Pattern::node(Pattern::var("a"), Pattern::var("b"))),
            ),
        ),
    )
}

/// Synthesizes the type of a fully annotated term. Subsumption is applied
/// to application arguments only.
pub fn synthesize(sig: &Signature, ctx: &Context, t: &Term) -> Result<Type, TypeError> {
    match t {
        Term::Var(x) => ctx.get(x).cloned().ok_or_else(|| {
            TypeError::new(
                codes::TYPE_UNBOUND_VAR,
                format!("variable `{x}` is not in the context"),
                t,
            )
        }),
        Term::Sym(f) => sig.get(f).map(|d| d.ty.clone()).ok_or_else(|| {
            TypeError::new(
                codes::UNDECLARED_SYMBOL,
                format!("symbol `{f}` is not declared"),
                t,
            )
        }),
        Term::Leaf => Ok(Type::base(Pattern::Leaf)),
        Term::Node => Ok(node_type()),
        Term::Lam(x, annot, body) => {
            let inner = ctx.extend(x.clone(), annot.clone());
            let body_ty = synthesize(sig, &inner, body)?;
            Ok(Type::arrow(annot.clone(), body_ty))
        }
        Term::PatLam(a, body) => {
            if ctx.free_pattern_vars().contains(a) {
                return Err(TypeError::new(
                    codes::TYPE_PLAM_ESCAPE,
                    format!("pattern variable `{a}` is free in the context"),
                    t,
                ));
            }
            Ok(Type::forall(a.clone(), synthesize(sig, ctx, body)?))
        }
        Term::PatApp(f, p) => match synthesize(sig, ctx, f)? {
            Type::Forall(a, body) => Ok(body.subst_pattern(&a, p)),
            other => Err(TypeError {
                actual: Some(other),
                ..TypeError::new(
                    codes::TYPE_NOT_FORALL,
                    "pattern argument given to a term without a quantified type",
                    t,
                )
            }),
        },
        Term::App(f, a) => match synthesize(sig, ctx, f)? {
            Type::Arrow(dom, cod) => {
                let arg_ty = synthesize(sig, ctx, a)?;
                if type_sub(&arg_ty, &dom) {
                    Ok(*cod)
                } else {
                    Err(TypeError {
                        expected: Some(*dom),
                        actual: Some(arg_ty),
                        ..TypeError::new(
                            codes::TYPE_ARG_MISMATCH,
                            "argument type is not a subtype of the domain",
                            t,
                        )
                    })
                }
            }
            other => Err(TypeError {
                actual: Some(other),
                ..TypeError::new(
                    codes::TYPE_NOT_ARROW,
                    "term argument given to a term without an arrow type",
                    t,
                )
            }),
        },
    }
}

/// `Γ ⊢ t : T` by synthesis followed by one subsumption step.
pub fn check(sig: &Signature, ctx: &Context, t: &Term, ty: &Type) -> Result<bool, TypeError> {
    Ok(type_sub(&synthesize(sig, ctx, t)?, ty))
}
