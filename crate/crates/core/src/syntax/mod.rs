//! Abstract syntax for patterns, refinement types, annotated terms and
//! rewrite rules, with the concrete-syntax parser and printer.

mod parser;
mod pattern;
mod printer;
mod system;
mod term;
mod types;

pub use parser::{
    parse_erased_term, parse_pattern, parse_system, parse_term, parse_type, ParseError, RESERVED,
};
pub use pattern::{fresh_name, Pattern};
pub use printer::print_system;
pub use system::{CtorTerm, RewriteRule, RewriteSystem, Signature, Span, SymbolDecl};
pub use term::{FreeVars, SpineArg, Term};
pub use types::Type;

/// `T[binder := p]`, capture-avoiding.
pub fn subst_pattern(ty: &Type, binder: &str, p: &Pattern) -> Type {
    ty.subst_pattern(binder, p)
}
