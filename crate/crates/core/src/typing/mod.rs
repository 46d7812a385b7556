//! Pattern and type orders, polarity, type synthesis, minimal typing of
//! left-hand sides, and validation of signatures and rules.

mod context;
mod diagnostic;
mod minimal;
mod polarity;
mod subtype;
mod synth;
mod validate;

pub use context::Context;
pub use diagnostic::{codes, Diagnostic};
pub use minimal::{min_type_lhs, MinTypingResult};
pub use polarity::{polarity, Polarity};
pub use subtype::{pattern_sub, type_sub};
pub use synth::{check, node_type, synthesize, TypeError};
pub use validate::{
    result_type, shape_arity, validate_rule, validate_signature, validate_system, ValidatedRule,
    ValidatedSystem,
};
