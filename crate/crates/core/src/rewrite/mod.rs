//! Operational semantics on erased terms: matching, head rewriting, beta,
//! context closure and fuel-bounded exhaustive normalization.

mod engine;
mod term;

pub use engine::{
    match_lhs, normalize, step, ErasedRule, Exploration, ReductionOutcome, Rewriter, DEFAULT_FUEL,
};
pub use term::{ErasedTerm, TermSubst};

pub fn is_value(t: &ErasedTerm) -> bool {
    t.is_value()
}

pub fn is_neutral(t: &ErasedTerm) -> bool {
    t.is_neutral()
}
