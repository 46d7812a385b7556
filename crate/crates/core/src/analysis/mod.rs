//! Dependency pairs, the typed dependency graph, SCCs, pattern embedding
//! and the decrease criterion.

mod criterion;
mod dot;
mod dp;
mod embed;
mod graph;
mod scc;
mod unify;

pub use criterion::{
    analyze, check_criterion, check_graph, check_scc, find_indices, Analysis, Decrease,
    IndexAssignment, NotFound, Outcome, SccCertificate, SccFailure, SccFailureReport, Verdict,
};
pub use dot::to_dot;
pub use dp::{call_sites, canonical_var, extract_dps, symbols_of, CallSite, DependencyPair};
pub use embed::{embeds_strict, embeds_weak};
pub use graph::{build_graph, connects, DependencyGraph};
pub use scc::{find_cycle_within, is_nontrivial, sccs, tarjan};
pub use unify::{freshen, pattern_unifiable, unify_all, unify_patterns, NoUnifier, PatternSubst};
