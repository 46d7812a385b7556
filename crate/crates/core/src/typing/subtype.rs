use std::collections::BTreeSet;

use crate::syntax::{fresh_name, Pattern, Type};

/// The pattern order `p ≪ q`.
///
/// Rules: `p ≪ _`, `α ≪ α`, `leaf ≪ leaf`, componentwise `node`, and
/// `bot ≪ p`.
pub fn pattern_sub(p: &Pattern, q: &Pattern) -> bool {
    match (p, q) {
        (_, Pattern::Wildcard) => true,
        (Pattern::Bottom, _) => true,
        (Pattern::Var(a), Pattern::Var(b)) => a == b,
        (Pattern::Leaf, Pattern::Leaf) => true,
        (Pattern::Node(p1, p2), Pattern::Node(q1, q2)) => {
            pattern_sub(p1, q1) && pattern_sub(p2, q2)
        }
        _ => false,
    }
}

/// Subtyping `T ≤ U`: covariant on `B`, contravariant in arrow domains,
/// congruent under quantifiers with binders identified.
pub fn type_sub(t: &Type, u: &Type) -> bool {
    match (t, u) {
        (Type::Base(p), Type::Base(q)) => pattern_sub(p, q),
        (Type::Arrow(t1, u1), Type::Arrow(t2, u2)) => type_sub(t2, t1) && type_sub(u1, u2),
        (Type::Forall(a, tb), Type::Forall(b, ub)) => {
            if a == b {
                return type_sub(tb, ub);
            }
            let mut avoid = BTreeSet::new();
            t.all_vars(&mut avoid);
            u.all_vars(&mut avoid);
            let c = Pattern::Var(fresh_name(a, &avoid));
            type_sub(&tb.subst_pattern(a, &c), &ub.subst_pattern(b, &c))
        }
        _ => false,
    }
}
