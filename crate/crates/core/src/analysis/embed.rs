use crate::syntax::Pattern;

fn strict(p: &Pattern, q: &Pattern) -> bool {
    match p {
        Pattern::Node(p1, p2) => {
            weak(p1, q)
                || weak(p2, q)
                || match q {
                    Pattern::Node(q1, q2) => {
                        (strict(p1, q1) && weak(p2, q2)) || (weak(p1, q1) && strict(p2, q2))
                    }
                    _ => false,
                }
        }
        _ => false,
    }
}

fn weak(p: &Pattern, q: &Pattern) -> bool {
    p == q || strict(p, q)
}

/// `p ⊳ q`. False whenever either side contains `_`.
pub fn embeds_strict(p: &Pattern, q: &Pattern) -> bool {
    !p.contains_wildcard() && !q.contains_wildcard() && strict(p, q)
}

/// `p ⊵ q`: syntactic equality or `p ⊳ q`.
pub fn embeds_weak(p: &Pattern, q: &Pattern) -> bool {
    p == q || embeds_strict(p, q)
}
