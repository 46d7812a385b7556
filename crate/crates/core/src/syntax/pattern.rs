use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A first-order tree pattern over binary trees.
///
/// Patterns are the payload of every refinement type `B(p)`. They carry no
/// binding structure; variables are bound by the enclosing `forall` or by a
/// pattern abstraction in a term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    Var(String),
    Leaf,
    Node(Box<Pattern>, Box<Pattern>),
    /// `_`: any value.
    Wildcard,
    /// `bot`: only hereditarily neutral terms.
    Bottom,
}

impl Pattern {
    pub fn var(name: impl Into<String>) -> Pattern {
        Pattern::Var(name.into())
    }

    pub fn node(left: Pattern, right: Pattern) -> Pattern {
        Pattern::Node(Box::new(left), Box::new(right))
    }

    /// No wildcard and no bottom anywhere.
    pub fn is_minimal(&self) -> bool {
        match self {
            Pattern::Var(_) | Pattern::Leaf => true,
            Pattern::Node(l, r) => l.is_minimal() && r.is_minimal(),
            Pattern::Wildcard | Pattern::Bottom => false,
        }
    }

    pub fn is_closed(&self) -> bool {
        match self {
            Pattern::Var(_) => false,
            Pattern::Node(l, r) => l.is_closed() && r.is_closed(),
            _ => true,
        }
    }

    pub fn contains_wildcard(&self) -> bool {
        match self {
            Pattern::Wildcard => true,
            Pattern::Node(l, r) => l.contains_wildcard() || r.contains_wildcard(),
            _ => false,
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Pattern::Var(v) => {
                out.insert(v.clone());
            }
            Pattern::Node(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            _ => {}
        }
    }

    /// Variables in left-to-right order of first occurrence.
    pub fn vars_in_order(&self, out: &mut Vec<String>) {
        match self {
            Pattern::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Pattern::Node(l, r) => {
                l.vars_in_order(out);
                r.vars_in_order(out);
            }
            _ => {}
        }
    }

    pub fn mentions(&self, name: &str) -> bool {
        match self {
            Pattern::Var(v) => v == name,
            Pattern::Node(l, r) => l.mentions(name) || r.mentions(name),
            _ => false,
        }
    }

    /// Simultaneous substitution of patterns for variables.
    pub fn subst(&self, map: &BTreeMap<String, Pattern>) -> Pattern {
        match self {
            Pattern::Var(v) => map.get(v).cloned().unwrap_or_else(|| self.clone()),
            Pattern::Node(l, r) => Pattern::node(l.subst(map), r.subst(map)),
            _ => self.clone(),
        }
    }

    pub fn subst_one(&self, name: &str, by: &Pattern) -> Pattern {
        match self {
            Pattern::Var(v) if v == name => by.clone(),
            Pattern::Node(l, r) => Pattern::node(l.subst_one(name, by), r.subst_one(name, by)),
            _ => self.clone(),
        }
    }

    /// Number of `node` constructors.
    pub fn size(&self) -> usize {
        match self {
            Pattern::Node(l, r) => 1 + l.size() + r.size(),
            _ => 0,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Pattern::Node(l, r) => 1 + l.depth().max(r.depth()),
            _ => 0,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Var(v) => f.write_str(v),
            Pattern::Leaf => f.write_str("leaf"),
            Pattern::Node(l, r) => write!(f, "node({l},{r})"),
            Pattern::Wildcard => f.write_str("_"),
            Pattern::Bottom => f.write_str("bot"),
        }
    }
}

/// Returns `base` with primes appended until it is not in `avoid`.
pub fn fresh_name(base: &str, avoid: &BTreeSet<String>) -> String {
    let mut name = base.to_string();
    while avoid.contains(&name) {
        name.push('\'');
    }
    name
}
