use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::pattern::{fresh_name, Pattern};

/// Refinement types: `B(p)`, arrows, and pattern-variable quantification.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Type {
    Base(Pattern),
    Arrow(Box<Type>, Box<Type>),
    Forall(String, Box<Type>),
}

impl Type {
    pub fn base(p: Pattern) -> Type {
        Type::Base(p)
    }

    pub fn arrow(dom: Type, cod: Type) -> Type {
        Type::Arrow(Box::new(dom), Box::new(cod))
    }

    pub fn forall(binder: impl Into<String>, body: Type) -> Type {
        Type::Forall(binder.into(), Box::new(body))
    }

    /// `forall b1 ... bn. body`
    pub fn forall_many<I, S>(binders: I, body: Type) -> Type
    where
        I: IntoIterator<Item = S>,
        I::IntoIter: DoubleEndedIterator,
        S: Into<String>,
    {
        binders
            .into_iter()
            .rev()
            .fold(body, |acc, b| Type::forall(b, acc))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Type::Base(p) => {
                for v in p.free_vars() {
                    if !bound.contains(&v) {
                        out.insert(v);
                    }
                }
            }
            Type::Arrow(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Type::Forall(x, body) => {
                bound.push(x.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Every variable name occurring in the type, bound or free.
    pub fn all_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Type::Base(p) => p.collect_vars(out),
            Type::Arrow(a, b) => {
                a.all_vars(out);
                b.all_vars(out);
            }
            Type::Forall(x, body) => {
                out.insert(x.clone());
                body.all_vars(out);
            }
        }
    }

    /// Capture-avoiding `self[binder := p]`.
    pub fn subst_pattern(&self, binder: &str, p: &Pattern) -> Type {
        let mut map = BTreeMap::new();
        map.insert(binder.to_string(), p.clone());
        self.subst_patterns(&map)
    }

    /// Capture-avoiding simultaneous substitution.
    pub fn subst_patterns(&self, map: &BTreeMap<String, Pattern>) -> Type {
        match self {
            Type::Base(q) => Type::Base(q.subst(map)),
            Type::Arrow(a, b) => Type::arrow(a.subst_patterns(map), b.subst_patterns(map)),
            Type::Forall(x, body) => {
                let mut inner = map.clone();
                inner.remove(x);
                let body_fv = body.free_vars();
                inner.retain(|k, _| body_fv.contains(k));
                if inner.is_empty() {
                    return self.clone();
                }
                let range_fv: BTreeSet<String> =
                    inner.values().flat_map(|p| p.free_vars()).collect();
                if range_fv.contains(x) {
                    let mut avoid = range_fv;
                    avoid.extend(body_fv);
                    avoid.extend(inner.keys().cloned());
                    let renamed = fresh_name(x, &avoid);
                    inner.insert(x.clone(), Pattern::Var(renamed.clone()));
                    Type::forall(renamed, body.subst_patterns(&inner))
                } else {
                    Type::forall(x.clone(), body.subst_patterns(&inner))
                }
            }
        }
    }

    /// Structural equality up to renaming of bound pattern variables.
    pub fn alpha_eq(&self, other: &Type) -> bool {
        fn go(a: &Type, b: &Type, env: &mut Vec<(String, String)>) -> bool {
            match (a, b) {
                (Type::Base(p), Type::Base(q)) => pattern_eq_under(p, q, env),
                (Type::Arrow(a1, a2), Type::Arrow(b1, b2)) => go(a1, b1, env) && go(a2, b2, env),
                (Type::Forall(x, ab), Type::Forall(y, bb)) => {
                    env.push((x.clone(), y.clone()));
                    let r = go(ab, bb, env);
                    env.pop();
                    r
                }
                _ => false,
            }
        }
        go(self, other, &mut Vec::new())
    }

    /// Leading quantifiers and the remaining body.
    pub fn split_foralls(&self) -> (Vec<String>, &Type) {
        let mut binders = Vec::new();
        let mut t = self;
        while let Type::Forall(x, body) = t {
            binders.push(x.clone());
            t = body;
        }
        (binders, t)
    }

    /// Leading arrow domains and the final codomain.
    pub fn split_arrows(&self) -> (Vec<&Type>, &Type) {
        let mut doms = Vec::new();
        let mut t = self;
        while let Type::Arrow(a, b) = t {
            doms.push(a.as_ref());
            t = b;
        }
        (doms, t)
    }
}

/// Pattern equality where variables are related through a binder
/// environment (innermost binding last).
pub(crate) fn pattern_eq_under(p: &Pattern, q: &Pattern, env: &[(String, String)]) -> bool {
    match (p, q) {
        (Pattern::Var(a), Pattern::Var(b)) => {
            for (x, y) in env.iter().rev() {
                if x == a || y == b {
                    return x == a && y == b;
                }
            }
            a == b
        }
        (Pattern::Node(a1, a2), Pattern::Node(b1, b2)) => {
            pattern_eq_under(a1, b1, env) && pattern_eq_under(a2, b2, env)
        }
        (Pattern::Leaf, Pattern::Leaf)
        | (Pattern::Wildcard, Pattern::Wildcard)
        | (Pattern::Bottom, Pattern::Bottom) => true,
        _ => false,
    }
}

impl fmt::Display for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Type::Forall(..) => {
                let (binders, body) = self.split_foralls();
                write!(f, "forall {}. {}", binders.join(" "), body)
            }
            Type::Arrow(a, b) => {
                match a.as_ref() {
                    Type::Base(_) => write!(f, "{a}")?,
                    _ => write!(f, "({a})")?,
                }
                write!(f, " -> {b}")
            }
            Type::Base(p) => write!(f, "B({p})"),
        }
    }
}
