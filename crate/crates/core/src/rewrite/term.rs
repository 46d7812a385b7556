use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::syntax::fresh_name;

/// Run-time terms: no pattern forms, no annotations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ErasedTerm {
    Var(String),
    Sym(String),
    Leaf,
    Node,
    App(Box<ErasedTerm>, Box<ErasedTerm>),
    Lam(String, Box<ErasedTerm>),
}

pub type TermSubst = BTreeMap<String, ErasedTerm>;

impl ErasedTerm {
    pub fn var(name: impl Into<String>) -> ErasedTerm {
        ErasedTerm::Var(name.into())
    }

    pub fn sym(name: impl Into<String>) -> ErasedTerm {
        ErasedTerm::Sym(name.into())
    }

    pub fn app(f: ErasedTerm, a: ErasedTerm) -> ErasedTerm {
        ErasedTerm::App(Box::new(f), Box::new(a))
    }

    pub fn lam(x: impl Into<String>, body: ErasedTerm) -> ErasedTerm {
        ErasedTerm::Lam(x.into(), Box::new(body))
    }

    pub fn apps(head: ErasedTerm, args: impl IntoIterator<Item = ErasedTerm>) -> ErasedTerm {
        args.into_iter().fold(head, ErasedTerm::app)
    }

    /// `Node l r`
    pub fn node(l: ErasedTerm, r: ErasedTerm) -> ErasedTerm {
        ErasedTerm::apps(ErasedTerm::Node, [l, r])
    }

    /// Head and arguments of an application spine.
    pub fn spine(&self) -> (&ErasedTerm, Vec<&ErasedTerm>) {
        let mut args = Vec::new();
        let mut t = self;
        while let ErasedTerm::App(f, a) = t {
            args.push(a.as_ref());
            t = f;
        }
        args.reverse();
        (t, args)
    }

    /// `Some((l, r))` when the term is literally `Node l r`.
    pub fn as_node(&self) -> Option<(&ErasedTerm, &ErasedTerm)> {
        match self {
            ErasedTerm::App(f, r) => match f.as_ref() {
                ErasedTerm::App(n, l) if **n == ErasedTerm::Node => Some((l, r)),
                _ => None,
            },
            _ => None,
        }
    }

    /// Leaf, a fully applied Node, or a lambda.
    pub fn is_value(&self) -> bool {
        matches!(self, ErasedTerm::Lam(..) | ErasedTerm::Leaf) || self.as_node().is_some()
    }

    pub fn is_neutral(&self) -> bool {
        !self.is_value()
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            ErasedTerm::Var(x) => {
                if !bound.contains(x) {
                    out.insert(x.clone());
                }
            }
            ErasedTerm::App(f, a) => {
                f.collect_free(bound, out);
                a.collect_free(bound, out);
            }
            ErasedTerm::Lam(x, b) => {
                bound.push(x.clone());
                b.collect_free(bound, out);
                bound.pop();
            }
            _ => {}
        }
    }

    fn collect_names(&self, out: &mut BTreeSet<String>) {
        match self {
            ErasedTerm::Var(x) | ErasedTerm::Sym(x) => {
                out.insert(x.clone());
            }
            ErasedTerm::App(f, a) => {
                f.collect_names(out);
                a.collect_names(out);
            }
            ErasedTerm::Lam(x, b) => {
                out.insert(x.clone());
                b.collect_names(out);
            }
            _ => {}
        }
    }

    /// Capture-avoiding simultaneous substitution.
    pub fn subst(&self, map: &TermSubst) -> ErasedTerm {
        if map.is_empty() {
            return self.clone();
        }
        match self {
            ErasedTerm::Var(x) => map.get(x).cloned().unwrap_or_else(|| self.clone()),
            ErasedTerm::App(f, a) => ErasedTerm::app(f.subst(map), a.subst(map)),
            ErasedTerm::Lam(x, body) => {
                let body_fv = body.free_vars();
                let mut inner: TermSubst = map
                    .iter()
                    .filter(|(k, _)| *k != x && body_fv.contains(*k))
                    .map(|(k, v)| (k.clone(), v.clone()))
                    .collect();
                if inner.is_empty() {
                    return self.clone();
                }
                let range_fv: BTreeSet<String> =
                    inner.values().flat_map(|t| t.free_vars()).collect();
                if range_fv.contains(x) {
                    let mut avoid = range_fv;
                    avoid.extend(body_fv);
                    avoid.extend(inner.keys().cloned());
                    let y = fresh_name(x, &avoid);
                    inner.insert(x.clone(), ErasedTerm::Var(y.clone()));
                    ErasedTerm::lam(y, body.subst(&inner))
                } else {
                    ErasedTerm::lam(x.clone(), body.subst(&inner))
                }
            }
            _ => self.clone(),
        }
    }

    pub fn subst_one(&self, x: &str, by: &ErasedTerm) -> ErasedTerm {
        let mut m = TermSubst::new();
        m.insert(x.to_string(), by.clone());
        self.subst(&m)
    }

    /// Alpha-canonical representative: the binder at depth `d` is renamed
    /// to the first of `x{d}`, `x{d}'`, ... not used as a free variable or
    /// symbol name in the term. Alpha-equivalent terms have equal
    /// canonical forms.
    pub fn canonical(&self) -> ErasedTerm {
        if !self.has_lambda() {
            return self.clone();
        }
        let mut avoid = self.free_vars();
        let mut syms = BTreeSet::new();
        self.collect_syms(&mut syms);
        avoid.extend(syms);
        self.canon(&mut Vec::new(), &avoid)
    }

    fn has_lambda(&self) -> bool {
        match self {
            ErasedTerm::Lam(..) => true,
            ErasedTerm::App(f, a) => f.has_lambda() || a.has_lambda(),
            _ => false,
        }
    }

    fn collect_syms(&self, out: &mut BTreeSet<String>) {
        match self {
            ErasedTerm::Sym(f) => {
                out.insert(f.clone());
            }
            ErasedTerm::App(f, a) => {
                f.collect_syms(out);
                a.collect_syms(out);
            }
            ErasedTerm::Lam(_, b) => b.collect_syms(out),
            _ => {}
        }
    }

    fn canon(&self, env: &mut Vec<(String, String)>, avoid: &BTreeSet<String>) -> ErasedTerm {
        match self {
            ErasedTerm::Var(x) => match env.iter().rev().find(|(from, _)| from == x) {
                Some((_, to)) => ErasedTerm::Var(to.clone()),
                None => self.clone(),
            },
            ErasedTerm::App(f, a) => ErasedTerm::app(f.canon(env, avoid), a.canon(env, avoid)),
            ErasedTerm::Lam(x, b) => {
                let name = fresh_name(&format!("x{}", env.len()), avoid);
                env.push((x.clone(), name.clone()));
                let body = b.canon(env, avoid);
                env.pop();
                ErasedTerm::lam(name, body)
            }
            _ => self.clone(),
        }
    }

    pub fn alpha_eq(&self, other: &ErasedTerm) -> bool {
        self == other || self.canonical() == other.canonical()
    }

    /// All names (variables, binders, symbols) used in the term.
    pub fn names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_names(&mut out);
        out
    }

    pub fn size(&self) -> usize {
        match self {
            ErasedTerm::App(f, a) => 1 + f.size() + a.size(),
            ErasedTerm::Lam(_, b) => 1 + b.size(),
            _ => 1,
        }
    }

    fn is_atom(&self) -> bool {
        matches!(
            self,
            ErasedTerm::Var(_) | ErasedTerm::Sym(_) | ErasedTerm::Leaf | ErasedTerm::Node
        )
    }
}

impl fmt::Display for ErasedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ErasedTerm::Var(x) | ErasedTerm::Sym(x) => f.write_str(x),
            ErasedTerm::Leaf => f.write_str("Leaf"),
            ErasedTerm::Node => f.write_str("Node"),
            ErasedTerm::Lam(x, b) => write!(f, "\\{x}. {b}"),
            ErasedTerm::App(..) => {
                let (head, args) = self.spine();
                if head.is_atom() {
                    write!(f, "{head}")?;
                } else {
                    write!(f, "({head})")?;
                }
                for a in args {
                    if a.is_atom() {
                        write!(f, " {a}")?;
                    } else {
                        write!(f, " ({a})")?;
                    }
                }
                Ok(())
            }
        }
    }
}
