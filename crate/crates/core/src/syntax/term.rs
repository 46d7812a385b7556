use std::collections::BTreeSet;
use std::fmt;

use super::pattern::Pattern;
use super::types::{pattern_eq_under, Type};
use crate::rewrite::ErasedTerm;

/// Fully annotated source terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Sym(String),
    Node,
    Leaf,
    App(Box<Term>, Box<Term>),
    PatApp(Box<Term>, Pattern),
    Lam(String, Type, Box<Term>),
    PatLam(String, Box<Term>),
}

/// Free term variables and free pattern variables of a term.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeVars {
    pub terms: BTreeSet<String>,
    pub patterns: BTreeSet<String>,
}

/// One argument in an application spine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpineArg<'a> {
    Term(&'a Term),
    Pattern(&'a Pattern),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn sym(name: impl Into<String>) -> Term {
        Term::Sym(name.into())
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        Term::App(Box::new(fun), Box::new(arg))
    }

    pub fn pat_app(fun: Term, arg: Pattern) -> Term {
        Term::PatApp(Box::new(fun), arg)
    }

    pub fn lam(binder: impl Into<String>, annot: Type, body: Term) -> Term {
        Term::Lam(binder.into(), annot, Box::new(body))
    }

    pub fn pat_lam(binder: impl Into<String>, body: Term) -> Term {
        Term::PatLam(binder.into(), Box::new(body))
    }

    /// `head[p1,..,pn] a1 .. am`
    pub fn apply_spine(head: Term, patterns: Vec<Pattern>, args: Vec<Term>) -> Term {
        let t = patterns.into_iter().fold(head, Term::pat_app);
        args.into_iter().fold(t, Term::app)
    }

    /// Decomposes nested applications into the head and its arguments,
    /// outermost-last.
    pub fn spine(&self) -> (&Term, Vec<SpineArg<'_>>) {
        let mut args = Vec::new();
        let mut t = self;
        loop {
            match t {
                Term::App(f, a) => {
                    args.push(SpineArg::Term(a));
                    t = f;
                }
                Term::PatApp(f, p) => {
                    args.push(SpineArg::Pattern(p));
                    t = f;
                }
                _ => break,
            }
        }
        args.reverse();
        (t, args)
    }

    pub fn free_vars(&self) -> FreeVars {
        let mut fv = FreeVars::default();
        self.collect_free(&mut Vec::new(), &mut Vec::new(), &mut fv);
        fv
    }

    fn collect_free(&self, terms: &mut Vec<String>, pats: &mut Vec<String>, out: &mut FreeVars) {
        let add_pat = |p: &Pattern, pats: &Vec<String>, out: &mut FreeVars| {
            for v in p.free_vars() {
                if !pats.contains(&v) {
                    out.patterns.insert(v);
                }
            }
        };
        match self {
            Term::Var(x) => {
                if !terms.contains(x) {
                    out.terms.insert(x.clone());
                }
            }
            Term::Sym(_) | Term::Node | Term::Leaf => {}
            Term::App(f, a) => {
                f.collect_free(terms, pats, out);
                a.collect_free(terms, pats, out);
            }
            Term::PatApp(f, p) => {
                f.collect_free(terms, pats, out);
                add_pat(p, pats, out);
            }
            Term::Lam(x, ty, body) => {
                for v in ty.free_vars() {
                    if !pats.contains(&v) {
                        out.patterns.insert(v);
                    }
                }
                terms.push(x.clone());
                body.collect_free(terms, pats, out);
                terms.pop();
            }
            Term::PatLam(a, body) => {
                pats.push(a.clone());
                body.collect_free(terms, pats, out);
                pats.pop();
            }
        }
    }

    /// Run-time erasure: drops pattern applications, pattern abstractions
    /// and lambda annotations.
    pub fn erase(&self) -> ErasedTerm {
        match self {
            Term::Var(x) => ErasedTerm::Var(x.clone()),
            Term::Sym(f) => ErasedTerm::Sym(f.clone()),
            Term::Lam(x, _, body) => ErasedTerm::lam(x.clone(), body.erase()),
            Term::PatLam(_, body) => body.erase(),
            Term::App(f, a) => ErasedTerm::app(f.erase(), a.erase()),
            Term::PatApp(f, _) => f.erase(),
            Term::Leaf => ErasedTerm::Leaf,
            Term::Node => ErasedTerm::Node,
        }
    }

    /// Equality up to renaming of both kinds of bound variables.
    pub fn alpha_eq(&self, other: &Term) -> bool {
        fn lookup(env: &[(String, String)], a: &str, b: &str) -> bool {
            for (x, y) in env.iter().rev() {
                if x == a || y == b {
                    return x == a && y == b;
                }
            }
            a == b
        }
        fn ty_eq(t: &Type, u: &Type, pats: &[(String, String)]) -> bool {
            // bind the outer pattern environment as if by foralls
            let mut t2 = t.clone();
            let mut u2 = u.clone();
            for (x, y) in pats.iter().rev() {
                t2 = Type::forall(x.clone(), t2);
                u2 = Type::forall(y.clone(), u2);
            }
            t2.alpha_eq(&u2)
        }
        fn go(
            a: &Term,
            b: &Term,
            terms: &mut Vec<(String, String)>,
            pats: &mut Vec<(String, String)>,
        ) -> bool {
            match (a, b) {
                (Term::Var(x), Term::Var(y)) => lookup(terms, x, y),
                (Term::Sym(f), Term::Sym(g)) => f == g,
                (Term::Node, Term::Node) | (Term::Leaf, Term::Leaf) => true,
                (Term::App(f1, a1), Term::App(f2, a2)) => {
                    go(f1, f2, terms, pats) && go(a1, a2, terms, pats)
                }
                (Term::PatApp(f1, p1), Term::PatApp(f2, p2)) => {
                    go(f1, f2, terms, pats) && pattern_eq_under(p1, p2, pats)
                }
                (Term::Lam(x, t1, b1), Term::Lam(y, t2, b2)) => {
                    if !ty_eq(t1, t2, pats) {
                        return false;
                    }
                    terms.push((x.clone(), y.clone()));
                    let r = go(b1, b2, terms, pats);
                    terms.pop();
                    r
                }
                (Term::PatLam(x, b1), Term::PatLam(y, b2)) => {
                    pats.push((x.clone(), y.clone()));
                    let r = go(b1, b2, terms, pats);
                    pats.pop();
                    r
                }
                _ => false,
            }
        }
        go(self, other, &mut Vec::new(), &mut Vec::new())
    }

    /// Symbols occurring anywhere in the term.
    pub fn symbols(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Sym(f) => {
                out.insert(f.clone());
            }
            Term::App(f, a) => {
                f.symbols(out);
                a.symbols(out);
            }
            Term::PatApp(f, _) => f.symbols(out),
            Term::Lam(_, _, b) | Term::PatLam(_, b) => b.symbols(out),
            _ => {}
        }
    }

    fn is_atom(&self) -> bool {
        matches!(self, Term::Var(_) | Term::Sym(_) | Term::Node | Term::Leaf)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(x) | Term::Sym(x) => f.write_str(x),
            Term::Node => f.write_str("Node"),
            Term::Leaf => f.write_str("Leaf"),
            Term::Lam(x, ty, body) => write!(f, "\\{x} : {ty}. {body}"),
            Term::PatLam(a, body) => write!(f, "/\\{a}. {body}"),
            Term::App(..) | Term::PatApp(..) => {
                let (head, args) = self.spine();
                if head.is_atom() {
                    write!(f, "{head}")?;
                } else {
                    write!(f, "({head})")?;
                }
                let mut i = 0;
                while i < args.len() {
                    match args[i] {
                        SpineArg::Term(a) => {
                            if a.is_atom() {
                                write!(f, " {a}")?;
                            } else {
                                write!(f, " ({a})")?;
                            }
                            i += 1;
                        }
                        SpineArg::Pattern(_) => {
                            f.write_str("[")?;
                            let mut first = true;
                            while let Some(SpineArg::Pattern(p)) = args.get(i) {
                                if !first {
                                    f.write_str(",")?;
                                }
                                write!(f, "{p}")?;
                                first = false;
                                i += 1;
                            }
                            f.write_str("]")?;
                        }
                    }
                }
                Ok(())
            }
        }
    }
}
