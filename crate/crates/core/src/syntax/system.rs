use std::fmt;

use super::pattern::Pattern;
use super::term::Term;
use super::types::Type;

/// Source position (1-based).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolDecl {
    pub name: String,
    pub ty: Type,
    /// Declared number of recursive arguments.
    pub recursive: usize,
    pub span: Span,
}

impl SymbolDecl {
    pub fn new(name: impl Into<String>, ty: Type, recursive: usize) -> SymbolDecl {
        SymbolDecl {
            name: name.into(),
            ty,
            recursive,
            span: Span::default(),
        }
    }

    /// Number of leading quantifiers.
    pub fn quantifiers(&self) -> usize {
        self.ty.split_foralls().0.len()
    }
}

/// Symbol declarations in source order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    pub decls: Vec<SymbolDecl>,
}

impl Signature {
    pub fn get(&self, name: &str) -> Option<&SymbolDecl> {
        self.decls.iter().find(|d| d.name == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.get(name).is_some()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.decls.iter().map(|d| d.name.as_str())
    }
}

/// `head[pattern_args] args -> rhs`
///
/// `args` are kept as general terms; minimal typing checks that they are
/// constructor terms and that there are exactly `recursive` of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub head: String,
    pub pattern_args: Vec<Pattern>,
    pub args: Vec<Term>,
    pub rhs: Term,
    pub span: Span,
}

impl RewriteRule {
    pub fn new(
        head: impl Into<String>,
        pattern_args: Vec<Pattern>,
        args: Vec<Term>,
        rhs: Term,
    ) -> Self {
        RewriteRule {
            head: head.into(),
            pattern_args,
            args,
            rhs,
            span: Span::default(),
        }
    }

    pub fn lhs(&self) -> Term {
        Term::apply_spine(
            Term::Sym(self.head.clone()),
            self.pattern_args.clone(),
            self.args.clone(),
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RewriteSystem {
    pub signature: Signature,
    pub rules: Vec<RewriteRule>,
}

impl RewriteSystem {
    /// Equality ignoring source positions and bound-variable names.
    pub fn alpha_eq(&self, other: &RewriteSystem) -> bool {
        self.signature.decls.len() == other.signature.decls.len()
            && self.rules.len() == other.rules.len()
            && self
                .signature
                .decls
                .iter()
                .zip(&other.signature.decls)
                .all(|(a, b)| {
                    a.name == b.name && a.recursive == b.recursive && a.ty.alpha_eq(&b.ty)
                })
            && self.rules.iter().zip(&other.rules).all(|(a, b)| {
                a.head == b.head
                    && a.pattern_args == b.pattern_args
                    && a.args.len() == b.args.len()
                    && a.args.iter().zip(&b.args).all(|(x, y)| x.alpha_eq(y))
                    && a.rhs.alpha_eq(&b.rhs)
            })
    }

    /// Rules whose head is `name`.
    pub fn rules_for<'a>(
        &'a self,
        name: &'a str,
    ) -> impl Iterator<Item = (usize, &'a RewriteRule)> + 'a {
        self.rules
            .iter()
            .enumerate()
            .filter(move |(_, r)| r.head == name)
    }
}

/// Constructor terms: the only terms allowed as recursive arguments on a
/// left-hand side. `Node` may carry its two pattern annotations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CtorTerm {
    Var(String),
    Leaf,
    Node {
        annot: Option<(Pattern, Pattern)>,
        left: Box<CtorTerm>,
        right: Box<CtorTerm>,
    },
}

impl CtorTerm {
    /// Recognises `x`, `Leaf`, `Node l1 l2` and `Node[p1,p2] l1 l2`.
    pub fn from_term(t: &Term) -> Option<CtorTerm> {
        use super::term::SpineArg;
        match t {
            Term::Var(x) => return Some(CtorTerm::Var(x.clone())),
            Term::Leaf => return Some(CtorTerm::Leaf),
            _ => {}
        }
        let (head, args) = t.spine();
        if *head != Term::Node {
            return None;
        }
        let (annot, rest) = match args.as_slice() {
            [SpineArg::Pattern(p), SpineArg::Pattern(q), rest @ ..] => {
                (Some(((*p).clone(), (*q).clone())), rest)
            }
            rest => (None, rest),
        };
        match rest {
            [SpineArg::Term(l), SpineArg::Term(r)] => Some(CtorTerm::Node {
                annot,
                left: Box::new(CtorTerm::from_term(l)?),
                right: Box::new(CtorTerm::from_term(r)?),
            }),
            _ => None,
        }
    }

    /// Term variables in order of first occurrence.
    pub fn vars_in_order(&self, out: &mut Vec<String>) {
        match self {
            CtorTerm::Var(x) => {
                if !out.contains(x) {
                    out.push(x.clone());
                }
            }
            CtorTerm::Leaf => {}
            CtorTerm::Node { left, right, .. } => {
                left.vars_in_order(out);
                right.vars_in_order(out);
            }
        }
    }
}
