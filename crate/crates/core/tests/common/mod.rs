#![allow(dead_code)]

pub mod oracles;

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use hodp::oracle::Valuation;
use hodp::rewrite::{ErasedTerm, ReductionOutcome, Rewriter};
use hodp::syntax::{
    parse_erased_term, parse_system, Pattern, RewriteRule, RewriteSystem, Signature, Span,
    SymbolDecl, Term, Type,
};

pub const PATTERN_VARS: &[&str] = &["a", "b", "c"];
pub const TERM_VARS: &[&str] = &["x", "y", "z"];
pub const SYMBOLS: &[&str] = &["f0", "f1", "f2", "f3"];

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!(
        "{}/../../fixtures/{name}",
        env!("CARGO_MANIFEST_DIR")
    ))
    .unwrap()
}

fn pattern_var() -> impl Strategy<Value = Pattern> {
    proptest::sample::select(PATTERN_VARS).prop_map(Pattern::var)
}

/// Any pattern of depth at most `depth`.
pub fn pattern(depth: u32) -> BoxedStrategy<Pattern> {
    let leaf = prop_oneof![
        3 => Just(Pattern::Leaf),
        3 => pattern_var(),
        1 => Just(Pattern::Wildcard),
        1 => Just(Pattern::Bottom),
    ];
    leaf.prop_recursive(depth, 32, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| Pattern::node(l, r))
    })
    .boxed()
}

/// Patterns without `_` and `bot`.
pub fn minimal_pattern(depth: u32) -> BoxedStrategy<Pattern> {
    prop_oneof![Just(Pattern::Leaf), pattern_var()]
        .prop_recursive(depth, 32, 2, |inner| {
            (inner.clone(), inner).prop_map(|(l, r)| Pattern::node(l, r))
        })
        .boxed()
}

/// Patterns without variables.
pub fn closed_pattern(depth: u32) -> BoxedStrategy<Pattern> {
    prop_oneof![
        3 => Just(Pattern::Leaf),
        1 => Just(Pattern::Wildcard),
        1 => Just(Pattern::Bottom),
    ]
    .prop_recursive(depth, 32, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| Pattern::node(l, r))
    })
    .boxed()
}

/// Closed patterns without `_`.
pub fn closed_wildcard_free(depth: u32) -> BoxedStrategy<Pattern> {
    prop_oneof![3 => Just(Pattern::Leaf), 1 => Just(Pattern::Bottom)]
        .prop_recursive(depth, 32, 2, |inner| {
            (inner.clone(), inner).prop_map(|(l, r)| Pattern::node(l, r))
        })
        .boxed()
}

/// Types of depth at most `depth` over `pattern(pdepth)`.
pub fn ty(depth: u32, pdepth: u32) -> BoxedStrategy<Type> {
    pattern(pdepth)
        .prop_map(Type::base)
        .prop_recursive(depth, 24, 2, move |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(d, c)| Type::arrow(d, c)),
                (proptest::sample::select(PATTERN_VARS), inner)
                    .prop_map(|(a, body)| Type::forall(a, body)),
            ]
        })
        .boxed()
}

/// A pattern `q` with `q ≪ p`.
pub fn below(p: Pattern) -> BoxedStrategy<Pattern> {
    match p {
        Pattern::Wildcard => pattern(2),
        Pattern::Node(l, r) => prop_oneof![
            1 => Just(Pattern::Bottom),
            4 => (below(*l), below(*r)).prop_map(|(a, b)| Pattern::node(a, b)),
        ]
        .boxed(),
        other => prop_oneof![Just(Pattern::Bottom), Just(other)].boxed(),
    }
}

/// A pattern `q` with `p ≪ q`.
pub fn above(p: Pattern) -> BoxedStrategy<Pattern> {
    match p {
        Pattern::Bottom => prop_oneof![Just(Pattern::Bottom), pattern(2)].boxed(),
        Pattern::Node(l, r) => prop_oneof![
            1 => Just(Pattern::Wildcard),
            4 => (above(*l), above(*r)).prop_map(|(a, b)| Pattern::node(a, b)),
        ]
        .boxed(),
        other => prop_oneof![Just(Pattern::Wildcard), Just(other)].boxed(),
    }
}

/// A type `u` with `t ≤ u`, keeping binders.
pub fn type_above(t: Type) -> BoxedStrategy<Type> {
    match t {
        Type::Base(p) => above(p).prop_map(Type::base).boxed(),
        Type::Arrow(d, c) => (type_below(*d), type_above(*c))
            .prop_map(|(d, c)| Type::arrow(d, c))
            .boxed(),
        Type::Forall(a, body) => type_above(*body)
            .prop_map(move |b| Type::forall(a.clone(), b))
            .boxed(),
    }
}

/// A type `u` with `u ≤ t`, keeping binders.
pub fn type_below(t: Type) -> BoxedStrategy<Type> {
    match t {
        Type::Base(p) => below(p).prop_map(Type::base).boxed(),
        Type::Arrow(d, c) => (type_above(*d), type_below(*c))
            .prop_map(|(d, c)| Type::arrow(d, c))
            .boxed(),
        Type::Forall(a, body) => type_below(*body)
            .prop_map(move |b| Type::forall(a.clone(), b))
            .boxed(),
    }
}

/// A closed, wildcard-free `q` with `p ⊵ q`.
pub fn weakly_embedded(p: Pattern) -> BoxedStrategy<Pattern> {
    match p.clone() {
        Pattern::Node(..) => prop_oneof![Just(p.clone()), strictly_embedded(p)].boxed(),
        _ => Just(p).boxed(),
    }
}

/// A closed, wildcard-free `q` with `p ⊳ q`. `p` must be a `node`.
pub fn strictly_embedded(p: Pattern) -> BoxedStrategy<Pattern> {
    let Pattern::Node(l, r) = p else {
        panic!("only node patterns embed strictly");
    };
    let (l, r) = (*l, *r);
    let mut options: Vec<BoxedStrategy<Pattern>> =
        vec![weakly_embedded(l.clone()), weakly_embedded(r.clone())];
    if matches!(l, Pattern::Node(..)) {
        options.push(
            (strictly_embedded(l.clone()), weakly_embedded(r.clone()))
                .prop_map(|(a, b)| Pattern::node(a, b))
                .boxed(),
        );
    }
    if matches!(r, Pattern::Node(..)) {
        options.push(
            (weakly_embedded(l), strictly_embedded(r))
                .prop_map(|(a, b)| Pattern::node(a, b))
                .boxed(),
        );
    }
    proptest::strategy::Union::new(options).boxed()
}

/// Closed wildcard-free node pattern with its strict embedding.
pub fn strict_pair(depth: u32) -> BoxedStrategy<(Pattern, Pattern)> {
    (closed_wildcard_free(depth), closed_wildcard_free(depth))
        .prop_map(|(l, r)| Pattern::node(l, r))
        .prop_flat_map(|p| (Just(p.clone()), strictly_embedded(p)))
        .boxed()
}

fn neutral_head() -> impl Strategy<Value = ErasedTerm> {
    prop_oneof![
        proptest::sample::select(TERM_VARS).prop_map(ErasedTerm::var),
        proptest::sample::select(SYMBOLS).prop_map(ErasedTerm::sym),
    ]
}

/// Normal forms over a rule-free signature: values built from `Leaf`,
/// `Node` and abstractions, and neutral applications.
pub fn normal_form(depth: u32) -> BoxedStrategy<ErasedTerm> {
    let base = prop_oneof![
        3 => Just(ErasedTerm::Leaf),
        1 => neutral_head(),
        1 => Just(ErasedTerm::Node),
    ];
    base.prop_recursive(depth, 24, 2, |inner| {
        prop_oneof![
            3 => (inner.clone(), inner.clone()).prop_map(|(l, r)| ErasedTerm::node(l, r)),
            1 => (proptest::sample::select(TERM_VARS), inner.clone())
                .prop_map(|(x, b)| ErasedTerm::lam(x, b)),
            1 => (neutral_head(), inner.clone()).prop_map(|(h, a)| ErasedTerm::app(h, a)),
            1 => inner.prop_map(|a| ErasedTerm::app(ErasedTerm::Node, a)),
        ]
    })
    .boxed()
}

/// A neutral normal form.
pub fn neutral(depth: u32) -> BoxedStrategy<ErasedTerm> {
    prop_oneof![
        neutral_head().boxed(),
        (neutral_head(), normal_form(depth))
            .prop_map(|(h, a)| ErasedTerm::app(h, a))
            .boxed(),
        normal_form(depth)
            .prop_map(|a| ErasedTerm::app(ErasedTerm::Node, a))
            .boxed(),
        Just(ErasedTerm::Node).boxed(),
    ]
    .boxed()
}

/// A normal form whose pattern form is the closed pattern `p`.
pub fn with_pattern_form(p: Pattern) -> BoxedStrategy<ErasedTerm> {
    match p {
        Pattern::Leaf => Just(ErasedTerm::Leaf).boxed(),
        Pattern::Bottom => neutral(1),
        Pattern::Wildcard => (proptest::sample::select(TERM_VARS), normal_form(1))
            .prop_map(|(x, b)| ErasedTerm::lam(x, b))
            .boxed(),
        Pattern::Node(l, r) => (with_pattern_form(*l), with_pattern_form(*r))
            .prop_map(|(a, b)| ErasedTerm::node(a, b))
            .boxed(),
        Pattern::Var(_) => panic!("pattern form of a closed pattern only"),
    }
}

/// A normal form `v` with `v ⇓ p` for the closed pattern `p`.
pub fn matching(p: Pattern) -> BoxedStrategy<ErasedTerm> {
    let exact = match p {
        Pattern::Wildcard => normal_form(2),
        Pattern::Bottom => neutral(1),
        Pattern::Leaf => Just(ErasedTerm::Leaf).boxed(),
        Pattern::Node(l, r) => (matching(*l), matching(*r))
            .prop_map(|(a, b)| ErasedTerm::node(a, b))
            .boxed(),
        Pattern::Var(_) => panic!("matching against a closed pattern only"),
    };
    prop_oneof![4 => exact, 1 => neutral(1)].boxed()
}

fn span() -> Span {
    Span::default()
}

fn rhs_term(depth: u32) -> BoxedStrategy<Term> {
    let atom = prop_oneof![
        Just(Term::Leaf),
        Just(Term::Node),
        proptest::sample::select(TERM_VARS).prop_map(Term::var),
        proptest::sample::select(SYMBOLS).prop_map(Term::sym),
    ];
    atom.prop_recursive(depth, 24, 2, |inner| {
        prop_oneof![
            3 => (inner.clone(), inner.clone()).prop_map(|(f, a)| Term::app(f, a)),
            1 => (inner.clone(), pattern(2)).prop_map(|(f, p)| Term::pat_app(f, p)),
            1 => (proptest::sample::select(TERM_VARS), ty(2, 2), inner.clone())
                .prop_map(|(x, t, b)| Term::lam(x, t, b)),
            1 => (proptest::sample::select(PATTERN_VARS), inner)
                .prop_map(|(a, b)| Term::pat_lam(a, b)),
        ]
    })
    .boxed()
}

fn ctor_term(depth: u32) -> BoxedStrategy<Term> {
    prop_oneof![
        Just(Term::Leaf),
        proptest::sample::select(TERM_VARS).prop_map(Term::var),
    ]
    .prop_recursive(depth, 16, 2, |inner| {
        (
            inner.clone(),
            inner,
            proptest::option::of((minimal_pattern(1), minimal_pattern(1))),
        )
            .prop_map(|(l, r, annot)| {
                let node = match annot {
                    Some((p, q)) => Term::pat_app(Term::pat_app(Term::Node, p), q),
                    None => Term::Node,
                };
                Term::app(Term::app(node, l), r)
            })
    })
    .boxed()
}

fn rule() -> BoxedStrategy<RewriteRule> {
    (
        proptest::sample::select(SYMBOLS),
        proptest::collection::vec(pattern(2), 0..3),
        proptest::collection::vec(ctor_term(2), 0..3),
        rhs_term(3),
    )
        .prop_map(|(head, pattern_args, args, rhs)| RewriteRule {
            head: head.to_string(),
            pattern_args,
            args,
            rhs,
            span: span(),
        })
        .boxed()
}

/// Syntactically well-formed systems over `f0..f3`; not necessarily well
/// typed.
pub fn system() -> BoxedStrategy<RewriteSystem> {
    (
        proptest::collection::vec((ty(3, 2), 0usize..3), SYMBOLS.len()),
        proptest::collection::vec(rule(), 0..5),
    )
        .prop_map(|(decls, rules)| RewriteSystem {
            signature: Signature {
                decls: decls
                    .into_iter()
                    .zip(SYMBOLS)
                    .map(|((ty, k), name)| SymbolDecl::new(*name, ty, k))
                    .collect(),
            },
            rules,
        })
        .boxed()
}

/// Wildcard-free patterns over `a`, `b`, `c`.
pub fn unifiable_input(depth: u32) -> BoxedStrategy<Pattern> {
    prop_oneof![
        3 => Just(Pattern::Leaf),
        1 => Just(Pattern::Bottom),
        4 => proptest::sample::select(PATTERN_VARS).prop_map(Pattern::var),
    ]
    .prop_recursive(depth, 16, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| Pattern::node(l, r))
    })
    .boxed()
}

/// `n` nodes with random strictness and edges.
pub fn graph(n: usize) -> impl Strategy<Value = (Vec<bool>, Vec<(usize, usize)>)> {
    (
        proptest::collection::vec(any::<bool>(), n),
        proptest::collection::vec((0..n, 0..n), 0..=n * n),
    )
}

/// `i` is the identity on trees, `c` chooses between two trees.
pub const CHOICE: &str = "
    symbol i : forall a. B(a) -> B(a) recursive 1;
    symbol c : B(_) recursive 0;
    rule i[leaf] Leaf -> Leaf;
    rule i[node(a,b)] (Node[a,b] x y) -> Node[a,b] (i[a] x) (i[b] y);
    rule c -> Leaf;
    rule c -> Node Leaf Leaf;
";

pub fn valuation(vars: &[&str]) -> BoxedStrategy<Valuation> {
    proptest::collection::vec(
        proptest::collection::btree_set(closed_pattern(2), 1..4),
        vars.len(),
    )
    .prop_map({
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        move |sets| {
            let mut v = Valuation::new();
            for (a, s) in vars.iter().zip(sets) {
                v.insert(a.clone(), s).unwrap();
            }
            v
        }
    })
    .boxed()
}

/// A term to stand for a pattern variable: ground trees, the choice `c`,
/// calls of `i`, an abstraction or a free variable.
pub fn stand_in() -> BoxedStrategy<ErasedTerm> {
    let sig = parse_system(CHOICE).unwrap().signature;
    proptest::sample::select(vec![
        "Leaf",
        "Node Leaf Leaf",
        "c",
        "Node c c",
        "i (Node Leaf (Node Leaf Leaf))",
        "i c",
        "\\x. x",
        "x",
        "Node x c",
    ])
    .prop_map(move |s| parse_erased_term(s, &sig).unwrap())
    .boxed()
}

/// Instantiates a minimal pattern by a term of its shape, using one
/// stand-in per variable.
pub fn instantiate(p: &Pattern, env: &BTreeMap<String, ErasedTerm>) -> ErasedTerm {
    match p {
        Pattern::Var(a) => env[a].clone(),
        Pattern::Leaf => ErasedTerm::Leaf,
        Pattern::Node(l, r) => ErasedTerm::node(instantiate(l, env), instantiate(r, env)),
        _ => unreachable!("minimal patterns only"),
    }
}

/// Normal forms of `t`. Children of a `Node` reduce independently, so their
/// normal forms are combined directly instead of exploring every
/// interleaving.
pub fn normal_forms(rw: &Rewriter, t: &ErasedTerm) -> BTreeSet<ErasedTerm> {
    if let Some((l, r)) = t.as_node() {
        let rs = normal_forms(rw, r);
        return normal_forms(rw, l)
            .iter()
            .flat_map(|a| {
                rs.iter()
                    .map(move |b| ErasedTerm::node(a.clone(), b.clone()))
            })
            .collect();
    }
    match rw.normalize(t, 10_000) {
        ReductionOutcome::Normalized { normal_forms, .. } => normal_forms,
        _ => panic!("{t} did not normalize"),
    }
}

/// A normal form and a second one related to it: a subterm, a random
/// term, or a copy.
pub fn nf_pair() -> BoxedStrategy<(ErasedTerm, ErasedTerm)> {
    normal_form(4)
        .prop_flat_map(|v| {
            let subs = subterm_values(&v);
            (
                Just(v.clone()),
                prop_oneof![
                    2 => proptest::sample::select(subs),
                    1 => normal_form(3),
                    1 => Just(v),
                ],
            )
        })
        .boxed()
}

pub fn subterm_values(v: &ErasedTerm) -> Vec<ErasedTerm> {
    let mut out = vec![v.clone()];
    if let Some((l, r)) = v.as_node() {
        out.extend(subterm_values(l));
        out.extend(subterm_values(r));
    }
    out
}
