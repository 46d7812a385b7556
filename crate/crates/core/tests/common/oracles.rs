//! Brute-force reference implementations used to check the library.

use std::collections::{BTreeMap, BTreeSet};

use hodp::analysis::{DependencyGraph, DependencyPair, PatternSubst};
use hodp::syntax::Pattern;

/// Every pattern over `{leaf, bot, node}` of depth at most `depth`.
pub fn closed_patterns(depth: usize) -> Vec<Pattern> {
    let mut all = vec![Pattern::Leaf, Pattern::Bottom];
    for _ in 0..depth {
        let mut next = vec![Pattern::Leaf, Pattern::Bottom];
        for l in &all {
            for r in &all {
                next.push(Pattern::node(l.clone(), r.clone()));
            }
        }
        all = next;
    }
    all
}

/// Every substitution of the given variables by closed patterns of depth
/// at most `depth` that unifies `p` and `q`.
pub fn ground_unifiers(p: &Pattern, q: &Pattern, depth: usize) -> Vec<PatternSubst> {
    let mut vars = BTreeSet::new();
    vars.extend(p.free_vars());
    vars.extend(q.free_vars());
    let vars: Vec<String> = vars.into_iter().collect();
    let values = closed_patterns(depth);
    let mut out = Vec::new();
    let mut choice = vec![0usize; vars.len()];
    loop {
        let sigma: PatternSubst = vars
            .iter()
            .cloned()
            .zip(choice.iter().map(|&i| values[i].clone()))
            .collect();
        if p.subst(&sigma) == q.subst(&sigma) {
            out.push(sigma);
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < values.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// `σ` is an instance of `θ`: `σ(θ(x)) = σ(x)` for every variable `x` in
/// the domain of `σ`.
pub fn is_instance(sigma: &PatternSubst, theta: &PatternSubst) -> bool {
    sigma.iter().all(|(x, v)| {
        let tx = theta
            .get(x)
            .cloned()
            .unwrap_or_else(|| Pattern::var(x.clone()));
        tx.subst(sigma) == *v
    })
}

/// Strongly connected components by mutual reachability.
pub fn sccs_by_closure(succ: &[Vec<usize>]) -> Vec<BTreeSet<usize>> {
    let n = succ.len();
    let mut reach = vec![vec![false; n]; n];
    for (a, bs) in succ.iter().enumerate() {
        reach[a][a] = true;
        for &b in bs {
            reach[a][b] = true;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let comp: BTreeSet<usize> = (0..n).filter(|&j| reach[i][j] && reach[j][i]).collect();
        for &j in &comp {
            seen[j] = true;
        }
        out.push(comp);
    }
    out
}

/// All simple cycles inside `within`, each reported once starting from its
/// least node.
pub fn simple_cycles(succ: &[Vec<usize>], within: &BTreeSet<usize>) -> Vec<Vec<usize>> {
    fn go(
        succ: &[Vec<usize>],
        within: &BTreeSet<usize>,
        start: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for &b in &succ[last] {
            if !within.contains(&b) || b < start {
                continue;
            }
            if b == start {
                out.push(path.clone());
            } else if !path.contains(&b) {
                path.push(b);
                go(succ, within, start, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for &s in within {
        go(succ, within, s, &mut vec![s], &mut out);
    }
    out
}

/// A graph over a single symbol `s` of recursive arity 1. Strict nodes
/// carry `node(leaf,leaf) → leaf`, weak nodes `leaf → leaf`.
pub fn synthetic_graph(strict: &[bool], edges: &[(usize, usize)]) -> DependencyGraph {
    let nodes = strict
        .iter()
        .enumerate()
        .map(|(i, &s)| DependencyPair {
            lhs_symbol: "s".into(),
            lhs_args: vec![if s {
                Pattern::node(Pattern::Leaf, Pattern::Leaf)
            } else {
                Pattern::Leaf
            }],
            rhs_symbol: "s".into(),
            rhs_args: vec![Pattern::Leaf],
            origin_rules: vec![i],
        })
        .collect();
    let mut succ = vec![Vec::new(); strict.len()];
    for &(a, b) in edges {
        succ[a].push(b);
    }
    for s in &mut succ {
        s.sort_unstable();
        s.dedup();
    }
    DependencyGraph { nodes, succ }
}

/// Every cycle inside `scc` passes through a strict node.
pub fn every_cycle_has_strict(g: &DependencyGraph, scc: &BTreeSet<usize>, strict: &[bool]) -> bool {
    simple_cycles(&g.succ, scc)
        .iter()
        .all(|c| c.iter().any(|&n| strict[n]))
}

/// Variable-renaming check: `q` is `p` up to a bijection of variables.
pub fn same_up_to_renaming(p: &[Pattern], q: &[Pattern]) -> bool {
    fn go(
        p: &Pattern,
        q: &Pattern,
        fwd: &mut BTreeMap<String, String>,
        back: &mut BTreeMap<String, String>,
    ) -> bool {
        match (p, q) {
            (Pattern::Var(a), Pattern::Var(b)) => {
                fwd.entry(a.clone()).or_insert_with(|| b.clone()) == b
                    && back.entry(b.clone()).or_insert_with(|| a.clone()) == a
            }
            (Pattern::Node(a, b), Pattern::Node(c, d)) => {
                go(a, c, fwd, back) && go(b, d, fwd, back)
            }
            _ => p == q,
        }
    }
    let (mut fwd, mut back) = (BTreeMap::new(), BTreeMap::new());
    p.len() == q.len() && p.iter().zip(q).all(|(a, b)| go(a, b, &mut fwd, &mut back))
}
