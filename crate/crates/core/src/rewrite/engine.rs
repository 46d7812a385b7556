use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use super::term::{ErasedTerm, TermSubst};
use crate::syntax::{RewriteRule, RewriteSystem};

/// Default budget of expanded states for [`normalize`].
pub const DEFAULT_FUEL: usize = 10_000;

/// A rule compiled to erased form.
#[derive(Clone, Debug)]
pub struct ErasedRule {
    pub head: String,
    pub lhs_args: Vec<ErasedTerm>,
    pub lhs: ErasedTerm,
    pub rhs: ErasedTerm,
    vars: BTreeSet<String>,
}

impl ErasedRule {
    pub fn from_rule(rule: &RewriteRule) -> ErasedRule {
        let lhs = rule.lhs().erase();
        let lhs_args: Vec<ErasedTerm> = rule.args.iter().map(|a| a.erase()).collect();
        ErasedRule {
            head: rule.head.clone(),
            vars: lhs.free_vars(),
            lhs_args,
            lhs,
            rhs: rule.rhs.erase(),
        }
    }
}

/// Syntactic first-order matching of an erased left-hand side against a
/// term. Repeated lhs variables must match alpha-equal subterms.
pub fn match_lhs(lhs: &ErasedTerm, t: &ErasedTerm) -> Option<TermSubst> {
    let vars = lhs.free_vars();
    let mut sigma = TermSubst::new();
    match_into(lhs, t, &vars, &mut sigma).then_some(sigma)
}

fn match_into(
    pat: &ErasedTerm,
    t: &ErasedTerm,
    vars: &BTreeSet<String>,
    sigma: &mut TermSubst,
) -> bool {
    match pat {
        ErasedTerm::Var(x) if vars.contains(x) => match sigma.get(x) {
            Some(bound) => bound.alpha_eq(t),
            None => {
                sigma.insert(x.clone(), t.clone());
                true
            }
        },
        ErasedTerm::App(pf, pa) => match t {
            ErasedTerm::App(tf, ta) => {
                match_into(pf, tf, vars, sigma) && match_into(pa, ta, vars, sigma)
            }
            _ => false,
        },
        _ => pat.alpha_eq(t),
    }
}

/// One-step reduction relation of a system: head rewriting and beta,
/// closed under all term contexts (including under lambdas).
#[derive(Clone, Debug)]
pub struct Rewriter {
    rules: BTreeMap<(String, usize), Vec<ErasedRule>>,
}

impl Rewriter {
    pub fn new(sys: &RewriteSystem) -> Rewriter {
        let mut rules: BTreeMap<(String, usize), Vec<ErasedRule>> = BTreeMap::new();
        for r in &sys.rules {
            let er = ErasedRule::from_rule(r);
            rules
                .entry((er.head.clone(), er.lhs_args.len()))
                .or_default()
                .push(er);
        }
        Rewriter { rules }
    }

    fn head_reducts(&self, t: &ErasedTerm, out: &mut Vec<ErasedTerm>) {
        if let ErasedTerm::App(f, a) = t {
            if let ErasedTerm::Lam(x, body) = f.as_ref() {
                out.push(body.subst_one(x, a));
            }
        }
        let (head, args) = t.spine();
        if let ErasedTerm::Sym(name) = head {
            if let Some(rules) = self.rules.get(&(name.clone(), args.len())) {
                for rule in rules {
                    let mut sigma = TermSubst::new();
                    let matched = rule
                        .lhs_args
                        .iter()
                        .zip(&args)
                        .all(|(p, a)| match_into(p, a, &rule.vars, &mut sigma));
                    if matched {
                        out.push(rule.rhs.subst(&sigma));
                    }
                }
            }
        }
    }

    fn reducts_into(&self, t: &ErasedTerm, out: &mut Vec<ErasedTerm>) {
        self.head_reducts(t, out);
        match t {
            ErasedTerm::App(f, a) => {
                let mut inner = Vec::new();
                self.reducts_into(f, &mut inner);
                out.extend(inner.drain(..).map(|f2| ErasedTerm::app(f2, (**a).clone())));
                self.reducts_into(a, &mut inner);
                out.extend(
                    inner
                        .into_iter()
                        .map(|a2| ErasedTerm::app((**f).clone(), a2)),
                );
            }
            ErasedTerm::Lam(x, b) => {
                let mut inner = Vec::new();
                self.reducts_into(b, &mut inner);
                out.extend(inner.into_iter().map(|b2| ErasedTerm::lam(x.clone(), b2)));
            }
            _ => {}
        }
    }

    /// All one-step reducts, deduplicated up to alpha-equivalence and
    /// returned in canonical order.
    pub fn step(&self, t: &ErasedTerm) -> Vec<ErasedTerm> {
        let mut raw = Vec::new();
        self.reducts_into(t, &mut raw);
        let mut seen = BTreeMap::new();
        for r in raw {
            seen.entry(r.canonical()).or_insert(r);
        }
        seen.into_values().collect()
    }

    pub fn is_normal(&self, t: &ErasedTerm) -> bool {
        let mut raw = Vec::new();
        self.reducts_into(t, &mut raw);
        raw.is_empty()
    }

    /// Breadth-first exploration of the reduction graph from `t`, expanding
    /// at most `fuel` states.
    pub fn explore(&self, t: &ErasedTerm, fuel: usize) -> Exploration {
        let start = t.canonical();
        let mut index: HashMap<ErasedTerm, usize> = HashMap::new();
        let mut states = vec![start.clone()];
        let mut succ: Vec<Vec<usize>> = vec![Vec::new()];
        let mut expanded = vec![false];
        index.insert(start, 0);
        let mut queue = VecDeque::from([0usize]);
        let mut steps = 0;
        while let Some(id) = queue.pop_front() {
            if steps == fuel {
                queue.push_front(id);
                break;
            }
            steps += 1;
            expanded[id] = true;
            let mut raw = Vec::new();
            self.reducts_into(&states[id], &mut raw);
            let mut next = BTreeSet::new();
            for r in raw {
                let c = r.canonical();
                let rid = match index.get(&c) {
                    Some(&rid) => rid,
                    None => {
                        let rid = states.len();
                        index.insert(c.clone(), rid);
                        states.push(c);
                        succ.push(Vec::new());
                        expanded.push(false);
                        queue.push_back(rid);
                        rid
                    }
                };
                next.insert(rid);
            }
            succ[id] = next.into_iter().collect();
        }
        Exploration {
            states,
            succ,
            expanded,
            steps,
            complete: queue.is_empty(),
        }
    }
}

/// The explored part of a reduction graph. State 0 is the start term; all
/// states are alpha-canonical.
#[derive(Clone, Debug)]
pub struct Exploration {
    pub states: Vec<ErasedTerm>,
    pub succ: Vec<Vec<usize>>,
    pub expanded: Vec<bool>,
    pub steps: usize,
    /// Every reachable state was expanded.
    pub complete: bool,
}

impl Exploration {
    /// A reachable cycle, as a list of states, if one exists among the
    /// expanded states.
    pub fn find_cycle(&self) -> Option<Vec<ErasedTerm>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Color {
            White,
            Grey,
            Black,
        }
        let n = self.states.len();
        let mut color = vec![Color::White; n];
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        let mut path: Vec<usize> = vec![0];
        color[0] = Color::Grey;
        while let Some(top) = stack.last_mut() {
            let v = top.0;
            if top.1 < self.succ[v].len() {
                let w = self.succ[v][top.1];
                top.1 += 1;
                match color[w] {
                    Color::Grey => {
                        let at = path.iter().position(|&p| p == w).unwrap_or(0);
                        return Some(path[at..].iter().map(|&s| self.states[s].clone()).collect());
                    }
                    Color::White => {
                        color[w] = Color::Grey;
                        stack.push((w, 0));
                        path.push(w);
                    }
                    Color::Black => {}
                }
            } else {
                color[v] = Color::Black;
                stack.pop();
                path.pop();
            }
        }
        None
    }

    pub fn normal_forms(&self) -> BTreeSet<ErasedTerm> {
        self.states
            .iter()
            .enumerate()
            .filter(|(i, _)| self.expanded[*i] && self.succ[*i].is_empty())
            .map(|(_, t)| t.clone())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionOutcome {
    /// Every reduction from the start term terminates; these are all of
    /// its normal forms.
    Normalized {
        normal_forms: BTreeSet<ErasedTerm>,
        states: usize,
    },
    /// The budget ran out, or a reduction cycle proves that no budget
    /// would suffice.
    FuelExhausted {
        frontier: Vec<ErasedTerm>,
        steps: usize,
        cycle: Option<Vec<ErasedTerm>>,
    },
}

impl ReductionOutcome {
    pub fn normal_forms(&self) -> Option<&BTreeSet<ErasedTerm>> {
        match self {
            ReductionOutcome::Normalized { normal_forms, .. } => Some(normal_forms),
            ReductionOutcome::FuelExhausted { .. } => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, ReductionOutcome::FuelExhausted { .. })
    }
}

impl Rewriter {
    pub fn normalize(&self, t: &ErasedTerm, fuel: usize) -> ReductionOutcome {
        let ex = self.explore(t, fuel);
        if let Some(cycle) = ex.find_cycle() {
            return ReductionOutcome::FuelExhausted {
                frontier: frontier(&ex),
                steps: ex.steps,
                cycle: Some(cycle),
            };
        }
        if !ex.complete {
            return ReductionOutcome::FuelExhausted {
                frontier: frontier(&ex),
                steps: ex.steps,
                cycle: None,
            };
        }
        ReductionOutcome::Normalized {
            normal_forms: ex.normal_forms(),
            states: ex.states.len(),
        }
    }
}

fn frontier(ex: &Exploration) -> Vec<ErasedTerm> {
    ex.states
        .iter()
        .zip(&ex.expanded)
        .filter(|(_, e)| !**e)
        .map(|(t, _)| t.clone())
        .collect()
}

/// All one-step reducts of `t` under `sys`.
pub fn step(t: &ErasedTerm, sys: &RewriteSystem) -> Vec<ErasedTerm> {
    Rewriter::new(sys).step(t)
}

/// Exhaustive normalization with a budget of expanded states.
pub fn normalize(t: &ErasedTerm, sys: &RewriteSystem, fuel: usize) -> ReductionOutcome {
    Rewriter::new(sys).normalize(t, fuel)
}
