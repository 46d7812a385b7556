//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::Parser;
use proptest::strategy::{Just, Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use serde_json::Value;

use common::oracles;
use hodp::analysis::{analyze, call_sites, check_scc, unify_patterns, IndexAssignment};
use hodp::cli::{run, Cli};
use hodp::oracle::{
    apply_valuation, empirical_sn, ground_trees, match_patterns, pattern_form, set_sub,
    term_embeds_strict, term_embeds_weak, term_matches, term_size,
};
use hodp::rewrite::{match_lhs, ErasedRule, ErasedTerm, ReductionOutcome, Rewriter};
use hodp::syntax::{parse_system, print_system, Pattern, RewriteSystem, Type};
use hodp::typing::{pattern_sub, type_sub, validate_system, ValidatedSystem};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Deterministic draws from proptest strategies.
struct Sampler(TestRunner);

impl Sampler {
    fn new() -> Sampler {
        let rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
        Sampler(TestRunner::new_with_rng(Config::default(), rng))
    }

    fn draw<S: Strategy>(&mut self, s: &S) -> S::Value {
        loop {
            // filtered strategies may give up; just draw again
            if let Ok(tree) = s.new_tree(&mut self.0) {
                return tree.current();
            }
        }
    }
}

fn fixture_path(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn hodp(args: &[&str]) -> (u8, String, String) {
    let cli = Cli::try_parse_from(std::iter::once("hodp").chain(args.iter().copied()))
        .expect("arguments parse");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&cli, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn check_json(name: &str) -> (u8, Value) {
    let (code, out, _) = hodp(&["check", "--json", &fixture_path(name)]);
    (code, serde_json::from_str(&out).expect("report is JSON"))
}

fn labels(report: &Value) -> Vec<String> {
    report["dependencyPairs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["label"].as_str().unwrap().to_string())
        .collect()
}

fn labelled_edges(report: &Value) -> BTreeSet<(String, String)> {
    let names = labels(report);
    report["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            let a = e[0].as_u64().unwrap() as usize;
            let b = e[1].as_u64().unwrap() as usize;
            (names[a].clone(), names[b].clone())
        })
        .collect()
}

fn pairs(xs: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    xs.iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

fn strings(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

const F_APP: &str = "f♯() → app♯(node(leaf,leaf),leaf)";
const F_G: &str = "f♯() → g♯(node(leaf,leaf))";
const G_F: &str = "g♯(leaf) → f♯()";

fn example_one() -> Outcome {
    let start = Instant::now();
    let (code, report) = check_json("app.trs");
    within(Duration::from_secs(1), start)?;
    ensure(code == 0 && report["outcome"] == "TERMINATING", || {
        format!("exit {code}, outcome {}", report["outcome"])
    })?;
    let got = labels(&report);
    ensure(
        got.iter().cloned().collect::<BTreeSet<_>>() == strings(&[F_APP, F_G, G_F]),
        || format!("pairs {got:?}"),
    )?;
    let edges = labelled_edges(&report);
    ensure(edges == pairs(&[(G_F, F_APP), (G_F, F_G)]), || {
        format!("edges {edges:?}")
    })?;
    let cyclic = report["sccs"]
        .as_array()
        .unwrap()
        .iter()
        .any(|s| s["nontrivial"] == true);
    ensure(!cyclic, || "graph has a cycle".into())?;
    Ok(format!("3 pairs, 2 edges, acyclic, {:?}", start.elapsed()))
}

const FG: &str = "f♯(node(a,b)) → g♯(node(a,b))";
const FI: &str = "f♯(node(a,b)) → i♯(node(a,b))";
const GF: &str = "g♯(node(a,b)) → f♯(a)";
const GI: &str = "g♯(node(a,b)) → i♯(a)";
const GF_LEAF: &str = "g♯(leaf) → f♯(bot)";
const GH: &str = "g♯(leaf) → h♯(leaf)";
const IA: &str = "i♯(node(a,b)) → i♯(a)";
const IB: &str = "i♯(node(a,b)) → i♯(b)";
const HH: &str = "h♯(node(a,b)) → h♯(a)";

fn example_two() -> Outcome {
    let start = Instant::now();
    let (code, report) = check_json("fgih.trs");
    within(Duration::from_secs(1), start)?;
    ensure(code == 0 && report["outcome"] == "TERMINATING", || {
        format!("exit {code}, outcome {}", report["outcome"])
    })?;
    let names = labels(&report);
    ensure(
        names.len() == 9
            && names.iter().cloned().collect::<BTreeSet<_>>()
                == strings(&[FG, FI, GF, GI, GF_LEAF, GH, IA, IB, HH]),
        || format!("pairs {names:?}"),
    )?;
    let expected = pairs(&[
        (FG, GF),
        (FG, GI),
        (FI, IA),
        (FI, IB),
        (GF, FG),
        (GF, FI),
        (GI, IA),
        (GI, IB),
        (IA, IA),
        (IA, IB),
        (IB, IA),
        (IB, IB),
        (HH, HH),
    ]);
    let edges = labelled_edges(&report);
    ensure(edges == expected, || {
        format!(
            "extra {:?}, missing {:?}",
            edges.difference(&expected).collect::<Vec<_>>(),
            expected.difference(&edges).collect::<Vec<_>>()
        )
    })?;
    let mut nontrivial = BTreeSet::new();
    for s in report["sccs"].as_array().unwrap() {
        if s["nontrivial"] != true {
            continue;
        }
        let members: BTreeSet<String> = s["nodes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|n| names[n.as_u64().unwrap() as usize].clone())
            .collect();
        ensure(s["status"] == "certified", || {
            format!("{members:?} not certified")
        })?;
        let iota = s["indices"].as_object().unwrap();
        ensure(!iota.is_empty() && iota.values().all(|v| v == 1), || {
            format!("{members:?} has ι {iota:?}")
        })?;
        nontrivial.insert(members);
    }
    let want = BTreeSet::from([strings(&[FG, GF]), strings(&[IA, IB]), strings(&[HH])]);
    ensure(nontrivial == want, || {
        format!("nontrivial SCCs {nontrivial:?}")
    })?;
    Ok(format!(
        "9 pairs, 13 edges, 3 SCCs with ι = 1, {:?}",
        start.elapsed()
    ))
}

fn counterexample_gate() -> Outcome {
    let start = Instant::now();
    let (code, report) = check_json("nonminimal.trs");
    ensure(code == 2 && report["outcome"] == "INVALID", || {
        format!("exit {code}, outcome {}", report["outcome"])
    })?;
    ensure(
        report["dependencyPairs"].as_array().unwrap().is_empty()
            && report["edges"].as_array().unwrap().is_empty()
            && report["sccs"].as_array().unwrap().is_empty(),
        || "rejected system reached graph analysis".into(),
    )?;
    ensure(
        report["diagnostics"][0]["code"] == "E-MIN-PATTERN-MISMATCH",
        || format!("diagnostics {}", report["diagnostics"]),
    )?;
    let (code, out, _) = hodp(&[
        "reduce",
        &fixture_path("nonminimal.trs"),
        "--term",
        "f Leaf Leaf",
    ]);
    ensure(code == 1 && out.starts_with("FuelExhausted"), || {
        format!("reduce gave exit {code}: {out}")
    })?;
    within(Duration::from_secs(1), start)?;
    Ok(format!(
        "rejected with exit 2, reduction loops, {:?}",
        start.elapsed()
    ))
}

fn fixture_system(name: &str) -> RewriteSystem {
    parse_system(&std::fs::read_to_string(fixture_path(name)).unwrap()).unwrap()
}

fn empirical_cross_check() -> Outcome {
    let mut samples = 0;
    for name in ["app.trs", "fgih.trs"] {
        let sys = fixture_system(name);
        for s in empirical_sn(&sys, 3, 10_000) {
            samples += 1;
            ensure(!s.outcome.is_exhausted(), || {
                format!("{name}: {} exhausted its fuel", s.term)
            })?;
        }
    }
    let app = Rewriter::new(&fixture_system("app.trs"));
    let nf = app.normalize(&ErasedTerm::sym("f"), 10_000);
    ensure(
        nf.normal_forms() == Some(&BTreeSet::from([ErasedTerm::Leaf])),
        || format!("normalize(f) = {nf:?}"),
    )?;
    let fgih = Rewriter::new(&fixture_system("fgih.trs"));
    let trees = ground_trees(3);
    for t in &trees {
        let call = ErasedTerm::app(ErasedTerm::sym("i"), t.clone());
        let nf = fgih.normalize(&call, 10_000);
        ensure(
            nf.normal_forms() == Some(&BTreeSet::from([t.clone()])),
            || format!("normalize({call}) = {nf:?}"),
        )?;
    }
    Ok(format!(
        "{samples} applications normalized, i t = t on {} trees",
        trees.len()
    ))
}

/// Runs `n` draws and reports how many fail, with the shortest
/// counterexample.
fn property<S: Strategy>(
    sampler: &mut Sampler,
    name: &str,
    n: usize,
    strategy: S,
    holds: impl Fn(&S::Value) -> bool,
    show: impl Fn(&S::Value) -> String,
) -> Result<(), String> {
    let mut failures = 0;
    let mut smallest: Option<String> = None;
    for _ in 0..n {
        let v = sampler.draw(&strategy);
        if !holds(&v) {
            failures += 1;
            let shown = show(&v);
            if smallest.as_ref().is_none_or(|s| shown.len() < s.len()) {
                smallest = Some(shown);
            }
        }
    }
    match smallest {
        None => Ok(()),
        Some(v) => Err(format!(
            "{name}: {failures}/{n} counterexamples, smallest {v}"
        )),
    }
}

fn size_decrease(sampler: &mut Sampler) -> Result<(), String> {
    property(
        sampler,
        "⊳ decreases size",
        1000,
        common::nf_pair(),
        |(v1, v2)| !term_embeds_strict(v1, v2) || term_size(v1) > term_size(v2),
        |(v1, v2)| format!("{v1} ⊳ {v2}"),
    )
}

fn semantic_properties(sampler: &mut Sampler) -> Result<(), String> {
    let mut failed = Vec::new();

    let order = (
        common::pattern(3).prop_flat_map(|q| (Just(q.clone()), common::below(q))),
        common::valuation(common::PATTERN_VARS),
    );
    if let Err(e) = property(
        sampler,
        "valuations preserve ≪",
        500,
        order,
        |((q, p), theta)| {
            let pt = apply_valuation(p, theta).unwrap();
            let qt = apply_valuation(q, theta).unwrap();
            pattern_sub(p, q) && set_sub(&pt, &qt)
        },
        |((q, p), _)| format!("{p} ≪ {q}"),
    ) {
        failed.push(e);
    }

    let sys = parse_system(common::CHOICE).unwrap();
    let rw = Rewriter::new(&sys);
    let realized = (
        proptest::collection::vec(common::minimal_pattern(2), 1..3),
        proptest::collection::vec(common::stand_in(), 3),
    );
    if let Err(e) = property(
        sampler,
        "matched patterns are realized",
        500,
        realized,
        |(ps, stand_ins)| {
            let env: BTreeMap<String, ErasedTerm> = common::PATTERN_VARS
                .iter()
                .map(|a| a.to_string())
                .zip(stand_ins.iter().cloned())
                .collect();
            let ts: Vec<ErasedTerm> = ps.iter().map(|p| common::instantiate(p, &env)).collect();
            let Ok(theta) = match_patterns(&ts, ps, &rw, 10_000) else {
                return false;
            };
            ts.iter().zip(ps).all(|(t, p)| {
                let forms: BTreeSet<Pattern> = common::normal_forms(&rw, t)
                    .iter()
                    .map(pattern_form)
                    .collect();
                apply_valuation(p, &theta)
                    .unwrap()
                    .iter()
                    .all(|q| forms.contains(q))
            })
        },
        |(ps, _)| format!("{ps:?}"),
    ) {
        failed.push(e);
    }

    let strict = common::strict_pair(3).prop_flat_map(|(p, q)| {
        (
            Just(p.clone()),
            Just(q.clone()),
            common::with_pattern_form(p),
            common::matching(q),
        )
    });
    if let Err(e) = property(
        sampler,
        "embedding transfer (strict)",
        500,
        strict,
        |(_, _, v1, v2)| term_embeds_strict(v1, v2),
        |(p, q, v1, v2)| format!("{p} ⊳ {q}, pat({v1}) = {p}, {v2} ⇓ {q}, not {v1} ⊳ {v2}"),
    ) {
        failed.push(e);
    }
    let weak = common::closed_wildcard_free(3)
        .prop_flat_map(|p| (Just(p.clone()), common::weakly_embedded(p)))
        .prop_flat_map(|(p, q)| {
            (
                Just(p.clone()),
                Just(q.clone()),
                common::with_pattern_form(p),
                common::matching(q),
            )
        });
    if let Err(e) = property(
        sampler,
        "embedding transfer (weak)",
        500,
        weak,
        |(_, _, v1, v2)| term_embeds_weak(v1, v2),
        |(p, q, v1, v2)| format!("{p} ⊵ {q}, pat({v1}) = {p}, {v2} ⇓ {q}, not {v1} ⊵ {v2}"),
    ) {
        failed.push(e);
    }

    let monotone = common::closed_pattern(3)
        .prop_flat_map(|r| {
            (
                Just(r.clone()),
                common::above(r.clone()),
                common::matching(r),
            )
        })
        .prop_filter("closed", |(_, s, _)| s.is_closed());
    if let Err(e) = property(
        sampler,
        "⇓ monotone along ≪",
        500,
        monotone,
        |(r, s, v)| pattern_sub(r, s) && term_matches(v, r) && term_matches(v, s),
        |(r, s, v)| format!("{v} ⇓ {r} ≪ {s}"),
    ) {
        failed.push(e);
    }

    if failed.is_empty() {
        Ok(())
    } else {
        Err(failed.join("; "))
    }
}

/// Ground tree for a pattern of a minimal typing, variables read from `env`.
fn tree_of(p: &Pattern, env: &BTreeMap<String, ErasedTerm>) -> Option<ErasedTerm> {
    match p {
        Pattern::Leaf => Some(ErasedTerm::Leaf),
        Pattern::Node(l, r) => Some(ErasedTerm::node(tree_of(l, env)?, tree_of(r, env)?)),
        Pattern::Var(a) => env.get(a).cloned(),
        Pattern::Wildcard | Pattern::Bottom => None,
    }
}

/// Realizes two-step call chains: a well-typed ground instance of a rule,
/// one of its calls with normalized arguments, and a rule of the callee
/// that rewrites the call. Returns the number of chains checked.
fn chains_have_edges(
    sampler: &mut Sampler,
    sys: &ValidatedSystem,
    draws: usize,
) -> Result<usize, String> {
    let sig = &sys.system.signature;
    let g = analyze(sys).graph;
    let rw = Rewriter::new(&sys.system);
    // deeper instances make the interleaving space of `normalize` explode
    let trees = ground_trees(2);
    let pick = proptest::sample::select(trees.clone());
    let node_of =
        |pair: &hodp::analysis::DependencyPair| g.nodes.iter().position(|n| n.same_pair(pair));
    let mut chains = 0;
    for vr in &sys.rules {
        let base_context = vr
            .min
            .context
            .entries()
            .iter()
            .all(|(_, t)| matches!(t, Type::Base(_)));
        if !base_context {
            continue;
        }
        let er = ErasedRule::from_rule(&vr.rule);
        for _ in 0..draws {
            let env: BTreeMap<String, ErasedTerm> = vr
                .min
                .pattern_vars
                .iter()
                .map(|a| (a.clone(), sampler.draw(&pick)))
                .collect();
            let mut sigma = BTreeMap::new();
            for (x, t) in vr.min.context.entries() {
                let Type::Base(p) = t else { unreachable!() };
                match tree_of(p, &env) {
                    Some(v) => sigma.insert(x.clone(), v),
                    None => return Err(format!("context type {t} is not minimal")),
                };
            }
            let lhs = er.lhs.subst(&sigma);
            ensure(match_lhs(&er.lhs, &lhs).is_some(), || {
                format!("{lhs} is not an instance")
            })?;
            for site in call_sites(vr, sig) {
                if site.under_binder {
                    continue;
                }
                let from =
                    node_of(&site.pair).ok_or_else(|| format!("no node for {}", site.pair))?;
                let mut args = Vec::new();
                for a in &site.args {
                    let t = a.erase().subst(&sigma);
                    match rw.normalize(&t, 10_000) {
                        ReductionOutcome::Normalized { normal_forms, .. } => {
                            args.push(normal_forms.into_iter().collect::<Vec<_>>())
                        }
                        _ => return Err(format!("{t} did not normalize")),
                    }
                }
                // one normal form per argument
                let chosen: Vec<ErasedTerm> = args
                    .iter()
                    .map(|nfs| sampler.draw(&proptest::sample::select(nfs.clone())))
                    .collect();
                let call = ErasedTerm::apps(ErasedTerm::sym(site.pair.rhs_symbol.clone()), chosen);
                for next in sys
                    .rules
                    .iter()
                    .filter(|r| r.rule.head == site.pair.rhs_symbol)
                {
                    let next_lhs = ErasedRule::from_rule(&next.rule).lhs;
                    let (_, call_args) = call.spine();
                    let (_, lhs_args) = next_lhs.spine();
                    if call_args.len() < lhs_args.len() {
                        continue;
                    }
                    let prefix = ErasedTerm::apps(
                        ErasedTerm::sym(site.pair.rhs_symbol.clone()),
                        call_args[..lhs_args.len()].iter().map(|t| (*t).clone()),
                    );
                    if match_lhs(&next_lhs, &prefix).is_none() {
                        continue;
                    }
                    for site2 in call_sites(next, sig) {
                        let to = node_of(&site2.pair)
                            .ok_or_else(|| format!("no node for {}", site2.pair))?;
                        chains += 1;
                        ensure(g.has_edge(from, to), || {
                            format!(
                                "{lhs} calls {call}, which rewrites by rule {}, but {} has no edge to {}",
                                next.index, g.nodes[from], g.nodes[to]
                            )
                        })?;
                    }
                }
            }
        }
    }
    Ok(chains)
}

fn graph_soundness(sampler: &mut Sampler) -> Result<usize, String> {
    let mut chains = 0;
    for name in ["app.trs", "fgih.trs"] {
        let v = validate_system(&fixture_system(name)).map_err(|d| format!("{d:?}"))?;
        chains += chains_have_edges(sampler, &v, 60)?;
    }
    ensure(chains >= 100, || format!("only {chains} chains realized"))?;
    Ok(chains)
}

fn property_suites() -> Outcome {
    let start = Instant::now();
    let mut sampler = Sampler::new();
    let mut failed = Vec::new();
    if let Err(e) = size_decrease(&mut sampler) {
        failed.push(format!("(a) {e}"));
    }
    if let Err(e) = semantic_properties(&mut sampler) {
        failed.push(format!("(b) {e}"));
    }
    let chains = match graph_soundness(&mut sampler) {
        Ok(n) => n,
        Err(e) => {
            failed.push(format!("(c) {e}"));
            0
        }
    };
    if let Err(e) = within(Duration::from_secs(60), start) {
        failed.push(e);
    }
    if failed.is_empty() {
        Ok(format!(
            "{chains} call chains realized, {:?}",
            start.elapsed()
        ))
    } else {
        Err(failed.join(" | "))
    }
}

fn scc_check_agrees(strict: &[bool], edges: &[(usize, usize)]) -> Result<usize, String> {
    let g = oracles::synthetic_graph(strict, edges);
    let iota = IndexAssignment::from([("s".to_string(), 1)]);
    let mut checked = 0;
    for scc in oracles::sccs_by_closure(&g.succ) {
        let ok = check_scc(&scc, &g, &iota).is_ok();
        ensure(
            ok == oracles::every_cycle_has_strict(&g, &scc, strict),
            || format!("strict {strict:?}, edges {edges:?}, SCC {scc:?}: check gave {ok}"),
        )?;
        checked += 1;
    }
    Ok(checked)
}

fn criterion_internals() -> Outcome {
    let mut checked = 0;
    // every graph on up to three nodes
    for n in 1..=3usize {
        let all_edges: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        for mask in 0u32..(1 << all_edges.len()) {
            let edges: Vec<(usize, usize)> = all_edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, e)| *e)
                .collect();
            for s in 0u32..(1 << n) {
                let strict: Vec<bool> = (0..n).map(|i| s & (1 << i) != 0).collect();
                checked += scc_check_agrees(&strict, &edges)?;
            }
        }
    }
    // sampled graphs on four to six nodes
    let mut sampler = Sampler::new();
    let graphs = (4usize..=6).prop_flat_map(common::graph);
    for _ in 0..3000 {
        let (strict, edges) = sampler.draw(&graphs);
        checked += scc_check_agrees(&strict, &edges)?;
    }
    Ok(format!("{checked} SCCs agree with cycle enumeration"))
}

fn infrastructure() -> Outcome {
    let mut sampler = Sampler::new();
    let mut failed = Vec::new();

    if let Err(e) = property(
        &mut sampler,
        "round trip",
        500,
        common::system(),
        |sys| {
            let text = print_system(sys);
            parse_system(&text).is_ok_and(|back| back.alpha_eq(sys) && print_system(&back) == text)
        },
        print_system,
    ) {
        failed.push(e);
    }

    let checks: [Result<(), String>; 4] = [
        property(
            &mut sampler,
            "≪ reflexive",
            500,
            common::pattern(4),
            |p| pattern_sub(p, p),
            |p| p.to_string(),
        ),
        property(
            &mut sampler,
            "≪ transitive",
            500,
            common::pattern(4)
                .prop_flat_map(|q| (common::below(q.clone()), Just(q.clone()), common::above(q))),
            |(p, q, r)| pattern_sub(p, q) && pattern_sub(q, r) && pattern_sub(p, r),
            |(p, q, r)| format!("{p} ≪ {q} ≪ {r}"),
        ),
        property(
            &mut sampler,
            "≤ reflexive",
            500,
            common::ty(4, 3),
            |t| type_sub(t, t),
            |t| t.to_string(),
        ),
        property(
            &mut sampler,
            "≤ transitive",
            500,
            common::ty(4, 3).prop_flat_map(|u| {
                (
                    common::type_below(u.clone()),
                    Just(u.clone()),
                    common::type_above(u),
                )
            }),
            |(t, u, v)| type_sub(t, u) && type_sub(u, v) && type_sub(t, v),
            |(t, u, v)| format!("{t} ≤ {u} ≤ {v}"),
        ),
    ];
    failed.extend(checks.into_iter().filter_map(Result::err));

    let unifiable = (common::unifiable_input(3), common::unifiable_input(3))
        .prop_filter("unifiable", |(p, q)| unify_patterns(p, q).is_ok());
    if let Err(e) = property(
        &mut sampler,
        "mgu",
        500,
        unifiable,
        |(p, q)| {
            let theta = unify_patterns(p, q).unwrap();
            p.subst(&theta) == q.subst(&theta)
                && oracles::ground_unifiers(p, q, 2)
                    .iter()
                    .all(|sigma| oracles::is_instance(sigma, &theta))
        },
        |(p, q)| format!("{p} ⋈ {q}"),
    ) {
        failed.push(e);
    }

    if failed.is_empty() {
        Ok("round trip, subtyping and unifier checks hold".into())
    } else {
        Err(failed.join("; "))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 higher-order example", example_one),
        ("2 first-order example", example_two),
        ("3 non-minimal rule gate", counterexample_gate),
        ("4 empirical normalization", empirical_cross_check),
        ("5 property suites", property_suites),
        (
            "6 acyclicity check vs cycle enumeration",
            criterion_internals,
        ),
        ("7 infrastructure properties", infrastructure),
    ];
    let mut all = true;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail} [{:.1?}]", start.elapsed()),
            Err(reason) => {
                all = false;
                println!("FAIL {name}: {reason} [{:.1?}]", start.elapsed());
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
