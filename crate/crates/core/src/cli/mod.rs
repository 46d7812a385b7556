//! Command-line front end: `check`, `graph`, `reduce` and `typecheck`.
//!
//! Exit codes: 0 terminating or success, 1 unknown or fuel exhausted,
//! 2 validation error, 3 parse or I/O error.

mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

pub use report::{
    ContextEntry, DpReport, OracleReport, Report, RuleReport, SccReport, Timing, SCHEMA_VERSION,
};

use crate::analysis::{
    analyze, build_graph, extract_dps, is_nontrivial, to_dot, Analysis, Outcome,
};
use crate::oracle::empirical_sn;
use crate::rewrite::{normalize, ReductionOutcome, DEFAULT_FUEL};
use crate::syntax::{parse_erased_term, parse_system, RewriteSystem};
use crate::typing::{codes, validate_system, Diagnostic, ValidatedSystem};

pub const EXIT_OK: u8 = 0;
pub const EXIT_UNKNOWN: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_PARSE: u8 = 3;

/// Depth of the ground trees used by `--oracle`.
const ORACLE_DEPTH: usize = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hodp",
    version,
    about = "Termination checker for higher-order rewrite systems over binary trees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate the system and apply the termination criterion.
    Check(CheckArgs),
    /// Write the typed dependency graph in DOT format.
    Graph(GraphArgs),
    /// Normalize an erased term under the rules of the system.
    Reduce(ReduceArgs),
    /// Print the minimal typing of every rule.
    Typecheck(TypecheckArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub path: PathBuf,
    /// Budget of expanded states for `--oracle` normalization.
    #[arg(long, default_value_t = DEFAULT_FUEL)]
    pub fuel: usize,
    /// Print the JSON report instead of text.
    #[arg(long)]
    pub json: bool,
    /// Also write the annotated dependency graph to this file.
    #[arg(long, value_name = "PATH")]
    pub dot: Option<PathBuf>,
    /// Include wall-clock timing in the JSON report.
    #[arg(long)]
    pub timing: bool,
    /// Normalize every symbol on small ground trees as a sanity check.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    pub path: PathBuf,
    /// Output file; standard output when absent.
    #[arg(long, value_name = "PATH")]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    pub path: PathBuf,
    /// Erased term to normalize.
    #[arg(long)]
    pub term: String,
    /// Budget of expanded states.
    #[arg(long, default_value_t = DEFAULT_FUEL)]
    pub fuel: usize,
    /// Print every normal form instead of the first.
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Args)]
pub struct TypecheckArgs {
    pub path: PathBuf,
    /// Print the rule reports as JSON.
    #[arg(long)]
    pub json: bool,
}

/// Runs a command, writing results to `out` and problems to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match &cli.command {
        Command::Check(a) => cmd_check(a, out, err),
        Command::Graph(a) => cmd_graph(a, out, err),
        Command::Reduce(a) => cmd_reduce(a, out, err),
        Command::Typecheck(a) => cmd_typecheck(a, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_PARSE
    })
}

enum Loaded {
    System(RewriteSystem),
    Failed(u8),
}

fn load(path: &PathBuf, err: &mut dyn Write) -> std::io::Result<Loaded> {
    let src = match std::fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => {
            writeln!(err, "error: cannot read {}: {e}", path.display())?;
            return Ok(Loaded::Failed(EXIT_PARSE));
        }
    };
    match parse_system(&src) {
        Ok(sys) => Ok(Loaded::System(sys)),
        Err(e) => {
            writeln!(err, "{}:{e}", path.display())?;
            Ok(Loaded::Failed(EXIT_PARSE))
        }
    }
}

fn print_diagnostics(path: &Path, ds: &[Diagnostic], err: &mut dyn Write) -> std::io::Result<()> {
    for d in ds {
        writeln!(err, "{}:{d}", path.display())?;
    }
    Ok(())
}

fn validated(
    path: &Path,
    sys: &RewriteSystem,
    err: &mut dyn Write,
) -> std::io::Result<Result<ValidatedSystem, Vec<Diagnostic>>> {
    let v = validate_system(sys);
    if let Err(ds) = &v {
        print_diagnostics(path, ds, err)?;
    }
    Ok(v)
}

fn write_analysis(a: &Analysis, out: &mut dyn Write) -> std::io::Result<()> {
    let g = &a.graph;
    let v = &a.verdict;
    writeln!(out, "{}", v.outcome)?;
    let nontrivial = v.sccs.iter().filter(|s| is_nontrivial(s, g)).count();
    writeln!(
        out,
        "{} dependency pairs, {} edges, {} nontrivial SCCs",
        g.len(),
        g.edge_count(),
        nontrivial
    )?;
    for (i, dp) in g.nodes.iter().enumerate() {
        let succ: Vec<String> = g.succ[i].iter().map(|j| format!("n{j}")).collect();
        if succ.is_empty() {
            writeln!(out, "  n{i}: {dp}")?;
        } else {
            writeln!(out, "  n{i}: {dp}  -> {}", succ.join(", "))?;
        }
    }
    let members = |s: &std::collections::BTreeSet<usize>| {
        s.iter()
            .map(|n| format!("n{n}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    for c in &v.certificates {
        let iota: Vec<String> = c.indices.iter().map(|(s, i)| format!("{s}={i}")).collect();
        let strict = c.strict_nodes();
        let weak: Vec<String> = c
            .nodes
            .iter()
            .filter(|n| !strict.contains(n))
            .map(|n| format!("n{n}"))
            .collect();
        writeln!(
            out,
            "  SCC {{{}}}: ι {}; strict {{{}}}; weak {{{}}}",
            members(&c.nodes),
            iota.join(", "),
            members(&strict),
            weak.join(", ")
        )?;
    }
    for f in &v.failures {
        writeln!(out, "  SCC {{{}}}: {}", members(&f.nodes), f.reason)?;
    }
    Ok(())
}

fn cmd_check(a: &CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<u8> {
    let start = Instant::now();
    let path_str = a.path.display().to_string();
    let mut report = Report::new("check", &path_str);
    let sys = match load(&a.path, err)? {
        Loaded::System(s) => s,
        Loaded::Failed(code) => {
            if a.json {
                serde_json::to_writer_pretty(&mut *out, &report)?;
                writeln!(out)?;
            }
            return Ok(code);
        }
    };
    let vsys = match validated(&a.path, &sys, err)? {
        Ok(v) => v,
        Err(ds) => {
            report.outcome = "INVALID";
            report.diagnostics = ds;
            if a.json {
                serde_json::to_writer_pretty(&mut *out, &report)?;
                writeln!(out)?;
            } else {
                writeln!(out, "INVALID")?;
            }
            return Ok(EXIT_INVALID);
        }
    };
    let analysis = analyze(&vsys);
    report.rules = vsys.rules.iter().map(RuleReport::new).collect();
    report.fill_analysis(&analysis);
    if a.oracle {
        let samples = empirical_sn(&sys, ORACLE_DEPTH, a.fuel);
        report.oracle = Some(OracleReport {
            depth: ORACLE_DEPTH,
            samples: samples.len(),
            fuel_exhausted: samples
                .iter()
                .filter(|s| s.outcome.is_exhausted())
                .map(|s| s.term.to_string())
                .collect(),
        });
    }
    if let Some(dot) = &a.dot {
        std::fs::write(dot, to_dot(&analysis.graph, Some(&analysis.verdict)))?;
    }
    if a.timing {
        report.timing = Some(Timing {
            millis: start.elapsed().as_secs_f64() * 1000.0,
        });
    }
    if a.json {
        serde_json::to_writer_pretty(&mut *out, &report)?;
        writeln!(out)?;
    } else {
        write_analysis(&analysis, out)?;
        if let Some(o) = &report.oracle {
            writeln!(
                out,
                "oracle: {} ground applications of depth <= {}, {} out of fuel",
                o.samples,
                o.depth,
                o.fuel_exhausted.len()
            )?;
            for t in &o.fuel_exhausted {
                writeln!(out, "  out of fuel: {t}")?;
            }
        }
    }
    Ok(match analysis.verdict.outcome {
        Outcome::Terminating => EXIT_OK,
        Outcome::Unknown => EXIT_UNKNOWN,
    })
}

fn cmd_graph(a: &GraphArgs, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<u8> {
    let sys = match load(&a.path, err)? {
        Loaded::System(s) => s,
        Loaded::Failed(code) => return Ok(code),
    };
    let vsys = match validated(&a.path, &sys, err)? {
        Ok(v) => v,
        Err(_) => return Ok(EXIT_INVALID),
    };
    let dot = to_dot(&build_graph(extract_dps(&vsys)), None);
    match &a.dot {
        Some(p) => std::fs::write(p, dot)?,
        None => out.write_all(dot.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn cmd_reduce(a: &ReduceArgs, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<u8> {
    let sys = match load(&a.path, err)? {
        Loaded::System(s) => s,
        Loaded::Failed(code) => return Ok(code),
    };
    let undeclared: Vec<Diagnostic> = sys
        .rules
        .iter()
        .enumerate()
        .filter(|(_, r)| !sys.signature.contains(&r.head))
        .map(|(i, r)| {
            Diagnostic::new(
                codes::UNDECLARED_SYMBOL,
                format!("symbol `{}` is not declared", r.head),
            )
            .at(r.span)
            .for_rule(i)
        })
        .collect();
    if !undeclared.is_empty() {
        print_diagnostics(&a.path, &undeclared, err)?;
        return Ok(EXIT_INVALID);
    }
    if validate_system(&sys).is_err() {
        writeln!(err, "note: the system does not type-check; reducing anyway")?;
    }
    let term = match parse_erased_term(&a.term, &sys.signature) {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "--term:{e}")?;
            return Ok(EXIT_PARSE);
        }
    };
    match normalize(&term, &sys, a.fuel.max(1)) {
        ReductionOutcome::Normalized { normal_forms, .. } => {
            if a.all {
                for nf in &normal_forms {
                    writeln!(out, "{nf}")?;
                }
            } else if let Some(nf) = normal_forms.iter().next() {
                writeln!(out, "{nf}")?;
            }
            Ok(EXIT_OK)
        }
        ReductionOutcome::FuelExhausted { steps, cycle, .. } => {
            writeln!(out, "FuelExhausted after {steps} expanded states")?;
            if let Some(cycle) = cycle {
                writeln!(out, "reduction cycle:")?;
                for t in &cycle {
                    writeln!(out, "  {t}")?;
                }
                writeln!(out, "  -> {}", cycle[0])?;
            }
            Ok(EXIT_UNKNOWN)
        }
    }
}

fn cmd_typecheck(
    a: &TypecheckArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<u8> {
    let sys = match load(&a.path, err)? {
        Loaded::System(s) => s,
        Loaded::Failed(code) => return Ok(code),
    };
    let vsys = match validated(&a.path, &sys, err)? {
        Ok(v) => v,
        Err(_) => return Ok(EXIT_INVALID),
    };
    let rules: Vec<RuleReport> = vsys.rules.iter().map(RuleReport::new).collect();
    if a.json {
        serde_json::to_writer_pretty(&mut *out, &rules)?;
        writeln!(out)?;
        return Ok(EXIT_OK);
    }
    for v in &vsys.rules {
        writeln!(
            out,
            "rule {} (line {}): {}",
            v.index,
            v.rule.span.line,
            v.rule.lhs()
        )?;
        if v.min.context.is_empty() {
            writeln!(out, "  context: ∅")?;
        } else {
            writeln!(out, "  context: {}", v.min.context)?;
        }
        writeln!(out, "  lhs type: {}", v.min.lhs_type)?;
        writeln!(out, "  rhs type: {} (ok)", v.rhs_type)?;
    }
    Ok(EXIT_OK)
}
