use std::fmt::Write;

use super::system::RewriteSystem;
use super::term::Term;

fn arg(t: &Term) -> String {
    match t {
        Term::Var(_) | Term::Sym(_) | Term::Node | Term::Leaf => t.to_string(),
        _ => format!("({t})"),
    }
}

/// Renders a system in the concrete syntax accepted by
/// [`parse_system`](super::parse_system). Symbols come first, then rules,
/// each in source order.
pub fn print_system(sys: &RewriteSystem) -> String {
    let mut out = String::new();
    for d in &sys.signature.decls {
        let _ = writeln!(
            out,
            "symbol {} : {} recursive {};",
            d.name, d.ty, d.recursive
        );
    }
    for r in &sys.rules {
        out.push_str("rule ");
        out.push_str(&r.head);
        if !r.pattern_args.is_empty() {
            let ps: Vec<String> = r.pattern_args.iter().map(|p| p.to_string()).collect();
            let _ = write!(out, "[{}]", ps.join(","));
        }
        for a in &r.args {
            out.push(' ');
            out.push_str(&arg(a));
        }
        let _ = writeln!(out, " -> {};", r.rhs);
    }
    out
}
