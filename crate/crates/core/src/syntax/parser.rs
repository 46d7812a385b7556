//! Recursive-descent parser for the concrete system syntax.
//!
//! ```text
//! system     ::= (symbolDecl | ruleDecl)*
//! symbolDecl ::= "symbol" IDENT ":" type "recursive" NAT ";"
//! ruleDecl   ::= "rule" term "->" term ";"
//! type       ::= "forall" IDENT+ "." type | atype ("->" type)?
//! atype      ::= "B" "(" pattern ")" | "(" type ")"
//! pattern    ::= IDENT | "leaf" | "node" "(" pattern "," pattern ")" | "_" | "bot"
//! term       ::= "\" IDENT ":" type "." term | "/\" IDENT "." term | app
//! app        ::= atom (atom | "[" pattern ("," pattern)* "]")*
//! atom       ::= IDENT | "Leaf" | "Node" | "(" term ")"
//! ```
//!
//! Identifiers in term position are parsed as variables and resolved to
//! symbols once the whole file has been read, so declarations may follow
//! their uses.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use super::pattern::Pattern;
use super::system::{RewriteRule, RewriteSystem, Signature, Span, SymbolDecl};
use super::term::{SpineArg, Term};
use super::types::Type;
use crate::rewrite::ErasedTerm;

pub const RESERVED: &[&str] = &[
    "Leaf",
    "Node",
    "B",
    "leaf",
    "node",
    "bot",
    "forall",
    "rule",
    "symbol",
    "recursive",
];

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{span}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub span: Span,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Kw(&'static str),
    Nat(usize),
    Colon,
    Dot,
    Arrow,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Semi,
    Lambda,
    PatLambda,
    Underscore,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Kw(k) => write!(f, "`{k}`"),
            Tok::Nat(n) => write!(f, "number `{n}`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBrack => f.write_str("`[`"),
            Tok::RBrack => f.write_str("`]`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Lambda => f.write_str("`\\`"),
            Tok::PatLambda => f.write_str("`/\\`"),
            Tok::Underscore => f.write_str("`_`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    macro_rules! bump {
        () => {{
            if chars[i] == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            i += 1;
        }};
    }
    while i < chars.len() {
        let c = chars[i];
        let span = Span { line, col };
        if c.is_whitespace() {
            bump!();
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                bump!();
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < chars.len()
                && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
            {
                s.push(chars[i]);
                bump!();
            }
            let tok = if s == "_" {
                Tok::Underscore
            } else if let Some(kw) = RESERVED.iter().find(|k| **k == s) {
                Tok::Kw(kw)
            } else {
                Tok::Ident(s)
            };
            toks.push((tok, span));
            continue;
        }
        if c.is_ascii_digit() {
            let mut n: usize = 0;
            while i < chars.len() && chars[i].is_ascii_digit() {
                n = n
                    .checked_mul(10)
                    .and_then(|n| n.checked_add(chars[i] as usize - '0' as usize))
                    .ok_or_else(|| ParseError {
                        span,
                        expected: vec!["a natural number that fits in usize".into()],
                        found: "overflowing literal".into(),
                    })?;
                bump!();
            }
            toks.push((Tok::Nat(n), span));
            continue;
        }
        let two = |a: char, b: char| c == a && chars.get(i + 1) == Some(&b);
        let tok = if two('-', '>') {
            bump!();
            Tok::Arrow
        } else if two('/', '\\') {
            bump!();
            Tok::PatLambda
        } else {
            match c {
                ':' => Tok::Colon,
                '.' => Tok::Dot,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBrack,
                ']' => Tok::RBrack,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                '\\' => Tok::Lambda,
                other => {
                    return Err(ParseError {
                        span,
                        expected: vec!["a token".into()],
                        found: format!("character `{other}`"),
                    })
                }
            }
        };
        bump!();
        toks.push((tok, span));
    }
    toks.push((Tok::Eof, Span { line, col }));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    /// Erased-term mode: no annotations, no pattern forms.
    erased: bool,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn new(src: &str, erased: bool) -> PResult<Parser> {
        Ok(Parser {
            toks: lex(src)?,
            pos: 0,
            erased,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &[&str]) -> PResult<T> {
        Err(ParseError {
            span: self.span(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> PResult<()> {
        if *self.peek() == tok {
            self.advance();
            Ok(())
        } else {
            self.error(&[what])
        }
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.advance();
                Ok(s)
            }
            _ => self.error(&["identifier"]),
        }
    }

    fn system(&mut self) -> PResult<RewriteSystem> {
        let mut sys = RewriteSystem::default();
        loop {
            let span = self.span();
            match self.peek() {
                Tok::Kw("symbol") => {
                    self.advance();
                    let name = self.ident()?;
                    self.expect(Tok::Colon, "`:`")?;
                    let ty = self.ty()?;
                    self.expect(Tok::Kw("recursive"), "`recursive`")?;
                    let recursive = match *self.peek() {
                        Tok::Nat(n) => {
                            self.advance();
                            n
                        }
                        _ => return self.error(&["natural number"]),
                    };
                    self.expect(Tok::Semi, "`;`")?;
                    sys.signature.decls.push(SymbolDecl {
                        name,
                        ty,
                        recursive,
                        span,
                    });
                }
                Tok::Kw("rule") => {
                    self.advance();
                    let lhs_start = self.span();
                    let lhs = self.term()?;
                    self.expect(Tok::Arrow, "`->`")?;
                    let rhs = self.term()?;
                    self.expect(Tok::Semi, "`;`")?;
                    let (head, pattern_args, args) = split_lhs(&lhs).ok_or_else(|| ParseError {
                        span: lhs_start,
                        expected: vec!["left-hand side `symbol[patterns] args`".into()],
                        found: format!("`{lhs}`"),
                    })?;
                    sys.rules.push(RewriteRule {
                        head,
                        pattern_args,
                        args,
                        rhs,
                        span,
                    });
                }
                Tok::Eof => break,
                _ => return self.error(&["`symbol`", "`rule`"]),
            }
        }
        resolve_system(&mut sys);
        Ok(sys)
    }

    fn ty(&mut self) -> PResult<Type> {
        if *self.peek() == Tok::Kw("forall") {
            self.advance();
            let mut binders = vec![self.ident()?];
            while let Tok::Ident(_) = self.peek() {
                binders.push(self.ident()?);
            }
            self.expect(Tok::Dot, "`.`")?;
            let body = self.ty()?;
            return Ok(Type::forall_many(binders, body));
        }
        let dom = self.atype()?;
        if *self.peek() == Tok::Arrow {
            self.advance();
            let cod = self.ty()?;
            Ok(Type::arrow(dom, cod))
        } else {
            Ok(dom)
        }
    }

    fn atype(&mut self) -> PResult<Type> {
        match self.peek() {
            Tok::Kw("B") => {
                self.advance();
                self.expect(Tok::LParen, "`(`")?;
                let p = self.pattern()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Type::Base(p))
            }
            Tok::LParen => {
                self.advance();
                let t = self.ty()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => self.error(&["`B`", "`(`", "`forall`"]),
        }
    }

    fn pattern(&mut self) -> PResult<Pattern> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.advance();
                Ok(Pattern::Var(s))
            }
            Tok::Kw("leaf") => {
                self.advance();
                Ok(Pattern::Leaf)
            }
            Tok::Kw("bot") => {
                self.advance();
                Ok(Pattern::Bottom)
            }
            Tok::Underscore => {
                self.advance();
                Ok(Pattern::Wildcard)
            }
            Tok::Kw("node") => {
                self.advance();
                self.expect(Tok::LParen, "`(`")?;
                let l = self.pattern()?;
                self.expect(Tok::Comma, "`,`")?;
                let r = self.pattern()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Pattern::node(l, r))
            }
            _ => self.error(&["pattern"]),
        }
    }

    fn term(&mut self) -> PResult<Term> {
        match self.peek() {
            Tok::Lambda => {
                self.advance();
                let x = self.ident()?;
                let annot = if self.erased {
                    // placeholder; erased terms carry no annotation
                    Type::Base(Pattern::Wildcard)
                } else {
                    self.expect(Tok::Colon, "`:`")?;
                    self.ty()?
                };
                self.expect(Tok::Dot, "`.`")?;
                let body = self.term()?;
                Ok(Term::lam(x, annot, body))
            }
            Tok::PatLambda if !self.erased => {
                self.advance();
                let a = self.ident()?;
                self.expect(Tok::Dot, "`.`")?;
                let body = self.term()?;
                Ok(Term::pat_lam(a, body))
            }
            _ => self.app(),
        }
    }

    fn app(&mut self) -> PResult<Term> {
        let mut t = match self.atom()? {
            Some(a) => a,
            None => {
                return if self.erased {
                    self.error(&["term"])
                } else {
                    self.error(&["term", "`\\`", "`/\\`"])
                }
            }
        };
        loop {
            if *self.peek() == Tok::LBrack && !self.erased {
                self.advance();
                t = Term::pat_app(t, self.pattern()?);
                while *self.peek() == Tok::Comma {
                    self.advance();
                    t = Term::pat_app(t, self.pattern()?);
                }
                self.expect(Tok::RBrack, "`]`")?;
                continue;
            }
            match self.atom()? {
                Some(a) => t = Term::app(t, a),
                None => break,
            }
        }
        Ok(t)
    }

    fn atom(&mut self) -> PResult<Option<Term>> {
        let t = match self.peek().clone() {
            Tok::Ident(s) => Term::Var(s),
            Tok::Kw("Leaf") => Term::Leaf,
            Tok::Kw("Node") => Term::Node,
            Tok::LParen => {
                self.advance();
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                return Ok(Some(t));
            }
            _ => return Ok(None),
        };
        self.advance();
        Ok(Some(t))
    }
}

fn split_lhs(lhs: &Term) -> Option<(String, Vec<Pattern>, Vec<Term>)> {
    let (head, spine) = lhs.spine();
    let head = match head {
        Term::Var(f) => f.clone(),
        _ => return None,
    };
    let mut patterns = Vec::new();
    let mut args = Vec::new();
    for a in spine {
        match a {
            SpineArg::Pattern(p) if args.is_empty() => patterns.push(p.clone()),
            SpineArg::Pattern(_) => return None,
            SpineArg::Term(t) => args.push(t.clone()),
        }
    }
    Some((head, patterns, args))
}

/// Turns identifiers that name declared symbols (and are not shadowed by a
/// lambda) into `Term::Sym`.
fn resolve(t: &Term, symbols: &BTreeSet<String>, bound: &mut Vec<String>) -> Term {
    match t {
        Term::Var(x) if !bound.contains(x) && symbols.contains(x) => Term::Sym(x.clone()),
        Term::Var(_) | Term::Sym(_) | Term::Node | Term::Leaf => t.clone(),
        Term::App(f, a) => Term::app(resolve(f, symbols, bound), resolve(a, symbols, bound)),
        Term::PatApp(f, p) => Term::pat_app(resolve(f, symbols, bound), p.clone()),
        Term::Lam(x, ty, body) => {
            bound.push(x.clone());
            let body = resolve(body, symbols, bound);
            bound.pop();
            Term::lam(x.clone(), ty.clone(), body)
        }
        Term::PatLam(a, body) => Term::pat_lam(a.clone(), resolve(body, symbols, bound)),
    }
}

fn resolve_system(sys: &mut RewriteSystem) {
    let symbols: BTreeSet<String> = sys.signature.names().map(str::to_string).collect();
    for rule in &mut sys.rules {
        for a in &mut rule.args {
            *a = resolve(a, &symbols, &mut Vec::new());
        }
        rule.rhs = resolve(&rule.rhs, &symbols, &mut Vec::new());
    }
}

fn finish<T>(p: &Parser, value: T) -> PResult<T> {
    if *p.peek() == Tok::Eof {
        Ok(value)
    } else {
        p.error(&["end of input"])
    }
}

/// Parses a whole system file.
pub fn parse_system(src: &str) -> Result<RewriteSystem, ParseError> {
    Parser::new(src, false)?.system()
}

pub fn parse_type(src: &str) -> Result<Type, ParseError> {
    let mut p = Parser::new(src, false)?;
    let t = p.ty()?;
    finish(&p, t)
}

pub fn parse_pattern(src: &str) -> Result<Pattern, ParseError> {
    let mut p = Parser::new(src, false)?;
    let t = p.pattern()?;
    finish(&p, t)
}

/// Parses an annotated term, resolving identifiers against `sig`.
pub fn parse_term(src: &str, sig: &Signature) -> Result<Term, ParseError> {
    let mut p = Parser::new(src, false)?;
    let t = p.term()?;
    let t = finish(&p, t)?;
    let symbols = sig.names().map(str::to_string).collect();
    Ok(resolve(&t, &symbols, &mut Vec::new()))
}

/// Parses an erased term (`\x. t`, application, `Leaf`, `Node`, identifiers).
pub fn parse_erased_term(src: &str, sig: &Signature) -> Result<ErasedTerm, ParseError> {
    let mut p = Parser::new(src, true)?;
    let t = p.term()?;
    let t = finish(&p, t)?;
    let symbols = sig.names().map(str::to_string).collect();
    Ok(resolve(&t, &symbols, &mut Vec::new()).erase())
}
