use std::fmt;

use serde::Serialize;

use crate::syntax::Span;

/// A validation problem with a stable machine-readable code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub code: &'static str,
    pub message: String,
    pub span: Option<Span>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbol: Option<String>,
    /// Index of the offending rule in source order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule: Option<usize>,
}

impl Diagnostic {
    pub fn new(code: &'static str, message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            code,
            message: message.into(),
            span: None,
            symbol: None,
            rule: None,
        }
    }

    pub fn at(mut self, span: Span) -> Diagnostic {
        self.span = Some(span);
        self
    }

    pub fn for_symbol(mut self, name: &str) -> Diagnostic {
        self.symbol = Some(name.to_string());
        self
    }

    pub fn for_rule(mut self, index: usize) -> Diagnostic {
        self.rule = Some(index);
        self
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(span) = self.span {
            write!(f, "{span}: ")?;
        }
        write!(f, "error[{}]: {}", self.code, self.message)
    }
}

impl serde::Serialize for Span {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Span", 2)?;
        st.serialize_field("line", &self.line)?;
        st.serialize_field("col", &self.col)?;
        st.end()
    }
}

/// Stable diagnostic codes.
pub mod codes {
    pub const SIG_DUPLICATE: &str = "E-SIG-DUPLICATE";
    pub const SIG_FREE_VAR: &str = "E-SIG-FREE-VAR";
    pub const SIG_DISTINCT: &str = "E-SIG-DISTINCT";
    pub const SIG_ARITY: &str = "E-SIG-ARITY";
    pub const SIG_SHAPE: &str = "E-SIG-SHAPE";
    pub const SIG_POSITIVITY: &str = "E-SIG-POSITIVITY";
    pub const UNDECLARED_SYMBOL: &str = "E-UNDECLARED-SYMBOL";
    pub const LHS_ARITY: &str = "E-LHS-ARITY";
    pub const LHS_NOT_CONSTRUCTOR: &str = "E-LHS-NOT-CONSTRUCTOR";
    pub const LHS_NONMINIMAL: &str = "E-LHS-NONMINIMAL";
    pub const MIN_PATTERN_MISMATCH: &str = "E-MIN-PATTERN-MISMATCH";
    pub const MIN_ANNOTATION_MISMATCH: &str = "E-MIN-ANNOTATION-MISMATCH";
    pub const RHS_FREE_VAR: &str = "E-RHS-FREE-VAR";
    pub const RHS_FREE_PATTERN_VAR: &str = "E-RHS-FREE-PATTERN-VAR";
    pub const RHS_NOT_FULLY_APPLIED: &str = "E-RHS-NOT-FULLY-APPLIED";
    pub const RHS_MISMATCH: &str = "E-RHS-MISMATCH";
    pub const TYPE_UNBOUND_VAR: &str = "E-TYPE-UNBOUND-VAR";
    pub const TYPE_NOT_ARROW: &str = "E-TYPE-NOT-ARROW";
    pub const TYPE_NOT_FORALL: &str = "E-TYPE-NOT-FORALL";
    pub const TYPE_ARG_MISMATCH: &str = "E-TYPE-ARG-MISMATCH";
    pub const TYPE_PLAM_ESCAPE: &str = "E-TYPE-PLAM-ESCAPE";
}
