use serde::Serialize;

use crate::syntax::Type;

/// Occurrence polarity of a pattern variable in a type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Polarity {
    Absent,
    Positive,
    Negative,
    Both,
}

impl Polarity {
    pub fn join(self, other: Polarity) -> Polarity {
        use Polarity::*;
        match (self, other) {
            (Absent, x) | (x, Absent) => x,
            (Positive, Positive) => Positive,
            (Negative, Negative) => Negative,
            _ => Both,
        }
    }

    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
            other => other,
        }
    }

    pub fn has_negative(self) -> bool {
        matches!(self, Polarity::Negative | Polarity::Both)
    }
}

/// Polarity of the free variable `var` in `ty`. Quantifiers are descended
/// through; a quantifier rebinding `var` hides it.
pub fn polarity(var: &str, ty: &Type) -> Polarity {
    match ty {
        Type::Base(p) => {
            if p.mentions(var) {
                Polarity::Positive
            } else {
                Polarity::Absent
            }
        }
        Type::Arrow(dom, cod) => polarity(var, dom).flip().join(polarity(var, cod)),
        Type::Forall(b, body) => {
            if b == var {
                Polarity::Absent
            } else {
                polarity(var, body)
            }
        }
    }
}
