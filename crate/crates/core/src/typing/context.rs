use std::collections::BTreeSet;
use std::fmt;

use crate::syntax::Type;

/// Typing context: term variables with their types, each at most once.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Context {
    entries: Vec<(String, Type)>,
}

impl Context {
    pub fn new() -> Context {
        Context::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (String, Type)>) -> Context {
        let mut ctx = Context::new();
        for (x, t) in entries {
            ctx = ctx.extend(x, t);
        }
        ctx
    }

    pub fn get(&self, x: &str) -> Option<&Type> {
        self.entries.iter().find(|(y, _)| y == x).map(|(_, t)| t)
    }

    /// `Γ, x:T`, dropping any earlier binding of `x`.
    pub fn extend(&self, x: impl Into<String>, ty: Type) -> Context {
        let x = x.into();
        let mut entries: Vec<(String, Type)> = self
            .entries
            .iter()
            .filter(|(y, _)| *y != x)
            .cloned()
            .collect();
        entries.push((x, ty));
        Context { entries }
    }

    pub fn entries(&self) -> &[(String, Type)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn free_pattern_vars(&self) -> BTreeSet<String> {
        self.entries
            .iter()
            .flat_map(|(_, t)| t.free_vars())
            .collect()
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (x, t)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}:{t}")?;
        }
        Ok(())
    }
}
