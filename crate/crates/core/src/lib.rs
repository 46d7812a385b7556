//! Termination checking for higher-order rewrite systems over binary trees
//! with pattern-refined types, by dependency pairs and a size criterion.

#![allow(clippy::result_large_err)]

pub mod analysis;
pub mod cli;
pub mod oracle;
pub mod rewrite;
pub mod syntax;
pub mod typing;

// The guide's code blocks run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/systems.md")]
    mod systems {}
    #[doc = include_str!("../../../book/src/typing.md")]
    mod typing {}
    #[doc = include_str!("../../../book/src/dependency-pairs.md")]
    mod dependency_pairs {}
    #[doc = include_str!("../../../book/src/criterion.md")]
    mod criterion {}
    #[doc = include_str!("../../../book/src/reduction.md")]
    mod reduction {}
    #[doc = include_str!("../../../book/src/semantics.md")]
    mod semantics {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/report-schema.md")]
    mod report_schema {}
}
