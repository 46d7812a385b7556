use std::collections::BTreeSet;

use super::dp::DependencyPair;
use super::unify::pattern_unifiable;

/// Typed dependency graph over dependency pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DependencyGraph {
    pub nodes: Vec<DependencyPair>,
    /// Sorted successor lists.
    pub succ: Vec<Vec<usize>>,
}

impl DependencyGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.succ[a].binary_search(&b).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(a, bs)| bs.iter().map(move |&b| (a, b)))
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    /// Successors of `a` inside `within`.
    pub fn succ_within<'a>(
        &'a self,
        a: usize,
        within: &'a BTreeSet<usize>,
    ) -> impl Iterator<Item = usize> + 'a {
        self.succ[a]
            .iter()
            .copied()
            .filter(move |b| within.contains(b))
    }
}

/// Whether the call of `a` can be followed by the pair `b`: same symbol and
/// `⋈` on each recursive position of `b`.
///
/// Positions beyond the recursive arity of `b` are never matched by a rule
/// and are not compared.
pub fn connects(a: &DependencyPair, b: &DependencyPair) -> bool {
    a.rhs_symbol == b.lhs_symbol
        && a.rhs_args.len() >= b.lhs_args.len()
        && a.rhs_args
            .iter()
            .zip(&b.lhs_args)
            .all(|(q, p)| pattern_unifiable(q, p))
}

pub fn build_graph(dps: Vec<DependencyPair>) -> DependencyGraph {
    let succ = dps
        .iter()
        .map(|a| (0..dps.len()).filter(|&j| connects(a, &dps[j])).collect())
        .collect();
    DependencyGraph { nodes: dps, succ }
}
