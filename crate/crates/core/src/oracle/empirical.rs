use crate::rewrite::{ErasedTerm, ReductionOutcome, Rewriter};
use crate::syntax::{RewriteSystem, Type};

/// All ground constructor trees of depth at most `depth` (`Leaf` has
/// depth 0), smallest first.
pub fn ground_trees(depth: usize) -> Vec<ErasedTerm> {
    let mut levels = vec![vec![ErasedTerm::Leaf]];
    let mut all = vec![ErasedTerm::Leaf];
    for d in 1..=depth {
        let mut next = Vec::new();
        for (i, l) in all.iter().enumerate() {
            for (j, r) in all.iter().enumerate() {
                // at least one side has depth d-1
                let li = depth_of(i, &levels);
                let rj = depth_of(j, &levels);
                if li.max(rj) == d - 1 {
                    next.push(ErasedTerm::node(l.clone(), r.clone()));
                }
            }
        }
        all.extend(next.iter().cloned());
        levels.push(next);
    }
    all
}

fn depth_of(index: usize, levels: &[Vec<ErasedTerm>]) -> usize {
    let mut seen = 0;
    for (d, level) in levels.iter().enumerate() {
        seen += level.len();
        if index < seen {
            return d;
        }
    }
    unreachable!("index within the accumulated levels")
}

/// Number of term arguments of a symbol type.
pub fn term_arity(ty: &Type) -> usize {
    ty.split_foralls().1.split_arrows().0.len()
}

/// One normalization attempt of a symbol applied to ground trees.
#[derive(Clone, Debug)]
pub struct SnSample {
    pub term: ErasedTerm,
    pub outcome: ReductionOutcome,
}

/// Applies every declared symbol to every tuple of ground trees of depth
/// at most `depth` and normalizes each application.
pub fn empirical_sn(sys: &RewriteSystem, depth: usize, fuel: usize) -> Vec<SnSample> {
    let rw = Rewriter::new(sys);
    let trees = ground_trees(depth);
    let mut out = Vec::new();
    for d in &sys.signature.decls {
        let arity = term_arity(&d.ty);
        let mut tuple = vec![0usize; arity];
        loop {
            let term = ErasedTerm::apps(
                ErasedTerm::sym(d.name.clone()),
                tuple.iter().map(|&i| trees[i].clone()),
            );
            let outcome = rw.normalize(&term, fuel);
            out.push(SnSample { term, outcome });
            // odometer increment
            let mut pos = 0;
            loop {
                if pos == arity {
                    break;
                }
                tuple[pos] += 1;
                if tuple[pos] < trees.len() {
                    break;
                }
                tuple[pos] = 0;
                pos += 1;
            }
            if pos == arity {
                break;
            }
        }
    }
    out
}
