use std::collections::BTreeSet;

use super::graph::DependencyGraph;

/// Strongly connected components of an adjacency list (iterative Tarjan).
/// Each component is sorted; components are ordered by least member.
pub fn tarjan(succ: &[Vec<usize>]) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = succ.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut next = 0;
    let mut out = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        // (vertex, position in its successor list)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(top) = call.last_mut() {
            let v = top.0;
            if top.1 < succ[v].len() {
                let w = succ[v][top.1];
                top.1 += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    out.push(comp);
                }
            }
        }
    }
    out.sort_by_key(|c| c[0]);
    out
}

/// SCCs of a dependency graph.
pub fn sccs(g: &DependencyGraph) -> Vec<BTreeSet<usize>> {
    tarjan(&g.succ)
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect()
}

/// An SCC is nontrivial if it contains an edge.
pub fn is_nontrivial(scc: &BTreeSet<usize>, g: &DependencyGraph) -> bool {
    scc.len() > 1 || scc.iter().any(|&v| g.has_edge(v, v))
}

/// A cycle in the subgraph induced by `within`, as a vertex list, if any.
pub fn find_cycle_within(g: &DependencyGraph, within: &BTreeSet<usize>) -> Option<Vec<usize>> {
    let sub: Vec<usize> = within.iter().copied().collect();
    let pos = |v: usize| sub.binary_search(&v).ok();
    let adj: Vec<Vec<usize>> = sub
        .iter()
        .map(|&v| g.succ[v].iter().filter_map(|&w| pos(w)).collect())
        .collect();
    for comp in tarjan(&adj) {
        let v = comp[0];
        if comp.len() == 1 && !adj[v].contains(&v) {
            continue;
        }
        // walk inside the component until a vertex repeats
        let members: BTreeSet<usize> = comp.iter().copied().collect();
        let mut path = vec![v];
        let mut cur = v;
        loop {
            let w = *adj[cur]
                .iter()
                .find(|w| members.contains(w))
                .expect("component has an inner edge");
            if let Some(i) = path.iter().position(|&p| p == w) {
                return Some(path[i..].iter().map(|&i| sub[i]).collect());
            }
            path.push(w);
            cur = w;
        }
    }
    None
}
