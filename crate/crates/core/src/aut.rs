//! Graph automorphism search: equitable partition refinement plus
//! backtracking with trace, orbit, and backjump pruning.
//!
//! The search individualizes one vertex of a canonically chosen target
//! cell at a time and re-refines. The leftmost descent fixes a reference
//! leaf; every other leaf reached defines a candidate bijection onto it,
//! kept when it preserves adjacency. Subtrees are cut when their
//! refinement trace deviates from the reference path, when a branch
//! vertex lies in the orbit of an already-explored sibling under the
//! automorphisms found so far, and, after any automorphism is found, by
//! jumping straight back to the deepest reference-path ancestor.

use std::collections::VecDeque;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{PermGroup, Permutation};

type Partition = Vec<Vec<usize>>;

/// Exact automorphism group. Deterministic: the refinement order, target
/// cell rule, and branching order are all fixed by vertex numbering.
pub fn automorphism_group(graph: &Graph) -> Result<PermGroup> {
    let n = graph.n();
    if n > 4096 {
        return Err(Error::GuardExceeded {
            what: "automorphism search vertex count",
            limit: 4096,
            got: n,
        });
    }
    if n == 0 {
        return Ok(PermGroup::trivial(0));
    }
    let mut cells: Partition = vec![(0..n).collect()];
    let mut all = BitSet::new(n);
    for v in 0..n {
        all.insert(v);
    }
    let root_trace = refine(graph, &mut cells, VecDeque::from([all]));

    let mut ctx = Ctx {
        graph,
        n,
        first_leaf: None,
        path_traces: vec![root_trace],
        path_branches: Vec::new(),
        divergence: 0,
        autos: Vec::new(),
    };
    search(&mut ctx, cells, 0, true);
    PermGroup::from_generators(n, ctx.autos)
}

struct Ctx<'g> {
    graph: &'g Graph,
    n: usize,
    /// Vertex order of the reference leaf: position -> vertex.
    first_leaf: Option<Vec<usize>>,
    /// Refinement trace of the reference path, indexed by depth.
    path_traces: Vec<Vec<u64>>,
    /// Individualized vertices along the reference path.
    path_branches: Vec<usize>,
    /// Depth of the reference-path node the current subtree hangs off.
    divergence: usize,
    autos: Vec<Permutation>,
}

/// Returns a backjump target depth, or None to keep exploring.
fn search(ctx: &mut Ctx, cells: Partition, depth: usize, on_path: bool) -> Option<usize> {
    let target = match target_cell(&cells) {
        Some(pos) => pos,
        None => return handle_leaf(ctx, &cells),
    };

    let mut branch: Vec<usize> = cells[target].clone();
    branch.sort_unstable();
    let mut explored: Vec<usize> = Vec::new();
    for &v in &branch {
        let first_child = explored.is_empty();
        let child_on_path = on_path && ctx.first_leaf.is_none();
        if on_path && !first_child && in_explored_orbit(ctx, depth, v, &explored) {
            continue;
        }

        let mut child = cells.clone();
        individualize(&mut child, target, v);
        let mut singleton = BitSet::new(ctx.n);
        singleton.insert(v);
        let trace = refine(ctx.graph, &mut child, VecDeque::from([singleton]));

        let jump = if child_on_path {
            ctx.path_traces.push(trace);
            ctx.path_branches.push(v);
            search(ctx, child, depth + 1, true)
        } else {
            if trace != ctx.path_traces[depth + 1] {
                explored.push(v);
                continue;
            }
            if on_path {
                ctx.divergence = depth;
            }
            search(ctx, child, depth + 1, false)
        };
        explored.push(v);
        if let Some(d) = jump {
            if d < depth {
                return Some(d);
            }
        }
    }
    None
}

fn handle_leaf(ctx: &mut Ctx, cells: &Partition) -> Option<usize> {
    let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
    let base = match &ctx.first_leaf {
        None => {
            ctx.first_leaf = Some(order);
            return None;
        }
        Some(base) => base,
    };
    let mut images = vec![0; ctx.n];
    for (k, &v) in base.iter().enumerate() {
        images[v] = order[k];
    }
    let perm = match Permutation::from_images(images) {
        Ok(p) => p,
        Err(_) => return None,
    };
    if perm.is_identity() || !is_automorphism(ctx.graph, &perm) {
        return None;
    }
    ctx.autos.push(perm);
    Some(ctx.divergence)
}

pub(crate) fn is_automorphism(graph: &Graph, perm: &Permutation) -> bool {
    if perm.degree() != graph.n() {
        return false;
    }
    for u in 0..graph.n() {
        let mu = perm.apply(u);
        for w in graph.neighbors(u).iter() {
            if !graph.has_edge(mu, perm.apply(w)) {
                return false;
            }
        }
    }
    true
}

/// First smallest non-singleton cell, scanning in partition order.
fn target_cell(cells: &Partition) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (pos, cell) in cells.iter().enumerate() {
        if cell.len() < 2 {
            continue;
        }
        match best {
            Some(b) if cells[b].len() <= cell.len() => {}
            _ => best = Some(pos),
        }
    }
    best
}

fn individualize(cells: &mut Partition, pos: usize, v: usize) {
    let rest: Vec<usize> = cells[pos].iter().copied().filter(|&w| w != v).collect();
    cells.splice(pos..=pos, [vec![v], rest]);
}

/// Is `v` in the orbit of an explored sibling under the automorphisms
/// found so far that fix the reference path above this node pointwise?
fn in_explored_orbit(ctx: &Ctx, depth: usize, v: usize, explored: &[usize]) -> bool {
    let prefix = &ctx.path_branches[..depth];
    let gens: Vec<&Permutation> = ctx
        .autos
        .iter()
        .filter(|a| prefix.iter().all(|&p| a.apply(p) == p))
        .collect();
    if gens.is_empty() {
        return false;
    }
    let mut seen = BitSet::new(ctx.n);
    let mut frontier: Vec<usize> = Vec::new();
    for &w in explored {
        seen.insert(w);
        frontier.push(w);
    }
    while let Some(w) = frontier.pop() {
        if w == v {
            return true;
        }
        for g in &gens {
            for x in [g.apply(w), g.inverse().apply(w)] {
                if !seen.contains(x) {
                    seen.insert(x);
                    frontier.push(x);
                }
            }
        }
    }
    seen.contains(v)
}

/// Splits cells by neighbor counts toward each pending splitter until
/// stable. New sub-cells are ordered by ascending count and every one is
/// enqueued as a future splitter. Returns the trace of split events,
/// which is identical along automorphism-related search paths.
fn refine(graph: &Graph, cells: &mut Partition, mut worklist: VecDeque<BitSet>) -> Vec<u64> {
    let mut trace = Vec::new();
    while let Some(splitter) = worklist.pop_front() {
        let mut pos = 0;
        while pos < cells.len() {
            if cells[pos].len() < 2 {
                pos += 1;
                continue;
            }
            let mut by_count: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
            for &v in &cells[pos] {
                let c = graph.neighbors(v).intersection_count(&splitter);
                by_count.entry(c).or_default().push(v);
            }
            if by_count.len() < 2 {
                pos += 1;
                continue;
            }
            trace.push(pos as u64);
            trace.push(by_count.len() as u64);
            let mut subcells: Vec<Vec<usize>> = Vec::with_capacity(by_count.len());
            for (count, members) in by_count {
                trace.push(count as u64);
                trace.push(members.len() as u64);
                let mut snapshot = BitSet::new(graph.n());
                for &v in &members {
                    snapshot.insert(v);
                }
                worklist.push_back(snapshot);
                subcells.push(members);
            }
            let advance = subcells.len();
            cells.splice(pos..=pos, subcells);
            pos += advance;
        }
    }
    trace
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        complete_bipartite, complete_graph, cycle_graph, hypercube, path_graph, petersen, Graph,
    };
    use num_bigint::BigUint;

    fn order_of(graph: &Graph) -> BigUint {
        automorphism_group(graph).unwrap().order()
    }

    #[test]
    fn classic_orders() {
        assert_eq!(order_of(&cycle_graph(8).unwrap()), BigUint::from(16u32));
        assert_eq!(order_of(&path_graph(4).unwrap()), BigUint::from(2u32));
        assert_eq!(order_of(&complete_graph(4)), BigUint::from(24u32));
        assert_eq!(order_of(&petersen()), BigUint::from(120u32));
        assert_eq!(order_of(&complete_bipartite(3, 3)), BigUint::from(72u32));
    }

    #[test]
    fn hypercube_orders() {
        // 2^d * d! for the d-cube.
        assert_eq!(order_of(&hypercube(3).unwrap()), BigUint::from(48u32));
        assert_eq!(order_of(&hypercube(4).unwrap()), BigUint::from(384u32));
    }

    #[test]
    fn edgeless_and_disconnected() {
        assert_eq!(order_of(&Graph::new(3)), BigUint::from(6u32));
        let mut two_triangles = Graph::new(6);
        for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
            two_triangles.add_edge(u, v).unwrap();
        }
        assert_eq!(order_of(&two_triangles), BigUint::from(72u32));
    }

    #[test]
    fn asymmetric_graph_is_rigid() {
        // Smallest asymmetric tree on 7 vertices.
        let mut t = Graph::new(7);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (5, 6)] {
            t.add_edge(u, v).unwrap();
        }
        let group = automorphism_group(&t).unwrap();
        assert!(group.is_trivial());
    }

    #[test]
    fn generators_preserve_adjacency() {
        for graph in [petersen(), hypercube(4).unwrap(), cycle_graph(7).unwrap()] {
            let group = automorphism_group(&graph).unwrap();
            for g in group.generators() {
                assert!(is_automorphism(&graph, g));
            }
        }
    }

    #[test]
    fn single_vertex_and_guard() {
        assert_eq!(order_of(&Graph::new(1)), BigUint::from(1u32));
        assert!(automorphism_group(&Graph::new(4097)).is_err());
    }
}
