//! Shared brute-force oracles for the integration suites. Everything here
//! is deliberately naive: the point is independence from the library's
//! search machinery, not speed.

#![allow(dead_code)]

use cubecover::Graph;

/// Vertex order that makes the assignment DFS converge quickly: BFS from
/// each unvisited vertex in turn, so neighbors of assigned vertices come
/// early and prune hard.
fn search_order(graph: &Graph) -> Vec<usize> {
    let n = graph.n();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        order.push(start);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in graph.neighbors(v).iter() {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

fn extend(
    pos: usize,
    order: &[usize],
    adj: &[Vec<bool>],
    image: &mut [usize],
    used: &mut [bool],
    found: &mut Vec<Vec<usize>>,
) {
    if pos == order.len() {
        found.push(image.to_vec());
        return;
    }
    let v = order[pos];
    'cand: for w in 0..adj.len() {
        if used[w] {
            continue;
        }
        for u in &order[..pos] {
            if adj[v][*u] != adj[w][image[*u]] {
                continue 'cand;
            }
        }
        image[v] = w;
        used[w] = true;
        extend(pos + 1, order, adj, image, used, found);
        used[w] = false;
    }
}

/// Every adjacency-preserving bijection, as image vectors.
pub fn brute_automorphisms(graph: &Graph) -> Vec<Vec<usize>> {
    let n = graph.n();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| graph.has_edge(u, v)).collect())
        .collect();
    let order = search_order(graph);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut found = Vec::new();
    extend(0, &order, &adj, &mut image, &mut used, &mut found);
    found
}

pub fn brute_automorphism_count(graph: &Graph) -> usize {
    brute_automorphisms(graph).len()
}

/// Number of automorphisms fixing `fixed`; feasible well past the
/// full-enumeration limit because the first assignment is pinned.
pub fn brute_stabilizer_count(graph: &Graph, fixed: usize) -> usize {
    let n = graph.n();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| graph.has_edge(u, v)).collect())
        .collect();
    let order = {
        let mut o = vec![fixed];
        let mut seen = vec![false; n];
        seen[fixed] = true;
        let mut head = 0;
        while head < o.len() {
            let v = o[head];
            head += 1;
            for w in graph.neighbors(v).iter() {
                if !seen[w] {
                    seen[w] = true;
                    o.push(w);
                }
            }
        }
        for v in 0..n {
            if !seen[v] {
                o.push(v);
            }
        }
        o
    };
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    image[fixed] = fixed;
    used[fixed] = true;
    let mut found = Vec::new();
    extend(1, &order, &adj, &mut image, &mut used, &mut found);
    found.len()
}
