//! Simple undirected graphs with bitset adjacency, plus the cover check.
//!
//! Vertices are contiguous ids `0..n`. A graph may carry labels tying the
//! ids back to the algebra: group elements for Cayley graphs, bit words
//! for hypercubes and central quotients.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::extraspecial::ExtraspecialGroup;

/// What the vertex ids stand for, when anything.
#[derive(Clone)]
pub enum Labels {
    /// Vertex `v` is the group element with id `v`.
    Group(ExtraspecialGroup),
    /// Vertex `v` is the GF(2) word `v` of the given dimension.
    Cosets { dim: usize },
}

#[derive(Clone)]
pub struct Graph {
    adj: Vec<BitSet>,
    labels: Option<Labels>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match &self.labels {
            Some(Labels::Group(g)) => format!("group r = {}", g.r()),
            Some(Labels::Cosets { dim }) => format!("cosets dim = {dim}"),
            None => "unlabeled".into(),
        };
        write!(
            f,
            "Graph({} vertices, {} edges, {kind})",
            self.n(),
            self.edge_count()
        )
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| BitSet::new(n)).collect(),
            labels: None,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::CoordOutOfRange { coord: w, dim: n });
            }
        }
        if u == v {
            return Err(Error::GraphShape {
                property: "simple: loops are not allowed",
            });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Common degree if the graph is regular.
    pub fn valency(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n()).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Edges as sorted pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.component_of(0).count() == self.n()
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> BitSet {
        let mut seen = BitSet::new(self.n());
        seen.insert(start);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for w in self.adj[v].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    frontier.push(w);
                }
            }
        }
        seen
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut color = vec![None; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut frontier = vec![start];
            while let Some(v) = frontier.pop() {
                let c = color[v].expect("colored before queueing");
                for w in self.adj[v].iter() {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            frontier.push(w);
                        }
                        Some(cw) if cw == c => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn labels(&self) -> Option<&Labels> {
        self.labels.as_ref()
    }

    pub fn set_labels(&mut self, labels: Option<Labels>) {
        self.labels = labels;
    }

    /// Human-readable names for the vertices, when labeled.
    pub fn vertex_names(&self) -> Option<Vec<String>> {
        match &self.labels {
            Some(Labels::Group(g)) => Some(
                (0..self.n() as u64)
                    .map(|id| {
                        g.element_from_id(id)
                            .map(|e| e.to_string())
                            .unwrap_or_default()
                    })
                    .collect(),
            ),
            Some(Labels::Cosets { dim }) => Some(
                (0..self.n())
                    .map(|v| {
                        crate::gf2::Vector::new(v as u64, *dim)
                            .map(|x| x.to_string())
                            .unwrap_or_default()
                    })
                    .collect(),
            ),
            None => None,
        }
    }
}

/// The d-dimensional hypercube: vertices are d-bit words, edges flip one bit.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d == 0 || d > 16 {
        return Err(Error::DimOutOfRange { dim: d, max: 16 });
    }
    let n = 1usize << d;
    let mut g = Graph::new(n);
    for v in 0..n {
        for k in 0..d {
            let w = v ^ (1 << k);
            if v < w {
                g.add_edge(v, w)?;
            }
        }
    }
    g.set_labels(Some(Labels::Cosets { dim: d }));
    Ok(g)
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::GraphShape {
            property: "a cycle: need at least 3 vertices",
        });
    }
    let mut g = Graph::new(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n)?;
    }
    Ok(g)
}

pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::GraphShape {
            property: "a path: need at least 1 vertex",
        });
    }
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("distinct in-range vertices");
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v).expect("distinct in-range vertices");
        }
    }
    g
}

/// Outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).expect("in range");
        g.add_edge(i, i + 5).expect("in range");
        g.add_edge(5 + i, 5 + (i + 2) % 5).expect("in range");
    }
    g
}

/// Outcome of the covering-projection check.
#[derive(Debug, Clone)]
pub struct CoverReport {
    pub equal_valency: bool,
    pub local_bijection: bool,
    pub uniform_fibers: bool,
    pub fiber_size: Option<usize>,
    pub failure: Option<String>,
}

impl CoverReport {
    /// Valencies agree and every neighborhood projects bijectively.
    pub fn is_cover(&self) -> bool {
        self.equal_valency && self.local_bijection
    }
}

/// Checks whether collapsing each fiber to a point is a covering
/// projection onto `quotient`. Fiber `i` maps to quotient vertex `i`.
/// Fiber-size uniformity is reported alongside, not required.
pub fn is_cover(graph: &Graph, quotient: &Graph, fibers: &[Vec<usize>]) -> Result<CoverReport> {
    if fibers.len() != quotient.n() {
        return Err(Error::NotAPartition {
            reason: format!(
                "{} fibers for {} quotient vertices",
                fibers.len(),
                quotient.n()
            ),
        });
    }
    let mut fiber_of = vec![usize::MAX; graph.n()];
    for (p, fiber) in fibers.iter().enumerate() {
        if fiber.is_empty() {
            return Err(Error::NotAPartition {
                reason: format!("fiber {p} is empty"),
            });
        }
        for &v in fiber {
            if v >= graph.n() {
                return Err(Error::NotAPartition {
                    reason: format!("vertex {v} out of range"),
                });
            }
            if fiber_of[v] != usize::MAX {
                return Err(Error::NotAPartition {
                    reason: format!("vertex {v} appears twice"),
                });
            }
            fiber_of[v] = p;
        }
    }
    if let Some(v) = fiber_of.iter().position(|&p| p == usize::MAX) {
        return Err(Error::NotAPartition {
            reason: format!("vertex {v} is in no fiber"),
        });
    }

    let mut report = CoverReport {
        equal_valency: false,
        local_bijection: true,
        uniform_fibers: fibers.iter().all(|f| f.len() == fibers[0].len()),
        fiber_size: fibers
            .iter()
            .all(|f| f.len() == fibers[0].len())
            .then(|| fibers[0].len()),
        failure: None,
    };

    match (graph.valency(), quotient.valency()) {
        (Some(a), Some(b)) if a == b => report.equal_valency = true,
        (a, b) => {
            report.failure = Some(format!("valency {a:?} above vs {b:?} below"));
        }
    }

    'scan: for v in 0..graph.n() {
        let p = fiber_of[v];
        let mut hits = vec![0usize; quotient.n()];
        for w in graph.neighbors(v).iter() {
            let q = fiber_of[w];
            if q == p {
                report.local_bijection = false;
                report.failure = Some(format!("edge ({v}, {w}) stays inside fiber {p}"));
                break 'scan;
            }
            if !quotient.has_edge(p, q) {
                report.local_bijection = false;
                report.failure = Some(format!("edge ({v}, {w}) projects onto non-edge ({p}, {q})"));
                break 'scan;
            }
            hits[q] += 1;
        }
        for q in quotient.neighbors(p).iter() {
            if hits[q] != 1 {
                report.local_bijection = false;
                report.failure = Some(format!(
                    "vertex {v} has {} neighbors in fiber {q}, expected exactly 1",
                    hits[q]
                ));
                break 'scan;
            }
        }
    }
    Ok(report)
}
