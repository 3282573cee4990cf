//! Labeled complete tripartite graphs and rooted spanning forests.
//!
//! Vertices are numbered contiguously by part: the first part occupies
//! `0..m`, the second `m..m+n`, the third `m+n..m+n+p`. A rooted
//! spanning forest is stored as a parent map; roots are exactly the
//! vertices with no parent, and every component contains one root.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Which of the three parts a vertex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    M,
    N,
    P,
}

/// Sizes of the three independent parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PartSizes {
    pub m: u32,
    pub n: u32,
    pub p: u32,
}

impl PartSizes {
    pub fn new(m: u32, n: u32, p: u32) -> Self {
        PartSizes { m, n, p }
    }

    pub fn total(&self) -> usize {
        self.m as usize + self.n as usize + self.p as usize
    }

    /// Part containing vertex `v`. Panics when `v` is out of range.
    pub fn part_of(&self, v: usize) -> Part {
        let (m, n) = (self.m as usize, self.n as usize);
        assert!(v < self.total(), "vertex {v} out of range");
        if v < m {
            Part::M
        } else if v < m + n {
            Part::N
        } else {
            Part::P
        }
    }

    pub fn part_range(&self, part: Part) -> std::ops::Range<usize> {
        let (m, n) = (self.m as usize, self.n as usize);
        match part {
            Part::M => 0..m,
            Part::N => m..m + n,
            Part::P => m + n..self.total(),
        }
    }
}

/// Number of roots a forest places in each part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootProfile {
    pub l: u32,
    pub k: u32,
    pub r: u32,
}

/// Undirected simple graph on part-numbered vertices, with a sorted edge
/// list and adjacency lists.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    parts: PartSizes,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl LabeledGraph {
    pub fn parts(&self) -> PartSizes {
        self.parts
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.total()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.parts.part_of(u) != self.parts.part_of(v)
    }

    /// True when every pair of vertices is joined by an edge path.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }
}

/// Builds the complete tripartite graph on the given part sizes: every
/// cross-part pair is an edge, no edge joins two vertices of one part.
pub fn build_complete_multipartite(parts: PartSizes) -> Result<LabeledGraph> {
    let total = parts.total();
    if total == 0 {
        return Err(Error::InvalidInput(
            "graph needs at least one vertex".into(),
        ));
    }
    let mut edges = Vec::new();
    let mut neighbors = vec![Vec::new(); total];
    for u in 0..total {
        for v in u + 1..total {
            if parts.part_of(u) != parts.part_of(v) {
                edges.push((u, v));
                neighbors[u].push(v);
                neighbors[v].push(u);
            }
        }
    }
    Ok(LabeledGraph {
        parts,
        edges,
        neighbors,
    })
}

/// Rooted spanning forest as a parent map: `parent[v]` is `None` exactly
/// when `v` is a root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedForest {
    pub parent: Vec<Option<usize>>,
}

impl RootedForest {
    pub fn new_all_roots(vertices: usize) -> Self {
        RootedForest {
            parent: vec![None; vertices],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn roots(&self) -> BTreeSet<usize> {
        self.parent
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_none())
            .map(|(v, _)| v)
            .collect()
    }

    /// Tree edges as `(child, parent)` pairs in child order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|q| (v, q)))
            .collect()
    }

    /// Root of the component containing `v`, or an error if the parent
    /// chain has a cycle.
    pub fn root_of(&self, v: usize) -> Result<usize> {
        let mut cur = v;
        for _ in 0..=self.parent.len() {
            match self.parent[cur] {
                None => return Ok(cur),
                Some(q) => cur = q,
            }
        }
        Err(Error::InvalidInput(format!(
            "parent chain from vertex {v} never reaches a root"
        )))
    }
}

/// Checks that `forest` is a spanning forest of `graph` whose root set is
/// exactly `roots`: right number of vertices, every parent edge present
/// in the graph, no cycles, and `parent[v] = None` iff `v` is in `roots`.
pub fn is_rooted_spanning_forest(
    graph: &LabeledGraph,
    forest: &RootedForest,
    roots: &BTreeSet<usize>,
) -> bool {
    let n = graph.vertex_count();
    if forest.vertex_count() != n {
        return false;
    }
    for v in 0..n {
        match forest.parent[v] {
            None => {
                if !roots.contains(&v) {
                    return false;
                }
            }
            Some(q) => {
                if roots.contains(&v) || q >= n || !graph.has_edge(v, q) {
                    return false;
                }
            }
        }
    }
    if roots.iter().any(|&v| v >= n) {
        return false;
    }
    // Cycle check: walk each parent chain, memoizing vertices already
    // known to reach a root.
    let mut ok = vec![false; n];
    for v in 0..n {
        let mut path = Vec::new();
        let mut cur = v;
        loop {
            if ok[cur] {
                break;
            }
            if path.len() > n {
                return false;
            }
            path.push(cur);
            match forest.parent[cur] {
                None => break,
                Some(q) => cur = q,
            }
        }
        for w in path {
            ok[w] = true;
        }
    }
    true
}

/// Counts roots of `forest` per part.
pub fn root_distribution(forest: &RootedForest, parts: PartSizes) -> RootProfile {
    let mut profile = RootProfile { l: 0, k: 0, r: 0 };
    for &v in &forest.roots() {
        match parts.part_of(v) {
            Part::M => profile.l += 1,
            Part::N => profile.k += 1,
            Part::P => profile.r += 1,
        }
    }
    profile
}
