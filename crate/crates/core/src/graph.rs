//! Undirected simple connected graphs with precomputed hop distances.
//!
//! Vertices are dense indices `0..n`. A product `G□H` encodes vertex `(i, j)`
//! as `i * |V(H)| + j`, so the fiber `G□{v_j}` is the arithmetic progression
//! `j, j + h, j + 2h, ...`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{invalid, Result};

/// Family tag recorded at construction. Formulas dispatch on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Tree,
    /// Flattened factor list, outermost (most significant) factor first.
    Product(Vec<Graph>),
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    dist: Vec<u32>,
    diameter: u32,
    family: Family,
}

/// Isomorphism-invariant summary used to deduplicate small graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub vertices: usize,
    pub edges: usize,
    pub degrees: Vec<usize>,
    pub distances: Vec<u32>,
}

impl Graph {
    /// Builds a graph from an explicit edge list, validating simplicity and
    /// connectivity.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Self::with_family(n, edges, Family::Custom)
    }

    fn with_family(n: usize, edges: &[(usize, usize)], family: Family) -> Result<Graph> {
        if n == 0 {
            return invalid("graph must have at least one vertex");
        }
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return invalid(format!("edge ({u}, {v}) out of range for {n} vertices"));
            }
            if u == v {
                return invalid(format!("self-loop at vertex {u}"));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return invalid(format!("duplicate edge ({u}, {v})"));
            }
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let rows = bfs_distances(&adj)?;
        let diameter = rows.iter().flatten().copied().max().unwrap_or(0);
        Ok(Graph {
            n,
            edges,
            adj,
            dist: rows.into_iter().flatten().collect(),
            diameter,
            family,
        })
    }

    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return invalid("path needs at least one vertex");
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::with_family(n, &edges, Family::Path(n))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return invalid(format!("cycle needs at least 3 vertices, got {n}"));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::with_family(n, &edges, Family::Cycle(n))
    }

    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 {
            return invalid("complete graph needs at least one vertex");
        }
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::with_family(n, &edges, Family::Complete(n))
    }

    /// `K_{1,n-1}` with center 0.
    pub fn star(n: usize) -> Result<Graph> {
        if n == 0 {
            return invalid("star needs at least one vertex");
        }
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Self::with_family(n, &edges, Family::Star(n))
    }

    /// Tree on vertices `0..=max index`. An empty edge list is the single vertex.
    pub fn tree(edges: &[(usize, usize)]) -> Result<Graph> {
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(1);
        if edges.len() + 1 != n {
            return invalid(format!(
                "a tree on {n} vertices has {} edges, got {}",
                n - 1,
                edges.len()
            ));
        }
        // n - 1 edges plus connectivity (checked in construction) rules out cycles.
        Self::with_family(n, edges, Family::Tree)
    }

    /// Cartesian product `G□H`; vertex `(i, j)` becomes `i * |V(H)| + j`.
    pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
        let (gn, hn) = (g.n, h.n);
        let mut edges = Vec::with_capacity(gn * h.edges.len() + hn * g.edges.len());
        // same G-coordinate, adjacent in H
        for i in 0..gn {
            for &(a, b) in &h.edges {
                edges.push((i * hn + a, i * hn + b));
            }
        }
        // same H-coordinate, adjacent in G
        for &(a, b) in &g.edges {
            for j in 0..hn {
                edges.push((a * hn + j, b * hn + j));
            }
        }
        let mut factors = g.factors();
        factors.extend(h.factors());
        Self::with_family(gn * hn, &edges, Family::Product(factors))
    }

    /// Factor list of a product, or the graph itself.
    pub fn factors(&self) -> Vec<Graph> {
        match &self.family {
            Family::Product(fs) => fs.clone(),
            _ => vec![self.clone()],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Row of hop distances from `v`.
    pub fn dist_row(&self, v: usize) -> &[u32] {
        &self.dist[v * self.n..(v + 1) * self.n]
    }

    pub fn distances(&self) -> Vec<Vec<u32>> {
        self.dist.chunks(self.n).map(<[u32]>::to_vec).collect()
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let mut degrees: Vec<_> = self.adj.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        let mut distances = self.dist.clone();
        distances.sort_unstable();
        Fingerprint {
            vertices: self.n,
            edges: self.edges.len(),
            degrees,
            distances,
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::Path(n) => write!(f, "P_{n}"),
            Family::Cycle(n) => write!(f, "C_{n}"),
            Family::Complete(n) => write!(f, "K_{n}"),
            Family::Star(n) => write!(f, "star({n})"),
            Family::Tree => write!(f, "tree({} vertices)", self.n),
            Family::Product(fs) => {
                for (k, g) in fs.iter().enumerate() {
                    if k > 0 {
                        f.write_str("□")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            Family::Custom => write!(f, "graph({} vertices, {} edges)", self.n, self.edges.len()),
        }
    }
}

/// All-pairs hop distances by BFS from every vertex. Fails on a disconnected
/// adjacency list.
pub fn bfs_distances(adj: &[Vec<usize>]) -> Result<Vec<Vec<u32>>> {
    let n = adj.len();
    let mut rows = Vec::with_capacity(n);
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let mut row = vec![u32::MAX; n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if row[w] == u32::MAX {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if let Some(v) = row.iter().position(|&d| d == u32::MAX) {
            return invalid(format!("graph is disconnected: no path from {s} to {v}"));
        }
        rows.push(row);
    }
    Ok(rows)
}
