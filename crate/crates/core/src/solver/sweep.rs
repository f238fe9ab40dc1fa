use std::collections::HashSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::{gamma_exact, Budget};
use crate::error::{invalid, Error, Result};
use crate::formulas::goodness_bound;
use crate::graph::Graph;

/// Largest vertex count a sweep will take on at all.
pub const SWEEP_HARD_LIMIT: usize = 5;
/// Largest vertex count allowed without [`SweepOptions::extended`].
pub const SWEEP_DEFAULT_LIMIT: usize = 4;

#[derive(Clone, Copy, Debug, Default)]
pub struct SweepOptions {
    /// Keep one graph per isomorphism class.
    pub dedup: bool,
    /// Permit `max_n = 5`.
    pub extended: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Good,
    NotGood,
    Unknown(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepEntry {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub simple_bound: u64,
    pub gamma: Option<u64>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub max_n: usize,
    pub entries: Vec<SweepEntry>,
}

impl SweepReport {
    pub fn graphs_on(&self, n: usize) -> impl Iterator<Item = &SweepEntry> {
        self.entries.iter().filter(move |e| e.vertices == n)
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &SweepEntry> {
        self.entries.iter().filter(|e| e.verdict == Verdict::NotGood)
    }

    pub fn unknown(&self) -> impl Iterator<Item = &SweepEntry> {
        self.entries
            .iter()
            .filter(|e| matches!(e.verdict, Verdict::Unknown(_)))
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("n\tedges\tsimple_bound\tgamma\tverdict\n");
        for e in &self.entries {
            let edges = e
                .edges
                .iter()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect::<Vec<_>>()
                .join(" ");
            let gamma = e.gamma.map_or_else(|| "-".to_string(), |g| g.to_string());
            let verdict = match &e.verdict {
                Verdict::Good => "good",
                Verdict::NotGood => "NOT-GOOD",
                Verdict::Unknown(_) => "unknown",
            };
            let _ = writeln!(
                out,
                "{}\t{edges}\t{}\t{gamma}\t{verdict}",
                e.vertices, e.simple_bound
            );
        }
        out
    }
}

fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut components = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    components == 1
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=k).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, k);
                    q
                })
            })
            .collect();
    }
    out
}

/// Smallest edge mask over all relabelings; equal exactly for isomorphic graphs.
fn canonical_mask(edges: &[(usize, usize)], pairs: &[(usize, usize)], perms: &[Vec<usize>]) -> u32 {
    let index = |u: usize, v: usize| pairs.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
    perms
        .iter()
        .map(|p| edges.iter().fold(0u32, |m, &(u, v)| m | 1 << index(p[u], p[v])))
        .min()
        .unwrap_or(0)
}

/// Every connected labeled graph on exactly `n` vertices, in edge-mask order.
/// With `dedup`, only the first graph of each isomorphism class is kept.
pub fn connected_graphs(n: usize, dedup: bool) -> Result<Vec<Graph>> {
    if n == 0 {
        return invalid("graphs need at least one vertex");
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    if pairs.len() >= 32 {
        return invalid(format!("{n} vertices is too many to enumerate"));
    }
    let perms = if dedup { permutations(n) } else { Vec::new() };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if !is_connected(n, &edges) {
            continue;
        }
        if dedup && !seen.insert(canonical_mask(&edges, &pairs, &perms)) {
            continue;
        }
        out.push(Graph::from_edges(n, &edges)?);
    }
    Ok(out)
}

/// Tests goodness of every connected graph on `1..=max_n` vertices.
///
/// Graphs whose search exceeds the budget are reported as
/// [`Verdict::Unknown`]; other errors abort the sweep.
pub fn sweep_goodness(max_n: usize, options: SweepOptions, budget: Budget) -> Result<SweepReport> {
    if max_n == 0 || max_n > SWEEP_HARD_LIMIT {
        return invalid(format!("max_n must be between 1 and {SWEEP_HARD_LIMIT}"));
    }
    if max_n > SWEEP_DEFAULT_LIMIT && !options.extended {
        return invalid(format!(
            "max_n above {SWEEP_DEFAULT_LIMIT} needs the extended sweep flag"
        ));
    }
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        graphs.extend(connected_graphs(n, options.dedup)?);
    }
    let entries = graphs
        .par_iter()
        .map(|g| -> Result<SweepEntry> {
            let (simple_bound, _) = goodness_bound(g)?;
            let (gamma, verdict) = match gamma_exact(g, budget) {
                Ok(r) if r.good => (Some(r.gamma), Verdict::Good),
                Ok(r) => (Some(r.gamma), Verdict::NotGood),
                Err(Error::ResourceLimit(why)) => (None, Verdict::Unknown(why)),
                Err(e) => return Err(e),
            };
            Ok(SweepEntry {
                vertices: g.vertex_count(),
                edges: g.edges().to_vec(),
                simple_bound,
                gamma,
                verdict,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport { max_n, entries })
}
