//! Depth-first coverability search over count vectors.
//!
//! Every move removes one pebble, so the depth is bounded by the initial
//! total. Failed states are memoized; a state's coverability does not depend
//! on how it was reached, so one [`Searcher`] can serve many decisions on the
//! same graph.

use std::cmp::Reverse;
use std::collections::HashSet;

use super::{Budget, CoverReport};
use crate::distribution::{
    decay_potential, decay_threshold, growth_potential, replay, ColoredDistribution, Distribution,
    PebblingMove, Trace,
};
use crate::error::{Error, Result};
use crate::formulas::sigma;
use crate::graph::Graph;

/// Knobs that change speed, never answers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Potential-based pruning (both the decaying and the growing weight).
    pub prune: bool,
    pub memoize: bool,
    /// Try large piles toward the nearest empty vertex first.
    pub ordered: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            prune: true,
            memoize: true,
            ordered: true,
        }
    }
}

impl SearchOptions {
    pub fn exhaustive() -> Self {
        SearchOptions {
            prune: false,
            memoize: false,
            ordered: false,
        }
    }
}

pub struct Searcher<'g> {
    graph: &'g Graph,
    budget: Budget,
    options: SearchOptions,
    failed: HashSet<Box<[u8]>>,
    decay_floor: Vec<u128>,
    growth_floor: Vec<u128>,
    path: Vec<PebblingMove>,
    states: u64,
    total_states: u64,
}

impl<'g> Searcher<'g> {
    pub fn new(graph: &'g Graph, budget: Budget) -> Self {
        Self::with_options(graph, budget, SearchOptions::default())
    }

    pub fn with_options(graph: &'g Graph, budget: Budget, options: SearchOptions) -> Self {
        let n = graph.vertex_count();
        // diameters this large are far outside desk scale; skip the shifted weights
        let prune = options.prune && graph.diameter() < 64;
        let decay_floor = if prune {
            (0..n).map(|r| decay_threshold(graph, r)).collect()
        } else {
            Vec::new()
        };
        let growth_floor = if prune {
            (0..n).map(|r| sigma(graph, r).map_or(0, u128::from)).collect()
        } else {
            Vec::new()
        };
        Searcher {
            graph,
            budget,
            options: SearchOptions { prune, ..options },
            failed: HashSet::new(),
            decay_floor,
            growth_floor,
            path: Vec::new(),
            states: 0,
            total_states: 0,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// States visited across all decisions made by this searcher.
    pub fn total_states(&self) -> u64 {
        self.total_states
    }

    pub fn memo_len(&self) -> usize {
        self.failed.len()
    }

    pub fn decide(&mut self, d: &Distribution) -> Result<CoverReport> {
        d.check_graph(self.graph)?;
        let total = d.total();
        if total > self.budget.max_total {
            return Err(Error::ResourceLimit(format!(
                "{total} pebbles exceeds the budget of {}",
                self.budget.max_total
            )));
        }
        self.states = 0;
        self.path.clear();
        let mut counts = d.counts().to_vec();
        let found = self.search(&mut counts, total);
        self.total_states += self.states;
        let coverable = found?;
        let trace = if coverable {
            let trace = Trace {
                initial: ColoredDistribution::from_plain(d),
                moves: self.path.clone(),
            };
            let end = replay(self.graph, &trace)
                .map_err(|e| Error::Internal(format!("search produced a bad trace: {e}")))?;
            if !end.is_q_covered(1) {
                return Err(Error::Internal("search trace does not cover the graph".into()));
            }
            Some(trace)
        } else {
            None
        };
        Ok(CoverReport {
            coverable,
            trace,
            states_explored: self.states,
        })
    }

    fn key(counts: &[u32]) -> Option<Box<[u8]>> {
        counts.iter().map(|&c| u8::try_from(c).ok()).collect()
    }

    fn pruned(&self, counts: &[u32]) -> bool {
        (0..counts.len()).any(|r| {
            decay_potential(self.graph, counts, r) < self.decay_floor[r]
                || growth_potential(self.graph, counts, r) < self.growth_floor[r]
        })
    }

    fn candidate_moves(&self, counts: &[u32]) -> Vec<PebblingMove> {
        let g = self.graph;
        let mut moves: Vec<PebblingMove> = (0..counts.len())
            .filter(|&v| counts[v] >= 2)
            .flat_map(|v| g.neighbors(v).iter().map(move |&u| PebblingMove::plain(v, u)))
            .collect();
        if self.options.ordered {
            let empty: Vec<usize> = (0..counts.len()).filter(|&v| counts[v] == 0).collect();
            let nearest = |u: usize| empty.iter().map(|&w| g.dist(u, w)).min().unwrap_or(0);
            moves.sort_by_key(|m| (Reverse(counts[m.from]), nearest(m.to), m.from, m.to));
        }
        moves
    }

    fn search(&mut self, counts: &mut [u32], total: u64) -> Result<bool> {
        self.states += 1;
        if self.states > self.budget.max_states {
            return Err(Error::ResourceLimit(format!(
                "explored more than {} states",
                self.budget.max_states
            )));
        }
        let n = counts.len();
        if counts.iter().all(|&c| c > 0) {
            return Ok(true);
        }
        if self.options.prune && (total < n as u64 || self.pruned(counts)) {
            return Ok(false);
        }
        let key = if self.options.memoize {
            Self::key(counts)
        } else {
            None
        };
        if let Some(k) = &key {
            if self.failed.contains(k) {
                return Ok(false);
            }
        }
        for m in self.candidate_moves(counts) {
            counts[m.from] -= 2;
            counts[m.to] += 1;
            self.path.push(m);
            let found = self.search(counts, total - 1);
            counts[m.from] += 2;
            counts[m.to] -= 1;
            if found? {
                return Ok(true);
            }
            self.path.pop();
        }
        if let Some(k) = key {
            if self.failed.len() < self.budget.memo_cap {
                self.failed.insert(k);
            }
        }
        Ok(false)
    }
}

/// One-shot coverability decision with default search options.
pub fn decide_coverable(g: &Graph, d: &Distribution, budget: Budget) -> Result<CoverReport> {
    Searcher::new(g, budget).decide(d)
}
