//! Constructive covering on paths, cycles and their products.
//!
//! Each operation produces a trace of color-respecting moves and checks it by
//! replay before returning. Inputs may carry more pebbles than the bound
//! requires; recursive steps that depend on an exact budget set the surplus
//! aside and restore it afterwards.

mod cycle;
mod pairs;
mod path;
mod product;

pub use cycle::{classify_windows, cycle_requirement, q_cover_cycle, WindowClassification};
pub use pairs::extract_pairs;
pub use path::{cover_v1, path_requirement, q_cover_path};
pub use product::{cover_product, cover_product_with};

use crate::distribution::{replay, ColoredDistribution, PebblingMove, Trace};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct StrategyOutcome {
    pub trace: Trace,
    pub achieved: ColoredDistribution,
}

fn failed<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::ConstructionFailed(msg.into()))
}

/// `q · (2^len − 1)`, the pebbles needed to `q`-cover a path on `len` vertices.
pub(crate) fn need(q: u32, len: usize) -> Result<u64> {
    u32::try_from(len)
        .ok()
        .and_then(|l| 1u64.checked_shl(l))
        .and_then(|p| (p - 1).checked_mul(u64::from(q)))
        .ok_or_else(|| Error::Overflow(format!("{q}·(2^{len} − 1)")))
}

/// Colors present must stay below `q`; one color with `q = 1` is the plain game.
pub(crate) fn check_palette(d: &ColoredDistribution, q: u32) -> Result<()> {
    if q == 0 {
        return invalid("Q must be positive");
    }
    let present = d.colors_present();
    if present as u64 >= u64::from(q) && !(q == 1 && present <= 1) {
        return invalid(format!("{present} colors present, need fewer than Q = {q}"));
    }
    Ok(())
}

/// Mutable working state shared by the path and cycle constructions.
pub(crate) struct Engine<'a> {
    graph: &'a Graph,
    q: u32,
    state: ColoredDistribution,
    moves: Vec<PebblingMove>,
}

impl<'a> Engine<'a> {
    pub(crate) fn new(graph: &'a Graph, initial: &ColoredDistribution, q: u32) -> Self {
        Engine {
            graph,
            q,
            state: initial.clone(),
            moves: Vec::new(),
        }
    }

    fn at(&self, v: usize) -> u64 {
        self.state.vertex_total(v)
    }

    fn sum(&self, vs: &[usize]) -> u64 {
        vs.iter().map(|&v| self.at(v)).sum()
    }

    fn covered(&self, vs: &[usize]) -> bool {
        vs.iter().all(|&v| self.at(v) >= u64::from(self.q))
    }

    fn step(&mut self, from: usize, to: usize, color: usize) -> Result<()> {
        let m = PebblingMove::new(from, to, color);
        self.state
            .apply(self.graph, m)
            .map_err(|why| Error::ConstructionFailed(format!("move {m}: {why}")))?;
        self.moves.push(m);
        Ok(())
    }

    /// Sends `⌊e/2⌋` pebbles from `from` to its neighbor `to`.
    fn shift(&mut self, from: usize, to: usize, e: u64) -> Result<()> {
        let pairs = extract_pairs(self.state.row(from), e)
            .map_err(|err| Error::ConstructionFailed(format!("at vertex {from}: {err}")))?;
        for (color, k) in pairs {
            for _ in 0..k {
                self.step(from, to, color)?;
            }
        }
        Ok(())
    }

    /// Keeps the first `keep` pebbles found on `priority` (vertex order, then
    /// color order) and sets every other pebble on those vertices aside.
    fn set_aside(&mut self, priority: &[usize], keep: u64) -> ColoredDistribution {
        let mut aside = ColoredDistribution::new(self.state.vertex_count(), self.state.colors());
        let mut kept = 0u64;
        for &v in priority {
            for c in 0..self.state.colors() {
                let have = u64::from(self.state.get(v, c));
                let take = have.min(keep - kept);
                kept += take;
                self.state.set(v, c, take as u32);
                aside.set(v, c, (have - take) as u32);
            }
        }
        aside
    }

    fn restore(&mut self, aside: &ColoredDistribution) {
        self.state.absorb(aside);
    }

    /// Packages the moves, re-verifying them from `initial`.
    pub(crate) fn finish(self, initial: &ColoredDistribution) -> Result<StrategyOutcome> {
        let trace = Trace {
            initial: initial.clone(),
            moves: self.moves,
        };
        let achieved = replay(self.graph, &trace)
            .map_err(|e| Error::ConstructionFailed(format!("trace does not replay: {e}")))?;
        if achieved != self.state {
            return failed("replayed state differs from the working state");
        }
        if !achieved.is_q_covered(self.q) {
            return failed(format!("final state is not {}-covered", self.q));
        }
        Ok(StrategyOutcome { trace, achieved })
    }
}
