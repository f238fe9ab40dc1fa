//! Exact decision procedures: coverability of a distribution, `γ(G)` by
//! exhaustive enumeration, goodness, and small conjecture sweeps.

mod enumerate;
mod search;
mod sweep;

use std::env;

use serde::Serialize;

pub use enumerate::{composition_count, enumerate_distributions, Compositions};
pub use search::{decide_coverable, SearchOptions, Searcher};
pub use sweep::{connected_graphs, sweep_goodness, SweepEntry, SweepOptions, SweepReport, Verdict};

use crate::distribution::{Distribution, Trace};
use crate::error::{Error, Result};
use crate::formulas::{goodness_bound, sigma};
use crate::graph::Graph;

pub const STATES_ENV: &str = "PEBBLING_MAX_STATES";
pub const TOTAL_ENV: &str = "PEBBLING_MAX_TOTAL";

/// Limits on exhaustive work. Exceeding any of them yields
/// [`Error::ResourceLimit`], never a guessed answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// States visited by a single coverability decision.
    pub max_states: u64,
    /// Largest pebble total the solver will look at.
    pub max_total: u64,
    /// Distributions enumerated per pebble total in [`gamma_exact`].
    pub max_distributions: u128,
    /// Failed states remembered per searcher; beyond it the search runs unmemoized.
    pub memo_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_states: 10_000_000,
            max_total: 64,
            max_distributions: 50_000_000,
            memo_cap: 1 << 22,
        }
    }
}

impl Budget {
    /// Defaults, overridden by `PEBBLING_MAX_STATES` / `PEBBLING_MAX_TOTAL`.
    pub fn from_env() -> Result<Self> {
        let mut b = Budget::default();
        if let Some(v) = read_env(STATES_ENV)? {
            b.max_states = v;
        }
        if let Some(v) = read_env(TOTAL_ENV)? {
            b.max_total = v;
        }
        Ok(b)
    }
}

fn read_env(key: &str) -> Result<Option<u64>> {
    match env::var(key) {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::InvalidArgument(format!("{key}={s:?} is not a count"))),
        Err(_) => Ok(None),
    }
}

#[derive(Clone, Debug)]
pub struct CoverReport {
    pub coverable: bool,
    /// Present iff `coverable`; replays to a covered state.
    pub trace: Option<Trace>,
    pub states_explored: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaReport {
    pub gamma: u64,
    /// A distribution of `gamma − 1` pebbles that cannot be covered.
    pub witness: Distribution,
    pub good: bool,
    pub key_vertex: Option<usize>,
    pub simple_bound: u64,
    pub states_explored: u64,
}

/// Smallest `N` such that every distribution of `N` pebbles is coverable.
///
/// Starts at `max_v σ(G, v)`, which the simple distribution on the maximizing
/// vertex needs, and walks upward. The first `N` at which every distribution
/// is coverable is final: a larger distribution contains a coverable one.
pub fn gamma_exact(g: &Graph, budget: Budget) -> Result<GammaReport> {
    let n = g.vertex_count();
    let (bound, key) = goodness_bound(g)?;
    let mut searcher = Searcher::new(g, budget);
    let mut pebbles = bound;
    let mut last_failure: Option<Distribution> = None;
    loop {
        if pebbles > budget.max_total {
            return Err(Error::ResourceLimit(format!(
                "γ search reached {pebbles} pebbles, above the budget of {}",
                budget.max_total
            )));
        }
        let count = composition_count(n, pebbles as u32);
        if count > budget.max_distributions {
            return Err(Error::ResourceLimit(format!(
                "{count} distributions of {pebbles} pebbles exceed the budget of {}",
                budget.max_distributions
            )));
        }
        let mut failure = None;
        for d in enumerate_distributions(n, pebbles as u32) {
            if !searcher.decide(&d)?.coverable {
                failure = Some(d);
                break;
            }
        }
        match failure {
            Some(d) => {
                last_failure = Some(d);
                pebbles += 1;
            }
            None => break,
        }
    }
    let gamma = pebbles;
    let witness = match last_failure {
        Some(d) => d,
        None => {
            let d = Distribution::simple(n, key, (bound - 1) as u32);
            if searcher.decide(&d)?.coverable {
                return Err(Error::Internal(format!(
                    "{} pebbles on vertex {key} cover {g}, contradicting σ = {bound}",
                    bound - 1
                )));
            }
            d
        }
    };
    let good = gamma == bound;
    Ok(GammaReport {
        gamma,
        witness,
        good,
        key_vertex: good.then_some(key),
        simple_bound: bound,
        states_explored: searcher.total_states(),
    })
}

/// Whether `γ(G)` equals the simple-distribution bound.
pub fn is_good(g: &Graph, budget: Budget) -> Result<(bool, GammaReport)> {
    let report = gamma_exact(g, budget)?;
    Ok((report.good, report))
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductEquality {
    pub gamma_g: u64,
    pub gamma_h: u64,
    pub gamma_product: u64,
    /// `γ(G□H) = γ(G)·γ(H)`.
    pub equal: bool,
    pub product_good: bool,
    /// `σ` of the product at the paired key vertices.
    pub paired_sigma: u64,
    /// Whether `paired_sigma = σ_G(key_G)·σ_H(key_H)`.
    pub paired_sigma_factorizes: bool,
}

pub fn check_product_equality(g: &Graph, h: &Graph, budget: Budget) -> Result<ProductEquality> {
    let rg = gamma_exact(g, budget)?;
    let rh = gamma_exact(h, budget)?;
    let product = Graph::cartesian_product(g, h)?;
    let rp = gamma_exact(&product, budget)?;
    let (sg, kg) = goodness_bound(g)?;
    let (sh, kh) = goodness_bound(h)?;
    let paired_sigma = sigma(&product, kg * h.vertex_count() + kh)?;
    let expected = rg
        .gamma
        .checked_mul(rh.gamma)
        .ok_or_else(|| Error::Overflow("γ(G)·γ(H)".into()))?;
    Ok(ProductEquality {
        gamma_g: rg.gamma,
        gamma_h: rh.gamma,
        gamma_product: rp.gamma,
        equal: rp.gamma == expected,
        product_good: rp.good,
        paired_sigma,
        paired_sigma_factorizes: paired_sigma == sg * sh,
    })
}
