//! Cover pebbling on small graphs.
//!
//! A pebbling move removes two pebbles from a vertex and puts one on a
//! neighbor. A distribution is *coverable* when some sequence of moves leaves
//! a pebble on every vertex; the cover pebbling number `γ(G)` is the least `N`
//! such that every distribution of `N` pebbles is coverable.
//!
//! The crate offers three independent routes to `γ`:
//!
//! - [`formulas`]: closed forms for paths, cycles, trees, complete graphs and
//!   their products;
//! - [`solver`]: exhaustive search, usable as ground truth on small graphs;
//! - [`strategy`]: constructive covering of products `G□P_n` and `G□C_n`
//!   through colored distributions, emitting replayable [`Trace`]s.

pub mod distribution;
pub mod error;
pub mod formulas;
pub mod fuzz;
pub mod graph;
pub mod graph_spec;
pub mod solver;
pub mod strategy;

pub use distribution::{
    apply_move, associate, is_q_covered, lift_moves, replay, ColoredDistribution, Distribution, PebblingMove,
    Trace,
};
pub use error::{Error, Result};
pub use formulas::{gamma_formula, goodness_bound, sigma, GammaFormula};
pub use graph::{Family, Graph};
pub use graph_spec::GraphSpec;
pub use solver::{decide_coverable, gamma_exact, is_good, Budget, CoverReport, GammaReport};
pub use strategy::{cover_product, q_cover_cycle, q_cover_path, StrategyOutcome};
