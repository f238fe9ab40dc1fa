use super::{failed, q_cover_cycle, q_cover_path, StrategyOutcome};
use crate::distribution::{
    associate, lift_moves, replay, ColoredDistribution, Distribution, PebblingMove, Trace,
};
use crate::error::{invalid, Error, Result};
use crate::formulas::{gamma_cycle, gamma_formula, gamma_path};
use crate::graph::{Family, Graph};
use crate::solver::{gamma_exact, Budget, Searcher};

/// Covers `G□H` (`H` a path or a cycle) from at least `γ(G)·γ(H)` pebbles.
///
/// `γ(G)` comes from the closed forms when `G` belongs to a known family and
/// from exhaustive search otherwise.
pub fn cover_product(d: &Distribution, g: &Graph, h: &Graph) -> Result<StrategyOutcome> {
    let budget = Budget::from_env()?;
    let gamma_g = match gamma_formula(g) {
        Ok(f) => f.value,
        Err(Error::InvalidArgument(_)) => gamma_exact(g, budget)?.gamma,
        Err(e) => return Err(e),
    };
    cover_product_with(d, g, h, gamma_g, budget)
}

/// [`cover_product`] with `γ(G)` supplied by the caller.
///
/// The pebbles are collapsed onto `H` with one color per vertex of `G`, the
/// colored distribution is `γ(G)`-covered along `H`, those moves are lifted
/// back to the product, and finally each copy of `G` is covered from its
/// `γ(G)` pebbles by search.
pub fn cover_product_with(
    d: &Distribution,
    g: &Graph,
    h: &Graph,
    gamma_g: u64,
    budget: Budget,
) -> Result<StrategyOutcome> {
    let (gn, hn) = (g.vertex_count(), h.vertex_count());
    let product = Graph::cartesian_product(g, h)?;
    d.check_graph(&product)?;
    let (gamma_h, on_cycle) = match h.family() {
        Family::Path(n) => (gamma_path(*n)?, false),
        Family::Cycle(n) => (gamma_cycle(*n)?, true),
        _ => return invalid(format!("second factor {h} must be a path or a cycle")),
    };
    let required = gamma_g
        .checked_mul(gamma_h)
        .ok_or_else(|| Error::Overflow("γ(G)·γ(H)".into()))?;
    if d.total() < required {
        return invalid(format!(
            "{} pebbles on {product}: need γ(G)·γ(H) = {gamma_g}·{gamma_h} = {required}",
            d.total()
        ));
    }
    let q = u32::try_from(gamma_g).map_err(|_| Error::Overflow("γ(G) as Q".into()))?;

    let colored = associate(d, g, h)?;
    let along = if on_cycle {
        q_cover_cycle(h, &colored, q)?
    } else {
        q_cover_path(h, &colored, q)?
    };
    let lifted = lift_moves(&along.trace, g, h, &product)?;
    let mut moves = lifted.moves;

    let mut searcher = Searcher::new(g, budget);
    for j in 0..hn {
        let mut fiber: Vec<u32> = (0..gn).map(|i| along.achieved.get(j, i)).collect();
        trim_to(&mut fiber, gamma_g);
        let report = searcher.decide(&Distribution::new(fiber))?;
        let Some(trace) = report.trace else {
            return failed(format!("copy {j} of {g} holds γ(G) pebbles but is not coverable"));
        };
        moves.extend(
            trace
                .moves
                .iter()
                .map(|m| PebblingMove::plain(m.from * hn + j, m.to * hn + j)),
        );
    }

    let trace = Trace {
        initial: ColoredDistribution::from_plain(d),
        moves,
    };
    let achieved =
        replay(&product, &trace).map_err(|e| Error::ConstructionFailed(format!("product trace: {e}")))?;
    if !achieved.is_q_covered(1) {
        return failed(format!("{product} left uncovered"));
    }
    Ok(StrategyOutcome { trace, achieved })
}

/// Drops pebbles (from the highest vertices down) until at most `keep` remain.
/// Moves that work for the smaller distribution also work for the original.
fn trim_to(counts: &mut [u32], keep: u64) {
    let mut excess = counts
        .iter()
        .map(|&c| u64::from(c))
        .sum::<u64>()
        .saturating_sub(keep);
    for c in counts.iter_mut().rev() {
        let cut = u64::from(*c).min(excess);
        *c -= cut as u32;
        excess -= cut;
    }
}
