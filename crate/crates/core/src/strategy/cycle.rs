//! `Q`-covering a colored cycle from `Q·P` pebbles, `P = 2^r + 2^(n−r+1) − 3`,
//! `r = ⌈n/2⌉`.
//!
//! Three branches are tried in order:
//!
//! 1. split the cycle into one or two arcs that each carry enough pebbles for
//!    the path construction;
//! 2. (odd `n`) move `Q` pebbles backwards across the start of a saturated
//!    window, leaving two `(r−1)`-vertex paths and one covered vertex;
//! 3. pick a saturated primary window `V_1..V_r` followed within `r` steps by
//!    an unsaturated window and no support vertex in between, cover
//!    `V_1..V_r` from exactly `Q(2^r − 1)` pebbles, then cover the path
//!    `V_{r+1}, ..., V_n, V_1` with what is left.
//!
//! When (1) fails, a window-averaging count shows some window is saturated,
//! and the lack of a two-arc split forces an unsaturated window within
//! distance `r` of it, so (3) always has a labeling to work with.

use super::{check_palette, failed, need, Engine, StrategyOutcome};
use crate::distribution::ColoredDistribution;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// A window of `length` consecutive cycle vertices starting at `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WindowClassification {
    pub start: usize,
    pub length: usize,
    /// Holds at least `Q(2^length − 1)` pebbles.
    pub saturated: bool,
    /// `start` is a support vertex.
    pub primary: bool,
}

fn half(n: usize) -> usize {
    n.div_ceil(2)
}

/// `Q·P` for the cycle on `n` vertices.
pub fn cycle_requirement(n: usize, q: u32) -> Result<u64> {
    if n < 3 {
        return invalid(format!("cycle needs at least 3 vertices, got {n}"));
    }
    let r = half(n);
    // Q(2^r − 1) + Q(2^(n−r+1) − 1) − Q = Q·P
    need(q, r)?
        .checked_add(need(q, n - r + 1)?)
        .map(|s| s - u64::from(q))
        .ok_or_else(|| Error::Overflow("cycle requirement".into()))
}

/// Classifies all `n` windows of length `⌈n/2⌉` on the cycle `0, 1, ..., n−1`.
pub fn classify_windows(d: &ColoredDistribution, q: u32) -> Result<Vec<WindowClassification>> {
    let n = d.vertex_count();
    let r = half(n);
    let threshold = need(q, r)?;
    Ok((0..n)
        .map(|start| {
            let held: u64 = (0..r).map(|k| d.vertex_total((start + k) % n)).sum();
            WindowClassification {
                start,
                length: r,
                saturated: held >= threshold,
                primary: d.vertex_total(start) > 0,
            }
        })
        .collect())
}

fn check_cycle(h: &Graph, d: &ColoredDistribution) -> Result<()> {
    d.check_graph(h)?;
    let n = h.vertex_count();
    if n < 3 || (0..n).any(|i| !h.has_edge(i, (i + 1) % n)) {
        return invalid(format!("{h} is not the cycle 0, 1, ..., n−1"));
    }
    Ok(())
}

impl Engine<'_> {
    /// `order` lists the cycle's vertices in cyclic order.
    pub(crate) fn cover_cycle(&mut self, order: &[usize]) -> Result<()> {
        if self.covered(order) {
            return Ok(());
        }
        if self.cover_by_split(order)? || self.cover_by_transfer(order)? {
            return Ok(());
        }
        self.cover_from_primary(order)
    }

    fn rotated(order: &[usize], start: usize) -> Vec<usize> {
        let n = order.len();
        (0..n).map(|k| order[(start + k) % n]).collect()
    }

    /// Branch 1: arcs of lengths `s` and `n − s` each with enough pebbles.
    fn cover_by_split(&mut self, order: &[usize]) -> Result<bool> {
        let n = order.len();
        for start in 0..n {
            let ring = Self::rotated(order, start);
            for s in 1..=n {
                let (first, second) = ring.split_at(s);
                if self.sum(first) >= need(self.q, s)? && self.sum(second) >= need(self.q, n - s)? {
                    self.cover_path(first)?;
                    self.cover_path(second)?;
                    return self.checked(order).map(|()| true);
                }
            }
        }
        Ok(false)
    }

    /// Branch 2, odd `n` only: the windows starting at `V'_1`, `V'_r` and
    /// `V'_{r+1}` are saturated. Send `Q` pebbles from `V'_1` to `V'_n`, then
    /// cover `V'_1..V'_{r−1}` and `V'_r..V'_{n−1}` as paths.
    pub(crate) fn cover_by_transfer(&mut self, order: &[usize]) -> Result<bool> {
        let n = order.len();
        if n.is_multiple_of(2) {
            return Ok(false);
        }
        let r = half(n);
        let q = u64::from(self.q);
        let window = need(self.q, r)?;
        let segment = need(self.q, r - 1)?;
        for start in 0..n {
            let ring = Self::rotated(order, start);
            let saturated =
                |lo: usize| -> bool { (0..r).map(|k| self.at(ring[(lo + k) % n])).sum::<u64>() >= window };
            if !(saturated(0) && saturated(r - 1) && saturated(r)) {
                continue;
            }
            let head = ring[0];
            let fits = self.at(head) >= 2 * q + self.state.colors_present_at(head) as u64
                && self.sum(&ring[..r - 1]) >= segment + 2 * q
                && self.sum(&ring[r - 1..n - 1]) >= segment;
            if !fits {
                continue;
            }
            self.shift(head, ring[n - 1], 2 * q)?;
            self.cover_path(&ring[..r - 1])?;
            self.cover_path(&ring[r - 1..n - 1])?;
            return self.checked(order).map(|()| true);
        }
        Ok(false)
    }

    /// Branch 3.
    fn cover_from_primary(&mut self, order: &[usize]) -> Result<()> {
        let n = order.len();
        let r = half(n);
        let threshold = need(self.q, r)?;
        let held = |e: &Self, lo: usize| -> u64 { (0..r).map(|k| e.at(order[(lo + k) % n])).sum() };
        let saturated: Vec<bool> = (0..n).map(|i| held(self, i) >= threshold).collect();
        let support: Vec<bool> = order.iter().map(|&v| self.at(v) > 0).collect();

        // closest (saturated primary, unsaturated) pair going forward;
        // ties go to the earliest primary start
        let mut best: Option<(usize, usize)> = None;
        for i in (0..n).filter(|&i| support[i] && saturated[i]) {
            if let Some(d) = (1..n).find(|&d| !saturated[(i + d) % n]) {
                if best.is_none_or(|(bd, _)| d < bd) {
                    best = Some((d, i));
                }
            }
        }
        let Some((gap, first)) = best else {
            return failed("no saturated primary window is followed by an unsaturated one");
        };
        if gap > r {
            return failed(format!("nearest unsaturated window is {gap} > {r} steps away"));
        }
        if (1..gap).any(|k| support[(first + k) % n]) {
            return failed("support vertex between the chosen windows");
        }

        let ring = Self::rotated(order, first);
        let mut priority: Vec<usize> = ring[1..r].to_vec();
        priority.push(ring[0]);
        // everything on V_2..V_r plus a = Q(2^r − 1) − |V_2..V_r| from V_1
        let aside = self.set_aside(&priority, threshold);
        self.cover_path(&ring[..r])?;
        self.restore(&aside);

        let mut rest: Vec<usize> = ring[r..].to_vec();
        rest.push(ring[0]);
        self.cover_path(&rest)?;
        self.checked(order)
    }

    fn checked(&self, order: &[usize]) -> Result<()> {
        if self.covered(order) {
            Ok(())
        } else {
            failed("cycle left uncovered")
        }
    }
}

/// `q`-covers the cycle `0, 1, ..., n−1` of `h` from a colored distribution
/// with at least `q·P` pebbles and fewer than `q` colors present.
pub fn q_cover_cycle(h: &Graph, d: &ColoredDistribution, q: u32) -> Result<StrategyOutcome> {
    check_cycle(h, d)?;
    check_palette(d, q)?;
    let n = h.vertex_count();
    let required = cycle_requirement(n, q)?;
    if d.total() < required {
        return invalid(format!(
            "{} pebbles cannot {q}-cover a cycle on {n} vertices; need {required}",
            d.total()
        ));
    }
    let mut engine = Engine::new(h, d, q);
    let order: Vec<usize> = (0..n).collect();
    engine.cover_cycle(&order)?;
    engine.finish(d)
}
