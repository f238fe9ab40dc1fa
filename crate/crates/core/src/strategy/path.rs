use super::{check_palette, failed, need, Engine, StrategyOutcome};
use crate::distribution::ColoredDistribution;
use crate::error::{invalid, Result};
use crate::graph::Graph;

/// Pebbles that guarantee a `q`-cover of an `n`-vertex path: `q(2^n − 1)`.
pub fn path_requirement(n: usize, q: u32) -> Result<u64> {
    need(q, n)
}

fn check_path(h: &Graph, d: &ColoredDistribution) -> Result<()> {
    d.check_graph(h)?;
    if (1..h.vertex_count()).any(|i| !h.has_edge(i - 1, i)) {
        return invalid(format!("{h} is not traversed by 0, 1, ..., n−1"));
    }
    Ok(())
}

impl Engine<'_> {
    /// `q`-covers the path `path` (consecutive vertices of the graph) using
    /// only pebbles on it. Requires at least `q(2^len − 1)` of them.
    pub(crate) fn cover_path(&mut self, path: &[usize]) -> Result<()> {
        let n = path.len();
        let q = u64::from(self.q);
        if self.covered(path) {
            return Ok(());
        }
        let total = self.sum(path);
        let required = need(self.q, n)?;
        if total < required {
            return failed(format!("path of {n} vertices holds {total} < {required} pebbles"));
        }
        // n == 1 with total ≥ q is already covered
        let oriented: Vec<usize> = if self.at(path[0]) <= self.at(path[n - 1]) {
            path.to_vec()
        } else {
            path.iter().rev().copied().collect()
        };
        let k = self.at(oriented[0]);
        if k <= q {
            let tail = &oriented[1..];
            let aside = self.set_aside(tail, need(self.q, n - 1)?);
            self.cover_path(tail)?;
            self.restore(&aside);
            if self.at(oriented[0]) < q {
                self.cover_first(&oriented)?;
            }
        } else {
            // largest s with |V_1..V_i| ≥ q(2^i − 1) for every i ≤ s
            let mut s = 0;
            let mut prefix = 0;
            for (i, &v) in oriented.iter().enumerate() {
                prefix += self.at(v);
                if prefix < need(self.q, i + 1)? {
                    break;
                }
                s = i + 1;
            }
            if s + 1 >= n {
                // |V_n| ≥ |V_1| > q, so only V_1..V_{n−1} needs work
                self.cover_path(&oriented[..n - 1])?;
            } else {
                self.cover_path(&oriented[..s])?;
                self.cover_path(&oriented[s..])?;
            }
        }
        if !self.covered(path) {
            return failed(format!("path {path:?} left uncovered"));
        }
        Ok(())
    }

    /// Brings `path[0]` up to `q` when every other vertex already has `q` and
    /// the path holds `q(m − 1) + 2^(m−1)·q` pebbles. Pebbles flow one hop at a
    /// time from the far end, each vertex keeping `q`.
    pub(crate) fn cover_first(&mut self, path: &[usize]) -> Result<()> {
        let q = u64::from(self.q);
        for top in (1..path.len()).rev() {
            let first = self.at(path[0]);
            if first >= q {
                break;
            }
            let e = if top == 1 {
                2 * (q - first)
            } else {
                self.at(path[top]).saturating_sub(q)
            };
            self.shift(path[top], path[top - 1], e)?;
        }
        if !self.covered(path) {
            return failed(format!("could not raise vertex {} to {q}", path[0]));
        }
        Ok(())
    }
}

/// `q`-covers the path `0, 1, ..., n−1` of `h` from a colored distribution with
/// at least `q(2^n − 1)` pebbles and fewer than `q` colors present.
pub fn q_cover_path(h: &Graph, d: &ColoredDistribution, q: u32) -> Result<StrategyOutcome> {
    check_path(h, d)?;
    check_palette(d, q)?;
    let n = h.vertex_count();
    let required = need(q, n)?;
    if d.total() < required {
        return invalid(format!(
            "{} pebbles cannot {q}-cover a path on {n} vertices; need {required}",
            d.total()
        ));
    }
    let mut engine = Engine::new(h, d, q);
    let order: Vec<usize> = (0..n).collect();
    engine.cover_path(&order)?;
    engine.finish(d)
}

/// Raises vertex 0 of the path to `q` pebbles given `|V_1| = k < q`, at least
/// `q` on every other vertex, `q ≥` colors present, and `q(m − 1) + 2^(m−1)q`
/// pebbles in total.
pub fn cover_v1(h: &Graph, d: &ColoredDistribution, q: u32, k: u32) -> Result<StrategyOutcome> {
    check_path(h, d)?;
    let m = h.vertex_count();
    if m < 2 {
        return invalid("path needs at least two vertices");
    }
    if k >= q {
        return invalid(format!("need K < Q, got K = {k}, Q = {q}"));
    }
    if d.vertex_total(0) != u64::from(k) {
        return invalid(format!(
            "vertex 0 holds {} pebbles, not K = {k}",
            d.vertex_total(0)
        ));
    }
    if d.colors_present() as u64 > u64::from(q) {
        return invalid(format!("{} colors present exceeds Q = {q}", d.colors_present()));
    }
    if (1..m).any(|v| d.vertex_total(v) < u64::from(q)) {
        return invalid(format!("every vertex past the first needs at least {q} pebbles"));
    }
    let required = u64::from(q) * (m as u64 - 1) + (need(q, m - 1)? + u64::from(q));
    if d.total() < required {
        return invalid(format!("need {required} pebbles, have {}", d.total()));
    }
    let mut engine = Engine::new(h, d, q);
    let order: Vec<usize> = (0..m).collect();
    engine.cover_first(&order)?;
    engine.finish(d)
}
