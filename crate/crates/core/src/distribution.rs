//! Pebble distributions, color-respecting moves and replayable traces.
//!
//! A product distribution `D` on `G□H` corresponds to a `|V(G)|`-colored
//! distribution on `H`: pebbles on `(w_i, v_j)` become color `i` on vertex `j`.
//! Colored moves along `H` lift back to moves inside a single copy of `H`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// Pebble count per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Distribution {
    counts: Vec<u32>,
}

impl Distribution {
    pub fn new(counts: Vec<u32>) -> Self {
        Distribution { counts }
    }

    pub fn zeros(n: usize) -> Self {
        Distribution { counts: vec![0; n] }
    }

    /// `pebbles` pebbles on vertex `v`, nothing elsewhere.
    pub fn simple(n: usize, v: usize, pebbles: u32) -> Self {
        let mut d = Self::zeros(n);
        d.counts[v] = pebbles;
        d
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn counts_mut(&mut self) -> &mut [u32] {
        &mut self.counts
    }

    pub fn get(&self, v: usize) -> u32 {
        self.counts[v]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }

    /// Vertices holding at least one pebble.
    pub fn support(&self) -> Vec<usize> {
        (0..self.counts.len()).filter(|&v| self.counts[v] > 0).collect()
    }

    /// Pebbles on the consecutive vertices `s..=t`.
    pub fn range_sum(&self, s: usize, t: usize) -> u64 {
        self.counts[s..=t].iter().map(|&c| u64::from(c)).sum()
    }

    pub fn is_covered(&self, q: u32) -> bool {
        self.counts.iter().all(|&c| c >= q)
    }

    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.len() != g.vertex_count() {
            return invalid(format!(
                "distribution has {} entries but the graph has {} vertices",
                self.len(),
                g.vertex_count()
            ));
        }
        Ok(())
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.counts, ",")
    }
}

impl FromStr for Distribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_counts(s).map(Distribution::new)
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, xs: &[u32], sep: &str) -> fmt::Result {
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn parse_counts(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidArgument(format!("bad pebble count {x:?} in {s:?}")))
        })
        .collect()
}

/// Pebble count per (vertex, color).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredDistribution {
    vertices: usize,
    colors: usize,
    counts: Vec<u32>,
}

impl ColoredDistribution {
    pub fn new(vertices: usize, colors: usize) -> Self {
        ColoredDistribution {
            vertices,
            colors,
            counts: vec![0; vertices * colors],
        }
    }

    /// One row of per-color counts per vertex; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let colors = rows.first().map_or(0, Vec::len);
        if colors == 0 || rows.iter().any(|r| r.len() != colors) {
            return invalid("colored rows must be non-empty and of equal length");
        }
        Ok(ColoredDistribution {
            vertices: rows.len(),
            colors,
            counts: rows.concat(),
        })
    }

    /// Single-color view of a plain distribution.
    pub fn from_plain(d: &Distribution) -> Self {
        ColoredDistribution {
            vertices: d.len(),
            colors: 1,
            counts: d.counts.clone(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    /// Palette size `t`.
    pub fn colors(&self) -> usize {
        self.colors
    }

    #[inline]
    pub fn get(&self, v: usize, c: usize) -> u32 {
        self.counts[v * self.colors + c]
    }

    #[inline]
    pub fn set(&mut self, v: usize, c: usize, k: u32) {
        self.counts[v * self.colors + c] = k;
    }

    pub fn add(&mut self, v: usize, c: usize, k: u32) {
        self.counts[v * self.colors + c] += k;
    }

    pub fn row(&self, v: usize) -> &[u32] {
        &self.counts[v * self.colors..(v + 1) * self.colors]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.vertices).map(|v| self.row(v).to_vec()).collect()
    }

    pub fn vertex_total(&self, v: usize) -> u64 {
        self.row(v).iter().map(|&c| u64::from(c)).sum()
    }

    pub fn color_total(&self, c: usize) -> u64 {
        (0..self.vertices).map(|v| u64::from(self.get(v, c))).sum()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }

    /// Number of palette colors with at least one pebble anywhere.
    pub fn colors_present(&self) -> usize {
        (0..self.colors).filter(|&c| self.color_total(c) > 0).count()
    }

    pub fn colors_present_at(&self, v: usize) -> usize {
        self.row(v).iter().filter(|&&c| c > 0).count()
    }

    /// Color-summed per-vertex counts.
    pub fn to_plain(&self) -> Distribution {
        Distribution::new((0..self.vertices).map(|v| self.row(v).iter().sum()).collect())
    }

    pub fn is_q_covered(&self, q: u32) -> bool {
        (0..self.vertices).all(|v| self.vertex_total(v) >= u64::from(q))
    }

    /// Elementwise sum; shapes must match.
    pub fn absorb(&mut self, other: &ColoredDistribution) {
        debug_assert_eq!((self.vertices, self.colors), (other.vertices, other.colors));
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    /// Applies `m` in place. The error string describes why the move is illegal.
    pub fn apply(&mut self, g: &Graph, m: PebblingMove) -> std::result::Result<(), String> {
        if m.from >= self.vertices || m.to >= self.vertices {
            return Err(format!("vertex out of range in {m}"));
        }
        if m.color >= self.colors {
            return Err(format!("color {} outside palette of {}", m.color, self.colors));
        }
        if !g.has_edge(m.from, m.to) {
            return Err(format!("{} and {} are not adjacent", m.from, m.to));
        }
        let have = self.get(m.from, m.color);
        if have < 2 {
            return Err(format!(
                "vertex {} holds {have} pebble(s) of color {}",
                m.from, m.color
            ));
        }
        self.set(m.from, m.color, have - 2);
        self.add(m.to, m.color, 1);
        Ok(())
    }

    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.vertices != g.vertex_count() {
            return invalid(format!(
                "colored distribution has {} vertices but the graph has {}",
                self.vertices,
                g.vertex_count()
            ));
        }
        Ok(())
    }
}

impl fmt::Display for ColoredDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in 0..self.vertices {
            if v > 0 {
                f.write_str(";")?;
            }
            write_joined(f, self.row(v), ",")?;
        }
        Ok(())
    }
}

impl FromStr for ColoredDistribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s.split(';').map(parse_counts).collect::<Result<Vec<_>>>()?;
        ColoredDistribution::from_rows(&rows)
    }
}

/// Remove two pebbles of `color` from `from`, add one to the neighbor `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PebblingMove {
    pub from: usize,
    pub to: usize,
    pub color: usize,
}

impl PebblingMove {
    pub fn new(from: usize, to: usize, color: usize) -> Self {
        PebblingMove { from, to, color }
    }

    /// Single-color move.
    pub fn plain(from: usize, to: usize) -> Self {
        PebblingMove { from, to, color: 0 }
    }
}

impl fmt::Display for PebblingMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{} (color {})", self.from, self.to, self.color)
    }
}

/// An initial distribution plus the moves applied to it, in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TraceJson", into = "TraceJson")]
pub struct Trace {
    pub initial: ColoredDistribution,
    pub moves: Vec<PebblingMove>,
}

#[derive(Serialize, Deserialize)]
struct TraceJson {
    colors: usize,
    initial: Vec<Vec<u32>>,
    moves: Vec<PebblingMove>,
}

impl From<Trace> for TraceJson {
    fn from(t: Trace) -> Self {
        TraceJson {
            colors: t.initial.colors(),
            initial: t.initial.rows(),
            moves: t.moves,
        }
    }
}

impl TryFrom<TraceJson> for Trace {
    type Error = Error;

    fn try_from(j: TraceJson) -> Result<Self> {
        let initial = ColoredDistribution::from_rows(&j.initial)?;
        if initial.colors() != j.colors {
            return invalid(format!(
                "trace declares {} colors but rows have {}",
                j.colors,
                initial.colors()
            ));
        }
        Ok(Trace {
            initial,
            moves: j.moves,
        })
    }
}

impl Trace {
    pub fn new(initial: ColoredDistribution) -> Self {
        Trace {
            initial,
            moves: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Returns the distribution after `m`, leaving `d` untouched.
pub fn apply_move(g: &Graph, d: &ColoredDistribution, m: PebblingMove) -> Result<ColoredDistribution> {
    let mut next = d.clone();
    next.apply(g, m)
        .map_err(|reason| Error::IllegalMove { index: 0, reason })?;
    Ok(next)
}

/// Replays `trace` on `g`, stopping at the first illegal move.
pub fn replay(g: &Graph, trace: &Trace) -> Result<ColoredDistribution> {
    trace.initial.check_graph(g)?;
    let mut d = trace.initial.clone();
    for (index, &m) in trace.moves.iter().enumerate() {
        d.apply(g, m)
            .map_err(|reason| Error::IllegalMove { index, reason })?;
    }
    Ok(d)
}

pub fn is_q_covered(d: &ColoredDistribution, q: u32) -> bool {
    d.is_q_covered(q)
}

/// Collapses a distribution on `G□H` to a `|V(G)|`-colored distribution on `H`.
pub fn associate(d: &Distribution, g: &Graph, h: &Graph) -> Result<ColoredDistribution> {
    let (gn, hn) = (g.vertex_count(), h.vertex_count());
    if d.len() != gn * hn {
        return invalid(format!(
            "distribution has {} entries, product has {} vertices",
            d.len(),
            gn * hn
        ));
    }
    let mut out = ColoredDistribution::new(hn, gn);
    for i in 0..gn {
        for j in 0..hn {
            out.set(j, i, d.get(i * hn + j));
        }
    }
    Ok(out)
}

/// Inverse of [`associate`].
pub fn dissociate(d: &ColoredDistribution) -> Distribution {
    let (gn, hn) = (d.colors(), d.vertex_count());
    let mut counts = vec![0; gn * hn];
    for i in 0..gn {
        for j in 0..hn {
            counts[i * hn + j] = d.get(j, i);
        }
    }
    Distribution::new(counts)
}

/// Lifts a colored trace on `H` to a plain trace on `product = G□H`.
///
/// Color `i` moving `V_j -> V_k` becomes `(i, j) -> (i, k)`. The lifted trace
/// is replayed before it is returned; a failure there is an engine bug.
pub fn lift_moves(trace: &Trace, g: &Graph, h: &Graph, product: &Graph) -> Result<Trace> {
    let (gn, hn) = (g.vertex_count(), h.vertex_count());
    if trace.initial.colors() != gn || trace.initial.vertex_count() != hn {
        return invalid(format!(
            "trace has {} colors on {} vertices, expected {gn} on {hn}",
            trace.initial.colors(),
            trace.initial.vertex_count()
        ));
    }
    if product.vertex_count() != gn * hn {
        return invalid("product vertex count does not match the factors");
    }
    let lifted = Trace {
        initial: ColoredDistribution::from_plain(&dissociate(&trace.initial)),
        moves: trace
            .moves
            .iter()
            .map(|m| PebblingMove::plain(m.color * hn + m.from, m.color * hn + m.to))
            .collect(),
    };
    replay(product, &lifted).map_err(|e| Error::Internal(format!("lifted trace does not replay: {e}")))?;
    Ok(lifted)
}

/// `Σ_v counts[v] · 2^(diam − dist(v, r))`, the decaying weight toward `r`
/// scaled to an integer. Never increases under a legal move.
pub fn decay_potential(g: &Graph, counts: &[u32], r: usize) -> u128 {
    let diam = g.diameter();
    g.dist_row(r)
        .iter()
        .zip(counts)
        .map(|(&d, &c)| u128::from(c) << (diam - d))
        .sum()
}

/// Decay potential of the all-ones distribution; any covering state reaches it.
pub fn decay_threshold(g: &Graph, r: usize) -> u128 {
    let diam = g.diameter();
    g.dist_row(r).iter().map(|&d| 1u128 << (diam - d)).sum()
}

/// `Σ_v counts[v] · 2^dist(v, r)`. Also never increases under a legal move; a
/// covering state has at least `σ(G, r)`.
pub fn growth_potential(g: &Graph, counts: &[u32], r: usize) -> u128 {
    g.dist_row(r)
        .iter()
        .zip(counts)
        .map(|(&d, &c)| u128::from(c) << d)
        .sum()
}
