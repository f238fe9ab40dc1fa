//! Seeded random inputs for the constructive engine.
//!
//! Distributions are drawn in three shapes: everything on one vertex, spread
//! uniformly, or spread over a random handful of support vertices. Pebble
//! totals are exactly the bound each construction promises to handle.

use rand::seq::index::sample;
use rand::Rng;

use crate::distribution::{ColoredDistribution, Distribution};
use crate::error::Result;
use crate::strategy::{cycle_requirement, path_requirement};

#[derive(Clone, Debug)]
pub struct ColoredCase {
    pub vertices: usize,
    pub q: u32,
    pub distribution: ColoredDistribution,
}

/// Places `total` pebbles on `n` vertices.
pub fn random_counts<R: Rng + ?Sized>(rng: &mut R, n: usize, total: u64) -> Vec<u32> {
    let mut counts = vec![0u32; n];
    match rng.random_range(0..3) {
        0 => counts[rng.random_range(0..n)] = total as u32,
        1 => {
            for _ in 0..total {
                counts[rng.random_range(0..n)] += 1;
            }
        }
        _ => {
            let k = rng.random_range(1..=n);
            let support = sample(rng, n, k).into_vec();
            for _ in 0..total {
                counts[support[rng.random_range(0..k)]] += 1;
            }
        }
    }
    counts
}

/// Colors each pebble of `counts` with one of `colors` colors.
pub fn random_coloring<R: Rng + ?Sized>(rng: &mut R, counts: &[u32], colors: usize) -> ColoredDistribution {
    let mut d = ColoredDistribution::new(counts.len(), colors);
    let monochrome = rng.random_bool(0.3);
    for (v, &c) in counts.iter().enumerate() {
        let base = rng.random_range(0..colors);
        for _ in 0..c {
            let color = if monochrome {
                base
            } else {
                rng.random_range(0..colors)
            };
            d.add(v, color, 1);
        }
    }
    d
}

fn colored_case<R: Rng + ?Sized>(rng: &mut R, n: usize, q: u32, total: u64) -> ColoredCase {
    let colors = rng.random_range(1..q as usize);
    let counts = random_counts(rng, n, total);
    ColoredCase {
        vertices: n,
        q,
        distribution: random_coloring(rng, &counts, colors),
    }
}

/// Path on `1..=max_n` vertices, `2 ≤ Q ≤ max_q`, fewer than `Q` colors,
/// exactly `Q(2^n − 1)` pebbles.
pub fn random_path_case<R: Rng + ?Sized>(rng: &mut R, max_n: usize, max_q: u32) -> Result<ColoredCase> {
    let n = rng.random_range(1..=max_n);
    let q = rng.random_range(2..=max_q);
    let total = path_requirement(n, q)?;
    Ok(colored_case(rng, n, q, total))
}

/// Cycle on `3..=max_n` vertices with exactly `Q·P` pebbles.
pub fn random_cycle_case<R: Rng + ?Sized>(rng: &mut R, max_n: usize, max_q: u32) -> Result<ColoredCase> {
    let n = rng.random_range(3..=max_n);
    let q = rng.random_range(2..=max_q);
    let total = cycle_requirement(n, q)?;
    Ok(colored_case(rng, n, q, total))
}

/// Uncolored distribution of exactly `total` pebbles on `n` vertices.
pub fn random_distribution<R: Rng + ?Sized>(rng: &mut R, n: usize, total: u64) -> Distribution {
    Distribution::new(random_counts(rng, n, total))
}
