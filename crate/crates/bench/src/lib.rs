//! Fixtures shared by the solver and strategy benchmarks.

use cover_pebbling::{ColoredDistribution, Distribution, Graph};

/// Graphs small enough for exhaustive `γ` computation, by name.
pub fn exact_graphs() -> Vec<(&'static str, Graph)> {
    let p2 = Graph::path(2).unwrap();
    vec![
        ("P_4", Graph::path(4).unwrap()),
        ("C_5", Graph::cycle(5).unwrap()),
        ("K_4", Graph::complete(4).unwrap()),
        ("P_2xP_2", Graph::cartesian_product(&p2, &p2).unwrap()),
        (
            "P_2xK_3",
            Graph::cartesian_product(&p2, &Graph::complete(3).unwrap()).unwrap(),
        ),
    ]
}

/// All pebbles on vertex 0 of the product `P_2□C_n`, at the equality bound.
pub fn corner_on_prism(n: usize) -> (Graph, Graph, Distribution) {
    let g = Graph::path(2).unwrap();
    let h = Graph::cycle(n).unwrap();
    let gamma = 3 * cover_pebbling::formulas::gamma_cycle(n).unwrap();
    (g, h, Distribution::simple(2 * n, 0, gamma as u32))
}

/// `q` times the cycle requirement on `C_n`, split between two vertices and
/// `q − 1` colors.
pub fn colored_cycle_load(n: usize, q: u32) -> (Graph, ColoredDistribution) {
    let h = Graph::cycle(n).unwrap();
    let total = cover_pebbling::strategy::cycle_requirement(n, q).unwrap() as u32;
    let colors = (q as usize - 1).max(1);
    let mut d = ColoredDistribution::new(n, colors);
    for k in 0..total {
        let v = if k % 3 == 0 { n / 2 } else { 0 };
        d.add(v, k as usize % colors, 1);
    }
    (h, d)
}
