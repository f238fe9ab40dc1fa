//! Closed-form cover pebbling numbers.
//!
//! `σ(G, v) = Σ_w 2^dist(w, v)` is the number of pebbles a simple distribution
//! on `v` needs, so `max_v σ(G, v)` bounds `γ(G)` from below for every graph.
//! Good graphs attain the bound; paths, cycles, trees and complete graphs are
//! good, and so is the product of a good graph with any path or cycle.

use crate::error::{invalid, Error, Result};
use crate::graph::{Family, Graph};

/// A cover pebbling number obtained from a formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaFormula {
    pub family: String,
    pub value: u64,
    /// A vertex whose simple distribution needs exactly `value` pebbles.
    pub key_vertex: Option<usize>,
}

fn overflow(what: &str) -> Error {
    Error::Overflow(format!("{what} does not fit in 64 bits"))
}

fn pow2(k: u32) -> Result<u64> {
    1u64.checked_shl(k).ok_or_else(|| overflow("2^k"))
}

pub fn sigma(g: &Graph, v: usize) -> Result<u64> {
    g.dist_row(v).iter().try_fold(0u64, |acc, &d| {
        acc.checked_add(pow2(d)?).ok_or_else(|| overflow("σ"))
    })
}

/// `max_v σ(G, v)` and the first vertex attaining it.
pub fn goodness_bound(g: &Graph) -> Result<(u64, usize)> {
    let mut best = (0, 0);
    for v in 0..g.vertex_count() {
        let s = sigma(g, v)?;
        if s > best.0 {
            best = (s, v);
        }
    }
    Ok(best)
}

pub fn gamma_path(n: usize) -> Result<u64> {
    if n == 0 {
        return invalid("path length must be positive");
    }
    let n = u32::try_from(n).map_err(|_| overflow("path length"))?;
    Ok(pow2(n)? - 1)
}

/// `2^r + 2^(n−r+1) − 3` with `r = ⌈n/2⌉`.
pub fn gamma_cycle(n: usize) -> Result<u64> {
    if n < 3 {
        return invalid(format!("cycle needs at least 3 vertices, got {n}"));
    }
    let n = u32::try_from(n).map_err(|_| overflow("cycle length"))?;
    let r = n.div_ceil(2);
    pow2(r)?
        .checked_add(pow2(n - r + 1)?)
        .map(|s| s - 3)
        .ok_or_else(|| overflow("cycle formula"))
}

pub fn gamma_complete(n: usize) -> Result<u64> {
    if n == 0 {
        return invalid("complete graph needs at least one vertex");
    }
    let n = u64::try_from(n).map_err(|_| overflow("vertex count"))?;
    n.checked_mul(2).map(|x| x - 1).ok_or_else(|| overflow("2n - 1"))
}

pub fn gamma_tree(t: &Graph) -> Result<u64> {
    if !t.is_tree() {
        return invalid(format!("{t} is not a tree"));
    }
    Ok(goodness_bound(t)?.0)
}

fn is_path_or_cycle(g: &Graph) -> bool {
    match g.family() {
        Family::Path(_) | Family::Cycle(_) => true,
        // K_1, K_2, star(1), star(2) and two-vertex trees are paths
        Family::Complete(n) | Family::Star(n) => *n <= 2,
        Family::Tree => g.vertex_count() <= 2,
        _ => false,
    }
}

/// Formula for a single non-product factor.
pub fn gamma_factor(g: &Graph) -> Result<GammaFormula> {
    let (family, value, key) = match g.family() {
        Family::Path(n) => (format!("P_{n}"), gamma_path(*n)?, 0),
        Family::Cycle(n) => (format!("C_{n}"), gamma_cycle(*n)?, 0),
        Family::Complete(n) => (format!("K_{n}"), gamma_complete(*n)?, 0),
        Family::Star(_) | Family::Tree => {
            let (value, key) = goodness_bound(g)?;
            if !g.is_tree() {
                return invalid(format!("{g} is not a tree"));
            }
            (g.to_string(), value, key)
        }
        Family::Product(_) => return invalid("gamma_factor expects a single factor"),
        Family::Custom => return invalid(format!("no closed form for {g}")),
    };
    Ok(GammaFormula {
        family,
        value,
        key_vertex: Some(key),
    })
}

/// Product of per-factor formulas. At most one factor may be a tree or a
/// complete graph; every other factor must be a path or a cycle.
pub fn gamma_product_formula(factors: &[Graph]) -> Result<GammaFormula> {
    if factors.is_empty() {
        return invalid("empty factor list");
    }
    let others = factors.iter().filter(|f| !is_path_or_cycle(f)).count();
    if others > 1 {
        return invalid("products are only covered when at most one factor is not a path or cycle");
    }
    let mut value = 1u64;
    let mut key = 0usize;
    let mut names = Vec::with_capacity(factors.len());
    for f in factors {
        let part = gamma_factor(f)?;
        value = value
            .checked_mul(part.value)
            .ok_or_else(|| overflow("product formula"))?;
        key = key * f.vertex_count() + part.key_vertex.unwrap_or(0);
        names.push(part.family);
    }
    Ok(GammaFormula {
        family: names.join("□"),
        value,
        key_vertex: Some(key),
    })
}

/// Dispatches on the graph's family tag.
pub fn gamma_formula(g: &Graph) -> Result<GammaFormula> {
    match g.family() {
        Family::Product(fs) => gamma_product_formula(fs),
        _ => gamma_factor(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_values() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(sigma(&p3, 0).unwrap(), 7);
        assert_eq!(sigma(&p3, 1).unwrap(), 5);
        let s4 = Graph::star(4).unwrap();
        assert_eq!(sigma(&s4, 1).unwrap(), 11);
        assert_eq!(sigma(&s4, 0).unwrap(), 7);
    }

    #[test]
    fn bounds() {
        assert_eq!(goodness_bound(&Graph::path(4).unwrap()).unwrap(), (15, 0));
        assert_eq!(goodness_bound(&Graph::complete(4).unwrap()).unwrap().0, 7);
        let (v, key) = goodness_bound(&Graph::star(4).unwrap()).unwrap();
        assert_eq!(v, 11);
        assert_ne!(key, 0);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(gamma_path(1).unwrap(), 1);
        assert_eq!(gamma_path(2).unwrap(), 3);
        assert_eq!(gamma_path(4).unwrap(), 15);
        assert!(gamma_path(0).is_err());

        assert_eq!(gamma_cycle(3).unwrap(), 5);
        assert_eq!(gamma_cycle(4).unwrap(), 9);
        assert_eq!(gamma_cycle(6).unwrap(), 21);
        assert!(gamma_cycle(2).is_err());

        assert_eq!(gamma_complete(1).unwrap(), 1);
        assert_eq!(gamma_complete(3).unwrap(), 5);
        assert_eq!(gamma_complete(4).unwrap(), 7);
        assert!(gamma_complete(0).is_err());
    }

    #[test]
    fn odd_cycle_alternative_form() {
        // for odd n the expression 2^((n+1)/2) + 2^((n+1)/2) − 3 is the same number
        for n in (3..40).step_by(2) {
            let half = (n as u32).div_ceil(2);
            assert_eq!(gamma_cycle(n).unwrap(), 2 * (1u64 << half) - 3);
        }
    }

    #[test]
    fn cross_family_identities() {
        assert_eq!(gamma_cycle(3).unwrap(), gamma_complete(3).unwrap());
        assert_eq!(gamma_cycle(4).unwrap(), gamma_path(2).unwrap().pow(2));
    }

    #[test]
    fn overflow_is_an_error() {
        assert!(matches!(gamma_path(64), Err(Error::Overflow(_))));
        assert!(gamma_path(63).is_ok());
        assert!(matches!(gamma_cycle(200), Err(Error::Overflow(_))));
    }

    #[test]
    fn trees() {
        assert_eq!(gamma_tree(&Graph::path(3).unwrap()).unwrap(), 7);
        assert_eq!(gamma_tree(&Graph::star(4).unwrap()).unwrap(), 11);
        assert_eq!(gamma_tree(&Graph::tree(&[]).unwrap()).unwrap(), 1);
        assert!(gamma_tree(&Graph::cycle(4).unwrap()).is_err());
    }

    #[test]
    fn formulas_equal_simple_bound_for_paths_and_cycles() {
        for n in 1..=12 {
            assert_eq!(
                gamma_path(n).unwrap(),
                goodness_bound(&Graph::path(n).unwrap()).unwrap().0
            );
        }
        for n in 3..=12 {
            assert_eq!(
                gamma_cycle(n).unwrap(),
                goodness_bound(&Graph::cycle(n).unwrap()).unwrap().0
            );
        }
    }

    #[test]
    fn products() {
        let p2 = Graph::path(2).unwrap();
        assert_eq!(gamma_product_formula(&[p2.clone(), p2.clone()]).unwrap().value, 9);
        assert_eq!(
            gamma_product_formula(&[p2.clone(), p2.clone(), p2.clone()])
                .unwrap()
                .value,
            27
        );
        let c4 = Graph::cycle(4).unwrap();
        let p3 = Graph::path(3).unwrap();
        assert_eq!(gamma_product_formula(&[c4, p3.clone()]).unwrap().value, 63);

        let k3 = Graph::complete(3).unwrap();
        let s4 = Graph::star(4).unwrap();
        assert_eq!(
            gamma_product_formula(&[k3.clone(), p2.clone()]).unwrap().value,
            15
        );
        assert!(gamma_product_formula(&[k3, s4]).is_err());
        let custom = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(gamma_product_formula(&[custom, p2]).is_err());
    }

    #[test]
    fn product_key_vertex_attains_the_product_of_sigmas() {
        let p3 = Graph::path(3).unwrap();
        let s4 = Graph::star(4).unwrap();
        let g = Graph::cartesian_product(&s4, &p3).unwrap();
        let f = gamma_formula(&g).unwrap();
        assert_eq!(f.value, 11 * 7);
        assert_eq!(sigma(&g, f.key_vertex.unwrap()).unwrap(), f.value);
        assert_eq!(goodness_bound(&g).unwrap().0, f.value);
    }

    #[test]
    fn simple_bound_factorizes_on_products() {
        let zoo = [
            Graph::path(2).unwrap(),
            Graph::path(3).unwrap(),
            Graph::cycle(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::complete(3).unwrap(),
            Graph::star(4).unwrap(),
        ];
        for g in &zoo {
            for h in &zoo {
                let p = Graph::cartesian_product(g, h).unwrap();
                let (bg, kg) = goodness_bound(g).unwrap();
                let (bh, kh) = goodness_bound(h).unwrap();
                assert_eq!(goodness_bound(&p).unwrap().0, bg * bh);
                assert_eq!(sigma(&p, kg * h.vertex_count() + kh).unwrap(), bg * bh);
            }
        }
    }
}
