use crate::error::{invalid, Result};

/// Chooses same-color pairs at a vertex whose `counts` are indexed by color,
/// so that `⌊e/2⌋` pebbles can be pushed to a neighbor.
///
/// Drops one pebble from every odd-sized color class, then takes pairs from
/// the remaining even classes in color order. Requires `e ≤ M − t'`, where `M`
/// is the vertex total and `t'` the number of colors present there. Returns
/// `(color, pairs)` with exactly `⌊e/2⌋` pairs in total.
pub fn extract_pairs(counts: &[u32], e: u64) -> Result<Vec<(usize, u32)>> {
    let total: u64 = counts.iter().map(|&c| u64::from(c)).sum();
    let present = counts.iter().filter(|&&c| c > 0).count() as u64;
    if e + present > total {
        return invalid(format!(
            "cannot release {e} of {total} pebbles spread over {present} colors"
        ));
    }
    let mut need = e / 2;
    let mut out = Vec::new();
    for (color, &c) in counts.iter().enumerate() {
        if need == 0 {
            break;
        }
        let available = u64::from(c / 2);
        let take = available.min(need);
        if take > 0 {
            out.push((color, take as u32));
            need -= take;
        }
    }
    debug_assert_eq!(need, 0, "odd trimming leaves at least ⌊e/2⌋ pairs");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair_total(p: &[(usize, u32)]) -> u64 {
        p.iter().map(|&(_, k)| u64::from(k)).sum()
    }

    #[test]
    fn examples() {
        assert_eq!(extract_pairs(&[5], 4).unwrap(), vec![(0, 2)]);
        assert_eq!(extract_pairs(&[3, 3], 4).unwrap(), vec![(0, 1), (1, 1)]);
        assert_eq!(extract_pairs(&[1, 1, 1], 0).unwrap(), vec![]);
        assert!(extract_pairs(&[1, 1, 1], 1).is_err());
        assert!(extract_pairs(&[4, 1], 4).is_err());
        assert_eq!(pair_total(&extract_pairs(&[4, 1], 3).unwrap()), 1);
    }

    fn all_count_vectors(colors: usize, max_total: u32) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..colors {
            out = out
                .into_iter()
                .flat_map(|v: Vec<u32>| {
                    let used: u32 = v.iter().sum();
                    (0..=max_total - used).map(move |c| {
                        let mut w = v.clone();
                        w.push(c);
                        w
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn floor_half_bound_exhaustive() {
        for colors in 1..=4 {
            for counts in all_count_vectors(colors, 12) {
                let total: u64 = counts.iter().map(|&c| u64::from(c)).sum();
                let present = counts.iter().filter(|&&c| c > 0).count() as u64;
                for e in 0..=total {
                    let r = extract_pairs(&counts, e);
                    if e + present > total {
                        assert!(r.is_err());
                        continue;
                    }
                    let pairs = r.unwrap();
                    assert!(pair_total(&pairs) >= e / 2, "{counts:?} e={e}");
                    for &(c, k) in &pairs {
                        assert!(2 * k <= counts[c]);
                    }
                }
            }
        }
    }
}
