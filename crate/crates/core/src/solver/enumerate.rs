use crate::distribution::Distribution;

/// All ways to place `total` pebbles on `n` vertices, first coordinate
/// descending: for `n = 2, total = 2` this yields `(2,0), (1,1), (0,2)`.
#[derive(Clone, Debug)]
pub struct Compositions {
    current: Vec<u32>,
    done: bool,
}

impl Compositions {
    pub fn new(n: usize, total: u32) -> Self {
        let mut current = vec![0; n];
        if let Some(first) = current.first_mut() {
            *first = total;
        }
        Compositions {
            done: n == 0,
            current,
        }
    }

    fn advance(&mut self) {
        let n = self.current.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| self.current[i] > 0) else {
            self.done = true;
            return;
        };
        let tail: u32 = self.current[i + 1..].iter().sum();
        self.current[i] -= 1;
        self.current[i + 1] = tail + 1;
        for x in &mut self.current[i + 2..] {
            *x = 0;
        }
    }
}

impl Iterator for Compositions {
    type Item = Distribution;

    fn next(&mut self) -> Option<Distribution> {
        if self.done {
            return None;
        }
        let out = Distribution::new(self.current.clone());
        self.advance();
        Some(out)
    }
}

pub fn enumerate_distributions(n: usize, total: u32) -> Compositions {
    Compositions::new(n, total)
}

/// `C(total + n − 1, n − 1)`, saturating at `u128::MAX`.
pub fn composition_count(n: usize, total: u32) -> u128 {
    if n == 0 {
        return 0;
    }
    let k = (n - 1) as u128;
    let top = u128::from(total) + k;
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (top - i) / (i + 1) stays integral at every step
        match acc.checked_mul(top - i) {
            Some(x) => acc = x / (i + 1),
            None => return u128::MAX,
        }
    }
    acc
}
