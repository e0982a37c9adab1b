//! Incremental linear systems over GF(2).

/// Rows are kept in echelon form keyed by their lowest set column.
#[derive(Debug, Clone)]
pub struct Gf2System {
    ncols: usize,
    words: usize,
    basis: Vec<Option<(Vec<u64>, bool)>>,
    consistent: bool,
}

impl Gf2System {
    pub fn new(ncols: usize) -> Self {
        Gf2System {
            ncols,
            words: ncols.div_ceil(64).max(1),
            basis: vec![None; ncols],
            consistent: true,
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_consistent(&self) -> bool {
        self.consistent
    }

    pub fn rank(&self) -> usize {
        self.basis.iter().filter(|r| r.is_some()).count()
    }

    /// Add the equation `sum of x_c over cols = rhs`. Repeated columns cancel.
    /// Returns whether the system is still consistent.
    pub fn add(&mut self, cols: impl IntoIterator<Item = usize>, rhs: bool) -> bool {
        if !self.consistent {
            return false;
        }
        let mut row = vec![0u64; self.words];
        for c in cols {
            debug_assert!(c < self.ncols);
            row[c / 64] ^= 1 << (c % 64);
        }
        let mut rhs = rhs;
        loop {
            let Some(p) = lowest(&row) else {
                if rhs {
                    self.consistent = false;
                }
                return self.consistent;
            };
            match &self.basis[p] {
                Some((b, r)) => {
                    for (x, y) in row.iter_mut().zip(b) {
                        *x ^= y;
                    }
                    rhs ^= r;
                }
                None => {
                    self.basis[p] = Some((row, rhs));
                    return true;
                }
            }
        }
    }

    /// The solution that is least as a binary number with bit `i` = `x_i`:
    /// every free variable is 0. `None` when inconsistent.
    pub fn least_solution(&self) -> Option<Vec<bool>> {
        if !self.consistent {
            return None;
        }
        let mut x = vec![false; self.ncols];
        for p in (0..self.ncols).rev() {
            if let Some((row, rhs)) = &self.basis[p] {
                let mut val = *rhs;
                for c in p + 1..self.ncols {
                    if row[c / 64] >> (c % 64) & 1 == 1 && x[c] {
                        val = !val;
                    }
                }
                x[p] = val;
            }
        }
        Some(x)
    }
}

fn lowest(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_solution_prefers_low_bits() {
        let mut s = Gf2System::new(2);
        assert!(s.add([0, 1], true));
        assert_eq!(s.least_solution(), Some(vec![true, false]));
    }

    #[test]
    fn detects_inconsistency() {
        let mut s = Gf2System::new(3);
        s.add([0, 1], true);
        s.add([1, 2], false);
        assert!(!s.add([0, 2], false));
        assert_eq!(s.least_solution(), None);
    }

    #[test]
    fn matches_brute_force() {
        // x0+x2=1, x1+x2+x3=0, x3=1
        let eqs: [(&[usize], bool); 3] = [(&[0, 2], true), (&[1, 2, 3], false), (&[3], true)];
        let mut s = Gf2System::new(4);
        for (c, r) in eqs {
            s.add(c.iter().copied(), r);
        }
        let brute = (0u32..16).find(|v| {
            eqs.iter()
                .all(|(c, r)| c.iter().fold(false, |a, &i| a ^ (v >> i & 1 == 1)) == *r)
        });
        let got = s.least_solution().unwrap();
        let val: u32 = got.iter().enumerate().map(|(i, &b)| (b as u32) << i).sum();
        assert_eq!(Some(val), brute);
    }
}
