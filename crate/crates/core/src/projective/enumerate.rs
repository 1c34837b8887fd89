//! Enumeration of all reduced row echelon matrices of a fixed shape.

/// Yields every `rank × ncols` RREF matrix over GF(q) exactly once.
///
/// Order: pivot sets in lexicographic order, then free entries as an odometer
/// with the last free slot turning fastest.
pub(crate) struct RrefIter {
    ncols: usize,
    rank: usize,
    q: u8,
    pivots: Vec<usize>,
    slots: Vec<(usize, usize)>,
    vals: Vec<u8>,
    started: bool,
    done: bool,
}

impl RrefIter {
    pub(crate) fn new(rank: usize, ncols: usize, q: u32) -> Self {
        let mut it = Self {
            ncols,
            rank,
            q: q as u8,
            pivots: (0..rank).collect(),
            slots: Vec::new(),
            vals: Vec::new(),
            started: false,
            done: rank > ncols,
        };
        if !it.done {
            it.reset_slots();
        }
        it
    }

    fn reset_slots(&mut self) {
        self.slots.clear();
        for (i, &p) in self.pivots.iter().enumerate() {
            for c in p + 1..self.ncols {
                if !self.pivots.contains(&c) {
                    self.slots.push((i, c));
                }
            }
        }
        self.vals = vec![0; self.slots.len()];
    }

    fn next_combination(&mut self) -> bool {
        let (k, n) = (self.rank, self.ncols);
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.pivots[i] < n - k + i {
                self.pivots[i] += 1;
                for j in i + 1..k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn bump_odometer(&mut self) -> bool {
        for v in self.vals.iter_mut().rev() {
            *v += 1;
            if *v < self.q {
                return true;
            }
            *v = 0;
        }
        false
    }

    fn matrix(&self) -> Vec<u8> {
        let mut m = vec![0u8; self.rank * self.ncols];
        for (i, &p) in self.pivots.iter().enumerate() {
            m[i * self.ncols + p] = 1;
        }
        for (&(i, c), &v) in self.slots.iter().zip(&self.vals) {
            m[i * self.ncols + c] = v;
        }
        m
    }
}

impl Iterator for RrefIter {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.matrix());
        }
        if !self.bump_odometer() {
            if !self.next_combination() {
                self.done = true;
                return None;
            }
            self.reset_slots();
        }
        Some(self.matrix())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_small_gaussians() {
        // [4 choose 2]_2 = 35, [3 choose 1]_3 = 13, [5 choose 0] = 1
        assert_eq!(RrefIter::new(2, 4, 2).count(), 35);
        assert_eq!(RrefIter::new(1, 3, 3).count(), 13);
        assert_eq!(RrefIter::new(0, 5, 2).count(), 1);
        assert_eq!(RrefIter::new(3, 2, 2).count(), 0);
        assert_eq!(RrefIter::new(2, 2, 5).count(), 1);
    }
}
