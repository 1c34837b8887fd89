//! Fixed numbering of the points of PG(n,q).
//!
//! Each point is represented by the vector whose last nonzero coordinate is 1.
//! Points are numbered in lexicographic order of these representatives,
//! coordinate 0 being the most significant.

use std::collections::HashMap;

use crate::galois::FieldTable;

const DENSE_LIMIT: u64 = 1 << 22;

#[derive(Debug)]
enum Lookup {
    Dense(Vec<u32>),
    Sparse(HashMap<u64, u32>),
}

#[derive(Debug)]
pub(crate) struct PointTable {
    dim: usize,
    q: u64,
    reps: Vec<u8>,
    lookup: Lookup,
}

impl PointTable {
    pub(crate) fn new(n: usize, f: &FieldTable) -> Self {
        let dim = n + 1;
        let q = f.order() as u64;
        let total = q.checked_pow(dim as u32).expect("point indexing is limited to q^(n+1) < 2^64");
        let mut reps = Vec::new();
        let mut v = vec![0u8; dim];
        let mut count: u32 = 0;
        let mut dense = (total <= DENSE_LIMIT).then(|| vec![u32::MAX; total as usize]);
        let mut sparse = HashMap::new();
        // lexicographic sweep over all vectors; keep the normalized ones
        for _ in 0..total {
            if v.iter().rev().find(|&&x| x != 0) == Some(&1) {
                reps.extend_from_slice(&v);
                let key = encode(&v, q);
                match dense.as_mut() {
                    Some(d) => d[key as usize] = count,
                    None => {
                        sparse.insert(key, count);
                    }
                }
                count += 1;
            }
            for x in v.iter_mut().rev() {
                *x += 1;
                if (*x as u64) < q {
                    break;
                }
                *x = 0;
            }
        }
        let lookup = match dense {
            Some(d) => Lookup::Dense(d),
            None => Lookup::Sparse(sparse),
        };
        Self { dim, q, reps, lookup }
    }

    pub(crate) fn len(&self) -> usize {
        self.reps.len() / self.dim
    }

    pub(crate) fn vector(&self, idx: usize) -> &[u8] {
        &self.reps[idx * self.dim..(idx + 1) * self.dim]
    }

    /// Index of an already normalized representative.
    pub(crate) fn index_of_normalized(&self, v: &[u8]) -> usize {
        let key = encode(v, self.q);
        let idx = match &self.lookup {
            Lookup::Dense(d) => d[key as usize],
            Lookup::Sparse(s) => s[&key],
        };
        debug_assert_ne!(idx, u32::MAX, "vector is not normalized");
        idx as usize
    }
}

fn encode(v: &[u8], q: u64) -> u64 {
    v.iter().fold(0u64, |acc, &x| acc * q + x as u64)
}

/// Scales `v` so that its last nonzero coordinate is 1. Returns false for the zero vector.
pub(crate) fn normalize(f: &FieldTable, v: &mut [u8]) -> bool {
    let Some(&last) = v.iter().rev().find(|&&x| x != 0) else {
        return false;
    };
    if last != 1 {
        let inv = f.inv(last).unwrap();
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
    }
    true
}
