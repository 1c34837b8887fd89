//! Row reduction over a [`FieldTable`]. Matrices are flat row-major `Vec<u8>`.

use crate::galois::FieldTable;

/// Brings the first `rows.len() / ncols` rows into reduced row echelon form
/// in place, drops zero rows and returns the rank.
pub(crate) fn rref(f: &FieldTable, m: &mut Vec<u8>, ncols: usize) -> usize {
    let nrows = m.len().checked_div(ncols).unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| m[r * ncols + col] != 0) else {
            continue;
        };
        if piv != rank {
            for c in 0..ncols {
                m.swap(piv * ncols + c, rank * ncols + c);
            }
        }
        let inv = f.inv(m[rank * ncols + col]).expect("pivot is nonzero");
        if inv != 1 {
            for c in col..ncols {
                m[rank * ncols + c] = f.mul(m[rank * ncols + c], inv);
            }
        }
        for r in 0..nrows {
            if r == rank {
                continue;
            }
            let factor = m[r * ncols + col];
            if factor == 0 {
                continue;
            }
            for c in col..ncols {
                let v = f.mul(factor, m[rank * ncols + c]);
                m[r * ncols + c] = f.sub(m[r * ncols + c], v);
            }
        }
        rank += 1;
    }
    m.truncate(rank * ncols);
    rank
}

/// Rank of the stacked rows without keeping the reduced matrix.
pub(crate) fn rank_of(f: &FieldTable, rows: &[u8], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m, ncols)
}

/// Pivot column of every row of an RREF matrix.
pub(crate) fn pivots(m: &[u8], ncols: usize) -> Vec<usize> {
    m.chunks(ncols)
        .map(|row| row.iter().position(|&x| x != 0).expect("rref rows are nonzero"))
        .collect()
}

/// Basis of `{x : R x = 0}` for an RREF matrix `R`, one row per free column.
pub(crate) fn null_space(f: &FieldTable, r: &[u8], ncols: usize) -> Vec<u8> {
    let piv = pivots(r, ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !piv.contains(c)) {
        let mut v = vec![0u8; ncols];
        v[free] = 1;
        for (i, &pc) in piv.iter().enumerate() {
            v[pc] = f.neg(r[i * ncols + free]);
        }
        out.extend_from_slice(&v);
    }
    out
}

/// `coeffs` (k×a) times `basis` (a×ncols).
pub(crate) fn combine(f: &FieldTable, coeffs: &[u8], a: usize, basis: &[u8], ncols: usize) -> Vec<u8> {
    let k = coeffs.len().checked_div(a).unwrap_or(0);
    let mut out = vec![0u8; k * ncols];
    for i in 0..k {
        for j in 0..a {
            let c = coeffs[i * a + j];
            if c == 0 {
                continue;
            }
            for col in 0..ncols {
                let v = f.mul(c, basis[j * ncols + col]);
                out[i * ncols + col] = f.add(out[i * ncols + col], v);
            }
        }
    }
    out
}
