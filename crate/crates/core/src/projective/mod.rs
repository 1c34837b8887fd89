//! Subspaces of PG(n,q) and their lattice operations.
//!
//! A [`Subspace`] stores the reduced row echelon basis of the underlying
//! vector subspace of GF(q)^(n+1), so equality and hashing are structural.
//! The empty subspace (projective dimension −1) is an ordinary value, which
//! makes [`ProjectiveSpace::meet`] total.
//!
//! Text form of a subspace: `d;row1;row2;...`, rows as comma-separated element
//! codes, e.g. `1;1,0,0,0;0,0,1,2` for a line of PG(3,q). The empty subspace
//! is written `-1`.

mod enumerate;
pub(crate) mod linalg;
mod points;

use std::fmt;
use std::sync::OnceLock;

use rand::Rng;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::galois::{FieldError, FieldTable};
use enumerate::RrefIter;
use linalg::{combine, null_space, rank_of, rref};
use points::{normalize, PointTable};

/// Largest ambient dimension accepted by [`ProjectiveSpace::new`].
pub const MAX_AMBIENT_DIM: usize = 15;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectiveError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("ambient dimension {0} outside 0..={MAX_AMBIENT_DIM}")]
    AmbientDim(usize),
    #[error("subspaces live in different spaces: PG({0},{1}) vs PG({2},{3})")]
    AmbientMismatch(usize, u32, usize, u32),
    #[error("row of length {found}, expected {expected}")]
    RowLength { expected: usize, found: usize },
    #[error("element code {code} is not in GF({q})")]
    BadCode { code: u32, q: u32 },
    #[error("stated dimension {stated} but rows span dimension {actual}")]
    DimensionMismatch { stated: i32, actual: i32 },
    #[error("dimension {0} out of range for PG({1},q)")]
    DimensionRange(i32, usize),
    #[error("cannot parse subspace {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, ProjectiveError>;

/// A projective subspace in canonical (RREF) form.
///
/// The derived ordering is the canonical order used for every enumeration:
/// ambient space first, then dimension, then the basis matrix read row by row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    n: usize,
    q: u32,
    rank: usize,
    rows: Vec<u8>,
}

impl Subspace {
    /// Projective dimension (−1 for the empty subspace).
    #[inline]
    pub fn dim(&self) -> i32 {
        self.rank as i32 - 1
    }

    /// Dimension of the underlying vector subspace.
    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_empty(&self) -> bool {
        self.rank == 0
    }

    /// Basis rows, flat and row-major with `n + 1` columns.
    pub fn basis(&self) -> &[u8] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.rows[i * (self.n + 1)..(i + 1) * (self.n + 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.rows.chunks(self.n + 1)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dim())?;
        for row in self.rows() {
            f.write_str(";")?;
            for (i, x) in row.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace[PG({},{})]({})", self.n, self.q, self)
    }
}

/// Optional restrictions for [`ProjectiveSpace::enumerate`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Constraints<'a> {
    pub contains: Option<&'a Subspace>,
    pub within: Option<&'a Subspace>,
    pub skew_to: Option<&'a Subspace>,
}

impl<'a> Constraints<'a> {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn contains(mut self, s: &'a Subspace) -> Self {
        self.contains = Some(s);
        self
    }

    pub fn within(mut self, s: &'a Subspace) -> Self {
        self.within = Some(s);
        self
    }

    pub fn skew_to(mut self, s: &'a Subspace) -> Self {
        self.skew_to = Some(s);
        self
    }
}

/// PG(n,q) together with its field tables and (lazily built) point numbering.
#[derive(Debug)]
pub struct ProjectiveSpace {
    n: usize,
    field: FieldTable,
    points: OnceLock<PointTable>,
}

impl ProjectiveSpace {
    pub fn new(n: usize, q: u32) -> Result<Self> {
        if n > MAX_AMBIENT_DIM {
            return Err(ProjectiveError::AmbientDim(n));
        }
        Ok(Self { n, field: FieldTable::new(q)?, points: OnceLock::new() })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.field.order()
    }

    #[inline]
    pub fn field(&self) -> &FieldTable {
        &self.field
    }

    fn ncols(&self) -> usize {
        self.n + 1
    }

    fn canonical_of_rows(&self, mut rows: Vec<u8>) -> Subspace {
        let rank = rref(&self.field, &mut rows, self.ncols());
        Subspace { n: self.n, q: self.q(), rank, rows }
    }

    /// Span of the given rows (zero and dependent rows are allowed).
    pub fn subspace<R: AsRef<[u8]>>(&self, rows: &[R]) -> Result<Subspace> {
        let mut flat = Vec::with_capacity(rows.len() * self.ncols());
        for r in rows {
            let r = r.as_ref();
            if r.len() != self.ncols() {
                return Err(ProjectiveError::RowLength { expected: self.ncols(), found: r.len() });
            }
            if let Some(&bad) = r.iter().find(|&&x| x as u32 >= self.q()) {
                return Err(ProjectiveError::BadCode { code: bad as u32, q: self.q() });
            }
            flat.extend_from_slice(r);
        }
        Ok(self.canonical_of_rows(flat))
    }

    pub fn empty(&self) -> Subspace {
        Subspace { n: self.n, q: self.q(), rank: 0, rows: Vec::new() }
    }

    pub fn whole(&self) -> Subspace {
        self.coordinate_subspace(&(0..=self.n).collect::<Vec<_>>())
    }

    /// The point spanned by `coords`. Panics on the zero vector.
    pub fn point(&self, coords: &[u8]) -> Result<Subspace> {
        let s = self.subspace(&[coords])?;
        assert_eq!(s.rank, 1, "the zero vector is not a point");
        Ok(s)
    }

    /// Span of the unit vectors `e_i` for the listed coordinates.
    pub fn coordinate_subspace(&self, coords: &[usize]) -> Subspace {
        let rows: Vec<Vec<u8>> = coords
            .iter()
            .map(|&i| {
                let mut v = vec![0u8; self.ncols()];
                v[i] = 1;
                v
            })
            .collect();
        self.subspace(&rows).expect("unit vectors are valid")
    }

    fn check(&self, a: &Subspace) -> Result<()> {
        if a.n != self.n || a.q != self.q() {
            return Err(ProjectiveError::AmbientMismatch(a.n, a.q, self.n, self.q()));
        }
        Ok(())
    }

    fn check_pair(&self, a: &Subspace, b: &Subspace) -> Result<()> {
        self.check(a)?;
        self.check(b)?;
        Ok(())
    }

    /// Smallest subspace containing both.
    pub fn span(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check_pair(a, b)?;
        let mut rows = a.rows.clone();
        rows.extend_from_slice(&b.rows);
        Ok(self.canonical_of_rows(rows))
    }

    /// Largest common subspace; the empty subspace if they are skew.
    pub fn meet(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check_pair(a, b)?;
        let da = self.dual_unchecked(a);
        let db = self.dual_unchecked(b);
        let mut rows = da.rows;
        rows.extend_from_slice(&db.rows);
        let joined = self.canonical_of_rows(rows);
        Ok(self.dual_unchecked(&joined))
    }

    /// `inner ⊆ outer`.
    pub fn contains(&self, outer: &Subspace, inner: &Subspace) -> Result<bool> {
        self.check_pair(outer, inner)?;
        if inner.rank > outer.rank {
            return Ok(false);
        }
        let mut rows = outer.rows.clone();
        rows.extend_from_slice(&inner.rows);
        Ok(rank_of(&self.field, &rows, self.ncols()) == outer.rank)
    }

    /// `a ∩ b = ∅`.
    pub fn are_skew(&self, a: &Subspace, b: &Subspace) -> Result<bool> {
        self.check_pair(a, b)?;
        let mut rows = a.rows.clone();
        rows.extend_from_slice(&b.rows);
        Ok(rank_of(&self.field, &rows, self.ncols()) == a.rank + b.rank)
    }

    fn dual_unchecked(&self, a: &Subspace) -> Subspace {
        let ns = null_space(&self.field, &a.rows, self.ncols());
        self.canonical_of_rows(ns)
    }

    /// Orthogonal complement under the standard dot product.
    pub fn dualize(&self, a: &Subspace) -> Result<Subspace> {
        self.check(a)?;
        Ok(self.dual_unchecked(a))
    }

    /// Parses the `d;row;row` text form and canonicalizes it.
    pub fn parse_subspace(&self, text: &str) -> Result<Subspace> {
        let bad = || ProjectiveError::Parse(text.to_string());
        let mut parts = text.trim().split(';');
        let stated: i32 = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let mut rows = Vec::new();
        for part in parts {
            let row: Vec<u8> = part
                .split(',')
                .map(|x| x.trim().parse::<u8>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad())?;
            rows.push(row);
        }
        let s = self.subspace(&rows)?;
        if s.dim() != stated {
            return Err(ProjectiveError::DimensionMismatch { stated, actual: s.dim() });
        }
        Ok(s)
    }

    /// All `d`-subspaces satisfying `c`, sorted in canonical order.
    pub fn enumerate(&self, d: i32, c: Constraints<'_>) -> Result<Vec<Subspace>> {
        let mut out = Vec::new();
        self.for_each_subspace(d, c, |s| out.push(s))?;
        out.sort_unstable();
        Ok(out)
    }

    /// Number of `d`-subspaces satisfying `c` (enumerated, not computed).
    pub fn count(&self, d: i32, c: Constraints<'_>) -> Result<u64> {
        let mut n = 0u64;
        self.for_each_subspace(d, c, |_| n += 1)?;
        Ok(n)
    }

    /// Streams every `d`-subspace satisfying `c` exactly once, in generation order.
    ///
    /// Subspaces containing `contains` and lying in `within` are generated
    /// directly in the quotient `within / contains`; `skew_to` is a filter.
    pub fn for_each_subspace<F: FnMut(Subspace)>(&self, d: i32, c: Constraints<'_>, mut f: F) -> Result<()> {
        if d < -1 || d > self.n as i32 {
            return Err(ProjectiveError::DimensionRange(d, self.n));
        }
        for s in [c.contains, c.within, c.skew_to].into_iter().flatten() {
            self.check(s)?;
        }
        let ncols = self.ncols();
        let whole;
        let within = match c.within {
            Some(w) => w,
            None => {
                whole = self.whole();
                &whole
            }
        };
        let empty = self.empty();
        let base = c.contains.unwrap_or(&empty);
        if !self.contains(within, base)? {
            return Ok(());
        }
        // extend the basis of `base` to a basis of `within`
        let mut ext = base.rows.clone();
        let mut rank = base.rank;
        let mut complement = Vec::new();
        for row in within.rows() {
            let mut trial = ext.clone();
            trial.extend_from_slice(row);
            if rank_of(&self.field, &trial, ncols) > rank {
                ext = trial;
                rank += 1;
                complement.extend_from_slice(row);
            }
        }
        let free_dim = within.rank - base.rank;
        let want = d + 1 - base.rank as i32;
        if want < 0 || want as usize > free_dim {
            return Ok(());
        }
        for coeffs in RrefIter::new(want as usize, free_dim, self.q()) {
            let mut rows = base.rows.clone();
            rows.extend(combine(&self.field, &coeffs, free_dim, &complement, ncols));
            let s = self.canonical_of_rows(rows);
            if let Some(l) = c.skew_to {
                if !self.are_skew(&s, l)? {
                    continue;
                }
            }
            f(s);
        }
        Ok(())
    }

    fn point_table(&self) -> &PointTable {
        self.points.get_or_init(|| PointTable::new(self.n, &self.field))
    }

    /// Number of points, (q^(n+1) − 1)/(q − 1).
    pub fn num_points(&self) -> usize {
        self.point_table().len()
    }

    /// Normalized representative of point `idx`.
    pub fn point_vector(&self, idx: usize) -> &[u8] {
        self.point_table().vector(idx)
    }

    /// Index of the point spanned by the nonzero vector `v`.
    pub fn point_index(&self, v: &[u8]) -> Option<usize> {
        let mut v = v.to_vec();
        if v.len() != self.ncols() || !normalize(&self.field, &mut v) {
            return None;
        }
        Some(self.point_table().index_of_normalized(&v))
    }

    pub fn point_at(&self, idx: usize) -> Subspace {
        self.point(self.point_vector(idx)).expect("table vectors are valid")
    }

    /// Indices of the points of `a`, ascending.
    pub fn points_of(&self, a: &Subspace) -> Vec<usize> {
        let table = self.point_table();
        let q = self.q() as u8;
        let r = a.rank;
        let mut out = Vec::new();
        let mut coeff = vec![0u8; r];
        loop {
            // advance odometer
            let mut i = r;
            let mut carried_out = true;
            while i > 0 {
                i -= 1;
                coeff[i] += 1;
                if coeff[i] < q {
                    carried_out = false;
                    break;
                }
                coeff[i] = 0;
            }
            if carried_out {
                break;
            }
            if coeff.iter().rev().find(|&&x| x != 0) != Some(&1) {
                continue;
            }
            let mut v = combine(&self.field, &coeff, r, &a.rows, self.ncols());
            normalize(&self.field, &mut v);
            out.push(table.index_of_normalized(&v));
        }
        out.sort_unstable();
        out
    }

    /// Bit `i` set iff point `i` lies in `a`.
    pub fn point_bitset(&self, a: &Subspace) -> BitSet {
        let mut bits = BitSet::new(self.num_points());
        for i in self.points_of(a) {
            bits.insert(i);
        }
        bits
    }

    /// A uniformly random `d`-subspace (rejection sampling on random bases).
    pub fn random_subspace<R: Rng + ?Sized>(&self, d: i32, rng: &mut R) -> Subspace {
        assert!(d >= -1 && d <= self.n as i32);
        let k = (d + 1) as usize;
        loop {
            let rows: Vec<u8> = (0..k * self.ncols()).map(|_| rng.gen_range(0..self.q()) as u8).collect();
            let s = self.canonical_of_rows(rows);
            if s.rank == k {
                return s;
            }
        }
    }

    /// A random `d`-subspace containing `base` (not uniform).
    pub fn random_subspace_through<R: Rng + ?Sized>(&self, d: i32, base: &Subspace, rng: &mut R) -> Subspace {
        assert!(base.dim() <= d && d <= self.n as i32);
        loop {
            let extra = self.random_subspace(d - base.dim() - 1, rng);
            let s = self.span(base, &extra).expect("same ambient space");
            if s.dim() == d {
                return s;
            }
        }
    }

    /// A random point of `within`.
    pub fn random_point_in<R: Rng + ?Sized>(&self, within: &Subspace, rng: &mut R) -> Subspace {
        loop {
            let coeffs: Vec<u8> = (0..within.rank).map(|_| rng.gen_range(0..self.q()) as u8).collect();
            let v = combine(&self.field, &coeffs, within.rank, &within.rows, self.ncols());
            if v.iter().any(|&x| x != 0) {
                return self.canonical_of_rows(v);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pg(n: usize, q: u32) -> ProjectiveSpace {
        ProjectiveSpace::new(n, q).unwrap()
    }

    #[test]
    fn two_points_span_a_line() {
        let s = pg(3, 3);
        let p = s.point(&[1, 0, 0, 0]).unwrap();
        let r = s.point(&[0, 1, 2, 0]).unwrap();
        let l = s.span(&p, &r).unwrap();
        assert_eq!(l.dim(), 1);
        assert_eq!(s.points_of(&l).len(), 4);
        assert_eq!(s.span(&l, &l).unwrap(), l);
    }

    #[test]
    fn solids_meeting_in_a_point_span_pg6() {
        let s = pg(6, 2);
        let a = s.coordinate_subspace(&[0, 1, 2, 3]);
        let b = s.coordinate_subspace(&[3, 4, 5, 6]);
        assert_eq!(s.meet(&a, &b).unwrap().dim(), 0);
        assert_eq!(s.span(&a, &b).unwrap().dim(), 6);
    }

    #[test]
    fn meets() {
        let s = pg(6, 2);
        let h1 = s.coordinate_subspace(&[0, 1, 2, 3, 4, 5]);
        let h2 = s.coordinate_subspace(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(s.meet(&h1, &h2).unwrap().dim(), 4);
        assert_eq!(s.meet(&h1, &h1).unwrap(), h1);
        let plane = s.coordinate_subspace(&[0, 1, 2]);
        let solid = s.coordinate_subspace(&[3, 4, 5, 6]);
        let m = s.meet(&plane, &solid).unwrap();
        assert!(m.is_empty());
        assert_eq!(m.dim(), -1);
    }

    #[test]
    fn mismatched_ambient_rejected() {
        let s6 = pg(6, 2);
        let s5 = pg(5, 2);
        let a = s6.coordinate_subspace(&[0]);
        let b = s5.coordinate_subspace(&[0]);
        assert!(matches!(s6.span(&a, &b), Err(ProjectiveError::AmbientMismatch(..))));
        assert!(matches!(s6.meet(&a, &b), Err(ProjectiveError::AmbientMismatch(..))));
        let t = pg(6, 3);
        let c = t.coordinate_subspace(&[0]);
        assert!(s6.span(&a, &c).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let s = pg(6, 2);
        assert_eq!(s.count(2, Constraints::none()).unwrap(), 11811);
        let h = s.coordinate_subspace(&[0, 1, 2, 3, 4, 5]);
        assert_eq!(s.count(3, Constraints::none().within(&h)).unwrap(), 651);

        let s3 = pg(3, 2);
        let p = s3.coordinate_subspace(&[0]);
        let l = s3.coordinate_subspace(&[2, 3]);
        assert_eq!(s3.count(1, Constraints::none().contains(&p).skew_to(&l)).unwrap(), 4);
    }

    #[test]
    fn contradictory_constraints_give_nothing() {
        let s = pg(4, 2);
        let p = s.coordinate_subspace(&[0]);
        let w = s.coordinate_subspace(&[1, 2, 3]);
        assert_eq!(s.count(1, Constraints::none().contains(&p).within(&w)).unwrap(), 0);
        assert!(s.count(9, Constraints::none()).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        let s = pg(4, 3);
        let v = s.enumerate(1, Constraints::none()).unwrap();
        assert_eq!(v.len(), 1210); // [5 choose 2]_3
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn dualize_dims_and_involution() {
        let s = pg(6, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for d in -1..=6 {
            let a = s.random_subspace(d, &mut rng);
            let da = s.dualize(&a).unwrap();
            assert_eq!(da.dim(), 6 - 1 - d);
            assert_eq!(s.dualize(&da).unwrap(), a);
        }
        let h = s.coordinate_subspace(&[0, 1, 2, 3, 4, 5]);
        assert_eq!(s.dualize(&h).unwrap().dim(), 0);
    }

    #[test]
    fn dualize_reverses_flag_incidence() {
        let s = pg(6, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let solid = s.random_subspace(3, &mut rng);
        let plane = s.enumerate(2, Constraints::none().within(&solid)).unwrap()[3].clone();
        let dp = s.dualize(&plane).unwrap();
        let ds = s.dualize(&solid).unwrap();
        assert_eq!((ds.dim(), dp.dim()), (2, 3));
        assert!(s.contains(&dp, &ds).unwrap());
    }

    #[test]
    fn point_bitsets() {
        let s = pg(6, 2);
        assert_eq!(s.num_points(), 127);
        let plane = s.coordinate_subspace(&[0, 1, 2]);
        let solid = s.coordinate_subspace(&[3, 4, 5, 6]);
        assert_eq!(s.point_bitset(&plane).count(), 7);
        assert_eq!(s.point_bitset(&solid).count(), 15);
        assert!(s.point_bitset(&plane).is_disjoint(&s.point_bitset(&solid)));
    }

    #[test]
    fn point_order_is_lexicographic_normalized() {
        let s = pg(2, 3);
        assert_eq!(s.num_points(), 13);
        let reps: Vec<Vec<u8>> = (0..13).map(|i| s.point_vector(i).to_vec()).collect();
        assert!(reps.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(reps[0], vec![0, 0, 1]);
        for (i, r) in reps.iter().enumerate() {
            assert_eq!(r.iter().rev().find(|&&x| x != 0), Some(&1));
            let scaled: Vec<u8> = r.iter().map(|&x| s.field().mul(x, 2)).collect();
            assert_eq!(s.point_index(&scaled), Some(i));
        }
    }

    #[test]
    fn text_round_trip_and_errors() {
        let s = pg(3, 3);
        let l = s.subspace(&[[1u8, 2, 0, 1], [0, 1, 1, 1]]).unwrap();
        let txt = l.to_string();
        assert_eq!(s.parse_subspace(&txt).unwrap(), l);
        assert_eq!(s.parse_subspace("-1").unwrap(), s.empty());
        assert_eq!(s.empty().to_string(), "-1");
        assert!(matches!(s.parse_subspace("2;1,0,0,0"), Err(ProjectiveError::DimensionMismatch { .. })));
        assert!(matches!(s.parse_subspace("0;1,0,0"), Err(ProjectiveError::RowLength { .. })));
        assert!(matches!(s.parse_subspace("0;1,0,0,5"), Err(ProjectiveError::BadCode { .. })));
        assert!(matches!(s.parse_subspace("x;1"), Err(ProjectiveError::Parse(_))));
    }
}
