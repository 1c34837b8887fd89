//! The Kneser graph Γ on plane-solid flags of PG(6,q).
//!
//! Vertices are incident pairs `(E, S)` of a plane `E` and a solid `S`. Two
//! flags are adjacent when they are in general position: every subspace of one
//! is either disjoint from, or spans PG(6,q) together with, every subspace of
//! the other. For plane-solid flags in PG(6,q) this reduces to
//! `E ∩ S' = ∅ = E' ∩ S`, which [`FlagUniverse::adjacent`] tests with two
//! bitset ANDs. [`general_position`] keeps the four-pair definition for
//! cross-checking.
//!
//! The materialized [`FlagUniverse`] orders flags by solid (canonical order),
//! then by plane within the solid, so the flags of solid `s` occupy ordinals
//! `s·k .. (s+1)·k` with `k = s(3)` planes per solid.

use std::collections::HashMap;
use std::io::{self, Write};
use std::ops::Range;
use std::sync::OnceLock;

use rayon::prelude::*;
use thiserror::Error;

use crate::bitset::{self, words_for, BitSet};
use crate::projective::{Constraints, ProjectiveError, ProjectiveSpace, Subspace};

/// Orders for which the whole vertex set is materialized.
pub const MATERIALIZED_ORDERS: [u32; 2] = [2, 3];

#[derive(Debug, Error)]
pub enum KneserError {
    #[error(
        "the flag universe is only materialized for q in {MATERIALIZED_ORDERS:?} \
         (q={0} would need on the order of q^11 flags, far beyond the memory bound)"
    )]
    UnsupportedOrder(u32),
    #[error(transparent)]
    Projective(#[from] ProjectiveError),
    #[error("expected a plane and a solid, got dimensions {0} and {1}")]
    WrongDimension(i32, i32),
    #[error("plane is not contained in the solid")]
    NotIncident,
    #[error("flag ordinal {0} out of range (universe has {1} flags)")]
    OrdinalRange(u64, usize),
    #[error("flag sets come from different universes")]
    UniverseMismatch,
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// An incident (plane, solid) pair of PG(6,q).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    pub plane: Subspace,
    pub solid: Subspace,
}

impl Flag {
    pub fn new(space: &ProjectiveSpace, plane: Subspace, solid: Subspace) -> Result<Self, KneserError> {
        if plane.dim() != 2 || solid.dim() != 3 {
            return Err(KneserError::WrongDimension(plane.dim(), solid.dim()));
        }
        if !space.contains(&solid, &plane)? {
            return Err(KneserError::NotIncident);
        }
        Ok(Self { plane, solid })
    }

    fn members(&self) -> [&Subspace; 2] {
        [&self.plane, &self.solid]
    }
}

/// General position straight from the definition: for all `U ∈ f`, `U' ∈ g`,
/// `U ∩ U' = ∅` or `⟨U, U'⟩` is the whole space.
pub fn general_position(space: &ProjectiveSpace, f: &Flag, g: &Flag) -> Result<bool, ProjectiveError> {
    let n = space.n() as i32;
    for u in f.members() {
        for v in g.members() {
            let skew = space.meet(u, v)?.is_empty();
            if !skew && space.span(u, v)?.dim() != n {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(S^⊥, E^⊥)`: again a plane-solid flag.
pub fn dualize_flag(space: &ProjectiveSpace, f: &Flag) -> Result<Flag, ProjectiveError> {
    Ok(Flag { plane: space.dualize(&f.solid)?, solid: space.dualize(&f.plane)? })
}

/// All type-{2,3} flags of PG(6,q), with point bitsets for every plane and solid.
pub struct FlagUniverse {
    space: ProjectiveSpace,
    planes: Vec<Subspace>,
    solids: Vec<Subspace>,
    plane_index: HashMap<Subspace, u32>,
    solid_index: HashMap<Subspace, u32>,
    words: usize,
    plane_bits: Vec<u64>,
    solid_bits: Vec<u64>,
    /// `(plane id, solid id)` per ordinal.
    flags: Vec<(u32, u32)>,
    per_solid: usize,
    per_plane: usize,
    /// Ordinals of the flags on each plane, `per_plane` entries per plane.
    plane_flags: Vec<u32>,
    duals: OnceLock<(Vec<u32>, Vec<u32>)>,
}

impl std::fmt::Debug for FlagUniverse {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FlagUniverse").field("q", &self.q()).field("flags", &self.flags.len()).finish()
    }
}

impl FlagUniverse {
    pub fn build(q: u32) -> Result<Self, KneserError> {
        if !MATERIALIZED_ORDERS.contains(&q) {
            return Err(KneserError::UnsupportedOrder(q));
        }
        let space = ProjectiveSpace::new(6, q)?;
        let planes = space.enumerate(2, Constraints::none())?;
        let solids = space.enumerate(3, Constraints::none())?;
        let words = words_for(space.num_points());
        let bits_of = |subs: &[Subspace]| -> Vec<u64> {
            let mut out = Vec::with_capacity(subs.len() * words);
            for s in subs {
                out.extend_from_slice(space.point_bitset(s).words());
            }
            out
        };
        let plane_bits = bits_of(&planes);
        let solid_bits = bits_of(&solids);
        let plane_index: HashMap<Subspace, u32> =
            planes.iter().enumerate().map(|(i, s)| (s.clone(), i as u32)).collect();
        let solid_index: HashMap<Subspace, u32> =
            solids.iter().enumerate().map(|(i, s)| (s.clone(), i as u32)).collect();

        let mut flags = Vec::new();
        let mut per_solid = 0;
        for (sid, solid) in solids.iter().enumerate() {
            let mut ids: Vec<u32> = Vec::new();
            space.for_each_subspace(2, Constraints::none().within(solid), |p| ids.push(plane_index[&p]))?;
            ids.sort_unstable();
            per_solid = ids.len();
            flags.extend(ids.into_iter().map(|p| (p, sid as u32)));
        }
        let per_plane = flags.len() / planes.len();
        let mut fill = vec![0usize; planes.len()];
        let mut plane_flags = vec![0u32; flags.len()];
        for (ord, &(p, _)) in flags.iter().enumerate() {
            let p = p as usize;
            plane_flags[p * per_plane + fill[p]] = ord as u32;
            fill[p] += 1;
        }
        debug_assert!(fill.iter().all(|&c| c == per_plane));
        Ok(Self {
            space,
            planes,
            solids,
            plane_index,
            solid_index,
            words,
            plane_bits,
            solid_bits,
            flags,
            per_solid,
            per_plane,
            plane_flags,
            duals: OnceLock::new(),
        })
    }

    pub fn q(&self) -> u32 {
        self.space.q()
    }

    pub fn space(&self) -> &ProjectiveSpace {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    /// Words per point bitset.
    pub fn words(&self) -> usize {
        self.words
    }

    pub fn planes(&self) -> &[Subspace] {
        &self.planes
    }

    pub fn solids(&self) -> &[Subspace] {
        &self.solids
    }

    pub fn plane_id(&self, s: &Subspace) -> Option<u32> {
        self.plane_index.get(s).copied()
    }

    pub fn solid_id(&self, s: &Subspace) -> Option<u32> {
        self.solid_index.get(s).copied()
    }

    #[inline]
    pub fn plane_bits(&self, id: u32) -> &[u64] {
        let i = id as usize * self.words;
        &self.plane_bits[i..i + self.words]
    }

    #[inline]
    pub fn solid_bits(&self, id: u32) -> &[u64] {
        let i = id as usize * self.words;
        &self.solid_bits[i..i + self.words]
    }

    /// `(plane id, solid id)` of a flag ordinal.
    #[inline]
    pub fn ids(&self, f: u32) -> (u32, u32) {
        self.flags[f as usize]
    }

    pub fn flag(&self, f: u32) -> Flag {
        let (p, s) = self.ids(f);
        Flag { plane: self.planes[p as usize].clone(), solid: self.solids[s as usize].clone() }
    }

    pub fn plane_of(&self, f: u32) -> &Subspace {
        &self.planes[self.ids(f).0 as usize]
    }

    pub fn solid_of(&self, f: u32) -> &Subspace {
        &self.solids[self.ids(f).1 as usize]
    }

    /// Planes per solid, `s(3)`.
    pub fn planes_per_solid(&self) -> usize {
        self.per_solid
    }

    /// Solids per plane.
    pub fn solids_per_plane(&self) -> usize {
        self.per_plane
    }

    pub fn flags_on_solid(&self, solid: u32) -> Range<u32> {
        let a = solid as usize * self.per_solid;
        a as u32..(a + self.per_solid) as u32
    }

    pub fn flags_on_plane(&self, plane: u32) -> &[u32] {
        let a = plane as usize * self.per_plane;
        &self.plane_flags[a..a + self.per_plane]
    }

    pub fn ordinal_of_ids(&self, plane: u32, solid: u32) -> Option<u32> {
        let r = self.flags_on_solid(solid);
        let slice = &self.flags[r.start as usize..r.end as usize];
        slice.binary_search_by_key(&plane, |&(p, _)| p).ok().map(|i| r.start + i as u32)
    }

    pub fn ordinal(&self, f: &Flag) -> Option<u32> {
        self.ordinal_of_ids(self.plane_id(&f.plane)?, self.solid_id(&f.solid)?)
    }

    /// Two-disjointness adjacency on ordinals.
    #[inline]
    pub fn adjacent(&self, f: u32, g: u32) -> bool {
        let (pf, sf) = self.ids(f);
        let (pg, sg) = self.ids(g);
        bitset::disjoint(self.plane_bits(pf), self.solid_bits(sg))
            && bitset::disjoint(self.plane_bits(pg), self.solid_bits(sf))
    }

    /// Number of neighbours of `f` in Γ.
    pub fn degree(&self, f: u32) -> u64 {
        (0..self.len() as u32).into_par_iter().filter(|&g| self.adjacent(f, g)).count() as u64
    }

    fn dual_maps(&self) -> &(Vec<u32>, Vec<u32>) {
        self.duals.get_or_init(|| {
            let plane_to_solid = self
                .planes
                .par_iter()
                .map(|p| self.solid_index[&self.space.dualize(p).unwrap()])
                .collect();
            let solid_to_plane = self
                .solids
                .par_iter()
                .map(|s| self.plane_index[&self.space.dualize(s).unwrap()])
                .collect();
            (plane_to_solid, solid_to_plane)
        })
    }

    /// Ordinal of the dual flag `(S^⊥, E^⊥)`.
    pub fn dual_ordinal(&self, f: u32) -> u32 {
        let (p, s) = self.ids(f);
        let (p2s, s2p) = self.dual_maps();
        self.ordinal_of_ids(s2p[s as usize], p2s[p as usize]).expect("dual of a flag is a flag")
    }
}

/// A set of flags of one universe, stored as a bitset over ordinals.
#[derive(Clone)]
pub struct FlagSet<'u> {
    universe: &'u FlagUniverse,
    members: BitSet,
}

impl std::fmt::Debug for FlagSet<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FlagSet").field("q", &self.universe.q()).field("len", &self.len()).finish()
    }
}

impl PartialEq for FlagSet<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.universe, other.universe) && self.members == other.members
    }
}

impl<'u> FlagSet<'u> {
    pub fn empty(universe: &'u FlagUniverse) -> Self {
        Self { universe, members: BitSet::new(universe.len()) }
    }

    pub fn full(universe: &'u FlagUniverse) -> Self {
        Self { universe, members: BitSet::full(universe.len()) }
    }

    pub fn from_ordinals<I: IntoIterator<Item = u32>>(universe: &'u FlagUniverse, ords: I) -> Result<Self, KneserError> {
        let mut s = Self::empty(universe);
        for o in ords {
            if o as usize >= universe.len() {
                return Err(KneserError::OrdinalRange(o as u64, universe.len()));
            }
            s.members.insert(o as usize);
        }
        Ok(s)
    }

    /// All flags whose `(plane id, solid id)` satisfy `pred`.
    pub fn from_predicate<F>(universe: &'u FlagUniverse, pred: F) -> Self
    where
        F: Fn(u32, u32) -> bool + Sync,
    {
        let hits: Vec<u32> = (0..universe.len() as u32)
            .into_par_iter()
            .filter(|&f| {
                let (p, s) = universe.ids(f);
                pred(p, s)
            })
            .collect();
        let mut set = Self::empty(universe);
        for f in hits {
            set.members.insert(f as usize);
        }
        set
    }

    pub fn universe(&self) -> &'u FlagUniverse {
        self.universe
    }

    pub fn bits(&self) -> &BitSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, f: u32) -> bool {
        self.members.contains(f as usize)
    }

    pub fn insert(&mut self, f: u32) {
        self.members.insert(f as usize);
    }

    pub fn remove(&mut self, f: u32) {
        self.members.remove(f as usize);
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().map(|i| i as u32)
    }

    pub fn ordinals(&self) -> Vec<u32> {
        self.iter().collect()
    }

    fn same_universe(&self, other: &FlagSet<'_>) -> Result<(), KneserError> {
        if std::ptr::eq(self.universe, other.universe) {
            Ok(())
        } else {
            Err(KneserError::UniverseMismatch)
        }
    }

    pub fn union_with(&mut self, other: &FlagSet<'_>) -> Result<(), KneserError> {
        self.same_universe(other)?;
        self.members.union_with(&other.members);
        Ok(())
    }

    pub fn is_subset(&self, other: &FlagSet<'_>) -> bool {
        std::ptr::eq(self.universe, other.universe) && self.members.is_subset(&other.members)
    }

    /// Flags not in the set.
    pub fn complement(&self) -> FlagSet<'u> {
        Self { universe: self.universe, members: self.members.complement() }
    }

    /// Distinct plane ids, π₂(C).
    pub fn plane_ids(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.iter().map(|f| self.universe.ids(f).0).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Distinct solid ids, π₃(C).
    pub fn solid_ids(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.iter().map(|f| self.universe.ids(f).1).collect();
        v.dedup();
        v
    }

    /// Image under flag dualization.
    pub fn dual(&self) -> FlagSet<'u> {
        let u = self.universe;
        let ords: Vec<u32> = self.ordinals().par_iter().map(|&f| u.dual_ordinal(f)).collect();
        Self::from_ordinals(u, ords).expect("dual ordinals are in range")
    }

    /// Plane and solid bitsets of the members, packed for scanning.
    pub fn packed(&self) -> PackedFlags {
        PackedFlags::new(self.universe, self.ordinals())
    }
}

/// Member flags laid out contiguously as `[plane bits | solid bits]` records.
#[derive(Debug, Clone)]
pub struct PackedFlags {
    pub ordinals: Vec<u32>,
    words: usize,
    data: Vec<u64>,
}

impl PackedFlags {
    pub fn new(u: &FlagUniverse, ordinals: Vec<u32>) -> Self {
        let words = u.words();
        let mut data = Vec::with_capacity(ordinals.len() * 2 * words);
        for &f in &ordinals {
            let (p, s) = u.ids(f);
            data.extend_from_slice(u.plane_bits(p));
            data.extend_from_slice(u.solid_bits(s));
        }
        Self { ordinals, words, data }
    }

    pub fn len(&self) -> usize {
        self.ordinals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinals.is_empty()
    }

    #[inline]
    pub fn plane(&self, i: usize) -> &[u64] {
        let a = i * 2 * self.words;
        &self.data[a..a + self.words]
    }

    #[inline]
    pub fn solid(&self, i: usize) -> &[u64] {
        let a = i * 2 * self.words + self.words;
        &self.data[a..a + self.words]
    }

    /// Whether member `i` is adjacent to the flag with the given bitsets.
    #[inline]
    pub fn adjacent_to(&self, i: usize, plane: &[u64], solid: &[u64]) -> bool {
        bitset::disjoint(self.plane(i), solid) && bitset::disjoint(plane, self.solid(i))
    }

    /// Index of the first member adjacent to the flag, scanning `range`.
    #[inline]
    pub fn first_adjacent(&self, range: Range<usize>, plane: &[u64], solid: &[u64]) -> Option<usize> {
        range.into_iter().find(|&i| self.adjacent_to(i, plane, solid))
    }
}

/// Result of [`adjacency_scan`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdjacencyScan {
    pub count: u64,
    pub first_witness: Option<u32>,
}

/// How many members of `set` are adjacent to `target`, and the smallest such ordinal.
pub fn adjacency_scan(set: &FlagSet<'_>, target: u32) -> AdjacencyScan {
    let u = set.universe();
    let ords = set.ordinals();
    let hits: Vec<u32> = ords.par_iter().copied().filter(|&g| u.adjacent(target, g)).collect();
    AdjacencyScan { count: hits.len() as u64, first_witness: hits.first().copied() }
}

/// Number of edges of the subgraph of Γ induced on `set`.
pub fn induced_edge_count(set: &FlagSet<'_>) -> u64 {
    let packed = set.packed();
    (0..packed.len())
        .into_par_iter()
        .map(|i| {
            let (p, s) = (packed.plane(i), packed.solid(i));
            (i + 1..packed.len()).filter(|&j| packed.adjacent_to(j, p, s)).count() as u64
        })
        .sum()
}

/// `p edge V E` for the whole graph, using regularity: `E = deg · V / 2`.
pub fn dimacs_header_full(u: &FlagUniverse) -> String {
    let deg = u.degree(0);
    format!("p edge {} {}", u.len(), deg * u.len() as u64 / 2)
}

/// Writes the subgraph induced on `set` in DIMACS edge format.
///
/// If `set` is the whole universe, vertex `i + 1` is flag ordinal `i`.
/// Otherwise vertices are numbered by rank within the set and a
/// `c vertex <v> flag <ordinal>` line records the mapping. Edges are
/// emitted as `e u v` with `u < v` in lexicographic order.
pub fn write_dimacs<W: Write>(set: &FlagSet<'_>, mut out: W) -> Result<u64, KneserError> {
    let u = set.universe();
    let full = set.len() == u.len();
    let packed = set.packed();
    let edges = if full {
        let deg = u.degree(0);
        deg * u.len() as u64 / 2
    } else {
        induced_edge_count(set)
    };
    writeln!(out, "c plane-solid flag Kneser graph of PG(6,{})", u.q())?;
    writeln!(out, "p edge {} {}", packed.len(), edges)?;
    if !full {
        for (i, f) in packed.ordinals.iter().enumerate() {
            writeln!(out, "c vertex {} flag {}", i + 1, f)?;
        }
    }
    let mut written = 0u64;
    const CHUNK: usize = 256;
    for start in (0..packed.len()).step_by(CHUNK) {
        let end = (start + CHUNK).min(packed.len());
        let lines: Vec<Vec<u32>> = (start..end)
            .into_par_iter()
            .map(|i| {
                let (p, s) = (packed.plane(i), packed.solid(i));
                (i + 1..packed.len()).filter(|&j| packed.adjacent_to(j, p, s)).map(|j| j as u32).collect()
            })
            .collect();
        for (off, nbrs) in lines.into_iter().enumerate() {
            let a = start + off + 1;
            for j in nbrs {
                writeln!(out, "e {} {}", a, j + 1)?;
                written += 1;
            }
        }
    }
    assert_eq!(written, edges, "edge count header disagrees with streamed edges");
    out.flush()?;
    Ok(written)
}
