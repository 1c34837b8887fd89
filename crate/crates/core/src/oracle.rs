//! Brute-force counters for the closed-form counts and bounds.
//!
//! Counts here come from raw enumeration of subspaces and point bitsets. The
//! formulas are consulted only for the final comparison, so a wrong formula
//! and a wrong enumerator would have to agree by accident.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::bitset::{self, BitSet};
use crate::counting::{
    a0b3_bound, s_count, s_points, two_solid_plane_bound, two_solid_plane_count, two_solid_plane_parts, FormulaValue,
};
use crate::projective::{Constraints, ProjectiveError, ProjectiveSpace, Subspace};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error(transparent)]
    Projective(#[from] ProjectiveError),
    #[error("hypothesis violated: {0}")]
    Precondition(String),
    #[error("unsupported scale: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, OracleError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "equal")]
    Equal,
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
}

impl Relation {
    pub fn holds(self, count: u64, target: &FormulaValue) -> bool {
        let c = BigUint::from(count);
        match self {
            Self::Equal => c == target.0,
            Self::AtMost => c <= target.0,
            Self::AtLeast => c >= target.0,
        }
    }
}

/// One brute-force count compared against a formula value.
#[derive(Debug, Clone, Serialize)]
pub struct OracleResult {
    pub oracle: String,
    pub parameters: Value,
    pub count: u64,
    pub bound_or_formula: FormulaValue,
    pub relation: Relation,
    pub pass: bool,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub detail: BTreeMap<String, Value>,
}

impl OracleResult {
    fn new(oracle: &str, parameters: Value, count: u64, target: FormulaValue, relation: Relation) -> Self {
        Self {
            oracle: oracle.to_string(),
            parameters,
            count,
            pass: relation.holds(count, &target),
            bound_or_formula: target,
            relation,
            detail: BTreeMap::new(),
        }
    }

    fn with(mut self, key: &str, v: Value) -> Self {
        self.detail.insert(key.to_string(), v);
        self
    }
}

fn text(s: &Subspace) -> Value {
    json!(s.to_string())
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Point bitsets of every `d`-subspace of a space, enumerated without constraints.
struct Catalog {
    by_dim: BTreeMap<i32, Vec<BitSet>>,
}

impl Catalog {
    fn new() -> Self {
        Self { by_dim: BTreeMap::new() }
    }

    fn get(&mut self, space: &ProjectiveSpace, d: i32) -> Result<&[BitSet]> {
        if let std::collections::btree_map::Entry::Vacant(e) = self.by_dim.entry(d) {
            let all = space.enumerate(d, Constraints::none())?;
            let bits = all.iter().map(|s| space.point_bitset(s)).collect();
            e.insert(bits);
        }
        Ok(&self.by_dim[&d])
    }
}

fn skew_count(all: &[BitSet], k_bits: &BitSet, l_bits: &BitSet) -> u64 {
    all.iter().filter(|b| k_bits.is_subset(b) && b.is_disjoint(l_bits)).count() as u64
}

fn check_skew_inputs(space: &ProjectiveSpace, l_sub: &Subspace, k_sub: &Subspace, d: i32) -> Result<()> {
    if !space.are_skew(l_sub, k_sub)? {
        return Err(OracleError::Precondition(format!("{l_sub} and {k_sub} are not skew")));
    }
    if d < k_sub.dim() || d > space.n() as i32 {
        return Err(OracleError::Precondition(format!("need dim {} <= d <= {}", k_sub.dim(), space.n())));
    }
    Ok(())
}

/// `d`-subspaces containing `k_sub` and skew to `l_sub`, by scanning all `d`-subspaces.
pub fn count_skew_constrained(space: &ProjectiveSpace, l_sub: &Subspace, k_sub: &Subspace, d: i32) -> Result<OracleResult> {
    check_skew_inputs(space, l_sub, k_sub, d)?;
    let mut cat = Catalog::new();
    skew_result(space, &mut cat, l_sub, k_sub, d, None)
}

fn skew_result(
    space: &ProjectiveSpace,
    cat: &mut Catalog,
    l_sub: &Subspace,
    k_sub: &Subspace,
    d: i32,
    seed: Option<(u64, u64)>,
) -> Result<OracleResult> {
    let (kb, lb) = (space.point_bitset(k_sub), space.point_bitset(l_sub));
    let count = skew_count(cat.get(space, d)?, &kb, &lb);
    let (l, k, n) = (l_sub.dim() as i64, k_sub.dim() as i64, space.n() as i64);
    let mut params = json!({
        "q": space.q(), "n": n, "d": d, "l": l, "k": k,
        "l_sub": text(l_sub), "k_sub": text(k_sub),
    });
    if let Some((s, stream)) = seed {
        params["seed"] = json!(s);
        params["stream"] = json!(stream);
    }
    Ok(OracleResult::new("skew-count", params, count, s_count(l, k, d as i64, n, space.q()), Relation::Equal))
}

/// Every `(l, k, d)` with `l`- and `k`-subspaces able to be skew in PG(n,q) and `k <= d <= n`.
pub fn skew_parameter_tuples(n: i32) -> Vec<(i32, i32, i32)> {
    let mut out = Vec::new();
    for l in -1..=n {
        for k in -1..=n {
            if l + k + 2 > n + 1 {
                continue;
            }
            for d in k.max(-1)..=n {
                out.push((l, k, d));
            }
        }
    }
    out
}

/// The skew-count oracle over all tuples of [`skew_parameter_tuples`] for
/// `1 <= n <= n_max`: a coordinate configuration plus `random_configs`
/// seeded random ones per tuple.
pub fn skew_count_grid(q: u32, n_max: usize, random_configs: usize, seed: u64) -> Result<Vec<OracleResult>> {
    let per_n: Vec<Result<Vec<OracleResult>>> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let space = ProjectiveSpace::new(n, q)?;
            let mut cat = Catalog::new();
            let mut out = Vec::new();
            for (t, (l, k, d)) in skew_parameter_tuples(n as i32).into_iter().enumerate() {
                let l_sub = space.coordinate_subspace(&((n as i32 - l) as usize..=n).collect::<Vec<_>>());
                let l_sub = if l < 0 { space.empty() } else { l_sub };
                let k_sub = space.coordinate_subspace(&(0..(k + 1) as usize).collect::<Vec<_>>());
                out.push(skew_result(&space, &mut cat, &l_sub, &k_sub, d, None)?);
                let stream = ((n as u64) << 32) | t as u64;
                let mut rng = rng_for(seed, stream);
                for _ in 0..random_configs {
                    let k_sub = space.random_subspace(k, &mut rng);
                    let l_sub = loop {
                        let c = space.random_subspace(l, &mut rng);
                        if space.are_skew(&c, &k_sub)? {
                            break c;
                        }
                    };
                    out.push(skew_result(&space, &mut cat, &l_sub, &k_sub, d, Some((seed, stream)))?);
                }
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for r in per_n {
        all.extend(r?);
    }
    Ok(all)
}

/// Points and planes for the three-plane solid count.
#[derive(Debug, Clone)]
pub struct ThreePlaneConfig {
    pub p1: Subspace,
    pub p2: Subspace,
    pub planes: [Subspace; 3],
}

impl ThreePlaneConfig {
    /// `P1 = e0`, planes `⟨e0,e1,e2⟩, ⟨e0,e3,e4⟩, ⟨e0,e5,e6⟩`, `P2 = e1+e3+e5`.
    pub fn canonical(space: &ProjectiveSpace) -> Self {
        let c = |v: &[usize]| space.coordinate_subspace(v);
        Self {
            p1: c(&[0]),
            p2: space.point(&[0, 1, 0, 1, 0, 1, 0]).expect("valid point"),
            planes: [c(&[0, 1, 2]), c(&[0, 3, 4]), c(&[0, 5, 6])],
        }
    }

    /// Pairwise meets are exactly `P1` and `P2` avoids every pairwise join.
    pub fn validate(&self, space: &ProjectiveSpace) -> Result<()> {
        if space.n() != 6 {
            return Err(OracleError::Unsupported("the three-plane count lives in PG(6,q)".into()));
        }
        if self.p1.dim() != 0 || self.p2.dim() != 0 || self.p1 == self.p2 {
            return Err(OracleError::Precondition("P1 and P2 must be distinct points".into()));
        }
        for e in &self.planes {
            if e.dim() != 2 {
                return Err(OracleError::Precondition(format!("{e} is not a plane")));
            }
        }
        for i in 0..3 {
            for j in i + 1..3 {
                let (a, b) = (&self.planes[i], &self.planes[j]);
                if space.meet(a, b)? != self.p1 {
                    return Err(OracleError::Precondition(format!("planes {} and {} do not meet exactly in P1", i + 1, j + 1)));
                }
                if space.contains(&space.span(a, b)?, &self.p2)? {
                    return Err(OracleError::Precondition(format!("P2 lies in the join of planes {} and {}", i + 1, j + 1)));
                }
            }
        }
        Ok(())
    }

    fn random<R: rand::Rng>(space: &ProjectiveSpace, rng: &mut R) -> Self {
        loop {
            let p1 = space.random_subspace(0, rng);
            let planes = [0, 1, 2].map(|_| space.random_subspace_through(2, &p1, rng));
            let p2 = space.random_subspace(0, rng);
            let c = Self { p1, p2, planes };
            if c.validate(space).is_ok() {
                return c;
            }
        }
    }

    fn params(&self) -> Value {
        json!({
            "p1": text(&self.p1), "p2": text(&self.p2),
            "planes": self.planes.iter().map(text).collect::<Vec<_>>(),
        })
    }
}

/// Solids through `P2` meeting all three planes, compared with the upper bound.
pub fn count_solids_meeting_three_planes(space: &ProjectiveSpace, cfg: &ThreePlaneConfig) -> Result<OracleResult> {
    cfg.validate(space)?;
    let plane_bits = cfg.planes.each_ref().map(|e| space.point_bitset(e));
    let p2 = space.point_bitset(&cfg.p2);
    let mut count = 0u64;
    space.for_each_subspace(3, Constraints::none().contains(&cfg.p2), |s| {
        let b = space.point_bitset(&s);
        if p2.is_subset(&b) && plane_bits.iter().all(|e| !e.is_disjoint(&b)) {
            count += 1;
        }
    })?;
    let mut params = cfg.params();
    params["q"] = json!(space.q());
    Ok(OracleResult::new("a0b3", params, count, a0b3_bound(space.q()), Relation::AtMost))
}

/// Results of a seeded sweep, with the largest count seen.
#[derive(Debug, Clone, Serialize)]
pub struct OracleSweep {
    pub oracle: String,
    pub seed: u64,
    pub results: Vec<OracleResult>,
    pub max_count: u64,
    pub pass: bool,
}

impl OracleSweep {
    fn from_results(oracle: &str, seed: u64, results: Vec<OracleResult>) -> Self {
        let max_count = results.iter().map(|r| r.count).max().unwrap_or(0);
        let pass = results.iter().all(|r| r.pass);
        Self { oracle: oracle.to_string(), seed, results, max_count, pass }
    }
}

/// The canonical configuration followed by `sweeps` random valid ones.
pub fn a0b3_sweep(q: u32, sweeps: usize, seed: u64) -> Result<OracleSweep> {
    let space = ProjectiveSpace::new(6, q)?;
    let mut rng = rng_for(seed, 0);
    let mut cfgs = vec![ThreePlaneConfig::canonical(&space)];
    cfgs.extend((0..sweeps).map(|_| ThreePlaneConfig::random(&space, &mut rng)));
    let results: Result<Vec<_>> = cfgs
        .par_iter()
        .enumerate()
        .map(|(i, c)| {
            let r = count_solids_meeting_three_planes(&space, c)?;
            Ok(r.with("config", json!(if i == 0 { "canonical".to_string() } else { format!("random #{i}") })))
        })
        .collect();
    Ok(OracleSweep::from_results("a0b3", seed, results?))
}

/// A point off two solids that share at most a line.
#[derive(Debug, Clone)]
pub struct TwoSolidConfig {
    pub point: Subspace,
    pub solids: [Subspace; 2],
}

impl TwoSolidConfig {
    /// Trace dimension 2: `S1 = ⟨e0..e3⟩`, `S2 = ⟨e0,e1,e3+e4,e5⟩`, `P = e4`.
    /// Trace dimension 1: `S1 = ⟨e0..e3⟩`, `S2 = ⟨e3..e6⟩`, `P = e0+e4`.
    pub fn canonical(space: &ProjectiveSpace, u: i32) -> Result<Self> {
        let c = |v: &[usize]| space.coordinate_subspace(v);
        let v = |x: [u8; 7]| x.to_vec();
        let cfg = match u {
            2 => Self {
                point: c(&[4]),
                solids: [
                    c(&[0, 1, 2, 3]),
                    space.subspace(&[
                        v([1, 0, 0, 0, 0, 0, 0]),
                        v([0, 1, 0, 0, 0, 0, 0]),
                        v([0, 0, 0, 1, 1, 0, 0]),
                        v([0, 0, 0, 0, 0, 1, 0]),
                    ])?,
                ],
            },
            1 => Self { point: space.point(&[1, 0, 0, 0, 1, 0, 0])?, solids: [c(&[0, 1, 2, 3]), c(&[3, 4, 5, 6])] },
            _ => return Err(OracleError::Precondition(format!("trace dimension must be 1 or 2, got {u}"))),
        };
        Ok(cfg)
    }

    pub fn validate(&self, space: &ProjectiveSpace) -> Result<()> {
        if space.n() != 6 {
            return Err(OracleError::Unsupported("the two-solid count lives in PG(6,q)".into()));
        }
        let [s1, s2] = &self.solids;
        if s1.dim() != 3 || s2.dim() != 3 || self.point.dim() != 0 {
            return Err(OracleError::Precondition("need two solids and a point".into()));
        }
        if space.meet(s1, s2)?.dim() > 1 {
            return Err(OracleError::Precondition("the solids share more than a line".into()));
        }
        if space.contains(s1, &self.point)? || space.contains(s2, &self.point)? {
            return Err(OracleError::Precondition("the point lies on one of the solids".into()));
        }
        Ok(())
    }

    /// `⟨P, S2⟩ ∩ S1`.
    pub fn trace(&self, space: &ProjectiveSpace) -> Result<Subspace> {
        Ok(space.meet(&space.span(&self.point, &self.solids[1])?, &self.solids[0])?)
    }

    fn random<R: rand::Rng>(space: &ProjectiveSpace, rng: &mut R, want_u: Option<i32>) -> Self {
        loop {
            let s1 = space.random_subspace(3, rng);
            let s2 = space.random_subspace(3, rng);
            let c = Self { point: space.random_subspace(0, rng), solids: [s1, s2] };
            if c.validate(space).is_ok() && want_u.is_none_or(|u| c.trace(space).unwrap().dim() == u) {
                return c;
            }
        }
    }
}

/// Planes through the point meeting both solids, split by how they meet
/// `V = ⟨trace, P⟩`; the total must equal the closed form for the trace
/// dimension and stay under the uniform bound.
pub fn count_planes_meeting_two_solids(space: &ProjectiveSpace, cfg: &TwoSolidConfig) -> Result<Vec<OracleResult>> {
    cfg.validate(space)?;
    let q = space.q();
    let trace = cfg.trace(space)?;
    let u = trace.dim();
    let v = space.span(&trace, &cfg.point)?;
    let vb = space.point_bitset(&v);
    let [b1, b2] = cfg.solids.each_ref().map(|s| space.point_bitset(s));
    let pb = space.point_bitset(&cfg.point);
    let line_pts = q as usize + 1;
    let mut parts = [0u64; 3];
    space.for_each_subspace(2, Constraints::none().contains(&cfg.point), |e| {
        let b = space.point_bitset(&e);
        debug_assert!(pb.is_subset(&b));
        if !b.is_disjoint(&b1) && !b.is_disjoint(&b2) {
            let k = b.intersection_count(&vb);
            let slot = if k == 1 { 0 } else if k == line_pts { 1 } else { 2 };
            parts[slot] += 1;
        }
    })?;
    let total: u64 = parts.iter().sum();
    let params = json!({
        "q": q, "u": u, "point": text(&cfg.point),
        "solids": cfg.solids.iter().map(text).collect::<Vec<_>>(),
        "solid_meet_dim": space.meet(&cfg.solids[0], &cfg.solids[1])?.dim(),
    });
    let mut out = vec![
        OracleResult::new("hilfslemma", params.clone(), total, two_solid_plane_count(u as i64, q), Relation::Equal)
            .with("parts", json!(parts)),
        OracleResult::new("hilfslemma-bound", params.clone(), total, two_solid_plane_bound(q), Relation::AtMost),
    ];
    let names = ["meet_join_in_point", "meet_join_in_line", "inside_join"];
    for ((name, c), f) in names.iter().zip(parts).zip(two_solid_plane_parts(u as i64, q)) {
        out.push(OracleResult::new(&format!("hilfslemma-part:{name}"), params.clone(), c, f, Relation::Equal));
    }
    Ok(out)
}

/// Canonical configuration for trace dimension `u` plus `sweeps` random ones with the same `u`.
pub fn hilfslemma_sweep(q: u32, u: i32, sweeps: usize, seed: u64) -> Result<OracleSweep> {
    let space = ProjectiveSpace::new(6, q)?;
    let mut rng = rng_for(seed, u as u64);
    let mut cfgs = vec![TwoSolidConfig::canonical(&space, u)?];
    cfgs.extend((0..sweeps).map(|_| TwoSolidConfig::random(&space, &mut rng, Some(u))));
    let mut results = Vec::new();
    for c in &cfgs {
        results.extend(count_planes_meeting_two_solids(&space, c)?);
    }
    Ok(OracleSweep::from_results("hilfslemma", seed, results))
}

fn line_meeting_extensions(all: &[BitSet], family: &[usize], line_pts: usize) -> Vec<usize> {
    let in_family: std::collections::HashSet<usize> = family.iter().copied().collect();
    (0..all.len())
        .into_par_iter()
        .filter(|i| !in_family.contains(i))
        .filter(|&i| family.iter().all(|&j| all[i].intersection_count(&all[j]) == line_pts))
        .collect()
}

/// Plane families of PG(n,2), n = 5, pairwise meeting in lines: the star of a
/// line and the planes of a solid both have `s(n-2)` members and cannot be
/// extended; and three such planes not on a common line span only a solid.
pub fn max_line_meeting_family_check(n: usize, q: u32) -> Result<Vec<OracleResult>> {
    if n != 5 || q != 2 {
        return Err(OracleError::Unsupported(format!("exhaustive search runs at n=5, q=2 only (got n={n}, q={q})")));
    }
    let space = ProjectiveSpace::new(n, q)?;
    let planes = space.enumerate(2, Constraints::none())?;
    let bits: Vec<BitSet> = planes.iter().map(|e| space.point_bitset(e)).collect();
    let line_pts = q as usize + 1;
    let line = space.point_bitset(&space.coordinate_subspace(&[0, 1]));
    let solid = space.point_bitset(&space.coordinate_subspace(&[0, 1, 2, 3]));
    let target = s_points(n as i64 - 2, q);
    let mut out = Vec::new();
    for (name, fam) in [
        ("line_star", (0..bits.len()).filter(|&i| line.is_subset(&bits[i])).collect::<Vec<_>>()),
        ("solid_full", (0..bits.len()).filter(|&i| bits[i].is_subset(&solid)).collect::<Vec<_>>()),
    ] {
        let params = json!({"n": n, "q": q, "family": name, "planes_scanned": planes.len()});
        out.push(OracleResult::new("line-meeting-size", params.clone(), fam.len() as u64, target.clone(), Relation::Equal));
        let ext = line_meeting_extensions(&bits, &fam, line_pts);
        out.push(
            OracleResult::new("line-meeting-extensions", params, ext.len() as u64, FormulaValue::zero(), Relation::Equal)
                .with("first_extension", json!(ext.first().map(|&i| planes[i].to_string()))),
        );
    }
    // Fix A (all planes are equivalent), run B and C over every plane.
    let a = space.point_bitset(&space.coordinate_subspace(&[0, 1, 2]));
    let meets_in_line = |x: &BitSet, y: &BitSet| x.intersection_count(y) == line_pts;
    let bs: Vec<usize> = (0..bits.len()).filter(|&i| meets_in_line(&a, &bits[i])).collect();
    let (triples, violations): (u64, u64) = bs
        .par_iter()
        .map(|&b| {
            let mut ab = a.clone();
            ab.intersect_with(&bits[b]);
            let join = space.point_bitset(&space.span(&space.coordinate_subspace(&[0, 1, 2]), &planes[b]).unwrap());
            let mut t = 0;
            let mut v = 0;
            for (c, cb) in bits.iter().enumerate() {
                if c == b || !meets_in_line(&a, cb) || !meets_in_line(&bits[b], cb) {
                    continue;
                }
                let mut ac = a.clone();
                ac.intersect_with(cb);
                if ac == ab {
                    continue;
                }
                t += 1;
                if !bitset::subset(cb.words(), join.words()) {
                    v += 1;
                }
            }
            (t, v)
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    out.push(
        OracleResult::new("line-meeting-dichotomy", json!({"n": n, "q": q}), violations, FormulaValue::zero(), Relation::Equal)
            .with("triples_checked", json!(triples)),
    );
    Ok(out)
}

/// Complements of a fixed `d`-dimensional subspace of `GF(q)^n`, counted
/// among all `(n-d)`-dimensional subspaces.
pub fn complement_count_check(d: usize, n: usize, q: u32) -> Result<OracleResult> {
    if n == 0 || d > n || n > 6 {
        return Err(OracleError::Unsupported(format!("need 0 <= d <= n and 1 <= n <= 6 (got d={d}, n={n})")));
    }
    let space = ProjectiveSpace::new(n - 1, q)?;
    let w = space.coordinate_subspace(&(0..d).collect::<Vec<_>>());
    let wb = space.point_bitset(&w);
    let mut count = 0u64;
    space.for_each_subspace((n - d) as i32 - 1, Constraints::none(), |c| {
        if space.point_bitset(&c).is_disjoint(&wb) {
            count += 1;
        }
    })?;
    let expected = FormulaValue(num_traits::pow(BigUint::from(q), d * (n - d)));
    Ok(OracleResult::new("complement-count", json!({"d": d, "n": n, "q": q}), count, expected, Relation::Equal))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skew_examples() {
        let s3 = ProjectiveSpace::new(3, 2).unwrap();
        let l = s3.coordinate_subspace(&[2, 3]);
        let k = s3.coordinate_subspace(&[0]);
        let r = count_skew_constrained(&s3, &l, &k, 1).unwrap();
        assert_eq!(r.count, 4);
        assert!(r.pass);

        let s5 = ProjectiveSpace::new(5, 2).unwrap();
        let r = count_skew_constrained(&s5, &s5.coordinate_subspace(&[4, 5]), &s5.empty(), 2).unwrap();
        assert!(r.pass, "{r:?}");

        let s6 = ProjectiveSpace::new(6, 2).unwrap();
        let r = count_skew_constrained(&s6, &s6.empty(), &s6.coordinate_subspace(&[0, 1, 2]), 3).unwrap();
        assert_eq!(r.count, 15);
        assert!(r.pass);

        assert!(matches!(
            count_skew_constrained(&s3, &l, &s3.coordinate_subspace(&[3]), 1),
            Err(OracleError::Precondition(_))
        ));
    }

    #[test]
    fn skew_grid_small() {
        let rs = skew_count_grid(2, 3, 2, 11).unwrap();
        assert!(rs.iter().all(|r| r.pass), "{:?}", rs.iter().find(|r| !r.pass));
        let again = skew_count_grid(2, 3, 2, 11).unwrap();
        assert_eq!(serde_json::to_string(&rs).unwrap(), serde_json::to_string(&again).unwrap());
    }

    #[test]
    fn three_planes() {
        let s = ProjectiveSpace::new(6, 2).unwrap();
        let c = ThreePlaneConfig::canonical(&s);
        let r = count_solids_meeting_three_planes(&s, &c).unwrap();
        assert!(r.pass);
        assert_eq!(r.bound_or_formula, 539);
        let mut bad = c.clone();
        bad.p2 = s.coordinate_subspace(&[1]);
        assert!(matches!(count_solids_meeting_three_planes(&s, &bad), Err(OracleError::Precondition(_))));
    }

    #[test]
    fn two_solids() {
        let s = ProjectiveSpace::new(6, 2).unwrap();
        let rs = count_planes_meeting_two_solids(&s, &TwoSolidConfig::canonical(&s, 2).unwrap()).unwrap();
        assert_eq!(rs[0].count, 267);
        assert!(rs.iter().all(|r| r.pass));
        let rs = count_planes_meeting_two_solids(&s, &TwoSolidConfig::canonical(&s, 1).unwrap()).unwrap();
        assert_eq!(rs[0].parameters["u"], json!(1));
        assert!(rs[0].count < 267);
        assert!(rs.iter().all(|r| r.pass));
        let bad = TwoSolidConfig { point: s.coordinate_subspace(&[0]), solids: [s.coordinate_subspace(&[0, 1, 2, 3]), s.coordinate_subspace(&[3, 4, 5, 6])] };
        assert!(count_planes_meeting_two_solids(&s, &bad).is_err());
    }

    #[test]
    fn line_meeting() {
        let rs = max_line_meeting_family_check(5, 2).unwrap();
        assert!(rs.iter().all(|r| r.pass), "{rs:?}");
        assert_eq!(rs[0].count, 15);
        assert!(rs.last().unwrap().detail["triples_checked"].as_u64().unwrap() > 0);
        assert!(max_line_meeting_family_check(6, 2).is_err());
    }

    #[test]
    fn complements() {
        assert_eq!(complement_count_check(2, 4, 2).unwrap().count, 16);
        assert_eq!(complement_count_check(3, 3, 2).unwrap().count, 1);
        assert_eq!(complement_count_check(0, 3, 2).unwrap().count, 1);
        assert_eq!(complement_count_check(1, 3, 3).unwrap().count, 9);
        assert!(complement_count_check(2, 4, 2).unwrap().pass);
    }
}
