//! Certificates for flag sets: independence, maximality, the pencil structure
//! of maximal sets, hyperplane traces, and colorings.
//!
//! Every check returns a [`CheckResult`]; failures carry the smallest witness
//! by flag ordinal so reports are reproducible.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bitset::{self, BitSet};
use crate::counting::{chromatic_lower, flag_count, independence_number, s_points, s_subspaces, FormulaValue};
use crate::kneser::{FlagSet, FlagUniverse, PackedFlags};
use crate::projective::Subspace;

/// A concrete counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Flag(u32),
    Pair(u32, u32),
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Witness>,
    pub ms: u64,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub detail: BTreeMap<String, Value>,
}

impl CheckResult {
    fn timed<F: FnOnce() -> (bool, Option<Witness>, BTreeMap<String, Value>)>(name: &str, f: F) -> Self {
        let t = Instant::now();
        let (pass, witness, detail) = f();
        Self { name: name.to_string(), pass, witness, ms: t.elapsed().as_millis() as u64, detail }
    }
}

fn detail<const N: usize>(pairs: [(&str, Value); N]) -> BTreeMap<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub q: u32,
    pub checks: Vec<CheckResult>,
    pub cardinality: u64,
    pub expected: Option<FormulaValue>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>, q: u32, cardinality: u64) -> Self {
        Self { subject: subject.into(), q, checks: Vec::new(), cardinality, expected: None }
    }

    pub fn for_set(subject: impl Into<String>, set: &FlagSet<'_>) -> Self {
        Self::new(subject, set.universe().q(), set.len() as u64)
    }

    pub fn with_expected(mut self, v: FormulaValue) -> Self {
        self.expected = Some(v);
        self
    }

    pub fn push(&mut self, c: CheckResult) -> &mut Self {
        self.checks.push(c);
        self
    }

    pub fn extend(&mut self, other: VerificationReport) -> &mut Self {
        self.checks.extend(other.checks);
        self
    }

    /// All checks pass, and the cardinality matches `expected` when one is given.
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass) && self.expected.as_ref().is_none_or(|e| *e == self.cardinality)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Sets every `ms` to zero, for byte-stable output.
    pub fn zero_timings(&mut self) {
        for c in &mut self.checks {
            c.ms = 0;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Smallest adjacent pair `(i, j)`, `i < j`, of positions in `packed`.
fn first_adjacent_pair(packed: &PackedFlags) -> Option<(usize, usize)> {
    let n = packed.len();
    (0..n).into_par_iter().find_map_first(|i| {
        packed.first_adjacent(i + 1..n, packed.plane(i), packed.solid(i)).map(|j| (i, j))
    })
}

pub fn independence_check(set: &FlagSet<'_>) -> CheckResult {
    CheckResult::timed("independent", || {
        let packed = set.packed();
        let w = first_adjacent_pair(&packed).map(|(i, j)| Witness::Pair(packed.ordinals[i], packed.ordinals[j]));
        (w.is_none(), w, BTreeMap::new())
    })
}

/// Smallest non-member with no neighbour in `set`.
pub fn first_extension(set: &FlagSet<'_>) -> Option<u32> {
    let u = set.universe();
    let packed = set.packed();
    (0..u.len() as u32).into_par_iter().filter(|&f| !set.contains(f)).find_first(|&f| {
        let (p, s) = u.ids(f);
        packed.first_adjacent(0..packed.len(), u.plane_bits(p), u.solid_bits(s)).is_none()
    })
}

pub fn maximality_check(set: &FlagSet<'_>) -> CheckResult {
    CheckResult::timed("maximal", || {
        let w = first_extension(set);
        (w.is_none(), w.map(Witness::Flag), BTreeMap::new())
    })
}

pub fn check_independent(set: &FlagSet<'_>) -> VerificationReport {
    let mut r = VerificationReport::for_set("flag set", set);
    r.push(independence_check(set));
    r
}

/// Independence followed by maximality (skipped when the set is not independent).
pub fn check_maximal(set: &FlagSet<'_>) -> VerificationReport {
    let mut r = check_independent(set);
    if r.pass() {
        r.push(maximality_check(set));
    }
    r
}

/// Solids of a plane that are in the set.
#[derive(Debug, Clone, Serialize)]
pub struct PlaneTrace {
    pub plane: u32,
    pub members: usize,
    /// Dimension of the span of the member solids.
    pub span_dim: i32,
    /// Members are exactly the solids through the plane inside that span.
    pub is_subspace: bool,
}

/// Planes of a solid that are in the set.
#[derive(Debug, Clone, Serialize)]
pub struct SolidTrace {
    pub solid: u32,
    pub members: usize,
    /// Dimension of the intersection of the member planes.
    pub base_dim: i32,
    /// Members are exactly the planes of the solid through that intersection.
    pub is_pencil: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SaturationProfile {
    pub planes: Vec<PlaneTrace>,
    pub solids: Vec<SolidTrace>,
    pub saturated_planes: Vec<u32>,
    pub saturated_solids: Vec<u32>,
}

impl SaturationProfile {
    pub fn first_non_subspace(&self) -> Option<&PlaneTrace> {
        self.planes.iter().find(|t| !t.is_subspace)
    }

    pub fn first_non_pencil(&self) -> Option<&SolidTrace> {
        self.solids.iter().find(|t| !t.is_pencil)
    }
}

fn projective_count(q: u64, rank: i32) -> u64 {
    // points of a projective space with vector rank `rank`
    if rank <= 0 {
        0
    } else {
        (q.pow(rank as u32) - 1) / (q - 1)
    }
}

/// Decides, per plane and per solid of the set, whether the incident members
/// form a full quotient subspace or pencil.
///
/// A plane's member solids span some `U ⊇ E`; they form a subspace of the
/// quotient at `E` exactly when they are all solids of `U` through `E`, which
/// is a count comparison. Dually a solid's member planes meet in `U` and form
/// a pencil exactly when they are all planes of the solid through `U`.
pub fn saturation_profile(set: &FlagSet<'_>) -> SaturationProfile {
    let u = set.universe();
    let space = u.space();
    let q = u.q() as u64;
    let mut by_plane: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    let mut by_solid: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for f in set.iter() {
        let (p, s) = u.ids(f);
        by_plane.entry(p).or_default().push(s);
        by_solid.entry(s).or_default().push(p);
    }
    let planes: Vec<PlaneTrace> = by_plane
        .into_par_iter()
        .map(|(p, solids)| {
            let mut span = u.planes()[p as usize].clone();
            for &s in &solids {
                span = space.span(&span, &u.solids()[s as usize]).unwrap();
            }
            let span_dim = span.dim();
            let expected = projective_count(q, span_dim - 2);
            PlaneTrace { plane: p, members: solids.len(), span_dim, is_subspace: solids.len() as u64 == expected }
        })
        .collect();
    let solids: Vec<SolidTrace> = by_solid
        .into_par_iter()
        .map(|(s, planes)| {
            let mut meet = u.solid_bits(s).to_vec();
            for &p in &planes {
                for (m, w) in meet.iter_mut().zip(u.plane_bits(p)) {
                    *m &= w;
                }
            }
            let pts: u64 = meet.iter().map(|w| w.count_ones() as u64).sum();
            // pts = (q^{k}-1)/(q-1) for a subspace of rank k
            let rank = (0..=4).find(|&k| projective_count(q, k) == pts).expect("intersection of subspaces");
            let base_dim = rank - 1;
            let expected = projective_count(q, 3 - base_dim);
            SolidTrace { solid: s, members: planes.len(), base_dim, is_pencil: planes.len() as u64 == expected }
        })
        .collect();
    let saturated_planes = planes.iter().filter(|t| t.members == u.solids_per_plane()).map(|t| t.plane).collect();
    let saturated_solids = solids.iter().filter(|t| t.members == u.planes_per_solid()).map(|t| t.solid).collect();
    SaturationProfile { planes, solids, saturated_planes, saturated_solids }
}

/// Smallest pair of the given solids that shares less than a line.
pub fn first_solid_pair_not_meeting_in_line(u: &FlagUniverse, solids: &[u32]) -> Option<(u32, u32)> {
    let line = u.q() + 1;
    (0..solids.len()).into_par_iter().find_map_first(|i| {
        let a = u.solid_bits(solids[i]);
        solids[i + 1..].iter().find(|&&b| common_points(a, u.solid_bits(b)) < line).map(|&b| (solids[i], b))
    })
}

fn common_points(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

/// The structural checks on a saturation profile, with the first flag of an
/// offending plane or solid as witness.
pub fn check_saturation(set: &FlagSet<'_>, hyperplane: Option<&Subspace>) -> (VerificationReport, SaturationProfile) {
    let u = set.universe();
    let mut r = VerificationReport::for_set("flag set", set);
    let t = Instant::now();
    let prof = saturation_profile(set);
    let ms = t.elapsed().as_millis() as u64;
    let first_on_plane = |p: u32| u.flags_on_plane(p).iter().copied().find(|&f| set.contains(f)).unwrap();
    let first_on_solid = |s: u32| u.flags_on_solid(s).find(|&f| set.contains(f)).unwrap();

    let bad = prof.first_non_subspace().map(|t| Witness::Flag(first_on_plane(t.plane)));
    r.push(CheckResult {
        name: "plane_traces_are_quotient_subspaces".into(),
        pass: bad.is_none(),
        witness: bad,
        ms,
        detail: detail([("planes", json!(prof.planes.len()))]),
    });
    let bad = prof.first_non_pencil().map(|t| Witness::Flag(first_on_solid(t.solid)));
    r.push(CheckResult {
        name: "solid_traces_are_pencils".into(),
        pass: bad.is_none(),
        witness: bad,
        ms: 0,
        detail: detail([("solids", json!(prof.solids.len()))]),
    });
    r.push(CheckResult::timed("saturated_solids_share_lines", || {
        let w = first_solid_pair_not_meeting_in_line(u, &prof.saturated_solids)
            .map(|(a, b)| Witness::Pair(first_on_solid(a), first_on_solid(b)));
        (
            w.is_none(),
            w,
            detail([
                ("saturated_solids", json!(prof.saturated_solids.len())),
                ("saturated_planes", json!(prof.saturated_planes.len())),
            ]),
        )
    }));
    if let Some(h) = hyperplane {
        r.push(CheckResult::timed("saturated_solids_are_solids_of_hyperplane", || {
            let hb = u.space().point_bitset(h);
            let of_h: Vec<u32> = (0..u.solids().len() as u32)
                .filter(|&s| bitset::subset(u.solid_bits(s), hb.words()))
                .collect();
            let pass = of_h == prof.saturated_solids;
            let w = if pass {
                None
            } else {
                // smallest solid in exactly one of the two lists
                let sat: std::collections::BTreeSet<u32> = prof.saturated_solids.iter().copied().collect();
                let hs: std::collections::BTreeSet<u32> = of_h.iter().copied().collect();
                sat.symmetric_difference(&hs).next().map(|&s| Witness::Flag(u.flags_on_solid(s).start))
            };
            (pass, w, detail([("solids_of_hyperplane", json!(of_h.len()))]))
        }));
    }
    (r, prof)
}

/// Planes `E` with `(E, S)` in the set and `H ∩ S = E`, each with its first flag.
pub fn hyperplane_trace(set: &FlagSet<'_>, hyperplane: &Subspace) -> BTreeMap<u32, u32> {
    let u = set.universe();
    let hb = u.space().point_bitset(hyperplane);
    let mut out = BTreeMap::new();
    for f in set.iter() {
        let (p, s) = u.ids(f);
        if bitset::subset(u.plane_bits(p), hb.words()) && !bitset::subset(u.solid_bits(s), hb.words()) {
            out.entry(p).or_insert(f);
        }
    }
    out
}

/// Solids `S` with `(E, S)` in the set and `⟨P, E⟩ = S`, each with its first flag.
pub fn point_trace(set: &FlagSet<'_>, point: &Subspace) -> BTreeMap<u32, u32> {
    let u = set.universe();
    let p = u.space().points_of(point)[0];
    let has = |w: &[u64]| w[p / 64] >> (p % 64) & 1 == 1;
    let mut out = BTreeMap::new();
    for f in set.iter() {
        let (e, s) = u.ids(f);
        if has(u.solid_bits(s)) && !has(u.plane_bits(e)) {
            out.entry(s).or_insert(f);
        }
    }
    out
}

fn trace_checks(
    r: &mut VerificationReport,
    trace: &BTreeMap<u32, u32>,
    bits: impl Fn(u32) -> Vec<u64> + Sync,
    min_common: u32,
    what: &str,
    bound: &FormulaValue,
) {
    let ids: Vec<u32> = trace.keys().copied().collect();
    r.push(CheckResult::timed(&format!("{what}_pairwise_intersect"), || {
        let w = (0..ids.len()).into_par_iter().find_map_first(|i| {
            let a = bits(ids[i]);
            ids[i + 1..].iter().find(|&&b| common_points(&a, &bits(b)) < min_common).map(|&b| (ids[i], b))
        });
        let w = w.map(|(a, b)| Witness::Pair(trace[&a], trace[&b]));
        (w.is_none(), w, detail([("size", json!(ids.len()))]))
    }));
    let size = ids.len() as u64;
    r.push(CheckResult {
        name: format!("{what}_size_within_bound"),
        pass: BigUint::from(size) <= bound.0,
        witness: None,
        ms: 0,
        detail: detail([("size", json!(size)), ("bound", json!(bound))]),
    });
}

/// The hyperplane trace of an independent set is an intersecting family of
/// planes of `H`, so it has at most `s(1,4)` members.
pub fn check_hyperplane_trace_ekr(set: &FlagSet<'_>, hyperplane: &Subspace) -> VerificationReport {
    let u = set.universe();
    let bound = s_subspaces(1, 4, u.q());
    let mut r = VerificationReport::for_set("hyperplane trace", set);
    let trace = hyperplane_trace(set, hyperplane);
    trace_checks(&mut r, &trace, |p| u.plane_bits(p).to_vec(), 1, "trace_planes", &bound);
    r
}

/// Dual form: solids `⟨P,E⟩` pairwise share a line and number at most `s(1,4)`.
pub fn check_point_trace_ekr(set: &FlagSet<'_>, point: &Subspace) -> VerificationReport {
    let u = set.universe();
    let bound = s_subspaces(1, 4, u.q());
    let mut r = VerificationReport::for_set("point trace", set);
    let trace = point_trace(set, point);
    trace_checks(&mut r, &trace, |s| u.solid_bits(s).to_vec(), u.q() + 1, "trace_solids", &bound);
    r
}

/// Members `(E', S')` with `E' ∩ E = ∅` and `S' ∩ E ≠ ∅` for the flag `f = (E, S)`
/// number at most `s(2)·s(1,4)·ξ` when no solid carries more than `ξ` flags.
pub fn check_f3289_bound(set: &FlagSet<'_>, f: u32, xi: u64) -> VerificationReport {
    let u = set.universe();
    let q = u.q();
    let mut r = VerificationReport::for_set("disjoint-plane count", set);
    r.push(CheckResult::timed("precondition", || {
        if !set.contains(f) {
            return (false, Some(Witness::Flag(f)), detail([("reason", json!("flag is not a member"))]));
        }
        let mut per_solid: BTreeMap<u32, (u64, u32)> = BTreeMap::new();
        for g in set.iter() {
            let e = per_solid.entry(u.ids(g).1).or_insert((0, g));
            e.0 += 1;
        }
        let worst = per_solid.values().max_by_key(|(c, g)| (*c, std::cmp::Reverse(*g))).copied();
        let max = worst.map_or(0, |w| w.0);
        let w = worst.filter(|w| w.0 > xi).map(|w| Witness::Flag(w.1));
        (w.is_none(), w, detail([("max_flags_per_solid", json!(max)), ("xi", json!(xi))]))
    }));
    if !r.pass() {
        return r;
    }
    r.push(CheckResult::timed("bound", || {
        let (pe, _) = u.ids(f);
        let e = u.plane_bits(pe);
        let count = set
            .ordinals()
            .par_iter()
            .filter(|&&g| {
                let (p2, s2) = u.ids(g);
                bitset::disjoint(u.plane_bits(p2), e) && !bitset::disjoint(u.solid_bits(s2), e)
            })
            .count() as u64;
        let bound = s_points(2, q).0 * s_subspaces(1, 4, q).0 * BigUint::from(xi);
        (
            BigUint::from(count) <= bound,
            None,
            detail([("count", json!(count)), ("bound", json!(FormulaValue(bound)))]),
        )
    }));
    r
}

/// Every class independent and the classes cover the universe.
pub fn check_coloring(classes: &[FlagSet<'_>], universe: &FlagUniverse) -> VerificationReport {
    let mut r = VerificationReport::new("coloring", universe.q(), classes.len() as u64);
    r.push(CheckResult::timed("classes_independent", || {
        let bad = classes.iter().enumerate().find_map(|(i, c)| {
            let packed = c.packed();
            first_adjacent_pair(&packed).map(|(a, b)| (i, packed.ordinals[a], packed.ordinals[b]))
        });
        let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        match bad {
            None => (true, None, detail([("class_sizes", json!(sizes))])),
            Some((i, a, b)) => (false, Some(Witness::Pair(a, b)), detail([("class", json!(i)), ("class_sizes", json!(sizes))])),
        }
    }));
    r.push(cover_check(classes.iter().map(|c| c.bits().clone()), universe));
    r
}

/// Union of the classes is the whole universe; witness is the smallest uncovered flag.
pub fn cover_check(classes: impl IntoIterator<Item = BitSet>, universe: &FlagUniverse) -> CheckResult {
    CheckResult::timed("cover", || {
        let mut all = BitSet::new(universe.len());
        for c in classes {
            all.union_with(&c);
        }
        let missing = all.complement();
        let w = missing.iter().next().map(|f| Witness::Flag(f as u32));
        (w.is_none(), w, detail([("uncovered", json!(missing.count()))]))
    })
}

/// `⌈|flags| / α⌉` next to the closed-form lower bound.
///
/// With a universe the vertex count is taken from it; otherwise from the
/// flag-count formula.
pub fn chromatic_lower_report(q: u32, universe: Option<&FlagUniverse>) -> VerificationReport {
    let n = match universe {
        Some(u) => BigUint::from(u.len()),
        None => flag_count(q).0,
    };
    let alpha = independence_number(q).0;
    let ceil = (&n + &alpha - 1u32) / &alpha;
    let poly = chromatic_lower(q);
    let mut r = VerificationReport::new("chromatic lower bound", q, n.clone().try_into().unwrap_or(u64::MAX));
    r.push(CheckResult {
        name: "ceiling_equals_polynomial".into(),
        pass: ceil == poly.0,
        witness: None,
        ms: 0,
        detail: detail([
            ("vertices", json!(FormulaValue(n))),
            ("independence_number", json!(FormulaValue(alpha))),
            ("ceiling", json!(FormulaValue(ceil))),
            ("polynomial", json!(poly)),
            ("source", json!(if universe.is_some() { "universe" } else { "formula" })),
        ]),
    });
    r.expected = Some(flag_count(q));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use std::sync::OnceLock;

    fn u2() -> &'static FlagUniverse {
        static U: OnceLock<FlagUniverse> = OnceLock::new();
        U.get_or_init(|| FlagUniverse::build(2).unwrap())
    }

    fn anchors() -> CanonicalAnchors {
        canonical_anchors(u2().space())
    }

    #[test]
    fn hyperplane_star_is_independent_not_maximal() {
        let u = u2();
        let set = build_lambda(&LambdaSpec::hyperplane_empty(anchors().hyperplane), u).unwrap();
        let r = check_maximal(&set);
        assert!(r.check("independent").unwrap().pass);
        let m = r.check("maximal").unwrap();
        assert!(!m.pass);
        let Some(Witness::Flag(f)) = m.witness else { panic!() };
        let mut grown = set.clone();
        grown.insert(f);
        assert!(check_independent(&grown).pass());
    }

    #[test]
    fn adding_a_bad_flag_breaks_independence() {
        let u = u2();
        let sp = u.space();
        let a = anchors();
        let set = build_lambda(&LambdaSpec::hyperplane_empty(a.hyperplane.clone()), u).unwrap();
        // solid meeting H in a plane, plane meeting H in a line only
        let solid = sp.coordinate_subspace(&[0, 1, 2, 6]);
        let plane = sp.coordinate_subspace(&[0, 1, 6]);
        let f = u.ordinal(&crate::kneser::Flag::new(sp, plane, solid).unwrap()).unwrap();
        let mut bad = set.clone();
        bad.insert(f);
        let r = check_independent(&bad);
        assert!(!r.pass());
        let Some(Witness::Pair(x, y)) = r.checks[0].witness else { panic!() };
        assert!(x < y && u.adjacent(x, y) && (x == f || y == f));
    }

    #[test]
    fn point_hyperplane_is_maximal() {
        let u = u2();
        let a = anchors();
        let set = build_lambda(&LambdaSpec::point_hyperplane(a.point, a.hyperplane), u).unwrap();
        let r = check_maximal(&set).with_expected(independence_number(2));
        assert!(r.pass(), "{}", r.to_json());
    }

    #[test]
    fn saturation_of_hyperplane_family() {
        let u = u2();
        let sp = u.space();
        let a = anchors();
        let fam = build_ekr_plane_family(&PlaneFamilyKind::PointPencil(a.point.clone()), &a.hyperplane, sp).unwrap();
        let set = build_lambda(&LambdaSpec::hyperplane_family(a.hyperplane.clone(), fam), u).unwrap();
        let (r, prof) = check_saturation(&set, Some(&a.hyperplane));
        assert!(r.pass(), "{}", r.to_json());
        assert_eq!(prof.saturated_solids.len(), 651);
    }

    #[test]
    fn traces() {
        let u = u2();
        let a = anchors();
        let set = build_lambda(&LambdaSpec::point_hyperplane(a.point.clone(), a.hyperplane.clone()), u).unwrap();
        let h = u.space().coordinate_subspace(&[1, 2, 3, 4, 5, 6]);
        assert!(check_hyperplane_trace_ekr(&set, &h).pass());
        assert!(check_hyperplane_trace_ekr(&set, &a.hyperplane).pass());
        assert!(check_point_trace_ekr(&set, &a.point).pass());
        // the point trace of a set is the hyperplane trace of its dual
        let dual = set.dual();
        let hp = u.space().dualize(&a.point).unwrap();
        let lhs: Vec<u32> = point_trace(&set, &a.point).keys().copied().collect();
        let rhs: Vec<u32> = hyperplane_trace(&dual, &hp).keys().map(|&p| {
            u.solid_id(&u.space().dualize(&u.planes()[p as usize]).unwrap()).unwrap()
        }).collect();
        let mut rhs = rhs;
        rhs.sort_unstable();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn f3289() {
        let u = u2();
        let a = anchors();
        let set = build_lambda(&LambdaSpec::point_line(a.point, a.line), u).unwrap();
        let f = set.iter().nth(500).unwrap();
        let r = check_f3289_bound(&set, f, 15);
        assert!(r.pass(), "{}", r.to_json());
        let r = check_f3289_bound(&set, f, 3);
        assert!(!r.pass());
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.checks[0].name, "precondition");
        let empty = FlagSet::empty(u);
        let r = check_f3289_bound(&empty, 0, 3);
        assert!(!r.pass());
        assert_eq!(s_points(2, 2).0 * s_subspaces(1, 4, 2).0 * 3u32, BigUint::from(3255u32));
    }

    #[test]
    fn colorings() {
        let u = u2();
        let scheme = ColoringScheme::canonical(u.space()).unwrap();
        let classes = build_coloring(&scheme, u).unwrap();
        assert_eq!(classes.len(), 29);
        let r = check_coloring(&classes, u);
        assert!(r.pass(), "{}", r.to_json());
        let r = check_coloring(&classes[1..], u);
        assert!(!r.check("cover").unwrap().pass);
        assert!(r.check("cover").unwrap().witness.is_some());
        let trivial = trivial_coloring(&anchors().four_space, u).unwrap();
        assert_eq!(trivial.len(), 31);
        assert!(check_coloring(&trivial, u).pass());
    }

    #[test]
    fn chromatic_lower() {
        let r = chromatic_lower_report(2, Some(u2()));
        assert!(r.pass());
        assert_eq!(r.checks[0].detail["ceiling"], json!(17));
        let r = chromatic_lower_report(8, None);
        assert!(r.pass());
        assert_eq!(r.checks[0].detail["polynomial"], json!(4049));
    }

    #[test]
    fn report_json_shape() {
        let u = u2();
        let set = FlagSet::from_ordinals(u, [1, 2, 3]).unwrap();
        let mut r = check_independent(&set);
        r.zero_timings();
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in ["subject", "q", "checks", "cardinality", "expected"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        let c = &v["checks"][0];
        for key in ["name", "pass", "witness", "ms"] {
            assert!(c.get(key).is_some(), "{key}");
        }
    }
}
