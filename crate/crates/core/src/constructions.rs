//! Extremal independent sets of Γ and colorings built from them.
//!
//! Every family here is a union of two "stars": flags whose solid lies in a
//! hyperplane (or whose plane passes through a point), plus flags whose other
//! member belongs to an intersecting family. [`build_lambda`] turns a
//! [`LambdaSpec`] into a [`FlagSet`] by predicate filtering over the
//! materialized universe; [`count_lambda`] counts the hyperplane- and
//! point-family kinds by constrained enumeration without a universe.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bitset::{self, BitSet};
use crate::kneser::{FlagSet, FlagUniverse, KneserError};
use crate::projective::{Constraints, ProjectiveError, ProjectiveSpace, Subspace};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Projective(#[from] ProjectiveError),
    #[error(transparent)]
    Kneser(#[from] KneserError),
    #[error("missing anchor {0}")]
    MissingAnchor(&'static str),
    #[error("anchor {name} must have dimension {expected}, got {found}")]
    AnchorDimension { name: &'static str, expected: i32, found: i32 },
    #[error("incidence requirement violated: {0}")]
    Incidence(String),
    #[error("family requirement violated: {0}")]
    Family(String),
    #[error("unknown family kind {0:?}; expected one of H_E, P_S, P_H, H_P, P_l, H_U, P_empty, H_empty")]
    UnknownKind(String),
    #[error("ambient dimension {0} too small (need at least {1})")]
    AmbientTooSmall(usize, usize),
}

pub type Result<T> = std::result::Result<T, ConstructionError>;

/// Shapes of the Λ families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LambdaKind {
    /// `S ⊆ H` or `E ∈ 𝓔`.
    HyperplaneFamily,
    /// `P ∈ E` or `S ∈ 𝓢`.
    PointFamily,
    /// `P ∈ E` or `P ∈ S ⊆ H`.
    PointHyperplane,
    /// `S ⊆ H` or `P ∈ E ⊆ H`.
    HyperplanePoint,
    /// `P ∈ E` or `l ⊆ S`.
    PointLine,
    /// `S ⊆ H` or `E ⊆ U`.
    HyperplaneFourSpace,
    /// `P ∈ E`.
    PointEmpty,
    /// `S ⊆ H`.
    HyperplaneEmpty,
}

impl LambdaKind {
    pub const ALL: [LambdaKind; 8] = [
        Self::HyperplaneFamily,
        Self::PointFamily,
        Self::PointHyperplane,
        Self::HyperplanePoint,
        Self::PointLine,
        Self::HyperplaneFourSpace,
        Self::PointEmpty,
        Self::HyperplaneEmpty,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::HyperplaneFamily => "H_E",
            Self::PointFamily => "P_S",
            Self::PointHyperplane => "P_H",
            Self::HyperplanePoint => "H_P",
            Self::PointLine => "P_l",
            Self::HyperplaneFourSpace => "H_U",
            Self::PointEmpty => "P_empty",
            Self::HyperplaneEmpty => "H_empty",
        }
    }

    /// Kind of the image under flag dualization.
    pub fn dual(self) -> Self {
        match self {
            Self::HyperplaneFamily => Self::PointFamily,
            Self::PointFamily => Self::HyperplaneFamily,
            Self::PointHyperplane => Self::HyperplanePoint,
            Self::HyperplanePoint => Self::PointHyperplane,
            Self::PointLine => Self::HyperplaneFourSpace,
            Self::HyperplaneFourSpace => Self::PointLine,
            Self::PointEmpty => Self::HyperplaneEmpty,
            Self::HyperplaneEmpty => Self::PointEmpty,
        }
    }
}

impl fmt::Display for LambdaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LambdaKind {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| ConstructionError::UnknownKind(s.to_string()))
    }
}

/// A Λ family: its kind, the anchors it needs, and the explicit family for
/// the two parametric kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaSpec {
    pub kind: LambdaKind,
    pub hyperplane: Option<Subspace>,
    pub point: Option<Subspace>,
    pub line: Option<Subspace>,
    pub four_space: Option<Subspace>,
    pub plane_family: Vec<Subspace>,
    pub solid_family: Vec<Subspace>,
}

impl LambdaSpec {
    fn bare(kind: LambdaKind) -> Self {
        Self {
            kind,
            hyperplane: None,
            point: None,
            line: None,
            four_space: None,
            plane_family: Vec::new(),
            solid_family: Vec::new(),
        }
    }

    pub fn hyperplane_family(h: Subspace, planes: Vec<Subspace>) -> Self {
        Self { hyperplane: Some(h), plane_family: planes, ..Self::bare(LambdaKind::HyperplaneFamily) }
    }

    pub fn point_family(p: Subspace, solids: Vec<Subspace>) -> Self {
        Self { point: Some(p), solid_family: solids, ..Self::bare(LambdaKind::PointFamily) }
    }

    pub fn point_hyperplane(p: Subspace, h: Subspace) -> Self {
        Self { point: Some(p), hyperplane: Some(h), ..Self::bare(LambdaKind::PointHyperplane) }
    }

    pub fn hyperplane_point(h: Subspace, p: Subspace) -> Self {
        Self { point: Some(p), hyperplane: Some(h), ..Self::bare(LambdaKind::HyperplanePoint) }
    }

    pub fn point_line(p: Subspace, l: Subspace) -> Self {
        Self { point: Some(p), line: Some(l), ..Self::bare(LambdaKind::PointLine) }
    }

    pub fn hyperplane_four_space(h: Subspace, u: Subspace) -> Self {
        Self { hyperplane: Some(h), four_space: Some(u), ..Self::bare(LambdaKind::HyperplaneFourSpace) }
    }

    pub fn point_empty(p: Subspace) -> Self {
        Self { point: Some(p), ..Self::bare(LambdaKind::PointEmpty) }
    }

    pub fn hyperplane_empty(h: Subspace) -> Self {
        Self { hyperplane: Some(h), ..Self::bare(LambdaKind::HyperplaneEmpty) }
    }

    /// Named anchors this family uses, in a fixed order.
    pub fn anchors(&self) -> Vec<(&'static str, &Subspace)> {
        [("H", &self.hyperplane), ("P", &self.point), ("l", &self.line), ("U", &self.four_space)]
            .into_iter()
            .filter_map(|(n, s)| s.as_ref().map(|s| (n, s)))
            .collect()
    }

    fn needs(&self) -> (bool, bool, bool, bool) {
        use LambdaKind::*;
        // (hyperplane, point, line, four_space)
        match self.kind {
            HyperplaneFamily | HyperplaneEmpty => (true, false, false, false),
            PointFamily | PointEmpty => (false, true, false, false),
            PointHyperplane | HyperplanePoint => (true, true, false, false),
            PointLine => (false, true, true, false),
            HyperplaneFourSpace => (true, false, false, true),
        }
    }

    /// Checks anchor dimensions, incidences and the family conditions.
    pub fn validate(&self, space: &ProjectiveSpace) -> Result<()> {
        let n = space.n() as i32;
        let (nh, np, nl, nu) = self.needs();
        let get = |want: bool, slot: &Option<Subspace>, name: &'static str, dim: i32| -> Result<()> {
            if !want {
                return Ok(());
            }
            let s = slot.as_ref().ok_or(ConstructionError::MissingAnchor(name))?;
            if s.dim() != dim {
                return Err(ConstructionError::AnchorDimension { name, expected: dim, found: s.dim() });
            }
            space.contains(&space.whole(), s)?;
            Ok(())
        };
        get(nh, &self.hyperplane, "H", n - 1)?;
        get(np, &self.point, "P", 0)?;
        get(nl, &self.line, "l", 1)?;
        get(nu, &self.four_space, "U", 4)?;
        use LambdaKind::*;
        match self.kind {
            PointHyperplane | HyperplanePoint => {
                if !space.contains(self.hyperplane.as_ref().unwrap(), self.point.as_ref().unwrap())? {
                    return Err(ConstructionError::Incidence("P must lie in H".into()));
                }
            }
            PointLine => {
                if !space.contains(self.line.as_ref().unwrap(), self.point.as_ref().unwrap())? {
                    return Err(ConstructionError::Incidence("P must lie on l".into()));
                }
            }
            HyperplaneFourSpace => {
                if !space.contains(self.hyperplane.as_ref().unwrap(), self.four_space.as_ref().unwrap())? {
                    return Err(ConstructionError::Incidence("U must lie in H".into()));
                }
            }
            HyperplaneFamily => {
                let h = self.hyperplane.as_ref().unwrap();
                let bits = family_bits(space, &self.plane_family, 2, "plane")?;
                for (e, _) in self.plane_family.iter().zip(&bits) {
                    if !space.contains(h, e)? {
                        return Err(ConstructionError::Family(format!("plane {e} is not in H")));
                    }
                }
                pairwise(&bits, 1, "planes must pairwise intersect")?;
            }
            PointFamily => {
                let p = self.point.as_ref().unwrap();
                let bits = family_bits(space, &self.solid_family, 3, "solid")?;
                for s in &self.solid_family {
                    if !space.contains(s, p)? {
                        return Err(ConstructionError::Family(format!("solid {s} does not contain P")));
                    }
                }
                pairwise(&bits, space.q() as usize + 1, "solids must pairwise share a line")?;
            }
            PointEmpty | HyperplaneEmpty => {}
        }
        Ok(())
    }
}

fn family_bits(space: &ProjectiveSpace, fam: &[Subspace], dim: i32, what: &str) -> Result<Vec<BitSet>> {
    let mut seen = HashSet::new();
    fam.iter()
        .map(|s| {
            if s.dim() != dim {
                return Err(ConstructionError::Family(format!("{what} {s} has dimension {}", s.dim())));
            }
            if !seen.insert(s) {
                return Err(ConstructionError::Family(format!("{what} {s} listed twice")));
            }
            space.contains(&space.whole(), s)?;
            Ok(space.point_bitset(s))
        })
        .collect()
}

fn pairwise(bits: &[BitSet], min_common: usize, msg: &str) -> Result<()> {
    for (i, a) in bits.iter().enumerate() {
        for b in &bits[i + 1..] {
            if a.intersection_count(b) < min_common {
                return Err(ConstructionError::Family(msg.to_string()));
            }
        }
    }
    Ok(())
}

fn id_set(ids: impl IntoIterator<Item = Option<u32>>, len: usize) -> BitSet {
    let mut b = BitSet::new(len);
    for i in ids.into_iter().flatten() {
        b.insert(i as usize);
    }
    b
}

/// The flags of `universe` satisfying the family's defining predicate.
pub fn build_lambda<'u>(spec: &LambdaSpec, universe: &'u FlagUniverse) -> Result<FlagSet<'u>> {
    let space = universe.space();
    spec.validate(space)?;
    let bits = |s: &Option<Subspace>| s.as_ref().map(|s| space.point_bitset(s));
    let h = bits(&spec.hyperplane);
    let l = bits(&spec.line);
    let u = bits(&spec.four_space);
    let p = spec.point.as_ref().map(|p| space.points_of(p)[0]);
    let planes = id_set(spec.plane_family.iter().map(|e| universe.plane_id(e)), universe.planes().len());
    let solids = id_set(spec.solid_family.iter().map(|s| universe.solid_id(s)), universe.solids().len());

    let u_ = universe;
    let solid_in = |set: &Option<BitSet>, sid: u32| bitset::subset(u_.solid_bits(sid), set.as_ref().unwrap().words());
    let plane_in = |set: &Option<BitSet>, pid: u32| bitset::subset(u_.plane_bits(pid), set.as_ref().unwrap().words());
    let has_point = |bits: &[u64]| {
        let p = p.unwrap();
        bits[p / 64] >> (p % 64) & 1 == 1
    };

    use LambdaKind::*;
    let set = match spec.kind {
        HyperplaneFamily => FlagSet::from_predicate(u_, |e, s| solid_in(&h, s) || planes.contains(e as usize)),
        PointFamily => FlagSet::from_predicate(u_, |e, s| has_point(u_.plane_bits(e)) || solids.contains(s as usize)),
        PointHyperplane => FlagSet::from_predicate(u_, |e, s| {
            has_point(u_.plane_bits(e)) || (has_point(u_.solid_bits(s)) && solid_in(&h, s))
        }),
        HyperplanePoint => FlagSet::from_predicate(u_, |e, s| {
            solid_in(&h, s) || (has_point(u_.plane_bits(e)) && plane_in(&h, e))
        }),
        PointLine => FlagSet::from_predicate(u_, |e, s| {
            has_point(u_.plane_bits(e)) || bitset::subset(l.as_ref().unwrap().words(), u_.solid_bits(s))
        }),
        HyperplaneFourSpace => FlagSet::from_predicate(u_, |e, s| solid_in(&h, s) || plane_in(&u, e)),
        PointEmpty => FlagSet::from_predicate(u_, |e, _| has_point(u_.plane_bits(e))),
        HyperplaneEmpty => FlagSet::from_predicate(u_, |_, s| solid_in(&h, s)),
    };
    Ok(set)
}

/// `|Λ|` by constrained enumeration, without materializing the universe.
///
/// Supported for the hyperplane- and point-family kinds (including the empty
/// families), which is what the cardinality formula is stated for.
pub fn count_lambda(spec: &LambdaSpec, space: &ProjectiveSpace) -> Result<u64> {
    spec.validate(space)?;
    let none = Constraints::none;
    // planes per solid and solids per plane are constant; count them on coordinate anchors
    let some_solid = space.coordinate_subspace(&[0, 1, 2, 3]);
    let some_plane = space.coordinate_subspace(&[0, 1, 2]);
    let planes_per_solid = space.count(2, none().within(&some_solid))?;
    let solids_per_plane = space.count(3, none().contains(&some_plane))?;
    use LambdaKind::*;
    match spec.kind {
        HyperplaneFamily | HyperplaneEmpty => {
            let h = spec.hyperplane.as_ref().unwrap();
            let mut total = space.count(3, none().within(h))? * planes_per_solid;
            for e in &spec.plane_family {
                total += space.count(3, none().contains(e))? - space.count(3, none().contains(e).within(h))?;
            }
            Ok(total)
        }
        PointFamily | PointEmpty => {
            let p = spec.point.as_ref().unwrap();
            let mut total = space.count(2, none().contains(p))? * solids_per_plane;
            for s in &spec.solid_family {
                total += space.count(2, none().within(s))? - space.count(2, none().within(s).contains(p))?;
            }
            Ok(total)
        }
        k => Err(ConstructionError::Family(format!("constrained counting is not offered for kind {k}"))),
    }
}

/// Maximal intersecting plane families of a hyperplane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaneFamilyKind {
    /// All planes of H through a point of H.
    PointPencil(Subspace),
    /// All planes of a 4-space of H.
    SubspaceFull(Subspace),
}

pub fn build_ekr_plane_family(kind: &PlaneFamilyKind, hyperplane: &Subspace, space: &ProjectiveSpace) -> Result<Vec<Subspace>> {
    let (anchor, dim, name) = match kind {
        PlaneFamilyKind::PointPencil(p) => (p, 0, "pencil point"),
        PlaneFamilyKind::SubspaceFull(u) => (u, 4, "4-space"),
    };
    if anchor.dim() != dim {
        return Err(ConstructionError::AnchorDimension { name, expected: dim, found: anchor.dim() });
    }
    if !space.contains(hyperplane, anchor)? {
        return Err(ConstructionError::Incidence(format!("the {name} must lie in H")));
    }
    let c = match kind {
        PlaneFamilyKind::PointPencil(p) => Constraints::none().contains(p).within(hyperplane),
        PlaneFamilyKind::SubspaceFull(u) => Constraints::none().within(u),
    };
    Ok(space.enumerate(2, c)?)
}

/// Solid families on a point, pairwise sharing at least a line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolidFamilyKind {
    /// Solids on P inside a hyperplane through P.
    InHyperplane(Subspace),
    /// Solids containing a line through P.
    OnLine(Subspace),
}

pub fn build_ekr_solid_family(point: &Subspace, kind: &SolidFamilyKind, space: &ProjectiveSpace) -> Result<Vec<Subspace>> {
    let c = match kind {
        SolidFamilyKind::InHyperplane(h) => {
            if !space.contains(h, point)? {
                return Err(ConstructionError::Incidence("P must lie in H".into()));
            }
            Constraints::none().contains(point).within(h)
        }
        SolidFamilyKind::OnLine(l) => {
            if !space.contains(l, point)? {
                return Err(ConstructionError::Incidence("P must lie on l".into()));
            }
            Constraints::none().contains(l)
        }
    };
    Ok(space.enumerate(3, c)?)
}

/// Plane families whose members pairwise meet in a line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineMeetingKind {
    /// All planes through a fixed line.
    LineStar(Subspace),
    /// All planes of a fixed solid.
    SolidFull(Subspace),
}

pub fn build_line_meeting_plane_family(kind: &LineMeetingKind, space: &ProjectiveSpace) -> Result<Vec<Subspace>> {
    if space.n() < 5 {
        return Err(ConstructionError::AmbientTooSmall(space.n(), 5));
    }
    match kind {
        LineMeetingKind::LineStar(l) => {
            if l.dim() != 1 {
                return Err(ConstructionError::AnchorDimension { name: "l", expected: 1, found: l.dim() });
            }
            Ok(space.enumerate(2, Constraints::none().contains(l))?)
        }
        LineMeetingKind::SolidFull(s) => {
            if s.dim() != 3 {
                return Err(ConstructionError::AnchorDimension { name: "S", expected: 3, found: s.dim() });
            }
            Ok(space.enumerate(2, Constraints::none().within(s))?)
        }
    }
}

/// Coordinate anchors used whenever a construction is requested without explicit input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalAnchors {
    /// `⟨e0..e5⟩`: last coordinate zero.
    pub hyperplane: Subspace,
    /// `e0`.
    pub point: Subspace,
    /// `⟨e0,e1⟩`.
    pub line: Subspace,
    /// `⟨e0,e1,e2⟩`.
    pub plane: Subspace,
    /// `⟨e0..e4⟩`.
    pub four_space: Subspace,
    /// `e3`, a point of the 4-space off the plane.
    pub outside: Subspace,
}

pub fn canonical_anchors(space: &ProjectiveSpace) -> CanonicalAnchors {
    let c = |v: &[usize]| space.coordinate_subspace(v);
    CanonicalAnchors {
        hyperplane: c(&[0, 1, 2, 3, 4, 5]),
        point: c(&[0]),
        line: c(&[0, 1]),
        plane: c(&[0, 1, 2]),
        four_space: c(&[0, 1, 2, 3, 4]),
        outside: c(&[3]),
    }
}

/// The point-line coloring: classes `Λ(X, ⟨X, Q_i⟩)` for `X ∈ M_i`.
#[derive(Debug, Clone)]
pub struct ColoringScheme {
    pub point: Subspace,
    pub line: Subspace,
    pub plane: Subspace,
    pub four_space: Subspace,
    pub outside: Subspace,
    /// Point indices of each `M_i`, ascending.
    pub m_sets: Vec<Vec<usize>>,
    /// The points of `⟨P,Q⟩` other than `P`, paired with `m_sets` by position.
    pub q_points: Vec<Subspace>,
    /// Deduplicated `(X, ⟨X,Q_i⟩)` pairs, in order of first appearance.
    pub classes: Vec<(Subspace, Subspace)>,
}

impl ColoringScheme {
    /// `P ∈ l ⊆ E ⊆ V` and `Q ∈ V ∖ E` are required.
    pub fn new(
        space: &ProjectiveSpace,
        point: &Subspace,
        line: &Subspace,
        plane: &Subspace,
        four_space: &Subspace,
        outside: &Subspace,
    ) -> Result<Self> {
        for (s, name, d) in [(point, "P", 0), (line, "l", 1), (plane, "E", 2), (four_space, "V", 4), (outside, "Q", 0)] {
            if s.dim() != d {
                return Err(ConstructionError::AnchorDimension { name, expected: d, found: s.dim() });
            }
        }
        let chain = [(line, point, "P ∈ l"), (plane, line, "l ⊆ E"), (four_space, plane, "E ⊆ V"), (four_space, outside, "Q ∈ V")];
        for (outer, inner, what) in chain {
            if !space.contains(outer, inner)? {
                return Err(ConstructionError::Incidence(what.to_string()));
            }
        }
        if space.contains(plane, outside)? {
            return Err(ConstructionError::Incidence("Q ∉ E".to_string()));
        }
        let avoid_q = |v: Vec<Subspace>| -> Result<Vec<Subspace>> {
            let mut out = Vec::new();
            for s in v {
                if !space.contains(&s, outside)? {
                    out.push(s);
                }
            }
            Ok(out)
        };
        let lq = space.span(line, outside)?;
        let eq = space.span(plane, outside)?;
        let lines = avoid_q(space.enumerate(1, Constraints::none().contains(point).within(&lq))?)?;
        let planes = avoid_q(space.enumerate(2, Constraints::none().contains(line).within(&eq))?)?;
        let solids = avoid_q(space.enumerate(3, Constraints::none().contains(plane).within(four_space))?)?;
        let pq = space.span(point, outside)?;
        let p_idx = space.points_of(point)[0];
        let q_points: Vec<Subspace> = space
            .points_of(&pq)
            .into_iter()
            .filter(|&i| i != p_idx)
            .map(|i| space.point_at(i))
            .collect();
        let l_bits = space.point_bitset(line);
        let e_bits = space.point_bitset(plane);
        let mut m_sets = Vec::new();
        for ((li, ei), si) in lines.iter().zip(&planes).zip(&solids) {
            let mut m = space.point_bitset(li);
            let mut e_part = space.point_bitset(ei);
            e_part.difference_with(&l_bits);
            let mut s_part = space.point_bitset(si);
            s_part.difference_with(&e_bits);
            m.union_with(&e_part);
            m.union_with(&s_part);
            m_sets.push(m.iter().collect::<Vec<_>>());
        }
        let mut classes = Vec::new();
        let mut seen = HashSet::new();
        for (m, qi) in m_sets.iter().zip(&q_points) {
            for &x in m {
                let xp = space.point_at(x);
                let join = space.span(&xp, qi)?;
                if seen.insert((xp.clone(), join.clone())) {
                    classes.push((xp, join));
                }
            }
        }
        Ok(Self {
            point: point.clone(),
            line: line.clone(),
            plane: plane.clone(),
            four_space: four_space.clone(),
            outside: outside.clone(),
            m_sets,
            q_points,
            classes,
        })
    }

    pub fn canonical(space: &ProjectiveSpace) -> Result<Self> {
        let a = canonical_anchors(space);
        Self::new(space, &a.point, &a.line, &a.plane, &a.four_space, &a.outside)
    }

    /// Specs of the color classes, one per entry of `classes`.
    pub fn class_specs(&self) -> Vec<LambdaSpec> {
        self.classes.iter().map(|(x, l)| LambdaSpec::point_line(x.clone(), l.clone())).collect()
    }
}

/// The color classes of the scheme as flag sets.
pub fn build_coloring<'u>(scheme: &ColoringScheme, universe: &'u FlagUniverse) -> Result<Vec<FlagSet<'u>>> {
    scheme.class_specs().iter().map(|s| build_lambda(s, universe)).collect()
}

/// `Λ(P, ∅)` for every point `P` of a 4-space.
pub fn trivial_coloring<'u>(four_space: &Subspace, universe: &'u FlagUniverse) -> Result<Vec<FlagSet<'u>>> {
    let space = universe.space();
    if four_space.dim() != 4 {
        return Err(ConstructionError::AnchorDimension { name: "V", expected: 4, found: four_space.dim() });
    }
    space
        .points_of(four_space)
        .into_iter()
        .map(|i| build_lambda(&LambdaSpec::point_empty(space.point_at(i)), universe))
        .collect()
}

/// Errors reading the flag set text format; `line` is 1-based.
#[derive(Debug, Error)]
#[error("line {line}: {message}")]
pub struct FlagSetParseError {
    pub line: usize,
    pub message: String,
}

/// Text form of a flag set:
///
/// ```text
/// q 2
/// kind P_H
/// anchor P 0;1,0,0,0,0,0,0
/// anchor H 5;...
/// size 11005
/// 17
/// 18
/// ...
/// ```
///
/// Ordinals are strictly increasing. Lines starting with `#` are comments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagSetFile {
    pub q: u32,
    pub kind: String,
    pub anchors: Vec<(String, Subspace)>,
    pub ordinals: Vec<u32>,
}

impl FlagSetFile {
    pub fn from_set(set: &FlagSet<'_>, kind: &str, anchors: &[(&str, &Subspace)]) -> Self {
        Self {
            q: set.universe().q(),
            kind: kind.to_string(),
            anchors: anchors.iter().map(|(n, s)| (n.to_string(), (*s).clone())).collect(),
            ordinals: set.ordinals(),
        }
    }

    pub fn for_spec(set: &FlagSet<'_>, spec: &LambdaSpec) -> Self {
        Self::from_set(set, spec.kind.name(), &spec.anchors())
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut s = String::with_capacity(16 + self.ordinals.len() * 7);
        writeln!(s, "q {}", self.q).unwrap();
        writeln!(s, "kind {}", self.kind).unwrap();
        for (n, a) in &self.anchors {
            writeln!(s, "anchor {n} {a}").unwrap();
        }
        writeln!(s, "size {}", self.ordinals.len()).unwrap();
        for o in &self.ordinals {
            writeln!(s, "{o}").unwrap();
        }
        s
    }

    pub fn parse(text: &str) -> std::result::Result<Self, FlagSetParseError> {
        let err = |line: usize, message: String| FlagSetParseError { line, message };
        let mut q = None;
        let mut space = None;
        let mut kind = None;
        let mut anchors = Vec::new();
        let mut size = None;
        let mut ordinals: Vec<u32> = Vec::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let ln = i + 1;
            last_line = ln;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if size.is_some() {
                let o: u32 = line.parse().map_err(|_| err(ln, format!("expected a flag ordinal, found {line:?}")))?;
                if ordinals.last().is_some_and(|&p| p >= o) {
                    return Err(err(ln, "ordinals must be strictly increasing".into()));
                }
                ordinals.push(o);
                continue;
            }
            let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
            let rest = rest.trim();
            match key {
                "q" if q.is_none() => {
                    let v: u32 = rest.parse().map_err(|_| err(ln, format!("bad field order {rest:?}")))?;
                    space = Some(ProjectiveSpace::new(6, v).map_err(|e| err(ln, e.to_string()))?);
                    q = Some(v);
                }
                "kind" if q.is_some() && kind.is_none() => kind = Some(rest.to_string()),
                "anchor" if kind.is_some() => {
                    let (name, sub) = rest.split_once(' ').ok_or_else(|| err(ln, "expected `anchor NAME SUBSPACE`".into()))?;
                    let s = space.as_ref().unwrap().parse_subspace(sub).map_err(|e| err(ln, e.to_string()))?;
                    anchors.push((name.to_string(), s));
                }
                "size" if kind.is_some() => {
                    size = Some(rest.parse::<usize>().map_err(|_| err(ln, format!("bad size {rest:?}")))?);
                }
                _ => return Err(err(ln, format!("unexpected header line {line:?}"))),
            }
        }
        let size = size.ok_or_else(|| err(last_line, "missing header (q, kind, size)".into()))?;
        if size != ordinals.len() {
            return Err(err(last_line, format!("size says {size} but {} ordinals follow", ordinals.len())));
        }
        Ok(Self { q: q.unwrap(), kind: kind.unwrap(), anchors, ordinals })
    }

    pub fn to_flag_set<'u>(&self, universe: &'u FlagUniverse) -> std::result::Result<FlagSet<'u>, KneserError> {
        FlagSet::from_ordinals(universe, self.ordinals.iter().copied())
    }

    pub fn anchor(&self, name: &str) -> Option<&Subspace> {
        self.anchors.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{independence_number, lambda_hyperplane_size};
    use std::sync::OnceLock;

    fn u2() -> &'static FlagUniverse {
        static U: OnceLock<FlagUniverse> = OnceLock::new();
        U.get_or_init(|| FlagUniverse::build(2).unwrap())
    }

    fn pg6(q: u32) -> ProjectiveSpace {
        ProjectiveSpace::new(6, q).unwrap()
    }

    #[test]
    fn lambda_sizes_q2() {
        let u = u2();
        let a = canonical_anchors(u.space());
        let empty = build_lambda(&LambdaSpec::hyperplane_empty(a.hyperplane.clone()), u).unwrap();
        assert_eq!(empty.len(), 9765);
        let specs = [
            LambdaSpec::point_hyperplane(a.point.clone(), a.hyperplane.clone()),
            LambdaSpec::hyperplane_point(a.hyperplane.clone(), a.point.clone()),
            LambdaSpec::point_line(a.point.clone(), a.line.clone()),
            LambdaSpec::hyperplane_four_space(a.hyperplane.clone(), a.four_space.clone()),
        ];
        for s in &specs {
            assert_eq!(build_lambda(s, u).unwrap().len(), 11005, "{}", s.kind);
        }
        assert_eq!(independence_number(2), 11005);
    }

    #[test]
    fn family_kinds_reproduce_named_kinds() {
        let u = u2();
        let sp = u.space();
        let a = canonical_anchors(sp);
        let solids = build_ekr_solid_family(&a.point, &SolidFamilyKind::InHyperplane(a.hyperplane.clone()), sp).unwrap();
        let via_family = build_lambda(&LambdaSpec::point_family(a.point.clone(), solids), u).unwrap();
        let direct = build_lambda(&LambdaSpec::point_hyperplane(a.point.clone(), a.hyperplane.clone()), u).unwrap();
        assert_eq!(via_family, direct);

        let solids = build_ekr_solid_family(&a.point, &SolidFamilyKind::OnLine(a.line.clone()), sp).unwrap();
        let via_family = build_lambda(&LambdaSpec::point_family(a.point.clone(), solids), u).unwrap();
        let direct = build_lambda(&LambdaSpec::point_line(a.point.clone(), a.line.clone()), u).unwrap();
        assert_eq!(via_family, direct);

        let planes = build_ekr_plane_family(&PlaneFamilyKind::SubspaceFull(a.four_space.clone()), &a.hyperplane, sp).unwrap();
        let via_family = build_lambda(&LambdaSpec::hyperplane_family(a.hyperplane.clone(), planes), u).unwrap();
        let direct = build_lambda(&LambdaSpec::hyperplane_four_space(a.hyperplane.clone(), a.four_space.clone()), u).unwrap();
        assert_eq!(via_family, direct);
    }

    #[test]
    fn ekr_plane_families() {
        let sp = pg6(2);
        let a = canonical_anchors(&sp);
        let pencil = build_ekr_plane_family(&PlaneFamilyKind::PointPencil(a.point.clone()), &a.hyperplane, &sp).unwrap();
        let full = build_ekr_plane_family(&PlaneFamilyKind::SubspaceFull(a.four_space.clone()), &a.hyperplane, &sp).unwrap();
        assert_eq!(pencil.len(), 155);
        assert_eq!(full.len(), 155);
        for fam in [&pencil, &full] {
            let bits: Vec<_> = fam.iter().map(|e| sp.point_bitset(e)).collect();
            assert!(pairwise(&bits, 1, "").is_ok());
        }
        let off = sp.coordinate_subspace(&[6]);
        assert!(matches!(
            build_ekr_plane_family(&PlaneFamilyKind::PointPencil(off), &a.hyperplane, &sp),
            Err(ConstructionError::Incidence(_))
        ));
    }

    #[test]
    fn line_meeting_families() {
        let sp = ProjectiveSpace::new(5, 2).unwrap();
        let star = build_line_meeting_plane_family(&LineMeetingKind::LineStar(sp.coordinate_subspace(&[0, 1])), &sp).unwrap();
        let full = build_line_meeting_plane_family(&LineMeetingKind::SolidFull(sp.coordinate_subspace(&[0, 1, 2, 3])), &sp).unwrap();
        assert_eq!(star.len(), 15);
        assert_eq!(full.len(), 15);
        for fam in [&star, &full] {
            for (i, a) in fam.iter().enumerate() {
                for b in &fam[i + 1..] {
                    assert_eq!(sp.meet(a, b).unwrap().dim(), 1);
                }
            }
        }
        let small = ProjectiveSpace::new(4, 2).unwrap();
        assert!(build_line_meeting_plane_family(&LineMeetingKind::LineStar(small.coordinate_subspace(&[0, 1])), &small).is_err());
    }

    #[test]
    fn constrained_counts_match_formula() {
        for q in [2, 3] {
            let sp = pg6(q);
            let a = canonical_anchors(&sp);
            for kind in [PlaneFamilyKind::PointPencil(a.point.clone()), PlaneFamilyKind::SubspaceFull(a.four_space.clone())] {
                let fam = build_ekr_plane_family(&kind, &a.hyperplane, &sp).unwrap();
                let n = fam.len() as u64;
                let c = count_lambda(&LambdaSpec::hyperplane_family(a.hyperplane.clone(), fam), &sp).unwrap();
                assert_eq!(lambda_hyperplane_size(n, q), c);
                assert_eq!(independence_number(q), c);
            }
        }
    }

    #[test]
    fn validation_rejects_bad_incidence() {
        let sp = pg6(2);
        let a = canonical_anchors(&sp);
        let off = sp.coordinate_subspace(&[6]);
        let bad = LambdaSpec::point_hyperplane(off.clone(), a.hyperplane.clone());
        assert!(matches!(bad.validate(&sp), Err(ConstructionError::Incidence(_))));
        let bad = LambdaSpec::point_line(off, a.line.clone());
        assert!(matches!(bad.validate(&sp), Err(ConstructionError::Incidence(_))));
        let skew = vec![sp.coordinate_subspace(&[0, 1, 2]), sp.coordinate_subspace(&[3, 4, 5])];
        let bad = LambdaSpec::hyperplane_family(a.hyperplane.clone(), skew);
        assert!(matches!(bad.validate(&sp), Err(ConstructionError::Family(_))));
        let wrong_dim = LambdaSpec::hyperplane_empty(a.four_space.clone());
        assert!(matches!(wrong_dim.validate(&sp), Err(ConstructionError::AnchorDimension { .. })));
    }

    #[test]
    fn coloring_scheme_shape() {
        for q in [2, 3] {
            let sp = pg6(q);
            let s = ColoringScheme::canonical(&sp).unwrap();
            let q64 = q as usize;
            assert_eq!(s.m_sets.len(), q64);
            for m in &s.m_sets {
                assert_eq!(m.len(), q64.pow(3) + q64.pow(2) + q64 + 1);
            }
            let p = sp.points_of(&s.point)[0];
            for i in 0..q64 {
                for j in i + 1..q64 {
                    let common: Vec<_> = s.m_sets[i].iter().filter(|x| s.m_sets[j].contains(x)).collect();
                    assert_eq!(common, vec![&p]);
                }
            }
            assert_eq!(s.classes.len(), q64.pow(4) + q64.pow(3) + q64.pow(2) + 1);
        }
    }

    #[test]
    fn flag_set_text_round_trip() {
        let u = u2();
        let a = canonical_anchors(u.space());
        let spec = LambdaSpec::point_line(a.point.clone(), a.line.clone());
        let set = build_lambda(&spec, u).unwrap();
        let file = FlagSetFile::for_spec(&set, &spec);
        let text = file.to_text();
        let back = FlagSetFile::parse(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_flag_set(u).unwrap(), set);
        assert_eq!(back.anchor("l"), Some(&a.line));
    }

    #[test]
    fn flag_set_parse_errors_carry_line_numbers() {
        let e = FlagSetFile::parse("q 2\nkind X\nsize 2\n5\nfoo\n").unwrap_err();
        assert_eq!(e.line, 5);
        let e = FlagSetFile::parse("q 2\nkind X\nsize 2\n5\n3\n").unwrap_err();
        assert_eq!(e.line, 5);
        let e = FlagSetFile::parse("q 2\nkind X\nanchor P 1;1,0,0,0,0,0,0\nsize 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = FlagSetFile::parse("q 2\nkind X\nsize 3\n1\n").unwrap_err();
        assert!(e.message.contains("size"));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in LambdaKind::ALL {
            assert_eq!(k.name().parse::<LambdaKind>().unwrap(), k);
            assert_eq!(k.dual().dual(), k);
        }
        assert!("X_Y".parse::<LambdaKind>().is_err());
    }
}
