//! Sampled and exhaustive checks on the flag graph at q=2, plus opt-in q=3 runs.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use flagkneser::constructions::{
    build_coloring, build_ekr_plane_family, build_ekr_solid_family, build_lambda, canonical_anchors, ColoringScheme,
    LambdaKind, LambdaSpec, PlaneFamilyKind, SolidFamilyKind,
};
use flagkneser::counting::{flag_count, kneser_degree};
use flagkneser::kneser::{adjacency_scan, general_position, FlagSet, FlagUniverse};
use flagkneser::verify::{check_independent, cover_check};

fn u2() -> &'static FlagUniverse {
    static U: OnceLock<FlagUniverse> = OnceLock::new();
    U.get_or_init(|| FlagUniverse::build(2).unwrap())
}

fn families(u: &FlagUniverse) -> Vec<LambdaSpec> {
    let s = u.space();
    let a = canonical_anchors(s);
    let pencil = build_ekr_plane_family(&PlaneFamilyKind::PointPencil(a.point.clone()), &a.hyperplane, s).unwrap();
    let solids = build_ekr_solid_family(&a.point, &SolidFamilyKind::OnLine(a.line.clone()), s).unwrap();
    vec![
        LambdaSpec::point_hyperplane(a.point.clone(), a.hyperplane.clone()),
        LambdaSpec::hyperplane_point(a.hyperplane.clone(), a.point.clone()),
        LambdaSpec::point_line(a.point.clone(), a.line.clone()),
        LambdaSpec::hyperplane_four_space(a.hyperplane.clone(), a.four_space.clone()),
        LambdaSpec::hyperplane_family(a.hyperplane.clone(), pencil),
        LambdaSpec::point_family(a.point.clone(), solids),
        LambdaSpec::hyperplane_empty(a.hyperplane.clone()),
        LambdaSpec::point_empty(a.point.clone()),
    ]
}

#[test]
fn shortcut_agrees_with_definition_on_a_million_pairs() {
    let u = u2();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let n = u.len() as u32;
    let mut adjacent = 0u32;
    for _ in 0..1_000_000 {
        let (f, g) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let fast = u.adjacent(f, g);
        assert_eq!(fast, general_position(u.space(), &u.flag(f), &u.flag(g)).unwrap(), "flags {f}, {g}");
        adjacent += fast as u32;
    }
    // about 18.5% of pairs are adjacent at q=2
    assert!((150_000..220_000).contains(&adjacent), "{adjacent}");
}

#[test]
fn duality_preserves_adjacency_on_sampled_pairs() {
    let u = u2();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let n = u.len() as u32;
    for _ in 0..100_000 {
        let (f, g) = (rng.gen_range(0..n), rng.gen_range(0..n));
        assert_eq!(u.adjacent(u.dual_ordinal(f), u.dual_ordinal(g)), u.adjacent(f, g));
    }
}

#[test]
fn degree_is_constant_on_sampled_vertices() {
    let u = u2();
    let all = FlagSet::full(u);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let expected = kneser_degree(2);
    for _ in 0..100 {
        let f = rng.gen_range(0..u.len() as u32);
        assert_eq!(expected, adjacency_scan(&all, f).count);
    }
}

#[test]
fn hyperplane_star_has_no_neighbour_inside_the_hyperplane() {
    let u = u2();
    let a = canonical_anchors(u.space());
    let star = build_lambda(&LambdaSpec::hyperplane_empty(a.hyperplane.clone()), u).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let members = star.ordinals();
    for _ in 0..200 {
        let f = members[rng.gen_range(0..members.len())];
        let scan = adjacency_scan(&star, f);
        assert_eq!(scan.count, 0);
        assert_eq!(scan.first_witness, None);
    }
}

#[test]
fn dual_of_point_hyperplane_family_is_hyperplane_point_family() {
    let u = u2();
    let s = u.space();
    let a = canonical_anchors(s);
    let set = build_lambda(&LambdaSpec::point_hyperplane(a.point.clone(), a.hyperplane.clone()), u).unwrap();
    let image = set.dual();
    let (h_dual, p_dual) = (s.dualize(&a.point).unwrap(), s.dualize(&a.hyperplane).unwrap());
    let expected = build_lambda(&LambdaSpec::hyperplane_point(h_dual, p_dual), u).unwrap();
    assert_eq!(image.len(), set.len());
    assert_eq!(image.ordinals(), expected.ordinals());
}

#[test]
fn dual_of_each_family_is_a_family_of_the_dual_kind() {
    let u = u2();
    let s = u.space();
    for spec in families(u) {
        let set = build_lambda(&spec, u).unwrap();
        let d = |x: &flagkneser::projective::Subspace| s.dualize(x).unwrap();
        let dual_spec = LambdaSpec {
            kind: spec.kind.dual(),
            hyperplane: spec.point.as_ref().map(d),
            point: spec.hyperplane.as_ref().map(d),
            line: spec.four_space.as_ref().map(d),
            four_space: spec.line.as_ref().map(d),
            plane_family: spec.solid_family.iter().map(d).collect(),
            solid_family: spec.plane_family.iter().map(d).collect(),
        };
        let expected = build_lambda(&dual_spec, u).unwrap();
        assert_eq!(set.dual().ordinals(), expected.ordinals(), "{}", spec.kind.name());
    }
}

#[test]
fn independence_is_invariant_under_duality() {
    let u = u2();
    for spec in families(u) {
        let set = build_lambda(&spec, u).unwrap();
        assert!(check_independent(&set).pass(), "{}", spec.kind.name());
        assert!(check_independent(&set.dual()).pass(), "dual of {}", spec.kind.name());
    }
    assert_eq!(LambdaKind::PointLine.dual(), LambdaKind::HyperplaneFourSpace);
}

#[test]
#[ignore = "builds the q=3 flag universe: 37M flags, about 1.2 GB"]
fn q3_universe_size_and_coloring_cover() {
    let u = FlagUniverse::build(3).unwrap();
    assert_eq!(flag_count(3), u.len() as u64);
    let scheme = ColoringScheme::canonical(u.space()).unwrap();
    let classes = build_coloring(&scheme, &u).unwrap();
    assert_eq!(classes.len(), 118);
    assert!(cover_check(classes.into_iter().map(|c| c.bits().clone()), &u).pass);
}
