//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//!
//! Run with `cargo test --release --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use flagkneser::constructions::{
    build_coloring, build_ekr_plane_family, build_ekr_solid_family, build_lambda, canonical_anchors, count_lambda,
    trivial_coloring, ColoringScheme, LambdaKind, LambdaSpec, PlaneFamilyKind, SolidFamilyKind,
};
use flagkneser::counting::{
    chromatic_lower, flag_count, independence_number, independence_number_expanded, lambda_hyperplane_size, s_subspaces,
};
use flagkneser::galois::SUPPORTED_ORDERS;
use flagkneser::kneser::FlagUniverse;
use flagkneser::oracle::{a0b3_sweep, hilfslemma_sweep, max_line_meeting_family_check, skew_count_grid, Relation};
use flagkneser::projective::ProjectiveSpace;
use flagkneser::verify::{check_coloring, check_hyperplane_trace_ekr, check_independent, check_maximal, check_saturation, chromatic_lower_report};

const SEED: u64 = 7;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every maximal family constructed from the canonical anchors, with the
/// hyperplane when its saturated solids are predicted.
fn maximal_families(u: &FlagUniverse) -> Vec<(String, LambdaSpec, bool)> {
    let s = u.space();
    let a = canonical_anchors(s);
    let plane_fams = [
        ("pencil", PlaneFamilyKind::PointPencil(a.point.clone())),
        ("4-space", PlaneFamilyKind::SubspaceFull(a.four_space.clone())),
    ];
    let solid_fams = [
        ("in-hyperplane", SolidFamilyKind::InHyperplane(a.hyperplane.clone())),
        ("on-line", SolidFamilyKind::OnLine(a.line.clone())),
    ];
    let mut out = vec![
        ("P_H".into(), LambdaSpec::point_hyperplane(a.point.clone(), a.hyperplane.clone()), false),
        ("H_P".into(), LambdaSpec::hyperplane_point(a.hyperplane.clone(), a.point.clone()), false),
        ("P_l".into(), LambdaSpec::point_line(a.point.clone(), a.line.clone()), false),
        ("H_U".into(), LambdaSpec::hyperplane_four_space(a.hyperplane.clone(), a.four_space.clone()), false),
    ];
    for (name, k) in &plane_fams {
        let fam = build_ekr_plane_family(k, &a.hyperplane, s).unwrap();
        out.push((format!("H_E/{name}"), LambdaSpec::hyperplane_family(a.hyperplane.clone(), fam), true));
    }
    for (name, k) in &solid_fams {
        let fam = build_ekr_solid_family(&a.point, k, s).unwrap();
        out.push((format!("P_S/{name}"), LambdaSpec::point_family(a.point.clone(), fam), false));
    }
    out
}

fn independence_value(u: &FlagUniverse) -> Outcome {
    let a = canonical_anchors(u.space());
    let specs = [
        LambdaSpec::point_hyperplane(a.point.clone(), a.hyperplane.clone()),
        LambdaSpec::hyperplane_point(a.hyperplane.clone(), a.point.clone()),
        LambdaSpec::point_line(a.point.clone(), a.line.clone()),
        LambdaSpec::hyperplane_four_space(a.hyperplane.clone(), a.four_space.clone()),
    ];
    let alpha = independence_number(2);
    ensure(alpha == 11005, || format!("formula gives {alpha}"))?;
    for spec in &specs {
        let set = build_lambda(spec, u).map_err(|e| e.to_string())?;
        let name = spec.kind.name();
        ensure(alpha == set.len() as u64, || format!("{name} has {} flags", set.len()))?;
        ensure(check_independent(&set).pass(), || format!("{name} not independent"))?;
        let m = check_maximal(&set);
        ensure(m.pass(), || format!("{name} not maximal: {:?}", m.checks[0].witness))?;
    }
    Ok("P_H, H_P, P_l, H_U: 11005 flags each, independent and maximal".into())
}

fn cardinality_polynomial(u: &FlagUniverse) -> Outcome {
    let mut done = 0;
    for q in [2u32, 3] {
        let space = ProjectiveSpace::new(6, q).map_err(|e| e.to_string())?;
        let a = canonical_anchors(&space);
        for kind in [PlaneFamilyKind::PointPencil(a.point.clone()), PlaneFamilyKind::SubspaceFull(a.four_space.clone())] {
            let fam = build_ekr_plane_family(&kind, &a.hyperplane, &space).map_err(|e| e.to_string())?;
            let want = lambda_hyperplane_size(fam.len() as u64, q);
            let spec = LambdaSpec::hyperplane_family(a.hyperplane.clone(), fam);
            let got = count_lambda(&spec, &space).map_err(|e| e.to_string())?;
            ensure(want == got, || format!("q={q} {kind:?}: counted {got}, formula {want}"))?;
            if q == 2 {
                let n = build_lambda(&spec, u).map_err(|e| e.to_string())?.len() as u64;
                ensure(want == n, || format!("q=2 enumeration gives {n}, formula {want}"))?;
            }
            done += 1;
        }
    }
    for q in SUPPORTED_ORDERS {
        let (g, p) = (independence_number(q), independence_number_expanded(q));
        ensure(g == p, || format!("q={q}: product form {g}, expanded {p}"))?;
    }
    Ok(format!("{done} family counts match; expanded polynomial equals product form for q in {SUPPORTED_ORDERS:?}"))
}

fn skew_counts() -> Outcome {
    let mut total = 0;
    for q in [2u32, 3] {
        let results = skew_count_grid(q, 5, 10, SEED).map_err(|e| e.to_string())?;
        if let Some(bad) = results.iter().find(|r| !r.pass) {
            return Err(format!("count {} vs formula {} at {}", bad.count, bad.bound_or_formula, bad.parameters));
        }
        total += results.len();
    }
    Ok(format!("{total} configurations over n<=5, q in {{2,3}} all equal the formula"))
}

fn two_solid_count() -> Outcome {
    let mut n = 0;
    let mut max_seen = Vec::new();
    for q in [2u32, 3] {
        for uu in [1, 2] {
            let sweep = hilfslemma_sweep(q, uu, 10, SEED).map_err(|e| e.to_string())?;
            if let Some(bad) = sweep.results.iter().find(|r| !r.pass) {
                return Err(format!("{}: count {} {:?} {}", bad.oracle, bad.count, bad.relation, bad.bound_or_formula));
            }
            let head = &sweep.results[0];
            if q == 2 && uu == 2 {
                ensure(head.count == 267, || format!("canonical u=2 count is {}", head.count))?;
            }
            n += sweep.results.iter().filter(|r| r.relation == Relation::Equal && r.oracle == "hilfslemma").count();
            max_seen.push(format!("q={q},u={uu}:{}", sweep.max_count));
        }
    }
    Ok(format!("{n} configurations exact and within the bound; canonical q=2,u=2 gives 267; max {}", max_seen.join(" ")))
}

fn three_plane_bound() -> Outcome {
    let sweep = a0b3_sweep(2, 20, SEED).map_err(|e| e.to_string())?;
    ensure(sweep.results.len() >= 20, || format!("only {} configurations", sweep.results.len()))?;
    ensure(sweep.pass && sweep.max_count <= 539, || format!("max count {}", sweep.max_count))?;
    Ok(format!("{} configurations, max {} <= 539", sweep.results.len(), sweep.max_count))
}

fn coloring(u: &FlagUniverse) -> Outcome {
    let scheme = ColoringScheme::canonical(u.space()).map_err(|e| e.to_string())?;
    let classes = build_coloring(&scheme, u).map_err(|e| e.to_string())?;
    ensure(classes.len() == 29, || format!("{} classes", classes.len()))?;
    let r = check_coloring(&classes, u);
    ensure(r.pass(), || format!("point-line coloring fails: {}", r.to_json()))?;

    let a = canonical_anchors(u.space());
    let trivial = trivial_coloring(&a.four_space, u).map_err(|e| e.to_string())?;
    ensure(trivial.len() == 31, || format!("{} trivial classes", trivial.len()))?;
    ensure(check_coloring(&trivial, u).pass(), || "trivial coloring fails".into())?;

    let lower = chromatic_lower_report(2, Some(u));
    let ceil = (177_165u64).div_ceil(11_005);
    ensure(lower.pass() && ceil == 17 && chromatic_lower(2) == 17, || "lower bound mismatch".into())?;
    ensure(flag_count(2) == u.len() as u64, || "universe size".into())?;
    Ok("29 independent covering classes, 31 trivial classes, lower bound 17".into())
}

fn saturation(u: &FlagUniverse) -> Outcome {
    let a = canonical_anchors(u.space());
    let mut names = Vec::new();
    for (name, spec, with_h) in maximal_families(u) {
        let set = build_lambda(&spec, u).map_err(|e| e.to_string())?;
        let (r, prof) = check_saturation(&set, with_h.then_some(&a.hyperplane));
        if let Some(c) = r.checks.iter().find(|c| !c.pass) {
            return Err(format!("{name}: {} fails, witness {:?}", c.name, c.witness));
        }
        if with_h {
            ensure(prof.saturated_solids.len() == 651, || format!("{name}: {} saturated solids", prof.saturated_solids.len()))?;
        }
        names.push(name);
    }
    Ok(format!("quotient/pencil structure and saturated-solid checks hold for {}", names.join(", ")))
}

fn traces(u: &FlagUniverse) -> Outcome {
    let s = u.space();
    let a = canonical_anchors(s);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut hyperplanes = vec![a.hyperplane.clone()];
    hyperplanes.extend((0..4).map(|_| s.random_subspace(5, &mut rng)));
    let bound = s_subspaces(1, 4, 2);
    ensure(bound == 155, || format!("bound {bound}"))?;
    let mut largest = 0;
    let mut families = maximal_families(u);
    families.push(("H_empty".into(), LambdaSpec::hyperplane_empty(a.hyperplane.clone()), false));
    for (name, spec, _) in families {
        let set = build_lambda(&spec, u).map_err(|e| e.to_string())?;
        for h in &hyperplanes {
            let r = check_hyperplane_trace_ekr(&set, h);
            if let Some(c) = r.checks.iter().find(|c| !c.pass) {
                return Err(format!("{name} at {h}: {} fails, witness {:?}", c.name, c.witness));
            }
            largest = largest.max(r.checks[0].detail["size"].as_u64().unwrap_or(0));
        }
    }
    Ok(format!("all traces pairwise intersecting over 5 hyperplanes, largest {largest} <= 155"))
}

fn line_meeting() -> Outcome {
    let results = max_line_meeting_family_check(5, 2).map_err(|e| e.to_string())?;
    if let Some(bad) = results.iter().find(|r| !r.pass) {
        return Err(format!("{}: {} vs {}", bad.oracle, bad.count, bad.bound_or_formula));
    }
    let sizes: Vec<u64> = results.iter().filter(|r| r.oracle == "line-meeting-size").map(|r| r.count).collect();
    ensure(sizes == [15, 15], || format!("sizes {sizes:?}"))?;
    Ok("line star and solid families have 15 planes and admit no extension among 1395 planes".into())
}

fn duality(u: &FlagUniverse) -> Outcome {
    let n = u.len() as u32;
    if let Some(f) = (0..n).find(|&f| u.dual_ordinal(u.dual_ordinal(f)) != f) {
        return Err(format!("flag {f} is not fixed by double dualization"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..100_000 {
        let (f, g) = (rng.gen_range(0..n), rng.gen_range(0..n));
        ensure(u.adjacent(u.dual_ordinal(f), u.dual_ordinal(g)) == u.adjacent(f, g), || format!("pair {f}, {g}"))?;
    }
    let s = u.space();
    let a = canonical_anchors(s);
    let set = build_lambda(&LambdaSpec::point_hyperplane(a.point.clone(), a.hyperplane.clone()), u).map_err(|e| e.to_string())?;
    let h = s.dualize(&a.point).map_err(|e| e.to_string())?;
    let p = s.dualize(&a.hyperplane).map_err(|e| e.to_string())?;
    let want = build_lambda(&LambdaSpec::hyperplane_point(h, p), u).map_err(|e| e.to_string())?;
    let image = set.dual();
    ensure(image.len() == set.len() && image.ordinals() == want.ordinals(), || "image of P_H differs".into())?;
    ensure(LambdaKind::PointHyperplane.dual() == LambdaKind::HyperplanePoint, || "kind map".into())?;
    Ok("involution on all 177165 flags, adjacency kept on 1e5 pairs, P_H maps onto H_P".into())
}

fn main() {
    let started = Instant::now();
    let u = FlagUniverse::build(2).expect("q=2 universe");
    let criteria: Vec<Criterion> = vec![
        ("independence number at q=2", Box::new(|| independence_value(&u))),
        ("hyperplane family cardinality", Box::new(|| cardinality_polynomial(&u))),
        ("skew-subspace counts", Box::new(skew_counts)),
        ("planes meeting two solids", Box::new(two_solid_count)),
        ("solids meeting three planes", Box::new(three_plane_bound)),
        ("colorings and lower bound", Box::new(|| coloring(&u))),
        ("saturation structure", Box::new(|| saturation(&u))),
        ("hyperplane traces", Box::new(|| traces(&u))),
        ("line-meeting plane families", Box::new(line_meeting)),
        ("duality", Box::new(|| duality(&u))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panicked".into()))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} ({secs:.1}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.1}s", criteria.len() - failed, criteria.len(), started.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
