//! Runs the verification checks on one family and prints the JSON report.
//!
//! `cargo run --release --example verify_family -- P_l`

use flagkneser::constructions::{build_ekr_plane_family, build_lambda, canonical_anchors, LambdaKind, LambdaSpec, PlaneFamilyKind};
use flagkneser::counting::independence_number;
use flagkneser::kneser::FlagUniverse;
use flagkneser::verify::{check_hyperplane_trace_ekr, check_independent, check_maximal, check_saturation, VerificationReport};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let kind: LambdaKind = std::env::args().nth(1).unwrap_or_else(|| "H_E".into()).parse()?;
    let u = FlagUniverse::build(2)?;
    let a = canonical_anchors(u.space());
    let spec = match kind {
        LambdaKind::HyperplaneFamily => {
            let fam = build_ekr_plane_family(&PlaneFamilyKind::PointPencil(a.point.clone()), &a.hyperplane, u.space())?;
            LambdaSpec::hyperplane_family(a.hyperplane.clone(), fam)
        }
        LambdaKind::PointHyperplane => LambdaSpec::point_hyperplane(a.point.clone(), a.hyperplane.clone()),
        LambdaKind::HyperplanePoint => LambdaSpec::hyperplane_point(a.hyperplane.clone(), a.point.clone()),
        LambdaKind::PointLine => LambdaSpec::point_line(a.point.clone(), a.line.clone()),
        LambdaKind::HyperplaneFourSpace => LambdaSpec::hyperplane_four_space(a.hyperplane.clone(), a.four_space.clone()),
        LambdaKind::HyperplaneEmpty => LambdaSpec::hyperplane_empty(a.hyperplane.clone()),
        LambdaKind::PointEmpty => LambdaSpec::point_empty(a.point.clone()),
        LambdaKind::PointFamily => return Err("use the lambda_families example for P_S".into()),
    };
    let set = build_lambda(&spec, &u)?;

    let mut report = VerificationReport::for_set(kind.name(), &set).with_expected(independence_number(2));
    report.extend(check_independent(&set));
    report.extend(check_maximal(&set));
    let (sat, profile) = check_saturation(&set, (kind == LambdaKind::HyperplaneFamily).then_some(&a.hyperplane));
    report.extend(sat);
    report.extend(check_hyperplane_trace_ekr(&set, &a.hyperplane));
    report.zero_timings();
    println!("{}", report.to_json());
    println!("saturated solids: {}, saturated planes: {}", profile.saturated_solids.len(), profile.saturated_planes.len());
    println!("overall: {}", if report.pass() { "pass" } else { "fail" });
    Ok(())
}
