//! Both colorings at q=2, checked for independence and cover, next to the
//! fractional lower bound.

use flagkneser::constructions::{build_coloring, canonical_anchors, trivial_coloring, ColoringScheme};
use flagkneser::kneser::FlagUniverse;
use flagkneser::verify::{check_coloring, chromatic_lower_report};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let u = FlagUniverse::build(2)?;
    let scheme = ColoringScheme::canonical(u.space())?;
    for (i, m) in scheme.m_sets.iter().enumerate() {
        println!("M_{i}: {} points, paired with {}", m.len(), scheme.q_points[i]);
    }

    let classes = build_coloring(&scheme, &u)?;
    let r = check_coloring(&classes, &u);
    println!("point-line scheme: {} classes, pass = {}", classes.len(), r.pass());

    let a = canonical_anchors(u.space());
    let trivial = trivial_coloring(&a.four_space, &u)?;
    println!("trivial scheme: {} classes, pass = {}", trivial.len(), check_coloring(&trivial, &u).pass());

    let lower = chromatic_lower_report(2, Some(&u));
    println!("lower bound check pass = {}", lower.pass());
    Ok(())
}
