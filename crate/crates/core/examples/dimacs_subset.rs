//! Writes the subgraph induced on every 300th flag as
//! DIMACS, then prints the header and a few edges.

use flagkneser::kneser::{write_dimacs, FlagSet, FlagUniverse};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let u = FlagUniverse::build(2)?;
    let set = FlagSet::from_ordinals(&u, (0..u.len() as u32).step_by(300))?;
    let mut buf = Vec::new();
    let edges = write_dimacs(&set, &mut buf)?;
    let text = String::from_utf8(buf)?;
    println!("{} vertices, {edges} edges", set.len());
    for line in text.lines().filter(|l| l.starts_with('p') || l.starts_with('e')).take(6) {
        println!("{line}");
    }
    Ok(())
}
