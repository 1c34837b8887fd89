//! The plane-solid flags of PG(6,2) and the Kneser adjacency between them.

use flagkneser::kneser::{adjacency_scan, dimacs_header_full, dualize_flag, general_position, FlagSet, FlagUniverse};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let u = FlagUniverse::build(2)?;
    println!("{} flags, {} planes, {} solids", u.len(), u.planes().len(), u.solids().len());
    println!("{} planes per solid, {} solids per plane", u.planes_per_solid(), u.solids_per_plane());
    println!("{}", dimacs_header_full(&u));

    let f = 0;
    let g = (1..u.len() as u32).find(|&g| u.adjacent(f, g)).expect("some neighbour");
    println!("flag {f}: {} in {}", u.plane_of(f), u.solid_of(f));
    println!("first neighbour {g}: {} in {}", u.plane_of(g), u.solid_of(g));
    println!("four-pair definition agrees: {}", general_position(u.space(), &u.flag(f), &u.flag(g))?);

    let all = FlagSet::full(&u);
    let scan = adjacency_scan(&all, f);
    println!("degree of flag {f}: {} (witness {:?})", scan.count, scan.first_witness);

    let d = dualize_flag(u.space(), &u.flag(f))?;
    println!("dual flag: {} in {} = ordinal {}", d.plane, d.solid, u.dual_ordinal(f));
    Ok(())
}
