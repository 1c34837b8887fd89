//! Brute-force counts against their closed forms.

use flagkneser::oracle::{a0b3_sweep, complement_count_check, hilfslemma_sweep, max_line_meeting_family_check, skew_count_grid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let grid = skew_count_grid(2, 4, 2, 7)?;
    println!("skew counts: {} cases, all equal = {}", grid.len(), grid.iter().all(|r| r.pass));

    for u in [1, 2] {
        let s = hilfslemma_sweep(2, u, 3, 7)?;
        println!("planes on a point meeting two solids, u={u}: max {} pass = {}", s.max_count, s.pass);
    }

    let s = a0b3_sweep(2, 20, 7)?;
    println!("solids meeting three planes: max {} over {} configurations, pass = {}", s.max_count, s.results.len(), s.pass);

    for r in max_line_meeting_family_check(5, 2)? {
        println!("{:<28} count {:>3} {:?} {} -> {}", r.oracle, r.count, r.relation, r.bound_or_formula, r.pass);
    }

    let c = complement_count_check(2, 4, 2)?;
    println!("complements of a 2-space in GF(2)^4: {}", c.count);
    Ok(())
}
