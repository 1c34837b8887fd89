//! Exact closed-form counts, through the typed functions and the name registry.
//!
//! `cargo run --example counting_formulas -- 3`

use flagkneser::counting::{self, FormulaRegistry};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(2);

    println!("[7 choose 3]_{q} = {}", counting::gaussian(7, 3, q));
    println!("flags            = {}", counting::flag_count(q));
    println!("alpha            = {}", counting::independence_number(q));
    println!("alpha (expanded) = {}", counting::independence_number_expanded(q));
    println!("degree           = {}", counting::kneser_degree(q));

    let reg = FormulaRegistry::new();
    for req in ["chromatic_lower", "chromatic_upper", "a0b3_bound", "hilfslemma_exact:2", "s_count:1,0,1,3"] {
        let r = reg.eval_request(req, q)?;
        println!("{req:<20} {}", r.value);
    }
    println!("registered: {}", reg.names().collect::<Vec<_>>().join(", "));
    Ok(())
}
