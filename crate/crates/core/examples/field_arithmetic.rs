//! Lookup-table arithmetic in the small fields, including a non-prime order.
//!
//! `cargo run --example field_arithmetic -- 4`

use flagkneser::galois::{FieldTable, SUPPORTED_ORDERS};

fn main() {
    let q: u32 = std::env::args().nth(1).map(|s| s.parse().expect("q must be an integer")).unwrap_or(4);
    let f = match FieldTable::new(q) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{e} (supported: {SUPPORTED_ORDERS:?})");
            std::process::exit(2);
        }
    };
    println!("GF({q}) = GF({}^{}), modulus coefficients {:?}", f.characteristic(), f.degree(), f.modulus());

    print!("   *");
    for b in f.elements() {
        print!("{b:>3}");
    }
    println!();
    for a in f.elements() {
        print!("{a:>4}");
        for b in f.elements() {
            print!("{:>3}", f.mul(a, b));
        }
        println!();
    }

    let inverses: Vec<String> = f.elements().skip(1).map(|a| format!("{a}->{}", f.inv(a).unwrap())).collect();
    println!("inverses: {}", inverses.join(" "));
}
