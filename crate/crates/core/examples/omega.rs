//! ω and the orbit census for groups named on the command line.
//!
//! ```text
//! cargo run --example omega -- A5 "PSL2(8)" ASL24A
//! ```

use std::time::Instant;

use autorbit::catalog::build;
use autorbit::{AutAnalysis, ElementTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let names: Vec<String> = std::env::args().skip(1).collect();
    let names = if names.is_empty() { vec!["A5".to_string()] } else { names };
    for name in names {
        let start = Instant::now();
        let g = build(&name)?;
        let t = ElementTable::new(&g)?;
        let a = AutAnalysis::compute(&t)?;
        println!("{name}: |G| = {}, |Aut| = {}, omega = {}", t.len(), a.aut_order(), a.omega());
        for (order, size) in a.partition().census() {
            println!("  order {order:>3}  cell size {size}");
        }
        eprintln!("  ({:.2?})", start.elapsed());
    }
    Ok(())
}
