//! The full invariant report the CLI prints for `info`.
//!
//! ```text
//! cargo run --example report -- "PGammaL2(8)"
//! ```

use autorbit::verify::{Analyzer, GroupReport};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "PSL2(7)".to_string());
    let an = Analyzer::new(None);
    let f = an.catalog(&name)?;
    let r = GroupReport::from_facts(&an, &f, &[])?;
    print!("{}", r.to_text());
    println!("{}", r.to_json());
    Ok(())
}
