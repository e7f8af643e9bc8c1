//! Isomorphism tests with explicit generator images.

use autorbit::catalog::build;
use autorbit::structure::isomorphic;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pairs = [
        ("PSL2(4)", "A5"),
        ("PSL2(5)", "A5"),
        ("PSL2(9)", "A6"),
        ("PGL2(5)", "S5"),
        ("M10", "PGL2(9)"),
        ("ASL24A", "ASL24B"),
    ];
    for (a, b) in pairs {
        let (g, h) = (build(a)?, build(b)?);
        match isomorphic(&g, &h)? {
            Some(w) => {
                println!("{a} ~ {b}");
                for (s, x) in w.source_generators.iter().zip(&w.image_elements) {
                    println!("  {s} -> {x}");
                }
            }
            None => println!("{a} and {b} are not isomorphic"),
        }
    }
    Ok(())
}
