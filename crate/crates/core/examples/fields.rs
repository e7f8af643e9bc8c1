//! Finite field tables and the projective groups built on them.

use autorbit::catalog::{describe, FieldTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for q in [4, 8, 9] {
        let f = FieldTable::new(q)?;
        let z = f.primitive();
        let powers: Vec<u8> = (0..q - 1).map(|e| f.pow(z, e)).collect();
        println!("GF({q}): primitive {z}, powers {powers:?}");
    }
    for name in ["PSL2(8)", "PGL2(9)", "PGammaL2(9)", "M10", "PSL3(4)"] {
        let d = describe(name)?;
        println!("{}: degree {}, order {}, {}", d.name, d.degree, d.order, d.provenance);
    }
    Ok(())
}
