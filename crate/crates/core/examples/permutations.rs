//! Cycle notation, composition and stabilizer chains.

use autorbit::{PermGroup, Permutation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = Permutation::parse_cycles("(1 2)(3 4 5)", 5)?;
    println!("{p} has images {:?} and order {}", p.images(), p.order());
    let a = Permutation::parse_cycles("(1 2 3)", 3)?;
    let b = Permutation::parse_cycles("(1 2)", 3)?;
    // right action: apply a, then b
    println!("{a} then {b} = {}", a.compose(&b)?);

    let a5 = PermGroup::from_cycles(5, &["(1 2 3 4 5)", "(3 4 5)"])?;
    println!("|A5| = {}", a5.order());
    let base: Vec<usize> = a5.bsgs().base().iter().map(|b| b + 1).collect();
    println!("base {base:?}");
    for s in ["(1 2)", "(1 2)(3 4)"] {
        let x = Permutation::parse_cycles(s, 5)?;
        println!("{s} in A5: {}", a5.contains(&x)?);
    }
    Ok(())
}
