//! Automorphisms as element maps: conjugations, the field automorphism of
//! PSL2(8), and characteristic subgroups.

use autorbit::aut::{conjugation_automorphism, normalizer_induced_automorphism, verify_automorphism};
use autorbit::catalog::{build, frobenius_point_map};
use autorbit::{AutAnalysis, ElementTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = ElementTable::new(&build("PSL2(8)")?)?;
    let frob = normalizer_induced_automorphism(&t, &frobenius_point_map(8)?)?;
    println!("Frobenius is an automorphism: {}", verify_automorphism(&t, &frob));
    let inner = (0..t.len()).any(|g| conjugation_automorphism(&t, t.element(g)).is_ok_and(|c| c == frob));
    println!("Frobenius is inner: {inner}");
    let a = AutAnalysis::compute(&t)?;
    println!("|Aut(PSL2(8))| = {}, omega = {}", a.aut_order(), a.omega());

    for name in ["ASL24A", "ASL24B", "DP(A5,C7)"] {
        let t = ElementTable::new(&build(name)?)?;
        let a = AutAnalysis::compute(&t)?;
        let chars: Vec<usize> = a.characteristic_subgroups(&t).iter().map(|r| r.order()).collect();
        println!("{name}: omega {}, characteristic subgroup orders {chars:?}, AT {}", a.omega(), a.is_at_group(&t));
    }
    Ok(())
}
