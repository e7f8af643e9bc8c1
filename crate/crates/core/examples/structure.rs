//! Classes, normal subgroups, derived series and Sylow subgroups.

use autorbit::catalog::build;
use autorbit::structure::{
    center, conjugacy_classes, derived_series, normal_subgroups, prime_set, spectrum, sylow_subgroup,
};
use autorbit::ElementTable;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S4".to_string());
    let g = build(&name)?;
    let t = ElementTable::new(&g)?;
    println!("{name}: order {}", g.order());
    println!("spectrum {:?}", spectrum(&t));
    println!("center order {}", center(&t).order());
    let classes: Vec<String> = conjugacy_classes(&t)
        .iter()
        .map(|c| format!("{}x{}", c.element_order, c.size))
        .collect();
    println!("classes (order x size): {}", classes.join(" "));
    let normals: Vec<usize> = normal_subgroups(&t).iter().map(|r| r.order()).collect();
    println!("normal subgroup orders {normals:?}");
    let series: Vec<u128> = derived_series(&g).iter().map(|h| h.order()).collect();
    println!("derived series {series:?}");
    for p in prime_set(&g) {
        println!("Sylow {p}-subgroup of order {}", sylow_subgroup(&t, p)?.order());
    }
    Ok(())
}
