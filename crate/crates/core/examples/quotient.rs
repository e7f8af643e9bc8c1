//! Quotients by normal subgroups, identified up to isomorphism.

use autorbit::catalog::build;
use autorbit::structure::{is_isomorphic, normal_subgroups, quotient};
use autorbit::ElementTable;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let candidates = ["trivial", "C2", "C3", "C7", "E2^2", "S3", "A4", "A5", "S4", "S5"];
    for name in ["S4", "ASL24A", "DP(A5,C7)"] {
        let t = ElementTable::new(&build(name)?)?;
        for n in normal_subgroups(&t) {
            let q = quotient(&t, &n)?;
            let mut label = format!("order {}", q.order());
            for c in candidates {
                if is_isomorphic(&q, &build(c)?)? {
                    label = c.to_string();
                    break;
                }
            }
            println!("{name} / N({}) = {label}", n.order());
        }
    }
    Ok(())
}
