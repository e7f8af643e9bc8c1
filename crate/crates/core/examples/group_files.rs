//! Writing a group file, reading it back and checking its claims.

use autorbit::catalog::build;
use autorbit::groupfile::{Claim, GroupFile};
use autorbit::verify::{claim_verdicts, Analyzer};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut f = GroupFile::from_group(&build("PSL2(7)")?);
    f.claims = vec![Claim::Omega(5), Claim::Simple(true), Claim::AutOrder(336)];
    let text = f.serialize();
    print!("{text}");

    let back = GroupFile::parse(&text)?;
    let an = Analyzer::new(None);
    let facts = an.facts("example", &back.to_group()?)?;
    for v in claim_verdicts(&facts, &back.claims) {
        println!("{v}");
    }
    Ok(())
}
