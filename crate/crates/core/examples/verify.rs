//! Runs verification targets over the built-in corpus.
//!
//! ```text
//! cargo run --example verify -- theorem-a lemma-2-4
//! ```

use autorbit::verify::{run_target, Analyzer, Corpus, Target, VerifyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let targets: Vec<Target> = match std::env::args().skip(1).map(|s| s.parse()).collect::<Result<Vec<_>, _>>()? {
        v if v.is_empty() => vec![Target::TheoremA, Target::TheoremB],
        v => v,
    };
    let corpus = Corpus::default_corpus()?;
    let an = Analyzer::new(None);
    for t in targets {
        let r = run_target(t, &corpus, &VerifyOptions::default(), &an);
        print!("{}", r.to_text());
    }
    Ok(())
}
