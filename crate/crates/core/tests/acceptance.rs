//! One line per acceptance criterion. Exits nonzero when any fails.

mod common;

use std::path::Path;
use std::time::{Duration, Instant};

use autorbit::aut::verify_automorphism;
use autorbit::catalog::{build, extension_family};
use autorbit::structure::{conjugacy_classes, is_elementary_abelian, is_isomorphic, normal_subgroups, quotient, spectrum};
use autorbit::verify::{run_target, Analyzer, Corpus, Status, Target, VerifyOptions};
use autorbit::{AutAnalysis, ElementTable, PermGroup, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn table(name: &str) -> Result<ElementTable, String> {
    let g = build(name).map_err(|e| format!("{name}: {e}"))?;
    ElementTable::new(&g).map_err(|e| format!("{name}: {e}"))
}

fn analysis(name: &str) -> Result<(ElementTable, AutAnalysis), String> {
    let t = table(name)?;
    let a = AutAnalysis::compute(&t).map_err(|e| format!("{name}: {e}"))?;
    Ok((t, a))
}

fn exact_spectra() -> Outcome {
    let cases: [(&str, &[u32]); 5] = [
        ("A5", &[1, 2, 3, 5]),
        ("A6", &[1, 2, 3, 4, 5]),
        ("PSL2(7)", &[1, 2, 3, 4, 7]),
        ("PSL2(8)", &[1, 2, 3, 7, 9]),
        ("PSL3(4)", &[1, 2, 3, 4, 5, 7]),
    ];
    for (name, want) in cases {
        let got: Vec<u32> = spectrum(&table(name)?).into_iter().collect();
        ensure(got == want, format!("{name}: spectrum {got:?}, expected {want:?}"))?;
    }
    Ok("5 spectra exact".into())
}

fn omega_values_and_time() -> Outcome {
    let cases = [
        ("trivial", 1),
        ("E2^1", 2),
        ("E2^4", 2),
        ("E3^2", 2),
        ("E5^1", 2),
        ("A5", 4),
        ("A6", 5),
        ("PSL2(7)", 5),
        ("PSL2(8)", 5),
        ("PSL3(4)", 6),
    ];
    let mut slowest = (String::new(), Duration::ZERO);
    for (name, want) in cases {
        let start = Instant::now();
        let (t, a) = analysis(name)?;
        let took = start.elapsed();
        ensure(a.omega() == want, format!("{name}: omega {} expected {want}", a.omega()))?;
        let budget = if t.len() <= 504 { Duration::from_secs(60) } else { Duration::from_secs(600) };
        ensure(took <= budget, format!("{name}: {took:.2?} over {budget:?}"))?;
        if took > slowest.1 {
            slowest = (name.to_string(), took);
        }
    }
    Ok(format!("10 values exact, slowest {} in {:.2?}", slowest.0, slowest.1))
}

fn order_960_example() -> Outcome {
    let a5 = build("A5").map_err(|e| e.to_string())?;
    let mut found = Vec::new();
    for name in ["ASL24A", "ASL24B"] {
        let (t, a) = analysis(name)?;
        if a.omega() != 6 {
            continue;
        }
        for n in a.characteristic_subgroups(&t).iter().filter(|r| r.order() == 16) {
            let sub = n.index_set().to_perm_group(&t);
            let q = quotient(&t, n).map_err(|e| e.to_string())?;
            if is_elementary_abelian(&sub) && is_isomorphic(&q, &a5).map_err(|e| e.to_string())? {
                found.push(name);
            }
        }
    }
    ensure(!found.is_empty(), "no order 960 group with omega 6 and characteristic 2^4")?;
    Ok(format!("{} has omega 6, characteristic 2^4, quotient A5", found.join(", ")))
}

fn search_matches_oracles(corpus: &Corpus) -> Outcome {
    let (mut pruned, mut bijective) = (0, 0);
    for e in corpus.entries.iter().filter(|e| e.group.order() <= 60) {
        let t = ElementTable::new(&e.group).map_err(|x| x.to_string())?;
        let a = AutAnalysis::compute(&t).map_err(|x| x.to_string())?;
        let brute = common::Brute::new(&e.group);
        let maps = brute.automorphisms_by_images();
        let cells = common::cells_as_sets(&t, &a.partition().cells);
        ensure(a.aut_order() == maps.len() as u128, format!("{}: |Aut| {} vs {}", e.name, a.aut_order(), maps.len()))?;
        ensure(cells == brute.orbits(&maps), format!("{}: partitions differ", e.name))?;
        pruned += 1;
        if e.group.order() <= 8 {
            let bij = brute.automorphisms_by_bijections();
            ensure(bij.len() == maps.len() && brute.orbits(&bij) == cells, format!("{}: bijection oracle differs", e.name))?;
            bijective += 1;
        }
    }
    Ok(format!("{pruned} groups against image enumeration, {bijective} against all bijections"))
}

fn require_pass(target: Target, corpus: &Corpus, an: &Analyzer) -> Result<usize, String> {
    let r = run_target(target, corpus, &VerifyOptions::default(), an);
    if let Some(v) = r.verdicts.iter().find(|v| v.status != Status::Pass) {
        return Err(format!("{target}: {v}"));
    }
    Ok(r.verdicts.len())
}

fn stroppel(corpus: &Corpus, an: &Analyzer) -> Outcome {
    let n = require_pass(Target::StroppelIneq, corpus, an)?;
    Ok(format!("{n} (G, K) pairs"))
}

fn lemmas(corpus: &Corpus, an: &Analyzer) -> Outcome {
    let sq = analysis("POW(A5,2)")?.1.omega();
    ensure(sq >= 7, format!("omega(A5 x A5) = {sq}"))?;
    let prod = analysis("DP(A5,C7)")?.1.omega();
    ensure(prod == 8, format!("omega(A5 x C7) = {prod}"))?;
    let mut members = 0;
    for base in ["A5", "A6", "PSL2(7)", "PSL2(8)"] {
        for m in extension_family(base).map_err(|e| e.to_string())? {
            let t = ElementTable::new(&m.group).map_err(|e| e.to_string())?;
            if base == "PSL2(8)" && m.prime == 7 {
                let w = AutAnalysis::compute(&t).map_err(|e| e.to_string())?.omega();
                ensure(w >= 7, format!("PSL2(8) p=7 member: omega {w}"))?;
            } else {
                let s = spectrum(&t).len();
                ensure(s >= 6, format!("{base} p={}: |spec| = {s}", m.prime))?;
            }
            members += 1;
        }
    }
    for t in [Target::Lemma23, Target::Lemma24, Target::Prop27, Target::AtConsistency] {
        require_pass(t, corpus, an)?;
    }
    Ok(format!("omega(A5^2) = {sq}, omega(A5 x C7) = {prod}, {members} family members, 4 targets pass"))
}

fn theorems(corpus: &Corpus, an: &Analyzer) -> Outcome {
    let a = require_pass(Target::TheoremA, corpus, an)?;
    let b = require_pass(Target::TheoremB, corpus, an)?;
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/falsified");
    let (extra, errors) = Corpus::load_dir(&dir).map_err(|e| e.to_string())?;
    ensure(errors.is_empty() && !extra.is_empty(), "falsified fixtures unreadable")?;
    let mut bad = corpus.clone();
    bad.extend(extra);
    let r = run_target(Target::TheoremA, &bad, &VerifyOptions::default(), &Analyzer::new(None));
    ensure(r.exit_code() == 1, format!("falsified corpus gave exit {}", r.exit_code()))?;
    Ok(format!("theorem-a {a} verdicts, theorem-b {b} verdicts, falsified fixture exits 1"))
}

fn engine_checks(corpus: &Corpus) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let mut random = 0;
    while random < 50 {
        let n = rng.gen_range(2..=8);
        let gens: Vec<Permutation> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let mut v: Vec<usize> = (1..=n).collect();
                v.shuffle(&mut rng);
                Permutation::from_images(&v).unwrap()
            })
            .collect();
        let g = PermGroup::new(n, gens).map_err(|e| e.to_string())?;
        if g.order() > 10_000 {
            continue;
        }
        let bfs = common::closure(&g).len() as u128;
        ensure(bfs == g.order(), format!("BSGS order {} vs closure {bfs}", g.order()))?;
        random += 1;
    }
    let mut classes = 0;
    let mut maps = 0;
    for e in &corpus.entries {
        let t = ElementTable::new(&e.group).map_err(|x| x.to_string())?;
        let cl = conjugacy_classes(&t);
        let total: usize = cl.iter().map(|c| c.size).sum();
        ensure(total == t.len() && cl.iter().all(|c| t.len() % c.size == 0), format!("{}: class equation", e.name))?;
        classes += 1;
        if t.len() <= 5000 {
            let a = AutAnalysis::compute(&t).map_err(|x| x.to_string())?;
            for m in a.automorphisms(&t) {
                ensure(verify_automorphism(&t, &m), format!("{}: a map is not a homomorphism", e.name))?;
                maps += 1;
            }
        }
    }
    let normals_ok = corpus.entries.iter().filter(|e| e.group.order() <= 60).all(|e| {
        let t = ElementTable::new(&e.group).unwrap();
        normal_subgroups(&t).iter().all(|r| r.index_set().is_normal(&t))
    });
    ensure(normals_ok, "a reported normal subgroup is not normal")?;
    Ok(format!("50 random groups, {classes} class equations, {maps} maps checked over all pairs"))
}

fn main() {
    let corpus = Corpus::default_corpus().expect("default corpus");
    let an = Analyzer::new(None);
    let criteria: Vec<Criterion> = vec![
        ("exact spectra", Box::new(exact_spectra)),
        ("omega values and runtime", Box::new(omega_values_and_time)),
        ("order 960 example", Box::new(order_960_example)),
        ("pruned search equals oracles", Box::new(|| search_matches_oracles(&corpus))),
        ("quotient inequality", Box::new(|| stroppel(&corpus, &an))),
        ("lemma checks", Box::new(|| lemmas(&corpus, &an))),
        ("classification targets", Box::new(|| theorems(&corpus, &an))),
        ("engine self-checks", Box::new(|| engine_checks(&corpus))),
    ];
    let mut failed = 0;
    for (i, (label, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match f() {
            Ok(ev) => println!("criterion {}: PASS {label}: {ev} ({:.1?})", i + 1, start.elapsed()),
            Err(ev) => {
                failed += 1;
                println!("criterion {}: FAIL {label}: {ev}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
