//! The eight verification targets.

use std::collections::BTreeSet;
use std::rc::Rc;

use crate::catalog::{build, extension_family};
use crate::error::GroupError;
use crate::group::PermGroup;
use crate::groupfile::Claim;
use crate::numbers::{factorize, is_primitive_root, multiplicative_order};
use crate::perm::lcm;
use crate::structure::derived::is_perfect;
use crate::structure::iso::{isomorphic_tables, HomWitness};
use crate::structure::product::direct_power;
use crate::structure::quotient::quotient;
use crate::structure::sylow::sylow_index_set;
use crate::table::element_cap;
use crate::verify::corpus::{CorpusEntry, Origin, FAMILY_BASES};
use crate::verify::facts::{Analyzer, Facts};
use crate::verify::report::TargetReport;
use crate::verify::{Corpus, Target, Verdict, VerifyOptions};

/// Groups named in the ω ≤ 5 classification.
pub const OMEGA_FIVE: &[&str] = &["A5", "A6", "PSL2(7)", "PSL2(8)"];
/// Nonsolvable AT-groups with ω ≤ 6.
pub const AT_SIX: &[&str] = &["A5", "A6", "PSL2(7)", "PSL2(8)", "PSL3(4)"];

pub fn entry_key(e: &CorpusEntry) -> String {
    match &e.origin {
        Origin::Catalog => e.name.clone(),
        Origin::File(p) => format!("file:{}", p.display()),
    }
}

/// Why a group is not examined, if it is not.
fn out_of_reach(order: u128, opts: &VerifyOptions) -> Option<String> {
    if let Some(m) = opts.max_order {
        if order > m {
            return Some(format!("order {order} exceeds --max-order {m}"));
        }
    }
    let cap = element_cap();
    if order > cap as u128 {
        return Some(format!("order {order} exceeds the element cap {cap}"));
    }
    None
}

/// Turns an error into the verdict it deserves: capacity and timeouts are
/// skips, anything else is a failure.
fn error_verdict(check: &str, subject: &str, e: &GroupError) -> Verdict {
    match e {
        GroupError::Capacity { .. } | GroupError::Timeout => Verdict::skip(check, subject, e.to_string()),
        _ => Verdict::fail(check, subject, format!("error: {e}")),
    }
}

fn fmt_set(s: &BTreeSet<u32>) -> String {
    let v: Vec<String> = s.iter().map(u32::to_string).collect();
    format!("{{{}}}", v.join(","))
}

fn fmt_witness(w: &HomWitness) -> String {
    let pairs: Vec<String> = w
        .source_generators
        .iter()
        .zip(&w.image_elements)
        .map(|(g, h)| format!("{g} -> {h}"))
        .collect();
    format!("[{}], graph order {}", pairs.join(", "), w.graph_order)
}

/// First reference group isomorphic to `f`, with the witness.
fn match_reference(an: &Analyzer, f: &Facts, refs: &[&str]) -> Result<Option<(String, HomWitness)>, GroupError> {
    for &r in refs {
        let rf = an.catalog(r)?;
        if rf.order() != f.order() {
            continue;
        }
        if let Some(w) = isomorphic_tables(&f.table, &rf.table) {
            return Ok(Some((r.to_string(), w)));
        }
    }
    Ok(None)
}

/// Checks the claims recorded in a group file.
pub fn claim_verdicts(f: &Facts, claims: &[Claim]) -> Vec<Verdict> {
    let subject = f.name.as_str();
    claims
        .iter()
        .map(|c| {
            let actual: Result<String, GroupError> = match c {
                Claim::Omega(_) => f.omega().map(|v| v.to_string()),
                Claim::Order(_) => Ok(f.order().to_string()),
                Claim::AutOrder(_) => f.aut().map(|a| a.aut_order().to_string()),
                Claim::Solvable(_) => Ok(f.solvable.to_string()),
                Claim::Simple(_) => Ok(f.is_simple().to_string()),
                Claim::At(_) => f.is_at().map(|b| b.to_string()),
            };
            match actual {
                Ok(a) => Verdict::from_bool(
                    a == c.value(),
                    "claim",
                    subject,
                    format!("{} claimed {}, computed {a}", c.key(), c.value()),
                ),
                Err(e) => error_verdict("claim", subject, &e),
            }
        })
        .collect()
}

/// Nonsolvable with ω ≤ 5 implies one of the four groups. `None` when the
/// group is outside the statement.
pub fn check_theorem_a(an: &Analyzer, f: &Facts) -> Option<Verdict> {
    const CHECK: &str = "theorem-a";
    if f.solvable || f.spectrum.len() > 5 {
        return None;
    }
    let omega = match f.omega() {
        Ok(w) if w > 5 => return None,
        Ok(w) => w,
        Err(e) => return Some(error_verdict(CHECK, &f.name, &e)),
    };
    Some(match match_reference(an, f, OMEGA_FIVE) {
        Ok(Some((r, w))) => Verdict::pass(CHECK, &f.name, format!("omega={omega}; isomorphic to {r} via {}", fmt_witness(&w))),
        Ok(None) => Verdict::fail(
            CHECK,
            &f.name,
            format!("omega={omega}, nonsolvable, isomorphic to none of {}", OMEGA_FIVE.join(", ")),
        ),
        Err(e) => error_verdict(CHECK, &f.name, &e),
    })
}

/// Nonsolvable with ω = 6 implies PSL3(4) or an elementary abelian
/// characteristic 2-subgroup with quotient A5.
pub fn check_theorem_b(an: &Analyzer, f: &Facts) -> Option<Verdict> {
    const CHECK: &str = "theorem-b";
    if f.solvable || f.spectrum.len() > 6 {
        return None;
    }
    match f.omega() {
        Ok(6) => {}
        Ok(_) => return None,
        Err(e) => return Some(error_verdict(CHECK, &f.name, &e)),
    }
    let run = || -> Result<Verdict, GroupError> {
        if let Some((r, w)) = match_reference(an, f, &["PSL3(4)"])? {
            return Ok(Verdict::pass(CHECK, &f.name, format!("omega=6; isomorphic to {r} via {}", fmt_witness(&w))));
        }
        let a5 = an.catalog("A5")?;
        for k in f.characteristic_subgroups()? {
            let n = k.order();
            if n < 2 || !n.is_power_of_two() || !k.members.iter().all(|&x| f.table.order_of(x) <= 2) {
                continue;
            }
            let q = quotient(&f.table, &k)?;
            if q.order() != 60 {
                continue;
            }
            let qt = crate::table::ElementTable::new(&q)?;
            if let Some(w) = isomorphic_tables(&qt, &a5.table) {
                return Ok(Verdict::pass(
                    CHECK,
                    &f.name,
                    format!(
                        "omega=6; characteristic elementary abelian N of order {n}; G/N isomorphic to A5 via {}",
                        fmt_witness(&w)
                    ),
                ));
            }
        }
        Ok(Verdict::fail(
            CHECK,
            &f.name,
            "omega=6, nonsolvable, not PSL3(4) and no characteristic elementary abelian 2-subgroup with quotient A5",
        ))
    };
    Some(run().unwrap_or_else(|e| error_verdict(CHECK, &f.name, &e)))
}

/// Nonsolvable AT-groups with ω ≤ 6 are among the five groups.
pub fn check_at_consistency(an: &Analyzer, f: &Facts) -> Option<Verdict> {
    const CHECK: &str = "at-consistency";
    if f.solvable || f.spectrum.len() > 6 {
        return None;
    }
    let omega = match f.omega() {
        Ok(w) if w > 6 || w != f.spectrum.len() => return None,
        Ok(w) => w,
        Err(e) => return Some(error_verdict(CHECK, &f.name, &e)),
    };
    Some(match match_reference(an, f, AT_SIX) {
        Ok(Some((r, w))) => Verdict::pass(
            CHECK,
            &f.name,
            format!("AT with omega=|spec|={omega}; isomorphic to {r} via {}", fmt_witness(&w)),
        ),
        Ok(None) => Verdict::fail(
            CHECK,
            &f.name,
            format!("AT with omega={omega}, nonsolvable, isomorphic to none of {}", AT_SIX.join(", ")),
        ),
        Err(e) => error_verdict(CHECK, &f.name, &e),
    })
}

/// ω = 3 and order not a prime power: `|G| = p^n q` with a normal
/// elementary abelian Sylow p-subgroup and p a primitive root mod q.
pub fn check_lm_three(f: &Facts) -> Option<Verdict> {
    const CHECK: &str = "lm-three";
    let fac = factorize(f.order());
    if fac.len() < 2 || f.spectrum.len() > 3 {
        return None;
    }
    match f.omega() {
        Ok(3) => {}
        Ok(_) => return None,
        Err(e) => return Some(error_verdict(CHECK, &f.name, &e)),
    }
    if fac.len() != 2 {
        return Some(Verdict::fail(CHECK, &f.name, format!("omega=3 but |G|={} has {} prime divisors", f.order(), fac.len())));
    }
    let mut tried = Vec::new();
    for (pi, qi) in [(0, 1), (1, 0)] {
        let (p, n) = fac[pi];
        let (q, e) = fac[qi];
        if e != 1 {
            continue;
        }
        let Ok(s) = sylow_index_set(&f.table, p) else { continue };
        let normal = s.is_normal(&f.table);
        let elementary = s.is_abelian(&f.table) && s.members().iter().all(|&x| f.table.order_of(x) as u64 <= p);
        let prim = is_primitive_root(p % q, q);
        let ord = multiplicative_order(p, q).unwrap_or(0);
        let line = format!(
            "|G|={p}^{n}*{q}; Sylow {p} normal={normal}, elementary abelian={elementary}; {p} has order {ord} mod {q} (q-1={})",
            q - 1
        );
        if normal && elementary && prim {
            return Some(Verdict::pass(CHECK, &f.name, format!("omega=3; {line}")));
        }
        tried.push(line);
    }
    Some(Verdict::fail(CHECK, &f.name, format!("omega=3; no valid split: {}", tried.join(" | "))))
}

fn in_scope_facts(
    an: &Analyzer,
    e: &CorpusEntry,
    check: &str,
    opts: &VerifyOptions,
    out: &mut TargetReport,
) -> Option<Rc<Facts>> {
    if let Some(why) = out_of_reach(e.group.order(), opts) {
        out.verdicts.push(Verdict::skip(check, &e.name, why));
        return None;
    }
    match an.facts(&entry_key(e), &e.group) {
        Ok(f) => {
            out.verdicts.extend(claim_verdicts(&f, &e.claims));
            Some(f)
        }
        Err(err) => {
            out.verdicts.push(error_verdict(check, &e.name, &err));
            None
        }
    }
}

/// Runs `target` over `corpus`.
pub fn run_target(target: Target, corpus: &Corpus, opts: &VerifyOptions, an: &Analyzer) -> TargetReport {
    let mut out = TargetReport::new(target.as_str());
    let check = target.as_str();
    match target {
        Target::TheoremA | Target::TheoremB | Target::AtConsistency | Target::LmThree => {
            let mut in_scope = 0;
            for e in &corpus.entries {
                let Some(f) = in_scope_facts(an, e, check, opts, &mut out) else { continue };
                let v = match target {
                    Target::TheoremA => check_theorem_a(an, &f),
                    Target::TheoremB => check_theorem_b(an, &f),
                    Target::AtConsistency => check_at_consistency(an, &f),
                    _ => check_lm_three(&f),
                };
                if let Some(v) = v {
                    in_scope += 1;
                    out.verdicts.push(v);
                }
            }
            out.notes.push(format!(
                "{} corpus groups examined, {in_scope} within the statement",
                corpus.len()
            ));
        }
        Target::StroppelIneq => stroppel(corpus, opts, an, &mut out),
        Target::Lemma23 => lemma_2_3(corpus, opts, an, &mut out),
        Target::Lemma24 => lemma_2_4(opts, an, &mut out),
        Target::Prop27 => prop_2_7(opts, an, &mut out),
    }
    out
}

/// Largest order for which every characteristic subgroup is examined.
pub const STROPPEL_MAX_ORDER: u128 = 5000;

fn stroppel(corpus: &Corpus, opts: &VerifyOptions, an: &Analyzer, out: &mut TargetReport) {
    const CHECK: &str = "stroppel-ineq";
    for e in &corpus.entries {
        if e.group.order() > STROPPEL_MAX_ORDER {
            if !e.claims.is_empty() {
                in_scope_facts(an, e, CHECK, opts, out);
            }
            continue;
        }
        let Some(f) = in_scope_facts(an, e, CHECK, opts, out) else { continue };
        let run = || -> Result<Vec<Verdict>, GroupError> {
            let w = f.omega()?;
            let mut v = Vec::new();
            for k in f.characteristic_subgroups()? {
                let (wk, wq) = if k.is_trivial() {
                    (1, w)
                } else if k.order() == f.table.len() {
                    (w, 1)
                } else {
                    let kt = crate::table::ElementTable::new(&k.subgroup)?;
                    let qt = crate::table::ElementTable::new(&quotient(&f.table, &k)?)?;
                    (
                        crate::aut::AutAnalysis::compute(&kt)?.omega(),
                        crate::aut::AutAnalysis::compute(&qt)?.omega(),
                    )
                };
                let subject = format!("{} K order {}", f.name, k.order());
                v.push(Verdict::from_bool(
                    w + 1 >= wk + wq,
                    CHECK,
                    &subject,
                    format!("omega(G)={w}, omega(K)={wk}, omega(G/K)={wq}, bound {}", wk + wq - 1),
                ));
            }
            Ok(v)
        };
        match run() {
            Ok(v) => out.verdicts.extend(v),
            Err(err) => out.verdicts.push(error_verdict(CHECK, &f.name, &err)),
        }
    }
    out.notes.push(format!("groups of order at most {STROPPEL_MAX_ORDER}, every characteristic subgroup"));
}

fn lcm_spectrum(s: &BTreeSet<u32>, k: usize) -> BTreeSet<u32> {
    let mut acc: BTreeSet<u32> = [1].into();
    for _ in 0..k {
        acc = acc
            .iter()
            .flat_map(|&a| s.iter().map(move |&b| lcm(a as u64, b as u64) as u32))
            .collect();
    }
    acc
}

fn lemma_2_3(corpus: &Corpus, opts: &VerifyOptions, an: &Analyzer, out: &mut TargetReport) {
    const CHECK: &str = "lemma-2-3";
    let mut reps: Vec<Rc<Facts>> = Vec::new();
    for e in &corpus.entries {
        let Some(f) = in_scope_facts(an, e, CHECK, opts, out) else { continue };
        if f.solvable || !is_perfect(&f.group) || !f.is_simple() {
            continue;
        }
        if reps
            .iter()
            .any(|r| r.order() == f.order() && isomorphic_tables(&r.table, &f.table).is_some())
        {
            continue;
        }
        reps.push(f.clone());
        let primes = factorize(f.order()).len();
        let pow_name = format!("POW({},2)", f.name);
        let pow_order = f.order() * f.order();
        // ω is bounded below by the number of element orders, which for a
        // direct power follows from the factor's spectrum
        let bound: Result<(usize, String), GroupError> = match out_of_reach(pow_order, opts) {
            Some(why) => {
                let spec = lcm_spectrum(&f.spectrum, 2);
                Ok((
                    spec.len(),
                    format!("omega >= |spec| = {} (spectrum {}; {why})", spec.len(), fmt_set(&spec)),
                ))
            }
            None => {
                let g: PermGroup = direct_power(&f.group, 2).with_name(pow_name.clone());
                an.facts(&pow_name, &g).and_then(|pf| {
                    let w = pf.omega()?;
                    let ch = pf.characteristic_subgroups()?.len();
                    let normal = pf.normal_subgroups().len();
                    let char_simple = ch == 2 && normal > 2;
                    Ok((
                        if char_simple { w } else { 0 },
                        format!(
                            "omega={w}; {ch} characteristic and {normal} normal subgroups (characteristically simple, not simple: {char_simple})"
                        ),
                    ))
                })
            }
        };
        match bound {
            Ok((w, evidence)) => out.verdicts.push(Verdict::from_bool(
                w >= 7 && primes >= 3,
                CHECK,
                &pow_name,
                format!("{evidence}; |pi(H)|={primes}"),
            )),
            Err(err) => out.verdicts.push(error_verdict(CHECK, &pow_name, &err)),
        }
    }
    out.notes.push(format!("{} nonabelian simple groups up to isomorphism", reps.len()));
}

/// The prime used with `N` in the coprime product check.
pub fn coprime_prime(order: u128) -> u64 {
    [7u64, 11].into_iter().find(|&p| !order.is_multiple_of(p as u128)).expect("7 or 11 is coprime")
}

fn lemma_2_4(opts: &VerifyOptions, an: &Analyzer, out: &mut TargetReport) {
    const CHECK: &str = "lemma-2-4";
    for n in FAMILY_BASES {
        let run = || -> Result<Verdict, GroupError> {
            let nf = an.catalog(n)?;
            let p = coprime_prime(nf.order());
            let name = format!("DP({n},C{p})");
            if let Some(why) = out_of_reach(nf.order() * p as u128, opts) {
                return Ok(Verdict::skip(CHECK, &name, why));
            }
            let mf = an.catalog(&name)?;
            let w = mf.omega()?;
            Ok(Verdict::from_bool(
                w >= 8,
                CHECK,
                &name,
                format!("omega={w} >= 8; omega({n})={}, gcd(|N|,{p})=1", nf.omega()?),
            ))
        };
        out.verdicts.push(run().unwrap_or_else(|e| error_verdict(CHECK, n, &e)));
    }
}

fn prop_2_7(opts: &VerifyOptions, an: &Analyzer, out: &mut TargetReport) {
    const CHECK: &str = "prop-2-7";
    for n in FAMILY_BASES {
        let family = match (an.catalog(n), extension_family(n)) {
            (Ok(nf), Ok(fam)) => (nf, fam),
            (Err(e), _) | (_, Err(e)) => {
                out.verdicts.push(error_verdict(CHECK, n, &e));
                continue;
            }
        };
        let (nf, fam) = family;
        for m in fam {
            let name = m.group.label();
            let subject = format!("{name} (N={n}, p={})", m.prime);
            if let Some(why) = out_of_reach(m.group.order(), opts) {
                out.verdicts.push(Verdict::skip(CHECK, &subject, why));
                continue;
            }
            let run = || -> Result<Verdict, GroupError> {
                let mf = an.facts(&name, &m.group)?;
                if mf.order() != nf.order() * m.prime as u128 {
                    return Ok(Verdict::fail(CHECK, &subject, format!("order {} is not p|N|", mf.order())));
                }
                let normal_copy = mf
                    .normal_subgroups()
                    .iter()
                    .filter(|r| r.order() as u128 == nf.order())
                    .find_map(|r| {
                        let rt = crate::table::ElementTable::new(&r.subgroup).ok()?;
                        isomorphic_tables(&rt, &nf.table)
                    });
                let Some(w) = normal_copy else {
                    return Ok(Verdict::fail(CHECK, &subject, format!("no normal subgroup isomorphic to {n}")));
                };
                let normal = format!("normal copy of {n} via {}", fmt_witness(&w));
                if *n == "PSL2(8)" && m.prime == 7 {
                    let omega = mf.omega()?;
                    return Ok(Verdict::from_bool(
                        omega >= 7,
                        CHECK,
                        &subject,
                        format!("direct-product branch: omega={omega} >= 7; {normal}"),
                    ));
                }
                Ok(Verdict::from_bool(
                    mf.spectrum.len() >= 6,
                    CHECK,
                    &subject,
                    format!("|spec|={} spectrum {}; {normal}", mf.spectrum.len(), fmt_set(&mf.spectrum)),
                ))
            };
            out.verdicts.push(run().unwrap_or_else(|e| error_verdict(CHECK, &subject, &e)));
        }
    }
}

/// Builds a catalog group for a target, for callers outside a corpus.
pub fn catalog_entry(name: &str) -> Result<CorpusEntry, GroupError> {
    Ok(CorpusEntry {
        name: name.to_string(),
        group: build(name)?,
        claims: Vec::new(),
        origin: Origin::Catalog,
    })
}
