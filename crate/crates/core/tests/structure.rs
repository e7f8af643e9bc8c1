mod common;

use std::collections::BTreeSet;

use autorbit::catalog::build;
use autorbit::structure::{
    center, centralizer, conjugacy_classes, derived_series, derived_subgroup, direct_power, direct_product,
    index_subgroup_of, is_elementary_abelian, is_isomorphic, is_simple, is_solvable, isomorphic, normal_subgroups,
    prime_set, quotient, quotient_by, spectrum, sylow_subgroup,
};
use autorbit::table::ElementTable;
use autorbit::verify::Corpus;
use autorbit::{GroupError, PermGroup, Permutation};

fn table(name: &str) -> ElementTable {
    ElementTable::new(&build(name).unwrap()).unwrap()
}

fn set(v: &[u32]) -> BTreeSet<u32> {
    v.iter().copied().collect()
}

#[test]
fn class_examples() {
    let mut sizes: Vec<usize> = conjugacy_classes(&table("A5")).iter().map(|c| c.size).collect();
    sizes.sort();
    assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
    assert_eq!(conjugacy_classes(&table("trivial")).len(), 1);
    let v4 = conjugacy_classes(&table("E2^2"));
    assert_eq!(v4.len(), 4);
    assert!(v4.iter().all(|c| c.size == 1));
}

#[test]
fn solvability_examples() {
    assert!(is_solvable(&build("C6").unwrap()));
    let s4 = build("S4").unwrap();
    let series: Vec<u128> = derived_series(&s4).iter().map(|g| g.order()).collect();
    assert_eq!(series, vec![24, 12, 4, 1]);
    assert!(is_solvable(&s4));
    let a5 = build("A5").unwrap();
    assert_eq!(derived_subgroup(&a5).order(), 60);
    assert!(!is_solvable(&a5));
}

#[test]
fn normal_subgroup_examples() {
    let orders: Vec<usize> = normal_subgroups(&table("S4")).iter().map(|r| r.order()).collect();
    assert_eq!(orders, vec![1, 4, 12, 24]);
    assert_eq!(normal_subgroups(&table("A5")).len(), 2);
    assert_eq!(normal_subgroups(&table("E2^2")).len(), 5);
}

#[test]
fn normal_subgroups_match_exhaustive_scan() {
    let corpus = Corpus::default_corpus().unwrap();
    let mut checked = 0;
    for e in corpus.entries.iter().filter(|e| e.group.order() <= 48) {
        let brute = common::Brute::new(&e.group);
        let expected: BTreeSet<BTreeSet<Permutation>> = brute
            .all_subgroups()
            .into_iter()
            .filter(|h| brute.is_normal(h))
            .map(|h| h.iter().map(|&i| brute.elements[i].clone()).collect())
            .collect();
        let t = ElementTable::new(&e.group).unwrap();
        let got: BTreeSet<BTreeSet<Permutation>> = normal_subgroups(&t)
            .iter()
            .map(|r| r.members.iter().map(|&i| t.element(i).clone()).collect())
            .collect();
        assert_eq!(got, expected, "{}", e.name);
        checked += 1;
    }
    assert!(checked >= 15);
}

#[test]
fn quotient_examples() {
    let s4 = table("S4");
    let v4 = normal_subgroups(&s4).into_iter().find(|r| r.order() == 4).unwrap();
    let q = quotient(&s4, &v4).unwrap();
    assert_eq!(q.order(), 6);
    assert!(is_isomorphic(&q, &build("S3").unwrap()).unwrap());
    let g = table("D4");
    let trivial = normal_subgroups(&g).into_iter().next().unwrap();
    let regular = quotient(&g, &trivial).unwrap();
    assert_eq!(regular.degree(), 8);
    assert!(is_isomorphic(&regular, &build("D4").unwrap()).unwrap());
    let asl = table("ASL24A");
    let n = normal_subgroups(&asl).into_iter().find(|r| r.order() == 16).unwrap();
    let q = quotient(&asl, &n).unwrap();
    assert_eq!(q.order(), 60);
    assert!(is_isomorphic(&q, &build("A5").unwrap()).unwrap());
    let c3 = PermGroup::from_cycles(4, &["(1 2 3)"]).unwrap();
    assert!(matches!(quotient_by(&table("A4"), &c3), Err(GroupError::NotNormal)));
}

#[test]
fn quotient_laws_on_small_groups() {
    for name in ["S4", "D5", "Q8", "AGL1(7)", "S5", "ASL24B"] {
        let t = table(name);
        for n in normal_subgroups(&t) {
            let q = quotient(&t, &n).unwrap();
            assert_eq!(q.order() * n.order() as u128, t.len() as u128, "{name}");
        }
        let d = derived_subgroup(t.group());
        assert!(quotient_by(&t, &d).unwrap().is_abelian(), "{name}");
    }
}

#[test]
fn product_examples() {
    let a5 = build("A5").unwrap();
    assert_eq!(direct_power(&a5, 2).order(), 3600);
    let m = direct_product(&a5, &build("C7").unwrap());
    assert_eq!(m.order(), 420);
    assert_eq!(prime_set(&m), [2, 3, 5, 7].into());
    assert_eq!(direct_product(&a5, &PermGroup::trivial(1)).order(), 60);
}

#[test]
fn centralizer_examples() {
    assert_eq!(center(&table("Q8")).order(), 2);
    assert_eq!(center(&table("A5")).order(), 1);
    let s3 = table("S3");
    let r = s3.index_of(&Permutation::parse_cycles("(1 2 3)", 3).unwrap()).unwrap();
    assert_eq!(centralizer(&s3, &[r]).order(), 3);
}

#[test]
fn sylow_examples() {
    let a5 = table("A5");
    assert_eq!(sylow_subgroup(&a5, 2).unwrap().order(), 4);
    let p5 = sylow_subgroup(&a5, 5).unwrap();
    assert_eq!(p5.order(), 5);
    assert!(p5.is_abelian());
    assert_eq!(sylow_subgroup(&table("ASL24A"), 2).unwrap().order(), 64);
    assert!(matches!(sylow_subgroup(&a5, 7), Err(GroupError::NotDividing { .. })));
}

#[test]
fn sylow_conjugates_are_sylow() {
    for (name, p) in [("S4", 2), ("A5", 3), ("PSL2(7)", 2), ("AGL1(8)", 7)] {
        let t = table(name);
        let s = sylow_subgroup(&t, p).unwrap();
        for g in t.group().generators() {
            let conj: Vec<Permutation> = s.generators().iter().map(|x| g.conjugate(x)).collect();
            let c = PermGroup::new(s.degree(), conj).unwrap();
            assert_eq!(c.order(), s.order());
            assert!(index_subgroup_of(&t, &c).is_some());
        }
    }
}

#[test]
fn isomorphism_examples() {
    let a5 = build("A5").unwrap();
    assert!(is_isomorphic(&build("PSL2(4)").unwrap(), &a5).unwrap());
    assert!(is_isomorphic(&build("PSL2(5)").unwrap(), &a5).unwrap());
    assert!(!is_isomorphic(&a5, &build("A6").unwrap()).unwrap());
    assert!(!is_isomorphic(&build("S3").unwrap(), &build("C6").unwrap()).unwrap());
    let w = isomorphic(&build("PSL2(9)").unwrap(), &build("A6").unwrap()).unwrap().unwrap();
    assert_eq!(w.graph_order, 360);
    assert_eq!(w.source_generators.len(), w.image_elements.len());
}

#[test]
fn isomorphism_reflexive_and_symmetric() {
    let corpus = Corpus::default_corpus().unwrap();
    for e in corpus.entries.iter().filter(|e| e.group.order() <= 1000) {
        assert!(is_isomorphic(&e.group, &e.group).unwrap(), "{}", e.name);
    }
    let pairs = [
        ("A4", "AGL1(4)"),
        ("S4", "PGL2(3)"),
        ("S5", "PGammaL2(4)"),
        ("D4", "Q8"),
        ("E2^3", "DP(C2,DP(C2,C2))"),
        ("S6", "PSigmaL2(9)"),
        ("M10", "PGL2(9)"),
    ];
    for (a, b) in pairs {
        let (Ok(ga), Ok(gb)) = (build(a), build(b)) else { continue };
        assert_eq!(is_isomorphic(&ga, &gb).unwrap(), is_isomorphic(&gb, &ga).unwrap(), "{a} {b}");
    }
    assert!(is_isomorphic(&build("S5").unwrap(), &build("PGammaL2(4)").unwrap()).unwrap());
    assert!(is_isomorphic(&build("S6").unwrap(), &build("PSigmaL2(9)").unwrap()).unwrap());
    assert!(!is_isomorphic(&build("M10").unwrap(), &build("PGL2(9)").unwrap()).unwrap());
    assert!(!is_isomorphic(&build("D4").unwrap(), &build("Q8").unwrap()).unwrap());
}

#[test]
fn invariant_examples() {
    assert_eq!(spectrum(&table("A5")), set(&[1, 2, 3, 5]));
    assert_eq!(spectrum(&table("PSL2(8)")), set(&[1, 2, 3, 7, 9]));
    assert_eq!(spectrum(&table("S5")), set(&[1, 2, 3, 4, 5, 6]));
    assert!(!is_elementary_abelian(&build("C4").unwrap()));
    assert!(is_elementary_abelian(&build("E2^2").unwrap()));
    let trivial = table("trivial");
    assert!(!is_simple(&trivial));
    assert_eq!(spectrum(&trivial), set(&[1]));
    assert!(prime_set(trivial.group()).is_empty());
    assert!(is_simple(&table("A5")));
}

#[test]
fn squares_of_simple_groups_have_three_primes() {
    for name in ["A5", "PSL2(7)", "PSL2(8)", "A6", "PSL3(4)"] {
        let h = build(name).unwrap();
        assert!(prime_set(&direct_power(&h, 2)).len() >= 3, "{name}");
    }
}
