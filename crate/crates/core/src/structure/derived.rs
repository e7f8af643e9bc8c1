use crate::group::PermGroup;
use crate::perm::Permutation;

fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
    let ai = a.inverse();
    let bi = b.inverse();
    &(&(&ai * &bi) * a) * b
}

/// Smallest normal subgroup of `g` containing `gens`.
pub fn normal_closure(g: &PermGroup, gens: Vec<Permutation>) -> PermGroup {
    let deg = g.degree();
    let mut cur: Vec<Permutation> = gens.into_iter().filter(|p| !p.is_identity()).collect();
    if cur.is_empty() {
        return PermGroup::trivial(deg);
    }
    let mut n = PermGroup::new(deg, cur.clone()).expect("valid generators");
    let mut k = 0;
    while k < cur.len() {
        let x = cur[k].clone();
        k += 1;
        for s in g.generators() {
            let c = s.conjugate(&x);
            if !n.bsgs().contains(&c) {
                cur.push(c);
                n = PermGroup::new(deg, cur.clone()).expect("valid generators");
            }
        }
    }
    n
}

/// Normal closure of the commutators of the generators.
pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    let gens = g.generators();
    let mut comms = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let c = commutator(&gens[i], &gens[j]);
            if !c.is_identity() && !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    normal_closure(g, comms)
}

/// `G, G', G'', ...` up to the first repeat (the repeated term is not
/// listed twice).
pub fn derived_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        if last.order() == 1 {
            break;
        }
        let d = derived_subgroup(last);
        if d.order() == last.order() {
            break;
        }
        series.push(d);
    }
    series
}

pub fn is_solvable(g: &PermGroup) -> bool {
    derived_series(g).last().unwrap().order() == 1
}

pub fn is_perfect(g: &PermGroup) -> bool {
    derived_subgroup(g).order() == g.order()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solvability_examples() {
        let c6 = PermGroup::from_cycles(6, &["(1 2 3 4 5 6)"]).unwrap();
        assert!(is_solvable(&c6));
        let s4 = PermGroup::from_cycles(4, &["(1 2 3 4)", "(1 2)"]).unwrap();
        let orders: Vec<u128> = derived_series(&s4).iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        let a5 = PermGroup::from_cycles(5, &["(1 2 3 4 5)", "(3 4 5)"]).unwrap();
        assert!(!is_solvable(&a5));
        assert!(is_perfect(&a5));
        assert!(is_solvable(&PermGroup::trivial(1)));
    }
}
