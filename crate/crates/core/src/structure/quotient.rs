use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure::normal::SubgroupRecord;
use crate::structure::subgroup::{index_subgroup_of, IndexSubgroup};
use crate::table::ElementTable;

/// `G/N` as a permutation group on the right cosets of `N`. Cosets are
/// numbered by their smallest member index.
pub fn quotient(t: &ElementTable, n: &SubgroupRecord) -> Result<PermGroup> {
    quotient_by_index_set(t, n.index_set())
}

/// Same as [`quotient`] with `N` given by generators inside `G`.
pub fn quotient_by(t: &ElementTable, n: &PermGroup) -> Result<PermGroup> {
    let h = index_subgroup_of(t, n).ok_or(GroupError::NotInGroup)?;
    quotient_by_index_set(t, &h)
}

pub(crate) fn quotient_by_index_set(t: &ElementTable, n: &IndexSubgroup) -> Result<PermGroup> {
    if !n.is_normal(t) {
        return Err(GroupError::NotNormal);
    }
    let (coset_of, reps) = right_cosets(t, n);
    let index = reps.len();
    let gens: Vec<Permutation> = t
        .generator_indices()
        .into_iter()
        .map(|g| {
            let images = reps
                .iter()
                .map(|&r| coset_of[t.mul(r, g)])
                .collect::<Vec<u32>>();
            Permutation::from_raw(images)
        })
        .collect();
    PermGroup::new(index, gens)
}

/// Coset id per element and the smallest member of each coset.
pub(crate) fn right_cosets(t: &ElementTable, n: &IndexSubgroup) -> (Vec<u32>, Vec<usize>) {
    let members = n.members();
    let mut coset_of = vec![u32::MAX; t.len()];
    let mut reps = Vec::new();
    for x in 0..t.len() {
        if coset_of[x] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &m in &members {
            coset_of[t.mul(m, x)] = id;
        }
    }
    (coset_of, reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::normal::normal_subgroups;

    #[test]
    fn s4_mod_v4_is_order_six() {
        let s4 = PermGroup::from_cycles(4, &["(1 2 3 4)", "(1 2)"]).unwrap();
        let t = ElementTable::new(&s4).unwrap();
        let ns = normal_subgroups(&t);
        let v4 = ns.iter().find(|r| r.order() == 4).unwrap();
        let q = quotient(&t, v4).unwrap();
        assert_eq!(q.degree(), 6);
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        let triv = &ns[0];
        let reg = quotient(&t, triv).unwrap();
        assert_eq!((reg.degree(), reg.order()), (24, 24));
    }

    #[test]
    fn non_normal_rejected() {
        let s3 = PermGroup::from_cycles(3, &["(1 2 3)", "(1 2)"]).unwrap();
        let t = ElementTable::new(&s3).unwrap();
        let c2 = PermGroup::from_cycles(3, &["(1 2)"]).unwrap();
        assert!(matches!(quotient_by(&t, &c2), Err(GroupError::NotNormal)));
    }
}
