use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::numbers::{is_prime, p_part};
use crate::structure::subgroup::IndexSubgroup;
use crate::table::ElementTable;

fn is_p_power(mut n: u32, p: u32) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// A Sylow `p`-subgroup, grown from a cyclic subgroup of maximal `p`-power
/// order by adjoining `p`-elements of the normalizer.
pub fn sylow_subgroup(t: &ElementTable, p: u64) -> Result<PermGroup> {
    Ok(sylow_index_set(t, p)?.to_perm_group(t))
}

pub(crate) fn sylow_index_set(t: &ElementTable, p: u64) -> Result<IndexSubgroup> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let order = t.len() as u128;
    if !order.is_multiple_of(p as u128) {
        return Err(GroupError::NotDividing { p, order });
    }
    let target = p_part(order, p) as usize;
    let pu = p as u32;
    let p_elements: Vec<usize> = (0..t.len())
        .filter(|&i| t.order_of(i) > 1 && is_p_power(t.order_of(i), pu))
        .collect();
    let start = *p_elements
        .iter()
        .max_by_key(|&&i| (t.order_of(i), std::cmp::Reverse(i)))
        .expect("p divides the order, so a p-element exists");
    let mut h = IndexSubgroup::generated_by(t, [start]);
    while h.len() < target {
        let gens: Vec<usize> = h.generators().iter().map(|&g| g as usize).collect();
        // a p-element normalizing H but outside it keeps <H, y> a p-group;
        // one exists whenever H is not yet Sylow
        let next = p_elements.iter().copied().find(|&y| {
            !h.contains(y) && gens.iter().all(|&s| h.contains(t.conj(s, y)))
        });
        match next {
            Some(y) => {
                h.extend(t, y);
            }
            None => {
                return Err(GroupError::Internal(format!(
                    "Sylow {p}-chain stalled at order {}",
                    h.len()
                )))
            }
        }
    }
    debug_assert_eq!(h.len(), target);
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a5_sylows() {
        let a5 = PermGroup::from_cycles(5, &["(1 2 3 4 5)", "(3 4 5)"]).unwrap();
        let t = ElementTable::new(&a5).unwrap();
        assert_eq!(sylow_subgroup(&t, 2).unwrap().order(), 4);
        let p5 = sylow_subgroup(&t, 5).unwrap();
        assert_eq!(p5.order(), 5);
        assert!(p5.is_abelian());
        assert!(matches!(sylow_subgroup(&t, 7), Err(GroupError::NotDividing { .. })));
        assert!(matches!(sylow_subgroup(&t, 4), Err(GroupError::NotPrime(4))));
    }

    #[test]
    fn s4_sylow_two_is_dihedral() {
        let s4 = PermGroup::from_cycles(4, &["(1 2 3 4)", "(1 2)"]).unwrap();
        let t = ElementTable::new(&s4).unwrap();
        let p = sylow_subgroup(&t, 2).unwrap();
        assert_eq!(p.order(), 8);
        assert!(!p.is_abelian());
    }
}
