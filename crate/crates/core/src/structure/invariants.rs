use std::collections::BTreeSet;

use crate::group::PermGroup;
use crate::numbers::{factorize, is_prime};
use crate::perm::lcm;
use crate::structure::normal::normal_subgroups;
use crate::structure::subgroup::IndexSubgroup;
use crate::table::ElementTable;

/// Set of element orders.
pub fn spectrum(t: &ElementTable) -> BTreeSet<u32> {
    (0..t.len()).map(|i| t.order_of(i)).collect()
}

/// Primes dividing `|G|`.
pub fn prime_set(g: &PermGroup) -> BTreeSet<u64> {
    factorize(g.order()).into_iter().map(|(p, _)| p).collect()
}

/// Exactly two normal subgroups. The trivial group is not simple.
pub fn is_simple(t: &ElementTable) -> bool {
    t.len() > 1 && normal_subgroups(t).len() == 2
}

/// Abelian with prime exponent.
pub fn is_elementary_abelian(g: &PermGroup) -> bool {
    if !g.is_abelian() {
        return false;
    }
    let exponent = g.generators().iter().fold(1u64, |acc, p| lcm(acc, p.order()));
    is_prime(exponent)
}

/// Elements commuting with every member of `set`.
pub fn centralizer(t: &ElementTable, set: &[usize]) -> PermGroup {
    centralizer_index_set(t, set).to_perm_group(t)
}

pub(crate) fn centralizer_index_set(t: &ElementTable, set: &[usize]) -> IndexSubgroup {
    let members: Vec<usize> = (0..t.len())
        .filter(|&x| set.iter().all(|&s| t.commute(x, s)))
        .collect();
    IndexSubgroup::generated_by(t, members)
}

pub fn center(t: &ElementTable) -> PermGroup {
    centralizer(t, &t.generator_indices())
}
