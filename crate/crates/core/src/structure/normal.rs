use rustc_hash::FxHashSet;

use crate::group::PermGroup;
use crate::structure::classes::ClassPartition;
use crate::structure::subgroup::IndexSubgroup;
use crate::table::ElementTable;

/// A subgroup together with what is known about how it sits in its parent.
#[derive(Clone, Debug)]
pub struct SubgroupRecord {
    pub subgroup: PermGroup,
    /// Sorted element indices in the parent's table.
    pub members: Vec<usize>,
    pub is_normal: bool,
    /// Filled in by the automorphism layer.
    pub is_characteristic: Option<bool>,
    pub(crate) index_set: IndexSubgroup,
}

impl SubgroupRecord {
    pub fn from_index_set(t: &ElementTable, h: IndexSubgroup) -> SubgroupRecord {
        let is_normal = h.is_normal(t);
        SubgroupRecord {
            subgroup: h.to_perm_group(t),
            members: h.members(),
            is_normal,
            is_characteristic: None,
            index_set: h,
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.index_set.contains(i)
    }

    pub fn index_set(&self) -> &IndexSubgroup {
        &self.index_set
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

/// All normal subgroups: normal closures of the conjugacy classes, then
/// pairwise joins until nothing new appears. Sorted by order, then by
/// member indices.
pub fn normal_subgroups(t: &ElementTable) -> Vec<SubgroupRecord> {
    normal_subgroups_with(t, &ClassPartition::new(t))
}

pub fn normal_subgroups_with(t: &ElementTable, classes: &ClassPartition) -> Vec<SubgroupRecord> {
    let mut seen: FxHashSet<Vec<usize>> = FxHashSet::default();
    let mut list: Vec<IndexSubgroup> = Vec::new();
    let mut push = |h: IndexSubgroup, list: &mut Vec<IndexSubgroup>| {
        let key = h.members();
        if seen.insert(key) {
            list.push(h);
        }
    };
    push(IndexSubgroup::trivial(t), &mut list);
    for c in classes.classes() {
        if c.element_order == 1 {
            continue;
        }
        let h = IndexSubgroup::generated_by(t, c.members.iter().copied());
        push(h, &mut list);
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..i {
            if list[j].is_subset_of(&list[i]) || list[i].is_subset_of(&list[j]) {
                continue;
            }
            let joined = list[i].join(t, &list[j]);
            push(joined, &mut list);
        }
        i += 1;
    }
    let mut records: Vec<SubgroupRecord> = list
        .into_iter()
        .map(|h| {
            let mut r = SubgroupRecord::from_index_set(t, h);
            r.is_normal = true;
            r
        })
        .collect();
    records.sort_by(|a, b| {
        a.members
            .len()
            .cmp(&b.members.len())
            .then_with(|| a.members.cmp(&b.members))
    });
    records
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(g: &PermGroup) -> Vec<usize> {
        let t = ElementTable::new(g).unwrap();
        normal_subgroups(&t).iter().map(|r| r.order()).collect()
    }

    #[test]
    fn s4_a5_v4() {
        let s4 = PermGroup::from_cycles(4, &["(1 2 3 4)", "(1 2)"]).unwrap();
        assert_eq!(orders(&s4), vec![1, 4, 12, 24]);
        let a5 = PermGroup::from_cycles(5, &["(1 2 3 4 5)", "(3 4 5)"]).unwrap();
        assert_eq!(orders(&a5), vec![1, 60]);
        let v4 = PermGroup::from_cycles(4, &["(1 2)", "(3 4)"]).unwrap();
        assert_eq!(orders(&v4), vec![1, 2, 2, 2, 4]);
    }
}
