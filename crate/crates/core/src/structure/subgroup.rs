//! Subgroups of an enumerated group, held as element-index sets.

use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::table::ElementTable;

/// A subgroup of a tabled group: membership flags, element list and the
/// generators that produced it.
#[derive(Clone, Debug)]
pub struct IndexSubgroup {
    member: Vec<bool>,
    elements: Vec<u32>,
    gens: Vec<u32>,
}

impl IndexSubgroup {
    pub fn trivial(t: &ElementTable) -> IndexSubgroup {
        let mut member = vec![false; t.len()];
        member[t.identity()] = true;
        IndexSubgroup {
            member,
            elements: vec![t.identity() as u32],
            gens: Vec::new(),
        }
    }

    pub fn generated_by(t: &ElementTable, gens: impl IntoIterator<Item = usize>) -> IndexSubgroup {
        let mut h = IndexSubgroup::trivial(t);
        for g in gens {
            h.extend(t, g);
        }
        h
    }

    pub fn whole(t: &ElementTable) -> IndexSubgroup {
        Self::generated_by(t, t.generator_indices())
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.member[i]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    /// Sorted member indices.
    pub fn members(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements.iter().map(|&i| i as usize).collect();
        v.sort_unstable();
        v
    }

    pub fn membership(&self) -> &[bool] {
        &self.member
    }

    /// Adjoins `g` (Dimino's step): the new subgroup is a union of right
    /// cosets of the old one, closed under right multiplication by every
    /// generator. Returns false if `g` was already a member.
    pub fn extend(&mut self, t: &ElementTable, g: usize) -> bool {
        if self.member[g] {
            return false;
        }
        self.gens.push(g as u32);
        let base: Vec<u32> = self.elements.clone();
        let mut reps: Vec<usize> = vec![t.identity()];
        self.add_coset(t, &base, g);
        reps.push(g);
        let mut r = 0;
        while r < reps.len() {
            let rep = reps[r];
            r += 1;
            for k in 0..self.gens.len() {
                let s = self.gens[k] as usize;
                let x = t.mul(rep, s);
                if !self.member[x] {
                    self.add_coset(t, &base, x);
                    reps.push(x);
                }
            }
        }
        true
    }

    fn add_coset(&mut self, t: &ElementTable, base: &[u32], x: usize) {
        for &h in base {
            let y = t.mul(h as usize, x);
            debug_assert!(!self.member[y]);
            self.member[y] = true;
            self.elements.push(y as u32);
        }
    }

    /// Smallest subgroup containing both.
    pub fn join(&self, t: &ElementTable, other: &IndexSubgroup) -> IndexSubgroup {
        let mut j = self.clone();
        for &g in &other.gens {
            j.extend(t, g as usize);
        }
        j
    }

    pub fn is_subset_of(&self, other: &IndexSubgroup) -> bool {
        self.elements.iter().all(|&i| other.member[i as usize])
    }

    /// Closed under conjugation by the parent's generators.
    pub fn is_normal(&self, t: &ElementTable) -> bool {
        let pg = t.generator_indices();
        self.gens
            .iter()
            .all(|&n| pg.iter().all(|&g| self.member[t.conj(n as usize, g)]))
    }

    pub fn to_perm_group(&self, t: &ElementTable) -> PermGroup {
        let deg = t.group().degree();
        if self.gens.is_empty() {
            return PermGroup::trivial(deg);
        }
        let gens: Vec<Permutation> = self
            .gens
            .iter()
            .map(|&g| t.element(g as usize).clone())
            .collect();
        PermGroup::new(deg, gens).expect("subgroup generators share the parent degree")
    }

    pub fn is_abelian(&self, t: &ElementTable) -> bool {
        self.gens.iter().enumerate().all(|(i, &a)| {
            self.gens[i + 1..]
                .iter()
                .all(|&b| t.commute(a as usize, b as usize))
        })
    }
}

/// Index set of a subgroup given as a permutation group inside `t`.
pub fn index_subgroup_of(t: &ElementTable, h: &PermGroup) -> Option<IndexSubgroup> {
    let idx: Option<Vec<usize>> = h.generators().iter().map(|g| t.index_of(g)).collect();
    Some(IndexSubgroup::generated_by(t, idx?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimino_matches_order() {
        let s4 = PermGroup::from_cycles(4, &["(1 2 3 4)", "(1 2)"]).unwrap();
        let t = ElementTable::new(&s4).unwrap();
        let h = IndexSubgroup::whole(&t);
        assert_eq!(h.len(), 24);
        let v4 = PermGroup::from_cycles(4, &["(1 2)(3 4)", "(1 3)(2 4)"]).unwrap();
        let v = index_subgroup_of(&t, &v4).unwrap();
        assert_eq!(v.len(), 4);
        assert!(v.is_normal(&t));
        let c2 = PermGroup::from_cycles(4, &["(1 2)"]).unwrap();
        let c = index_subgroup_of(&t, &c2).unwrap();
        assert!(!c.is_normal(&t));
        assert_eq!(v.join(&t, &c).len(), 8);
    }
}
