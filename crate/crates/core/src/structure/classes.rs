use crate::table::ElementTable;

/// A conjugacy class, by element indices of an [`ElementTable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    /// Smallest member index.
    pub representative: usize,
    pub members: Vec<usize>,
    pub element_order: u32,
    pub size: usize,
}

/// Conjugacy classes plus the element → class lookup.
#[derive(Clone, Debug)]
pub struct ClassPartition {
    classes: Vec<ConjClass>,
    class_of: Vec<u32>,
}

impl ClassPartition {
    /// Orbits of conjugation, ordered by element order, then class size,
    /// then representative index.
    pub fn new(t: &ElementTable) -> ClassPartition {
        let n = t.len();
        let gens = t.generator_indices();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut members = vec![start];
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for &g in &gens {
                    let y = t.conj(x, g);
                    if !assigned[y] {
                        assigned[y] = true;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjClass {
                representative: members[0],
                element_order: t.order_of(start),
                size: members.len(),
                members,
            });
        }
        classes.sort_by_key(|c| (c.element_order, c.size, c.representative));
        let mut class_of = vec![0u32; n];
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = ci as u32;
            }
        }
        ClassPartition { classes, class_of }
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn into_classes(self) -> Vec<ConjClass> {
        self.classes
    }

    #[inline]
    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn conjugacy_classes(t: &ElementTable) -> Vec<ConjClass> {
    ClassPartition::new(t).into_classes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermGroup;

    #[test]
    fn abelian_classes_are_singletons() {
        let v = PermGroup::from_cycles(4, &["(1 2)", "(3 4)"]).unwrap();
        let t = ElementTable::new(&v).unwrap();
        let cl = conjugacy_classes(&t);
        assert_eq!(cl.len(), 4);
        assert!(cl.iter().all(|c| c.size == 1));
        let triv = ElementTable::new(&PermGroup::trivial(1)).unwrap();
        assert_eq!(conjugacy_classes(&triv).len(), 1);
    }

    #[test]
    fn s3_classes() {
        let s3 = PermGroup::from_cycles(3, &["(1 2 3)", "(1 2)"]).unwrap();
        let t = ElementTable::new(&s3).unwrap();
        let sizes: Vec<(u32, usize)> = conjugacy_classes(&t)
            .iter()
            .map(|c| (c.element_order, c.size))
            .collect();
        assert_eq!(sizes, vec![(1, 1), (2, 3), (3, 2)]);
    }
}
