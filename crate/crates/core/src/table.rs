//! Exhaustive element listings.

use rustc_hash::FxHashMap;

use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Default maximum number of elements an [`ElementTable`] may hold.
pub const DEFAULT_ELEMENT_CAP: usize = 250_000;
/// Product tables are cached only up to this order.
pub const MULT_CACHE_MAX: usize = 5_000;
/// Environment variable overriding [`DEFAULT_ELEMENT_CAP`].
pub const ELEMENT_CAP_ENV: &str = "AUTORBIT_ELEMENT_CAP";

/// The element cap in effect: `AUTORBIT_ELEMENT_CAP` if set and valid,
/// otherwise [`DEFAULT_ELEMENT_CAP`].
pub fn element_cap() -> usize {
    std::env::var(ELEMENT_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ELEMENT_CAP)
}

/// All elements of a group, sorted lexicographically by image sequence,
/// with index lookup, inverses, element orders and right multiplication by
/// the stored generators.
pub struct ElementTable {
    group: PermGroup,
    elements: Vec<Permutation>,
    index: FxHashMap<Permutation, u32>,
    identity: usize,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    /// `right[k][i]` = index of `elements[i] * generators[k]`.
    right: Vec<Vec<u32>>,
    mult: Option<Vec<u16>>,
}

impl ElementTable {
    pub fn new(group: &PermGroup) -> Result<ElementTable> {
        Self::with_cap(group, element_cap())
    }

    pub fn with_cap(group: &PermGroup, cap: usize) -> Result<ElementTable> {
        let order = group.order();
        if order > cap as u128 {
            return Err(GroupError::Capacity { order, cap });
        }
        let n = order as usize;
        let deg = group.degree();
        let gens: Vec<&Permutation> = group.generators().iter().collect();

        let mut seen: FxHashMap<Permutation, u32> = FxHashMap::default();
        seen.reserve(n);
        let mut elements = vec![Permutation::identity(deg)];
        seen.insert(elements[0].clone(), 0);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in &gens {
                let y = x.then(g);
                if !seen.contains_key(&y) {
                    seen.insert(y.clone(), elements.len() as u32);
                    elements.push(y);
                }
            }
        }
        if elements.len() != n {
            return Err(GroupError::Internal(format!(
                "closure found {} elements but the stabilizer chain reports {}",
                elements.len(),
                n
            )));
        }
        drop(seen);
        elements.sort();
        let mut index = FxHashMap::default();
        index.reserve(n);
        for (i, e) in elements.iter().enumerate() {
            index.insert(e.clone(), i as u32);
        }
        let identity = index[&Permutation::identity(deg)] as usize;
        let inverse = elements.iter().map(|e| index[&e.inverse()]).collect();
        let orders = elements.iter().map(|e| e.order() as u32).collect();
        let right = gens
            .iter()
            .map(|g| elements.iter().map(|e| index[&e.then(g)]).collect())
            .collect();

        let mut table = ElementTable {
            group: group.clone(),
            elements,
            index,
            identity,
            inverse,
            orders,
            right,
            mult: None,
        };
        if n <= MULT_CACHE_MAX {
            table.mult = Some(table.build_mult());
        }
        Ok(table)
    }

    /// Full product table filled along a breadth-first spanning tree of the
    /// Cayley graph, so each entry costs one lookup instead of a hash.
    fn build_mult(&self) -> Vec<u16> {
        let n = self.len();
        let (order, parent, via) = self.spanning_tree();
        let mut mult = vec![0u16; n * n];
        for i in 0..n {
            let row = &mut mult[i * n..(i + 1) * n];
            row[self.identity] = i as u16;
            for &j in &order[1..] {
                let j = j as usize;
                let p = parent[j] as usize;
                row[j] = self.right[via[j] as usize][row[p] as usize] as u16;
            }
        }
        mult
    }

    /// Breadth-first spanning tree of the Cayley graph for the stored
    /// generators: visiting order, parent index, and generator used.
    pub(crate) fn spanning_tree(&self) -> (Vec<u32>, Vec<u32>, Vec<u32>) {
        let n = self.len();
        let mut parent = vec![u32::MAX; n];
        let mut via = vec![u32::MAX; n];
        let mut order = vec![self.identity as u32];
        parent[self.identity] = self.identity as u32;
        let mut head = 0;
        while head < order.len() {
            let x = order[head] as usize;
            head += 1;
            for (k, r) in self.right.iter().enumerate() {
                let y = r[x] as usize;
                if parent[y] == u32::MAX {
                    parent[y] = x as u32;
                    via[y] = k as u32;
                    order.push(y as u32);
                }
            }
        }
        (order, parent, via)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn has_mult_cache(&self) -> bool {
        self.mult.is_some()
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match &self.mult {
            Some(m) => m[i * self.len() + j] as usize,
            None => self.index[&self.elements[i].then(&self.elements[j])] as usize,
        }
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    #[inline]
    pub fn order_of(&self, i: usize) -> u32 {
        self.orders[i]
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        match &self.mult {
            Some(_) => self.mul(self.mul(self.inv(g), x), g),
            None => {
                let p = self.elements[g].conjugate(&self.elements[x]);
                self.index[&p] as usize
            }
        }
    }

    pub fn pow(&self, i: usize, k: u64) -> usize {
        let e = k % self.orders[i] as u64;
        match &self.mult {
            Some(_) => {
                let mut acc = self.identity;
                for _ in 0..e {
                    acc = self.mul(acc, i);
                }
                acc
            }
            None => self.index[&self.elements[i].pow(e)] as usize,
        }
    }

    pub fn commute(&self, i: usize, j: usize) -> bool {
        self.mul(i, j) == self.mul(j, i)
    }

    /// Right multiplication by the `k`-th stored generator.
    #[inline]
    pub fn right_gen(&self, k: usize, i: usize) -> usize {
        self.right[k][i] as usize
    }

    pub fn num_generators(&self) -> usize {
        self.right.len()
    }

    /// Table indices of the stored generators.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.group
            .generators()
            .iter()
            .map(|g| self.index[g] as usize)
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.group.is_abelian()
    }

    pub fn order(&self) -> u64 {
        self.len() as u64
    }
}

impl std::fmt::Debug for ElementTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ElementTable")
            .field("group", &self.group.label())
            .field("len", &self.len())
            .field("mult_cached", &self.mult.is_some())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_basics() {
        let t = ElementTable::new(&PermGroup::trivial(1)).unwrap();
        assert_eq!(t.len(), 1);
        let s3 = PermGroup::from_cycles(3, &["(1 2 3)", "(1 2)"]).unwrap();
        let t = ElementTable::new(&s3).unwrap();
        assert_eq!(t.len(), 6);
        for w in t.elements().windows(2) {
            assert!(w[0] < w[1]);
        }
        for i in 0..t.len() {
            assert_eq!(t.index_of(t.element(i)), Some(i));
            assert_eq!(t.mul(i, t.inv(i)), t.identity());
        }
    }

    #[test]
    fn cached_and_uncached_products_agree() {
        let s4 = PermGroup::from_cycles(4, &["(1 2 3 4)", "(1 2)"]).unwrap();
        let t = ElementTable::new(&s4).unwrap();
        assert!(t.has_mult_cache());
        for i in 0..t.len() {
            for j in 0..t.len() {
                let p = t.element(i).then(t.element(j));
                assert_eq!(t.mul(i, j), t.index_of(&p).unwrap());
            }
        }
    }

    #[test]
    fn capacity_error_names_order() {
        let s5 = PermGroup::from_cycles(5, &["(1 2 3 4 5)", "(1 2)"]).unwrap();
        match ElementTable::with_cap(&s5, 100) {
            Err(GroupError::Capacity { order: 120, cap: 100 }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }
}
