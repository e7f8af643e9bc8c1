use crate::aut::Automorphism;
use crate::table::ElementTable;

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let gp = self.parent[self.parent[x] as usize];
            self.parent[x] = gp;
            x = gp as usize;
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a as u32;
        self.size[a] += self.size[b];
        true
    }

    /// Groups `0..n` by root, each group sorted, groups ordered by their
    /// smallest member.
    pub fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let r = self.find(x);
            by_root[r].push(x);
        }
        let mut out: Vec<Vec<usize>> = by_root.into_iter().filter(|g| !g.is_empty()).collect();
        out.sort_by_key(|g| g[0]);
        out
    }
}

/// Orbits of a group of automorphisms acting on element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Sorted index sets, ordered by element order, then size, then
    /// smallest member.
    pub cells: Vec<Vec<usize>>,
    pub cell_orders: Vec<u32>,
}

impl OrbitPartition {
    pub(crate) fn from_cells(t: &ElementTable, mut cells: Vec<Vec<usize>>) -> OrbitPartition {
        for c in cells.iter_mut() {
            c.sort_unstable();
        }
        cells.sort_by_key(|c| (t.order_of(c[0]), c.len(), c[0]));
        let cell_orders = cells.iter().map(|c| t.order_of(c[0])).collect();
        OrbitPartition { cells, cell_orders }
    }

    /// ω: the number of cells.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Cell id for every element index.
    pub fn cell_of(&self, n: usize) -> Vec<u32> {
        let mut v = vec![u32::MAX; n];
        for (ci, c) in self.cells.iter().enumerate() {
            for &x in c {
                v[x] = ci as u32;
            }
        }
        v
    }

    /// `(element order, cell size)` per cell.
    pub fn census(&self) -> Vec<(u32, usize)> {
        self.cell_orders
            .iter()
            .zip(&self.cells)
            .map(|(&o, c)| (o, c.len()))
            .collect()
    }
}

/// Union-find closure of the element indices under the given maps.
pub fn orbit_partition(t: &ElementTable, gens: &[Automorphism]) -> OrbitPartition {
    let mut uf = UnionFind::new(t.len());
    for a in gens {
        for (x, &y) in a.element_map().iter().enumerate() {
            uf.union(x, y as usize);
        }
    }
    OrbitPartition::from_cells(t, uf.groups())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_find_groups() {
        let mut uf = UnionFind::new(6);
        uf.union(0, 3);
        uf.union(4, 5);
        uf.union(3, 5);
        assert_eq!(uf.groups(), vec![vec![0, 3, 4, 5], vec![1], vec![2]]);
        assert!(!uf.union(0, 4));
    }
}
