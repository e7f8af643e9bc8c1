//! Brute-force reference computations. Nothing here uses the library's
//! element tables, stabilizer chains or searches; only permutation
//! composition.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use autorbit::{PermGroup, Permutation};

/// Elements by breadth-first closure under right multiplication.
pub fn closure(g: &PermGroup) -> Vec<Permutation> {
    let id = Permutation::identity(g.degree());
    let mut seen: HashMap<Permutation, usize> = HashMap::new();
    let mut out = vec![id.clone()];
    seen.insert(id, 0);
    let mut q = VecDeque::from([0usize]);
    while let Some(i) = q.pop_front() {
        for s in g.generators() {
            let y = out[i].compose(s).unwrap();
            if !seen.contains_key(&y) {
                seen.insert(y.clone(), out.len());
                q.push_back(out.len());
                out.push(y);
            }
        }
    }
    out
}

/// A group as an explicit multiplication table over its closure.
pub struct Brute {
    pub elements: Vec<Permutation>,
    pub index: HashMap<Permutation, usize>,
    pub mul: Vec<Vec<usize>>,
    pub identity: usize,
}

impl Brute {
    pub fn new(g: &PermGroup) -> Brute {
        let elements = closure(g);
        let index: HashMap<Permutation, usize> =
            elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mul = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.compose(b).unwrap()]).collect())
            .collect();
        Brute {
            identity: index[&Permutation::identity(g.degree())],
            elements,
            index,
            mul,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn order_of(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != self.identity {
            y = self.mul[y][x];
            k += 1;
        }
        k
    }

    /// Small generating set: elements added in index order when not yet
    /// generated.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut have = self.subgroup(&gens);
        for x in 0..self.len() {
            if !have.contains(&x) {
                gens.push(x);
                have = self.subgroup(&gens);
            }
        }
        gens
    }

    pub fn subgroup(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut set = BTreeSet::from([self.identity]);
        let mut q = VecDeque::from([self.identity]);
        while let Some(x) = q.pop_front() {
            for &s in gens {
                let y = self.mul[x][s];
                if set.insert(y) {
                    q.push_back(y);
                }
            }
        }
        set
    }

    /// Extends `gens[i] -> img[i]` along the Cayley graph; `None` if the
    /// assignment is inconsistent or not bijective.
    fn extend(&self, gens: &[usize], img: &[usize]) -> Option<Vec<usize>> {
        let n = self.len();
        let mut map = vec![usize::MAX; n];
        map[self.identity] = self.identity;
        let mut q = VecDeque::from([self.identity]);
        while let Some(x) = q.pop_front() {
            for (k, &s) in gens.iter().enumerate() {
                let y = self.mul[x][s];
                let fy = self.mul[map[x]][img[k]];
                if map[y] == usize::MAX {
                    map[y] = fy;
                    q.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        let distinct: BTreeSet<usize> = map.iter().copied().collect();
        (distinct.len() == n).then_some(map)
    }

    /// Every automorphism, from all tuples of generator images.
    pub fn automorphisms_by_images(&self) -> Vec<Vec<usize>> {
        let gens = self.generators();
        let n = self.len();
        let mut out = Vec::new();
        let mut img = vec![0usize; gens.len()];
        loop {
            if let Some(m) = self.extend(&gens, &img) {
                out.push(m);
            }
            let mut i = 0;
            loop {
                if i == img.len() {
                    return out;
                }
                img[i] += 1;
                if img[i] < n {
                    break;
                }
                img[i] = 0;
                i += 1;
            }
        }
    }

    /// Every automorphism, from all bijections fixing the identity.
    pub fn automorphisms_by_bijections(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let rest: Vec<usize> = (0..n).filter(|&x| x != self.identity).collect();
        let mut out = Vec::new();
        let mut perm = rest.clone();
        // Heap's algorithm over the non-identity elements
        let mut c = vec![0usize; perm.len()];
        let mut visit = |perm: &[usize]| {
            let mut map = vec![0usize; n];
            map[self.identity] = self.identity;
            for (a, &b) in rest.iter().zip(perm) {
                map[*a] = b;
            }
            if (0..n).all(|x| (0..n).all(|y| map[self.mul[x][y]] == self.mul[map[x]][map[y]])) {
                out.push(map);
            }
        };
        visit(&perm);
        let mut i = 0;
        while i < perm.len() {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                visit(&perm);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        out
    }

    /// Orbits of the given maps, as sets of permutations.
    pub fn orbits(&self, maps: &[Vec<usize>]) -> BTreeSet<BTreeSet<Permutation>> {
        let n = self.len();
        let mut cell: Vec<usize> = (0..n).collect();
        let find = |cell: &mut Vec<usize>, mut x: usize| {
            while cell[x] != x {
                x = cell[x];
            }
            x
        };
        for m in maps {
            for (x, &y) in m.iter().enumerate() {
                let (a, b) = (find(&mut cell, x), find(&mut cell, y));
                if a != b {
                    cell[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: HashMap<usize, BTreeSet<Permutation>> = HashMap::new();
        for x in 0..n {
            let r = find(&mut cell, x);
            groups.entry(r).or_default().insert(self.elements[x].clone());
        }
        groups.into_values().collect()
    }

    /// All subgroups, as joins of cyclic subgroups closed under pairwise
    /// joins.
    pub fn all_subgroups(&self) -> BTreeSet<BTreeSet<usize>> {
        let mut subs: BTreeSet<BTreeSet<usize>> = (0..self.len()).map(|x| self.subgroup(&[x])).collect();
        loop {
            let list: Vec<BTreeSet<usize>> = subs.iter().cloned().collect();
            let mut grown = false;
            for (i, a) in list.iter().enumerate() {
                for b in &list[i + 1..] {
                    let gens: Vec<usize> = a.union(b).copied().collect();
                    if subs.insert(self.subgroup(&gens)) {
                        grown = true;
                    }
                }
            }
            if !grown {
                return subs;
            }
        }
    }

    pub fn is_normal(&self, h: &BTreeSet<usize>) -> bool {
        let inv = |x: usize| (0..self.len()).find(|&y| self.mul[x][y] == self.identity).unwrap();
        (0..self.len()).all(|g| {
            let gi = inv(g);
            h.iter().all(|&x| h.contains(&self.mul[self.mul[gi][x]][g]))
        })
    }
}

/// Cells of a library partition as sets of permutations.
pub fn cells_as_sets(t: &autorbit::ElementTable, cells: &[Vec<usize>]) -> BTreeSet<BTreeSet<Permutation>> {
    cells
        .iter()
        .map(|c| c.iter().map(|&i| t.element(i).clone()).collect())
        .collect()
}
