//! Automorphism groups and their orbits on the group itself.
//!
//! [`AutAnalysis::compute`] runs the generator-image search once and derives
//! everything else from it: the number of automorphisms, the orbit
//! partition (whose cell count is ω), and which normal subgroups are
//! characteristic.

pub mod fingerprint;
pub mod orbits;
pub mod search;

use std::ops::ControlFlow;
use std::time::Instant;

use crate::bsgs::Bsgs;
use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure::classes::ClassPartition;
use crate::structure::invariants::spectrum;
use crate::structure::normal::{normal_subgroups_with, SubgroupRecord};
use crate::table::{ElementTable, MULT_CACHE_MAX};

use fingerprint::ElementLabels;
pub use fingerprint::{Fingerprint, FingerprintTable};
pub use orbits::{orbit_partition, OrbitPartition, UnionFind};
use search::{CayleyTree, MapSearch};

/// An automorphism as a permutation of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    element_map: Vec<u32>,
}

impl Automorphism {
    pub fn from_map(element_map: Vec<u32>) -> Automorphism {
        Automorphism { element_map }
    }

    pub fn identity(n: usize) -> Automorphism {
        Automorphism {
            element_map: (0..n as u32).collect(),
        }
    }

    pub fn element_map(&self) -> &[u32] {
        &self.element_map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.element_map[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.element_map.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            element_map: self
                .element_map
                .iter()
                .map(|&x| other.element_map[x as usize])
                .collect(),
        }
    }

    pub fn as_permutation(&self) -> Permutation {
        Permutation::from_raw(self.element_map.clone())
    }
}

/// `x -> g^-1 x g`.
pub fn conjugation_automorphism(t: &ElementTable, g: &Permutation) -> Result<Automorphism> {
    let gi = t.index_of(g).ok_or(GroupError::NotInGroup)?;
    Ok(conjugation_by_index(t, gi))
}

pub(crate) fn conjugation_by_index(t: &ElementTable, g: usize) -> Automorphism {
    Automorphism {
        element_map: (0..t.len()).map(|x| t.conj(x, g) as u32).collect(),
    }
}

/// Result of one automorphism search over an element table.
#[derive(Clone, Debug)]
pub struct AutAnalysis {
    generating_sequence: Vec<usize>,
    /// Images of the generating sequence, one entry per map found by the
    /// search, sorted.
    emitted: Vec<Vec<usize>>,
    aut_order: u128,
    partition: OrbitPartition,
    classes: ClassPartition,
}

impl AutAnalysis {
    pub fn compute(t: &ElementTable) -> Result<AutAnalysis> {
        Self::compute_until(t, None)
    }

    /// As [`AutAnalysis::compute`], failing with [`GroupError::Timeout`]
    /// once `deadline` passes.
    pub fn compute_until(t: &ElementTable, deadline: Option<Instant>) -> Result<AutAnalysis> {
        let labels = ElementLabels::new(t);
        let gens = search::generating_sequence(t);
        let searcher = MapSearch::new(t, &labels, t, &labels, gens.clone());
        let mut emitted: Vec<Vec<usize>> = Vec::new();
        searcher.run(deadline, |img| {
            emitted.push(img.to_vec());
            ControlFlow::Continue(())
        })?;
        emitted.sort();

        let classes = &labels.classes;
        // every automorphism is inner * (some emitted map), and the maps
        // sending g_1 into the class of r make up |class(r)| cosets of the
        // stabilizer, so the count is a sum of class sizes
        let aut_order: u128 = if gens.is_empty() {
            1
        } else {
            emitted
                .iter()
                .map(|img| classes.classes()[classes.class_of(img[0])].size as u128)
                .sum()
        };

        let tree = CayleyTree::new(t, &gens);
        let mut uf = UnionFind::new(classes.len());
        for img in &emitted {
            for (ci, c) in classes.classes().iter().enumerate() {
                let y = tree.image_of(t, img, c.representative);
                uf.union(ci, classes.class_of(y));
            }
        }
        let cells: Vec<Vec<usize>> = uf
            .groups()
            .into_iter()
            .map(|group| {
                group
                    .into_iter()
                    .flat_map(|ci| classes.classes()[ci].members.iter().copied())
                    .collect()
            })
            .collect();
        let partition = OrbitPartition::from_cells(t, cells);
        Ok(AutAnalysis {
            generating_sequence: gens,
            emitted,
            aut_order,
            partition,
            classes: labels.classes,
        })
    }

    /// ω(G).
    pub fn omega(&self) -> usize {
        self.partition.len()
    }

    pub fn aut_order(&self) -> u128 {
        self.aut_order
    }

    pub fn partition(&self) -> &OrbitPartition {
        &self.partition
    }

    pub fn classes(&self) -> &ClassPartition {
        &self.classes
    }

    pub fn generating_sequence(&self) -> &[usize] {
        &self.generating_sequence
    }

    /// Number of maps the search accepted.
    pub fn emitted_count(&self) -> usize {
        self.emitted.len()
    }

    pub fn emitted_images(&self) -> &[Vec<usize>] {
        &self.emitted
    }

    /// The accepted maps as full element maps, followed by conjugation by
    /// each stored generator; sorted and deduplicated.
    pub fn automorphisms(&self, t: &ElementTable) -> Vec<Automorphism> {
        let tree = CayleyTree::new(t, &self.generating_sequence);
        let mut out: Vec<Automorphism> = self
            .emitted
            .iter()
            .map(|img| Automorphism::from_map(tree.materialize(t, img)))
            .collect();
        for g in t.generator_indices() {
            out.push(conjugation_by_index(t, g));
        }
        out.sort();
        out.dedup();
        out
    }

    /// Normal subgroups, each flagged characteristic or not.
    pub fn classify_normal_subgroups(&self, t: &ElementTable) -> Vec<SubgroupRecord> {
        let cell_of = self.partition.cell_of(t.len());
        normal_subgroups_with(t, &self.classes)
            .into_iter()
            .map(|mut r| {
                r.is_characteristic = Some(is_union_of_cells(&r, &cell_of, &self.partition));
                r
            })
            .collect()
    }

    /// `r` is a union of orbit cells.
    pub fn is_characteristic(&self, t: &ElementTable, r: &SubgroupRecord) -> bool {
        is_union_of_cells(r, &self.partition.cell_of(t.len()), &self.partition)
    }

    pub fn characteristic_subgroups(&self, t: &ElementTable) -> Vec<SubgroupRecord> {
        self.classify_normal_subgroups(t)
            .into_iter()
            .filter(|r| r.is_characteristic == Some(true))
            .collect()
    }

    pub fn is_at_group(&self, t: &ElementTable) -> bool {
        is_at_group(t, &self.partition)
    }
}

fn is_union_of_cells(r: &SubgroupRecord, cell_of: &[u32], p: &OrbitPartition) -> bool {
    let mut touched: Vec<u32> = r.members.iter().map(|&m| cell_of[m]).collect();
    touched.sort_unstable();
    touched.dedup();
    let covered: usize = touched.iter().map(|&c| p.cells[c as usize].len()).sum();
    covered == r.members.len()
}

/// Generators of Aut(G): the maps found by the search plus conjugations.
pub fn automorphism_generators(t: &ElementTable) -> Result<Vec<Automorphism>> {
    Ok(AutAnalysis::compute(t)?.automorphisms(t))
}

/// |Aut(G)|.
pub fn automorphism_group_order(t: &ElementTable) -> Result<u128> {
    Ok(AutAnalysis::compute(t)?.aut_order())
}

/// |⟨gens⟩| computed with a stabilizer chain on the `|G|` element indices.
/// Quadratic-ish in `|G|`; meant for cross-checks on small groups.
pub fn automorphism_group_order_bsgs(t: &ElementTable, gens: &[Automorphism]) -> u128 {
    let perms: Vec<Permutation> = gens.iter().map(Automorphism::as_permutation).collect();
    if perms.is_empty() {
        return 1;
    }
    // adding only maps that are not yet members keeps the chain small
    let mut kept: Vec<Permutation> = Vec::new();
    let mut chain = Bsgs::new(t.len(), &[Permutation::identity(t.len())]);
    for p in perms {
        if !chain.contains(&p) {
            kept.push(p);
            chain = Bsgs::new(t.len(), &kept);
        }
    }
    chain.order()
}

/// ω(G) for a permutation group, via its element table.
pub fn omega(g: &PermGroup) -> Result<usize> {
    let t = ElementTable::new(g)?;
    Ok(AutAnalysis::compute(&t)?.omega())
}

/// All elements of equal order lie in one orbit: ω = |spec|.
pub fn is_at_group(t: &ElementTable, partition: &OrbitPartition) -> bool {
    partition.len() == spectrum(t).len()
}

/// Normal subgroups invariant under every map in `gens`.
pub fn characteristic_subgroups(t: &ElementTable, gens: &[Automorphism]) -> Vec<SubgroupRecord> {
    let p = orbit_partition(t, gens);
    let cell_of = p.cell_of(t.len());
    normal_subgroups_with(t, &ClassPartition::new(t))
        .into_iter()
        .filter_map(|mut r| {
            let ch = is_union_of_cells(&r, &cell_of, &p);
            r.is_characteristic = Some(ch);
            ch.then_some(r)
        })
        .collect()
}

/// Only the trivial subgroup and the whole group are characteristic. The
/// trivial group does not count.
pub fn is_characteristically_simple(t: &ElementTable, gens: &[Automorphism]) -> bool {
    t.len() > 1 && characteristic_subgroups(t, gens).len() == 2
}

const SAMPLE_PAIRS: usize = 10_000;

/// Checks that `map` is a bijection fixing the identity and preserving
/// products: over all pairs when the product table is cached, otherwise
/// on every (element, generator) pair plus a fixed pseudo-random sample.
pub fn verify_automorphism(t: &ElementTable, map: &Automorphism) -> bool {
    let n = t.len();
    let m = map.element_map();
    if m.len() != n || m[t.identity()] as usize != t.identity() {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in m {
        if y as usize >= n || std::mem::replace(&mut seen[y as usize], true) {
            return false;
        }
    }
    if n <= MULT_CACHE_MAX && t.has_mult_cache() {
        return (0..n).all(|x| (0..n).all(|y| m[t.mul(x, y)] as usize == t.mul(m[x] as usize, m[y] as usize)));
    }
    let gens = t.generator_indices();
    let on_gens = (0..n).all(|x| {
        gens.iter()
            .all(|&s| m[t.mul(x, s)] as usize == t.mul(m[x] as usize, m[s] as usize))
    });
    if !on_gens {
        return false;
    }
    let mut state: u64 = 0x2545_f491_4f6c_dd1d;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % n as u64) as usize
    };
    (0..SAMPLE_PAIRS).all(|_| {
        let (x, y) = (next(), next());
        m[t.mul(x, y)] as usize == t.mul(m[x] as usize, m[y] as usize)
    })
}

/// Conjugation by a permutation `s` of the same degree that normalizes
/// `G`: `x -> s^-1 x s`.
pub fn normalizer_induced_automorphism(t: &ElementTable, s: &Permutation) -> Result<Automorphism> {
    let g = t.group();
    if s.degree() != g.degree() {
        return Err(GroupError::DegreeMismatch {
            left: g.degree(),
            right: s.degree(),
        });
    }
    if !g.normalizes(s) {
        return Err(GroupError::NotNormalizing(s.to_string()));
    }
    let map = (0..t.len())
        .map(|x| {
            t.index_of(&s.conjugate(t.element(x)))
                .map(|i| i as u32)
                .ok_or_else(|| GroupError::Internal("conjugate left the group".into()))
        })
        .collect::<Result<Vec<u32>>>()?;
    Ok(Automorphism::from_map(map))
}
