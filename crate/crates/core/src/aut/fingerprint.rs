//! Automorphism-invariant labels for conjugacy classes.
//!
//! A class starts labelled by (element order, class size). Each round
//! relabels it by its previous label together with the labels of the
//! classes of `g^q`, one entry per prime `q` dividing `|G|`. Labels are
//! hashes of that data, never positions, so they are comparable across two
//! groups; a hash collision can only merge labels, which keeps every use of
//! them (pruning an image search) sound.

use crate::numbers::factorize;
use crate::structure::classes::ClassPartition;
use crate::table::ElementTable;

const ROUNDS: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub element_order: u32,
    pub class_size: usize,
    /// Final-round labels of the classes of `g^q`, one per prime `q | |G|`.
    pub power_profile: Vec<u64>,
    /// Final-round label of the class itself.
    pub label: u64,
}

#[derive(Clone, Debug)]
pub struct FingerprintTable {
    per_class: Vec<Fingerprint>,
}

fn mix(mut h: u64, x: u64) -> u64 {
    h ^= x.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(h << 6).wrapping_add(h >> 2);
    // splitmix64 finalizer
    let mut z = h;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl FingerprintTable {
    pub fn new(t: &ElementTable, classes: &ClassPartition) -> FingerprintTable {
        let primes: Vec<u64> = factorize(t.len() as u128).into_iter().map(|(p, _)| p).collect();
        let cls = classes.classes();
        let power_class: Vec<Vec<usize>> = cls
            .iter()
            .map(|c| {
                primes
                    .iter()
                    .map(|&q| classes.class_of(t.pow(c.representative, q)))
                    .collect()
            })
            .collect();
        let mut labels: Vec<u64> = cls
            .iter()
            .map(|c| mix(mix(0, c.element_order as u64), c.size as u64))
            .collect();
        for _ in 0..ROUNDS {
            labels = (0..cls.len())
                .map(|ci| {
                    power_class[ci]
                        .iter()
                        .fold(mix(1, labels[ci]), |h, &pc| mix(h, labels[pc]))
                })
                .collect();
        }
        let per_class = cls
            .iter()
            .enumerate()
            .map(|(ci, c)| Fingerprint {
                element_order: c.element_order,
                class_size: c.size,
                power_profile: power_class[ci].iter().map(|&pc| labels[pc]).collect(),
                label: labels[ci],
            })
            .collect();
        FingerprintTable { per_class }
    }

    pub fn of_class(&self, class: usize) -> &Fingerprint {
        &self.per_class[class]
    }

    pub fn label_of_class(&self, class: usize) -> u64 {
        self.per_class[class].label
    }

    pub fn len(&self) -> usize {
        self.per_class.len()
    }

    pub fn is_empty(&self) -> bool {
        self.per_class.is_empty()
    }

    /// Sorted multiset of (label, class size) pairs: equal for isomorphic
    /// groups.
    pub fn signature(&self) -> Vec<(u64, usize)> {
        let mut v: Vec<(u64, usize)> = self.per_class.iter().map(|f| (f.label, f.class_size)).collect();
        v.sort_unstable();
        v
    }
}

/// Fingerprint of the class containing each element, in one lookup table.
pub(crate) struct ElementLabels {
    pub classes: ClassPartition,
    pub fingerprints: FingerprintTable,
    pub label: Vec<u64>,
}

impl ElementLabels {
    pub fn new(t: &ElementTable) -> ElementLabels {
        let classes = ClassPartition::new(t);
        Self::with_classes(t, classes)
    }

    pub fn with_classes(t: &ElementTable, classes: ClassPartition) -> ElementLabels {
        let fingerprints = FingerprintTable::new(t, &classes);
        let label = (0..t.len())
            .map(|i| fingerprints.label_of_class(classes.class_of(i)))
            .collect();
        ElementLabels {
            classes,
            fingerprints,
            label,
        }
    }
}
