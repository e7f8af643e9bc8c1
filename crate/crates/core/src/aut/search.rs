//! Backtracking search for generator images that extend to an isomorphism.
//!
//! The source group is given by a short generating sequence `g_1..g_k`.
//! `g_1` is sent only to one representative of each target conjugacy class
//! with a matching fingerprint: any isomorphism can be followed by an inner
//! automorphism of the target that moves the image of `g_1` onto such a
//! representative, so nothing is lost. The remaining generators range over
//! all target elements with matching fingerprints. Partial assignments are
//! pruned by comparing fingerprints of short words, and every complete
//! candidate is accepted only by the graph-order criterion: the subgroup of
//! `G x H` generated by the pairs `(g_i, h_i)` must have order `|G|`, and the
//! `h_i` must generate `H`.

use std::cmp::Reverse;
use std::ops::ControlFlow;
use std::time::Instant;

use crate::aut::fingerprint::ElementLabels;
use crate::bsgs::Bsgs;
use crate::error::{GroupError, Result};
use crate::perm::Permutation;
use crate::table::ElementTable;

/// Candidates examined between two clock reads.
const DEADLINE_STRIDE: u64 = 256;
/// Non-member candidates tried per step when choosing generators.
const GENERATOR_LOOKAHEAD: usize = 48;

/// Greedy generating sequence: elements in order of decreasing element
/// order (ties by index); each step adds the candidate, among the first few
/// not yet generated, that enlarges the subgroup most, stopping early when
/// one completes the group.
pub fn generating_sequence(t: &ElementTable) -> Vec<usize> {
    let n = t.len() as u128;
    if n == 1 {
        return Vec::new();
    }
    let deg = t.group().degree();
    let mut cand: Vec<usize> = (0..t.len()).filter(|&i| i != t.identity()).collect();
    cand.sort_by_key(|&i| (Reverse(t.order_of(i)), i));
    let mut seq: Vec<usize> = Vec::new();
    let mut perms: Vec<Permutation> = Vec::new();
    let mut current = Bsgs::new(deg, &[Permutation::identity(deg)]);
    while current.order() < n {
        let mut best: Option<(u128, usize, Bsgs)> = None;
        let mut tried = 0;
        for &x in &cand {
            if current.contains(t.element(x)) {
                continue;
            }
            let mut gens = perms.clone();
            gens.push(t.element(x).clone());
            let b = Bsgs::new(deg, &gens);
            let o = b.order();
            if best.as_ref().is_none_or(|(bo, _, _)| o > *bo) {
                best = Some((o, x, b));
            }
            tried += 1;
            if o == n || tried >= GENERATOR_LOOKAHEAD {
                break;
            }
        }
        let (_, x, b) = best.expect("a proper subgroup misses some element");
        seq.push(x);
        perms.push(t.element(x).clone());
        current = b;
    }
    seq
}

#[derive(Clone, Copy, Debug)]
enum Word {
    /// `g_i g_j`
    Mul(usize, usize),
    /// `g_i g_j^-1`
    MulInv(usize, usize),
    /// `g_i^-1 g_j^-1 g_i g_j`
    Comm(usize, usize),
    /// `g_i^2 g_j`
    SqMul(usize, usize),
    /// `g_0 g_1 ... g_j`
    Prefix(usize),
}

fn eval(t: &ElementTable, w: Word, img: &[usize]) -> usize {
    match w {
        Word::Mul(i, j) => t.mul(img[i], img[j]),
        Word::MulInv(i, j) => t.mul(img[i], t.inv(img[j])),
        Word::Comm(i, j) => {
            let a = t.mul(t.inv(img[i]), t.inv(img[j]));
            t.mul(t.mul(a, img[i]), img[j])
        }
        Word::SqMul(i, j) => t.mul(t.mul(img[i], img[i]), img[j]),
        Word::Prefix(j) => img[1..=j].iter().fold(img[0], |acc, &x| t.mul(acc, x)),
    }
}

/// Prepared search from `src` (via a generating sequence) into `dst`.
pub(crate) struct MapSearch<'a> {
    src: &'a ElementTable,
    dst: &'a ElementTable,
    dst_labels: &'a ElementLabels,
    gens: Vec<usize>,
    first: Vec<usize>,
    buckets: Vec<Vec<usize>>,
    /// Per depth `j`: words to test once `g_0..g_j` have images, with the
    /// label of the word evaluated in the source.
    checks: Vec<Vec<(Word, u64)>>,
    src_pairs: Vec<Permutation>,
}

impl<'a> MapSearch<'a> {
    pub fn new(
        src: &'a ElementTable,
        src_labels: &'a ElementLabels,
        dst: &'a ElementTable,
        dst_labels: &'a ElementLabels,
        gens: Vec<usize>,
    ) -> MapSearch<'a> {
        let by_label = |lab: u64| -> Vec<usize> {
            (0..dst.len()).filter(|&y| dst_labels.label[y] == lab).collect()
        };
        let first = match gens.first() {
            Some(&g0) => {
                let lab = src_labels.label[g0];
                dst_labels
                    .classes
                    .classes()
                    .iter()
                    .filter(|c| dst_labels.label[c.representative] == lab)
                    .map(|c| c.representative)
                    .collect()
            }
            None => Vec::new(),
        };
        let buckets = gens.iter().map(|&g| by_label(src_labels.label[g])).collect();
        let mut checks = vec![Vec::new(); gens.len()];
        for (j, list) in checks.iter_mut().enumerate().skip(1) {
            for i in 0..j {
                list.push(Word::Mul(i, j));
                list.push(Word::MulInv(i, j));
                list.push(Word::Comm(i, j));
                list.push(Word::SqMul(i, j));
                list.push(Word::SqMul(j, i));
            }
            if j >= 2 {
                list.push(Word::Prefix(j));
            }
        }
        let checks = checks
            .into_iter()
            .map(|list| {
                list.into_iter()
                    .map(|w| (w, src_labels.label[eval(src, w, &gens)]))
                    .collect()
            })
            .collect();
        let n = src.group().degree();
        let m = dst.group().degree();
        let src_pairs = gens
            .iter()
            .map(|&g| {
                let mut v: Vec<u32> = src.element(g).raw().to_vec();
                v.extend((0..m as u32).map(|x| x + n as u32));
                Permutation::from_raw(v)
            })
            .collect();
        MapSearch {
            src,
            dst,
            dst_labels,
            gens,
            first,
            buckets,
            checks,
            src_pairs,
        }
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    fn word_checks_pass(&self, depth: usize, img: &[usize]) -> bool {
        self.checks[depth]
            .iter()
            .all(|&(w, lab)| self.dst_labels.label[eval(self.dst, w, img)] == lab)
    }

    /// Graph-order criterion; returns the order of the graph subgroup on
    /// success.
    pub fn graph_order(&self, img: &[usize]) -> Option<u128> {
        let n = self.src.group().degree();
        let m = self.dst.group().degree();
        let src_order = self.src.len() as u128;
        let dst_order = self.dst.len() as u128;
        let pairs: Vec<Permutation> = img
            .iter()
            .zip(&self.src_pairs)
            .map(|(&h, sp)| {
                let mut v = sp.raw()[..n].to_vec();
                v.extend(self.dst.element(h).raw().iter().map(|&x| x + n as u32));
                Permutation::from_raw(v)
            })
            .collect();
        let d = Bsgs::with_order_limit(n + m, &pairs, src_order)?;
        if d.order() != src_order {
            return None;
        }
        let images: Vec<Permutation> = img.iter().map(|&h| self.dst.element(h).clone()).collect();
        if Bsgs::new(m, &images).order() != dst_order {
            return None;
        }
        Some(d.order())
    }

    /// Runs the search, calling `found` with the images of the generating
    /// sequence for each accepted candidate, in a deterministic order.
    pub fn run<F>(&self, deadline: Option<Instant>, mut found: F) -> Result<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if self.src.len() != self.dst.len() {
            return Ok(());
        }
        if self.gens.is_empty() {
            let _ = found(&[]);
            return Ok(());
        }
        let k = self.gens.len();
        let mut img = vec![0usize; k];
        let mut cursor = vec![0usize; k];
        let mut depth = 0usize;
        let mut ticks = 0u64;
        loop {
            let pool: &[usize] = if depth == 0 { &self.first } else { &self.buckets[depth] };
            if cursor[depth] >= pool.len() {
                if depth == 0 {
                    return Ok(());
                }
                cursor[depth] = 0;
                depth -= 1;
                continue;
            }
            img[depth] = pool[cursor[depth]];
            cursor[depth] += 1;
            ticks += 1;
            if ticks.is_multiple_of(DEADLINE_STRIDE) {
                if let Some(d) = deadline {
                    if Instant::now() > d {
                        return Err(GroupError::Timeout);
                    }
                }
            }
            if !self.word_checks_pass(depth, &img) {
                continue;
            }
            if depth + 1 < k {
                depth += 1;
                continue;
            }
            if self.graph_order(&img).is_some() && found(&img).is_break() {
                return Ok(());
            }
        }
    }
}

/// Breadth-first spanning tree of a Cayley graph for a generating sequence
/// (right multiplication).
pub(crate) struct CayleyTree {
    order: Vec<u32>,
    parent: Vec<u32>,
    via: Vec<u32>,
    identity: usize,
}

impl CayleyTree {
    pub fn new(t: &ElementTable, gens: &[usize]) -> CayleyTree {
        let n = t.len();
        let mut parent = vec![u32::MAX; n];
        let mut via = vec![u32::MAX; n];
        let mut order = vec![t.identity() as u32];
        parent[t.identity()] = t.identity() as u32;
        let mut head = 0;
        while head < order.len() {
            let x = order[head] as usize;
            head += 1;
            for (k, &g) in gens.iter().enumerate() {
                let y = t.mul(x, g);
                if parent[y] == u32::MAX {
                    parent[y] = x as u32;
                    via[y] = k as u32;
                    order.push(y as u32);
                }
            }
        }
        assert_eq!(order.len(), n, "generating sequence does not generate");
        CayleyTree {
            order,
            parent,
            via,
            identity: t.identity(),
        }
    }

    /// Image of element `x` under the homomorphism with generator images
    /// `img`, evaluated in `dst`.
    pub fn image_of(&self, dst: &ElementTable, img: &[usize], x: usize) -> usize {
        let mut word = Vec::new();
        let mut cur = x;
        while cur != self.identity {
            word.push(self.via[cur] as usize);
            cur = self.parent[cur] as usize;
        }
        word.iter()
            .rev()
            .fold(dst.identity(), |acc, &k| dst.mul(acc, img[k]))
    }

    pub fn materialize(&self, dst: &ElementTable, img: &[usize]) -> Vec<u32> {
        let mut map = vec![0u32; self.parent.len()];
        map[self.identity] = dst.identity() as u32;
        for &x in &self.order[1..] {
            let x = x as usize;
            let p = self.parent[x] as usize;
            map[x] = dst.mul(map[p] as usize, img[self.via[x] as usize]) as u32;
        }
        map
    }
}
