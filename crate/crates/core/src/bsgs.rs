//! Deterministic Schreier–Sims.
//!
//! Base points are always the smallest point moved by the generator that
//! forces a new level, so two runs over the same generators produce the
//! same chain. Transversals are stored as Schreier trees (one generator
//! label per orbit point), with explicit coset representatives cached when
//! the degree is small enough for that to pay off.

use crate::perm::Permutation;

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;
/// Degree up to which explicit inverse coset representatives are kept.
const EXPLICIT_REPS_MAX_DEGREE: usize = 256;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    /// Indices into `strong_gens` of the generators fixing all earlier base points.
    gens: Vec<usize>,
    orbit: Vec<usize>,
    /// Per point: `NOT_IN_ORBIT`, `ROOT`, or the strong generator index `s`
    /// with `point = parent^s`.
    label: Vec<u32>,
    /// Per point: `u_beta^-1`, present when the degree is small.
    inv_reps: Option<Vec<Option<Permutation>>>,
}

/// Base and strong generating set with basic orbits and transversals.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    strong_gens: Vec<Permutation>,
    strong_inv: Vec<Permutation>,
    levels: Vec<Level>,
}

impl Bsgs {
    /// Builds the chain for the group generated by `gens`.
    pub fn new(degree: usize, gens: &[Permutation]) -> Bsgs {
        Self::build(degree, gens, None).expect("unbounded build cannot abort")
    }

    /// Like [`Bsgs::new`] but gives up (returning `None`) as soon as the
    /// group is known to have more than `limit` elements.
    pub fn with_order_limit(degree: usize, gens: &[Permutation], limit: u128) -> Option<Bsgs> {
        Self::build(degree, gens, Some(limit))
    }

    fn build(degree: usize, gens: &[Permutation], limit: Option<u128>) -> Option<Bsgs> {
        let mut chain = Bsgs {
            degree,
            strong_gens: Vec::new(),
            strong_inv: Vec::new(),
            levels: Vec::new(),
        };
        for g in gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            if g.is_identity() || chain.strong_gens.contains(g) {
                continue;
            }
            chain.push_strong(g.clone());
            if !chain.levels.iter().any(|l| g.image(l.point) != l.point) {
                let pt = g.smallest_moved_point().unwrap();
                chain.push_level(pt);
            }
        }
        for i in 0..chain.levels.len() {
            chain.refresh_level(i);
        }
        if chain.exceeds(limit) {
            return None;
        }
        chain.close(limit)?;
        Some(chain)
    }

    fn exceeds(&self, limit: Option<u128>) -> bool {
        match limit {
            Some(lim) => {
                let mut acc: u128 = 1;
                for l in &self.levels {
                    acc = acc.saturating_mul(l.orbit.len() as u128);
                    if acc > lim {
                        return true;
                    }
                }
                false
            }
            None => false,
        }
    }

    fn push_strong(&mut self, g: Permutation) {
        self.strong_inv.push(g.inverse());
        self.strong_gens.push(g);
    }

    fn push_level(&mut self, point: usize) {
        self.levels.push(Level {
            point,
            gens: Vec::new(),
            orbit: vec![point],
            label: Vec::new(),
            inv_reps: None,
        });
    }

    /// Recomputes the generator list, orbit and tree of level `i`.
    fn refresh_level(&mut self, i: usize) {
        let fixed: Vec<usize> = self.levels[..i].iter().map(|l| l.point).collect();
        let gens: Vec<usize> = (0..self.strong_gens.len())
            .filter(|&s| fixed.iter().all(|&p| self.strong_gens[s].image(p) == p))
            .collect();
        let point = self.levels[i].point;
        let mut label = vec![NOT_IN_ORBIT; self.degree];
        label[point] = ROOT;
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let b = orbit[head];
            head += 1;
            for &s in &gens {
                let c = self.strong_gens[s].image(b);
                if label[c] == NOT_IN_ORBIT {
                    label[c] = s as u32;
                    orbit.push(c);
                }
            }
        }
        let level = &mut self.levels[i];
        level.gens = gens;
        level.orbit = orbit;
        level.label = label;
        level.inv_reps = None;
        if self.degree <= EXPLICIT_REPS_MAX_DEGREE {
            let mut reps: Vec<Option<Permutation>> = vec![None; self.degree];
            let orbit = self.levels[i].orbit.clone();
            for &b in &orbit {
                reps[b] = Some(self.trace_inverse(i, b));
            }
            self.levels[i].inv_reps = Some(reps);
        }
    }

    /// `u_beta^-1` by walking the Schreier tree.
    fn trace_inverse(&self, i: usize, beta: usize) -> Permutation {
        let mut h = Permutation::identity(self.degree);
        self.strip_into(i, beta, &mut h);
        h
    }

    /// Replaces `h` by `h * u_beta^-1` at level `i`.
    fn strip_into(&self, i: usize, mut beta: usize, h: &mut Permutation) {
        let level = &self.levels[i];
        if let Some(reps) = &level.inv_reps {
            *h = h.then(reps[beta].as_ref().expect("point in orbit"));
            return;
        }
        loop {
            let lab = level.label[beta];
            if lab == ROOT {
                break;
            }
            debug_assert_ne!(lab, NOT_IN_ORBIT);
            let inv = &self.strong_inv[lab as usize];
            *h = h.then(inv);
            beta = inv.image(beta);
        }
    }

    fn rep(&self, i: usize, beta: usize) -> Permutation {
        self.trace_inverse(i, beta).inverse()
    }

    /// Sifts `h` starting at level `from`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it went all the way).
    fn strip(&self, mut h: Permutation, from: usize) -> (Permutation, usize) {
        for i in from..self.levels.len() {
            let beta = h.image(self.levels[i].point);
            if self.levels[i].label[beta] == NOT_IN_ORBIT {
                return (h, i);
            }
            self.strip_into(i, beta, &mut h);
        }
        let n = self.levels.len();
        (h, n)
    }

    fn close(&mut self, limit: Option<u128>) -> Option<()> {
        if self.levels.is_empty() {
            return Some(());
        }
        let mut i = self.levels.len() - 1;
        loop {
            let mut jumped = None;
            'scan: for oi in 0..self.levels[i].orbit.len() {
                let beta = self.levels[i].orbit[oi];
                let u_beta = self.rep(i, beta);
                for gi in 0..self.levels[i].gens.len() {
                    let s = self.levels[i].gens[gi];
                    let x = &self.strong_gens[s];
                    let image = x.image(beta);
                    // Schreier generator u_beta * x * u_{beta^x}^-1
                    let mut h = u_beta.then(x);
                    self.strip_into(i, image, &mut h);
                    if h.is_identity() {
                        continue;
                    }
                    let (y, j) = self.strip(h, i + 1);
                    if y.is_identity() {
                        continue;
                    }
                    if j == self.levels.len() {
                        let pt = y.smallest_moved_point().unwrap();
                        self.push_level(pt);
                    }
                    self.push_strong(y);
                    for l in i + 1..=j {
                        self.refresh_level(l);
                    }
                    if self.exceeds(limit) {
                        return None;
                    }
                    jumped = Some(j);
                    break 'scan;
                }
            }
            match jumped {
                Some(j) => i = j,
                None => {
                    if i == 0 {
                        return Some(());
                    }
                    i -= 1;
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Base points, 0-based.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong_gens
    }

    /// Basic orbits, one per base point (0-based points).
    pub fn basic_orbits(&self) -> Vec<&[usize]> {
        self.levels.iter().map(|l| l.orbit.as_slice()).collect()
    }

    /// Coset representative mapping base point `level` to `point`.
    pub fn transversal_element(&self, level: usize, point: usize) -> Option<Permutation> {
        let l = self.levels.get(level)?;
        if *l.label.get(point)? == NOT_IN_ORBIT {
            return None;
        }
        Some(self.rep(level, point))
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().fold(1u128, |acc, l| {
            acc.checked_mul(l.orbit.len() as u128)
                .expect("group order overflows u128")
        })
    }

    /// Membership by sifting. Panics on a degree mismatch; see
    /// [`crate::PermGroup::contains`] for the checked variant.
    pub fn contains(&self, p: &Permutation) -> bool {
        assert_eq!(p.degree(), self.degree);
        let (r, _) = self.strip(p.clone(), 0);
        r.is_identity()
    }
}
