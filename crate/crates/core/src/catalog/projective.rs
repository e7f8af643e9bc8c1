//! Projective groups over small fields, acting on projective points.
//!
//! Points of the projective line over GF(q) are numbered: `∞` is 1, `ζ^i`
//! is `i + 2` for `i = 0..q-2` (ζ the primitive element of the field
//! table), and `0` is `q + 1`.

use crate::catalog::field::FieldTable;
use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A point of the projective line: a field element or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pt {
    Inf,
    At(u8),
}

struct Line {
    f: FieldTable,
    /// `log[a]` = i with `ζ^i = a`, for `a != 0`.
    log: Vec<u32>,
    zeta_pow: Vec<u8>,
}

impl Line {
    fn new(q: u32) -> Result<Line> {
        let f = FieldTable::new(q)?;
        let z = f.primitive();
        let zeta_pow: Vec<u8> = (0..q - 1).map(|e| f.pow(z, e)).collect();
        let mut log = vec![u32::MAX; q as usize];
        for (e, &a) in zeta_pow.iter().enumerate() {
            log[a as usize] = e as u32;
        }
        Ok(Line { f, log, zeta_pow })
    }

    fn q(&self) -> usize {
        self.f.order() as usize
    }

    fn index(&self, p: Pt) -> usize {
        match p {
            Pt::Inf => 0,
            Pt::At(0) => self.q(),
            Pt::At(a) => 1 + self.log[a as usize] as usize,
        }
    }

    fn point(&self, i: usize) -> Pt {
        match i {
            0 => Pt::Inf,
            i if i == self.q() => Pt::At(0),
            i => Pt::At(self.zeta_pow[i - 1]),
        }
    }

    /// Point permutation of `x -> (a σ(x) + b) / (c σ(x) + d)`, where σ is
    /// the `frob`-th power of the Frobenius map.
    fn map(&self, a: u8, b: u8, c: u8, d: u8, frob: u32) -> Result<Permutation> {
        let f = &self.f;
        if f.sub(f.mul(a, d), f.mul(b, c)) == 0 {
            return Err(GroupError::Internal("singular projective map".into()));
        }
        let n = self.q() + 1;
        let images: Vec<usize> = (0..n)
            .map(|i| {
                let x = match self.point(i) {
                    Pt::Inf => Pt::Inf,
                    Pt::At(v) => Pt::At((0..frob).fold(v, |acc, _| f.frobenius(acc))),
                };
                let y = match x {
                    Pt::Inf if c == 0 => Pt::Inf,
                    Pt::Inf => Pt::At(f.mul(a, f.inv(c).unwrap())),
                    Pt::At(v) => {
                        let num = f.add(f.mul(a, v), b);
                        let den = f.add(f.mul(c, v), d);
                        match f.inv(den) {
                            Some(di) => Pt::At(f.mul(num, di)),
                            None => Pt::Inf,
                        }
                    }
                };
                self.index(y) + 1
            })
            .collect();
        Permutation::from_images(&images)
    }
}

fn check_q(q: u32) -> Result<()> {
    if matches!(q, 4 | 5 | 7 | 8 | 9) {
        Ok(())
    } else {
        Err(GroupError::Unsupported(format!("projective groups over GF({q})")))
    }
}

fn psl2_generators(line: &Line) -> Result<Vec<Permutation>> {
    let f = &line.f;
    let z = f.primitive();
    Ok(vec![
        line.map(1, 1, 0, 1, 0)?,
        line.map(f.mul(z, z), 0, 0, 1, 0)?,
        line.map(0, f.neg(1), 1, 0, 0)?,
    ])
}

/// PSL(2,q) on the q+1 points of the projective line.
pub fn psl2(q: u32) -> Result<PermGroup> {
    check_q(q)?;
    let line = Line::new(q)?;
    PermGroup::new(q as usize + 1, psl2_generators(&line)?).map(|g| g.with_name(format!("PSL2({q})")))
}

/// PGL(2,q): PSL(2,q) together with `x -> ζx`.
pub fn pgl2(q: u32) -> Result<PermGroup> {
    check_q(q)?;
    let line = Line::new(q)?;
    let mut gens = psl2_generators(&line)?;
    gens.push(line.map(line.f.primitive(), 0, 0, 1, 0)?);
    PermGroup::new(q as usize + 1, gens).map(|g| g.with_name(format!("PGL2({q})")))
}

/// PΓL(2,q): PGL(2,q) together with the Frobenius map.
pub fn pgammal2(q: u32) -> Result<PermGroup> {
    check_q(q)?;
    let line = Line::new(q)?;
    let mut gens = psl2_generators(&line)?;
    gens.push(line.map(line.f.primitive(), 0, 0, 1, 0)?);
    if line.f.degree() > 1 {
        gens.push(line.map(1, 0, 0, 1, 1)?);
    }
    PermGroup::new(q as usize + 1, gens).map(|g| g.with_name(format!("PGammaL2({q})")))
}

/// PΣL(2,q): PSL(2,q) together with the Frobenius map.
pub fn psigmal2(q: u32) -> Result<PermGroup> {
    check_q(q)?;
    let line = Line::new(q)?;
    let mut gens = psl2_generators(&line)?;
    gens.push(line.map(1, 0, 0, 1, 1)?);
    PermGroup::new(q as usize + 1, gens).map(|g| g.with_name(format!("PSigmaL2({q})")))
}

/// The Frobenius map `x -> x^p` on the projective line over GF(q).
pub fn frobenius_point_map(q: u32) -> Result<Permutation> {
    check_q(q)?;
    Line::new(q)?.map(1, 0, 0, 1, 1)
}

/// M10: PSL(2,9) together with `x -> ζ x^3`.
pub fn m10() -> Result<PermGroup> {
    let line = Line::new(9)?;
    let mut gens = psl2_generators(&line)?;
    gens.push(line.map(line.f.primitive(), 0, 0, 1, 1)?);
    PermGroup::new(10, gens).map(|g| g.with_name("M10"))
}

/// PSL(3,4) on the 21 points of the projective plane over GF(4), generated
/// by the twelve transvections `I + λ E_ij` with `λ ∈ {1, ζ}`.
///
/// Points are the vectors whose first nonzero coordinate is 1, numbered in
/// increasing order of `x * 16 + y * 4 + z`.
pub fn psl3_4() -> Result<PermGroup> {
    let f = FieldTable::new(4)?;
    let code = |v: [u8; 3]| v[0] as usize * 16 + v[1] as usize * 4 + v[2] as usize;
    let normalize = |v: [u8; 3]| -> [u8; 3] {
        let lead = *v.iter().find(|&&c| c != 0).expect("nonzero vector");
        let s = f.inv(lead).unwrap();
        [f.mul(v[0], s), f.mul(v[1], s), f.mul(v[2], s)]
    };
    let mut points: Vec<[u8; 3]> = Vec::new();
    for c in 1..64u8 {
        let v = [c / 16, (c / 4) % 4, c % 4];
        if normalize(v) == v {
            points.push(v);
        }
    }
    debug_assert_eq!(points.len(), 21);
    let mut slot = vec![usize::MAX; 64];
    for (i, &v) in points.iter().enumerate() {
        slot[code(v)] = i;
    }
    let mut gens = Vec::new();
    for lambda in [1u8, f.primitive()] {
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                // (I + λE_ij) v: coordinate i gains λ v_j
                let images: Vec<usize> = points
                    .iter()
                    .map(|&v| {
                        let mut w = v;
                        w[i] = f.add(w[i], f.mul(lambda, v[j]));
                        slot[code(normalize(w))] + 1
                    })
                    .collect();
                gens.push(Permutation::from_images(&images)?);
            }
        }
    }
    PermGroup::new(21, gens).map(|g| g.with_name("PSL3(4)"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_orders() {
        for (q, o) in [(4u32, 60u128), (5, 60), (7, 168), (8, 504), (9, 360)] {
            assert_eq!(psl2(q).unwrap().order(), o);
            let d = if q % 2 == 0 { 1 } else { 2 };
            assert_eq!(pgl2(q).unwrap().order(), o * d);
        }
        assert_eq!(pgammal2(8).unwrap().order(), 1512);
        assert_eq!(pgammal2(9).unwrap().order(), 1440);
        assert_eq!(psigmal2(9).unwrap().order(), 720);
        assert_eq!(m10().unwrap().order(), 720);
        assert!(psl2(11).is_err());
    }

    #[test]
    fn plane_group_order() {
        assert_eq!(psl3_4().unwrap().order(), 20160);
    }
}
