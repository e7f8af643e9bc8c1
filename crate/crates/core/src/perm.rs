//! Permutations of `{1..n}`.
//!
//! Points are stored 0-based; cycle strings and image lists at the API
//! boundary are 1-based. Composition acts on the right: `p.compose(q)` maps
//! `i` to `q(p(i))`, and every other module inherits that convention.

use std::fmt;
use std::ops::Mul;

use crate::error::{GroupError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images, rejecting anything that is
    /// not a bijection of `{1..n}`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(GroupError::ZeroDegree);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for (i, &img) in images.iter().enumerate() {
            if img == 0 || img > n {
                return Err(GroupError::NotBijection {
                    degree: n,
                    detail: format!("position {} maps to {}", i + 1, img),
                });
            }
            if seen[img - 1] {
                return Err(GroupError::NotBijection {
                    degree: n,
                    detail: format!("value {img} appears twice"),
                });
            }
            seen[img - 1] = true;
            out.push((img - 1) as u32);
        }
        Ok(Permutation {
            images: out.into_boxed_slice(),
        })
    }

    /// 0-based images; the caller guarantees a bijection.
    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut seen = vec![false; images.len()];
            images.iter().all(|&i| !std::mem::replace(&mut seen[i as usize], true))
        });
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(GroupError::ZeroDegree);
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(GroupError::PointOutOfRange { point: pt, degree });
                }
                if used[pt - 1] {
                    return Err(GroupError::MalformedCycle(format!(
                        "point {pt} appears more than once"
                    )));
                }
                used[pt - 1] = true;
            }
            for (k, &pt) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)`. Commas are accepted as
    /// separators inside a cycle; `()` and the empty string give the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycle_list(text)?;
        Self::from_cycles(&cycles, degree)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    #[inline]
    pub fn raw(&self) -> &[u32] {
        &self.images
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked right composition; panics on a degree mismatch.
    #[inline]
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        let o = &other.images;
        Permutation {
            images: self.images.iter().map(|&i| o[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `self^-1 * x * self`, i.e. conjugation of `x` by `self` under the
    /// right action.
    pub fn conjugate(&self, x: &Permutation) -> Permutation {
        // i -> self(x(self^-1(i)))
        let mut out = vec![0u32; self.degree()];
        for (i, &si) in self.images.iter().enumerate() {
            out[si as usize] = self.images[x.images[i] as usize];
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length >= 2, 1-based, each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cyc.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cyc);
        }
        out
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    /// Least `k >= 1` with `p^k = 1`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, len| lcm(acc, len as u64))
    }

    pub fn is_even(&self) -> bool {
        self.cycle_lengths().iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
    }

    /// Smallest 0-based point moved by the permutation.
    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &j)| *i as u32 != j)
            .map(|(i, _)| i)
    }

    /// Embeds into a larger degree, shifting points by `offset`.
    pub(crate) fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[i + offset] = j + offset as u32;
        }
        Permutation::from_raw(images)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

pub(crate) fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(GroupError::MalformedCycle(format!(
                "expected '(' at {rest:?}"
            )));
        };
        let Some(close) = body.find(')') else {
            return Err(GroupError::MalformedCycle("unclosed '('".into()));
        };
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(GroupError::MalformedCycle("nested '('".into()));
        }
        let mut cyc = Vec::new();
        for tok in inner.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let pt: usize = tok
                .parse()
                .map_err(|_| GroupError::MalformedCycle(format!("bad point {tok:?}")))?;
            cyc.push(pt);
        }
        if cyc.len() > 1 {
            cycles.push(cyc);
        } else if cyc.len() == 1 {
            // a 1-cycle is a fixed point; still validated for range by the caller
            cycles.push(cyc);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .expect("permutation order overflows u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn cycle_notation_examples() {
        assert_eq!(cyc("(1 2 3)", 3).images(), vec![2, 3, 1]);
        assert_eq!(cyc("", 4).images(), vec![1, 2, 3, 4]);
        assert_eq!(cyc("(1 2)(3 4 5)", 5).images(), vec![2, 1, 4, 5, 3]);
        assert_eq!(cyc("(1,2,3)", 3), cyc("(1 2 3)", 3));
        assert!(cyc("()", 2).is_identity());
    }

    #[test]
    fn cycle_errors() {
        assert!(matches!(
            Permutation::parse_cycles("(1 2)(2 3)", 3),
            Err(GroupError::MalformedCycle(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1 5)", 4),
            Err(GroupError::PointOutOfRange { point: 5, degree: 4 })
        ));
        assert!(Permutation::parse_cycles("(1 2", 4).is_err());
        assert!(Permutation::parse_cycles("1 2)", 4).is_err());
        assert!(Permutation::parse_cycles("(1 x)", 4).is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["(1 2 3)(4 5)", "()", "(2 7)(3 5 6)"] {
            let p = cyc(s, 8);
            assert_eq!(p.to_string(), s);
            assert_eq!(cyc(&p.to_string(), 8), p);
        }
    }

    #[test]
    fn composition_convention() {
        let t = cyc("(1 2)", 3);
        assert!(t.compose(&t).unwrap().is_identity());
        let p = cyc("(1 2 3)", 3);
        assert_eq!(p.compose(&Permutation::identity(3)).unwrap(), p);
        // 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
        assert_eq!(p.compose(&t).unwrap(), cyc("(2 3)", 3));
        assert!(matches!(
            p.compose(&Permutation::identity(4)),
            Err(GroupError::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn orders() {
        assert_eq!(Permutation::identity(5).order(), 1);
        assert_eq!(cyc("(1 2 3)(4 5)", 5).order(), 6);
        assert_eq!(cyc("(1 2 3 4 5)", 5).order(), 5);
    }

    #[test]
    fn conjugate_matches_products() {
        let g = cyc("(1 2 4)", 5);
        let x = cyc("(1 3)(2 5)", 5);
        assert_eq!(g.conjugate(&x), &(&g.inverse() * &x) * &g);
    }

    #[test]
    fn image_list_validation() {
        assert!(Permutation::from_images(&[2, 1, 1, 4]).is_err());
        assert!(Permutation::from_images(&[2, 5, 1, 4]).is_err());
        assert!(Permutation::from_images(&[]).is_err());
        assert_eq!(Permutation::from_images(&[2, 3, 1]).unwrap(), cyc("(1 2 3)", 3));
    }

    #[test]
    fn parity_and_pow() {
        assert!(!cyc("(1 2)", 3).is_even());
        assert!(cyc("(1 2)(3 4)", 4).is_even());
        let p = cyc("(1 2 3 4 5 6)", 6);
        assert_eq!(p.pow(6), Permutation::identity(6));
        assert_eq!(p.pow(2), &p * &p);
        assert_eq!(p.pow(0), Permutation::identity(6));
    }
}
