//! Group names understood by [`build`].
//!
//! ```text
//! A<n> S<n> C<n> D<n> E<p>^<k> Q8 AGL1(<q>)
//! PSL2(<q>) PGL2(<q>) PGammaL2(<q>) PSigmaL2(<q>)   q in {4,5,7,8,9}
//! PSL3(4) M10 ASL24A ASL24B trivial
//! DP(<name>,<name>) POW(<name>,<k>)
//! ```
//!
//! `D<n>` is the dihedral group of order `2n` acting on `n` points.

use crate::catalog::extensions::{asl24a, asl24b};
use crate::catalog::field::FieldTable;
use crate::catalog::projective::{m10, pgammal2, pgl2, psigmal2, psl2, psl3_4};
use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::numbers::is_prime;
use crate::perm::Permutation;
use crate::structure::product::{direct_power, direct_product};

/// Largest `n` accepted for `A<n>` and `S<n>`, keeping `n!` within `u128`.
const MAX_SYMMETRIC_DEGREE: usize = 30;
/// Largest degree of any single generated family member.
const MAX_DEGREE: usize = 100_000;

/// Parsed group name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Trivial,
    Alternating(usize),
    Symmetric(usize),
    Cyclic(usize),
    Dihedral(usize),
    Elementary { p: u64, k: u32 },
    Quaternion,
    Agl1(u32),
    Psl2(u32),
    Pgl2(u32),
    PGammaL2(u32),
    PSigmaL2(u32),
    Psl34,
    M10,
    Asl24A,
    Asl24B,
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Power(Box<GroupSpec>, usize),
}

fn unknown(s: &str) -> GroupError {
    GroupError::UnknownName(s.to_string())
}

fn number<T: std::str::FromStr>(s: &str, whole: &str) -> Result<T> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(unknown(whole));
    }
    s.parse().map_err(|_| unknown(whole))
}

/// Splits `X(a,b)` at the comma not nested in parentheses.
fn split_pair(inner: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
        if depth < 0 {
            return None;
        }
    }
    None
}

fn call<'a>(s: &'a str, head: &str) -> Option<&'a str> {
    s.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')
}

impl GroupSpec {
    pub fn parse(name: &str) -> Result<GroupSpec> {
        let s: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        Self::parse_compact(&s)
    }

    fn parse_compact(s: &str) -> Result<GroupSpec> {
        if let Some(inner) = call(s, "DP") {
            let (a, b) = split_pair(inner).ok_or_else(|| unknown(s))?;
            return Ok(GroupSpec::Product(
                Box::new(Self::parse_compact(a)?),
                Box::new(Self::parse_compact(b)?),
            ));
        }
        if let Some(inner) = call(s, "POW") {
            let (a, k) = split_pair(inner).ok_or_else(|| unknown(s))?;
            let k: usize = number(k, s)?;
            if k == 0 {
                return Err(unknown(s));
            }
            return Ok(GroupSpec::Power(Box::new(Self::parse_compact(a)?), k));
        }
        let q_of = |head: &str| -> Option<Result<u32>> { call(s, head).map(|q| number(q, s)) };
        if let Some(q) = q_of("PSL2") {
            return Ok(GroupSpec::Psl2(q?));
        }
        if let Some(q) = q_of("PGL2") {
            return Ok(GroupSpec::Pgl2(q?));
        }
        if let Some(q) = q_of("PGammaL2") {
            return Ok(GroupSpec::PGammaL2(q?));
        }
        if let Some(q) = q_of("PSigmaL2") {
            return Ok(GroupSpec::PSigmaL2(q?));
        }
        if let Some(q) = q_of("AGL1") {
            return Ok(GroupSpec::Agl1(q?));
        }
        match s {
            "trivial" => return Ok(GroupSpec::Trivial),
            "Q8" => return Ok(GroupSpec::Quaternion),
            "PSL3(4)" => return Ok(GroupSpec::Psl34),
            "M10" => return Ok(GroupSpec::M10),
            "ASL24A" => return Ok(GroupSpec::Asl24A),
            "ASL24B" => return Ok(GroupSpec::Asl24B),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix('E') {
            let (p, k) = rest.split_once('^').ok_or_else(|| unknown(s))?;
            return Ok(GroupSpec::Elementary {
                p: number(p, s)?,
                k: number(k, s)?,
            });
        }
        let (head, tail) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| unknown(s))?);
        let n: usize = number(tail, s)?;
        match head {
            "A" => Ok(GroupSpec::Alternating(n)),
            "S" => Ok(GroupSpec::Symmetric(n)),
            "C" => Ok(GroupSpec::Cyclic(n)),
            "D" => Ok(GroupSpec::Dihedral(n)),
            _ => Err(unknown(s)),
        }
    }

    /// Order from the closed-form formula of the family.
    pub fn formula_order(&self) -> Option<u128> {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        let gcd = |a: u128, b: u128| crate::perm::gcd(a as u64, b as u64) as u128;
        Some(match self {
            GroupSpec::Trivial => 1,
            GroupSpec::Alternating(n) => (fact(*n) / 2).max(1),
            GroupSpec::Symmetric(n) => fact(*n),
            GroupSpec::Cyclic(n) => *n as u128,
            GroupSpec::Dihedral(n) => 2 * *n as u128,
            GroupSpec::Elementary { p, k } => (*p as u128).checked_pow(*k)?,
            GroupSpec::Quaternion => 8,
            GroupSpec::Agl1(q) => *q as u128 * (*q as u128 - 1),
            GroupSpec::Psl2(q) => {
                let q = *q as u128;
                q * (q * q - 1) / gcd(2, q - 1)
            }
            GroupSpec::Pgl2(q) => {
                let q = *q as u128;
                q * (q * q - 1)
            }
            GroupSpec::PGammaL2(q) => {
                let k = FieldTable::new(*q).ok()?.degree() as u128;
                let q = *q as u128;
                q * (q * q - 1) * k
            }
            GroupSpec::PSigmaL2(q) => {
                let k = FieldTable::new(*q).ok()?.degree() as u128;
                let q = *q as u128;
                q * (q * q - 1) / gcd(2, q - 1) * k
            }
            GroupSpec::Psl34 => {
                let q: u128 = 4;
                q.pow(3) * (q.pow(3) - 1) * (q * q - 1) / gcd(3, q - 1)
            }
            GroupSpec::M10 => 720,
            GroupSpec::Asl24A | GroupSpec::Asl24B => 960,
            GroupSpec::Product(a, b) => a.formula_order()?.checked_mul(b.formula_order()?)?,
            GroupSpec::Power(a, k) => a.formula_order()?.checked_pow(*k as u32)?,
        })
    }

    pub fn build(&self) -> Result<PermGroup> {
        match self {
            GroupSpec::Trivial => Ok(PermGroup::trivial(1)),
            GroupSpec::Alternating(n) => alternating(*n),
            GroupSpec::Symmetric(n) => symmetric(*n),
            GroupSpec::Cyclic(n) => cyclic(*n),
            GroupSpec::Dihedral(n) => dihedral(*n),
            GroupSpec::Elementary { p, k } => elementary_abelian(*p, *k),
            GroupSpec::Quaternion => quaternion(),
            GroupSpec::Agl1(q) => agl1(*q),
            GroupSpec::Psl2(q) => psl2(*q),
            GroupSpec::Pgl2(q) => pgl2(*q),
            GroupSpec::PGammaL2(q) => pgammal2(*q),
            GroupSpec::PSigmaL2(q) => psigmal2(*q),
            GroupSpec::Psl34 => psl3_4(),
            GroupSpec::M10 => m10(),
            GroupSpec::Asl24A => asl24a(),
            GroupSpec::Asl24B => asl24b(),
            GroupSpec::Product(a, b) => Ok(direct_product(&a.build()?, &b.build()?)),
            GroupSpec::Power(a, k) => {
                let h = a.build()?;
                if h.degree() * k > MAX_DEGREE {
                    return Err(GroupError::Unsupported(format!("degree {}", h.degree() * k)));
                }
                Ok(direct_power(&h, *k))
            }
        }
    }
}

/// Builds the group named by `name`. The result carries the name with
/// whitespace removed.
pub fn build(name: &str) -> Result<PermGroup> {
    let spec = GroupSpec::parse(name)?;
    let label: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    Ok(spec.build()?.with_name(label))
}

/// A built group with its construction notes.
#[derive(Clone, Debug)]
pub struct GroupDescriptor {
    pub name: String,
    pub degree: usize,
    pub order: u128,
    pub generators: Vec<Permutation>,
    pub provenance: String,
}

/// As [`build`], checking the order against the family formula.
pub fn describe(name: &str) -> Result<GroupDescriptor> {
    let spec = GroupSpec::parse(name)?;
    let g = build(name)?;
    if let Some(expected) = spec.formula_order() {
        if expected != g.order() {
            return Err(GroupError::Internal(format!(
                "{name}: built order {} but formula gives {expected}",
                g.order()
            )));
        }
    }
    Ok(GroupDescriptor {
        name: g.label(),
        degree: g.degree(),
        order: g.order(),
        generators: g.generators().to_vec(),
        provenance: provenance(&spec),
    })
}

fn provenance(spec: &GroupSpec) -> String {
    match spec {
        GroupSpec::Trivial => "trivial group on one point".into(),
        GroupSpec::Alternating(_) | GroupSpec::Symmetric(_) => "natural action".into(),
        GroupSpec::Cyclic(_) => "regular action".into(),
        GroupSpec::Dihedral(_) => "symmetries of the n-gon".into(),
        GroupSpec::Elementary { .. } => "k disjoint p-cycles".into(),
        GroupSpec::Quaternion => "regular action".into(),
        GroupSpec::Agl1(_) => "x -> ax + b on the field".into(),
        GroupSpec::Psl2(_) | GroupSpec::Pgl2(_) | GroupSpec::PGammaL2(_) | GroupSpec::PSigmaL2(_) => {
            "projective line".into()
        }
        GroupSpec::Psl34 => "projective plane over GF(4), transvections".into(),
        GroupSpec::M10 => "PSL2(9) with x -> z x^3".into(),
        GroupSpec::Asl24A => "GF(4)^2 with SL(2,4)".into(),
        GroupSpec::Asl24B => "even-weight GF(2)^5 with A5".into(),
        GroupSpec::Product(..) => "direct product on disjoint points".into(),
        GroupSpec::Power(..) => "direct power on disjoint points".into(),
    }
}

fn check_degree(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        Err(GroupError::Unsupported(format!("degree {n}")))
    } else {
        Ok(())
    }
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    check_degree(n, MAX_SYMMETRIC_DEGREE)?;
    let mut gens = vec![Permutation::from_cycles(&[(1..=n).collect()], n)?];
    if n > 2 {
        gens.push(Permutation::from_cycles(&[vec![1, 2]], n)?);
    }
    PermGroup::new(n, gens).map(|g| g.with_name(format!("S{n}")))
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    check_degree(n, MAX_SYMMETRIC_DEGREE)?;
    if n < 3 {
        return Ok(PermGroup::trivial(n).with_name(format!("A{n}")));
    }
    let long: Vec<usize> = if n % 2 == 1 { (1..=n).collect() } else { (2..=n).collect() };
    let gens = vec![
        Permutation::from_cycles(&[long], n)?,
        Permutation::from_cycles(&[vec![1, 2, 3]], n)?,
    ];
    PermGroup::new(n, gens).map(|g| g.with_name(format!("A{n}")))
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    check_degree(n, MAX_DEGREE)?;
    PermGroup::new(n, vec![Permutation::from_cycles(&[(1..=n).collect()], n)?])
        .map(|g| g.with_name(format!("C{n}")))
}

pub fn dihedral(n: usize) -> Result<PermGroup> {
    check_degree(n, MAX_DEGREE)?;
    if n < 3 {
        return Err(GroupError::Unsupported(format!("D{n}")));
    }
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n + 1).collect();
    let gens = vec![
        Permutation::from_cycles(&[(1..=n).collect()], n)?,
        Permutation::from_images(&reflection)?,
    ];
    PermGroup::new(n, gens).map(|g| g.with_name(format!("D{n}")))
}

pub fn elementary_abelian(p: u64, k: u32) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let p = p as usize;
    let n = p * k as usize;
    check_degree(n, MAX_DEGREE)?;
    let gens = (0..k as usize)
        .map(|i| Permutation::from_cycles(&[(i * p + 1..=(i + 1) * p).collect()], n))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(n, gens).map(|g| g.with_name(format!("E{p}^{k}")))
}

pub fn quaternion() -> Result<PermGroup> {
    PermGroup::from_cycles(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]).map(|g| g.with_name("Q8"))
}

/// `x -> ax + b` on GF(q), points numbered by field element code plus one.
pub fn agl1(q: u32) -> Result<PermGroup> {
    let f = FieldTable::new(q)?;
    let map = |a: u8, b: u8| -> Result<Permutation> {
        let images: Vec<usize> = (0..q as u8).map(|x| f.add(f.mul(a, x), b) as usize + 1).collect();
        Permutation::from_images(&images)
    };
    let mut gens = vec![map(f.primitive(), 0)?];
    // translations by a basis of the additive group
    for e in 0..f.degree() {
        gens.push(map(1, (f.characteristic() as u8).pow(e))?);
    }
    PermGroup::new(q as usize, gens).map(|g| g.with_name(format!("AGL1({q})")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_nested() {
        let s = GroupSpec::parse("DP(POW(A5, 2), C7)").unwrap();
        assert_eq!(s.formula_order(), Some(3600 * 7));
        assert!(GroupSpec::parse("DP(A5)").is_err());
        assert!(GroupSpec::parse("Foo").is_err());
        assert!(GroupSpec::parse("A").is_err());
        assert!(GroupSpec::parse("E2^").is_err());
    }

    #[test]
    fn orders_match_formulas() {
        for name in [
            "trivial", "A1", "A2", "A3", "A4", "A5", "A6", "S1", "S2", "S3", "S5", "S6", "C1", "C7", "D4",
            "D5", "E2^4", "E3^2", "Q8", "AGL1(4)", "AGL1(5)", "AGL1(8)", "AGL1(9)", "PSL2(4)",
            "PSL2(9)", "PGL2(8)", "PGammaL2(4)", "PSigmaL2(9)", "M10", "ASL24A", "DP(A5,C7)",
            "POW(C2,3)",
        ] {
            describe(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert!(build("E4^2").is_err());
        assert!(build("PSL2(11)").is_err());
        assert!(build("D2").is_err());
    }
}
