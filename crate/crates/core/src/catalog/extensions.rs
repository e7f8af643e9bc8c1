//! The two affine groups 2^4:A5 of order 960, and the groups `M` with
//! `|M| = p|N|` containing a simple group `N` as a normal subgroup.

use crate::catalog::field::FieldTable;
use crate::catalog::grammar::{alternating, cyclic, symmetric};
use crate::catalog::projective::{m10, pgammal2, pgl2, psl2};
use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure::product::direct_product;

/// GF(4)^2 with SL(2,4) acting linearly, plus translations. The vector
/// `(a, b)` is point `4a + b + 1`.
pub fn asl24a() -> Result<PermGroup> {
    let f = FieldTable::new(4)?;
    let z = f.primitive();
    let zi = f.inv(z).unwrap();
    let pt = |a: u8, b: u8| a as usize * 4 + b as usize + 1;
    let linear = |m: [u8; 4]| -> Result<Permutation> {
        let mut images = vec![0; 16];
        for a in 0..4 {
            for b in 0..4 {
                let x = f.add(f.mul(m[0], a), f.mul(m[1], b));
                let y = f.add(f.mul(m[2], a), f.mul(m[3], b));
                images[pt(a, b) - 1] = pt(x, y);
            }
        }
        Permutation::from_images(&images)
    };
    let mut translate = vec![0; 16];
    for a in 0..4 {
        for b in 0..4 {
            translate[pt(a, b) - 1] = pt(f.add(a, 1), b);
        }
    }
    let gens = vec![
        Permutation::from_images(&translate)?,
        linear([1, 1, 0, 1])?,
        linear([z, 0, 0, zi])?,
        linear([0, 1, 1, 0])?,
    ];
    PermGroup::new(16, gens).map(|g| g.with_name("ASL24A"))
}

/// The even-weight vectors of GF(2)^5 with A5 permuting coordinates, plus
/// translations. Vectors are numbered by increasing bitmask.
pub fn asl24b() -> Result<PermGroup> {
    let vectors: Vec<u32> = (0u32..32).filter(|v| v.count_ones() % 2 == 0).collect();
    let slot = |v: u32| vectors.iter().position(|&w| w == v).unwrap() + 1;
    let coord_perm = |sigma: [u32; 5]| -> Result<Permutation> {
        let images: Vec<usize> = vectors
            .iter()
            .map(|&v| {
                let w = (0..5).filter(|&i| v >> i & 1 == 1).fold(0, |acc, i| acc | 1 << sigma[i]);
                slot(w)
            })
            .collect();
        Permutation::from_images(&images)
    };
    let translate: Vec<usize> = vectors.iter().map(|&v| slot(v ^ 0b11)).collect();
    let gens = vec![
        Permutation::from_images(&translate)?,
        coord_perm([1, 2, 3, 4, 0])?,
        coord_perm([0, 1, 3, 4, 2])?,
    ];
    PermGroup::new(16, gens).map(|g| g.with_name("ASL24B"))
}

/// One group of order `p|N|` with `N` normal.
#[derive(Clone, Debug)]
pub struct ExtensionMember {
    pub prime: u64,
    pub group: PermGroup,
}

/// For each prime `p` dividing `|N|`, `N x C_p` followed by the subgroups
/// of Aut(N) in which N has index `p`.
pub fn extension_family(n_name: &str) -> Result<Vec<ExtensionMember>> {
    let (n, primes): (PermGroup, &[u64]) = match n_name {
        "A5" => (alternating(5)?, &[2, 3, 5]),
        "A6" => (alternating(6)?, &[2, 3, 5]),
        "PSL2(7)" => (psl2(7)?, &[2, 3, 7]),
        "PSL2(8)" => (psl2(8)?, &[2, 3, 7]),
        other => {
            return Err(GroupError::Unsupported(format!(
                "extension family of {other}"
            )))
        }
    };
    let mut out = Vec::new();
    for &p in primes {
        out.push(ExtensionMember {
            prime: p,
            group: direct_product(&n, &cyclic(p as usize)?),
        });
        let overgroups: Vec<PermGroup> = match (n_name, p) {
            ("A5", 2) => vec![symmetric(5)?],
            ("A6", 2) => vec![symmetric(6)?, pgl2(9)?, m10()?],
            ("PSL2(7)", 2) => vec![pgl2(7)?],
            ("PSL2(8)", 3) => vec![pgammal2(8)?],
            _ => Vec::new(),
        };
        out.extend(overgroups.into_iter().map(|group| ExtensionMember { prime: p, group }));
    }
    Ok(out)
}
