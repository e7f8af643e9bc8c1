//! Arithmetic tables for the fields of order 2, 3, 4, 5, 7, 8, 9.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! of its coefficient vector modulo a fixed irreducible polynomial.

use crate::error::{GroupError, Result};

#[derive(Clone, Debug)]
pub struct FieldTable {
    p: u8,
    k: u32,
    q: u8,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    primitive: u8,
}

/// Low-order coefficients of the monic modulus `x^k + ...`, or `None` for a
/// prime field.
fn modulus(q: u32) -> Option<(u8, u32, Option<Vec<u8>>)> {
    match q {
        2 | 3 | 5 | 7 => Some((q as u8, 1, None)),
        // x^2 + x + 1
        4 => Some((2, 2, Some(vec![1, 1]))),
        // x^3 + x + 1
        8 => Some((2, 3, Some(vec![1, 1, 0]))),
        // x^2 + 1
        9 => Some((3, 2, Some(vec![1, 0]))),
        _ => None,
    }
}

fn digits(x: u8, p: u8, k: u32) -> Vec<u8> {
    let mut v = Vec::with_capacity(k as usize);
    let mut x = x;
    for _ in 0..k {
        v.push(x % p);
        x /= p;
    }
    v
}

fn undigits(v: &[u8], p: u8) -> u8 {
    v.iter().rev().fold(0, |acc, &d| acc * p + d)
}

impl FieldTable {
    pub fn new(q: u32) -> Result<FieldTable> {
        let (p, k, low) =
            modulus(q).ok_or_else(|| GroupError::Unsupported(format!("field of order {q}")))?;
        let qq = q as usize;
        let mut add = vec![0u8; qq * qq];
        let mut mul = vec![0u8; qq * qq];
        for a in 0..qq {
            let da = digits(a as u8, p, k);
            for b in 0..qq {
                let db = digits(b as u8, p, k);
                let s: Vec<u8> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * qq + b] = undigits(&s, p);
                // schoolbook product, then reduce x^j for j >= k
                let mut prod = vec![0u32; 2 * k as usize];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] += x as u32 * y as u32;
                    }
                }
                if let Some(low) = &low {
                    for j in (k as usize..prod.len()).rev() {
                        let c = prod[j] % p as u32;
                        prod[j] = 0;
                        // x^j = x^{j-k} * x^k = -x^{j-k} * low(x)
                        for (i, &l) in low.iter().enumerate() {
                            prod[j - k as usize + i] += (p as u32 - 1) * c * l as u32;
                        }
                    }
                }
                let r: Vec<u8> = prod[..k as usize].iter().map(|&c| (c % p as u32) as u8).collect();
                mul[a * qq + b] = undigits(&r, p);
            }
        }
        let neg = (0..qq)
            .map(|a| (0..qq).find(|&b| add[a * qq + b] == 0).unwrap() as u8)
            .collect();
        let mut inv = vec![0u8; qq];
        for a in 1..qq {
            inv[a] = (1..qq)
                .find(|&b| mul[a * qq + b] == 1)
                .ok_or_else(|| GroupError::Internal(format!("no inverse of {a} in GF({q})")))?
                as u8;
        }
        let mut f = FieldTable {
            p,
            k,
            q: q as u8,
            add,
            mul,
            neg,
            inv,
            primitive: 0,
        };
        f.check_axioms()?;
        f.primitive = (1..q as u8)
            .find(|&a| f.mult_order(a) == q - 1)
            .ok_or_else(|| GroupError::Internal(format!("GF({q}) has no primitive element")))?;
        Ok(f)
    }

    fn check_axioms(&self) -> Result<()> {
        let q = self.q;
        let bad = |what: &str| Err(GroupError::Internal(format!("GF({q}): {what} fails")));
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a {
                return bad("identity");
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return bad("commutativity");
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                        || self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                    {
                        return bad("associativity or distributivity");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> u32 {
        self.q as u32
    }

    pub fn characteristic(&self) -> u32 {
        self.p as u32
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `0` has none.
    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: u8, e: u32) -> u8 {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    /// The least element (as an integer code) generating the multiplicative
    /// group.
    pub fn primitive(&self) -> u8 {
        self.primitive
    }

    pub fn frobenius(&self, a: u8) -> u8 {
        self.pow(a, self.p as u32)
    }

    fn mult_order(&self, a: u8) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}
