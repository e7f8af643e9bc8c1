//! Small number theory helpers.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(p, e)` pairs in increasing `p`.
pub fn factorize(mut n: u128) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d as u64, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n as u64, 1));
    }
    out
}

/// The `p`-part of `n`.
pub fn p_part(n: u128, p: u64) -> u128 {
    let mut m = n;
    let mut part = 1u128;
    while m.is_multiple_of(p as u128) {
        m /= p as u128;
        part *= p as u128;
    }
    part
}

/// `Some((p, k))` if `n = p^k` with `k >= 1`.
pub fn prime_power(n: u128) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

/// Multiplicative order of `a` modulo `m`; `None` when `gcd(a, m) != 1`.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if crate::perm::gcd(a % m, m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * (a % m) % m;
        k += 1;
    }
    Some(k)
}

/// Euler's totient.
pub fn totient(m: u64) -> u64 {
    factorize(m as u128)
        .into_iter()
        .fold(m, |acc, (p, _)| acc / p * (p - 1))
}

/// `a` generates the unit group modulo the prime `q`.
pub fn is_primitive_root(a: u64, q: u64) -> bool {
    multiplicative_order(a, q) == Some(totient(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert_eq!(factorize(960), vec![(2, 6), (3, 1), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(p_part(960, 2), 64);
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(12), None);
        assert!(is_primitive_root(2, 3));
        assert!(is_primitive_root(3, 2));
        assert!(!is_primitive_root(2, 7));
        assert!(is_primitive_root(3, 7));
        assert_eq!(multiplicative_order(2, 4), None);
    }
}
