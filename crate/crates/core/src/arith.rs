//! Small integer helpers shared by the index and field code.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Returns `(p, e)` with `q = p^e` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let mut e = 0;
    let mut t = q;
    while t > 1 {
        t /= p;
        e += 1;
    }
    Some((p, e))
}

/// Multiplicative order of `q` modulo `m`; `m` must be coprime to `q`.
/// The order modulo 1 is 1.
pub fn mult_order(q: u64, m: u64) -> u64 {
    if m <= 1 {
        return 1;
    }
    debug_assert_eq!(gcd(q % m, m), 1);
    let base = q % m;
    let mut x = base;
    let mut k = 1;
    while x != 1 {
        x = (x as u128 * base as u128 % m as u128) as u64;
        k += 1;
    }
    k
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Units of `Z_m` in increasing order. `Z_1` has the single unit `0`.
pub fn units(m: usize) -> Vec<usize> {
    if m == 1 {
        return vec![0];
    }
    (1..m).filter(|&u| gcd(u as u64, m as u64) == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn orders() {
        assert_eq!(mult_order(2, 7), 3);
        assert_eq!(mult_order(2, 3), 2);
        assert_eq!(mult_order(5, 24), 2);
        assert_eq!(mult_order(2, 105), 12);
        assert_eq!(mult_order(2, 1), 1);
    }
}
