use crate::qcore::factorize;

fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn rem_euclid(a: i128, m: u64) -> u128 {
    a.rem_euclid(m as i128) as u128
}

/// Whether `x^2 = a (mod m)` has a solution. Every residue class is a square mod 1.
pub fn is_quadratic_residue(a: i128, m: u64) -> bool {
    assert!(m >= 1, "modulus must be positive");
    factorize(m)
        .into_iter()
        .all(|(p, e)| is_residue_mod_prime_power(a, p, e))
}

fn is_residue_mod_prime_power(a: i128, p: u64, e: u32) -> bool {
    let modulus = (p as u128).pow(e);
    let mut r = a.rem_euclid(modulus as i128) as u128;
    if r == 0 {
        return true;
    }
    let mut v = 0;
    while r.is_multiple_of(p as u128) {
        r /= p as u128;
        v += 1;
    }
    if v % 2 == 1 {
        return false;
    }
    let f = e - v;
    if p == 2 {
        match f {
            1 => true,
            2 => r % 4 == 1,
            _ => r % 8 == 1,
        }
    } else {
        pow_mod(r, (p as u128 - 1) / 2, p as u128) == 1
    }
}

/// A square root of `a` modulo the odd prime or 2 `p`.
fn sqrt_mod_prime(a: u128, p: u128) -> Option<u128> {
    let a = a % p;
    if a == 0 || p == 2 {
        return Some(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    // Tonelli-Shanks
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)?;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = t2 * t2 % p;
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    Some(r)
}

/// A witness `x` with `x^2 = a (mod m)` for square-free `m`, combined by CRT
/// from the prime factors. `None` when `a` is a non-residue or `m` is not
/// square-free.
pub fn sqrt_mod_squarefree(a: i128, m: u64) -> Option<u64> {
    assert!(m >= 1, "modulus must be positive");
    let mut acc: u128 = 0;
    let mut modulus: u128 = 1;
    for (p, e) in factorize(m) {
        if e > 1 {
            return None;
        }
        let p = p as u128;
        let root = sqrt_mod_prime(rem_euclid(a, p as u64), p)?;
        // acc + modulus * k = root (mod p)
        let inv = pow_mod(modulus % p, p - 2, p);
        let k = ((root + p - acc % p) % p) * inv % p;
        acc += modulus * k;
        modulus *= p;
    }
    Some((acc % modulus) as u64)
}
