//! Integer factorization for the square-free decompositions used throughout.
//!
//! Trial division by primes below 1000 handles the common case; whatever
//! cofactor survives is split with Pollard-Brent rho after a deterministic
//! Miller-Rabin test.

use super::QError;

const TRIAL_LIMIT: u64 = 1000;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A non-trivial factor of the odd composite `n`.
fn pollard_brent(n: u64) -> u64 {
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        let mut q = 1u64;
        let mut ys = y;
        let mut r = 1u64;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            // batch overshot; step one at a time from the saved point
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("rho always finds a factor of a composite")
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let f = pollard_brent(n);
    split_into(f, out);
    split_into(n / f, out);
}

/// Prime factorization as ascending `(prime, exponent)` pairs. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "factorize(0)");
    let mut primes = Vec::new();
    let mut p = 2;
    while p < TRIAL_LIMIT && p * p <= n {
        while n.is_multiple_of(p) {
            primes.push(p);
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        if n < p * p {
            primes.push(n);
        } else {
            split_into(n, &mut primes);
        }
    }
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

/// Splits `n = k^2 * n0` with `n0` square-free; returns `(k, n0)`.
pub fn squarefree_decompose(n: u64) -> Result<(u64, u64), QError> {
    if n == 0 {
        return Err(QError::Zero);
    }
    let (mut k, mut n0) = (1u64, 1u64);
    for (p, e) in factorize(n) {
        k *= p.pow(e / 2);
        if e % 2 == 1 {
            n0 *= p;
        }
    }
    Ok((k, n0))
}

pub fn squarefree_part(n: u64) -> Result<u64, QError> {
    squarefree_decompose(n).map(|(_, n0)| n0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_squarefree(mut n: u64) -> u64 {
        let mut out = 1;
        let mut p = 2;
        while p * p <= n {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            if e % 2 == 1 {
                out *= p;
            }
            p += 1;
        }
        out * n
    }

    #[test]
    fn small_examples() {
        assert_eq!(squarefree_part(12).unwrap(), 3);
        assert_eq!(squarefree_part(22).unwrap(), 22);
        assert_eq!(squarefree_part(40).unwrap(), 10);
        assert_eq!(squarefree_part(1).unwrap(), 1);
        assert_eq!(squarefree_part(0), Err(QError::Zero));
        assert_eq!(squarefree_decompose(16170).unwrap(), (7, 330));
    }

    #[test]
    fn agrees_with_trial_division() {
        for n in 1..20_000u64 {
            assert_eq!(squarefree_part(n).unwrap(), trial_squarefree(n), "n={n}");
        }
    }

    #[test]
    fn large_cofactors_split() {
        // products of primes above the trial-division limit
        let cases: [(u64, &[(u64, u32)]); 4] = [
            (1_000_003 * 1_000_033, &[(1_000_003, 1), (1_000_033, 1)]),
            (1_009 * 1_009 * 1_013, &[(1_009, 2), (1_013, 1)]),
            (999_999_999_989, &[(999_999_999_989, 1)]),
            (4_294_967_291 * 3, &[(3, 1), (4_294_967_291, 1)]),
        ];
        for (n, want) in cases {
            assert_eq!(factorize(n), want.to_vec(), "n={n}");
        }
        assert_eq!(
            squarefree_decompose(1_009 * 1_009 * 1_013).unwrap(),
            (1_009, 1_013)
        );
    }

    #[test]
    fn primality_matches_sieve() {
        let limit = 10_000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (n, &p) in sieve.iter().enumerate() {
            assert_eq!(is_prime(n as u64), p, "n={n}");
        }
    }
}
