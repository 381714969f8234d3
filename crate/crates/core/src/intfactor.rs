//! Integer primality testing and factorization.
//!
//! Trial division by small primes, deterministic Miller-Rabin below the
//! proven 64-bit base set, randomized-base Miller-Rabin with a fixed seed
//! above it, and Brent's variant of Pollard rho for splitting. Desk-scale
//! inputs only; this is plumbing for norm and denominator support sets.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;

const SMALL_PRIME_LIMIT: u64 = 10_000;

fn small_primes() -> Vec<u64> {
    let n = SMALL_PRIME_LIMIT as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i as u64)
        .collect()
}

fn mod_pow(base: &BigUint, exp: &BigUint, modulus: &BigUint) -> BigUint {
    base.modpow(exp, modulus)
}

fn miller_rabin_witness(n: &BigUint, a: &BigUint) -> bool {
    // Returns true if `a` witnesses n composite.
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    let mut x = mod_pow(&(a % n), &d, n);
    if x.is_zero() {
        return false; // a divisible by n
    }
    if x == one || x == n1 {
        return false;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return false;
        }
    }
    true
}

/// Primality test, exact for u64-size inputs, overwhelming confidence above.
pub fn is_prime(n: &BigUint) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let pb = BigUint::from(p);
        if n == &pb {
            return true;
        }
        if (n % &pb).is_zero() {
            return false;
        }
    }
    // These twelve bases are a proven deterministic set below 3.3 * 10^24.
    let deterministic_limit = BigUint::parse_bytes(b"3317044064679887385961981", 10).unwrap();
    let bases: Vec<BigUint> = if n < &deterministic_limit {
        [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
            .iter()
            .map(|&b| BigUint::from(b))
            .collect()
    } else {
        // Fixed pseudo-random bases keep the result deterministic.
        let mut bases = Vec::new();
        let mut x = BigUint::from(0x9e3779b97f4a7c15u64);
        for _ in 0..48 {
            x = (&x * BigUint::from(6364136223846793005u64) + BigUint::from(1442695040888963407u64))
                % (n - BigUint::from(3u32));
            bases.push(&x + BigUint::from(2u32));
        }
        bases
    };
    !bases.iter().any(|a| miller_rabin_witness(n, a))
}

fn pollard_brent(n: &BigUint) -> Option<BigUint> {
    // Brent cycle detection with batched gcds; deterministic parameter sweep.
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return Some(two);
    }
    for c in 1u64..64 {
        let cb = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &cb) % n;
        let mut y = BigUint::from(2u64 + c);
        let (mut r, mut q) = (BigUint::one(), BigUint::one());
        let (mut g, mut x, mut ys) = (BigUint::one(), y.clone(), y.clone());
        let m = 128u32;
        while g == one {
            x = y.clone();
            let r_u = r.to_u64().unwrap_or(u64::MAX);
            for _ in 0..r_u {
                y = f(&y);
            }
            let mut k = 0u64;
            while k < r_u && g == one {
                ys = y.clone();
                let batch = m.min((r_u - k) as u32);
                for _ in 0..batch {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (&q * &diff) % n;
                }
                g = q.gcd(n);
                k += batch as u64;
            }
            r = &r * &two;
            if r.bits() > 40 {
                break;
            }
        }
        if g == *n {
            // Backtrack one step at a time.
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if g > one && g < *n {
            return Some(g);
        }
    }
    None
}

/// Full factorization of a positive integer into prime -> exponent.
pub fn factorize(n: &BigUint) -> BTreeMap<BigUint, u32> {
    assert!(!n.is_zero(), "factorize(0)");
    let mut out = BTreeMap::new();
    let mut rest = n.clone();
    for p in small_primes() {
        if rest.is_one() {
            return out;
        }
        let pb = BigUint::from(p);
        while (&rest % &pb).is_zero() {
            *out.entry(pb.clone()).or_insert(0) += 1;
            rest /= &pb;
        }
        if &pb * &pb > rest {
            break;
        }
    }
    if rest.is_one() {
        return out;
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        // Perfect-power check helps rho on squares.
        if let Some(r) = perfect_power_root(&m) {
            stack.push(m / &r);
            stack.push(r);
            continue;
        }
        let d = pollard_brent(&m).expect("pollard rho failed to split composite");
        stack.push(m / &d);
        stack.push(d);
    }
    out
}

fn perfect_power_root(n: &BigUint) -> Option<BigUint> {
    for k in [2u32, 3, 5, 7] {
        let r = num_integer::Roots::nth_root(n, k);
        if r.pow(k) == *n && r > BigUint::one() {
            return Some(r);
        }
    }
    None
}

/// Distinct prime divisors of |n| for a nonzero integer.
pub fn prime_divisors(n: &BigInt) -> Vec<BigUint> {
    let mag = n.magnitude();
    assert!(!mag.is_zero());
    factorize(mag).into_keys().collect()
}

/// q-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, q: &BigUint) -> u64 {
    assert!(!n.is_zero(), "valuation of zero");
    let mut v = 0;
    let mut m = n.magnitude().clone();
    let q = q.clone();
    while (&m % &q).is_zero() {
        m /= &q;
        v += 1;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_and_carmichael() {
        assert!(is_prime(&BigUint::from(2u32)));
        assert!(is_prime(&BigUint::from(97u32)));
        assert!(!is_prime(&BigUint::from(1u32)));
        assert!(!is_prime(&BigUint::from(561u32))); // Carmichael
        assert!(is_prime(&BigUint::from(1_000_000_007u64)));
        assert!(!is_prime(&BigUint::from(1_000_000_007u64 * 998_244_353)));
    }

    #[test]
    fn factorization_roundtrip() {
        for n in [1u64, 2, 12, 360, 1024, 104729 * 104729, 600_851_475_143] {
            let nb = BigUint::from(n);
            let f = factorize(&nb);
            let mut prod = BigUint::one();
            for (p, e) in &f {
                assert!(is_prime(p), "{p} not prime in factorization of {n}");
                prod *= p.pow(*e);
            }
            assert_eq!(prod, nb);
        }
    }

    #[test]
    fn valuation_counts_exactly() {
        let n = BigInt::from(-2000); // -2^4 * 5^3
        assert_eq!(valuation(&n, &BigUint::from(2u32)), 4);
        assert_eq!(valuation(&n, &BigUint::from(5u32)), 3);
        assert_eq!(valuation(&n, &BigUint::from(7u32)), 0);
    }
}
