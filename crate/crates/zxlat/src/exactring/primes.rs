//! Integer primality and factorization (trial division + Brent's rho).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};

fn mulmod(a: u128, b: u128, m: u128) -> u128 {
    // m < 2^64, so the product fits in u128
    a % m * (b % m) % m
}

fn powmod(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut acc = 1u128 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a as u128, d as u128, n as u128);
        if x == 1 || x == n as u128 - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n as u128);
            if x == n as u128 - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn brent_rho(n: u64) -> u64 {
    // n odd composite, not a prime power of interest; returns a proper factor
    let nn = n as u128;
    for c in 1u128.. {
        let f = |x: u128| (mulmod(x, x, nn) + c) % nn;
        let (mut x, mut y, mut d) = (2u128, 2u128, 1u128);
        let mut count = 0u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u128(x.abs_diff(y), nn);
            count += 1;
            if count > 1 << 22 {
                break;
            }
        }
        if d != nn && d != 1 {
            return d as u64;
        }
    }
    unreachable!()
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn factor_u64_into(mut n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
    }
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = brent_rho(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

/// Prime factorization of n >= 1 as sorted (prime, multiplicity) pairs.
pub fn prime_factors(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    if !n.is_positive() {
        return Err(Error::Invalid(format!("prime_factors needs n >= 1, got {}", n)));
    }
    if n.is_one() {
        return Ok(Vec::new());
    }
    let mut primes: Vec<u64> = Vec::new();
    let mut rest = n.clone();
    // strip small factors so the remainder fits in u64 for realistic inputs
    for p in [2u64, 3, 5, 7, 11, 13] {
        let bp = BigInt::from(p);
        while rest.is_multiple_of(&bp) {
            primes.push(p);
            rest /= &bp;
        }
    }
    if !rest.is_one() {
        match rest.to_u64() {
            Some(v) => factor_u64_into(v, &mut primes),
            None => {
                return Err(Error::Invalid(format!(
                    "integer too large to factor: {}",
                    rest
                )))
            }
        }
    }
    primes.sort_unstable();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, m)) if *q == BigInt::from(p) => *m += 1,
            _ => out.push((BigInt::from(p), 1)),
        }
    }
    Ok(out)
}

/// Distinct prime divisors of |n|, ascending. n must be nonzero.
pub fn distinct_primes(n: &BigInt) -> Result<Vec<BigInt>> {
    Ok(prime_factors(&n.abs())?.into_iter().map(|(p, _)| p).collect())
}

/// Iterator over primes 2, 3, 5, ... via trial division (small use only).
pub fn small_primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime_u64(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_small() {
        let f = prime_factors(&BigInt::from(4)).unwrap();
        assert_eq!(f, vec![(BigInt::from(2), 2)]);
        assert!(prime_factors(&BigInt::one()).unwrap().is_empty());
        let f = prime_factors(&BigInt::from(12)).unwrap();
        assert_eq!(f, vec![(BigInt::from(2), 2), (BigInt::from(3), 1)]);
    }

    #[test]
    fn factors_larger() {
        let n = BigInt::from(1_000_003u64 * 999_983);
        let f = prime_factors(&n).unwrap();
        assert_eq!(
            f,
            vec![(BigInt::from(999_983), 1), (BigInt::from(1_000_003), 1)]
        );
    }
}
