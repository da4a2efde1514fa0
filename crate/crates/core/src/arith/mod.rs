//! Integer arithmetic foundation: primes, factorization, S-parts, Legendre
//! symbols.

mod factor;
mod primality;
mod prime_set;
mod sieve;

pub use factor::{factorize, Factorization};
pub use primality::is_prime;
use primality::pow_mod;
pub use prime_set::PrimeSet;
pub use sieve::{sieve_primes, MAX_SIEVE_LIMIT};

use crate::error::{Error, Result};

/// Greatest common divisor with the convention `gcd(x, 0) = |x|`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `gcd` on signed inputs, taking absolute values first.
pub fn gcd_i64(a: i64, b: i64) -> u64 {
    gcd(a.unsigned_abs(), b.unsigned_abs())
}

/// The S-part `n_S`: the largest divisor of `n` all of whose prime factors
/// lie in `set`.
///
/// `n` must be positive; `s_part(1, _) = 1`.
pub fn s_part(n: u64, set: &PrimeSet) -> u64 {
    debug_assert!(n >= 1);
    factorize(n)
        .factors()
        .iter()
        .filter(|(p, _)| set.contains(*p))
        .fold(1u64, |acc, &(p, e)| acc * p.pow(e))
}

/// Legendre symbol `(a/p)` for an odd prime `p`, by Euler's criterion.
///
/// Returns `0` iff `p | a`, else `1` iff `a` is a quadratic residue mod `p`.
pub fn legendre(a: i64, p: u64) -> Result<i64> {
    if p < 3 || p % 2 == 0 || !is_prime(p) {
        return Err(Error::NotAnOddPrime(p));
    }
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return Ok(0);
    }
    Ok(if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s1() -> PrimeSet {
        PrimeSet::new(4, [1]).unwrap()
    }

    fn s2() -> PrimeSet {
        PrimeSet::new(8, [1, 3]).unwrap()
    }

    #[test]
    fn gcd_convention() {
        assert_eq!(gcd(1, 0), 1);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd_i64(-4, 6), 2);
        assert_eq!(gcd_i64(-5, 0), 5);
    }

    #[test]
    fn s_part_examples() {
        assert_eq!(s_part(1, &s1()), 1);
        // 10 = 2·5 and 5 ≡ 1 mod 4
        assert_eq!(s_part(10, &s1()), 5);
        // 12 = 2²·3, neither factor in S₁
        assert_eq!(s_part(12, &s1()), 1);
    }

    #[test]
    fn s_part_divides_and_strips() {
        for set in [s1(), s2()] {
            for n in 1..=100_000u64 {
                let sp = s_part(n, &set);
                assert_eq!(n % sp, 0, "s_part({n}) must divide n");
                let rest = factorize(n / sp);
                assert!(
                    rest.factors().iter().all(|(p, _)| !set.contains(*p)),
                    "n / n_S has a prime factor in S for n = {n}"
                );
            }
        }
    }

    #[test]
    fn s_part_multiplicative_on_coprime_pairs() {
        let set = s1();
        let mut checked = 0u32;
        for m in 1..=200u64 {
            for n in 1..=10_000u64.min(m * 50) {
                if gcd(m, n) == 1 {
                    assert_eq!(s_part(m * n, &set), s_part(m, &set) * s_part(n, &set));
                    checked += 1;
                }
            }
        }
        assert!(checked > 1000);
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(5, 5).unwrap(), 0);
        // 2² ≡ −1 mod 5
        assert_eq!(legendre(-1, 5).unwrap(), 1);
        // −2 ≡ 1 ≡ 1² mod 3
        assert_eq!(legendre(-2, 3).unwrap(), 1);
    }

    #[test]
    fn legendre_rejects_non_odd_primes() {
        assert_eq!(legendre(3, 2), Err(Error::NotAnOddPrime(2)));
        assert_eq!(legendre(3, 9), Err(Error::NotAnOddPrime(9)));
        assert_eq!(legendre(3, 0), Err(Error::NotAnOddPrime(0)));
    }

    #[test]
    fn legendre_is_multiplicative() {
        for &p in &[
            3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
            89, 97,
        ] {
            for a in 1..p {
                for b in 1..p {
                    let lhs = legendre((a * b) as i64, p).unwrap();
                    let rhs = legendre(a as i64, p).unwrap() * legendre(b as i64, p).unwrap();
                    assert_eq!(lhs, rhs, "p={p} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn legendre_matches_square_enumeration() {
        for p in (3..=500u64).filter(|&p| is_prime(p)) {
            let mut squares = vec![false; p as usize];
            for x in 1..p {
                squares[(x * x % p) as usize] = true;
            }
            for a in 0..p {
                let expected = if a == 0 {
                    0
                } else if squares[a as usize] {
                    1
                } else {
                    -1
                };
                assert_eq!(legendre(a as i64, p).unwrap(), expected, "a={a} p={p}");
            }
        }
    }
}
