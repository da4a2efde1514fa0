//! Integer factorization: trial division by sieved primes, a deterministic
//! primality short-circuit, and Brent's cycle finder for what remains.

use std::fmt;
use std::sync::OnceLock;

use super::primality::{is_prime, mul_mod};
use super::sieve::sieve_primes;
use crate::arith::gcd;

const TRIAL_BOUND: u64 = 1 << 10;

fn trial_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve_primes(TRIAL_BOUND).expect("static bound"))
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
///
/// The product of `prime^exponent` over all pairs equals the factored
/// integer; `factorize(1)` has no pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Exponent of `p` in the factored integer (0 if `p` does not divide it).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// Recomputes the factored integer.
    pub fn product(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factors a positive integer.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires a positive integer");
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut m = n;
    for &p in trial_primes() {
        if p * p > m {
            break;
        }
        if m % p == 0 {
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if m > 1 {
        if m <= TRIAL_BOUND * TRIAL_BOUND || is_prime(m) {
            // no factor ≤ TRIAL_BOUND remains, so m below the bound² is prime
            push_factor(&mut factors, m);
        } else {
            let mut stack = vec![m];
            while let Some(v) = stack.pop() {
                if is_prime(v) {
                    push_factor(&mut factors, v);
                } else {
                    let d = brent_rho(v);
                    stack.push(d);
                    stack.push(v / d);
                }
            }
        }
    }
    factors.sort_unstable_by_key(|&(p, _)| p);
    Factorization { factors }
}

fn push_factor(factors: &mut Vec<(u64, u32)>, p: u64) {
    if let Some(entry) = factors.iter_mut().find(|(q, _)| *q == p) {
        entry.1 += 1;
    } else {
        factors.push((p, 1));
    }
}

/// Brent's improvement of Pollard's rho. `n` must be an odd composite with
/// no factor below `TRIAL_BOUND`. The polynomial offset is swept
/// deterministically, so repeated runs split identically.
fn brent_rho(n: u64) -> u64 {
    debug_assert!(n % 2 == 1 && !is_prime(n));
    const BATCH: u64 = 128;
    for c in 1..64u64 {
        // x² + c mod n; the add widens so n near u64::MAX cannot wrap
        let step = |x: u64| ((mul_mod(x, x, n) as u128 + c as u128) % n as u128) as u64;
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0u64;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = step(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            // batched gcd collapsed; redo the last stretch one step at a time
            loop {
                ys = step(ys);
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
    unreachable!("rho offset sweep exhausted for {n}");
}
