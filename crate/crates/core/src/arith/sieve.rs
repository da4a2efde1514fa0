//! Segmented sieve of Eratosthenes.

use crate::error::{Error, Result};
use crate::exec;

/// Guard on sieve limits; larger requests get a range error instead of an
/// attempt to allocate the machine away.
pub const MAX_SIEVE_LIMIT: u64 = 1 << 40;

const SEGMENT_SIZE: u64 = 1 << 17;

/// All primes `≤ limit`, ascending.
///
/// Sieving is segmented, so memory stays `O(√limit + segment)`; segments are
/// independent and processed in parallel when enabled, then concatenated in
/// order, so the output never depends on thread count. Limits below 2 give
/// an empty list.
pub fn sieve_primes(limit: u64) -> Result<Vec<u64>> {
    if limit > MAX_SIEVE_LIMIT {
        return Err(Error::Range(format!(
            "sieve limit {limit} exceeds the configured maximum {MAX_SIEVE_LIMIT}"
        )));
    }
    if limit < 2 {
        return Ok(Vec::new());
    }
    let base = simple_sieve(limit.isqrt());

    let mut segments = Vec::new();
    let mut lo = 2u64;
    while lo <= limit {
        let hi = limit.min(lo + SEGMENT_SIZE - 1);
        segments.push((lo, hi));
        lo = hi + 1;
    }

    let per_segment = exec::map_slice(&segments, |&(lo, hi)| sieve_segment(lo, hi, &base));
    Ok(per_segment.into_iter().flatten().collect())
}

/// Plain sieve for the base primes up to `√limit`.
fn simple_sieve(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
        }
    }
    primes
}

/// Primes in the inclusive window `[lo, hi]`.
fn sieve_segment(lo: u64, hi: u64, base: &[u64]) -> Vec<u64> {
    let len = (hi - lo + 1) as usize;
    let mut composite = vec![false; len];
    for &p in base {
        if p * p > hi {
            break;
        }
        // first multiple of p in the window, never p itself
        let start = (p * p).max(lo.div_ceil(p) * p);
        let mut m = start;
        while m <= hi {
            composite[(m - lo) as usize] = true;
            m += p;
        }
    }
    (lo..=hi)
        .filter(|&n| n >= 2 && !composite[(n - lo) as usize])
        .collect()
}
