//! Checkpointed partial sums and products over primes.
//!
//! Covered here: the truncated double sum giving the log of the
//! representation zeta series of the procyclic group attached to a prime set
//! `S`, its one-term minorant `Σ (p−1)_S · p^{−2+ε}`, the divergence-witness
//! sum `Σ_{p∈P_f} p^{−(1−ε)}`, the shifted partial Riemann zeta Euler
//! product over `S`, and the normalized count ratio `π(N;f)·ln(N)^{3/2}/N`.
//!
//! Every series reports values at checkpoints (powers of ten by default,
//! always including the limit itself). Terms accumulate through compensated
//! summation with fixed partitioning, so values are identical for every
//! thread count; finite truncations are all this module ever reports — no
//! convergence or divergence claim is made from finite data.

use crate::arith::{is_prime, s_part, sieve_primes, PrimeSet};
use crate::error::{Error, Result};
use crate::exec;
use crate::primesets::enumerate_pf;
use crate::quadform::BinaryQuadraticForm;
use crate::sum::{compensated_sum_chunked, CompensatedSum};

/// Partial sums of a nonnegative series at increasing cutoffs.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialSumSeries {
    /// The effective exponent parameter of the summed terms.
    pub parameter_s: f64,
    /// The ε parameter, for the series that have one.
    pub epsilon: Option<f64>,
    /// `(N, value)` pairs, ascending in `N`, values nondecreasing.
    pub checkpoints: Vec<(u64, f64)>,
    /// For the truncated double sum with `s > 1`: an upper bound on the mass
    /// discarded by the per-prime truncation of the inner sum.
    pub tail_bound: Option<f64>,
}

impl PartialSumSeries {
    /// Value at the final checkpoint.
    pub fn final_value(&self) -> f64 {
        self.checkpoints.last().map_or(0.0, |&(_, v)| v)
    }
}

/// Powers of ten below `limit`, then `limit` itself.
pub fn default_checkpoints(limit: u64) -> Vec<u64> {
    let mut cps = Vec::new();
    let mut n = 10u64;
    while n < limit {
        cps.push(n);
        n = match n.checked_mul(10) {
            Some(next) => next,
            None => break,
        };
    }
    cps.push(limit);
    cps
}

fn resolve_checkpoints(limit: u64, user: Option<&[u64]>) -> Result<Vec<u64>> {
    match user {
        None => Ok(default_checkpoints(limit)),
        Some(cps) => {
            if cps.is_empty() {
                return Err(Error::Parameter("checkpoint list is empty".into()));
            }
            if !cps.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::Parameter(
                    "checkpoints must be strictly increasing".into(),
                ));
            }
            if *cps.last().unwrap() > limit {
                return Err(Error::Parameter(format!(
                    "checkpoint {} exceeds the limit {limit}",
                    cps.last().unwrap()
                )));
            }
            Ok(cps.to_vec())
        }
    }
}

/// Sums `term(p)` over the given ascending primes, reporting the running
/// total at each checkpoint. Terms inside a checkpoint segment are reduced
/// with fixed chunking; segment sums then feed one compensated accumulator
/// in order. The output therefore depends only on the inputs.
fn series_over_primes(
    primes: &[u64],
    checkpoints: &[u64],
    term: impl Fn(u64) -> f64 + Sync,
) -> Vec<(u64, f64)> {
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut acc = CompensatedSum::new();
    let mut start = 0usize;
    for &cp in checkpoints {
        let end = start + primes[start..].partition_point(|&p| p <= cp);
        let terms = exec::map_slice(&primes[start..end], |&p| term(p));
        acc.add(compensated_sum_chunked(&terms));
        out.push((cp, acc.value()));
        start = end;
    }
    out
}

/// Largest `j` with `p^j` representable in a 64-bit word, for `p ≥ 2`
/// (smaller `p` never overflow, so the overall cap of 64 is returned).
pub fn max_power_exponent(p: u64) -> u32 {
    if p < 2 {
        return 64;
    }
    let mut j = 1u32;
    let mut v = p;
    while let Some(next) = v.checked_mul(p) {
        v = next;
        j += 1;
    }
    j
}

/// `|Hom(H_S, F_{p^j}^×)| = (p^j − 1)_S`.
pub fn hom_count(set: &PrimeSet, p: u64, j: u32) -> Result<u64> {
    if j == 0 {
        return Err(Error::Parameter("exponent j must be positive".into()));
    }
    if !is_prime(p) {
        return Err(Error::Parameter(format!("{p} is not prime")));
    }
    let q = p
        .checked_pow(j)
        .ok_or_else(|| Error::Range(format!("{p}^{j} overflows a 64-bit word")))?;
    Ok(s_part(q - 1, set))
}

/// `s_part(p^j − 1, set)` for `j = 1..=j_max`, splitting `p^j − 1` into its
/// cyclotomic factors `Φ_d(p)` so each piece is factorized once. Valid
/// because the S-part is completely multiplicative.
fn s_parts_of_prime_powers(p: u64, j_max: u32, set: &PrimeSet) -> Vec<u64> {
    let j_max = j_max as usize;
    let mut phi_value = vec![1u64; j_max + 1];
    let mut phi_s_part = vec![1u64; j_max + 1];
    let mut out = Vec::with_capacity(j_max);
    for j in 1..=j_max {
        // Φ_j(p) = (p^j − 1) / ∏_{d | j, d < j} Φ_d(p)
        let mut v = p.pow(j as u32) - 1;
        for d in 1..j {
            if j % d == 0 {
                v /= phi_value[d];
            }
        }
        phi_value[j] = v;
        phi_s_part[j] = s_part(v, set);
        let mut sp = 1u64;
        for d in 1..=j {
            if j % d == 0 {
                sp *= phi_s_part[d];
            }
        }
        out.push(sp);
    }
    out
}

/// Truncation of `Σ_p Σ_j (p^j − 1)_S · p^{−sj} / j` over `p ≤ N`.
///
/// The inner sum runs to `min(j_limit, largest j with p^j in range)`; with no
/// explicit `j_limit` the exponent `s` must exceed 1 (geometric tail) and the
/// word-size cap alone applies. For `s > 1` the returned series carries an
/// upper bound on the truncated tail mass.
pub fn weil_log_partial(
    set: &PrimeSet,
    s: f64,
    prime_limit: u64,
    j_limit: Option<u32>,
    checkpoints: Option<&[u64]>,
) -> Result<PartialSumSeries> {
    if !s.is_finite() {
        return Err(Error::Parameter("s must be finite".into()));
    }
    if s <= 1.0 && j_limit.is_none() {
        return Err(Error::Parameter(
            "s ≤ 1 needs an explicit j_limit: the inner sum has no geometric tail".into(),
        ));
    }
    if j_limit == Some(0) {
        return Err(Error::Parameter("j_limit must be positive".into()));
    }
    let cps = resolve_checkpoints(prime_limit, checkpoints)?;
    let primes = sieve_primes(prime_limit)?;
    let j_cap = j_limit.unwrap_or(64).min(64);

    let inner = |p: u64| -> f64 {
        let j_max = j_cap.min(max_power_exponent(p));
        let s_parts = s_parts_of_prime_powers(p, j_max, set);
        let base = p as f64;
        let mut acc = CompensatedSum::new();
        for (idx, &sp) in s_parts.iter().enumerate() {
            let j = (idx + 1) as f64;
            acc.add(sp as f64 * base.powf(-s * j) / j);
        }
        acc.value()
    };
    let checkpoints = series_over_primes(&primes, &cps, inner);

    let tail_bound = if s > 1.0 {
        let tails = exec::map_slice(&primes, |&p| {
            let j_max = j_cap.min(max_power_exponent(p));
            let r = (p as f64).powf(1.0 - s);
            // Σ_{j > J} r^j / j ≤ r^{J+1} / ((J+1)(1 − r))
            r.powi(j_max as i32 + 1) / ((j_max as f64 + 1.0) * (1.0 - r))
        });
        Some(compensated_sum_chunked(&tails))
    } else {
        None
    };

    Ok(PartialSumSeries {
        parameter_s: s,
        epsilon: None,
        checkpoints,
        tail_bound,
    })
}

/// `Σ_{p ≤ N} (p − 1)_S · p^{−2+ε}`, the one-term minorant of the truncated
/// double sum at `s = 2 − ε`.
pub fn minorant_partial(
    set: &PrimeSet,
    epsilon: f64,
    prime_limit: u64,
    checkpoints: Option<&[u64]>,
) -> Result<PartialSumSeries> {
    ensure_epsilon(epsilon)?;
    let cps = resolve_checkpoints(prime_limit, checkpoints)?;
    let primes = sieve_primes(prime_limit)?;
    let checkpoints = series_over_primes(&primes, &cps, |p| {
        s_part(p - 1, set) as f64 * (p as f64).powf(epsilon - 2.0)
    });
    Ok(PartialSumSeries {
        parameter_s: 2.0 - epsilon,
        epsilon: Some(epsilon),
        checkpoints,
        tail_bound: None,
    })
}

/// `Σ_{p ∈ P_f, p ≤ N} p^{−(1−ε)}`.
pub fn pf_sum_partial(
    f: &BinaryQuadraticForm,
    epsilon: f64,
    prime_limit: u64,
    checkpoints: Option<&[u64]>,
) -> Result<PartialSumSeries> {
    ensure_epsilon(epsilon)?;
    let cps = resolve_checkpoints(prime_limit, checkpoints)?;
    let pf = enumerate_pf(f, prime_limit)?;
    let checkpoints = series_over_primes(pf.primes(), &cps, |p| (p as f64).powf(epsilon - 1.0));
    Ok(PartialSumSeries {
        parameter_s: 1.0 - epsilon,
        epsilon: Some(epsilon),
        checkpoints,
        tail_bound: None,
    })
}

/// Euler-product partials of the shifted Riemann zeta over `S`:
/// `∏_{p ∈ S, p ≤ N} (1 − p^{−(s−1)})^{−1}`.
///
/// Every factor must exceed 1, i.e. `p^{−(s−1)} < 1`; with any prime of `S`
/// below the limit that forces `s > 1`.
pub fn partial_zeta_s(
    set: &PrimeSet,
    s: f64,
    prime_limit: u64,
    checkpoints: Option<&[u64]>,
) -> Result<PartialSumSeries> {
    if !s.is_finite() {
        return Err(Error::Parameter("s must be finite".into()));
    }
    let cps = resolve_checkpoints(prime_limit, checkpoints)?;
    let primes: Vec<u64> = sieve_primes(prime_limit)?
        .into_iter()
        .filter(|&p| set.contains(p))
        .collect();
    if s <= 1.0 && !primes.is_empty() {
        return Err(Error::Parameter(format!(
            "factor at p = {} is not below 1 for s = {s}",
            primes[0]
        )));
    }
    // accumulate in log space, then exponentiate per checkpoint
    let log_sums = series_over_primes(&primes, &cps, |p| -f64::ln_1p(-(p as f64).powf(1.0 - s)));
    Ok(PartialSumSeries {
        parameter_s: s,
        epsilon: None,
        checkpoints: log_sums.into_iter().map(|(n, v)| (n, v.exp())).collect(),
        tail_bound: None,
    })
}

/// `π(N; f) · ln(N)^{3/2} / N` at each checkpoint. Descriptive output for
/// growth inspection; the asymptotic constant itself is not desk-computable.
///
/// The lower-bound hypothesis needs `Δ_f` non-square; only positive
/// definite forms are accepted, and their discriminant is negative, so the
/// hypothesis holds for every supported input.
pub fn iwaniec_ratio(
    f: &BinaryQuadraticForm,
    limit: u64,
    checkpoints: Option<&[u64]>,
) -> Result<Vec<(u64, f64)>> {
    let cps = resolve_checkpoints(limit, checkpoints)?;
    let pf = enumerate_pf(f, limit)?;
    Ok(cps
        .into_iter()
        .map(|n| {
            let count = pf.count_leq(n) as f64;
            (n, count * (n as f64).ln().powf(1.5) / n as f64)
        })
        .collect())
}

fn ensure_epsilon(epsilon: f64) -> Result<()> {
    if epsilon.is_finite() && 0.0 < epsilon && epsilon < 1.0 {
        Ok(())
    } else {
        Err(Error::Parameter(format!(
            "epsilon must lie in (0, 1), got {epsilon}"
        )))
    }
}
