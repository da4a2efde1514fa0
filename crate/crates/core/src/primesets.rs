//! The standard prime sets S₁, S₂, S₃ and the prime sets `P_f` attached to
//! the genus of a quadratic form.
//!
//! `P_f` collects the primes `p` such that `p − 1` has a coprime
//! representation by some form in the genus of `f`. With the convention
//! `gcd(x, 0) = |x|`, the pair `(1, 0)` is coprime, so `p = 2` belongs to
//! `P_f` for any form representing 1.

use crate::arith::{sieve_primes, PrimeSet};
use crate::error::Result;
use crate::exec;
use crate::quadform::BinaryQuadraticForm;

/// The three residue-class sets used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardSet {
    /// Primes ≡ 1 (mod 4).
    S1,
    /// Primes ≡ 1 or 3 (mod 8).
    S2,
    /// Primes ≡ 1 (mod 3).
    S3,
}

pub fn standard_set(which: StandardSet) -> PrimeSet {
    match which {
        StandardSet::S1 => PrimeSet::new(4, [1]),
        StandardSet::S2 => PrimeSet::new(8, [1, 3]),
        StandardSet::S3 => PrimeSet::new(3, [1]),
    }
    .expect("standard residues are coprime to their moduli")
}

/// The primes `p ≤ limit` with `p − 1` coprime-representable by the genus of
/// `base_form`, together with the data that produced them.
#[derive(Debug, Clone)]
pub struct FormPrimeSet {
    base_form: BinaryQuadraticForm,
    genus_forms: Vec<BinaryQuadraticForm>,
    limit: u64,
    primes: Vec<u64>,
}

impl FormPrimeSet {
    pub fn base_form(&self) -> &BinaryQuadraticForm {
        &self.base_form
    }

    pub fn genus_forms(&self) -> &[BinaryQuadraticForm] {
        &self.genus_forms
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Member primes, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    /// `π(N; f)` for `N ≤ limit`: members that are `≤ n`.
    pub fn count_leq(&self, n: u64) -> u64 {
        self.primes.partition_point(|&p| p <= n) as u64
    }
}

/// Builds `P_f` up to `limit`: sieve the primes, then test each `p − 1`
/// against every reduced form in the genus of `f`.
///
/// The per-prime tests are independent and run in parallel when enabled; the
/// result is the ascending merge either way.
pub fn enumerate_pf(f: &BinaryQuadraticForm, limit: u64) -> Result<FormPrimeSet> {
    let genus_forms = f.genus_classes()?;
    let primes = sieve_primes(limit)?;
    let member = exec::map_slice(&primes, |&p| {
        genus_forms.iter().any(|g| {
            g.represents_coprime(p - 1)
                .expect("genus forms are positive definite and primitive")
                .is_some()
        })
    });
    let primes = primes
        .into_iter()
        .zip(member)
        .filter_map(|(p, m)| m.then_some(p))
        .collect();
    Ok(FormPrimeSet {
        base_form: *f,
        genus_forms,
        limit,
        primes,
    })
}

/// `π(N; f)`: the number of primes in `P_f` up to `limit`.
pub fn pi_f(limit: u64, f: &BinaryQuadraticForm) -> Result<u64> {
    Ok(enumerate_pf(f, limit)?.primes().len() as u64)
}
