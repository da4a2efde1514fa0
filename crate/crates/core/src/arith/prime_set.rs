//! Sets of primes described by residue classes plus explicit adjustments.

use std::collections::BTreeSet;

use super::primality::is_prime;
use crate::arith::gcd;
use crate::error::{Error, Result};

/// A set of primes: the primes in given residue classes mod `modulus`,
/// adjusted by finite include/exclude lists.
///
/// Residues must be coprime to the modulus; primes dividing the modulus can
/// only enter through the include list. Membership is a pure predicate, so
/// the same set can describe S₁ = {p ≡ 1 mod 4}, the full set of primes
/// (modulus 1, residue 0) or the empty set (modulus 1, no residues).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSet {
    modulus: u64,
    residues: BTreeSet<u64>,
    extra_include: BTreeSet<u64>,
    extra_exclude: BTreeSet<u64>,
}

impl PrimeSet {
    pub fn new(modulus: u64, residues: impl IntoIterator<Item = u64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Parameter(
                "prime-set modulus must be positive".into(),
            ));
        }
        let mut set = BTreeSet::new();
        for r in residues {
            if r >= modulus {
                return Err(Error::Parameter(format!(
                    "residue {r} is not in [0, {modulus})"
                )));
            }
            if gcd(r, modulus) != 1 {
                return Err(Error::Parameter(format!(
                    "residue {r} is not coprime to the modulus {modulus}"
                )));
            }
            set.insert(r);
        }
        Ok(Self {
            modulus,
            residues: set,
            extra_include: BTreeSet::new(),
            extra_exclude: BTreeSet::new(),
        })
    }

    /// Every prime.
    pub fn all_primes() -> Self {
        Self::new(1, [0]).expect("0 is coprime to 1")
    }

    /// No primes; `s_part` relative to this set is identically 1.
    pub fn empty() -> Self {
        Self::new(1, []).expect("no residues")
    }

    /// Adds an explicit prime to the set (overrides the residue test).
    pub fn include(mut self, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Parameter(format!("include entry {p} is not prime")));
        }
        self.extra_exclude.remove(&p);
        self.extra_include.insert(p);
        Ok(self)
    }

    /// Removes an explicit prime from the set (overrides the residue test).
    pub fn exclude(mut self, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Parameter(format!("exclude entry {p} is not prime")));
        }
        self.extra_include.remove(&p);
        self.extra_exclude.insert(p);
        Ok(self)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> impl Iterator<Item = u64> + '_ {
        self.residues.iter().copied()
    }

    /// Membership predicate. Callers pass primes; the predicate itself is a
    /// deterministic function of `p mod modulus` and the explicit lists.
    pub fn contains(&self, p: u64) -> bool {
        if self.extra_exclude.contains(&p) {
            return false;
        }
        if self.extra_include.contains(&p) {
            return true;
        }
        self.residues.contains(&(p % self.modulus))
    }
}
