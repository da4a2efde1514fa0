//! Arithmetic of binary quadratic forms and the prime sets they cut out.
//!
//! The crate has five layers:
//!
//! * [`arith`] — primes (segmented sieve, deterministic 64-bit Miller–Rabin),
//!   factorization, Legendre symbols, and S-parts `n_S` relative to a
//!   [`arith::PrimeSet`] given by residue classes.
//! * [`quadform`] — integer binary quadratic forms: discriminants, coprime
//!   representability with a complete search bound, reduction with a
//!   unimodular witness, proper equivalence, and genus via represented
//!   residues.
//! * [`primesets`] — the standard sets S₁, S₂, S₃ and the set `P_f` of primes
//!   `p` with `p − 1` coprime-representable by the genus of a form.
//! * [`zeta`] — checkpointed partial sums: the truncated log of the
//!   representation zeta series of a procyclic group, its minorant, the
//!   `P_f` divergence sum, shifted partial Riemann zeta Euler products, and
//!   the normalized prime-count ratio `π(N;f)·ln(N)^{3/2}/N`.
//! * [`verify`] — exhaustive range scans of the representability statements
//!   and corollary bounds, reported with counterexample witnesses.
//!
//! All operations are pure functions on immutable values. With the default
//! `parallel` feature the scans and reductions are data-parallel via rayon;
//! partitioning is fixed, so results are identical for every thread count
//! (and for the sequential fallback build).

pub mod arith;
mod error;
mod exec;
pub mod primesets;
pub mod quadform;
pub mod sum;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use exec::with_thread_pool;
