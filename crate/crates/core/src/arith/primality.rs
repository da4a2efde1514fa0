//! Deterministic Miller–Rabin primality for 64-bit integers.

/// Witnesses covering every n < 2⁶⁴ (Sinclair's seven-base set).
const WITNESSES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    (a as u128 * b as u128 % n as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// True iff `n` is prime; deterministic for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in SMALL {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &w in &WITNESSES {
        let a = w % n;
        if a == 0 {
            continue;
        }
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

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent probabilistic check: Miller–Rabin with 64 rounds of
    /// pseudo-random bases from a splitmix64 stream. Written separately from
    /// `is_prime` on purpose; used as the oracle for inputs where trial
    /// division is infeasible.
    fn probable_prime_64_rounds(n: u64, mut seed: u64) -> bool {
        if n < 4 {
            return n == 2 || n == 3;
        }
        if n % 2 == 0 {
            return false;
        }
        let mut next = move || {
            seed = seed.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = seed;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        let s = (n - 1).trailing_zeros();
        let d = (n - 1) >> s;
        'round: for _ in 0..64 {
            let a = 2 + next() % (n - 3);
            let mut x = pow_mod(a, d, n);
            if x == 1 || x == n - 1 {
                continue;
            }
            for _ in 1..s {
                x = mul_mod(x, x, n);
                if x == n - 1 {
                    continue 'round;
                }
            }
            return false;
        }
        true
    }

    #[test]
    fn small_cases() {
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(!is_prime(4));
        assert!(is_prime(71));
    }

    #[test]
    fn known_composites() {
        // Carmichael numbers and strong-pseudoprime bait
        for n in [561, 1105, 1729, 25326001, 3215031751, 3825123056546413051] {
            assert!(!is_prime(n), "{n} is composite");
        }
        assert!(!is_prime(u64::MAX)); // 2⁶⁴ − 1 = 3·5·17·257·641·65537·6700417
    }

    #[test]
    fn mersenne_61_is_prime() {
        let m61 = (1u64 << 61) - 1;
        assert!(
            probable_prime_64_rounds(m61, 0x5eed_0001),
            "oracle disagrees"
        );
        assert!(is_prime(m61));
    }

    #[test]
    fn agrees_with_independent_test_on_large_words() {
        for k in 0..400u64 {
            let n = u64::MAX - k;
            assert_eq!(
                is_prime(n),
                probable_prime_64_rounds(n, n ^ 0xdead_beef),
                "disagreement at {n}"
            );
        }
    }

    #[test]
    fn agrees_with_trial_division_below_2000() {
        for n in 0..2000u64 {
            let by_trial = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime(n), by_trial, "n = {n}");
        }
    }
}
