//! Exact integer arithmetic every other module consumes.
//!
//! All functions here are pure; results are deterministic across runs and
//! thread counts. Values are `u128` unless an operation is inherently
//! 64-bit; intermediates that could overflow go through checked or
//! widening arithmetic.

mod congruence;
mod factor;

pub use congruence::{
    crt_combine, multiplicative_order, primes_in_ap, ApScan, ArithmeticProgression, Congruence,
};
pub use factor::{divisors, factorize, factorize_u64, Factorization};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Primality verdict. `Prime` is exact (deterministic test below 2^64);
/// `ProbablePrime` comes from the strong probable-prime battery used above
/// 2^64 and is propagated into any certificate that depends on it.
/// `Composite` verdicts are always exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primality {
    Composite,
    Prime,
    ProbablePrime,
}

impl Primality {
    pub fn is_prime(self) -> bool {
        !matches!(self, Primality::Composite)
    }

    pub fn is_probable(self) -> bool {
        matches!(self, Primality::ProbablePrime)
    }
}

pub fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        a %= b;
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// `a * b mod m`. Exact for any `m < 2^127`.
pub fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    debug_assert!(m > 0 && m < 1u128 << 127);
    let (mut a, mut b) = (a % m, b % m);
    if m <= u64::MAX as u128 {
        return (a * b) % m;
    }
    // Shift-and-add; a + a cannot overflow because m < 2^127.
    if a < b {
        std::mem::swap(&mut a, &mut b);
    }
    let mut acc: u128 = 0;
    while b > 0 {
        if b & 1 == 1 {
            acc += a;
            if acc >= m {
                acc -= m;
            }
        }
        a += a;
        if a >= m {
            a -= m;
        }
        b >>= 1;
    }
    acc
}

/// `base^exp mod m` for `m < 2^127`, with `x^0 = 1` (also modulo 1, where
/// the result is 0).
pub fn mod_pow(base: u128, mut exp: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, when it exists.
pub fn mod_inv(a: u128, m: u128) -> Result<u128> {
    if m == 0 {
        return Err(Error::invalid("modulus must be positive"));
    }
    if m == 1 {
        return Ok(0);
    }
    // Extended Euclid tracking only the coefficient of `a`.
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        old_r -= q * r;
        std::mem::swap(&mut old_r, &mut r);
        old_s -= q * s;
        std::mem::swap(&mut old_s, &mut s);
    }
    if old_r != 1 {
        return Err(Error::NotInvertible {
            value: a % m,
            modulus: m,
        });
    }
    let inv = old_s.rem_euclid(m as i128) as u128;
    Ok(inv)
}

/// Deterministic Miller-Rabin for 64-bit integers.
///
/// The seven-base witness set is known to be exact for every n < 2^64.
pub fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in WITNESSES {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = mod_pow(a as u128, d as u128, n as u128) as u64;
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x as u128, x as u128, n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Splitmix step used to derive deterministic extra bases from the input.
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Primality of a 128-bit integer.
///
/// Exact (deterministic) below 2^64. Above, runs a strong probable-prime
/// battery: fixed small-prime bases plus bases derived deterministically
/// from `n`, so repeated runs agree. Composite verdicts are exact.
pub fn is_prime(n: u128) -> Primality {
    if n <= u64::MAX as u128 {
        return if is_prime_u64(n as u64) {
            Primality::Prime
        } else {
            Primality::Composite
        };
    }
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        if n % p == 0 {
            return Primality::Composite;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let strong = |a: u128| -> bool {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            return true;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                return true;
            }
        }
        false
    };
    for a in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71] {
        if !strong(a) {
            return Primality::Composite;
        }
    }
    let mut seed = (n as u64) ^ ((n >> 64) as u64) ^ 0xa076_1d64_78bd_642f;
    for _ in 0..20 {
        let a = 2 + (splitmix64(&mut seed) as u128) % (n - 3);
        if !strong(a) {
            return Primality::Composite;
        }
    }
    Primality::ProbablePrime
}

/// Primality of an arbitrary-precision natural.
///
/// Delegates to the exact 128-bit path when the value fits; otherwise the
/// same strong probable-prime battery over big integers.
pub fn is_prime_big(n: &BigUint) -> Primality {
    if let Ok(small) = u128::try_from(n) {
        return is_prime(small);
    }
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53] {
        if (n % p).is_zero() {
            return Primality::Composite;
        }
    }
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let strong = |a: &BigUint| -> bool {
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            return true;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                return true;
            }
        }
        false
    };
    for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71] {
        if !strong(&BigUint::from(a)) {
            return Primality::Composite;
        }
    }
    let digest: u64 = n
        .to_u64_digits()
        .iter()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, d| {
            (h ^ d).wrapping_mul(0x100_0000_01b3)
        });
    let mut seed = digest;
    let span = n - BigUint::from(3u32);
    for _ in 0..20 {
        let raw = BigUint::from(splitmix64(&mut seed));
        let a = &two + (raw % &span);
        if !strong(&a) {
            return Primality::Composite;
        }
    }
    Primality::ProbablePrime
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_prime_table_verdicts() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(6700417));
        assert!(!is_prime_u64(25));
        assert!(!is_prime_u64(0));
        assert!(!is_prime_u64(1));
        assert!(is_prime_u64(2_147_483_647)); // 2^31 - 1
        assert!(!is_prime_u64(4_294_967_297)); // 641 * 6700417
    }

    #[test]
    fn u128_primality_ties_out_with_u64() {
        for n in 0u128..2000 {
            assert_eq!(is_prime(n).is_prime(), is_prime_u64(n as u64), "n={n}");
        }
    }

    #[test]
    fn primality_above_64_bits_is_flagged_probable() {
        // 2^89 - 1 is a Mersenne prime.
        let m89 = (1u128 << 89) - 1;
        assert_eq!(is_prime(m89), Primality::ProbablePrime);
        // Its factor-free neighbor is composite.
        assert_eq!(is_prime(m89 - 2), Primality::Composite);
        // 2^64 + 13 is prime.
        assert_eq!(is_prime((1u128 << 64) + 13), Primality::ProbablePrime);
    }

    #[test]
    fn big_primality_matches_u128_path() {
        let m89 = (1u128 << 89) - 1;
        assert_eq!(is_prime_big(&BigUint::from(m89)), Primality::ProbablePrime);
        assert_eq!(is_prime_big(&BigUint::from(97u32)), Primality::Prime);
        // 2^127 - 1 is prime; as a BigUint larger than u128::MAX / 2 it still
        // routes through the u128 path.
        let m127 = BigUint::from((1u128 << 127) - 1);
        assert!(is_prime_big(&m127).is_prime());
        // 2^131 - 1 = 263 * 10350794431055162386718619237468234569
        let m131 = (BigUint::one() << 131u32) - BigUint::one();
        assert_eq!(is_prime_big(&m131), Primality::Composite);
        let f7 = (BigUint::one() << 128u32) + BigUint::one(); // Fermat F7, composite
        assert_eq!(is_prime_big(&f7), Primality::Composite);
    }

    #[test]
    fn mul_mod_handles_wide_moduli() {
        let m = (1u128 << 100) + 3;
        let a = (1u128 << 99) + 17;
        let b = (1u128 << 98) + 5;
        // Cross-check against big-integer arithmetic.
        let expect = (BigUint::from(a) * BigUint::from(b)) % BigUint::from(m);
        assert_eq!(BigUint::from(mul_mod(a, b, m)), expect);
    }

    #[test]
    fn mod_inv_rejects_non_units() {
        assert_eq!(mod_inv(3, 7), Ok(5));
        assert!(matches!(
            mod_inv(6, 9),
            Err(Error::NotInvertible { value: 6, modulus: 9 })
        ));
        assert_eq!(mod_inv(1, 1), Ok(0));
    }

    proptest! {
        #[test]
        fn prop_mod_pow_matches_naive(base in 0u128..1000, exp in 0u128..60, m in 1u128..10_000) {
            let mut expect = if m == 1 { 0 } else { 1u128 };
            for _ in 0..exp {
                expect = expect * (base % m) % m;
            }
            prop_assert_eq!(mod_pow(base, exp, m), expect);
        }

        #[test]
        fn prop_mul_mod_wide(a in any::<u64>(), b in any::<u64>(), m in 1u128..(1u128 << 126)) {
            let expect = (BigUint::from(a) * BigUint::from(b)) % BigUint::from(m);
            prop_assert_eq!(BigUint::from(mul_mod(a as u128, b as u128, m)), expect);
        }

        #[test]
        fn prop_inverse_is_inverse(a in 1u128..100_000, m in 2u128..100_000) {
            match mod_inv(a, m) {
                Ok(inv) => {
                    prop_assert_eq!(gcd_u128(a % m, m), 1);
                    prop_assert_eq!(mul_mod(a, inv, m), 1 % m);
                }
                Err(_) => prop_assert!(gcd_u128(a % m, m) != 1 || a % m == 0),
            }
        }
    }
}
