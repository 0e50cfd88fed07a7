use std::borrow::Cow;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_FACTOR_BUDGET: u64 = 1 << 20;

/// Prime-power decomposition, primes strictly increasing, exponents >= 1.
/// The empty list is 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<(u64, u64)>,
}

impl Factorization {
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds from `(prime, exponent)` pairs. Pairs are sorted, merged and
    /// zero exponents dropped; primality is the caller's promise.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut v: Vec<(u64, u64)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_unstable();
        let mut factors: Vec<(u64, u64)> = Vec::with_capacity(v.len());
        for (p, e) in v {
            match factors.last_mut() {
                Some((q, f)) if *q == p => *f += e,
                _ => factors.push((p, e)),
            }
        }
        Factorization { factors }
    }

    pub fn factors(&self) -> &[(u64, u64)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent_of(&self, p: u64) -> u64 {
        self.factors.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e)
    }

    pub fn largest_prime(&self) -> Option<u64> {
        self.factors.last().map(|&(p, _)| p)
    }

    /// Same factorization with the power of two replaced by `2^e`.
    pub fn with_two_exponent(&self, e: u64) -> Self {
        let mut factors: Vec<(u64, u64)> = self.factors.iter().copied().filter(|&(p, _)| p != 2).collect();
        if e > 0 {
            factors.insert(0, (2, e));
        }
        Factorization { factors }
    }

    /// The factorization with the prime 2 removed.
    pub fn odd_part(&self) -> Self {
        self.with_two_exponent(0)
    }

    pub fn value(&self) -> BigUint {
        self.factors.iter().fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e as u32))
    }
}

/// Sum of divisors, `prod (p^(e+1) - 1) / (p - 1)`.
pub fn sigma(f: &Factorization) -> BigUint {
    f.factors.iter().fold(BigUint::one(), |acc, &(p, e)| {
        let p = BigUint::from(p);
        acc * ((p.pow(e as u32 + 1) - 1u32) / (p - 1u32))
    })
}

fn sieve(bound: u64) -> Vec<u32> {
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u32);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// All primes `<= 2^20`, built once.
pub fn small_primes() -> &'static [u32] {
    static TABLE: OnceLock<Vec<u32>> = OnceLock::new();
    TABLE.get_or_init(|| sieve(DEFAULT_FACTOR_BUDGET))
}

/// All primes `<= bound`; borrows the shared table when it is large enough.
pub fn primes_up_to(bound: u64) -> Cow<'static, [u32]> {
    if bound <= DEFAULT_FACTOR_BUDGET {
        let all = small_primes();
        let end = all.partition_point(|&p| p as u64 <= bound);
        return Cow::Borrowed(&all[..end]);
    }
    Cow::Owned(sieve(bound))
}

fn check_budget(budget: u64) -> Result<()> {
    if !(2..=1 << 32).contains(&budget) {
        return Err(Error::PreconditionViolated(format!("factor budget {budget} outside [2, 2^32]")));
    }
    Ok(())
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Finishes trial division of a cofactor that fits in a machine word,
/// starting at `primes[start]`.
fn finish_u64(mut n: u64, primes: &[u32], start: usize, budget: u64, out: &mut Vec<(u64, u64)>) -> Result<()> {
    for &p in &primes[start..] {
        let p = p as u64;
        if p * p > n {
            break;
        }
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    if n > 1 {
        // Anything left with no factor <= budget is prime if it is below
        // budget^2; beyond that only the 64-bit primality test can vouch.
        let below_square = (n as u128) <= (budget as u128) * (budget as u128);
        if !below_square && !is_prime_u64(n) {
            return Err(Error::FactorizationBudgetExceeded { budget, cofactor_bits: 64 - n.leading_zeros() as u64 });
        }
        out.push((n, 1));
    }
    Ok(())
}

pub fn factorize_u64(n: u64, budget: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::PreconditionViolated("factorize(0)".into()));
    }
    check_budget(budget)?;
    let primes = primes_up_to(budget);
    let mut factors = Vec::new();
    finish_u64(n, &primes, 0, budget, &mut factors)?;
    Ok(Factorization { factors })
}

/// Complete factorization by trial division over primes `<= budget`.
pub fn factorize(n: &BigUint, budget: u64) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::PreconditionViolated("factorize(0)".into()));
    }
    check_budget(budget)?;
    if let Some(small) = n.to_u64() {
        return factorize_u64(small, budget);
    }
    let primes = primes_up_to(budget);
    let mut factors = Vec::new();
    let mut n = n.clone();
    let tz = n.trailing_zeros().unwrap_or(0);
    if tz > 0 {
        factors.push((2, tz));
        n >>= tz;
    }
    for (i, &p) in primes.iter().enumerate().skip(1) {
        if let Some(small) = n.to_u64() {
            finish_u64(small, &primes, i, budget, &mut factors)?;
            return Ok(Factorization { factors });
        }
        if (&n % p).is_zero() {
            let mut e = 0;
            while (&n % p).is_zero() {
                n /= p;
                e += 1;
            }
            factors.push((p as u64, e));
        }
    }
    if let Some(small) = n.to_u64() {
        finish_u64(small, &primes, primes.len(), budget, &mut factors)?;
        return Ok(Factorization { factors });
    }
    Err(Error::FactorizationBudgetExceeded { budget, cofactor_bits: n.bits() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(n: u64) -> Vec<(u64, u64)> {
        factorize_u64(n, DEFAULT_FACTOR_BUDGET).unwrap().factors().to_vec()
    }

    #[test]
    fn examples() {
        assert_eq!(pairs(12), vec![(2, 2), (3, 1)]);
        assert_eq!(pairs(1), vec![]);
        assert_eq!(pairs(9973), vec![(9973, 1)]);
    }

    #[test]
    fn nine_nine_seven_three_is_prime_by_trial_division() {
        // independent of the sieve: trial divide up to sqrt
        assert!((2..=99u64).all(|d| 9973 % d != 0));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&Factorization::one()), BigUint::from(1u8));
        assert_eq!(sigma(&Factorization::from_pairs([(2, 3)])), BigUint::from(15u8));
        assert_eq!(sigma(&Factorization::from_pairs([(2, 2), (3, 1)])), BigUint::from(28u8));
    }

    #[test]
    fn reconstructs_to_a_million() {
        for n in 1u64..=1_000_000 {
            let f = factorize_u64(n, DEFAULT_FACTOR_BUDGET).unwrap();
            assert_eq!(f.value(), BigUint::from(n));
            let mut last = 1;
            for &(p, e) in f.factors() {
                assert!(p > last && e >= 1);
                assert!(is_prime_u64(p), "{p} listed as prime for {n}");
                last = p;
            }
        }
    }

    #[test]
    fn sigma_matches_divisor_sum() {
        for n in 1u64..=10_000 {
            let brute: u64 = (1..=n).filter(|d| n % d == 0).sum();
            assert_eq!(sigma(&factorize_u64(n, DEFAULT_FACTOR_BUDGET).unwrap()), BigUint::from(brute), "n={n}");
        }
    }

    #[test]
    fn big_inputs() {
        let n = BigUint::from(2u8).pow(100) * BigUint::from(3u8).pow(7) * BigUint::from(1_000_003u64);
        let f = factorize(&n, DEFAULT_FACTOR_BUDGET).unwrap();
        assert_eq!(f.factors(), &[(2, 100), (3, 7), (1_000_003, 1)]);

        // a cofactor that is prime but above 2^64 cannot be certified
        let p1 = BigUint::from(18446744073709551557u64); // largest prime below 2^64
        let big = &p1 * &p1;
        assert!(matches!(factorize(&big, 1 << 10), Err(Error::FactorizationBudgetExceeded { .. })));

        // above budget^2 but a 64-bit prime: accepted
        let f = factorize_u64(18446744073709551557, 1 << 10).unwrap();
        assert_eq!(f.factors(), &[(18446744073709551557, 1)]);
        // above budget^2 and composite: rejected
        assert!(factorize_u64(1_000_003 * 1_000_033, 1 << 10).is_err());
    }

    #[test]
    fn miller_rabin_agrees_with_sieve() {
        let primes = primes_up_to(100_000);
        let mut it = primes.iter().peekable();
        for n in 0u64..=100_000 {
            let is_p = it.peek().is_some_and(|&&p| p as u64 == n);
            if is_p {
                it.next();
            }
            assert_eq!(is_prime_u64(n), is_p, "{n}");
        }
    }
}
