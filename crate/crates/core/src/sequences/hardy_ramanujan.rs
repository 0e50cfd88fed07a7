//! Hardy-Ramanujan numbers: 2^e2 * 3^e3 * 5^e5 ... with e2 >= e3 >= e5 >= ...

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numeric::{is_prime_u64, primes_up_to, Factorization};

fn next_prime(p: u64) -> u64 {
    let mut q = p + 1;
    while !is_prime_u64(q) {
        q += 1;
    }
    q
}

/// Smallest power of two making `2^j * odd` a member: `e3`, provided the odd
/// primes are 3, 5, 7, ... without gaps and their exponents never increase.
pub(crate) fn min_two_exponent(odd: &Factorization) -> Option<u64> {
    let mut expected = 3;
    let mut prev = u64::MAX;
    for &(p, e) in odd.factors() {
        if p != expected || e > prev {
            return None;
        }
        prev = e;
        expected = next_prime(p);
    }
    Some(odd.exponent_of(3))
}

/// Raise every exponent to the largest exponent at or after it.
pub(crate) fn multiplier(f: &Factorization, factor_budget: u64, max_bits: u64) -> Result<BigUint> {
    let Some(top) = f.largest_prime() else { return Ok(BigUint::one()) };
    if top > factor_budget {
        return Err(Error::SearchBudgetExceeded {
            sequence: "hardy_ramanujan",
            n: format!("<multiple of prime {top}>"),
            budget: factor_budget,
        });
    }
    let primes = primes_up_to(top);
    let mut running = 0;
    let mut bits = 0.0;
    for &p in primes.iter().rev() {
        running = running.max(f.exponent_of(p as u64));
        bits += running as f64 * (p as f64).log2();
    }
    if bits > max_bits as f64 {
        return Err(Error::DenominatorBudgetExceeded {
            what: "hardy_ramanujan multiple",
            bits: bits as u64,
            limit: max_bits,
        });
    }
    let mut r = BigUint::one();
    let mut running = 0;
    for &p in primes.iter().rev() {
        let e = f.exponent_of(p as u64);
        running = running.max(e);
        r *= BigUint::from(p).pow((running - e) as u32);
    }
    Ok(r)
}

/// All members `<= limit`, generated from nonincreasing exponent vectors.
pub(crate) fn enumerate(limit: u64) -> Vec<u64> {
    fn walk(primes: &[u32], cap: u32, cur: u64, limit: u64, out: &mut Vec<u64>) {
        out.push(cur);
        let Some((&p, rest)) = primes.split_first() else { return };
        let mut v = cur;
        for e in 1..=cap {
            match v.checked_mul(p as u64) {
                Some(next) if next <= limit => v = next,
                _ => break,
            }
            walk(rest, e, v, limit, out);
        }
    }
    if limit == 0 {
        return Vec::new();
    }
    // the primorial of 59 already exceeds 2^64
    let primes = primes_up_to(64);
    let mut out = Vec::new();
    walk(&primes, 64, 1, limit, &mut out);
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{factorize_u64, DEFAULT_FACTOR_BUDGET};

    #[test]
    fn enumeration_head() {
        assert_eq!(enumerate(100), vec![1, 2, 4, 6, 8, 12, 16, 24, 30, 32, 36, 48, 60, 64, 72, 96]);
    }

    #[test]
    fn multiplier_lifts_exponents() {
        // 5 -> 2*3*5
        let f = factorize_u64(5, DEFAULT_FACTOR_BUDGET).unwrap();
        assert_eq!(multiplier(&f, DEFAULT_FACTOR_BUDGET, 1 << 15).unwrap(), BigUint::from(6u8));
        // 2 * 9 -> 4 * 9
        let f = factorize_u64(18, DEFAULT_FACTOR_BUDGET).unwrap();
        assert_eq!(multiplier(&f, DEFAULT_FACTOR_BUDGET, 1 << 15).unwrap(), BigUint::from(2u8));
    }
}
