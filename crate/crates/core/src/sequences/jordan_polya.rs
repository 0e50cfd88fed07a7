//! Jordan-Polya numbers: products of factorials.
//!
//! Membership works on exponent vectors. Since `2 = 2!`, any surplus power
//! of two is free, so the question for an odd part is how many factors of
//! two the cheapest factorial product covering it consumes. That minimum is
//! memoized per odd exponent vector.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numeric::{is_prime_u64, primes_up_to, Factorization};

/// Exponent of prime `p` in `a!`.
pub(crate) fn legendre(a: u64, p: u64) -> u64 {
    let mut e = 0;
    let mut q = a / p;
    while q > 0 {
        e += q;
        q /= p;
    }
    e
}

pub(crate) fn factorial(a: u64) -> BigUint {
    (2..=a).fold(BigUint::one(), |acc, i| acc * i)
}

/// Largest prime for which the exponent-vector search runs.
const SEARCH_PRIME_CAP: u64 = 1 << 20;

type OddKey = Vec<(u64, u64)>;

#[derive(Debug, Default)]
pub(crate) struct JordanPolya {
    memo: Mutex<HashMap<OddKey, Option<u64>>>,
}

impl JordanPolya {
    /// Smallest `j` with `2^j * odd` a product of factorials, or `None`.
    /// `odd_bits` is the bit length of the odd part, used to reject primes
    /// too large for any factorial to fit.
    pub(crate) fn min_two_exponent(&self, odd: &Factorization, odd_bits: u64) -> Result<Option<u64>> {
        let Some(top) = odd.largest_prime() else { return Ok(Some(0)) };
        if top > SEARCH_PRIME_CAP {
            // The odd part of top! is at least (top / 2e)^top > 2^top.
            if top > odd_bits {
                return Ok(None);
            }
            return Err(Error::MembershipUndecidable {
                sequence: "jordan_polya",
                n: format!("<odd part with prime {top}>"),
            });
        }
        Ok(self.need(odd.factors()))
    }

    fn need(&self, odd: &[(u64, u64)]) -> Option<u64> {
        let Some(&(top, top_e)) = odd.last() else { return Some(0) };
        if top == 3 {
            // only 3! and 4! are available; 3! is cheaper in twos
            return Some(top_e);
        }
        if let Some(hit) = self.memo.lock().unwrap().get(odd) {
            return *hit;
        }
        // a! with a >= top contains every odd prime below top
        let odd_primes_below = primes_up_to(top).len() - 1;
        let result = if odd.len() != odd_primes_below {
            None
        } else {
            let mut next = top + 2;
            while !is_prime_u64(next) {
                next += 2;
            }
            let mut best: Option<u64> = None;
            for a in (top..next).rev() {
                let mut rest = Vec::with_capacity(odd.len());
                let mut fits = true;
                for &(q, e) in odd {
                    let used = legendre(a, q);
                    if used > e {
                        fits = false;
                        break;
                    }
                    if e > used {
                        rest.push((q, e - used));
                    }
                }
                if !fits {
                    continue;
                }
                if let Some(r) = self.need(&rest) {
                    let cost = legendre(a, 2) + r;
                    best = Some(best.map_or(cost, |b| b.min(cost)));
                }
            }
            best
        };
        self.memo.lock().unwrap().insert(odd.to_vec(), result);
        result
    }
}

/// Covers `n` greedily: repeatedly multiply in `p!` for the largest prime
/// whose exponent is still short, then divide `n` back out.
pub(crate) fn multiplier(n: &BigUint, f: &Factorization, factor_budget: u64, max_bits: u64) -> Result<BigUint> {
    let Some(top) = f.largest_prime() else { return Ok(BigUint::one()) };
    if top > factor_budget.min(SEARCH_PRIME_CAP) {
        return Err(Error::SearchBudgetExceeded {
            sequence: "jordan_polya",
            n: format!("<multiple of prime {top}>"),
            budget: factor_budget,
        });
    }
    let primes = primes_up_to(top);
    let mut have = vec![0u64; primes.len()];
    let mut plan = Vec::new();
    let mut bits = 0.0;
    for i in (0..primes.len()).rev() {
        let p = primes[i] as u64;
        let short = f.exponent_of(p).saturating_sub(have[i]);
        if short == 0 {
            continue;
        }
        // v_p(p!) = 1, so `short` copies of p! close the gap at p
        plan.push((p, short));
        bits += short as f64 * (2..=p).map(|i| (i as f64).log2()).sum::<f64>();
        if bits > max_bits as f64 {
            return Err(Error::DenominatorBudgetExceeded {
                what: "jordan_polya multiple",
                bits: bits as u64,
                limit: max_bits,
            });
        }
        for (j, &q) in primes[..=i].iter().enumerate() {
            have[j] += short * legendre(p, q as u64);
        }
    }
    let cover = plan.iter().fold(BigUint::one(), |acc, &(p, c)| acc * factorial(p).pow(c as u32));
    debug_assert!((&cover % n) == BigUint::default());
    Ok(cover / n)
}

/// All members `<= limit`: products of factorials taken in nonincreasing order.
pub(crate) fn enumerate(limit: u64) -> Vec<u64> {
    fn walk(facts: &[u64], cur: u64, limit: u64, out: &mut Vec<u64>) {
        out.push(cur);
        for (i, &f) in facts.iter().enumerate() {
            match cur.checked_mul(f) {
                Some(next) if next <= limit => walk(&facts[..=i], next, limit, out),
                _ => break,
            }
        }
    }
    if limit == 0 {
        return Vec::new();
    }
    let mut facts = Vec::new();
    let mut f = 1u64;
    for a in 2u64.. {
        match f.checked_mul(a) {
            Some(next) if next <= limit => {
                f = next;
                facts.push(f);
            }
            _ => break,
        }
    }
    let mut out = Vec::new();
    walk(&facts, 1, limit, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}
