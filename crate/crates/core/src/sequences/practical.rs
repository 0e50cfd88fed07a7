//! Practical numbers: every m <= n is a sum of distinct divisors of n.
//!
//! Classical criterion: with primes p1 < p2 < ... of n, n = 1 or n is even
//! and each p_i <= 1 + sigma(p1^a1 ... p_{i-1}^a_{i-1}).

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::numeric::Factorization;

fn ceil_log2(x: u64) -> u64 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros() as u64
    }
}

/// Smallest `j` such that `2^j * odd` is practical. Always exists.
///
/// Write `s` for the divisor sum of the odd primes already processed; the
/// criterion for odd prime `p` reads `p - 1 <= (2^(j+1) - 1) * s`.
pub(crate) fn min_two_exponent(odd: &Factorization) -> u64 {
    let mut s = BigUint::one();
    let mut need = 0;
    for &(p, e) in odd.factors() {
        debug_assert!(p != 2);
        let Some(small) = s.to_u64() else { break };
        if small < p - 1 {
            let c = (p - 1).div_ceil(small);
            need = need.max(ceil_log2(c + 1) - 1);
        }
        let pb = BigUint::from(p);
        s *= (pb.pow(e as u32 + 1) - 1u32) / (pb - 1u32);
    }
    need
}

/// Word-sized test that stops at the first prime breaking the criterion,
/// so most non-members cost a few divisions.
pub(crate) fn member_u64(n: u64) -> bool {
    if n & 1 == 1 || n == 0 {
        return n == 1;
    }
    let e = n.trailing_zeros();
    let mut m = n >> e;
    let mut s: u128 = (1u128 << (e + 1)) - 1;
    let mut p = 3u64;
    while m > 1 {
        // every prime factor left is at least p
        if p as u128 > s + 1 {
            return false;
        }
        if (p as u128) * (p as u128) > m as u128 {
            return m as u128 <= s + 1;
        }
        if m.is_multiple_of(p) {
            let (mut pk, mut sum) = (1u128, 1u128);
            while m.is_multiple_of(p) {
                m /= p;
                pk *= p as u128;
                sum += pk;
            }
            s = s.saturating_mul(sum);
        }
        p += 2;
    }
    true
}

/// `2^t` with `2^t` strictly above the largest prime factor.
pub(crate) fn multiplier(f: &Factorization) -> BigUint {
    match f.largest_prime() {
        None => BigUint::one(),
        Some(p) => BigUint::one() << (64 - p.leading_zeros() as u64),
    }
}
