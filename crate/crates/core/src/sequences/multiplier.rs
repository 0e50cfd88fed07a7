//! Multipliers for the sequences defined by binary digits.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::binary;
use crate::error::{Error, Result};

/// Smallest `r` in `1..=budget` with `pred(r * n)`.
pub(crate) fn ascending_search(n: &BigUint, budget: u64, pred: impl Fn(&BigUint) -> bool) -> Option<BigUint> {
    let mut acc = n.clone();
    for r in 1..=budget {
        if pred(&acc) {
            return Some(BigUint::from(r));
        }
        acc += n;
    }
    None
}

/// `2^K + 1` with `K` the bit length of `n`: the product is two copies of
/// `n`'s digits side by side, so its popcount is even.
pub(crate) fn evil(n: &BigUint) -> BigUint {
    (BigUint::one() << n.bits()) + 1u32
}

/// Pigeonhole over `t_i = (4^i - 1) / 3`: the first `i < j` with
/// `t_i = t_j (mod n)` gives `n | t_j - t_i = 4^i (4^(j-i) - 1) / 3`,
/// whose set bits all sit at even positions. Returns `(r, i, j)`.
///
/// The residues follow `t -> 4t + 1 (mod n)`, so the first repeat is found
/// with Brent's cycle detection in constant memory.
pub(crate) fn pigeonhole(n: &BigUint, budget: u64) -> Result<(BigUint, u64, u64)> {
    let step = |t: &BigUint| -> BigUint {
        let mut next = (t << 2u32) + 1u32;
        while &next >= n {
            next -= n;
        }
        next
    };
    let exceeded = || Error::SearchBudgetExceeded { sequence: "moser_doubled", n: n.to_string(), budget };
    let start = BigUint::zero() % n;

    let mut steps = 0u64;
    let mut power = 1u64;
    let mut lam = 1u64;
    let mut tortoise = start.clone();
    let mut hare = step(&start);
    while tortoise != hare {
        if power == lam {
            tortoise = hare.clone();
            power *= 2;
            lam = 0;
        }
        hare = step(&hare);
        lam += 1;
        steps += 1;
        if steps > budget {
            return Err(exceeded());
        }
    }

    let mut tortoise = start.clone();
    let mut hare = start;
    for _ in 0..lam {
        hare = step(&hare);
    }
    let mut mu = 0u64;
    while tortoise != hare {
        tortoise = step(&tortoise);
        hare = step(&hare);
        mu += 1;
        if mu > budget {
            return Err(exceeded());
        }
    }

    let block = ((BigUint::one() << (2 * lam)) - 1u32) / 3u32;
    let multiple = block << (2 * mu);
    debug_assert!((&multiple % n).is_zero());
    Ok((multiple / n, mu, mu + lam))
}

pub(crate) fn half_heavy(n: &BigUint) -> BigUint {
    let k = n.trailing_zeros().unwrap_or(0);
    let odd = n >> k;
    if odd.is_one() {
        return BigUint::one();
    }
    // odd > 1 is not a power of two, so ceil(log2 odd) = bits(odd)
    BigUint::one() << odd.bits().saturating_sub(k)
}

pub(crate) fn fibbinary(n: &BigUint, budget: u64) -> Result<BigUint> {
    if let Some(r) = ascending_search(n, budget, binary::is_fibbinary) {
        return Ok(r);
    }
    // every moser_doubled number is fibbinary
    pigeonhole(n, budget).map(|(r, _, _)| r).map_err(|_| Error::SearchBudgetExceeded {
        sequence: "fibbinary",
        n: n.to_string(),
        budget,
    })
}
