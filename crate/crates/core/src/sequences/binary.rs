//! Sequences defined by binary digits.

use num_bigint::BigUint;

use crate::numeric::popcount;

pub(crate) fn is_odious(n: &BigUint) -> bool {
    popcount(n) % 2 == 1
}

pub(crate) fn is_evil(n: &BigUint) -> bool {
    n.bits() > 0 && popcount(n).is_multiple_of(2)
}

pub(crate) fn is_fibbinary(n: &BigUint) -> bool {
    if n.bits() == 0 {
        return false;
    }
    let mut carry = 0u64;
    for w in n.iter_u64_digits() {
        if w & (w >> 1) != 0 || (w & 1 != 0 && carry != 0) {
            return false;
        }
        carry = w >> 63;
    }
    true
}

const EVEN_BITS: u64 = 0x5555_5555_5555_5555;

/// Set bits only at even positions, or only at odd positions.
pub(crate) fn is_moser_doubled(n: &BigUint) -> bool {
    if n.bits() == 0 {
        return false;
    }
    n.iter_u64_digits().all(|w| w & !EVEN_BITS == 0) || n.iter_u64_digits().all(|w| w & EVEN_BITS == 0)
}

/// `n = 2^k * l` with `l` odd and `l <= 2^k`.
pub(crate) fn is_half_heavy(n: &BigUint) -> bool {
    let Some(k) = n.trailing_zeros() else { return false };
    let odd = n >> k;
    odd.bits() <= k || odd.bits() == 1
}

/// Word-sized versions of the predicates above, for enumeration.
pub(crate) fn member_u64(id: super::SequenceId, n: u64) -> bool {
    use super::SequenceId::*;
    if n == 0 {
        return false;
    }
    match id {
        Odious => n.count_ones() % 2 == 1,
        Evil => n.count_ones().is_multiple_of(2),
        Fibbinary => n & (n >> 1) == 0,
        MoserDoubled => n & !EVEN_BITS == 0 || n & EVEN_BITS == 0,
        HalfHeavy => {
            let k = n.trailing_zeros();
            let odd = n >> k;
            odd == 1 || 64 - odd.leading_zeros() <= k
        }
        _ => unreachable!("{id} is not defined by binary digits"),
    }
}
