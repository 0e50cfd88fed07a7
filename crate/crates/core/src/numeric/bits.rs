use num_bigint::BigUint;

/// `k` with `2^k <= n < 2^(k+1)`. Panics on zero.
pub fn floor_log2(n: &BigUint) -> u64 {
    assert!(n.bits() > 0, "floor_log2(0)");
    n.bits() - 1
}

/// Exponents of the set bits of `n`, ascending. Empty for zero.
pub fn bit_positions(n: &BigUint) -> Vec<u64> {
    let mut out = Vec::with_capacity(popcount(n) as usize);
    for (limb, mut word) in n.iter_u64_digits().enumerate() {
        while word != 0 {
            let tz = word.trailing_zeros() as u64;
            out.push(limb as u64 * 64 + tz);
            word &= word - 1;
        }
    }
    out
}

pub fn popcount(n: &BigUint) -> u64 {
    n.iter_u64_digits().map(|w| w.count_ones() as u64).sum()
}

pub fn is_power_of_two(n: &BigUint) -> bool {
    popcount(n) == 1
}
