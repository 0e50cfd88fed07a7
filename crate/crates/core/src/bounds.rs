//! Certified bounds on reciprocal sums and the feasibility check built on
//! them.
//!
//! Upper bounds for the convergent sequences:
//!
//! - `hardy_ramanujan`: members are exactly the products of primorials, so
//!   the reciprocal sum is at most `prod (1 - 1/P_k)^-1` over primorials
//!   `P_k`. The product is taken exactly up to `10^6` and the rest is
//!   bounded through `-ln(1 - x) <= x / (1 - x)`.
//! - `jordan_polya`: same idea over factorials `m!`, `m >= 2`, exact up to
//!   `12!`.
//! - `fibbinary`, `moser_doubled`, `half_heavy`: members below a bit-length
//!   cutoff are summed directly, the rest are bounded by counting members
//!   of each bit-length.
//!
//! Direct sums use a fixed-point accumulator with 120 fractional bits,
//! rounding every term up for upper bounds and down for lower bounds.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Result;
use crate::numeric::{is_prime_u64, Rational, UnitFractionSum};
use crate::sequences::{Convergence, Sequence, SequenceId};

const SCALE_BITS: u32 = 120;
const PRIMORIAL_CUTOFF: u64 = 1_000_000;
const FACTORIAL_CUTOFF: u64 = 12;

/// Exact `sum 1/s_i` over the first `count` members.
pub fn partial_reciprocal_sum(seq: &Sequence, count: usize) -> Result<Rational> {
    let mut sum = UnitFractionSum::new();
    for member in seq.members().take(count) {
        sum.add(member?);
    }
    Ok(sum.to_rational())
}

/// A rational upper bound on the full reciprocal sum, or `None` when it
/// diverges. Computed once per sequence and cached.
pub fn total_sum_upper_bound(id: SequenceId) -> Option<Rational> {
    static CACHE: [OnceLock<Option<Rational>>; SequenceId::ALL.len()] = [const { OnceLock::new() }; 8];
    CACHE[id as usize].get_or_init(|| compute_upper_bound(id)).clone()
}

fn compute_upper_bound(id: SequenceId) -> Option<Rational> {
    match id {
        SequenceId::Practical | SequenceId::Odious | SequenceId::Evil => None,
        SequenceId::HardyRamanujan => Some(hardy_ramanujan_product().1),
        SequenceId::JordanPolya => Some(jordan_polya_product().1),
        SequenceId::Fibbinary => Some(fibbinary_bound()),
        SequenceId::MoserDoubled => Some(moser_doubled_bound()),
        SequenceId::HalfHeavy => Some(half_heavy_bound()),
    }
}

fn rat(n: u64, d: u64) -> Rational {
    Rational::from_parts(n.into(), d.into())
}

fn pow2_inv(e: u32) -> Rational {
    Rational::from_parts(BigUint::one(), BigUint::one() << e)
}

/// `prod 1/(1 - 1/f)` over the given factors, and that product times
/// `1/(1 - t)` where `t` bounds the log of the omitted factors.
fn product_with_tail(factors: &[u64], tail_sum: Rational, first_omitted: u64) -> (Rational, Rational) {
    let mut v = Rational::one();
    for &f in factors {
        v = &v * &rat(f, f - 1);
    }
    // -ln(1 - x) <= x/(1 - x) <= x * f/(f - 1) for x <= 1/f
    let t = &tail_sum * &rat(first_omitted, first_omitted - 1);
    let rest = &Rational::one() - &t;
    assert!(rest.is_positive(), "tail estimate too large");
    let (n, d) = rest.to_parts();
    let u = &v * &Rational::from_parts(d, n);
    (v, u)
}

/// Primorial product up to `10^6`: the finite product and the certified
/// upper bound.
pub fn hardy_ramanujan_product() -> (Rational, Rational) {
    let mut primorials = Vec::new();
    let mut p = 1u64;
    let mut next_prime = 2u64;
    loop {
        let q = p * next_prime;
        if q > PRIMORIAL_CUTOFF {
            break;
        }
        primorials.push(q);
        p = q;
        next_prime = (next_prime + 1..).find(|&c| is_prime_u64(c)).unwrap();
    }
    // the omitted primorials grow by at least the factor `after` each step
    let first = p * next_prime;
    let after = (next_prime + 1..).find(|&c| is_prime_u64(c)).unwrap();
    let tail = &rat(1, first) * &rat(after, after - 1);
    product_with_tail(&primorials, tail, first)
}

/// Factorial product up to `12!`: the finite product and the certified
/// upper bound.
pub fn jordan_polya_product() -> (Rational, Rational) {
    let factorials: Vec<u64> = (2..=FACTORIAL_CUTOFF).map(|m| (1..=m).product()).collect();
    let m = FACTORIAL_CUTOFF + 1;
    let first: u64 = (1..=m).product();
    // sum_{j >= m} 1/j! <= (1/m!) * (m+1)/m
    let tail = &rat(1, first) * &rat(m + 1, m);
    product_with_tail(&factorials, tail, first)
}

fn ceil_scaled(n: u64) -> u128 {
    (1u128 << SCALE_BITS).div_ceil(n as u128)
}

fn floor_scaled(n: u64) -> u128 {
    (1u128 << SCALE_BITS) / n as u128
}

fn from_scaled(acc: u128) -> Rational {
    Rational::from_parts(BigUint::from(acc), BigUint::one() << SCALE_BITS)
}

const FIBBINARY_EXACT_BITS: u32 = 30;
const SPARSE_EXACT_BITS: u32 = 40;

/// All fibbinary numbers with at most `bits` bits.
pub(crate) fn fibbinary_below(bits: u32) -> Vec<u64> {
    fn walk(n: u64, bits_left: u32, out: &mut Vec<u64>) {
        out.push(n);
        if bits_left == 0 {
            return;
        }
        walk(n << 1, bits_left - 1, out);
        if n & 1 == 0 {
            walk((n << 1) | 1, bits_left - 1, out);
        }
    }
    let mut out = Vec::new();
    walk(1, bits - 1, &mut out);
    out
}

/// All moser_doubled numbers with at most `bits` bits.
pub(crate) fn moser_doubled_below(bits: u32) -> Vec<u64> {
    let mut out = Vec::new();
    for mask in 1u64..(1 << bits.div_ceil(2)) {
        let mut n = 0u64;
        let mut m = mask;
        let mut pos = 0;
        while m != 0 {
            n |= (m & 1) << pos;
            m >>= 1;
            pos += 2;
        }
        out.push(n);
        if n < 1 << (bits - 1) {
            out.push(n << 1);
        }
    }
    out
}

/// All half_heavy numbers with at most `bits` bits.
pub(crate) fn half_heavy_below(bits: u32) -> Vec<u64> {
    let mut out = Vec::new();
    for k in 0..bits {
        let top = 1u64 << (bits - k);
        let mut l = 1u64;
        while l <= (1 << k) && l < top {
            out.push(l << k);
            l += 2;
        }
    }
    out
}

/// Upper bound for numbers whose members with `b` bits number at most
/// `count(b)`: exact up to `exact_bits`, counting up to 64 bits, and a
/// closed-form `tail` beyond.
fn direct_plus_counted(members: &[u64], exact_bits: u32, count: impl Fn(u32) -> BigUint, tail: Rational) -> Rational {
    let acc: u128 = members.iter().map(|&n| ceil_scaled(n)).sum();
    let mut total = from_scaled(acc);
    for b in exact_bits + 1..=64 {
        let term = Rational::from_parts(count(b), BigUint::one() << (b - 1));
        total = &total + &term;
    }
    &total + &tail
}

fn fib(n: u32) -> BigUint {
    let (mut a, mut b) = (BigUint::ZERO, BigUint::one());
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

fn fibbinary_bound() -> Rational {
    // b-bit fibbinary numbers number Fib(b), and Fib(b+1)/Fib(b) <= 13/8 for
    // b >= 6, so the terms past 64 bits shrink at least by 13/16 per bit
    let tail = Rational::from_parts(fib(65) * 16u32, BigUint::from(3u32) << 64);
    direct_plus_counted(&fibbinary_below(FIBBINARY_EXACT_BITS), FIBBINARY_EXACT_BITS, fib, tail)
}

fn moser_doubled_bound() -> Rational {
    // count(b) / 2^(b-1) = 2^-ceil((b-1)/2)
    let tail = &rat(3, 1) * &pow2_inv(32);
    direct_plus_counted(
        &moser_doubled_below(SPARSE_EXACT_BITS),
        SPARSE_EXACT_BITS,
        |b| BigUint::one() << ((b - 1) / 2),
        tail,
    )
}

fn half_heavy_bound() -> Rational {
    // count(b) / 2^(b-1) = 2^-ceil(b/2)
    let tail = pow2_inv(31);
    direct_plus_counted(
        &half_heavy_below(SPARSE_EXACT_BITS),
        SPARSE_EXACT_BITS,
        |b| BigUint::one() << (b / 2 - 1),
        tail,
    )
}

/// Lower bound on the sum of the first `count` reciprocals, stopping early
/// once it exceeds `stop_above`. Returns the bound and how many members
/// went into it.
fn lower_partial_sum(seq: &Sequence, count: usize, stop_above: &Rational) -> Result<(Rational, usize)> {
    let mut acc = 0u128;
    let mut used = 0;
    for member in seq.members().take(count) {
        acc += floor_scaled(member?);
        used += 1;
        if used % 256 == 0 && &from_scaled(acc) > stop_above {
            break;
        }
    }
    Ok((from_scaled(acc), used))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Feasible,
    Infeasible,
    Unknown,
}

/// Outcome of [`feasibility`]. `lower` and `upper` bracket the reciprocal
/// sum as far as they were computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub verdict: Verdict,
    /// A partial sum above `q` for feasible targets, the upper bound for
    /// infeasible ones.
    pub certificate: Option<Rational>,
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
    pub members_used: usize,
    pub diagnostics: String,
}

/// Decides whether `q` lies below the reciprocal sum of the sequence.
pub fn feasibility(seq: &Sequence, q: &Rational, enumeration_budget: usize) -> Result<FeasibilityVerdict> {
    if seq.descriptor().convergence == Convergence::Divergent {
        return Ok(FeasibilityVerdict {
            verdict: Verdict::Feasible,
            certificate: None,
            lower: None,
            upper: None,
            members_used: 0,
            diagnostics: "reciprocal sum diverges".into(),
        });
    }
    let upper = total_sum_upper_bound(seq.id()).expect("convergent sequences have a bound");
    if q >= &upper {
        return Ok(FeasibilityVerdict {
            verdict: Verdict::Infeasible,
            certificate: Some(upper.clone()),
            lower: None,
            diagnostics: format!("target is at least the upper bound {:.6}", upper.to_f64()),
            upper: Some(upper),
            members_used: 0,
        });
    }
    let (lower, used) = lower_partial_sum(seq, enumeration_budget, q)?;
    let (verdict, certificate, diagnostics) = if &lower > q {
        (Verdict::Feasible, Some(lower.clone()), format!("first {used} members already exceed the target"))
    } else {
        let gap = (&upper - &lower).to_f64();
        (Verdict::Unknown, None, format!("target in gap of width {gap:.3e} after {used} members"))
    };
    Ok(FeasibilityVerdict {
        verdict,
        certificate,
        lower: Some(lower),
        upper: Some(upper),
        members_used: used,
        diagnostics,
    })
}
