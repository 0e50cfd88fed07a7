//! The binary remainder construction.
//!
//! For a target `q` and sequence `S` with least element `m`:
//!
//! 1. take the longest prefix `P` of `S` (ascending) with `sum 1/p <= q`;
//! 2. write the leftover `q'` in lowest terms as `x'/y'`, tripling both
//!    parts when `y'` is a power of two so the denominator keeps an odd
//!    prime factor;
//! 3. scale by a multiplier `r` with `r * m * y'` in `S` (`r = 1` when
//!    `m * y'` is already a member), giving `x/y`;
//! 4. with `k = floor(log2 y)`, divide `2^k * m * x = a*y + b`;
//! 5. every set bit `2^i` of `a` contributes `1/(2^(k-i) m)` and every set
//!    bit `2^j` of `b` contributes `1/(2^(k-j) m y)`.
//!
//! Both `a` and `b` are below `y`, so all exponents are at most `k` and the
//! new denominators are `m` or `m*y` doubled some number of times, hence in
//! `S`. The odd factor of `y` keeps the two families apart, and since every
//! new unit fraction is at most `q' < 1/p_next` none of them collides with
//! the prefix.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::bounds::total_sum_upper_bound;
use crate::error::{Error, Result};
use crate::numeric::{bit_positions, floor_log2, is_power_of_two, sum_unit_fractions, Rational, UnitFractionSum};
use crate::sequences::{abbreviate, Sequence};

/// Distinct unit-fraction denominators, strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    denominators: Vec<BigUint>,
}

impl Expansion {
    /// Sorts the input; fails if any denominator repeats or is zero.
    pub fn new(mut denominators: Vec<BigUint>) -> Result<Self> {
        denominators.sort();
        if denominators.first().is_some_and(Zero::is_zero) {
            return Err(Error::PreconditionViolated("zero denominator".into()));
        }
        if let Some(w) = denominators.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::PreconditionViolated(format!("repeated denominator {}", abbreviate(&w[0]))));
        }
        Ok(Expansion { denominators })
    }

    pub fn denominators(&self) -> &[BigUint] {
        &self.denominators
    }

    pub fn len(&self) -> usize {
        self.denominators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.denominators.is_empty()
    }

    pub fn sum(&self) -> Rational {
        sum_unit_fractions(&self.denominators)
    }
}

/// Quotient/remainder split of `2^k * m * x` by `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub k: u64,
    pub quotient: BigUint,
    pub remainder: BigUint,
    /// Set-bit exponents of the quotient.
    pub a_exponents: Vec<u64>,
    /// Set-bit exponents of the remainder.
    pub b_exponents: Vec<u64>,
}

/// The part of the construction that runs when the prefix leaves something
/// over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemainderTrace {
    pub x: BigUint,
    pub y: BigUint,
    pub multiplier: BigUint,
    pub split: Split,
}

/// Every intermediate object of one expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTrace {
    pub prefix: Vec<u64>,
    pub residual: Rational,
    pub min_elem: u64,
    /// Absent when the prefix sums to `q` exactly.
    pub remainder: Option<RemainderTrace>,
}

const SCAN_BITS: u32 = 100;

/// `floor(q * 2^SCAN_BITS)`, saturating.
fn scaled_floor(q: &Rational) -> u128 {
    let (n, d) = q.to_parts();
    ((n << SCAN_BITS) / d).to_u128().unwrap_or(u128::MAX)
}

/// Longest ascending prefix of the sequence whose reciprocals sum to at
/// most `q`, and the leftover `q - sum`.
///
/// The prefix length is found with fixed-point sums rounded both ways, so
/// that long scans stay cheap; only a rounding tie falls back to exact
/// arithmetic. The exact sum is then built once for the chosen prefix.
pub fn select_prefix(seq: &Sequence, q: &Rational) -> Result<(Vec<u64>, Rational)> {
    if !q.is_positive() {
        return Err(Error::PreconditionViolated(format!("target {q} is not positive")));
    }
    let budgets = seq.budgets();
    let threshold = scaled_floor(q);
    let unit = 1u128 << SCAN_BITS;
    let (mut lo, mut hi) = (0u128, 0u128);
    let mut prefix = Vec::new();
    for member in seq.members() {
        let member = member?;
        let lo_next = lo.saturating_add(unit / member as u128);
        let hi_next = hi.saturating_add(unit.div_ceil(member as u128));
        let fits = if hi_next <= threshold {
            true
        } else if lo_next > threshold {
            false
        } else {
            let mut exact = UnitFractionSum::new();
            prefix.iter().chain([&member]).for_each(|&p| exact.add(p));
            exact.le(q)
        };
        if !fits {
            break;
        }
        if prefix.len() as u64 >= budgets.prefix_members {
            return Err(Error::PrefixBudgetExceeded { sequence: seq.id().name(), budget: budgets.prefix_members });
        }
        prefix.push(member);
        (lo, hi) = (lo_next, hi_next);
    }
    let mut sum = UnitFractionSum::new();
    for &p in &prefix {
        sum.add(p);
        if sum.denominator_bits() > budgets.max_denominator_bits {
            return Err(Error::DenominatorBudgetExceeded {
                what: "prefix sum denominator",
                bits: sum.denominator_bits(),
                limit: budgets.max_denominator_bits,
            });
        }
    }
    let residual = q - &sum.to_rational();
    Ok((prefix, residual))
}

/// `(3x, 3y)` when `y` is a power of two, otherwise `(x, y)`.
pub fn oddify(x: &BigUint, y: &BigUint) -> (BigUint, BigUint) {
    if is_power_of_two(y) {
        (x * 3u32, y * 3u32)
    } else {
        (x.clone(), y.clone())
    }
}

/// Divides `2^k * m * x` by `y` with `k = floor(log2 y)`. Requires
/// `x/y < 1/m`, which bounds the quotient below `y`.
pub fn binary_remainder_split(m: &BigUint, x: &BigUint, y: &BigUint) -> Result<Split> {
    if y < &BigUint::from(2u8) {
        return Err(Error::PreconditionViolated("denominator below 2".into()));
    }
    if m * x >= *y {
        return Err(Error::PreconditionViolated("x/y must be below 1/m".into()));
    }
    let k = floor_log2(y);
    let scaled = (m * x) << k;
    let quotient = &scaled / y;
    let remainder = scaled - &quotient * y;
    Ok(Split { k, a_exponents: bit_positions(&quotient), b_exponents: bit_positions(&remainder), quotient, remainder })
}

fn fail(message: String, trace: &ExpansionTrace) -> Error {
    Error::InternalAssertionFailed { message, trace: Some(Box::new(trace.clone())) }
}

/// Expands `q` into distinct unit fractions with denominators in `seq`.
///
/// For convergent sequences `q` must lie below the reciprocal sum. Targets
/// at or above the certified upper bound are refused up front as a prefix
/// budget error; those in the narrow band just below it run into the prefix
/// or denominator budget.
pub fn expand(seq: &Sequence, q: &Rational) -> Result<(Expansion, ExpansionTrace)> {
    if let Some(bound) = total_sum_upper_bound(seq.id()) {
        if q >= &bound {
            return Err(Error::PrefixBudgetExceeded {
                sequence: seq.id().name(),
                budget: seq.budgets().prefix_members,
            });
        }
    }
    let (prefix, residual) = select_prefix(seq, q)?;
    let m = seq.min_element();
    let mut trace = ExpansionTrace { prefix: prefix.clone(), residual: residual.clone(), min_elem: m, remainder: None };
    let mut denominators: Vec<BigUint> = prefix.iter().map(|&p| BigUint::from(p)).collect();

    if !residual.is_zero() {
        let (x0, y0) = residual.to_parts();
        let (x1, y1) = oddify(&x0, &y0);
        let m_big = BigUint::from(m);
        let my1 = &m_big * &y1;
        // skip the multiplier when m*y' is already a member
        let r = match seq.is_member(&my1) {
            Ok(true) => BigUint::one(),
            _ => seq.productive_multiplier(&my1)?,
        };
        let x = &r * x1;
        let y = &r * y1;
        let limit = seq.budgets().max_denominator_bits;
        if y.bits() > limit {
            return Err(Error::DenominatorBudgetExceeded { what: "scaled denominator y", bits: y.bits(), limit });
        }
        let split = binary_remainder_split(&m_big, &x, &y)?;
        let k = split.k;
        let my = &m_big * &y;
        denominators.extend(split.a_exponents.iter().map(|&i| &m_big << (k - i)));
        denominators.extend(split.b_exponents.iter().map(|&j| &my << (k - j)));
        trace.remainder = Some(RemainderTrace { x, y, multiplier: r, split });
    }

    let expansion = match Expansion::new(denominators) {
        Ok(e) => e,
        Err(e) => return Err(fail(e.to_string(), &trace)),
    };
    check_postconditions(seq, q, &expansion, &trace)?;
    Ok((expansion, trace))
}

fn check_postconditions(seq: &Sequence, q: &Rational, expansion: &Expansion, trace: &ExpansionTrace) -> Result<()> {
    if let Some(rem) = &trace.remainder {
        let s = &rem.split;
        let m = BigUint::from(trace.min_elem);
        if (&m * &rem.x) << s.k != &s.quotient * &rem.y + &s.remainder {
            return Err(fail("2^k m x != a y + b".into(), trace));
        }
        if s.quotient >= rem.y || s.remainder >= rem.y {
            return Err(fail("quotient or remainder not below y".into(), trace));
        }
        if s.a_exponents.iter().chain(&s.b_exponents).any(|&e| e > s.k) {
            return Err(fail("binary exponent above k".into(), trace));
        }
        let odd_y = &rem.y >> rem.y.trailing_zeros().unwrap_or(0);
        if odd_y.is_one() {
            return Err(fail("y lost its odd factor".into(), trace));
        }
    }
    for (d, verdict) in expansion.denominators().iter().zip(seq.check_members(expansion.denominators())) {
        // an undecidable verdict means the factorization budget ran out on a
        // denominator the construction already vouches for
        if let Ok(false) = verdict {
            return Err(fail(format!("denominator {} is not in {}", abbreviate(d), seq.id()), trace));
        }
    }
    let total = expansion.sum();
    if &total != q {
        return Err(fail(format!("expansion sums to {total}, expected {q}"), trace));
    }
    Ok(())
}
