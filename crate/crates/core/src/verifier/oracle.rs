//! Slow reference enumerations, written straight from the definitions.
//! Nothing here calls into the sequences module.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::sequences::SequenceId;

pub const ORACLE_LIMIT: u64 = 100_000;

/// All members of `id` in `[1, limit]`, ascending.
pub fn oracle_members(id: SequenceId, limit: u64) -> Result<Vec<u64>> {
    if limit > ORACLE_LIMIT {
        return Err(Error::LimitTooLarge { limit, max: ORACLE_LIMIT });
    }
    let scan = |pred: fn(u64) -> bool| (1..=limit).filter(|&n| pred(n)).collect();
    Ok(match id {
        SequenceId::Practical => scan(is_practical),
        SequenceId::Odious => scan(|n| ones(n) % 2 == 1),
        SequenceId::Evil => scan(|n| ones(n).is_multiple_of(2)),
        SequenceId::Fibbinary => scan(|n| !format!("{n:b}").contains("11")),
        SequenceId::HalfHeavy => scan(is_half_heavy),
        SequenceId::HardyRamanujan => products_of(&primorials(limit), limit),
        SequenceId::JordanPolya => products_of(&factorials(limit), limit),
        SequenceId::MoserDoubled => moser_doubled(limit),
    })
}

fn ones(n: u64) -> usize {
    format!("{n:b}").chars().filter(|&c| c == '1').count()
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Subset-sum table over the divisors. A value below the next divisor that
/// is still unreachable can never be reached, so the scan stops there.
fn is_practical(n: u64) -> bool {
    let n = n as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    let mut hi = 0;
    for d in divisors(n as u64) {
        let d = d as usize;
        if (1..d.min(n + 1)).any(|m| !reach[m]) {
            return false;
        }
        for s in (d..=(hi + d).min(n)).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
        hi = (hi + d).min(n);
    }
    reach.iter().all(|&r| r)
}

fn is_half_heavy(n: u64) -> bool {
    let mut l = n;
    let mut pow = 1u64;
    while l.is_multiple_of(2) {
        l /= 2;
        pow *= 2;
    }
    l <= pow
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn primorials(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut acc = 1u64;
    for p in (2..).filter(|&p| is_prime(p)) {
        acc = match acc.checked_mul(p) {
            Some(v) if v <= limit => v,
            _ => break,
        };
        out.push(acc);
    }
    out
}

fn factorials(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut acc = 1u64;
    for m in 2.. {
        acc = match acc.checked_mul(m) {
            Some(v) if v <= limit => v,
            _ => break,
        };
        out.push(acc);
    }
    out
}

/// Breadth-first closure of `{1}` under multiplication by the factors.
fn products_of(factors: &[u64], limit: u64) -> Vec<u64> {
    let mut seen = BTreeSet::from([1u64]);
    let mut frontier = vec![1u64];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &v in &frontier {
            for &f in factors {
                if let Some(w) = v.checked_mul(f).filter(|&w| w <= limit) {
                    if seen.insert(w) {
                        next.push(w);
                    }
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().filter(|&v| v <= limit).collect()
}

fn moser_doubled(limit: u64) -> Vec<u64> {
    let mut powers = Vec::new();
    let mut p = 1u64;
    while p <= limit {
        powers.push(p);
        p *= 4;
    }
    let mut out = BTreeSet::new();
    for subset in 1u64..(1 << powers.len()) {
        let s: u64 = powers.iter().enumerate().filter(|(i, _)| subset >> i & 1 == 1).map(|(_, &p)| p).sum();
        for v in [s, 2 * s] {
            if v <= limit {
                out.insert(v);
            }
        }
    }
    out.into_iter().collect()
}
