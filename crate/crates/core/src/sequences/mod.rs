//! Sequence backends: membership, ascending enumeration, minimum element and
//! a constructive productive multiplier for each supported sequence.

pub(crate) mod binary;
mod hardy_ramanujan;
mod id;
mod jordan_polya;
mod multiplier;
mod practical;

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

pub use id::{Convergence, MultiplierStrategy, SequenceDescriptor, SequenceId};

use crate::error::{Error, Result};
use crate::numeric::{factorize, Factorization, DEFAULT_FACTOR_BUDGET};
use jordan_polya::JordanPolya;

/// Limits that turn runaway work into explicit errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Trial-division bound for factorization.
    pub factor: u64,
    /// Upper bound on candidates tried by multiplier searches.
    pub search: u64,
    /// Maximum number of sequence members consumed by prefix selection.
    pub prefix_members: u64,
    /// Maximum bit length of the working denominator `y` of an expansion.
    pub max_denominator_bits: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            factor: DEFAULT_FACTOR_BUDGET,
            search: 1 << 20,
            prefix_members: 1_000_000,
            max_denominator_bits: 1 << 15,
        }
    }
}

/// One sequence backend. Holds the Jordan-Polya memo table, which is
/// synchronized internally, so a shared instance can be used from many
/// threads.
#[derive(Debug)]
pub struct Sequence {
    id: SequenceId,
    budgets: Budgets,
    jordan_polya: JordanPolya,
}

impl Sequence {
    pub fn new(id: SequenceId) -> Self {
        Self::with_budgets(id, Budgets::default())
    }

    pub fn with_budgets(id: SequenceId, budgets: Budgets) -> Self {
        Sequence { id, budgets, jordan_polya: JordanPolya::default() }
    }

    pub fn id(&self) -> SequenceId {
        self.id
    }

    pub fn budgets(&self) -> &Budgets {
        &self.budgets
    }

    pub fn descriptor(&self) -> SequenceDescriptor {
        self.id.descriptor()
    }

    pub fn min_element(&self) -> u64 {
        self.id.min_element()
    }

    fn undecidable(&self, n: &BigUint) -> Error {
        Error::MembershipUndecidable { sequence: self.id.name(), n: abbreviate(n) }
    }

    /// For the factorization-based sequences: the least `j` such that
    /// `2^j * odd` is a member, or `None` if no power of two helps.
    /// Every supported sequence is closed under doubling, so membership of
    /// `2^e * odd` is exactly `e >= j`.
    fn min_two_exponent(&self, odd: &Factorization, odd_bits: u64) -> Result<Option<u64>> {
        match self.id {
            SequenceId::Practical => Ok(Some(practical::min_two_exponent(odd))),
            SequenceId::HardyRamanujan => Ok(hardy_ramanujan::min_two_exponent(odd)),
            SequenceId::JordanPolya => self.jordan_polya.min_two_exponent(odd, odd_bits),
            _ => unreachable!("{} is decided from binary digits", self.id),
        }
    }

    fn binary_member(&self, n: &BigUint) -> bool {
        match self.id {
            SequenceId::Odious => binary::is_odious(n),
            SequenceId::Evil => binary::is_evil(n),
            SequenceId::Fibbinary => binary::is_fibbinary(n),
            SequenceId::MoserDoubled => binary::is_moser_doubled(n),
            SequenceId::HalfHeavy => binary::is_half_heavy(n),
            _ => unreachable!("{} is decided from its factorization", self.id),
        }
    }

    /// Membership test. Zero is never a member.
    pub fn is_member(&self, n: &BigUint) -> Result<bool> {
        if n.is_zero() {
            return Ok(false);
        }
        if !self.id.needs_factorization() {
            return Ok(self.binary_member(n));
        }
        let e = n.trailing_zeros().unwrap_or(0);
        if self.id == SequenceId::Practical && e == 0 {
            return Ok(n.bits() == 1);
        }
        let odd = n >> e;
        let f = factorize(&odd, self.budgets.factor).map_err(|_| self.undecidable(n))?;
        Ok(self.min_two_exponent(&f, odd.bits())?.is_some_and(|j| e >= j))
    }

    pub fn is_member_u64(&self, n: u64) -> Result<bool> {
        match self.id {
            SequenceId::Practical => Ok(practical::member_u64(n)),
            SequenceId::HardyRamanujan | SequenceId::JordanPolya => self.is_member(&BigUint::from(n)),
            _ => Ok(binary::member_u64(self.id, n)),
        }
    }

    /// Membership of many integers at once. Integers sharing an odd part
    /// share one factorization, which matters for expansions whose
    /// denominators are long runs of `2^j * m * y`.
    pub fn check_members(&self, ns: &[BigUint]) -> Vec<Result<bool>> {
        if !self.id.needs_factorization() {
            return ns.iter().map(|n| Ok(!n.is_zero() && self.binary_member(n))).collect();
        }
        let mut thresholds: HashMap<BigUint, Option<Option<u64>>> = HashMap::new();
        ns.iter()
            .map(|n| {
                if n.is_zero() {
                    return Ok(false);
                }
                let e = n.trailing_zeros().unwrap_or(0);
                let odd = n >> e;
                let bits = odd.bits();
                let entry = match thresholds.get(&odd) {
                    Some(t) => *t,
                    None => {
                        let t = factorize(&odd, self.budgets.factor)
                            .ok()
                            .and_then(|f| self.min_two_exponent(&f, bits).ok());
                        thresholds.insert(odd, t);
                        t
                    }
                };
                match entry {
                    Some(t) => Ok(t.is_some_and(|j| e >= j)),
                    None => Err(self.undecidable(n)),
                }
            })
            .collect()
    }

    /// All members `<= limit`, ascending.
    pub fn enumerate_ascending(&self, limit: u64) -> Result<Vec<u64>> {
        match self.id {
            SequenceId::HardyRamanujan => Ok(hardy_ramanujan::enumerate(limit)),
            SequenceId::JordanPolya => Ok(jordan_polya::enumerate(limit)),
            SequenceId::Practical => {
                // odd numbers above 1 are never practical
                let evens = (2..=limit).step_by(2).filter(|&n| practical::member_u64(n));
                Ok((1..=limit.min(1)).chain(evens).collect())
            }
            _ => Ok((1..=limit).filter(|&n| binary::member_u64(self.id, n)).collect()),
        }
    }

    /// The first `count` members.
    pub fn first_members(&self, count: usize) -> Result<Vec<u64>> {
        let mut out = Vec::with_capacity(count);
        for m in self.members() {
            if out.len() == count {
                break;
            }
            out.push(m?);
        }
        Ok(out)
    }

    /// Lazy ascending stream of members. The first few million members of
    /// each sequence are cached process-wide.
    pub fn members(&self) -> Members<'_> {
        Members { seq: self, index: 0, overflow: None }
    }

    /// Members in `(lo, hi]` for the next window after `lo`.
    fn next_window(&self, lo: u64) -> Result<(Vec<u64>, u64)> {
        let hi = match self.id {
            SequenceId::HardyRamanujan | SequenceId::JordanPolya => lo.saturating_mul(2).max(1024),
            _ => lo.saturating_add(1 << 16),
        };
        let batch = match self.id {
            SequenceId::HardyRamanujan | SequenceId::JordanPolya => {
                self.enumerate_ascending(hi)?.into_iter().filter(|&m| m > lo).collect()
            }
            _ => {
                let mut out = Vec::new();
                for n in lo + 1..=hi {
                    if self.is_member_u64(n)? {
                        out.push(n);
                    }
                }
                out
            }
        };
        Ok((batch, hi))
    }

    /// Some `r >= 1` with `r * n` a member.
    pub fn productive_multiplier(&self, n: &BigUint) -> Result<BigUint> {
        if n.is_zero() {
            return Err(Error::PreconditionViolated("multiplier of 0".into()));
        }
        let b = &self.budgets;
        let factored = || factorize(n, b.factor);
        match self.id {
            SequenceId::Practical => Ok(practical::multiplier(&factored()?)),
            SequenceId::Odious => multiplier::ascending_search(n, b.search, binary::is_odious)
                .ok_or_else(|| Error::SearchBudgetExceeded { sequence: "odious", n: abbreviate(n), budget: b.search }),
            SequenceId::Evil => Ok(multiplier::evil(n)),
            SequenceId::HardyRamanujan => hardy_ramanujan::multiplier(&factored()?, b.factor, b.max_denominator_bits),
            SequenceId::JordanPolya => jordan_polya::multiplier(n, &factored()?, b.factor, b.max_denominator_bits),
            SequenceId::Fibbinary => multiplier::fibbinary(n, b.search),
            SequenceId::MoserDoubled => multiplier::pigeonhole(n, b.search).map(|(r, _, _)| r),
            SequenceId::HalfHeavy => Ok(multiplier::half_heavy(n)),
        }
    }

    /// The pigeonhole indices `(i, j)` behind the moser_doubled multiplier:
    /// `r * n = 4^i (4^(j-i) - 1) / 3`.
    pub fn pigeonhole_indices(&self, n: &BigUint) -> Result<(u64, u64)> {
        multiplier::pigeonhole(n, self.budgets.search).map(|(_, i, j)| (i, j))
    }
}

const CACHE_CAP: usize = 1 << 22;

struct MemberCache {
    members: Vec<u64>,
    scanned_through: u64,
}

static CACHES: [Mutex<MemberCache>; SequenceId::ALL.len()] =
    [const { Mutex::new(MemberCache { members: Vec::new(), scanned_through: 0 }) }; 8];

/// Ascending member stream, served from the shared cache while it lasts
/// and scanned locally past its cap.
pub struct Members<'a> {
    seq: &'a Sequence,
    index: usize,
    overflow: Option<(Vec<u64>, usize, u64)>,
}

impl Iterator for Members<'_> {
    type Item = Result<u64>;

    fn next(&mut self) -> Option<Result<u64>> {
        if self.overflow.is_none() {
            let mut cache = CACHES[self.seq.id as usize].lock().unwrap_or_else(|e| e.into_inner());
            while self.index >= cache.members.len() {
                if cache.members.len() >= CACHE_CAP || cache.scanned_through == u64::MAX {
                    break;
                }
                match self.seq.next_window(cache.scanned_through) {
                    Ok((batch, hi)) => {
                        cache.members.extend(batch);
                        cache.scanned_through = hi;
                    }
                    Err(e) => return Some(Err(e)),
                }
            }
            if let Some(&m) = cache.members.get(self.index) {
                self.index += 1;
                return Some(Ok(m));
            }
            self.overflow = Some((Vec::new(), 0, cache.scanned_through));
        }
        let (buffer, pos, done_through) = self.overflow.as_mut().unwrap();
        while *pos == buffer.len() {
            if *done_through == u64::MAX {
                return None;
            }
            match self.seq.next_window(*done_through) {
                Ok((batch, hi)) => {
                    *buffer = batch;
                    *pos = 0;
                    *done_through = hi;
                }
                Err(e) => {
                    *done_through = u64::MAX;
                    return Some(Err(e));
                }
            }
        }
        *pos += 1;
        Some(Ok(buffer[*pos - 1]))
    }
}

/// Short rendering of a possibly enormous integer for error messages.
pub(crate) fn abbreviate(n: &BigUint) -> String {
    match n.to_u128() {
        Some(v) => v.to_string(),
        None => format!("<{}-bit integer>", n.bits()),
    }
}

#[cfg(test)]
mod tests;
