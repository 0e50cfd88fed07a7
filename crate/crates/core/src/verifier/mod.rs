//! Independent checks: brute-force oracles, expansion verification and
//! b-file comparison.

mod bfile;
mod oracle;

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

pub use bfile::{compare_bfile, parse_bfile, Mismatch};
pub use oracle::{oracle_members, ORACLE_LIMIT};

use crate::error::Error;
use crate::numeric::{sum_unit_fractions, Rational};
use crate::sequences::{Sequence, SequenceId};

/// Denominators up to this size are also checked against the oracle.
pub const ORACLE_CONFIRM_LIMIT: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MembershipStatus {
    AllConfirmed,
    /// No denominator was rejected, but some could not be decided within
    /// the factorization budget.
    SomeUndecidable,
    SomeRejected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// `None` for problems with the list as a whole.
    pub denominator: Option<BigUint>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub sum_ok: bool,
    pub distinct_ok: bool,
    pub membership: MembershipStatus,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn oracle_set(id: SequenceId) -> &'static [u64] {
    static CACHE: [OnceLock<Vec<u64>>; SequenceId::ALL.len()] = [const { OnceLock::new() }; 8];
    CACHE[id as usize].get_or_init(|| oracle_members(id, ORACLE_CONFIRM_LIMIT).expect("limit within oracle range"))
}

/// Checks that `denominators` are distinct members of the sequence whose
/// reciprocals sum to exactly `q`. Membership uses the sequence's own
/// budgets; a budget overrun is reported as undecidable, never as a pass.
pub fn verify_expansion(seq: &Sequence, q: &Rational, denominators: &[BigUint]) -> VerificationReport {
    let mut violations = Vec::new();
    let mut flag = |d: &BigUint, reason: String| violations.push(Violation { denominator: Some(d.clone()), reason });

    let mut sorted: Vec<&BigUint> = denominators.iter().collect();
    sorted.sort();
    let mut distinct_ok = true;
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            distinct_ok = false;
            flag(w[0], "repeated".into());
        }
    }

    let mut rejected = false;
    let mut undecidable = false;
    for (d, verdict) in denominators.iter().zip(seq.check_members(denominators)) {
        match verdict {
            Ok(true) => {}
            Ok(false) => {
                rejected = true;
                flag(d, format!("not a member of {}", seq.id()));
            }
            Err(e) => {
                undecidable = true;
                if !matches!(e, Error::MembershipUndecidable { .. }) {
                    flag(d, e.to_string());
                }
            }
        }
        if let Some(small) = d.to_u64().filter(|&v| v <= ORACLE_CONFIRM_LIMIT) {
            let listed = oracle_set(seq.id()).binary_search(&small).is_ok();
            let primary = seq.is_member_u64(small).ok();
            if small > 0 && primary.is_some_and(|p| p != listed) {
                rejected = true;
                flag(d, "membership test and oracle disagree".into());
            }
        }
    }
    let membership = if rejected {
        MembershipStatus::SomeRejected
    } else if undecidable {
        MembershipStatus::SomeUndecidable
    } else {
        MembershipStatus::AllConfirmed
    };

    let sum_ok = if denominators.iter().any(Zero::is_zero) {
        violations.push(Violation { denominator: Some(BigUint::zero()), reason: "zero denominator".into() });
        false
    } else {
        let total = sum_unit_fractions(denominators);
        let ok = &total == q;
        if !ok {
            violations.push(Violation { denominator: None, reason: format!("sum is {total}, expected {q}") });
        }
        ok
    };
    if membership == MembershipStatus::SomeUndecidable {
        violations.push(Violation { denominator: None, reason: "membership undecidable within budget".into() });
    }
    VerificationReport { sum_ok, distinct_ok, membership, violations }
}
