//! Egyptian fraction expansions whose denominators are drawn from a
//! doubling-closed, productive integer sequence.
//!
//! The construction works for any sequence `S` with two properties:
//! doubling a member gives another member, and every positive integer has
//! a multiple in `S`. Given a target `q` below the reciprocal sum of `S`,
//! [`expander::expand`] takes the longest greedy prefix of `S` whose
//! reciprocals fit under `q`, and writes the remainder `x/y` as
//! `(a*y + b) / (2^k * m * y)`, reading unit fractions off the binary digits
//! of `a` and `b`.
//!
//! Modules:
//! - [`numeric`]: exact rationals, trial-division factorization, bit helpers.
//! - [`sequences`]: the eight supported sequence backends.
//! - [`expander`]: the binary remainder construction with its trace.
//! - [`bounds`]: certified partial sums, total-sum upper bounds, feasibility.
//! - [`verifier`]: brute-force oracles, expansion checks, b-file comparison.

pub mod bounds;
pub mod error;
pub mod expander;
pub mod numeric;
pub mod sequences;
pub mod verifier;

pub use bounds::{feasibility, partial_reciprocal_sum, total_sum_upper_bound, FeasibilityVerdict, Verdict};
pub use error::{Error, Result};
pub use expander::{expand, Expansion, ExpansionTrace};
pub use numeric::{Factorization, Rational};
pub use sequences::{Budgets, Convergence, MultiplierStrategy, Sequence, SequenceDescriptor, SequenceId};
pub use verifier::{verify_expansion, MembershipStatus, VerificationReport};

pub use num_bigint::BigUint;
