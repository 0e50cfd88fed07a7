use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// The supported sequences. Each is closed under doubling and contains a
/// multiple of every positive integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceId {
    /// A005153: every m <= n is a sum of distinct divisors of n.
    Practical,
    /// A000069: odd number of set bits.
    Odious,
    /// A001969 without 0: even number of set bits.
    Evil,
    /// A025487: exponents nonincreasing over the consecutive primes 2, 3, 5, ...
    HardyRamanujan,
    /// A001013: products of factorials.
    JordanPolya,
    /// A003714: no two adjacent set bits.
    Fibbinary,
    /// A126684: sums of distinct powers of four, and their doubles.
    MoserDoubled,
    /// A116882: 2^k * l with l odd and 2^k >= l.
    HalfHeavy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convergence {
    Divergent,
    Convergent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultiplierStrategy {
    ClosedForm,
    AscendingSearch,
    Pigeonhole,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SequenceDescriptor {
    pub id: SequenceId,
    pub min_element: u64,
    pub convergence: Convergence,
    pub multiplier_strategy: MultiplierStrategy,
}

impl SequenceId {
    pub const ALL: [SequenceId; 8] = [
        SequenceId::Practical,
        SequenceId::Odious,
        SequenceId::Evil,
        SequenceId::HardyRamanujan,
        SequenceId::JordanPolya,
        SequenceId::Fibbinary,
        SequenceId::MoserDoubled,
        SequenceId::HalfHeavy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceId::Practical => "practical",
            SequenceId::Odious => "odious",
            SequenceId::Evil => "evil",
            SequenceId::HardyRamanujan => "hardy_ramanujan",
            SequenceId::JordanPolya => "jordan_polya",
            SequenceId::Fibbinary => "fibbinary",
            SequenceId::MoserDoubled => "moser_doubled",
            SequenceId::HalfHeavy => "half_heavy",
        }
    }

    pub fn oeis(self) -> &'static str {
        match self {
            SequenceId::Practical => "A005153",
            SequenceId::Odious => "A000069",
            SequenceId::Evil => "A001969",
            SequenceId::HardyRamanujan => "A025487",
            SequenceId::JordanPolya => "A001013",
            SequenceId::Fibbinary => "A003714",
            SequenceId::MoserDoubled => "A126684",
            SequenceId::HalfHeavy => "A116882",
        }
    }

    pub fn min_element(self) -> u64 {
        match self {
            SequenceId::Evil => 3,
            _ => 1,
        }
    }

    pub fn convergence(self) -> Convergence {
        match self {
            SequenceId::Practical | SequenceId::Odious | SequenceId::Evil => Convergence::Divergent,
            _ => Convergence::Convergent,
        }
    }

    pub fn multiplier_strategy(self) -> MultiplierStrategy {
        match self {
            SequenceId::Odious | SequenceId::Fibbinary => MultiplierStrategy::AscendingSearch,
            SequenceId::MoserDoubled => MultiplierStrategy::Pigeonhole,
            _ => MultiplierStrategy::ClosedForm,
        }
    }

    pub fn descriptor(self) -> SequenceDescriptor {
        SequenceDescriptor {
            id: self,
            min_element: self.min_element(),
            convergence: self.convergence(),
            multiplier_strategy: self.multiplier_strategy(),
        }
    }

    /// Membership is decided from the prime factorization rather than the
    /// binary digits.
    pub(crate) fn needs_factorization(self) -> bool {
        matches!(self, SequenceId::Practical | SequenceId::HardyRamanujan | SequenceId::JordanPolya)
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts the descriptive name (case-insensitive, `-` or `_`) or the OEIS id.
impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        SequenceId::ALL
            .into_iter()
            .find(|id| id.name() == key || id.oeis().eq_ignore_ascii_case(&key))
            .ok_or_else(|| Error::UnknownSequence(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for id in SequenceId::ALL {
            assert_eq!(id.name().parse::<SequenceId>().unwrap(), id);
            assert_eq!(id.oeis().parse::<SequenceId>().unwrap(), id);
            assert_eq!(id.oeis().to_lowercase().parse::<SequenceId>().unwrap(), id);
        }
        assert_eq!("Jordan-Polya".parse::<SequenceId>().unwrap(), SequenceId::JordanPolya);
        assert!("primes".parse::<SequenceId>().is_err());
    }

    #[test]
    fn divergent_exactly_the_dense_three() {
        let divergent: Vec<_> =
            SequenceId::ALL.into_iter().filter(|id| id.convergence() == Convergence::Divergent).collect();
        assert_eq!(divergent, [SequenceId::Practical, SequenceId::Odious, SequenceId::Evil]);
    }
}
