use num_bigint::BigUint;
use proptest::prelude::*;

use super::*;

fn seq(id: SequenceId) -> Sequence {
    Sequence::new(id)
}

fn member(id: SequenceId, n: u64) -> bool {
    seq(id).is_member_u64(n).unwrap()
}

fn mult(id: SequenceId, n: u64) -> BigUint {
    seq(id).productive_multiplier(&BigUint::from(n)).unwrap()
}

#[test]
fn membership_examples() {
    assert!(member(SequenceId::Practical, 6));
    assert!(!member(SequenceId::Practical, 10));
    assert!(member(SequenceId::Odious, 7));
    assert!(member(SequenceId::HardyRamanujan, 12));
    assert!(member(SequenceId::JordanPolya, 48));
    assert!(!member(SequenceId::HalfHeavy, 6));
    for id in SequenceId::ALL {
        assert!(!seq(id).is_member(&BigUint::default()).unwrap(), "{id} contains 0");
    }
}

#[test]
fn min_element_examples() {
    assert_eq!(seq(SequenceId::Practical).min_element(), 1);
    assert_eq!(seq(SequenceId::Evil).min_element(), 3);
    assert_eq!(seq(SequenceId::Odious).min_element(), 1);
}

#[test]
fn min_element_is_least_member() {
    for id in SequenceId::ALL {
        let s = seq(id);
        let m = s.min_element();
        assert!(s.is_member_u64(m).unwrap());
        assert!((1..m).all(|n| !s.is_member_u64(n).unwrap()));
    }
}

#[test]
fn enumeration_examples() {
    assert_eq!(
        seq(SequenceId::Practical).enumerate_ascending(30).unwrap(),
        vec![1, 2, 4, 6, 8, 12, 16, 18, 20, 24, 28, 30]
    );
    assert_eq!(seq(SequenceId::Fibbinary).enumerate_ascending(10).unwrap(), vec![1, 2, 4, 5, 8, 9, 10]);
    assert_eq!(seq(SequenceId::MoserDoubled).enumerate_ascending(10).unwrap(), vec![1, 2, 4, 5, 8, 10]);
}

#[test]
fn multiplier_examples() {
    assert_eq!(mult(SequenceId::Odious, 3), BigUint::from(7u8));
    assert_eq!(mult(SequenceId::Evil, 1), BigUint::from(3u8));
    assert_eq!(mult(SequenceId::JordanPolya, 5), BigUint::from(24u8));
    assert_eq!(mult(SequenceId::Practical, 7), BigUint::from(8u8));
    assert_eq!(mult(SequenceId::HalfHeavy, 3), BigUint::from(4u8));
}

#[test]
fn stream_agrees_with_enumeration() {
    for id in SequenceId::ALL {
        let s = seq(id);
        let listed = s.enumerate_ascending(20_000).unwrap();
        let streamed: Vec<u64> = s.members().map(Result::unwrap).take_while(|&m| m <= 20_000).collect();
        assert_eq!(listed, streamed, "{id}");
    }
}

#[test]
fn big_members_use_factorization_paths() {
    let two = |e: u32| BigUint::from(1u8) << e;
    // 2^100 * 3^5 * 5^2 * 7: exponents nonincreasing over 2, 3, 5, 7
    let hr = two(100) * BigUint::from(3u8).pow(5) * 25u32 * 7u32;
    assert!(seq(SequenceId::HardyRamanujan).is_member(&hr).unwrap());
    assert!(!seq(SequenceId::HardyRamanujan).is_member(&(&hr * 11u32 * 11u32)).unwrap());
    // 30! * 2^40 is a product of factorials
    let f30 = (2u32..=30).fold(BigUint::from(1u8), |a, i| a * i);
    assert!(seq(SequenceId::JordanPolya).is_member(&(&f30 * two(40))).unwrap());
    assert!(seq(SequenceId::JordanPolya).is_member(&(&f30 * 31u32)).unwrap());
    assert!(!seq(SequenceId::JordanPolya).is_member(&(&f30 * 37u32)).unwrap());
    // practical: 2^20 * (product of odd primes below 40)
    let odd: u64 = [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37].iter().product();
    assert!(seq(SequenceId::Practical).is_member(&(two(20) * odd)).unwrap());
    assert!(!seq(SequenceId::Practical).is_member(&(two(1) * (odd / 3))).unwrap());
}

#[test]
fn grouped_check_matches_single() {
    for id in SequenceId::ALL {
        let s = seq(id);
        let ns: Vec<BigUint> = (0u64..600).map(|n| BigUint::from(n * 7 + (n % 5))).collect();
        let grouped = s.check_members(&ns);
        for (n, g) in ns.iter().zip(grouped) {
            assert_eq!(g.unwrap(), s.is_member(n).unwrap(), "{id} {n}");
        }
    }
}

#[test]
fn undecidable_membership_is_reported() {
    let p = BigUint::from(18446744073709551557u64);
    let n = (&p * &p) << 3u32;
    let s = Sequence::with_budgets(SequenceId::Practical, Budgets { factor: 1 << 10, ..Budgets::default() });
    assert!(matches!(s.is_member(&n), Err(Error::MembershipUndecidable { .. })));
    assert!(s.check_members(&[n]).pop().unwrap().is_err());
}

#[test]
fn odious_search_budget() {
    let s = Sequence::with_budgets(SequenceId::Odious, Budgets { search: 0, ..Budgets::default() });
    assert!(matches!(s.productive_multiplier(&BigUint::from(3u8)), Err(Error::SearchBudgetExceeded { .. })));
}

proptest! {
    #[test]
    fn multiplier_lands_in_sequence(n in 1u64..1_000_000, which in 0usize..8) {
        let s = seq(SequenceId::ALL[which]);
        let n = BigUint::from(n);
        match s.productive_multiplier(&n) {
            Ok(r) => prop_assert!(s.is_member(&(r * &n)).unwrap()),
            Err(e) => prop_assert!(e.is_budget(), "{}", e),
        }
    }
}
