use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::factor::{factorize_u64, DEFAULT_FACTOR_BUDGET};
use super::rational::Rational;

/// Running sum of unit fractions with machine-word denominators, kept in
/// lowest terms.
///
/// Adding `1/d` to `N/D` only ever creates common factors from primes of
/// `d`, so reduction is a handful of word-sized divisibility tests instead
/// of a full big-integer gcd.
#[derive(Clone, Debug)]
pub struct UnitFractionSum {
    num: BigUint,
    den: BigUint,
}

impl Default for UnitFractionSum {
    fn default() -> Self {
        Self::new()
    }
}

impl UnitFractionSum {
    pub fn new() -> Self {
        UnitFractionSum { num: BigUint::zero(), den: BigUint::one() }
    }

    pub fn denominator_bits(&self) -> u64 {
        self.den.bits()
    }

    /// The sum with `1/d` added, without committing it.
    pub fn plus(&self, d: u64) -> UnitFractionSum {
        assert!(d > 0, "unit fraction 1/0");
        let g = (&self.den % d).to_u64().unwrap().gcd(&d);
        let d1 = d / g;
        let mut num = &self.num * d1 + &self.den / g;
        let mut den = &self.den * d1;
        if d > 1 {
            let primes = factorize_u64(d, DEFAULT_FACTOR_BUDGET).expect("word-sized input always factors");
            for &(p, _) in primes.factors() {
                while (&num % p).is_zero() && (&den % p).is_zero() {
                    num /= p;
                    den /= p;
                }
            }
        }
        UnitFractionSum { num, den }
    }

    pub fn add(&mut self, d: u64) {
        *self = self.plus(d);
    }

    pub fn le(&self, q: &Rational) -> bool {
        let (qn, qd) = q.to_parts();
        if !q.is_positive() {
            return self.num.is_zero() && q.is_zero();
        }
        &self.num * qd <= qn * &self.den
    }

    pub fn to_rational(&self) -> Rational {
        Rational::from_parts(self.num.clone(), self.den.clone())
    }
}

/// Exact `sum 1/d` over arbitrary-size denominators.
///
/// Denominators are grouped by odd part; within a group the powers of two
/// collapse into one dyadic numerator. Groups whose odd part fits in a word
/// share a single lcm, so only the few large groups need big-integer gcds.
pub fn sum_unit_fractions(denominators: &[BigUint]) -> Rational {
    let mut groups: HashMap<BigUint, Vec<u64>> = HashMap::new();
    for d in denominators {
        assert!(!d.is_zero(), "unit fraction 1/0");
        let e = d.trailing_zeros().unwrap_or(0);
        groups.entry(d >> e).or_default().push(e);
    }

    // (odd part, dyadic numerator c, exponent E): the group sums to c / (o * 2^E)
    let mut small: Vec<(u64, BigUint, u64)> = Vec::new();
    let mut large: Vec<(BigUint, BigUint, u64)> = Vec::new();
    for (odd, exps) in groups {
        let top = *exps.iter().max().unwrap();
        let c = exps.iter().fold(BigUint::zero(), |acc, &e| acc + (BigUint::one() << (top - e)));
        match odd.to_u64() {
            Some(o) => small.push((o, c, top)),
            None => large.push((odd, c, top)),
        }
    }

    let mut total = Rational::zero();
    if !small.is_empty() {
        let mut lcm = BigUint::one();
        for &(o, _, _) in &small {
            let g = (&lcm % o).to_u64().unwrap().gcd(&o);
            lcm *= o / g;
        }
        let top = small.iter().map(|&(_, _, e)| e).max().unwrap();
        let mut num = BigUint::zero();
        for (o, c, e) in &small {
            num += (c << (top - e)) * (&lcm / *o);
        }
        total = Rational::from_parts(num, lcm << top);
    }
    for (o, c, e) in large {
        total = &total + &Rational::from_parts(c, o << e);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(ds: &[u64]) -> Rational {
        ds.iter().fold(Rational::zero(), |acc, &d| &acc + &Rational::unit(&BigUint::from(d)))
    }

    #[test]
    fn running_sum_matches_naive() {
        let ds: Vec<u64> = (1..300).chain([2, 2, 4, 6, 1024, 999_983]).collect();
        let mut s = UnitFractionSum::new();
        for (i, &d) in ds.iter().enumerate() {
            s.add(d);
            assert_eq!(s.to_rational(), naive(&ds[..=i]));
        }
    }

    #[test]
    fn grouped_sum_matches_naive() {
        let ds: Vec<u64> = vec![4, 16, 84, 168, 336, 3, 6, 12, 12, 7, 1, 1 << 40];
        let big: Vec<BigUint> = ds.iter().map(|&d| d.into()).collect();
        assert_eq!(sum_unit_fractions(&big), naive(&ds));
        assert_eq!(sum_unit_fractions(&big[..5]), "1/3".parse().unwrap());
        assert_eq!(sum_unit_fractions(&[]), Rational::zero());
    }

    #[test]
    fn grouped_sum_with_large_odd_parts() {
        let y = BigUint::from(3u8).pow(50) * 7u32;
        let ds: Vec<BigUint> = vec![&y << 3u32, &y << 1u32, y.clone(), BigUint::from(5u8), &y * 11u32];
        let expect = ds.iter().fold(Rational::zero(), |acc, d| &acc + &Rational::unit(d));
        assert_eq!(sum_unit_fractions(&ds), expect);
    }

    #[test]
    fn le_compares_exactly() {
        let mut s = UnitFractionSum::new();
        s.add(2);
        s.add(3);
        assert!(s.le(&"5/6".parse().unwrap()));
        assert!(!s.le(&"4/5".parse().unwrap()));
    }
}
