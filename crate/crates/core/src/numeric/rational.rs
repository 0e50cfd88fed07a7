use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::InvalidRational("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    /// `num / den` for unsigned parts; `den` must be nonzero.
    pub fn from_parts(num: BigUint, den: BigUint) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(BigInt::from_biguint(Sign::Plus, num), BigInt::from_biguint(Sign::Plus, den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// The unit fraction `1/d`.
    pub fn unit(d: &BigUint) -> Self {
        Self::from_parts(BigUint::one(), d.clone())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Numerator magnitude and denominator as unsigned integers.
    pub fn to_parts(&self) -> (BigUint, BigUint) {
        (self.0.numer().magnitude().clone(), self.0.denom().magnitude().clone())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    /// Lossy conversion for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

macro_rules! forward_op {
    ($tr:ident, $m:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$m(&rhs.0))
            }
        }
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0.$m(rhs.0))
            }
        }
    };
}

forward_op!(Add, add);
forward_op!(Sub, sub);
forward_op!(Mul, mul);

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

/// Parses `"a/b"` or `"a"` with decimal digits and an optional leading `-`
/// on the numerator. No floating point, no exponents, no whitespace inside.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num = parse_signed(num).ok_or_else(|| Error::InvalidRational(format!("bad numerator in {s:?}")))?;
        if den.starts_with(['-', '+']) {
            return Err(Error::InvalidRational(format!("signed denominator in {s:?}")));
        }
        let den = parse_signed(den).ok_or_else(|| Error::InvalidRational(format!("bad denominator in {s:?}")))?;
        Rational::new(num, den)
    }
}

fn parse_signed(s: &str) -> Option<BigInt> {
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let v: BigInt = digits.parse().ok()?;
    Some(if neg { -v } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_and_normalizes() {
        assert_eq!(r("6/4"), r("3/2"));
        assert_eq!(r("5").to_string(), "5/1");
        assert_eq!(r("-2/4").to_string(), "-1/2");
        assert_eq!(r("0/7"), Rational::zero());
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "1/0", "1.5", "1e3", "a/b", "1/", "/2", "1/-2", "1//2", "0x10"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn ordering_is_exact() {
        assert!(r("1/3") < r("333333333333333333334/1000000000000000000000"));
        assert!(r("23/12") > r("7/4"));
    }

    proptest! {
        #[test]
        fn add_then_sub_roundtrips(an in -10_000i64..10_000, ad in 1i64..10_000, bn in -10_000i64..10_000, bd in 1i64..10_000) {
            let a = Rational::new(an.into(), ad.into()).unwrap();
            let b = Rational::new(bn.into(), bd.into()).unwrap();
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            // normalization is idempotent
            let again = Rational::new(a.numer().clone(), a.denom().clone()).unwrap();
            prop_assert_eq!(again, a);
        }
    }
}
