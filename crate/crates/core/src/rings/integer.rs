use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{Ring, Sample, Style};
use crate::error::{Error, Result};

/// The integers, backed by arbitrary-precision `BigInt`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn from_bigint(&self, n: &BigInt) -> BigInt {
        n.clone()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn try_inv(&self, a: &BigInt) -> Option<BigInt> {
        (a.abs().is_one()).then(|| a.clone())
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn try_from_rational(&self, q: &BigRational) -> Result<BigInt> {
        if q.is_integer() {
            Ok(q.to_integer())
        } else {
            Err(Error::NotIntegral(q.to_string()))
        }
    }

    fn render(&self, a: &BigInt, _style: Style) -> String {
        a.to_string()
    }

    fn describe(&self) -> String {
        "int".to_string()
    }
}

impl Sample for Integers {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> BigInt {
        BigInt::from(rng.random_range(-20i64..=20))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn units_are_plus_minus_one() {
        assert_eq!(Integers.try_inv(&BigInt::from(-1)), Some(BigInt::from(-1)));
        assert_eq!(Integers.try_inv(&BigInt::from(2)), None);
    }

    #[test]
    fn rejects_fractions() {
        let half = BigRational::new(1.into(), 2.into());
        assert!(matches!(
            Integers.try_from_rational(&half),
            Err(Error::NotIntegral(_))
        ));
    }
}
