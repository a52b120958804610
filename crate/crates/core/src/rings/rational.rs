use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{Field, Ring, Sample, Style};
use crate::error::{Error, Result};

/// The rationals. Values are kept reduced with a positive denominator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

/// Reduce `n/d` to lowest terms with a positive denominator; zero is `0/1`.
pub fn rational_normalize(n: BigInt, d: BigInt) -> Result<BigRational> {
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(n, d))
}

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        if b.is_zero() {
            return a.clone();
        }
        if a.is_zero() {
            return -b;
        }
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        if a.is_zero() || b.is_zero() {
            return BigRational::zero();
        }
        a * b
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn try_inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    /// Clears denominators and runs Horner over ℤ, so only the final
    /// quotient is reduced.
    fn eval_poly(&self, coeffs: &[BigRational], x: &BigRational) -> BigRational {
        let lcm = coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let (p, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut q_pow = BigInt::one();
        for (i, c) in coeffs.iter().rev().enumerate() {
            if i > 0 {
                acc *= p;
                q_pow *= q;
            }
            if !c.is_zero() {
                acc += c.numer() * (&lcm / c.denom()) * &q_pow;
            }
        }
        let denom = lcm * q_pow;
        BigRational::new(acc, denom)
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn try_from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }

    fn render(&self, a: &BigRational, style: Style) -> String {
        if a.is_integer() {
            return a.numer().to_string();
        }
        match style {
            Style::Human => format!("{}/{}", a.numer(), a.denom()),
            Style::Latex => {
                let sign = if a.is_negative() { "-" } else { "" };
                format!("{sign}\\frac{{{}}}{{{}}}", a.numer().abs(), a.denom())
            }
        }
    }

    fn describe(&self) -> String {
        "rat".to_string()
    }
}

impl Field for Rationals {}

impl Sample for Rationals {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> BigRational {
        let n = rng.random_range(-12i64..=12);
        let d = rng.random_range(1i64..=8);
        BigRational::new(n.into(), d.into())
    }
}
