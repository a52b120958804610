//! Coefficient rings.
//!
//! Every algorithm in the crate is written against [`Ring`] (and [`Field`]
//! where division is needed). Ring values are plain data; the ring object
//! carries whatever context the arithmetic needs (the modulus of a prime
//! field, the defining polynomial of an extension field). Equality of
//! elements is structural equality of canonical forms.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::error::{Error, Result};

mod ext_field;
mod integer;
mod poly_ring;
mod prime_field;
mod rational;

pub use ext_field::{find_irreducible, is_irreducible, ExtField};
pub use integer::Integers;
pub use poly_ring::PolyRing;
pub use prime_field::{is_prime, PrimeField};
pub use rational::{rational_normalize, Rationals};

/// Largest field order accepted by the finite-field constructors.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Output register for rendered ring elements and polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// `5*a^2*x^3`
    Human,
    /// `5a^{2}x^{3}`
    Latex,
}

// `from_*` take `&self`: the ring object carries the modulus.
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of an integer under the canonical map ℤ → R.
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Multiplicative inverse when `a` is a unit.
    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// `a^e` by square-and-multiply; `0^0 = 1`.
    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `Σ coeffs[i]·x^i`; Horner's scheme unless a ring knows better.
    fn eval_poly(&self, coeffs: &[Self::Elem], x: &Self::Elem) -> Self::Elem {
        coeffs
            .iter()
            .rev()
            .fold(self.zero(), |acc, c| self.add(&self.mul(&acc, x), c))
    }

    /// 0 for ℤ and ℚ, p for fields of characteristic p.
    fn characteristic(&self) -> u64;

    /// Reduce a rational number into the ring.
    fn try_from_rational(&self, q: &BigRational) -> Result<Self::Elem>;

    /// Parse user input. The default accepts integers and `num/den`.
    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        let q = parse_rational(s)?;
        self.try_from_rational(&q)
    }

    fn render(&self, a: &Self::Elem, style: Style) -> String;

    /// Short ring descriptor, e.g. `int`, `fp(101)`.
    fn describe(&self) -> String;
}

pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        self.try_inv(a).ok_or(Error::DivisionByZero)
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

pub trait FiniteField: Field {
    fn order(&self) -> u64;

    /// The element with enumeration index `index` (`0 ≤ index < order`).
    /// Index 0 is zero; indices below the characteristic are the prime
    /// subfield in residue order.
    fn element(&self, index: u64) -> Self::Elem;

    fn index_of(&self, a: &Self::Elem) -> u64;

    fn elements(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_> {
        Box::new((0..self.order()).map(move |i| self.element(i)))
    }
}

/// Rings that can produce random elements for the identity suites.
pub trait Sample: Ring {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem;

    fn sample_nonzero<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem {
        loop {
            let v = self.sample(rng);
            if !self.is_zero(&v) {
                return v;
            }
        }
    }
}

/// Parse `n`, `-n` or `n/d` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            rational_normalize(n, d)
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// Sum of `terms`, starting from zero.
pub fn sum<R: Ring>(ring: &R, terms: impl IntoIterator<Item = R::Elem>) -> R::Elem {
    terms
        .into_iter()
        .fold(ring.zero(), |acc, t| ring.add(&acc, &t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rational_forms() {
        assert_eq!(
            parse_rational("-3").unwrap(),
            BigRational::from_integer((-3).into())
        );
        assert_eq!(
            parse_rational("4/-6").unwrap(),
            BigRational::new((-2).into(), 3.into())
        );
        assert_eq!(parse_rational("1/0"), Err(Error::ZeroDenominator));
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn pow_zero_to_zero_is_one() {
        assert_eq!(Integers.pow(&BigInt::from(0), 0), BigInt::from(1));
        assert_eq!(Integers.pow(&BigInt::from(-2), 5), BigInt::from(-32));
    }
}
