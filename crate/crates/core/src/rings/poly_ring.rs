use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Ring, Style};
use crate::error::Result;
use crate::poly::{self, Polynomial};

/// Univariate polynomial ring `R[var]`. Used to keep the Dickson parameter
/// `a` symbolic, e.g. for reproducing the table `D_4 = x^4 − 4ax^2 + 2a^2`
/// with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing<R> {
    base: R,
    var: String,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R, var: impl Into<String>) -> Self {
        Self {
            base,
            var: var.into(),
        }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    /// The indeterminate itself.
    pub fn var(&self) -> Polynomial<R::Elem> {
        Polynomial::x(&self.base)
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Polynomial<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Polynomial::zero()
    }

    fn one(&self) -> Self::Elem {
        Polynomial::constant(&self.base, self.base.one())
    }

    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        Polynomial::constant(&self.base, self.base.from_bigint(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        poly::add(&self.base, a, b)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        poly::sub(&self.base, a, b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        poly::neg(&self.base, a)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        poly::mul(&self.base, a, b)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        match a.coeffs() {
            [c] => Some(Polynomial::constant(&self.base, self.base.try_inv(c)?)),
            _ => None,
        }
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn try_from_rational(&self, q: &BigRational) -> Result<Self::Elem> {
        Ok(Polynomial::constant(
            &self.base,
            self.base.try_from_rational(q)?,
        ))
    }

    fn render(&self, a: &Self::Elem, style: Style) -> String {
        poly::render(&self.base, a, &self.var, style)
    }

    fn describe(&self) -> String {
        format!("{}[{}]", self.base.describe(), self.var)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Integers;

    #[test]
    fn renders_monomials_in_the_parameter() {
        let za = PolyRing::new(Integers, "a");
        let a = za.var();
        let m = za.mul(&za.from_i64(-4), &a);
        assert_eq!(za.render(&m, Style::Latex), "-4a");
        let a2 = za.mul(&za.from_i64(2), &za.pow(&a, 2));
        assert_eq!(za.render(&a2, Style::Latex), "2a^{2}");
        assert_eq!(za.render(&a2, Style::Human), "2*a^2");
        assert_eq!(za.try_inv(&za.from_i64(-1)), Some(za.from_i64(-1)));
        assert_eq!(za.try_inv(&a), None);
    }
}
