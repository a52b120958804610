use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;

use super::{Field, FiniteField, Ring, Sample, Style, MAX_FIELD_ORDER};
use crate::error::{Error, Result};

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The prime field 𝔽_p with residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge { p, m: 1 });
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_bigint(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p))
            .to_u64()
            .expect("residue fits in u64")
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn try_inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        Some(self.pow(a, self.p - 2))
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn try_from_rational(&self, q: &BigRational) -> Result<u64> {
        let n = self.from_bigint(q.numer());
        let d = self.from_bigint(q.denom());
        self.div(&n, &d)
    }

    fn render(&self, a: &u64, _style: Style) -> String {
        a.to_string()
    }

    fn describe(&self) -> String {
        format!("fp({})", self.p)
    }
}

impl Field for PrimeField {}

impl FiniteField for PrimeField {
    fn order(&self) -> u64 {
        self.p
    }

    fn element(&self, index: u64) -> u64 {
        index % self.p
    }

    fn index_of(&self, a: &u64) -> u64 {
        *a
    }
}

impl Sample for PrimeField {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> u64 {
        rng.random_range(0..self.p)
    }
}
