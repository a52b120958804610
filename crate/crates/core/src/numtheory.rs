//! Quadratic characters, Brewer sums and permutation tests for Dickson
//! polynomials over finite fields.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::dickson::dickson_eval_fast;
use crate::error::{Error, Result};
use crate::exec::{self, Strategy};
use crate::rings::{is_prime, FiniteField, PrimeField, Ring};

/// Largest field order [`is_permutation`] will enumerate.
pub const MAX_PERMUTATION_ORDER: u64 = 1 << 16;

fn check_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidLegendreModulus(p));
    }
    Ok(())
}

/// Legendre symbol `(a/p)` by Euler's criterion `a^{(p−1)/2} mod p`.
pub fn legendre(a: &BigInt, p: u64) -> Result<i8> {
    check_odd_prime(p)?;
    let r = a
        .mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue below p");
    Ok(legendre_residue(r, p))
}

/// Euler's criterion on a residue `0 ≤ r < p`; `p` must be an odd prime.
pub(crate) fn legendre_residue(r: u64, p: u64) -> i8 {
    let f = PrimeField::new(p).expect("caller checked p");
    match f.pow(&r, (p - 1) / 2) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Parameters of one Brewer sum `Λ_n(a) = Σ_{x mod p} (D_{n+1}(x, a) / p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BrewerQuery {
    p: u64,
    n: u64,
    a: u64,
}

impl BrewerQuery {
    /// `a` is reduced modulo `p`.
    pub fn new(p: u64, n: u64, a: i64) -> Result<Self> {
        check_odd_prime(p)?;
        let field = PrimeField::new(p)?;
        Ok(Self {
            p,
            n,
            a: field.reduce_i64(a),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn a(&self) -> u64 {
        self.a
    }
}

/// Exact Brewer sum; the `x` range may be split across workers.
pub fn brewer_sum(query: &BrewerQuery, strategy: Strategy) -> Result<i64> {
    let field = PrimeField::new(query.p)?;
    let n = query
        .n
        .checked_add(1)
        .ok_or(Error::Invalid("index overflow".into()))?;
    Ok(exec::sum_range(strategy, 0..query.p, |x| {
        let v = dickson_eval_fast(&field, n, &x, &query.a).expect("index within fast bound");
        legendre_residue(v, query.p) as i64
    }))
}

/// Outcome of an exhaustive permutation test for `D_n(x, a)` over `𝔽_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationVerdict {
    /// Determined by enumerating the image of every field element.
    pub is_permutation: bool,
    /// `gcd(n, q² − 1)`, or `gcd(n, q − 1)` for the monomial case.
    pub gcd_value: u64,
    /// Whether the empirical verdict matches the gcd criterion.
    pub agreement: bool,
    /// Set when `a = 0`, where `D_n(x, 0) = x^n` and the criterion is
    /// `gcd(n, q − 1) = 1`.
    pub monomial: bool,
}

fn image_is_full<F: FiniteField>(
    field: &F,
    strategy: Strategy,
    f: impl Fn(&F::Elem) -> F::Elem + Sync + Send,
) -> bool {
    let q = field.order();
    let images = exec::map_range(strategy, 0..q, |i| field.index_of(&f(&field.element(i))));
    let distinct: HashSet<u64> = images.into_iter().collect();
    distinct.len() as u64 == q
}

fn check_enumerable<F: FiniteField>(field: &F) -> Result<u64> {
    let q = field.order();
    if q > MAX_PERMUTATION_ORDER {
        return Err(Error::EnumerationTooLarge(q));
    }
    Ok(q)
}

/// Exhaustively decide whether `x ↦ D_n(x, a)` permutes the field, and
/// cross-check against `gcd(n, q² − 1) = 1`. Requires `a ≠ 0`.
pub fn is_permutation<F: FiniteField>(
    field: &F,
    n: u64,
    a: &F::Elem,
    strategy: Strategy,
) -> Result<PermutationVerdict> {
    let q = check_enumerable(field)?;
    if field.is_zero(a) {
        return Err(Error::ZeroParameter);
    }
    let is_permutation = image_is_full(field, strategy, |x| {
        dickson_eval_fast(field, n, x, a).expect("index within fast bound")
    });
    let gcd_value = n.gcd(&(q * q - 1));
    Ok(PermutationVerdict {
        is_permutation,
        gcd_value,
        agreement: is_permutation == (gcd_value == 1),
        monomial: false,
    })
}

/// The `a = 0` case: `x ↦ x^n`, cross-checked against `gcd(n, q − 1) = 1`.
pub fn is_monomial_permutation<F: FiniteField>(
    field: &F,
    n: u64,
    strategy: Strategy,
) -> Result<PermutationVerdict> {
    let q = check_enumerable(field)?;
    let is_permutation = image_is_full(field, strategy, |x| field.pow(x, n));
    let gcd_value = n.gcd(&(q - 1));
    Ok(PermutationVerdict {
        is_permutation,
        gcd_value,
        agreement: is_permutation == (gcd_value == 1),
        monomial: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dickson::dickson_first;
    use crate::poly;
    use crate::rings::ExtField;

    fn squares(p: u64) -> HashSet<u64> {
        (1..p).map(|x| x * x % p).collect()
    }

    fn brute_legendre(a: i64, p: u64) -> i8 {
        let r = a.rem_euclid(p as i64) as u64;
        if r == 0 {
            0
        } else if squares(p).contains(&r) {
            1
        } else {
            -1
        }
    }

    /// Oracle: build D_{n+1} by the recurrence, evaluate by Horner, and
    /// classify each value against the enumerated set of squares.
    fn brute_brewer(p: u64, n: u64, a: u64) -> i64 {
        let f = PrimeField::new(p).unwrap();
        let d = dickson_first(&f, n + 1, &a).unwrap();
        let sq = squares(p);
        (0..p)
            .map(|x| match poly::eval(&f, &d, &x) {
                0 => 0,
                v if sq.contains(&v) => 1,
                _ => -1,
            })
            .sum()
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(&0.into(), 7), Ok(0));
        assert_eq!(legendre(&14.into(), 7), Ok(0));
        assert_eq!(brute_legendre(2, 7), 1);
        assert_eq!(legendre(&2.into(), 7), Ok(1));
        assert_eq!(brute_legendre(3, 7), -1);
        assert_eq!(legendre(&3.into(), 7), Ok(-1));
        assert_eq!(legendre(&(-1).into(), 7), Ok(-1));
        assert_eq!(
            legendre(&1.into(), 2),
            Err(Error::InvalidLegendreModulus(2))
        );
        assert_eq!(
            legendre(&1.into(), 9),
            Err(Error::InvalidLegendreModulus(9))
        );
    }

    #[test]
    fn legendre_matches_enumeration() {
        for p in (3..=101).filter(|&p| is_prime(p)) {
            for a in -(p as i64)..2 * p as i64 {
                assert_eq!(
                    legendre(&a.into(), p).unwrap(),
                    brute_legendre(a, p),
                    "a={a} p={p}"
                );
            }
        }
    }

    #[test]
    fn legendre_is_multiplicative() {
        for p in (3..=31).filter(|&p| is_prime(p)) {
            for a in 0..p {
                for b in 0..p {
                    let ab = legendre(&(a * b).into(), p).unwrap();
                    let prod = legendre(&a.into(), p).unwrap() * legendre(&b.into(), p).unwrap();
                    assert_eq!(ab, prod);
                }
            }
        }
    }

    #[test]
    fn brewer_examples() {
        // D_2 = x^2 − 2 over F_3: values 1, 2, 2 → +1, −1, −1
        assert_eq!(brute_brewer(3, 1, 1), -1);
        let q = BrewerQuery::new(3, 1, 1).unwrap();
        assert_eq!(brewer_sum(&q, Strategy::Sequential), Ok(-1));

        let oracle = brute_brewer(7, 1, 3);
        assert_eq!(oracle, -1);
        let q = BrewerQuery::new(7, 1, 3).unwrap();
        assert_eq!(brewer_sum(&q, Strategy::Parallel), Ok(oracle));

        for p in (3..=97).filter(|&p| is_prime(p)) {
            for a in 0..p as i64 {
                let q = BrewerQuery::new(p, 0, a).unwrap();
                assert_eq!(brewer_sum(&q, Strategy::Sequential), Ok(0));
            }
        }
        assert!(BrewerQuery::new(2, 1, 1).is_err());
        assert!(BrewerQuery::new(15, 1, 1).is_err());
        assert_eq!(BrewerQuery::new(7, 1, -4).unwrap().a(), 3);
    }

    #[test]
    fn brewer_matches_oracle_and_is_bounded() {
        for p in [3u64, 5, 11, 13, 29] {
            for n in 0..12 {
                for a in 0..p {
                    let q = BrewerQuery::new(p, n, a as i64).unwrap();
                    let s = brewer_sum(&q, Strategy::Sequential).unwrap();
                    assert_eq!(s, brute_brewer(p, n, a));
                    assert!(s.unsigned_abs() <= p);
                    assert_eq!(s, brewer_sum(&q, Strategy::Parallel).unwrap());
                }
            }
        }
    }

    #[test]
    fn permutation_examples() {
        let f7 = PrimeField::new(7).unwrap();
        let v = is_permutation(&f7, 1, &3, Strategy::Sequential).unwrap();
        assert!(v.is_permutation && v.agreement);

        // D_3(x, 1) = x^3 − 3x over F_7 by enumeration
        let images: HashSet<u64> = (0..7u64).map(|x| (x * x * x + 7 * 7 - 3 * x) % 7).collect();
        assert!(images.len() < 7);
        let v = is_permutation(&f7, 3, &1, Strategy::Sequential).unwrap();
        assert_eq!(
            (v.is_permutation, v.gcd_value, v.agreement),
            (false, 3, true)
        );

        let v = is_permutation(&f7, 5, &1, Strategy::Parallel).unwrap();
        assert_eq!(
            (v.is_permutation, v.gcd_value, v.agreement),
            (true, 1, true)
        );

        assert_eq!(
            is_permutation(&f7, 5, &0, Strategy::Sequential),
            Err(Error::ZeroParameter)
        );
        let m = is_monomial_permutation(&f7, 5, Strategy::Sequential).unwrap();
        assert!(m.is_permutation && m.monomial && m.agreement && m.gcd_value == 1);
        let m = is_monomial_permutation(&f7, 3, Strategy::Sequential).unwrap();
        assert!(!m.is_permutation && m.agreement);
    }

    #[test]
    fn permutation_size_bound() {
        let big = ExtField::new(2, 17).unwrap();
        assert_eq!(
            is_permutation(&big, 3, &big.one(), Strategy::Sequential),
            Err(Error::EnumerationTooLarge(1 << 17))
        );
    }

    #[test]
    fn permutation_criterion_extension_fields() {
        for (p, m) in [(2, 3), (3, 2), (2, 4)] {
            let f = ExtField::new(p, m).unwrap();
            for n in 1..=30 {
                for a in f.elements().skip(1) {
                    let v = is_permutation(&f, n, &a, Strategy::Sequential).unwrap();
                    assert!(v.agreement, "q={} n={n} a={a:?}", f.order());
                }
            }
        }
    }
}
