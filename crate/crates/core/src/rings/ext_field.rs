use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use super::{Field, FiniteField, PrimeField, Ring, Sample, Style, MAX_FIELD_ORDER};
use crate::error::{Error, Result};
use crate::poly::{self, Polynomial};

/// Checked `p^m`, rejecting anything above the desk-scale bound.
fn field_order(p: u64, m: u32) -> Result<u64> {
    p.checked_pow(m)
        .filter(|&q| q <= MAX_FIELD_ORDER)
        .ok_or(Error::FieldTooLarge { p, m })
}

/// Remainder of `a` modulo the monic polynomial `g` over 𝔽_p (ascending
/// coefficients).
fn rem_monic(p: u64, a: &[u64], g: &[u64]) -> Vec<u64> {
    let dg = g.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dg {
        let lead = r.pop().expect("nonempty");
        if lead != 0 {
            let shift = r.len() - dg;
            for (i, gi) in g[..dg].iter().enumerate() {
                let t = lead * gi % p;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
    }
    r
}

/// Coefficients `(c_0, …, c_{len-1})` of `index` written in base `p`.
fn digits(mut index: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(index % p);
        index /= p;
    }
    out
}

/// Exhaustive irreducibility check for a monic polynomial over 𝔽_p:
/// no monic polynomial of degree `1..=deg/2` divides it.
pub fn is_irreducible(p: u64, f: &[u64]) -> bool {
    let Some(&lead) = f.last() else {
        return false;
    };
    let deg = f.len() - 1;
    if deg == 0 || lead != 1 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for index in 0..count {
            let mut g = digits(index, p, d);
            g.push(1);
            if rem_monic(p, f, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree `m` over 𝔽_p, ordering candidates
/// by the integer `c_0 + c_1 p + … + c_{m-1} p^{m-1}` of their non-leading
/// coefficients. Returned in ascending order, leading 1 included.
pub fn find_irreducible(p: u64, m: u32) -> Result<Vec<u64>> {
    if !super::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::Invalid("extension degree must be at least 1".into()));
    }
    let q = field_order(p, m)?;
    for index in 0..q {
        let mut f = digits(index, p, m as usize);
        f.push(1);
        if is_irreducible(p, &f) {
            return Ok(f);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// 𝔽_{p^m} as 𝔽_p[g]/(f) for the irreducible `f` chosen by
/// [`find_irreducible`]. Elements are coefficient vectors of length `m` in
/// the generator `g`, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtField {
    base: PrimeField,
    m: usize,
    modulus: Vec<u64>,
    order: u64,
}

impl ExtField {
    pub fn new(p: u64, m: u32) -> Result<Self> {
        let modulus = find_irreducible(p, m)?;
        Self::with_modulus(p, modulus)
    }

    /// Build the field from an explicit monic modulus, certifying
    /// irreducibility.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        let base = PrimeField::new(p)?;
        let m = modulus.len().saturating_sub(1);
        let order = field_order(p, m as u32)?;
        if !is_irreducible(p, &modulus) {
            return Err(Error::Invalid(format!(
                "modulus {modulus:?} is not monic irreducible over F_{p}"
            )));
        }
        Ok(Self {
            base,
            m,
            modulus,
            order,
        })
    }

    /// Build `𝔽_q` for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, m)
    }

    pub fn prime(&self) -> u64 {
        self.base.modulus()
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn modulus_poly(&self) -> Polynomial<u64> {
        Polynomial::from_coeffs(&self.base, self.modulus.clone())
    }

    fn embed(&self, c: u64) -> Vec<u64> {
        let mut v = vec![0; self.m];
        v[0] = c;
        v
    }

    fn parse_generator_poly(&self, s: &str) -> Result<Vec<u64>> {
        let bad = || Error::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut acc = vec![0u64; self.m];
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(bad());
            }
            let (coeff, power) = match term.find('g') {
                None => (term, 0u64),
                Some(pos) => {
                    let coeff = term[..pos].trim_end_matches('*');
                    let exp = &term[pos + 1..];
                    let power = if exp.is_empty() {
                        1
                    } else {
                        exp.strip_prefix('^')
                            .and_then(|e| e.parse().ok())
                            .ok_or_else(bad)?
                    };
                    (if coeff.is_empty() { "1" } else { coeff }, power)
                }
            };
            let c: BigInt = coeff.parse().map_err(|_| bad())?;
            let mut c = self.base.from_bigint(&c);
            if negative {
                c = self.base.neg(&c);
            }
            let g = vec![0, 1];
            let g = if self.m == 1 {
                rem_monic(self.prime(), &g, &self.modulus)
            } else {
                let mut v = g;
                v.resize(self.m, 0);
                v
            };
            let term = self.mul(&self.pow(&g, power), &self.embed(c));
            acc = self.add(&acc, &term);
        }
        Ok(acc)
    }
}

/// Decompose `q = p^m` with `p` prime.
pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

impl Ring for ExtField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.m]
    }

    fn one(&self) -> Vec<u64> {
        self.embed(1)
    }

    fn from_bigint(&self, n: &BigInt) -> Vec<u64> {
        self.embed(self.base.from_bigint(n))
    }

    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }

    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let p = self.prime();
        let mut prod = vec![0u64; 2 * self.m - 1];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let mut r = rem_monic(p, &prod, &self.modulus);
        r.resize(self.m, 0);
        r
    }

    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }

    fn try_inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        Some(self.pow(a, self.order - 2))
    }

    fn characteristic(&self) -> u64 {
        self.prime()
    }

    fn try_from_rational(&self, q: &BigRational) -> Result<Vec<u64>> {
        self.base.try_from_rational(q).map(|c| self.embed(c))
    }

    /// Accepts integers, `num/den`, ascending coefficient lists `[1,0,1]`
    /// and polynomials in the generator such as `g^2 + 2*g + 1`.
    fn parse_elem(&self, s: &str) -> Result<Vec<u64>> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let coeffs: Vec<BigInt> = inner
                .split(',')
                .filter(|c| !c.trim().is_empty())
                .map(|c| c.trim().parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(s.to_string()))?;
            if coeffs.len() > self.m {
                return Err(Error::Parse(s.to_string()));
            }
            let mut v: Vec<u64> = coeffs.iter().map(|c| self.base.from_bigint(c)).collect();
            v.resize(self.m, 0);
            return Ok(v);
        }
        if t.contains('g') {
            return self.parse_generator_poly(t);
        }
        self.try_from_rational(&super::parse_rational(t)?)
    }

    fn render(&self, a: &Vec<u64>, style: Style) -> String {
        let p = Polynomial::from_coeffs(&self.base, a.clone());
        poly::render(&self.base, &p, "g", style)
    }

    fn describe(&self) -> String {
        let f = poly::render(&self.base, &self.modulus_poly(), "g", Style::Human);
        format!("fq({}^{}; {})", self.prime(), self.m, f)
    }
}

impl Field for ExtField {}

impl FiniteField for ExtField {
    fn order(&self) -> u64 {
        self.order
    }

    fn element(&self, index: u64) -> Vec<u64> {
        digits(index % self.order, self.prime(), self.m)
    }

    fn index_of(&self, a: &Vec<u64>) -> u64 {
        a.iter().rev().fold(0, |acc, c| acc * self.prime() + c)
    }
}

impl Sample for ExtField {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> Vec<u64> {
        self.element(rng.random_range(0..self.order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: a monic quadratic or cubic is irreducible iff it
    /// has no root.
    fn has_root(p: u64, f: &[u64]) -> bool {
        (0..p).any(|x| f.iter().rev().fold(0, |acc, c| (acc * x + c) % p) == 0)
    }

    #[test]
    fn smallest_irreducibles() {
        // all monic quadratics over F_2 in order; first rootless one
        let expected = (0..4)
            .map(|i| vec![i % 2, i / 2, 1])
            .find(|f| !has_root(2, f))
            .unwrap();
        assert_eq!(expected, vec![1, 1, 1]);
        assert_eq!(find_irreducible(2, 2).unwrap(), expected);

        let expected = (0..8)
            .map(|i| vec![i % 2, (i / 2) % 2, i / 4, 1])
            .find(|f| !has_root(2, f))
            .unwrap();
        assert_eq!(expected, vec![1, 1, 0, 1]);
        assert_eq!(find_irreducible(2, 3).unwrap(), expected);

        for p in [2, 3, 7, 101] {
            assert_eq!(find_irreducible(p, 1).unwrap(), vec![0, 1]);
        }
    }

    #[test]
    fn irreducible_bound() {
        assert!(matches!(
            find_irreducible(2, 21),
            Err(Error::FieldTooLarge { .. })
        ));
        assert_eq!(find_irreducible(4, 2), Err(Error::NotPrime(4)));
    }

    #[test]
    fn rejects_reducible_modulus() {
        // x^2 + 1 = (x + 1)^2 over F_2
        assert!(ExtField::with_modulus(2, vec![1, 0, 1]).is_err());
    }

    #[test]
    fn fermat_exhaustive() {
        for (p, m) in [(2, 4), (3, 3), (5, 2), (2, 1), (3, 5), (7, 2)] {
            let f = ExtField::new(p, m).unwrap();
            let q = f.order();
            for a in f.elements().skip(1) {
                assert_eq!(f.pow(&a, q - 1), f.one(), "p={p} m={m} a={a:?}");
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            }
        }
    }

    #[test]
    fn parse_forms() {
        let f = ExtField::new(3, 3).unwrap();
        assert_eq!(f.parse_elem("[1,2]").unwrap(), vec![1, 2, 0]);
        assert_eq!(f.parse_elem("g^2 + 2*g + 1").unwrap(), vec![1, 2, 1]);
        assert_eq!(f.parse_elem("-g").unwrap(), vec![0, 2, 0]);
        assert_eq!(f.parse_elem("1/2").unwrap(), vec![2, 0, 0]);
        // g^3 reduces through the modulus
        let g3 = f.parse_elem("g^3").unwrap();
        let g = f.parse_elem("g").unwrap();
        assert_eq!(g3, f.pow(&g, 3));
        assert!(f.parse_elem("[1,2,3,4]").is_err());
        assert_eq!(f.render(&vec![1, 2, 1], Style::Human), "g^2 + 2*g + 1");
        assert_eq!(f.render(&vec![1, 2, 1], Style::Latex), "g^{2}+2g+1");
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(13), Some((13, 1)));
    }
}
