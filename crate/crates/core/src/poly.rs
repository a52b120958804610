//! Dense univariate polynomials and truncated power series.
//!
//! Coefficients are stored in ascending degree with no trailing zeros; the
//! zero polynomial is the empty vector. Operations take the coefficient
//! ring explicitly.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rings::{Ring, Style};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<E> {
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq> Polynomial<E> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs<R: Ring<Elem = E>>(ring: &R, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant<R: Ring<Elem = E>>(ring: &R, c: E) -> Self {
        Self::from_coeffs(ring, vec![c])
    }

    /// `c·x^deg`
    pub fn monomial<R: Ring<Elem = E>>(ring: &R, c: E, deg: usize) -> Self {
        let mut coeffs = vec![ring.zero(); deg];
        coeffs.push(c);
        Self::from_coeffs(ring, coeffs)
    }

    /// The indeterminate `x`.
    pub fn x<R: Ring<Elem = E>>(ring: &R) -> Self {
        Self::monomial(ring, ring.one(), 1)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff<R: Ring<Elem = E>>(&self, ring: &R, i: usize) -> E {
        self.coeffs.get(i).cloned().unwrap_or_else(|| ring.zero())
    }
}

pub fn add<R: Ring>(
    ring: &R,
    p: &Polynomial<R::Elem>,
    q: &Polynomial<R::Elem>,
) -> Polynomial<R::Elem> {
    let n = p.coeffs.len().max(q.coeffs.len());
    let coeffs = (0..n)
        .map(|i| match (p.coeffs.get(i), q.coeffs.get(i)) {
            (Some(a), Some(b)) => ring.add(a, b),
            (Some(a), None) | (None, Some(a)) => a.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    Polynomial::from_coeffs(ring, coeffs)
}

pub fn neg<R: Ring>(ring: &R, p: &Polynomial<R::Elem>) -> Polynomial<R::Elem> {
    Polynomial {
        coeffs: p.coeffs.iter().map(|c| ring.neg(c)).collect(),
    }
}

pub fn sub<R: Ring>(
    ring: &R,
    p: &Polynomial<R::Elem>,
    q: &Polynomial<R::Elem>,
) -> Polynomial<R::Elem> {
    let n = p.coeffs.len().max(q.coeffs.len());
    let coeffs = (0..n)
        .map(|i| match (p.coeffs.get(i), q.coeffs.get(i)) {
            (Some(a), Some(b)) => ring.sub(a, b),
            (Some(a), None) => a.clone(),
            (None, Some(b)) => ring.neg(b),
            (None, None) => unreachable!(),
        })
        .collect();
    Polynomial::from_coeffs(ring, coeffs)
}

pub fn scale<R: Ring>(ring: &R, p: &Polynomial<R::Elem>, c: &R::Elem) -> Polynomial<R::Elem> {
    let coeffs = p
        .coeffs
        .iter()
        .map(|a| {
            if ring.is_zero(a) {
                a.clone()
            } else {
                ring.mul(a, c)
            }
        })
        .collect();
    Polynomial::from_coeffs(ring, coeffs)
}

/// `x^k · p`
pub fn shift<R: Ring>(ring: &R, p: &Polynomial<R::Elem>, k: usize) -> Polynomial<R::Elem> {
    if p.is_zero() {
        return Polynomial::zero();
    }
    let mut coeffs = vec![ring.zero(); k];
    coeffs.extend(p.coeffs.iter().cloned());
    Polynomial { coeffs }
}

pub fn mul<R: Ring>(
    ring: &R,
    p: &Polynomial<R::Elem>,
    q: &Polynomial<R::Elem>,
) -> Polynomial<R::Elem> {
    if p.is_zero() || q.is_zero() {
        return Polynomial::zero();
    }
    let mut coeffs = vec![ring.zero(); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        if ring.is_zero(a) {
            continue;
        }
        for (j, b) in q.coeffs.iter().enumerate() {
            coeffs[i + j] = ring.add(&coeffs[i + j], &ring.mul(a, b));
        }
    }
    Polynomial::from_coeffs(ring, coeffs)
}

/// `p(x)`, by Horner's scheme or the ring's own evaluator.
pub fn eval<R: Ring>(ring: &R, p: &Polynomial<R::Elem>, x: &R::Elem) -> R::Elem {
    ring.eval_poly(&p.coeffs, x)
}

/// `p ∘ q`, by Horner's scheme over polynomials.
pub fn compose<R: Ring>(
    ring: &R,
    p: &Polynomial<R::Elem>,
    q: &Polynomial<R::Elem>,
) -> Polynomial<R::Elem> {
    p.coeffs.iter().rev().fold(Polynomial::zero(), |acc, c| {
        add(
            ring,
            &mul(ring, &acc, q),
            &Polynomial::constant(ring, c.clone()),
        )
    })
}

pub fn derivative<R: Ring>(ring: &R, p: &Polynomial<R::Elem>) -> Polynomial<R::Elem> {
    let coeffs = p
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| ring.mul(&ring.from_bigint(&BigInt::from(i)), c))
        .collect();
    Polynomial::from_coeffs(ring, coeffs)
}

/// The first `order` coefficients of a formal power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<E> {
    coeffs: Vec<E>,
}

impl<E> TruncatedSeries<E> {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }
}

/// Expand `num/den` to `order` terms using the recurrence
/// `den_0·c_n = num_n − Σ_{j≥1} den_j·c_{n−j}`.
pub fn series_from_rational<R: Ring>(
    ring: &R,
    num: &Polynomial<R::Elem>,
    den: &Polynomial<R::Elem>,
    order: usize,
) -> Result<TruncatedSeries<R::Elem>> {
    if order == 0 {
        return Err(Error::Invalid("series order must be at least 1".into()));
    }
    let d0 = den.coeffs.first().ok_or(Error::ZeroConstantTerm)?;
    if ring.is_zero(d0) {
        return Err(Error::ZeroConstantTerm);
    }
    let d0_inv = ring
        .try_inv(d0)
        .ok_or_else(|| Error::NotInvertible(ring.render(d0, Style::Human)))?;
    let mut out: Vec<R::Elem> = Vec::with_capacity(order);
    for n in 0..order {
        let mut acc = num.coeff(ring, n);
        for (j, dj) in den.coeffs.iter().enumerate().skip(1).take(n) {
            acc = ring.sub(&acc, &ring.mul(dj, &out[n - j]));
        }
        out.push(ring.mul(&acc, &d0_inv));
    }
    Ok(TruncatedSeries { coeffs: out })
}

/// Truncated product of two coefficient sequences, used to check
/// `den · series = num (mod z^L)`.
pub fn mul_truncated<R: Ring>(
    ring: &R,
    p: &[R::Elem],
    q: &[R::Elem],
    order: usize,
) -> Vec<R::Elem> {
    (0..order)
        .map(|n| {
            (0..=n)
                .filter_map(|i| Some(ring.mul(p.get(i)?, q.get(n - i)?)))
                .fold(ring.zero(), |acc, t| ring.add(&acc, &t))
        })
        .collect()
}

fn is_atomic(s: &str) -> bool {
    !s.contains(['+', '-', ' '])
}

/// Render in descending degree, e.g. `x^5 - 5*x^3 + 5*x` or, in LaTeX
/// style, `x^{5}-5ax^{3}+5a^{2}x`.
pub fn render<R: Ring>(ring: &R, p: &Polynomial<R::Elem>, var: &str, style: Style) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (deg, c) in p.coeffs.iter().enumerate().rev() {
        if ring.is_zero(c) {
            continue;
        }
        let mut body = ring.render(c, style);
        let negative = body.starts_with('-') && is_atomic(&body[1..]);
        if negative {
            body.remove(0);
        }
        let compound = !is_atomic(&body);
        let term = if deg == 0 {
            if compound && !out.is_empty() {
                format!("({body})")
            } else {
                body
            }
        } else {
            let power = match (deg, style) {
                (1, _) => var.to_string(),
                (_, Style::Human) => format!("{var}^{deg}"),
                (_, Style::Latex) => format!("{var}^{{{deg}}}"),
            };
            match (body.as_str(), compound, style) {
                ("1", _, _) => power,
                (_, true, Style::Human) => format!("({body})*{power}"),
                (_, true, Style::Latex) => format!("({body}){power}"),
                (_, false, Style::Human) => format!("{body}*{power}"),
                (_, false, Style::Latex) => format!("{body}{power}"),
            }
        };
        let sign = match (out.is_empty(), negative, style) {
            (true, true, _) => "-",
            (true, false, _) => "",
            (false, true, Style::Human) => " - ",
            (false, false, Style::Human) => " + ",
            (false, true, Style::Latex) => "-",
            (false, false, Style::Latex) => "+",
        };
        out.push_str(sign);
        out.push_str(&term);
    }
    out
}
