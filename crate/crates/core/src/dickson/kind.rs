use num_bigint::BigInt;

use super::{check_degree, check_kind};
use crate::error::{Error, Result};
use crate::linalg::diagonal_binomials;
use crate::poly::{self, Polynomial};
use crate::rings::{Field, Ring};

/// `D_{0,k}, …, D_{n_max,k}` by `D_{n,k} = x·D_{n−1,k} − a·D_{n−2,k}` from
/// `D_{0,k} = 2 − k`, `D_{1,k} = x`.
pub fn kind_k_sequence<R: Ring>(
    ring: &R,
    n_max: u64,
    k: u64,
    a: &R::Elem,
) -> Result<Vec<Polynomial<R::Elem>>> {
    check_degree(n_max)?;
    check_kind(ring, k)?;
    let d0 = ring.sub(&ring.from_i64(2), &ring.from_bigint(&BigInt::from(k)));
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(Polynomial::constant(ring, d0));
    if n_max >= 1 {
        out.push(Polynomial::x(ring));
    }
    for n in 2..=n_max as usize {
        let next = poly::sub(
            ring,
            &poly::shift(ring, &out[n - 1], 1),
            &poly::scale(ring, &out[n - 2], a),
        );
        out.push(next);
    }
    Ok(out)
}

/// `D_{n,k}(x, a)` by the recurrence.
pub fn dickson_kind_k<R: Ring>(
    ring: &R,
    n: u64,
    k: u64,
    a: &R::Elem,
) -> Result<Polynomial<R::Elem>> {
    let mut seq = kind_k_sequence(ring, n, k, a)?;
    Ok(seq.pop().expect("sequence holds D_0..=D_n"))
}

/// Integer coefficients `(n−ki)/(n−i)·C(n−i, i)` of `(−a)^i x^{n−2i}`,
/// computed as `C(n−i, i) + (1−k)·C(n−i−1, i−1)`. Empty for `n = 0`.
pub fn kind_k_coefficients(n: u64, k: u64) -> Vec<BigInt> {
    let one_minus_k = BigInt::from(1) - BigInt::from(k);
    diagonal_binomials(n)
        .into_iter()
        .map(|(upper, lower)| upper + &one_minus_k * lower)
        .collect()
}

/// `D_{n,k}(x, a) = Σ_{i=0}^{⌊n/2⌋} (n−ki)/(n−i)·C(n−i, i)·(−a)^i·x^{n−2i}`
/// term by term; `D_{0,k} = 2 − k`.
pub fn dickson_kind_k_closed<R: Ring>(
    ring: &R,
    n: u64,
    k: u64,
    a: &R::Elem,
) -> Result<Polynomial<R::Elem>> {
    check_degree(n)?;
    check_kind(ring, k)?;
    if n == 0 {
        let d0 = ring.sub(&ring.from_i64(2), &ring.from_bigint(&BigInt::from(k)));
        return Ok(Polynomial::constant(ring, d0));
    }
    let mut coeffs = vec![ring.zero(); n as usize + 1];
    let neg_a = ring.neg(a);
    let mut neg_a_pow = ring.one();
    for (i, c) in kind_k_coefficients(n, k).iter().enumerate() {
        coeffs[n as usize - 2 * i] = ring.mul(&ring.from_bigint(c), &neg_a_pow);
        neg_a_pow = ring.mul(&neg_a_pow, &neg_a);
    }
    Ok(Polynomial::from_coeffs(ring, coeffs))
}

/// Right-hand side of the kind-k functional equation at `x = y + a/y`:
///
/// ```text
/// (y^{2n} + a^n)/y^n + (k·a/y^n)·(y^{2n} − a^{n−1}·y²)/(y² − a)
/// ```
///
/// Requires `y ≠ 0`, `y² ≠ a` and `a ≠ 0`.
pub fn kind_k_functional_rhs<F: Field>(
    field: &F,
    n: u64,
    k: u64,
    y: &F::Elem,
    a: &F::Elem,
) -> Result<F::Elem> {
    if field.is_zero(y) {
        return Err(Error::Degenerate("y = 0"));
    }
    if field.is_zero(a) {
        return Err(Error::Degenerate("a = 0"));
    }
    let y2 = field.mul(y, y);
    if y2 == *a {
        return Err(Error::Degenerate("y^2 = a"));
    }
    let yn = field.pow(y, n);
    let y2n = field.mul(&yn, &yn);
    let an = field.pow(a, n);
    let a_n_minus_1 = if n == 0 {
        field.inv(a)?
    } else {
        field.pow(a, n - 1)
    };
    let first = field.div(&field.add(&y2n, &an), &yn)?;
    let k_elem = field.from_bigint(&BigInt::from(k));
    let ka_over_yn = field.div(&field.mul(&k_elem, a), &yn)?;
    let ratio = field.div(
        &field.sub(&y2n, &field.mul(&a_n_minus_1, &y2)),
        &field.sub(&y2, a),
    )?;
    Ok(field.add(&first, &field.mul(&ka_over_yn, &ratio)))
}

/// Numerator `(2−k) + (k−1)·x·z` and denominator `1 − xz + az²` of
/// `Σ D_{n,k}(x, a) z^n`.
pub fn kind_k_generating_function<R: Ring>(
    ring: &R,
    k: u64,
    x: &R::Elem,
    a: &R::Elem,
) -> (Polynomial<R::Elem>, Polynomial<R::Elem>) {
    let k = BigInt::from(k);
    let c0 = ring.from_bigint(&(BigInt::from(2) - &k));
    let c1 = ring.mul(&ring.from_bigint(&(&k - 1)), x);
    let num = Polynomial::from_coeffs(ring, vec![c0, c1]);
    let den = Polynomial::from_coeffs(ring, vec![ring.one(), ring.neg(x), a.clone()]);
    (num, den)
}
