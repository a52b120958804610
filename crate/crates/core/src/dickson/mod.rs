//! Dickson polynomials and their relatives.
//!
//! The recurrence `D_{n+1} = x·D_n − a·D_{n−1}` with `D_0 = 2`, `D_1 = x`
//! is the authoritative definition. The closed form and the companion
//! matrix route (`D_n(x, a) = Tr C^n` for `C = [[x, −a], [1, 0]]`) are
//! independent evaluation paths checked against it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{self, SmallMatrix};
use crate::poly::{self, Polynomial};
use crate::rings::Ring;

mod chebyshev;
mod kind;
mod multivariate;
mod power_sums;

pub use chebyshev::chebyshev_t;
pub use kind::{
    dickson_kind_k, dickson_kind_k_closed, kind_k_coefficients, kind_k_functional_rhs,
    kind_k_generating_function, kind_k_sequence,
};
pub use multivariate::{
    elementary_symmetric, multivariate_dickson, multivariate_dickson_sequence,
    multivariate_generating_function, multivariate_oracle, SymmetricData,
};
pub use power_sums::{carlitz_e2_zero, carlitz_power_sum, waring_power_sum};

/// Largest degree for which polynomials are materialized.
pub const MAX_POLY_DEGREE: u64 = 512;
/// Largest index accepted by the matrix evaluation path.
pub const MAX_FAST_INDEX: u64 = 1 << 62;

/// Identifies one member `D_{n,k}(x, a)` of the Dickson families; `k = 0`
/// is the first kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DicksonSpec<E> {
    pub n: u64,
    pub k: u64,
    pub a: E,
}

impl<E> DicksonSpec<E> {
    pub fn new(n: u64, k: u64, a: E) -> Self {
        Self { n, k, a }
    }

    /// Over characteristic `p > 0` the kind offset must satisfy `k < p`.
    pub fn validate<R: Ring<Elem = E>>(&self, ring: &R) -> Result<()> {
        check_kind(ring, self.k)
    }
}

pub(crate) fn check_kind<R: Ring>(ring: &R, k: u64) -> Result<()> {
    let p = ring.characteristic();
    if p > 0 && k >= p {
        return Err(Error::KindOutOfRange { k, p });
    }
    Ok(())
}

pub(crate) fn check_degree(n: u64) -> Result<()> {
    if n > MAX_POLY_DEGREE {
        return Err(Error::DegreeTooLarge {
            n,
            cap: MAX_POLY_DEGREE,
        });
    }
    Ok(())
}

/// Evaluation strategy for `D_{n,k}(x, a)` at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Build the polynomial by the three-term recurrence, then Horner.
    Recurrence,
    /// Build the polynomial from the closed-form sum, then Horner.
    Closed,
    /// Power of the companion matrix, `O(log n)` ring operations.
    Matrix,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Recurrence, Method::Closed, Method::Matrix];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::Closed => "closed",
            Method::Matrix => "matrix",
        }
    }

    /// Whether the method materializes a polynomial (and so is capped at
    /// [`MAX_POLY_DEGREE`]).
    pub fn builds_polynomial(self) -> bool {
        self != Method::Matrix
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recurrence" => Ok(Method::Recurrence),
            "closed" => Ok(Method::Closed),
            "matrix" => Ok(Method::Matrix),
            other => Err(Error::Invalid(format!("unknown method '{other}'"))),
        }
    }
}

/// `D_0, …, D_{n_max}` as polynomials in `x`.
pub fn dickson_sequence<R: Ring>(
    ring: &R,
    n_max: u64,
    a: &R::Elem,
) -> Result<Vec<Polynomial<R::Elem>>> {
    kind_k_sequence(ring, n_max, 0, a)
}

/// `D_n(x, a)` by the recurrence.
pub fn dickson_first<R: Ring>(ring: &R, n: u64, a: &R::Elem) -> Result<Polynomial<R::Elem>> {
    dickson_kind_k(ring, n, 0, a)
}

/// `D_n(x, a) = Σ_{k=0}^{⌊n/2⌋} n/(n−k)·C(n−k, k)·(−a)^k·x^{n−2k}`, with
/// `D_0 = 2`.
pub fn dickson_closed<R: Ring>(ring: &R, n: u64, a: &R::Elem) -> Result<Polynomial<R::Elem>> {
    dickson_kind_k_closed(ring, n, 0, a)
}

/// `D_n(x, a)` as the trace of the `n`-th power of the companion matrix.
pub fn dickson_eval_fast<R: Ring>(ring: &R, n: u64, x: &R::Elem, a: &R::Elem) -> Result<R::Elem> {
    if n > MAX_FAST_INDEX {
        return Err(Error::DegreeTooLarge {
            n,
            cap: MAX_FAST_INDEX,
        });
    }
    let c = SmallMatrix::companion(ring, x, a);
    Ok(linalg::mat_pow(ring, &c, n).trace(ring))
}

/// `D_{n,k}(x, a)` through the companion matrix: `C^n·(x, 2−k)ᵀ` is
/// `(D_{n+1,k}, D_{n,k})ᵀ`.
pub fn dickson_kind_k_eval_fast<R: Ring>(
    ring: &R,
    n: u64,
    k: u64,
    x: &R::Elem,
    a: &R::Elem,
) -> Result<R::Elem> {
    check_kind(ring, k)?;
    if k == 0 {
        return dickson_eval_fast(ring, n, x, a);
    }
    if n > MAX_FAST_INDEX {
        return Err(Error::DegreeTooLarge {
            n,
            cap: MAX_FAST_INDEX,
        });
    }
    let c = SmallMatrix::companion(ring, x, a);
    let p = linalg::mat_pow(ring, &c, n);
    let d0 = ring.sub(&ring.from_i64(2), &ring.from_bigint(&BigInt::from(k)));
    Ok(ring.add(&ring.mul(p.get(1, 0), x), &ring.mul(p.get(1, 1), &d0)))
}

/// Numeric recurrence: the values `D_0(x, a), …, D_{n_max}(x, a)`.
pub fn dickson_values<R: Ring>(ring: &R, n_max: usize, x: &R::Elem, a: &R::Elem) -> Vec<R::Elem> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(ring.from_i64(2));
    if n_max >= 1 {
        out.push(x.clone());
    }
    for n in 2..=n_max {
        let v = ring.sub(&ring.mul(x, &out[n - 1]), &ring.mul(a, &out[n - 2]));
        out.push(v);
    }
    out
}

/// Evaluate `D_{n,k}(x, a)` by the chosen method.
pub fn dickson_eval<R: Ring>(
    ring: &R,
    spec: &DicksonSpec<R::Elem>,
    x: &R::Elem,
    method: Method,
) -> Result<R::Elem> {
    spec.validate(ring)?;
    match method {
        Method::Recurrence => Ok(poly::eval(
            ring,
            &dickson_kind_k(ring, spec.n, spec.k, &spec.a)?,
            x,
        )),
        Method::Closed => Ok(poly::eval(
            ring,
            &dickson_kind_k_closed(ring, spec.n, spec.k, &spec.a)?,
            x,
        )),
        Method::Matrix => dickson_kind_k_eval_fast(ring, spec.n, spec.k, x, &spec.a),
    }
}

/// Numerator `2 − xz` and denominator `1 − xz + az²` of `Σ D_n(x, a) z^n`.
pub fn first_kind_generating_function<R: Ring>(
    ring: &R,
    x: &R::Elem,
    a: &R::Elem,
) -> (Polynomial<R::Elem>, Polynomial<R::Elem>) {
    kind_k_generating_function(ring, 0, x, a)
}
