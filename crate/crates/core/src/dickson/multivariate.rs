//! First coordinate of the multivariate Dickson polynomials.
//!
//! With `u_1, …, u_{t+1}` and `x_i = s_i(u)` (elementary symmetric,
//! `1 ≤ i ≤ t`), `a = u_1⋯u_{t+1}`, the `i`-th coordinate is
//! `D_n^{(i)} = s_i(u_1^n, …, u_{t+1}^n)`. Only `D^{(1)}` has a recurrence.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rings::Ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricData<E> {
    x: Vec<E>,
    a: E,
}

impl<E: Clone> SymmetricData<E> {
    /// `x = (x_1, …, x_t)` with `t ≥ 1`.
    pub fn new(x: Vec<E>, a: E) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::Invalid("need at least one symmetric value".into()));
        }
        Ok(Self { x, a })
    }

    /// Symmetric data of explicit `u_1, …, u_{t+1}` (at least two).
    pub fn from_roots<R: Ring<Elem = E>>(ring: &R, u: &[E]) -> Result<Self> {
        if u.len() < 2 {
            return Err(Error::Invalid("need at least two roots".into()));
        }
        let mut e = elementary_symmetric(ring, u);
        let a = e.pop().expect("t+2 values");
        e.remove(0);
        Self::new(e, a)
    }

    pub fn t(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[E] {
        &self.x
    }

    pub fn a(&self) -> &E {
        &self.a
    }
}

/// `e_0, …, e_m` of `u_1, …, u_m`.
pub fn elementary_symmetric<R: Ring>(ring: &R, u: &[R::Elem]) -> Vec<R::Elem> {
    let mut e = vec![ring.zero(); u.len() + 1];
    e[0] = ring.one();
    for (m, ui) in u.iter().enumerate() {
        for j in (1..=m + 1).rev() {
            e[j] = ring.add(&e[j], &ring.mul(&e[j - 1], ui));
        }
    }
    e
}

fn signed<R: Ring>(ring: &R, v: &R::Elem, negative: bool) -> R::Elem {
    if negative {
        ring.neg(v)
    } else {
        v.clone()
    }
}

/// `D_0^{(1)}, …, D_{n_max}^{(1)}`. Seeds: `D_0 = t+1` and, for
/// `0 < j ≤ t`, `D_j = Σ_{r=1}^{j} (−1)^{r−1} x_r D_{j−r} + (−1)^j (t+1−j) x_j`.
/// Then `D_m = Σ_{r=1}^{t} (−1)^{r−1} x_r D_{m−r} + (−1)^t a D_{m−t−1}`.
pub fn multivariate_dickson_sequence<R: Ring>(
    ring: &R,
    n_max: usize,
    data: &SymmetricData<R::Elem>,
) -> Vec<R::Elem> {
    let t = data.t();
    let mut d: Vec<R::Elem> = Vec::with_capacity(n_max + 1);
    d.push(ring.from_bigint(&BigInt::from(t + 1)));
    for j in 1..=n_max.min(t) {
        let mut acc = ring.zero();
        for r in 1..=j {
            let term = ring.mul(&data.x[r - 1], &d[j - r]);
            acc = ring.add(&acc, &signed(ring, &term, r % 2 == 0));
        }
        let tail = ring.mul(&ring.from_bigint(&BigInt::from(t + 1 - j)), &data.x[j - 1]);
        acc = ring.add(&acc, &signed(ring, &tail, j % 2 == 1));
        d.push(acc);
    }
    for m in t + 1..=n_max {
        let mut acc = ring.zero();
        for r in 1..=t {
            let term = ring.mul(&data.x[r - 1], &d[m - r]);
            acc = ring.add(&acc, &signed(ring, &term, r % 2 == 0));
        }
        let last = ring.mul(&data.a, &d[m - t - 1]);
        acc = ring.add(&acc, &signed(ring, &last, t % 2 == 1));
        d.push(acc);
    }
    d
}

/// `D_n^{(1)}(x_1, …, x_t, a)` by the linear recurrence.
pub fn multivariate_dickson<R: Ring>(ring: &R, n: usize, data: &SymmetricData<R::Elem>) -> R::Elem {
    multivariate_dickson_sequence(ring, n, data)
        .pop()
        .expect("sequence holds D_0..=D_n")
}

/// The defining construction `s_i(u_1^n, …, u_{t+1}^n)`, `1 ≤ i ≤ t`.
pub fn multivariate_oracle<R: Ring>(ring: &R, n: u64, u: &[R::Elem], i: usize) -> Result<R::Elem> {
    if u.len() < 2 {
        return Err(Error::Invalid("need at least two roots".into()));
    }
    if i == 0 || i >= u.len() {
        return Err(Error::Invalid(format!(
            "coordinate {i} outside 1..={}",
            u.len() - 1
        )));
    }
    let powers: Vec<_> = u.iter().map(|ui| ring.pow(ui, n)).collect();
    Ok(elementary_symmetric(ring, &powers).swap_remove(i))
}

/// Numerator `Σ_{i=0}^{t} (t+1−i)(−1)^i x_i z^i` and denominator
/// `Σ_{i=0}^{t+1} (−1)^i x_i z^i` (with `x_0 = 1`, `x_{t+1} = a`) of
/// `Σ D_n^{(1)} z^n`.
pub fn multivariate_generating_function<R: Ring>(
    ring: &R,
    data: &SymmetricData<R::Elem>,
) -> (Polynomial<R::Elem>, Polynomial<R::Elem>) {
    let t = data.t();
    let xs: Vec<R::Elem> = std::iter::once(ring.one())
        .chain(data.x.iter().cloned())
        .chain(std::iter::once(data.a.clone()))
        .collect();
    let num = (0..=t)
        .map(|i| {
            let c = ring.mul(&ring.from_bigint(&BigInt::from(t + 1 - i)), &xs[i]);
            signed(ring, &c, i % 2 == 1)
        })
        .collect();
    let den = (0..=t + 1)
        .map(|i| signed(ring, &xs[i], i % 2 == 1))
        .collect();
    (
        Polynomial::from_coeffs(ring, num),
        Polynomial::from_coeffs(ring, den),
    )
}
