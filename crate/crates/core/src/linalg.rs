//! Exact 2×2 and 3×3 matrices and the Cayley–Hamilton trace-power engine.
//!
//! For a 2×2 matrix `M` with trace `t` and determinant `d`, Cayley–Hamilton
//! gives `M² = tM − dI`, hence `Tr M^{n+2} = t·Tr M^{n+1} − d·Tr M^n`, whose
//! closed form is
//!
//! ```text
//! Tr M^n = Σ_{k=0}^{⌊n/2⌋} (−1)^k · n/(n−k) · C(n−k, k) · t^{n−2k} · d^k.
//! ```
//!
//! The 3×3 analogue is Newton's recurrence on power sums of the spectrum.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rings::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SmallMatrix<E> {
    dim: usize,
    entries: Vec<E>,
}

impl<E: Clone> SmallMatrix<E> {
    /// Row-major entries; `dim` must be 2 or 3.
    pub fn new(dim: usize, entries: Vec<E>) -> Result<Self> {
        if !(2..=3).contains(&dim) || entries.len() != dim * dim {
            return Err(Error::BadShape {
                dim,
                len: entries.len(),
            });
        }
        Ok(Self { dim, entries })
    }

    pub fn from_rows<const N: usize>(rows: [[E; N]; N]) -> Result<Self> {
        Self::new(N, rows.into_iter().flatten().collect())
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R, dim: usize) -> Result<Self> {
        let entries = (0..dim * dim)
            .map(|i| {
                if i % (dim + 1) == 0 {
                    ring.one()
                } else {
                    ring.zero()
                }
            })
            .collect();
        Self::new(dim, entries)
    }

    /// `diag(values)`
    pub fn diagonal<R: Ring<Elem = E>>(ring: &R, values: &[E]) -> Result<Self> {
        let dim = values.len();
        let entries = (0..dim * dim)
            .map(|i| {
                if i % (dim + 1) == 0 {
                    values[i / dim].clone()
                } else {
                    ring.zero()
                }
            })
            .collect();
        Self::new(dim, entries)
    }

    /// Companion matrix `[[x, −a], [1, 0]]` of `λ² − xλ + a`.
    pub fn companion<R: Ring<Elem = E>>(ring: &R, x: &E, a: &E) -> Self {
        Self {
            dim: 2,
            entries: vec![x.clone(), ring.neg(a), ring.one(), ring.zero()],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &E {
        &self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn trace<R: Ring<Elem = E>>(&self, ring: &R) -> E {
        (0..self.dim).fold(ring.zero(), |acc, i| ring.add(&acc, self.get(i, i)))
    }
}

pub fn mat_mul<R: Ring>(
    ring: &R,
    a: &SmallMatrix<R::Elem>,
    b: &SmallMatrix<R::Elem>,
) -> Result<SmallMatrix<R::Elem>> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(a.dim, b.dim));
    }
    let n = a.dim;
    let entries = (0..n * n)
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            (0..n).fold(ring.zero(), |acc, k| {
                ring.add(&acc, &ring.mul(a.get(i, k), b.get(k, j)))
            })
        })
        .collect();
    Ok(SmallMatrix { dim: n, entries })
}

/// `M^n` by binary exponentiation; `M^0 = I`.
pub fn mat_pow<R: Ring>(ring: &R, m: &SmallMatrix<R::Elem>, mut n: u64) -> SmallMatrix<R::Elem> {
    let same = "operands share a dimension";
    let mut acc = SmallMatrix::identity(ring, m.dim).expect(same);
    let mut base = m.clone();
    while n > 0 {
        if n & 1 == 1 {
            acc = mat_mul(ring, &acc, &base).expect(same);
        }
        n >>= 1;
        if n > 0 {
            base = mat_mul(ring, &base, &base).expect(same);
        }
    }
    acc
}

/// Trace and determinant of a 2×2 matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharData2<E> {
    pub t: E,
    pub d: E,
}

/// Elementary symmetric values of the spectrum of a 3×3 matrix: the trace,
/// the sum of principal 2×2 minors and the determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharData3<E> {
    pub e1: E,
    pub e2: E,
    pub e3: E,
}

impl<E: Clone> CharData3<E> {
    /// Symmetric values of an explicit spectrum `(x, y, z)`.
    pub fn from_roots<R: Ring<Elem = E>>(ring: &R, x: &E, y: &E, z: &E) -> Self {
        let xy = ring.mul(x, y);
        Self {
            e1: ring.add(&ring.add(x, y), z),
            e2: ring.add(&ring.add(&xy, &ring.mul(y, z)), &ring.mul(z, x)),
            e3: ring.mul(&xy, z),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharData<E> {
    Two(CharData2<E>),
    Three(CharData3<E>),
}

pub fn char_data<R: Ring>(ring: &R, m: &SmallMatrix<R::Elem>) -> CharData<R::Elem> {
    let minor = |i: usize, j: usize| {
        ring.sub(
            &ring.mul(m.get(i, i), m.get(j, j)),
            &ring.mul(m.get(i, j), m.get(j, i)),
        )
    };
    match m.dim {
        2 => CharData::Two(CharData2 {
            t: m.trace(ring),
            d: minor(0, 1),
        }),
        _ => {
            let e2 = ring.add(&ring.add(&minor(0, 1), &minor(0, 2)), &minor(1, 2));
            let cof = |j: usize| {
                let (c0, c1) = match j {
                    0 => (1, 2),
                    1 => (0, 2),
                    _ => (0, 1),
                };
                ring.sub(
                    &ring.mul(m.get(1, c0), m.get(2, c1)),
                    &ring.mul(m.get(1, c1), m.get(2, c0)),
                )
            };
            let e3 = ring.add(
                &ring.sub(
                    &ring.mul(m.get(0, 0), &cof(0)),
                    &ring.mul(m.get(0, 1), &cof(1)),
                ),
                &ring.mul(m.get(0, 2), &cof(2)),
            );
            CharData::Three(CharData3 {
                e1: m.trace(ring),
                e2,
                e3,
            })
        }
    }
}

/// Binomial coefficient `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Pairs `(C(n−k, k), C(n−k−1, k−1))` for `k = 0..=⌊n/2⌋` (`n ≥ 1`).
pub fn diagonal_binomials(n: u64) -> Vec<(BigInt, BigInt)> {
    if n == 0 {
        return Vec::new();
    }
    // walk down the diagonal: C(N−1, K+1) = C(N, K)·(N−K)(N−K−1) / ((K+1)·N)
    let step = |c: &BigInt, big: u64, small: u64| -> BigInt {
        if big == 0 {
            return BigInt::zero();
        }
        let num = big.saturating_sub(small) * big.saturating_sub(small + 1);
        c * num / ((small + 1) * big)
    };
    let mut out = Vec::with_capacity(n as usize / 2 + 1);
    let mut upper = BigInt::one(); // C(n, 0)
    let mut lower = BigInt::zero(); // C(n−1, −1)
    for k in 0..=n / 2 {
        let next_lower = if k == 0 {
            BigInt::one() // C(n−2, 0)
        } else {
            step(&lower, n - k - 1, k - 1)
        };
        let next_upper = step(&upper, n - k, k);
        out.push((upper, lower));
        upper = next_upper;
        lower = next_lower;
    }
    out
}

/// Integer coefficients `n/(n−k)·C(n−k, k)` for `k = 0..=⌊n/2⌋`, assembled
/// as `C(n−k, k) + C(n−k−1, k−1)` so no rational ever appears. Empty for
/// `n = 0`.
pub fn trace_power_coefficients(n: u64) -> Vec<BigInt> {
    diagonal_binomials(n)
        .into_iter()
        .map(|(upper, lower)| upper + lower)
        .collect()
}

/// `Tr M^n` from `t = Tr M` and `d = det M` via the closed trace-power
/// formula. `n = 0` gives `Tr I = 2`.
pub fn trace_power_formula<R: Ring>(ring: &R, t: &R::Elem, d: &R::Elem, n: u64) -> R::Elem {
    if n == 0 {
        return ring.from_i64(2);
    }
    let coeffs = trace_power_coefficients(n);
    let half = n / 2;
    // t^{n−2k} for k = ⌊n/2⌋ down to 0, so build powers of t² upward
    let t2 = ring.mul(t, t);
    let mut t_pow = if n % 2 == 1 { t.clone() } else { ring.one() };
    let neg_d = ring.neg(d);
    let mut terms = Vec::with_capacity(coeffs.len());
    for k in (0..=half).rev() {
        let c = ring.from_bigint(&coeffs[k as usize]);
        terms.push(ring.mul(&ring.mul(&c, &t_pow), &ring.pow(&neg_d, k)));
        t_pow = ring.mul(&t_pow, &t2);
    }
    crate::rings::sum(ring, terms)
}

/// Power sums `p_0..=p_len` of a 3×3 spectrum from its symmetric values by
/// `p_n = e1·p_{n−1} − e2·p_{n−2} + e3·p_{n−3}`, seeded with `p_0 = 3`,
/// `p_1 = e1`, `p_2 = e1² − 2e2`.
pub fn trace_sequence_3x3<R: Ring>(ring: &R, e: &CharData3<R::Elem>, len: usize) -> Vec<R::Elem> {
    let mut p = Vec::with_capacity(len + 1);
    p.push(ring.from_i64(3));
    if len >= 1 {
        p.push(e.e1.clone());
    }
    if len >= 2 {
        let sq = ring.mul(&e.e1, &e.e1);
        p.push(ring.sub(&sq, &ring.add(&e.e2, &e.e2)));
    }
    for n in 3..=len {
        let v = ring.add(
            &ring.sub(&ring.mul(&e.e1, &p[n - 1]), &ring.mul(&e.e2, &p[n - 2])),
            &ring.mul(&e.e3, &p[n - 3]),
        );
        p.push(v);
    }
    p
}
