//! Power sums of roots from the coefficients of their polynomial.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::linalg::{binomial, CharData3};
use crate::rings::Ring;

fn factorials(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigInt::one());
    for i in 1..=n {
        let next = &out[i - 1] * i;
        out.push(next);
    }
    out
}

/// Power sum `s_kk` of the roots of `x^n + v_1 x^{n−1} + ⋯ + v_n`:
///
/// ```text
/// s_kk = kk · Σ (−1)^{Σr_i} · (Σr_i − 1)! / Π r_i! · Π v_i^{r_i}
/// ```
///
/// over all `r_1, …, r_n ≥ 0` with `Σ i·r_i = kk`. The prefactor is
/// assembled as an exact integer. `kk = 0` returns `n`.
pub fn waring_power_sum<R: Ring>(ring: &R, kk: u64, v: &[R::Elem]) -> R::Elem {
    if kk == 0 {
        return ring.from_bigint(&BigInt::from(v.len()));
    }
    let fact = factorials(kk as usize);
    let mut total = ring.zero();
    let mut r = vec![0u64; v.len()];
    enumerate(ring, kk, v, &fact, &mut r, v.len(), kk, &mut total);
    total
}

/// Fill `r[..level]` (parts `1..=level`) so that `Σ i·r_i = remaining`.
#[allow(clippy::too_many_arguments)]
fn enumerate<R: Ring>(
    ring: &R,
    kk: u64,
    v: &[R::Elem],
    fact: &[BigInt],
    r: &mut [u64],
    level: usize,
    remaining: u64,
    total: &mut R::Elem,
) {
    if remaining == 0 {
        let parts: u64 = r.iter().sum();
        let denom = r
            .iter()
            .fold(BigInt::one(), |acc, &ri| acc * &fact[ri as usize]);
        let mut coeff = BigInt::from(kk) * &fact[parts as usize - 1] / denom;
        if parts % 2 == 1 {
            coeff = -coeff;
        }
        let term = r
            .iter()
            .zip(v)
            .filter(|(ri, _)| **ri > 0)
            .fold(ring.from_bigint(&coeff), |acc, (&ri, vi)| {
                ring.mul(&acc, &ring.pow(vi, ri))
            });
        *total = ring.add(total, &term);
        return;
    }
    if level == 0 {
        return;
    }
    let part = level as u64;
    for count in 0..=remaining / part {
        r[level - 1] = count;
        enumerate(
            ring,
            kk,
            v,
            fact,
            r,
            level - 1,
            remaining - count * part,
            total,
        );
    }
    r[level - 1] = 0;
}

/// `x^n + y^n + z^n` from `e1 = x+y+z`, `e2 = xy+yz+zx`, `e3 = xyz`:
///
/// ```text
/// Σ_{i+2j+3k=n} (−1)^j · n/(i+j+k) · (i+j+k)!/(i!·j!·k!) · e1^i e2^j e3^k
/// ```
///
/// `n = 0` returns 3.
pub fn carlitz_power_sum<R: Ring>(ring: &R, n: u64, e: &CharData3<R::Elem>) -> R::Elem {
    if n == 0 {
        return ring.from_i64(3);
    }
    let fact = factorials(n as usize);
    let mut total = ring.zero();
    for k in 0..=n / 3 {
        for j in 0..=(n - 3 * k) / 2 {
            let i = n - 3 * k - 2 * j;
            let parts = (i + j + k) as usize;
            let mut coeff = BigInt::from(n) * &fact[parts - 1]
                / (&fact[i as usize] * &fact[j as usize] * &fact[k as usize]);
            if j % 2 == 1 {
                coeff = -coeff;
            }
            let term = ring.mul(
                &ring.mul(&ring.from_bigint(&coeff), &ring.pow(&e.e1, i)),
                &ring.mul(&ring.pow(&e.e2, j), &ring.pow(&e.e3, k)),
            );
            total = ring.add(&total, &term);
        }
    }
    total
}

/// The `e2 = 0` slice:
/// `x^n + y^n + z^n = Σ_{k=0}^{⌊n/3⌋} n/(n−2k)·C(n−2k, k)·e1^{n−3k}·e3^k`,
/// with the coefficient formed as `C(n−2k, k) + 2·C(n−2k−1, k−1)`.
pub fn carlitz_e2_zero<R: Ring>(ring: &R, n: u64, e1: &R::Elem, e3: &R::Elem) -> R::Elem {
    if n == 0 {
        return ring.from_i64(3);
    }
    let mut total = ring.zero();
    for k in 0..=n / 3 {
        let m = n - 2 * k;
        let lower = if k == 0 {
            BigInt::zero()
        } else {
            binomial(m - 1, k - 1)
        };
        let coeff = binomial(m, k) + BigInt::from(2) * lower;
        let term = ring.mul(
            &ring.from_bigint(&coeff),
            &ring.mul(&ring.pow(e1, n - 3 * k), &ring.pow(e3, k)),
        );
        total = ring.add(&total, &term);
    }
    total
}
