use super::check_degree;
use crate::error::Result;
use crate::poly::{self, Polynomial};
use crate::rings::Ring;

/// Chebyshev polynomial of the first kind, `T_0 = 1`, `T_1 = x`,
/// `T_{n+1} = 2x·T_n − T_{n−1}`.
pub fn chebyshev_t<R: Ring>(ring: &R, n: u64) -> Result<Polynomial<R::Elem>> {
    check_degree(n)?;
    let mut prev = Polynomial::constant(ring, ring.one());
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = Polynomial::x(ring);
    let two = ring.from_i64(2);
    for _ in 1..n {
        let next = poly::sub(
            ring,
            &poly::scale(ring, &poly::shift(ring, &cur, 1), &two),
            &prev,
        );
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}
