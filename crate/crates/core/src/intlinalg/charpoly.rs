use crate::error::Result;
use crate::matrix::{IntMatrix, Matrix};
use crate::poly::IntPoly;
use crate::ring::Ring;
use num_bigint::BigInt;

/// Coefficients of `det(xI − M)` in descending powers of `x`, computed by
/// Berkowitz's division-free recursion. Valid over any commutative ring.
pub fn berkowitz<R: Ring>(m: &Matrix<R>) -> Result<Vec<R>> {
    let n = m.require_square()?;
    let zero = m.zero_elem().clone();
    let one = zero.one_like();
    let mut poly = vec![one.clone()];
    for r in 0..n {
        // col = [1, -a_rr, -R S, -R M S, ..., -R M^{r-1} S]
        let mut col = Vec::with_capacity(r + 2);
        col.push(one.clone());
        col.push(m.get(r, r).neg());
        let mut v: Vec<R> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for k in 0..r {
            let rs = (0..r).fold(zero.clone(), |acc, j| acc.add(&m.get(r, j).mul(&v[j])));
            col.push(rs.neg());
            if k + 1 < r {
                v = (0..r)
                    .map(|i| (0..r).fold(zero.clone(), |acc, j| acc.add(&m.get(i, j).mul(&v[j]))))
                    .collect();
            }
        }
        let mut next = vec![zero.clone(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for j in 0..=i.min(r) {
                if !col[i - j].is_zero() && !poly[j].is_zero() {
                    *slot = slot.add(&col[i - j].mul(&poly[j]));
                }
            }
        }
        poly = next;
    }
    Ok(poly)
}

/// Determinant over a commutative ring, `(−1)^n` times the constant term of
/// the characteristic polynomial.
pub fn det<R: Ring>(m: &Matrix<R>) -> Result<R> {
    let cp = berkowitz(m)?;
    let c = cp.last().unwrap().clone();
    Ok(if cp.len() % 2 == 0 { c.neg() } else { c })
}

/// Monic characteristic polynomial of an integer matrix, as an `IntPoly` in
/// ascending powers.
pub fn charpoly(m: &IntMatrix) -> Result<IntPoly> {
    let mut c = berkowitz(m)?;
    c.reverse();
    Ok(IntPoly::new(c))
}

/// Adjugate over a commutative ring, from cofactors.
pub fn adjugate<R: Ring>(m: &Matrix<R>) -> Result<Matrix<R>> {
    let n = m.require_square()?;
    let zero = m.zero_elem().clone();
    if n == 1 {
        return Ok(m.identity_like(1));
    }
    let mut out = m.zeros_like(n, n);
    for i in 0..n {
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let minor = det(&m.select(&rows, &cols))?;
            let v = if (i + j) % 2 == 0 { minor } else { minor.neg() };
            out.set(i, j, v);
        }
    }
    let _ = zero;
    Ok(out)
}

/// Evaluates an integer polynomial at a square integer matrix (Horner).
pub fn eval_at_matrix(p: &IntPoly, m: &IntMatrix) -> IntMatrix {
    let n = m.rows();
    let mut acc = IntMatrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(m).add(&IntMatrix::eye(n).scale_left(c));
    }
    acc
}

pub fn int_det(m: &IntMatrix) -> Result<BigInt> {
    det(m)
}
