use super::charpoly::int_det;
use super::snf::{smith_normal_form, unimodular_inverse};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn is_nilpotent(n: &IntMatrix) -> bool {
    n.is_square() && n.pow(n.rows()).is_zero()
}

pub fn is_strictly_upper(m: &IntMatrix) -> bool {
    m.entries().all(|(i, j, x)| j > i || x.is_zero())
}

fn not_nilpotent(n: &IntMatrix) -> Error {
    // ranks of N^k stabilise at a nonzero value for non-nilpotent N
    let mut p = n.clone();
    let mut prev = usize::MAX;
    let mut k = 1;
    loop {
        let r = smith_normal_form(&p).rank();
        if r == prev {
            return Error::NotNilpotent(format!(
                "rank of N^k stabilises at {r} from k = {}",
                k - 1
            ));
        }
        prev = r;
        p = p.mul(n);
        k += 1;
    }
}

/// Unimodular `U` with `det U = 1` such that `U⁻¹ N U` is strictly upper
/// triangular. Built by splitting off the saturated kernel lattice and
/// recursing on the induced map of the quotient.
pub fn nilpotent_triangularize(n: &IntMatrix) -> Result<IntMatrix> {
    let size = n.require_square()?;
    if !is_nilpotent(n) {
        return Err(not_nilpotent(n));
    }
    let mut u = flag_basis(n);
    if int_det(&u)? != BigInt::one() {
        for i in 0..size {
            let v = -u.get(i, size - 1);
            u.set(i, size - 1, v);
        }
    }
    let conj = unimodular_inverse(&u).expect("unimodular").mul(n).mul(&u);
    debug_assert!(is_strictly_upper(&conj));
    Ok(u)
}

fn flag_basis(n: &IntMatrix) -> IntMatrix {
    let size = n.rows();
    if size == 0 || n.is_zero() {
        return IntMatrix::eye(size);
    }
    let s = smith_normal_form(n);
    let rank = s.rank();
    let d = size - rank;
    // kernel columns first, then the rest of the unimodular right transform
    let order: Vec<usize> = (rank..size).chain(0..rank).collect();
    let all: Vec<usize> = (0..size).collect();
    let u1 = s.right.select(&all, &order);
    let conj = unimodular_inverse(&u1).expect("unimodular").mul(n).mul(&u1);
    let quotient = conj.submatrix(d, d, size - d, size - d);
    let inner = flag_basis(&quotient);
    let lift = IntMatrix::eye(d).direct_sum(&inner);
    u1.mul(&lift)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(n: &IntMatrix) -> IntMatrix {
        let u = nilpotent_triangularize(n).unwrap();
        assert_eq!(int_det(&u).unwrap(), BigInt::one());
        let c = unimodular_inverse(&u).unwrap().mul(n).mul(&u);
        assert!(is_strictly_upper(&c), "{c:?}");
        u
    }

    #[test]
    fn examples() {
        let up = IntMatrix::from_i64(&[&[0, 3], &[0, 0]]);
        assert_eq!(check(&up), IntMatrix::eye(2));
        check(&IntMatrix::from_i64(&[&[1, -1], &[1, -1]]));
        assert_eq!(check(&IntMatrix::zeros(3, 3)), IntMatrix::eye(3));
        check(&IntMatrix::from_i64(&[
            &[2, 4, 1],
            &[-2, -4, -1],
            &[4, 8, 2],
        ]));
        // conjugate of a Jordan block by a unimodular matrix
        let j = IntMatrix::from_i64(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]);
        let lower =
            IntMatrix::from_i64(&[&[1, 0, 0, 0], &[1, 1, 0, 0], &[0, 2, 1, 0], &[3, 0, 1, 1]]);
        let upper =
            IntMatrix::from_i64(&[&[1, 2, 0, 1], &[0, 1, 3, 0], &[0, 0, 1, 2], &[0, 0, 0, 1]]);
        let p = lower.mul(&upper);
        let pinv = unimodular_inverse(&p).unwrap();
        check(&p.mul(&j).mul(&pinv));
    }

    #[test]
    fn rejects_non_nilpotent() {
        let err = nilpotent_triangularize(&IntMatrix::from_i64(&[&[1, 0], &[0, 0]])).unwrap_err();
        assert!(matches!(err, Error::NotNilpotent(_)), "{err}");
    }
}
