//! Functors between the matrix rings: augmentation, the regular-representation
//! lift, evaluation at `t = 0, 1`, and transpose/opposite.

use crate::groupring::GRElem;
use crate::matrix::{IntMatrix, IntPolyMatrix, MatGR, MatGRPoly, Matrix};
use crate::poly::{GRPoly, IntPoly};
use crate::ring::Ring;
use num_bigint::BigInt;
use num_traits::Zero;

pub fn bar(a: &MatGR) -> IntMatrix {
    a.map(BigInt::zero(), GRElem::augment)
}

pub fn bar_poly(a: &MatGRPoly) -> IntPolyMatrix {
    a.map(IntPoly::zero(), GRPoly::augment)
}

/// Left regular representation: `ρ(x)` has `(i,j)` entry equal to the
/// coefficient of `g_i g_j⁻¹` in `x`, so `ρ(x) p(g_j) = p(x g_j)`.
pub fn rho(x: &GRElem) -> IntMatrix {
    let g = x.group();
    let m = g.order();
    Matrix::from_fn(m, m, BigInt::zero(), |i, j| {
        x.coeff(g.mul(i, g.inv(j))).clone()
    })
}

/// Block matrix whose `(i,j)` block is `ρ(a_ij)`.
pub fn tilde(a: &MatGR) -> IntMatrix {
    let m = a.group().order();
    let mut out = IntMatrix::zeros(a.rows() * m, a.cols() * m);
    for (i, j, x) in a.entries() {
        if !x.is_zero() {
            out.paste(i * m, j * m, &rho(x));
        }
    }
    out
}

pub fn eval_at_zero(a: &MatGRPoly) -> MatGR {
    a.map(GRElem::zero(a.group()), GRPoly::eval_zero)
}

pub fn eval_at_one(a: &MatGRPoly) -> MatGR {
    a.map(GRElem::zero(a.group()), GRPoly::eval_one)
}

pub fn opposite(a: &MatGR) -> MatGR {
    a.map(a.zero_elem().clone(), GRElem::opposite)
}

/// `(A′)ᵒ`: transpose and apply the opposite map entrywise.
pub fn transpose_opposite(a: &MatGR) -> MatGR {
    opposite(&a.transpose())
}

pub fn transpose_opposite_poly(a: &MatGRPoly) -> MatGRPoly {
    a.transpose().map(a.zero_elem().clone(), GRPoly::opposite)
}

/// Evaluates an integer polynomial matrix at an integer point.
pub fn eval_int_poly(a: &IntPolyMatrix, x: &BigInt) -> IntMatrix {
    a.map(BigInt::zero(), |p| p.eval(x))
}

/// Integer matrix viewed over `ℤG` (entries `n·e`).
pub fn lift_int(a: &IntMatrix, group: &crate::groups::GroupRef) -> MatGR {
    a.map(GRElem::zero(group), |x| GRElem::from_int(group, x.clone()))
}

/// `I − A` for any square matrix.
pub fn i_minus<R: Ring>(a: &Matrix<R>) -> Matrix<R> {
    a.identity_like(a.rows()).sub(a)
}
