use crate::error::{Error, Result};
use crate::groupring::GRElem;
use crate::groups::GroupRef;
use crate::poly::{GRPoly, IntPoly};
use crate::ring::Ring;
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

/// Dense row-major matrix over a ring. A zero prototype is kept so that
/// empty rows and fresh entries can be created without a type-level zero.
#[derive(Clone, PartialEq)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    zero: R,
    data: Vec<R>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type MatGR = Matrix<GRElem>;
pub type MatGRPoly = Matrix<GRPoly>;
pub type IntPolyMatrix = Matrix<IntPoly>;

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

impl<R: Ring> Matrix<R> {
    pub fn new(rows: usize, cols: usize, zero: R) -> Self {
        let z = zero.zero_like();
        Matrix {
            rows,
            cols,
            data: vec![z.clone(); rows * cols],
            zero: z,
        }
    }

    pub fn identity(n: usize, zero: R) -> Self {
        let mut m = Self::new(n, n, zero);
        let one = m.zero.one_like();
        for i in 0..n {
            m.set(i, i, one.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>, zero: R) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("rows have different lengths".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            zero: zero.zero_like(),
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, zero: R, f: impl Fn(usize, usize) -> R) -> Self {
        let data = (0..rows * cols)
            .map(|k| f(k / cols.max(1), k % cols.max(1)))
            .collect();
        Matrix {
            rows,
            cols,
            zero: zero.zero_like(),
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn zero_elem(&self) -> &R {
        &self.zero
    }

    pub fn zeros_like(&self, rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, self.zero.clone())
    }

    pub fn identity_like(&self, n: usize) -> Self {
        Self::identity(n, self.zero.clone())
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut R {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        let c = self.cols;
        self.data
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / c, k % c, v))
    }

    pub fn map<S: Ring>(&self, zero: S, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            zero: zero.zero_like(),
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.zeros_like(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            zero: self.zero.clone(),
            data,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            zero: self.zero.clone(),
            data,
        })
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "shapes {}x{} and {}x{} differ",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Matrix product; panics on a dimension mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("matrix product dimensions")
    }

    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("matrix sum dimensions")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.checked_sub(other)
            .expect("matrix difference dimensions")
    }

    pub fn neg(&self) -> Self {
        self.map(self.zero.clone(), Ring::neg)
    }

    pub fn scale_left(&self, c: &R) -> Self {
        self.map(self.zero.clone(), |x| c.mul(x))
    }

    pub fn scale_right(&self, c: &R) -> Self {
        self.map(self.zero.clone(), |x| x.mul(c))
    }

    pub fn pow(&self, k: usize) -> Self {
        let n = self.rows;
        let mut result = self.identity_like(n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, self.zero.clone(), |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn trace(&self) -> R {
        (0..self.rows.min(self.cols)).fold(self.zero.clone(), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.zeros_like(self.rows + other.rows, self.cols + other.cols);
        out.paste(0, 0, self);
        out.paste(self.rows, self.cols, other);
        out
    }

    /// Pads with an identity block at the bottom right.
    pub fn pad_identity(&self, k: usize) -> Self {
        self.direct_sum(&self.identity_like(k))
    }

    pub fn paste(&mut self, r0: usize, c0: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, self.zero.clone(), |i, j| {
            self.get(r0 + i, c0 + j).clone()
        })
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), self.zero.clone(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    /// Assemble a block matrix from a grid of blocks with consistent shapes.
    pub fn block(blocks: &[Vec<Self>]) -> Result<Self> {
        let first = blocks
            .first()
            .and_then(|r| r.first())
            .ok_or_else(|| Error::Dimension("empty block grid".into()))?;
        let heights: Vec<usize> = blocks.iter().map(|r| r[0].rows).collect();
        let widths: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        let mut out = first.zeros_like(heights.iter().sum(), widths.iter().sum());
        let mut r0 = 0;
        for (bi, row) in blocks.iter().enumerate() {
            if row.len() != widths.len() {
                return Err(Error::Dimension("block rows have different lengths".into()));
            }
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                if b.rows != heights[bi] || b.cols != widths[bj] {
                    return Err(Error::Dimension(format!(
                        "block ({bi},{bj}) has inconsistent shape"
                    )));
                }
                out.paste(r0, c0, b);
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        Ok(out)
    }

    /// `row i += r * row j`, i.e. left multiplication by `E_ij(r)`.
    pub fn add_row_multiple(&mut self, i: usize, j: usize, r: &R) {
        for c in 0..self.cols {
            let v = self.get(i, c).add(&r.mul(self.get(j, c)));
            self.set(i, c, v);
        }
    }

    /// `col j += col i * r`, i.e. right multiplication by `E_ij(r)`.
    pub fn add_col_multiple(&mut self, i: usize, j: usize, r: &R) {
        for row in 0..self.rows {
            let v = self.get(row, j).add(&self.get(row, i).mul(r));
            self.set(row, j, v);
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// Basic elementary matrix `E_ij(r)` of size `n`.
    pub fn elementary(n: usize, i: usize, j: usize, r: R) -> Self {
        let mut m = Self::identity(n, r.zero_like());
        m.set(i, j, r);
        m
    }
}

impl IntMatrix {
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let v: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Matrix::from_rows(v, BigInt::zero()).expect("rectangular literal")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, BigInt::zero())
    }

    pub fn eye(n: usize) -> Self {
        Matrix::identity(n, BigInt::zero())
    }

    pub fn to_i64(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        (0..self.rows())
            .map(|i| self.row(i).iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        use num_traits::Signed;
        self.entries().all(|(_, _, x)| !x.is_negative())
    }
}

impl MatGR {
    pub fn zeros_gr(group: &GroupRef, rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, GRElem::zero(group))
    }

    pub fn eye_gr(group: &GroupRef, n: usize) -> Self {
        Matrix::identity(n, GRElem::zero(group))
    }

    pub fn group(&self) -> &GroupRef {
        self.zero_elem().group()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries().all(|(_, _, x)| x.is_nonnegative())
    }

    pub fn first_negative(&self) -> Option<(usize, usize)> {
        self.entries()
            .find(|(_, _, x)| !x.is_nonnegative())
            .map(|(i, j, _)| (i, j))
    }

    pub fn to_poly(&self) -> MatGRPoly {
        self.map(GRPoly::zero(self.group()), |x| GRPoly::constant(x.clone()))
    }

    /// `t * self` as a polynomial matrix.
    pub fn times_t(&self) -> MatGRPoly {
        self.map(GRPoly::zero(self.group()), |x| {
            GRPoly::monomial(x.clone(), 1)
        })
    }
}

impl MatGRPoly {
    pub fn zeros_poly(group: &GroupRef, rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, GRPoly::zero(group))
    }

    pub fn eye_poly(group: &GroupRef, n: usize) -> Self {
        Matrix::identity(n, GRPoly::zero(group))
    }

    pub fn group(&self) -> &GroupRef {
        self.zero_elem().group()
    }

    pub fn degree(&self) -> Option<usize> {
        self.entries().filter_map(|(_, _, p)| p.degree()).max()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries().all(|(_, _, p)| p.is_nonnegative())
    }

    pub fn first_negative(&self) -> Option<(usize, usize)> {
        self.entries()
            .find(|(_, _, p)| !p.is_nonnegative())
            .map(|(i, j, _)| (i, j))
    }

    /// Coefficient matrix of `t^k`.
    pub fn coeff_matrix(&self, k: usize) -> MatGR {
        self.map(GRElem::zero(self.group()), |p| p.coeff(k))
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.entries()
            .map(|(_, _, p)| p.max_abs_coeff())
            .max()
            .unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_group, GroupSpec};

    #[test]
    fn identity_and_power() {
        let g = make_group(&GroupSpec::cyclic(2)).unwrap();
        let a =
            Matrix::from_rows(vec![vec![GRElem::from_i64(&g, &[0, 5])]], GRElem::zero(&g)).unwrap();
        let i = MatGR::eye_gr(&g, 1);
        assert_eq!(i.mul(&a), a);
        assert_eq!(a.pow(2).get(0, 0), &GRElem::from_i64(&g, &[25, 0]));
        assert_eq!(a.pow(0), i);
    }

    #[test]
    fn three_cycle_matrix_cubes_to_diagonal() {
        let s4 = make_group(&GroupSpec::Symmetric { n: 4 }).unwrap();
        let el = |n: &str| GRElem::basis(&s4, s4.lookup(n).unwrap());
        let mut m = MatGR::zeros_gr(&s4, 3, 3);
        m.set(0, 1, el("(143)"));
        m.set(1, 2, el("(123)"));
        m.set(2, 0, el("(12)(34)"));
        assert_eq!(m.pow(3), MatGR::eye_gr(&s4, 3));
    }

    #[test]
    fn row_and_column_moves_match_products() {
        let a = IntMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        let r = BigInt::from(-3);
        let mut left = a.clone();
        left.add_row_multiple(0, 2, &r);
        assert_eq!(left, IntMatrix::elementary(3, 0, 2, r.clone()).mul(&a));
        let mut right = a.clone();
        right.add_col_multiple(1, 2, &r);
        assert_eq!(right, a.mul(&IntMatrix::elementary(3, 1, 2, r)));
    }

    #[test]
    fn blocks() {
        let a = IntMatrix::from_i64(&[&[1, 2]]);
        let b = IntMatrix::from_i64(&[&[3]]);
        let c = IntMatrix::from_i64(&[&[4, 5], &[6, 7]]);
        let d = IntMatrix::from_i64(&[&[8], &[9]]);
        let m = Matrix::block(&[vec![a, b], vec![c, d]]).unwrap();
        assert_eq!(
            m,
            IntMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 8], &[6, 7, 9]])
        );
        assert!(IntMatrix::from_i64(&[&[1, 2]])
            .checked_mul(&IntMatrix::from_i64(&[&[1, 2]]))
            .is_err());
    }
}
