use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct SnfResult {
    /// Invariant factors `d_1 | d_2 | ...`, padded with zeros to `min(rows, cols)`.
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

/// Cokernel `⊕ ℤ/d_i ⊕ ℤ^free`; trivial factors `ℤ/1` are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel {
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl fmt::Display for Cokernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.rows(), self.right.rows());
        for (i, x) in self.diagonal.iter().enumerate() {
            d.set(i, i, x.clone());
        }
        d
    }

    /// Cokernel of the map `ℤ^cols → ℤ^rows`.
    pub fn cokernel(&self) -> Cokernel {
        let rows = self.left.rows();
        Cokernel {
            torsion: self
                .diagonal
                .iter()
                .filter(|d| !d.is_zero() && !d.is_one())
                .cloned()
                .collect(),
            free_rank: rows - self.rank(),
        }
    }
}

struct Work {
    a: IntMatrix,
    left: IntMatrix,
    right: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap_rows(i, j);
            self.left.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap_cols(i, j);
            self.right.swap_cols(i, j);
        }
    }

    /// row i += q row j
    fn row_op(&mut self, i: usize, j: usize, q: &BigInt) {
        self.a.add_row_multiple(i, j, q);
        self.left.add_row_multiple(i, j, q);
    }

    /// col j += col i * q
    fn col_op(&mut self, i: usize, j: usize, q: &BigInt) {
        self.a.add_col_multiple(i, j, q);
        self.right.add_col_multiple(i, j, q);
    }

    fn smallest(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = self.a.get(i, j);
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.abs() < self.a.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }
}

/// Smith normal form with unimodular transforms: `left · A · right = diag`.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        a: a.clone(),
        left: IntMatrix::eye(m),
        right: IntMatrix::eye(n),
    };
    for t in 0..m.min(n) {
        let Some((pi, pj)) = w.smallest(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                let q = w.a.get(i, t).div_floor(w.a.get(t, t));
                if !q.is_zero() {
                    w.row_op(i, t, &-q);
                }
                if !w.a.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                let q = w.a.get(t, j).div_floor(w.a.get(t, t));
                if !q.is_zero() {
                    w.col_op(t, j, &-q);
                }
                if !w.a.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // move the smallest remainder in row/column t onto the pivot
                let mut best = (t, t);
                for i in t + 1..m {
                    let v = w.a.get(i, t);
                    if !v.is_zero() && v.abs() < w.a.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    let v = w.a.get(t, j);
                    if !v.is_zero() && v.abs() < w.a.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                w.swap_rows(t, best.0);
                w.swap_cols(t, best.1);
                continue;
            }
            // divisibility of the remaining block by the pivot
            let p = w.a.get(t, t).clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(w.a.get(i, j) % &p).is_zero()));
            match bad {
                Some(i) => w.row_op(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a.get(t, t).is_negative() {
            let minus = -BigInt::one();
            for c in 0..n {
                let v = w.a.get(t, c) * &minus;
                w.a.set(t, c, v);
            }
            for c in 0..m {
                let v = w.left.get(t, c) * &minus;
                w.left.set(t, c, v);
            }
        }
    }
    let diagonal = (0..m.min(n)).map(|i| w.a.get(i, i).clone()).collect();
    SnfResult {
        diagonal,
        left: w.left,
        right: w.right,
    }
}

/// Inverse of a unimodular integer matrix; `None` if the matrix is not
/// unimodular.
pub fn unimodular_inverse(u: &IntMatrix) -> Option<IntMatrix> {
    if !u.is_square() {
        return None;
    }
    let s = smith_normal_form(u);
    if s.diagonal.iter().any(|d| !d.is_one()) {
        return None;
    }
    Some(s.right.mul(&s.left))
}

/// Basis of the integer kernel `{x : A x = 0}` as columns; the basis extends
/// to a unimodular matrix, so the kernel lattice is saturated.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let r = s.rank();
    let n = a.cols();
    s.right.submatrix(0, r, n, n - r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlinalg::charpoly::int_det;

    fn check(a: &IntMatrix) -> SnfResult {
        let s = smith_normal_form(a);
        assert_eq!(s.left.mul(a).mul(&s.right), s.diagonal_matrix());
        assert!(int_det(&s.left).unwrap().abs().is_one());
        assert!(int_det(&s.right).unwrap().abs().is_one());
        let nz: Vec<&BigInt> = s.diagonal.iter().filter(|d| !d.is_zero()).collect();
        for w in nz.windows(2) {
            assert!((w[1] % w[0]).is_zero());
        }
        assert!(s.diagonal.iter().all(|d| !d.is_negative()));
        s
    }

    #[test]
    fn swap_example() {
        let a = IntMatrix::from_i64(&[&[3, -3], &[-3, 3]]);
        let s = check(&a);
        assert_eq!(s.diagonal, vec![BigInt::from(3), BigInt::zero()]);
        assert_eq!(s.cokernel().to_string(), "Z/3 + Z");
    }

    #[test]
    fn three_cycle_times_two() {
        let a = IntMatrix::from_i64(&[&[2, -2, 0], &[0, 2, -2], &[-2, 0, 2]]);
        let s = check(&a);
        assert_eq!(
            s.cokernel(),
            Cokernel {
                torsion: vec![BigInt::from(2), BigInt::from(2)],
                free_rank: 1
            }
        );
        assert_eq!(check(&IntMatrix::eye(3)).diagonal, vec![BigInt::one(); 3]);
    }

    #[test]
    fn rectangular_and_kernel() {
        let a = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = check(&a);
        assert_eq!(
            s.diagonal,
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
        let r = IntMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8]]);
        check(&r);
        let k = kernel_basis(&r);
        assert_eq!(k.cols(), 3);
        assert!(r.mul(&k).is_zero());
        let u = IntMatrix::from_i64(&[&[2, 1], &[7, 4]]);
        assert_eq!(u.mul(&unimodular_inverse(&u).unwrap()), IntMatrix::eye(2));
        assert!(unimodular_inverse(&IntMatrix::from_i64(&[&[2, 0], &[0, 1]])).is_none());
    }
}
