use super::moves::{ChainBuilder, ElementaryMove, Mode, MoveChain};
use crate::error::{Error, Result};
use crate::intlinalg::{is_nilpotent, nilpotent_triangularize};
use crate::matrix::{IntMatrix, MatGR, MatGRPoly};
use crate::poly::GRPoly;
use crate::polymat::{bar, bar_poly, i_minus, lift_int, tilde};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Nilpotency over `ℤG`, decided on the regular-representation lift.
pub fn is_nilpotent_gr(n: &MatGR) -> bool {
    n.is_square() && is_nilpotent(&tilde(n))
}

fn require_nilpotent(n: &MatGR) -> Result<()> {
    n.require_square()?;
    if !is_nilpotent_gr(n) {
        return Err(Error::NotNilpotent(format!(
            "N^{} is nonzero",
            n.rows() * n.group().order()
        )));
    }
    Ok(())
}

fn push_op(
    m: &mut IntMatrix,
    ops: &mut Vec<(usize, usize, BigInt)>,
    i: usize,
    j: usize,
    r: BigInt,
) {
    if !Zero::is_zero(&r) {
        m.add_row_multiple(i, j, &r);
        ops.push((i, j, r));
    }
}

/// Row operations `(i, j, r)` (row `i` += `r`·row `j`) that reduce a
/// determinant-one integer matrix to the identity, so that applying them in
/// order to `X` yields `U⁻¹X`.
pub fn sl_row_ops(u: &IntMatrix) -> Result<Vec<(usize, usize, BigInt)>> {
    let n = u.require_square()?;
    let mut m = u.clone();
    let mut ops = Vec::new();
    let singular = || Error::Precondition("matrix is not in SL_n(Z)".into());
    for c in 0..n {
        loop {
            let nz: Vec<usize> = (c..n).filter(|&i| !Zero::is_zero(m.get(i, c))).collect();
            if nz.is_empty() {
                return Err(singular());
            }
            if nz.len() == 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| m.get(i, c).abs()).unwrap();
            for &q in &nz {
                if q != p {
                    let quo = m.get(q, c) / m.get(p, c);
                    push_op(&mut m, &mut ops, q, p, -quo);
                }
            }
        }
        let p = (c..n).find(|&i| !Zero::is_zero(m.get(i, c))).unwrap();
        let v = m.get(p, c).clone();
        if !v.abs().is_one() {
            return Err(singular());
        }
        if v.is_negative() {
            if c + 1 == n {
                return Err(singular());
            }
            let q = if p == c { c + 1 } else { c };
            push_op(&mut m, &mut ops, q, p, BigInt::from(-1));
            push_op(&mut m, &mut ops, p, q, BigInt::from(2));
            push_op(&mut m, &mut ops, q, p, BigInt::from(-1));
        }
        if p != c {
            push_op(&mut m, &mut ops, c, p, BigInt::one());
            push_op(&mut m, &mut ops, p, c, BigInt::from(-1));
        }
    }
    for i in (0..n).rev() {
        for j in i + 1..n {
            let v = -m.get(i, j);
            push_op(&mut m, &mut ops, i, j, v);
        }
    }
    if m != IntMatrix::eye(n) {
        return Err(singular());
    }
    Ok(ops)
}

/// `I − t^r N` as a polynomial matrix.
pub fn i_minus_shifted(n: &MatGR, r: usize) -> MatGRPoly {
    i_minus(&n.to_poly().map(GRPoly::zero(n.group()), |p| p.shift(r)))
}

#[derive(Clone, Debug)]
pub struct Amalgamation {
    /// `M_r` over `t^rℤG[t]` with `bar(M_r) = 0`.
    pub m: MatGRPoly,
    /// El-only chain from `I − t^rN` to `I − M_r`.
    pub chain: MoveChain,
    /// Unimodular `U` with `U⁻¹ bar(N) U` strictly upper triangular.
    pub u: IntMatrix,
}

/// `I − M_r = W·U⁻¹(I − t^rN)U` where `W = (I − t^r N̄₁)⁻¹` for the strictly
/// upper triangular `N̄₁ = U⁻¹N̄U`. Coefficients of `W` are those of the powers
/// of `N̄₁`, so they do not depend on `r`.
pub fn amalg_nilpotent(n: &MatGR, r: usize) -> Result<Amalgamation> {
    require_nilpotent(n)?;
    if r == 0 {
        return Err(Error::Precondition("r must be positive".into()));
    }
    let size = n.rows();
    let g = n.group();
    let u = nilpotent_triangularize(&bar(n))?;
    let ops = sl_row_ops(&u)?;
    let mut b = ChainBuilder::new(i_minus_shifted(n, r), Mode::ElOnly)?;
    let lift = |x: &BigInt| GRPoly::from_int(g, x.clone());
    for (i, j, c) in &ops {
        b.push(ElementaryMove::left(*i, *j, lift(c)))?;
    }
    for (i, j, c) in &ops {
        b.push(ElementaryMove::right(*i, *j, lift(&-c)))?;
    }
    // W = Σ (t^r N̄₁)^k
    let n1 = bar_poly(&b.current().neg()).map(BigInt::zero(), |p| p.coeff(r));
    let x = lift_int(&n1, g)
        .to_poly()
        .map(GRPoly::zero(g), |p| p.shift(r));
    let mut w = MatGRPoly::eye_poly(g, size);
    let mut power = x.clone();
    while !power.is_zero() {
        w = w.add(&power);
        power = power.mul(&x);
    }
    // W is upper unitriangular; rows are combined top to bottom
    for i in 0..size {
        for j in i + 1..size {
            b.push(ElementaryMove::left(i, j, w.get(i, j).clone()))?;
        }
    }
    let chain = b.finish();
    let m = i_minus(&chain.end);
    let low_ok = m
        .entries()
        .all(|(_, _, p)| p.low_degree().is_none_or(|d| d >= r));
    if !bar_poly(&m).is_zero() || !low_ok {
        return Err(Error::Certificate(
            "amalgamation did not produce bar(M_r) = 0 over t^r ZG[t]".into(),
        ));
    }
    Ok(Amalgamation { m, chain, u })
}

/// Inverse of `I − X` for nilpotent `X`: `I + X + X² + …`.
pub fn nilpotent_inverse(x: &MatGRPoly) -> Result<MatGRPoly> {
    let n = x.require_square()?;
    let mut inv = MatGRPoly::eye_poly(x.group(), n);
    let mut p = x.clone();
    for _ in 0..=n * x.group().order() * (x.degree().unwrap_or(0) + 1) {
        if p.is_zero() {
            return Ok(inv);
        }
        inv = inv.add(&p);
        p = p.mul(x);
    }
    Err(Error::NotNilpotent("powers of X do not vanish".into()))
}

#[derive(Clone, Debug)]
pub struct VfReps {
    /// `I − t^r N`
    pub verschiebung: MatGRPoly,
    /// `I − t N^r`
    pub frobenius: MatGRPoly,
    pub verschiebung_inverse: MatGRPoly,
    pub frobenius_inverse: MatGRPoly,
}

pub fn vf_reps(n: &MatGR, r: usize) -> Result<VfReps> {
    require_nilpotent(n)?;
    if r == 0 {
        return Err(Error::Precondition("r must be positive".into()));
    }
    let verschiebung = i_minus_shifted(n, r);
    let frobenius = i_minus_shifted(&n.pow(r), 1);
    let vi = nilpotent_inverse(&i_minus(&verschiebung))?;
    let fi = nilpotent_inverse(&i_minus(&frobenius))?;
    let eye = MatGRPoly::eye_poly(n.group(), n.rows());
    if verschiebung.mul(&vi) != eye || frobenius.mul(&fi) != eye {
        return Err(Error::Certificate("series inverse failed".into()));
    }
    Ok(VfReps {
        verschiebung,
        frobenius,
        verschiebung_inverse: vi,
        frobenius_inverse: fi,
    })
}
