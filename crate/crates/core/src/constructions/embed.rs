use crate::equivalence::{
    absorb_step, verify_sse, AbsorbRow, ChainBuilder, Mode, MoveChain, SSEWitness, Semiring,
};
use crate::error::{Error, Result};
use crate::groupring::GRElem;
use crate::groups::{same_group, trivial_group, GroupRef};
use crate::matrix::{MatGRPoly, Matrix};
use crate::poly::GRPoly;
use crate::polymat::{bar_poly, i_minus};
use crate::ring::Ring;
use num_bigint::BigInt;

#[derive(Clone, Debug)]
pub struct Embedding {
    pub h: MatGRPoly,
    pub v: MatGRPoly,
    pub b: MatGRPoly,
    /// `I − B = V⁻¹(I − H)V` holds exactly.
    pub similarity: bool,
    /// `V⁻¹HV` agrees with the entrywise closed form of `B`.
    pub closed_form: bool,
    pub negative_entries: Vec<(usize, usize)>,
    /// `B` has entries in `tℤ₊G[t]`.
    pub positive: bool,
    /// When `bar(Q) = 0`: `bar(B)` and `bar(C)` with a one-step SSE over
    /// `ℤ₊[t]` (trivial group) and whether it verifies.
    pub bar_sse: Option<(MatGRPoly, MatGRPoly, SSEWitness, bool)>,
}

/// Augmentation into polynomial matrices over the trivial group.
pub fn bar_trivial(m: &MatGRPoly) -> MatGRPoly {
    let z = trivial_group();
    bar_poly(m).map(GRPoly::zero(&z), |p| {
        GRPoly::from_terms(
            &z,
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(d, c)| (d, GRElem::from_int(&z, c.clone()))),
        )
    })
}

/// `H = (Q X; 0 C)` with `α` down the first column of `X`, and
/// `B = V⁻¹HV` for `V = (I 0; Y I)`, `Y` having a top row of ones.
pub fn embed_assemble(q: &MatGRPoly, c: &MatGRPoly, alpha: &GRPoly) -> Result<Embedding> {
    let k = q.require_square()?;
    let n = c.require_square()?;
    if !same_group(q.group(), c.group()) || !same_group(q.group(), alpha.group()) {
        return Err(Error::GroupMismatch);
    }
    if n == 0 || k == 0 {
        return Err(Error::Dimension("Q and C must be nonempty".into()));
    }
    let g = q.group();
    let zero = GRPoly::zero(g);
    let x = MatGRPoly::from_fn(k, n, zero.clone(), |_, j| {
        if j == 0 {
            alpha.clone()
        } else {
            zero.clone()
        }
    });
    let y = MatGRPoly::from_fn(n, k, zero.clone(), |i, _| {
        if i == 0 {
            GRPoly::one(g)
        } else {
            zero.clone()
        }
    });
    let h = Matrix::block(&[
        vec![q.clone(), x.clone()],
        vec![MatGRPoly::zeros_poly(g, n, k), c.clone()],
    ])?;
    let v = Matrix::block(&[
        vec![MatGRPoly::eye_poly(g, k), MatGRPoly::zeros_poly(g, k, n)],
        vec![y.clone(), MatGRPoly::eye_poly(g, n)],
    ])?;
    let v_inv = Matrix::block(&[
        vec![MatGRPoly::eye_poly(g, k), MatGRPoly::zeros_poly(g, k, n)],
        vec![y.neg(), MatGRPoly::eye_poly(g, n)],
    ])?;
    let b = v_inv.mul(&h).mul(&v);
    let similarity = i_minus(&b) == v_inv.mul(&i_minus(&h)).mul(&v);

    // closed form: x = c_11 − kα, η_j = Σ_i q_ij
    let kk = BigInt::from(k as u64);
    let xx = c.get(0, 0).sub(&alpha.scale_int(&kk));
    let eta = |j: usize| (0..k).fold(zero.clone(), |acc, i| acc.add(q.get(i, j)));
    let closed = MatGRPoly::from_fn(k + n, k + n, zero.clone(), |i, j| match (i < k, j < k) {
        (true, true) => q.get(i, j).add(alpha),
        (true, false) => {
            if j == k {
                alpha.clone()
            } else {
                zero.clone()
            }
        }
        (false, true) if i == k => xx.sub(&eta(j)),
        (false, true) => c.get(i - k, 0).clone(),
        (false, false) if i == k && j == k => xx.clone(),
        (false, false) if j == k => c.get(i - k, 0).clone(),
        (false, false) => c.get(i - k, j - k).clone(),
    });
    let closed_form = closed == b;
    let negative_entries: Vec<(usize, usize)> = b
        .entries()
        .filter(|(_, _, p)| !p.is_nonnegative())
        .map(|(i, j, _)| (i, j))
        .collect();
    let positive =
        negative_entries.is_empty() && b.entries().all(|(_, _, p)| !p.has_constant_term());

    let bar_sse = if bar_poly(q).is_zero() {
        // B̄ = H̄′ = (X; D)(Y I) and C = (Y I)(X; D), D the lower right block of B
        let d = b.submatrix(k, k, n, n);
        let r = Matrix::block(&[vec![x], vec![d]])?;
        let s = Matrix::block(&[vec![y, MatGRPoly::eye_poly(g, n)]])?;
        let w = SSEWitness {
            semiring: Semiring::NonnegPoly,
            steps: vec![(bar_trivial(&r), bar_trivial(&s))],
        };
        let (bb, bc) = (bar_trivial(&b), bar_trivial(c));
        let ok = verify_sse(&bb, &bc, &w).valid;
        Some((bb, bc, w, ok))
    } else {
        None
    };
    Ok(Embedding {
        h,
        v,
        b,
        similarity,
        closed_form,
        negative_entries,
        positive,
        bar_sse,
    })
}

/// Smallest `c` (up to `max_c`) such that `α = c·u·(t^lo + … + t^hi)` makes
/// `B` positive, with `lo..=hi` the range of degrees occurring in `Q`.
pub fn scan_alpha(q: &MatGRPoly, c: &MatGRPoly, max_c: u64) -> Result<Option<GRPoly>> {
    let g = q.group();
    let lo = q
        .entries()
        .filter_map(|(_, _, p)| p.low_degree())
        .min()
        .unwrap_or(1)
        .max(1);
    let hi = q.degree().unwrap_or(1).max(lo);
    for coef in 1..=max_c {
        let cu = GRElem::u(g).scale(&BigInt::from(coef));
        let alpha = GRPoly::from_terms(g, (lo..=hi).map(|d| (d, cu.clone())));
        if embed_assemble(q, c, &alpha)?.positive {
            return Ok(Some(alpha));
        }
    }
    Ok(None)
}

/// Iterated absorption: `last` steps pivoting on the last row, then `first`
/// steps pivoting on the first row, as one positive chain from `I − A`.
pub fn grow_corner(a: &MatGRPoly, last: usize, first: usize) -> Result<(MatGRPoly, MoveChain)> {
    let mut b = ChainBuilder::new(i_minus(a), Mode::Positive)?;
    for (steps, which) in [(last, AbsorbRow::Last), (first, AbsorbRow::First)] {
        for _ in 0..steps {
            let (_, moves) = absorb_step(b.current(), which)?;
            for mv in moves {
                b.push(mv)?;
            }
        }
    }
    let chain = b.finish();
    Ok((i_minus(&chain.end), chain))
}

/// `(u, e)` helpers for callers that build `α` by hand.
pub fn u_times_t_pow(group: &GroupRef, coef: i64, d: usize) -> GRPoly {
    GRPoly::monomial(GRElem::u(group).scale(&BigInt::from(coef)), d)
}
