use super::moves::{nzc_check, nzc_violation, ChainBuilder, ElementaryMove, Mode, MoveChain};
use crate::error::{Error, Result};
use crate::matrix::{MatGR, MatGRPoly};
use crate::poly::GRPoly;
use crate::polymat::{eval_at_zero, i_minus};

fn require_t_divisible(a: &MatGRPoly, mode: Mode) -> Result<()> {
    a.require_square()?;
    if mode == Mode::Positive {
        if let Some((i, j)) = a.first_negative() {
            return Err(Error::NegativeCoefficient {
                row: i,
                col: j,
                detail: a.get(i, j).to_string(),
            });
        }
    }
    if let Some((i, j, p)) = a.entries().find(|(_, _, p)| p.has_constant_term()) {
        return Err(Error::Precondition(format!(
            "entry ({i},{j}) = {p} has a constant term; normalize with diamond_normalize first"
        )));
    }
    Ok(())
}

fn companion(a: &MatGRPoly) -> MatGR {
    let n = a.rows();
    let d = a.degree().unwrap_or(1).max(1);
    let g = a.group();
    let mut out = MatGR::zeros_gr(g, n * d, n * d);
    for k in 0..d {
        out.paste(0, k * n, &a.coeff_matrix(k + 1));
        if k > 0 {
            out.paste(k * n, (k - 1) * n, &MatGR::eye_gr(g, n));
        }
    }
    out
}

/// Companion linearization: for `A = Σ_{k=1}^d A_k t^k` the `nd × nd` matrix
/// with top block row `A_1 … A_d` and identity blocks on the block
/// subdiagonal.
pub fn box_matrix(a: &MatGRPoly) -> Result<MatGR> {
    require_t_divisible(a, Mode::Positive)?;
    Ok(companion(a))
}

/// `core(A^□)`. States of the companion form that only feed columns of
/// lower degree have no incoming edge and are dropped.
pub fn essential_box(a: &MatGRPoly) -> Result<(MatGR, Vec<usize>)> {
    core(&box_matrix(a)?)
}

/// `A^□` together with a positive-equivalence chain from `I − A` to
/// `I − tA^□`.
pub fn box_construct(a: &MatGRPoly) -> Result<(MatGR, MoveChain)> {
    box_construct_in(a, Mode::Positive)
}

/// As [`box_construct`]; in el-only mode `A` may have negative coefficients.
///
/// The moves are found in the direction `I − tA^□ → (I − A) ⊕ I`: column
/// operations by `t` fold the subdiagonal identities into the top block row,
/// after which the top row is cleared against the rows that have become unit
/// vectors. The emitted chain pads `I − A` and runs those moves backwards.
pub fn box_construct_in(a: &MatGRPoly, mode: Mode) -> Result<(MatGR, MoveChain)> {
    require_t_divisible(a, mode)?;
    let sq = companion(a);
    let n = a.rows();
    let size = sq.rows();
    let d = size / n;
    let g = a.group();
    let mut forward = Vec::new();
    for k in (1..d).rev() {
        for s in 0..n {
            forward.push(ElementaryMove::right(
                k * n + s,
                (k - 1) * n + s,
                GRPoly::t(g),
            ));
        }
    }
    for k in 1..d {
        for x in 0..n {
            for y in 0..n {
                // P_k = Σ_{j>k} t^{j-k} A_j
                let p = GRPoly::from_terms(
                    g,
                    a.get(x, y)
                        .terms()
                        .iter()
                        .filter(|(&deg, _)| deg > k)
                        .map(|(&deg, c)| (deg - k, c.clone())),
                );
                if !p.is_zero() {
                    forward.push(ElementaryMove::left(x, k * n + y, p));
                }
            }
        }
    }
    let mut b = ChainBuilder::new(i_minus(a), mode)?;
    for (idx, mv) in forward.iter().rev().enumerate() {
        let inv = mv.inverse();
        b.push(if idx == 0 && size > n {
            inv.padded(size)
        } else {
            inv
        })?;
    }
    let chain = b.finish();
    if chain.end != i_minus(&sq.times_t()) {
        return Err(Error::Certificate(
            "box chain does not reach I - tA^box".into(),
        ));
    }
    Ok((sq, chain))
}

/// Iterated deletion of indices whose row or column vanishes. Returns the
/// core and the kept indices; `(0)` with no kept indices when everything is
/// removable.
pub fn core(a: &MatGR) -> Result<(MatGR, Vec<usize>)> {
    a.require_square()?;
    if let Some((i, j)) = a.first_negative() {
        return Err(Error::NegativeCoefficient {
            row: i,
            col: j,
            detail: a.get(i, j).to_string(),
        });
    }
    let mut keep: Vec<usize> = (0..a.rows()).collect();
    loop {
        let removable = keep.iter().position(|&i| {
            keep.iter().all(|&j| a.get(i, j).is_zero())
                || keep.iter().all(|&j| a.get(j, i).is_zero())
        });
        match removable {
            Some(p) => {
                keep.remove(p);
            }
            None => break,
        }
    }
    if keep.is_empty() {
        return Ok((MatGR::zeros_gr(a.group(), 1, 1), keep));
    }
    Ok((a.select(&keep, &keep), keep))
}

#[derive(Clone, Debug)]
pub struct Diamond {
    /// Matrix over `ℤ₊G` with `I − tA◇` positive equivalent to `I − A`.
    pub diamond: MatGR,
    pub chain: MoveChain,
    /// The intermediate matrix over `tℤ₊G[t]` reached by clearing constants.
    pub cleared: MatGRPoly,
    /// Core of `A◇` with the kept indices, when requested.
    pub core: Option<(MatGR, Vec<usize>)>,
    pub used_core: bool,
    /// Row measures `M_i` before each row clearing, and after the last one.
    pub measures: Vec<Vec<usize>>,
}

/// `M_i(A)`: the largest `k` such that row `i` of `A(0)^k` is nonzero, i.e.
/// the longest walk from `i` in the acyclic constant-term digraph.
pub fn row_measures(a: &MatGRPoly) -> Vec<usize> {
    let n = a.rows();
    let a0 = eval_at_zero(a);
    let mut memo: Vec<Option<usize>> = vec![None; n];
    fn longest(i: usize, a0: &MatGR, memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(v) = memo[i] {
            return v;
        }
        let mut best = 0;
        for j in 0..a0.cols() {
            if !a0.get(i, j).is_zero() {
                best = best.max(1 + longest(j, a0, memo));
            }
        }
        memo[i] = Some(best);
        best
    }
    (0..n).map(|i| longest(i, &a0, &mut memo)).collect()
}

/// Clears constant terms row by row with left moves by the constant terms,
/// then linearizes with [`box_construct`]. The degree never grows, so the
/// result has size at most `n·d`.
pub fn diamond_normalize(a: &MatGRPoly, want_core: bool) -> Result<Diamond> {
    let n = a.require_square()?;
    if !nzc_check(a)? {
        return Err(Error::Nzc(nzc_violation(a).unwrap_or_default()));
    }
    let mut b = ChainBuilder::new(i_minus(a), Mode::Positive)?;
    let mut measures = Vec::new();
    loop {
        let cur = i_minus(b.current());
        let m = row_measures(&cur);
        let row = (0..n).find(|&i| (0..n).any(|j| cur.get(i, j).has_constant_term()));
        measures.push(m.clone());
        let Some(i) = row else { break };
        for j in 0..n {
            let c = cur.get(i, j).constant_term();
            if !c.is_zero() {
                b.push(ElementaryMove::left(i, j, GRPoly::constant(c)))?;
            }
        }
        let after = row_measures(&i_minus(b.current()));
        if after[i] >= m[i] {
            return Err(Error::Certificate(format!(
                "measure of row {i} did not decrease ({} -> {})",
                m[i], after[i]
            )));
        }
    }
    let clear_chain = b.finish();
    let cleared = i_minus(&clear_chain.end);
    let (diamond, box_chain) = box_construct(&cleared)?;
    let chain = clear_chain.then(box_chain)?;
    let core = if want_core {
        Some(core(&diamond)?)
    } else {
        None
    };
    let used_core = core.as_ref().is_some_and(|(c, _)| *c != diamond);
    Ok(Diamond {
        diamond,
        chain,
        cleared,
        core,
        used_core,
        measures,
    })
}
