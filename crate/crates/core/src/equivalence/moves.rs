use crate::error::{Error, Result};
use crate::groups::same_group;
use crate::matrix::{MatGR, MatGRPoly};
use crate::poly::GRPoly;
use crate::polymat::{eval_at_zero, i_minus};
use crate::ring::Ring;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Entries of every basic elementary matrix are in `ℤ₊G[t]` (or their
    /// negatives, for the reverse direction) and every state is `I − A` with
    /// `A` in NZC.
    Positive,
    /// Arbitrary `ℤG[t]` entries, no NZC gate.
    ElOnly,
}

/// One multiplication by the basic elementary matrix `E_ij(r)`.
///
/// `Left` replaces `X` by `E_ij(r) X` (row `i` += `r`·row `j`), `Right` by
/// `X E_ij(r)` (column `j` += column `i`·`r`). When `stabilize_to` is set the
/// state is first padded to that size with an identity block in the
/// bottom-right corner.
#[derive(Clone, Debug, PartialEq)]
pub struct ElementaryMove {
    pub side: Side,
    pub i: usize,
    pub j: usize,
    pub r: GRPoly,
    pub stabilize_to: Option<usize>,
}

impl ElementaryMove {
    pub fn left(i: usize, j: usize, r: GRPoly) -> Self {
        ElementaryMove {
            side: Side::Left,
            i,
            j,
            r,
            stabilize_to: None,
        }
    }

    pub fn right(i: usize, j: usize, r: GRPoly) -> Self {
        ElementaryMove {
            side: Side::Right,
            i,
            j,
            r,
            stabilize_to: None,
        }
    }

    pub fn padded(mut self, size: usize) -> Self {
        self.stabilize_to = Some(size);
        self
    }

    /// The move undoing this one (padding is not undone).
    pub fn inverse(&self) -> Self {
        ElementaryMove {
            side: self.side,
            i: self.i,
            j: self.j,
            r: self.r.neg(),
            stabilize_to: None,
        }
    }

    pub fn matrix(&self, n: usize) -> MatGRPoly {
        MatGRPoly::elementary(n, self.i, self.j, self.r.clone())
    }
}

/// Support digraph of the constant terms.
fn constant_graph(a: &MatGRPoly) -> Vec<Vec<usize>> {
    (0..a.rows())
        .map(|i| {
            (0..a.cols())
                .filter(|&j| a.get(i, j).has_constant_term())
                .collect()
        })
        .collect()
}

/// Some directed cycle of the digraph, as its vertex sequence.
fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    // 0 = unvisited, 1 = on stack, 2 = done
    let n = adj.len();
    let mut color = vec![0u8; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        if color[s] != 0 {
            continue;
        }
        let mut stack = vec![(s, 0usize)];
        color[s] = 1;
        while let Some(top) = stack.last_mut() {
            let (v, next) = *top;
            if next < adj[v].len() {
                let w = adj[v][next];
                top.1 += 1;
                match color[w] {
                    0 => {
                        color[w] = 1;
                        parent[w] = v;
                        stack.push((w, 0));
                    }
                    1 => {
                        let mut cyc = vec![v];
                        let mut x = v;
                        while x != w {
                            x = parent[x];
                            cyc.push(x);
                        }
                        cyc.reverse();
                        return Some(cyc);
                    }
                    _ => {}
                }
            } else {
                color[v] = 2;
                stack.pop();
            }
        }
    }
    None
}

fn require_nonnegative(a: &MatGRPoly) -> Result<()> {
    if let Some((i, j)) = a.first_negative() {
        return Err(Error::NegativeCoefficient {
            row: i,
            col: j,
            detail: a.get(i, j).to_string(),
        });
    }
    Ok(())
}

/// NZC membership for a matrix over `ℤ₊G[t]`.
///
/// Because constant terms are nonnegative there is no cancellation in
/// `A(0)^k`, so a diagonal entry of `A(0)^k` is nonzero exactly when the
/// support digraph of `A(0)` has a closed walk of length `k`. NZC therefore
/// holds iff that digraph is acyclic.
pub fn nzc_check(a: &MatGRPoly) -> Result<bool> {
    a.require_square()?;
    require_nonnegative(a)?;
    Ok(find_cycle(&constant_graph(a)).is_none())
}

/// The definition read literally: diagonal constant terms of `A^k` vanish for
/// `k = 1..=n` (longer closed walks contain shorter ones).
pub fn nzc_by_powers(a: &MatGRPoly) -> Result<bool> {
    let n = a.require_square()?;
    require_nonnegative(a)?;
    let a0 = eval_at_zero(a);
    let mut p = a0.clone();
    for _ in 1..=n {
        if (0..n).any(|i| !p.get(i, i).is_zero()) {
            return Ok(false);
        }
        p = p.mul(&a0);
    }
    Ok(true)
}

/// Why `A` fails to be in `NZC(ℤ₊G[t])`, if it does.
pub fn nzc_violation(a: &MatGRPoly) -> Option<String> {
    if let Some((i, j)) = a.first_negative() {
        return Some(format!(
            "entry ({i},{j}) = {} has a negative coefficient",
            a.get(i, j)
        ));
    }
    let cyc = find_cycle(&constant_graph(a))?;
    let a0: MatGR = eval_at_zero(a);
    let k = cyc.len();
    let v = cyc[0];
    let c = a0.pow(k).get(v, v).clone();
    Some(format!(
        "diagonal entry ({v},{v}) of A^{k} has constant term {c}"
    ))
}

fn check_state(x: &MatGRPoly, which: &str) -> Result<()> {
    match nzc_violation(&i_minus(x)) {
        Some(msg) => Err(Error::MoveRejected(format!(
            "{which} is not I - A with A in NZC: {msg}"
        ))),
        None => Ok(()),
    }
}

/// One step of a chain. In positive mode both endpoints are validated.
pub fn apply_move(state: &MatGRPoly, mv: &ElementaryMove, mode: Mode) -> Result<MatGRPoly> {
    let n = state.require_square()?;
    if !same_group(state.group(), mv.r.group()) {
        return Err(Error::GroupMismatch);
    }
    let mut x = state.clone();
    if let Some(k) = mv.stabilize_to {
        if k < n {
            return Err(Error::MoveRejected(format!(
                "cannot stabilize a {n}x{n} state to size {k}"
            )));
        }
        x = x.pad_identity(k - n);
    }
    let size = x.rows();
    if mv.i == mv.j || mv.i >= size || mv.j >= size {
        return Err(Error::MoveRejected(format!(
            "invalid indices ({},{}) for size {size}",
            mv.i, mv.j
        )));
    }
    if mode == Mode::Positive {
        if !mv.r.is_nonnegative() && !mv.r.neg().is_nonnegative() {
            return Err(Error::MoveRejected(format!(
                "entry {} is neither in Z+G[t] nor its negative",
                mv.r
            )));
        }
        check_state(&x, "source")?;
    }
    match mv.side {
        Side::Left => x.add_row_multiple(mv.i, mv.j, &mv.r),
        Side::Right => x.add_col_multiple(mv.i, mv.j, &mv.r),
    }
    if mode == Mode::Positive {
        check_state(&x, "target")?;
    }
    Ok(x)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MoveChain {
    pub start: MatGRPoly,
    pub end: MatGRPoly,
    pub moves: Vec<ElementaryMove>,
    pub mode: Mode,
}

impl MoveChain {
    pub fn trivial(start: MatGRPoly, mode: Mode) -> Self {
        MoveChain {
            end: start.clone(),
            start,
            moves: Vec::new(),
            mode,
        }
    }

    /// Concatenation; the second chain must start where the first ends.
    pub fn then(mut self, other: MoveChain) -> Result<MoveChain> {
        if self.end != other.start {
            return Err(Error::Certificate(
                "chains do not compose: end and start differ".into(),
            ));
        }
        self.moves.extend(other.moves);
        self.end = other.end;
        if other.mode == Mode::ElOnly {
            self.mode = Mode::ElOnly;
        }
        Ok(self)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainReport {
    pub valid: bool,
    pub steps: usize,
    pub failed_step: Option<usize>,
    pub message: Option<String>,
}

impl ChainReport {
    fn fail(steps: usize, at: usize, msg: String) -> Self {
        ChainReport {
            valid: false,
            steps,
            failed_step: Some(at),
            message: Some(msg),
        }
    }
}

pub fn verify_chain(chain: &MoveChain) -> ChainReport {
    let steps = chain.moves.len();
    if chain.mode == Mode::Positive {
        if let Err(e) = chain
            .start
            .require_square()
            .and_then(|_| check_state(&chain.start, "start"))
        {
            return ChainReport::fail(steps, 0, e.to_string());
        }
    }
    let mut x = chain.start.clone();
    for (k, mv) in chain.moves.iter().enumerate() {
        match apply_move(&x, mv, chain.mode) {
            Ok(y) => x = y,
            Err(e) => return ChainReport::fail(steps, k, e.to_string()),
        }
    }
    if x != chain.end {
        return ChainReport::fail(
            steps,
            steps,
            "replay does not reach the recorded end".into(),
        );
    }
    ChainReport {
        valid: true,
        steps,
        failed_step: None,
        message: None,
    }
}

/// Incremental chain construction with validation at every push.
#[derive(Clone, Debug)]
pub struct ChainBuilder {
    start: MatGRPoly,
    current: MatGRPoly,
    moves: Vec<ElementaryMove>,
    mode: Mode,
}

impl ChainBuilder {
    pub fn new(start: MatGRPoly, mode: Mode) -> Result<Self> {
        start.require_square()?;
        if mode == Mode::Positive {
            check_state(&start, "start")?;
        }
        Ok(ChainBuilder {
            current: start.clone(),
            start,
            moves: Vec::new(),
            mode,
        })
    }

    pub fn push(&mut self, mv: ElementaryMove) -> Result<()> {
        if mv.r.is_zero() && mv.stabilize_to.is_none() {
            return Ok(());
        }
        self.current = apply_move(&self.current, &mv, self.mode)?;
        self.moves.push(mv);
        Ok(())
    }

    pub fn current(&self) -> &MatGRPoly {
        &self.current
    }

    pub fn finish(self) -> MoveChain {
        MoveChain {
            start: self.start,
            end: self.current,
            moves: self.moves,
            mode: self.mode,
        }
    }
}
