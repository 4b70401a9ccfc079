use super::moves::{ChainBuilder, ElementaryMove, Mode};
use crate::error::{Error, Result};
use crate::matrix::MatGRPoly;
use crate::polymat::i_minus;
use serde::{Deserialize, Serialize};

/// Which row absorbs the others.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AbsorbRow {
    /// The last row: `B = (M u; v f)` becomes `(M u; vM f + vu)`.
    Last,
    /// The first row: `P = (s w; x Q)` becomes `(s + wx wQ; x Q)`.
    First,
}

/// One recursion step `I − B_{k+1} = E·(I − B_k)` where `E` adds to the pivot
/// row the other rows weighted by the pivot row's off-diagonal entries of
/// `B_k`. Each row addition is a validated positive move.
pub fn absorb_step(
    state: &MatGRPoly,
    which: AbsorbRow,
) -> Result<(MatGRPoly, Vec<ElementaryMove>)> {
    let n = state.require_square()?;
    if n < 2 {
        return Err(Error::Dimension(
            "absorption needs at least two rows".into(),
        ));
    }
    let b_k = i_minus(state);
    let pivot = match which {
        AbsorbRow::Last => n - 1,
        AbsorbRow::First => 0,
    };
    let mut b = ChainBuilder::new(state.clone(), Mode::Positive)?;
    for j in (0..n).filter(|&j| j != pivot) {
        b.push(ElementaryMove::left(pivot, j, b_k.get(pivot, j).clone()))?;
    }
    let chain = b.finish();
    Ok((chain.end, chain.moves))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_group, GroupSpec};
    use crate::parse::parse_matrix;

    #[test]
    fn closed_forms() {
        let c2 = make_group(&GroupSpec::cyclic(2)).unwrap();
        let b1 = parse_matrix(&c2, "[[t, g*t, t^2], [t, 0, g*t], [2*t, g*t^2, t]]").unwrap();
        let m = b1.submatrix(0, 0, 2, 2);
        let u = b1.submatrix(0, 2, 2, 1);
        let v = b1.submatrix(2, 0, 1, 2);
        let f = b1.submatrix(2, 2, 1, 1);
        let mut state = i_minus(&b1);
        let mut geo = MatGRPoly::zeros_poly(&c2, 2, 2);
        let mut mk = MatGRPoly::eye_poly(&c2, 2);
        for _ in 1..=6 {
            let (next, _) = absorb_step(&state, AbsorbRow::Last).unwrap();
            state = next;
            geo = geo.add(&mk);
            mk = mk.mul(&m);
            let bk = i_minus(&state);
            assert_eq!(bk.submatrix(2, 0, 1, 2), v.mul(&mk));
            assert_eq!(bk.submatrix(2, 2, 1, 1), f.add(&v.mul(&geo).mul(&u)));
        }

        let (p2, moves) = absorb_step(&i_minus(&b1), AbsorbRow::First).unwrap();
        assert_eq!(moves.len(), 2);
        let corner = b1
            .submatrix(0, 0, 1, 1)
            .add(&b1.submatrix(0, 1, 1, 2).mul(&b1.submatrix(1, 0, 2, 1)));
        assert_eq!(i_minus(&p2).submatrix(0, 0, 1, 1), corner);

        let diag = parse_matrix(&c2, "[[t, 0], [0, g*t]]").unwrap();
        let (same, moves) = absorb_step(&i_minus(&diag), AbsorbRow::Last).unwrap();
        assert_eq!(same, i_minus(&diag));
        assert!(moves.is_empty());
    }
}
