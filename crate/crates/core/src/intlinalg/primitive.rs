use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Primitivity {
    Primitive,
    /// Irreducible with the given period `p > 1`.
    Periodic(usize),
    Reducible,
}

/// Adjacency lists of the support digraph.
pub fn support_graph(m: &IntMatrix) -> Vec<Vec<usize>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).filter(|&j| !m.get(i, j).is_zero()).collect())
        .collect()
}

fn reach(adj: &[Vec<usize>], s: usize) -> Vec<Option<usize>> {
    let mut level = vec![None; adj.len()];
    level[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &v in &adj[u] {
            if level[v].is_none() {
                level[v] = Some(level[u].unwrap() + 1);
                q.push_back(v);
            }
        }
    }
    level
}

/// Whether the digraph is strongly connected (and has at least one edge).
pub fn graph_irreducible(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    if n == 0 || adj.iter().all(Vec::is_empty) {
        return false;
    }
    if reach(adj, 0).iter().any(Option::is_none) {
        return false;
    }
    let mut rev = vec![Vec::new(); n];
    for (u, vs) in adj.iter().enumerate() {
        for &v in vs {
            rev[v].push(u);
        }
    }
    reach(&rev, 0).iter().all(Option::is_some)
}

/// Period of a strongly connected digraph: the gcd of `level(u) + 1 − level(v)`
/// over all edges `u → v`, with BFS levels from vertex 0.
pub fn graph_period(adj: &[Vec<usize>]) -> usize {
    let level = reach(adj, 0);
    let mut g: i64 = 0;
    for (u, vs) in adj.iter().enumerate() {
        for &v in vs {
            let d = level[u].unwrap() as i64 + 1 - level[v].unwrap() as i64;
            g = g.gcd(&d);
        }
    }
    g as usize
}

pub fn classify_graph(adj: &[Vec<usize>]) -> Primitivity {
    if !graph_irreducible(adj) {
        return Primitivity::Reducible;
    }
    match graph_period(adj) {
        1 => Primitivity::Primitive,
        p => Primitivity::Periodic(p),
    }
}

pub fn primitive_test_int(m: &IntMatrix) -> Result<Primitivity> {
    m.require_square()?;
    if let Some((i, j, _)) = m.entries().find(|(_, _, x)| x.is_negative()) {
        return Err(Error::NegativeCoefficient {
            row: i,
            col: j,
            detail: "integer entry is negative".into(),
        });
    }
    Ok(classify_graph(&support_graph(m)))
}

/// Wielandt cross-check: a nonnegative `n×n` matrix is primitive iff its
/// `((n−1)² + 1)`-th power is positive. Done on 0/1 supports.
pub fn primitive_by_wielandt(m: &IntMatrix) -> bool {
    let n = m.rows();
    if n == 0 {
        return false;
    }
    let k = (n - 1) * (n - 1) + 1;
    let b: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| !m.get(i, j).is_zero()).collect())
        .collect();
    let mut p = b.clone();
    for _ in 1..k {
        p = (0..n)
            .map(|i| (0..n).map(|j| (0..n).any(|l| p[i][l] && b[l][j])).collect())
            .collect();
    }
    p.iter().all(|r| r.iter().all(|&x| x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        let p = |rows: &[&[i64]]| primitive_test_int(&IntMatrix::from_i64(rows)).unwrap();
        assert_eq!(p(&[&[0, 5], &[5, 0]]), Primitivity::Periodic(2));
        assert_eq!(p(&[&[1, 1], &[1, 0]]), Primitivity::Primitive);
        assert_eq!(p(&[&[1, 0], &[0, 1]]), Primitivity::Reducible);
        assert_eq!(p(&[&[0]]), Primitivity::Reducible);
        assert_eq!(
            p(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]),
            Primitivity::Periodic(3)
        );
        assert!(primitive_test_int(&IntMatrix::from_i64(&[&[-1]])).is_err());
    }

    #[test]
    fn wielandt_agrees_exhaustively_on_3x3_supports() {
        for mask in 0u32..512 {
            let m = IntMatrix::from_fn(3, 3, Zero::zero(), |i, j| {
                ((mask >> (3 * i + j)) & 1).into()
            });
            let by_graph = primitive_test_int(&m).unwrap() == Primitivity::Primitive;
            assert_eq!(by_graph, primitive_by_wielandt(&m), "mask {mask}");
        }
    }
}
