//! Brute-force periodic-point counts on the labeled edge graph, written
//! without any matrix arithmetic so it can serve as ground truth.

use crate::error::{Error, Result};
use crate::groupring::GRElem;
use crate::groups::GroupRef;
use crate::matrix::MatGR;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Edge `(source, target, label)`; an entry `Σ n_g g` contributes `n_g`
/// parallel `g`-labeled edges.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub group: GroupRef,
    pub vertices: usize,
    pub edges: Vec<(usize, usize, usize)>,
}

impl LabeledGraph {
    pub fn from_matrix(a: &MatGR) -> Result<Self> {
        a.require_square()?;
        let mut edges = Vec::new();
        for (i, j, x) in a.entries() {
            for (g, c) in x.coeffs().iter().enumerate() {
                if c.is_negative() {
                    return Err(Error::NegativeCoefficient {
                        row: i,
                        col: j,
                        detail: x.to_string(),
                    });
                }
                let k = c
                    .to_usize()
                    .ok_or_else(|| Error::Budget("edge multiplicity too large".into()))?;
                edges.extend(std::iter::repeat_n((i, j, g), k));
            }
        }
        Ok(LabeledGraph {
            group: a.group().clone(),
            vertices: a.rows(),
            edges,
        })
    }

    fn out_edges(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.vertices];
        for &(s, t, g) in &self.edges {
            out[s].push((t, g));
        }
        out
    }

    /// Number of closed edge paths of length `n`, ignoring labels.
    pub fn closed_path_count(&self, n: usize) -> BigInt {
        let out = self.out_edges();
        let mut total = BigInt::zero();
        for s in 0..self.vertices {
            let mut cur = vec![BigInt::zero(); self.vertices];
            cur[s] = BigInt::one();
            for _ in 0..n {
                let mut next = vec![BigInt::zero(); self.vertices];
                for (v, c) in cur.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for &(w, _) in &out[v] {
                        next[w] += c;
                    }
                }
                cur = next;
            }
            total += &cur[s];
        }
        total
    }

    fn check_budget(&self, n: usize, budget: u64) -> Result<()> {
        let count = self.closed_path_count(n);
        if count > BigInt::from(budget) {
            return Err(Error::Budget(format!(
                "{count} closed paths of length {n} exceed the budget {budget}"
            )));
        }
        Ok(())
    }
}

/// Sum over all closed paths of length `n` (every starting phase) of the
/// ordered label product.
pub fn periodic_weights(graph: &LabeledGraph, n: usize, budget: u64) -> Result<GRElem> {
    graph.check_budget(n, budget)?;
    let g = &graph.group;
    let out = graph.out_edges();
    let mut coeffs = vec![BigInt::zero(); g.order()];
    for s in 0..graph.vertices {
        // (current vertex, weight so far) -> number of paths
        let mut cur: HashMap<(usize, usize), BigInt> = HashMap::from([((s, 0), BigInt::one())]);
        for _ in 0..n {
            let mut next: HashMap<(usize, usize), BigInt> = HashMap::new();
            for (&(v, w), c) in &cur {
                for &(t, label) in &out[v] {
                    *next.entry((t, g.mul(w, label))).or_default() += c;
                }
            }
            cur = next;
        }
        for ((v, w), c) in cur {
            if v == s {
                coeffs[w] += c;
            }
        }
    }
    Ok(GRElem::from_coeffs(g, coeffs))
}

/// Fixed points of the `n`-th power of the left skew product
/// `(x, h) ↦ (Tx, h·ℓ(x₀))`, counted as closed paths in the skew graph on
/// vertex/group-element pairs.
pub fn skew_fixed_count(graph: &LabeledGraph, n: usize, budget: u64) -> Result<BigInt> {
    graph.check_budget(n, budget)?;
    let g = &graph.group;
    let m = g.order();
    let out = graph.out_edges();
    let nodes = graph.vertices * m;
    let mut total = BigInt::zero();
    for start in 0..nodes {
        let mut cur = vec![BigInt::zero(); nodes];
        cur[start] = BigInt::one();
        for _ in 0..n {
            let mut next = vec![BigInt::zero(); nodes];
            for (node, c) in cur.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (v, h) = (node / m, node % m);
                for &(t, label) in &out[v] {
                    next[t * m + g.mul(h, label)] += c;
                }
            }
            cur = next;
        }
        total += &cur[start];
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_group, GroupSpec};
    use crate::parse::parse_const_matrix;

    #[test]
    fn small_graphs() {
        let c2 = make_group(&GroupSpec::cyclic(2)).unwrap();
        let loop_g = LabeledGraph::from_matrix(&parse_const_matrix(&c2, "[[g]]").unwrap()).unwrap();
        assert_eq!(
            periodic_weights(&loop_g, 3, DEFAULT_BUDGET)
                .unwrap()
                .to_string(),
            "g"
        );
        let u = LabeledGraph::from_matrix(&parse_const_matrix(&c2, "[[e+g]]").unwrap()).unwrap();
        assert_eq!(
            periodic_weights(&u, 2, DEFAULT_BUDGET).unwrap().to_string(),
            "2*e + 2*g"
        );
        assert_eq!(
            skew_fixed_count(&u, 1, DEFAULT_BUDGET).unwrap(),
            BigInt::from(2)
        );
        let five = LabeledGraph::from_matrix(&parse_const_matrix(&c2, "[[5*g]]").unwrap()).unwrap();
        assert_eq!(
            skew_fixed_count(&five, 2, DEFAULT_BUDGET).unwrap(),
            BigInt::from(50)
        );
        assert_eq!(
            skew_fixed_count(&five, 3, DEFAULT_BUDGET).unwrap(),
            BigInt::zero()
        );
        assert!(matches!(
            periodic_weights(&five, 20, 1000),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn three_cycle() {
        let s4 = make_group(&GroupSpec::Symmetric { n: 4 }).unwrap();
        let m =
            parse_const_matrix(&s4, "[[0, (143), 0], [0, 0, (123)], [(12)(34), 0, 0]]").unwrap();
        let gr = LabeledGraph::from_matrix(&m).unwrap();
        assert_eq!(
            periodic_weights(&gr, 3, DEFAULT_BUDGET)
                .unwrap()
                .to_string(),
            "3*e"
        );
    }
}
