//! Periodic-data invariants of matrices over `ℤG`.

use crate::error::{Error, Result};
use crate::groupring::{ConjElem, GRElem};
use crate::groups::GroupRef;
use crate::intlinalg::{self, perron_eigendata, primitive, Primitivity};
use crate::matrix::{MatGR, MatGRPoly};
use crate::poly::GRPoly;
use crate::polymat::{bar, i_minus, tilde};
use crate::ring::Ring;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::VecDeque;

/// `tr(A^k)` for `k = 1..=count`.
pub fn trace_series(a: &MatGR, count: usize) -> Result<Vec<GRElem>> {
    a.require_square()?;
    let mut out = Vec::with_capacity(count);
    let mut p = a.clone();
    for k in 1..=count {
        out.push(p.trace());
        if k < count {
            p = p.mul(a);
        }
    }
    Ok(out)
}

pub fn kappa_series(a: &MatGR, count: usize) -> Result<Vec<ConjElem>> {
    Ok(trace_series(a, count)?.iter().map(GRElem::kappa).collect())
}

/// First `mn` traces together with the integer recursion they satisfy.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceData {
    pub group: GroupRef,
    pub n: usize,
    pub initial: Vec<GRElem>,
    /// `c_1..c_N` with `tr(A^k) = Σ c_i tr(A^{k−i})` for `k > N`.
    pub recursion: Vec<BigInt>,
}

pub fn trace_data(a: &MatGR) -> Result<TraceData> {
    let n = a.require_square()?;
    let group = a.group().clone();
    let big_n = n * group.order();
    let cp = intlinalg::charpoly(&tilde(a))?;
    // x^N + a_1 x^{N-1} + ... + a_N, so c_i = -a_i
    let recursion = (1..=big_n).map(|i| -cp.coeff(big_n - i)).collect();
    Ok(TraceData {
        group,
        n,
        initial: trace_series(a, big_n)?,
        recursion,
    })
}

/// Extends the trace sequence to length `count` using only the recursion.
pub fn extend_traces(td: &TraceData, count: usize) -> Vec<GRElem> {
    let mut seq = td.initial.clone();
    seq.truncate(count);
    while seq.len() < count {
        let k = seq.len() + 1;
        let mut next = GRElem::zero(&td.group);
        for (i, c) in td.recursion.iter().enumerate() {
            let j = k - (i + 1);
            if Zero::is_zero(c) {
                continue;
            }
            let prev = if j == 0 {
                GRElem::from_int(&td.group, td.n)
            } else {
                seq[j - 1].clone()
            };
            next = next.add(&prev.scale(c));
        }
        seq.push(next);
    }
    seq
}

#[derive(Clone, Debug, PartialEq)]
pub struct KappaComparison {
    pub equal: bool,
    pub checked_up_to: usize,
    pub first_disagreement: Option<usize>,
    pub left: Option<ConjElem>,
    pub right: Option<ConjElem>,
}

/// Compares the conjugacy-class trace series of `A` and `B`.
///
/// Agreement for `k ≤ N = m·max(n_A, n_B)` is sufficient: the identity
/// components give `tr(Ã^k)/m`, and `N` power sums fix the characteristic
/// polynomial of the zero-padded lifts, hence one recursion of order `N`
/// that both series obey.
pub fn kappa_series_equal(a: &MatGR, b: &MatGR) -> Result<KappaComparison> {
    a.require_square()?;
    b.require_square()?;
    if !crate::groups::same_group(a.group(), b.group()) {
        return Err(Error::GroupMismatch);
    }
    let m = a.group().order();
    let bound = m * a.rows().max(b.rows()).max(1);
    let ka = kappa_series(a, bound)?;
    let kb = kappa_series(b, bound)?;
    for k in 0..bound {
        if ka[k] != kb[k] {
            return Ok(KappaComparison {
                equal: false,
                checked_up_to: k + 1,
                first_disagreement: Some(k + 1),
                left: Some(ka[k].clone()),
                right: Some(kb[k].clone()),
            });
        }
    }
    Ok(KappaComparison {
        equal: true,
        checked_up_to: bound,
        first_disagreement: None,
        left: None,
        right: None,
    })
}

fn require_abelian(g: &GroupRef) -> Result<()> {
    if g.is_abelian() {
        Ok(())
    } else {
        Err(Error::NonAbelian)
    }
}

/// Determinant of a square polynomial matrix over commutative `ℤG[t]`.
pub fn det_poly_matrix(x: &MatGRPoly) -> Result<GRPoly> {
    require_abelian(x.group())?;
    intlinalg::det(x)
}

/// `det(I − tA)`.
pub fn det_poly(a: &MatGR) -> Result<GRPoly> {
    a.require_square()?;
    det_poly_matrix(&i_minus(&a.times_t()))
}

/// `det(I − A)` for a polynomial matrix `A`.
pub fn det_i_minus(a: &MatGRPoly) -> Result<GRPoly> {
    a.require_square()?;
    det_poly_matrix(&i_minus(a))
}

/// Coefficients `z_0..z_D` of `(det(I − tA))^{-1}`.
pub fn zeta_series(a: &MatGR, order: usize) -> Result<Vec<GRElem>> {
    let d = det_poly(a)?;
    Ok(invert_series(&d, order))
}

/// Power-series inverse of a polynomial with constant term `e`.
pub fn invert_series(d: &GRPoly, order: usize) -> Vec<GRElem> {
    let g = d.group();
    let mut z: Vec<GRElem> = vec![GRElem::one(g)];
    for k in 1..=order {
        let mut s = GRElem::zero(g);
        for i in 1..=k {
            let di = d.coeff(i);
            if !di.is_zero() {
                s = s.add(&di.mul(&z[k - i]));
            }
        }
        z.push(s.neg());
    }
    z
}

#[derive(Clone, Debug, PartialEq)]
pub struct GPrimitivity {
    pub g_primitive: bool,
    pub reason: String,
    pub bar_primitive: bool,
    pub lift: Primitivity,
}

fn require_nonnegative(a: &MatGR) -> Result<()> {
    if let Some((i, j)) = a.first_negative() {
        return Err(Error::NegativeCoefficient {
            row: i,
            col: j,
            detail: a.get(i, j).to_string(),
        });
    }
    Ok(())
}

fn render_set(g: &GroupRef, elems: &[usize]) -> String {
    let names: Vec<&str> = elems.iter().map(|&x| g.name(x)).collect();
    format!("{{{}}}", names.join(", "))
}

/// G-primitivity, decided as primitivity of the lift `Ã`.
pub fn g_primitive_test(a: &MatGR) -> Result<GPrimitivity> {
    a.require_square()?;
    require_nonnegative(a)?;
    let lift = intlinalg::primitive_test_int(&tilde(a))?;
    let barp = intlinalg::primitive_test_int(&bar(a))?;
    let bar_primitive = barp == Primitivity::Primitive;
    let reason = match (&lift, &barp) {
        (Primitivity::Primitive, _) => "lift is primitive".to_string(),
        (_, Primitivity::Reducible) => "bar(A) is reducible".to_string(),
        (Primitivity::Periodic(p), _) => format!("period {p}"),
        (Primitivity::Reducible, _) => {
            let h = weight_subgroup(a, 0)?;
            format!("H_1 = {} is a proper subgroup", render_set(a.group(), &h))
        }
    };
    Ok(GPrimitivity {
        g_primitive: lift == Primitivity::Primitive,
        reason,
        bar_primitive,
        lift,
    })
}

/// Independent criterion: some `H_i = G` and the lengths `k ≤ mn` with
/// `τ_{k,e} > 0` have gcd 1.
pub fn g_primitive_by_traces(a: &MatGR) -> Result<bool> {
    require_nonnegative(a)?;
    let barp = intlinalg::primitive_test_int(&bar(a))?;
    if barp == Primitivity::Reducible {
        return Ok(false);
    }
    let m = a.group().order();
    if weight_subgroup(a, 0)?.len() != m {
        return Ok(false);
    }
    let mut g = 0usize;
    for (k, tr) in trace_series(a, m * a.rows())?.iter().enumerate() {
        if tr.coeff(0).is_positive() {
            g = g.gcd(&(k + 1));
        }
    }
    Ok(g == 1)
}

/// `H_i`: weights of closed walks at `i`, by reachability of `(i, g)` from
/// `(i, e)` in the covering graph on vertex/group-element pairs.
pub fn weight_subgroup(a: &MatGR, i: usize) -> Result<Vec<usize>> {
    let n = a.require_square()?;
    require_nonnegative(a)?;
    if i >= n {
        return Err(Error::Dimension(format!("vertex {i} out of range")));
    }
    if !primitive::graph_irreducible(&primitive::support_graph(&bar(a))) {
        return Err(Error::Reducible("bar(A) is not irreducible".into()));
    }
    let h = covering_reach(a, i);
    Ok(h)
}

fn covering_reach(a: &MatGR, i: usize) -> Vec<usize> {
    let g = a.group();
    let (n, m) = (a.rows(), g.order());
    let labels: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|v| {
            (0..n)
                .flat_map(|w| a.get(v, w).support().into_iter().map(move |x| (w, x)))
                .collect()
        })
        .collect();
    let mut seen = vec![false; n * m];
    seen[i * m] = true;
    let mut q = VecDeque::from([(i, 0usize)]);
    while let Some((v, h)) = q.pop_front() {
        for &(w, x) in &labels[v] {
            let hx = g.mul(h, x);
            if !seen[w * m + hx] {
                seen[w * m + hx] = true;
                q.push_back((w, hx));
            }
        }
    }
    (0..m).filter(|&x| seen[i * m + x]).collect()
}

/// All weight subgroups, checked to be pairwise conjugate.
pub fn weight_subgroups(a: &MatGR) -> Result<Vec<Vec<usize>>> {
    let n = a.require_square()?;
    let hs: Vec<Vec<usize>> = (0..n)
        .map(|i| weight_subgroup(a, i))
        .collect::<Result<_>>()?;
    let g = a.group();
    for h in &hs[1..] {
        let conj = (0..g.order()).any(|x| {
            let mut c: Vec<usize> = hs[0]
                .iter()
                .map(|&y| g.mul(g.mul(x, y), g.inv(x)))
                .collect();
            c.sort_unstable();
            &c == h
        });
        if !conj {
            return Err(Error::Precondition(
                "weight subgroups are not conjugate".into(),
            ));
        }
    }
    Ok(hs)
}

/// `m·τ_{k,e} = τ̄_k` for `k = 1..mn`.
pub fn u_power_test(a: &MatGR) -> Result<bool> {
    let m = BigInt::from(a.group().order());
    let n = a.require_square()?;
    let traces = trace_series(a, a.group().order() * n)?;
    Ok(traces.iter().all(|t| &m * t.coeff(0) == t.augment()))
}

/// Smallest `p ≤ max_p` such that every entry of `A^p` lies in `uℤ`.
pub fn u_power_exponent(a: &MatGR, max_p: usize) -> Option<usize> {
    let mut p = a.clone();
    for k in 1..=max_p {
        if p.entries().all(|(_, _, x)| x.in_u_z()) {
            return Some(k);
        }
        p = p.mul(a);
    }
    None
}

#[derive(Clone, Debug, PartialEq)]
pub struct PerronReport {
    pub lambda: f64,
    pub k: usize,
    pub deviation: f64,
    pub tol: f64,
    pub pass: bool,
}

/// Compares `(A/λ)^k` with `u·(1/m)·r̄ℓ̄` in floating point.
pub fn perron_limit_check(a: &MatGR, k: usize, tol: f64) -> Result<PerronReport> {
    let gp = g_primitive_test(a)?;
    if !gp.g_primitive {
        return Err(Error::NotGPrimitive(gp.reason));
    }
    let pd = perron_eigendata(&bar(a), tol.min(1e-12))?;
    let g = a.group();
    let (n, m) = (a.rows(), g.order());
    let scaled: Vec<Vec<f64>> = (0..n * n)
        .map(|ij| {
            let x = a.get(ij / n, ij % n);
            (0..m)
                .map(|h| x.coeff(h).to_f64().unwrap() / pd.lambda)
                .collect()
        })
        .collect();
    let mut power: Vec<Vec<f64>> = (0..n * n)
        .map(|ij| {
            let mut v = vec![0.0; m];
            if ij / n == ij % n {
                v[0] = 1.0;
            }
            v
        })
        .collect();
    for _ in 0..k {
        let mut next = vec![vec![0.0; m]; n * n];
        for i in 0..n {
            for l in 0..n {
                let x = &power[i * n + l];
                for j in 0..n {
                    let y = &scaled[l * n + j];
                    let out = &mut next[i * n + j];
                    for (p, xp) in x.iter().enumerate() {
                        if *xp == 0.0 {
                            continue;
                        }
                        for (q, yq) in y.iter().enumerate() {
                            out[g.mul(p, q)] += xp * yq;
                        }
                    }
                }
            }
        }
        power = next;
    }
    let mut deviation: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let target = pd.right_vec[i] * pd.left_vec[j] / m as f64;
            for v in &power[i * n + j] {
                deviation = deviation.max((v - target).abs());
            }
        }
    }
    Ok(PerronReport {
        lambda: pd.lambda,
        k,
        deviation,
        tol,
        pass: deviation <= tol,
    })
}
