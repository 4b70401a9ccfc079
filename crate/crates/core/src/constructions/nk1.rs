use crate::equivalence::{box_construct_in, Mode, MoveChain};
use crate::error::{Error, Result};
use crate::groupring::GRElem;
use crate::groups::{make_group, GroupRef, GroupSpec};
use crate::intlinalg::adjugate;
use crate::invariants::{det_i_minus, det_poly_matrix, g_primitive_test};
use crate::matrix::{MatGR, MatGRPoly, Matrix};
use crate::parse::parse_poly;
use crate::poly::GRPoly;
use crate::polymat::{eval_at_zero, i_minus};
use crate::ring::Ring;
use num_bigint::BigInt;
use num_traits::{One, Signed};

const ENTRY_A: &str = "(1 - g^2)*(t - 2*t^2 + 2*t^3 - g + t*g + t^2*g)";
const ENTRY_B: &str =
    "(1 - g^2)*(1 + 2*t - t^2 - t^3 - 2*t^4 + g - t*g - 2*t^2*g - 3*t^3*g + 2*t^4*g)";
const ENTRY_C: &str =
    "(1 - g^2)*(-1 + 2*t - 5*t^2 + 7*t^3 - 3*t^4 + 2*t^5 - g + 2*t*g - 2*t^3*g + 3*t^4*g - 2*t^5*g)";
const ENTRY_D: &str =
    "(1 - g^2)*(2 + t - 2*t^2 - 4*t^4 - 2*t^5 + g - 3*t*g - t^2*g - 4*t^3*g + 6*t^4*g - 4*t^5*g + 4*t^6*g)";

/// The entries `a, b, c, d` over `ℤ[C4][t]`, `g` a generator.
pub fn nk1_entries(c4: &GroupRef) -> Result<[GRPoly; 4]> {
    if c4.order() != 4
        || !c4.is_abelian()
        || c4.lookup("g").is_none_or(|g| c4.pow(g, 2) == c4.identity())
    {
        return Err(Error::InvalidGroup(
            "expected the cyclic group of order 4 generated by g".into(),
        ));
    }
    Ok([
        parse_poly(c4, ENTRY_A)?,
        parse_poly(c4, ENTRY_B)?,
        parse_poly(c4, ENTRY_C)?,
        parse_poly(c4, ENTRY_D)?,
    ])
}

fn square2(g: &GroupRef, x: [GRPoly; 4]) -> MatGRPoly {
    let [a, b, c, d] = x;
    Matrix::from_rows(vec![vec![a, b], vec![c, d]], GRPoly::zero(g)).expect("2x2")
}

#[derive(Clone, Debug)]
pub struct Nk1Example {
    pub group: GroupRef,
    pub entries: [GRPoly; 4],
    /// `M = I − (a b; c d)`
    pub m: MatGRPoly,
    pub det: GRPoly,
    pub adj: MatGRPoly,
    pub det_is_one: bool,
    /// `M·adj(M) = adj(M)·M = I`
    pub inverse_ok: bool,
    /// `M(0)·adj(M(0)) = I`
    pub constant_inverse_ok: bool,
}

pub fn nk1_example_c4() -> Result<Nk1Example> {
    let g = make_group(&GroupSpec::cyclic(4))?;
    let entries = nk1_entries(&g)?;
    let m = i_minus(&square2(&g, entries.clone()));
    let det = det_poly_matrix(&m)?;
    let adj = adjugate(&m)?;
    let eye = MatGRPoly::eye_poly(&g, 2);
    let det_is_one = det == GRPoly::one(&g);
    let inverse_ok = m.mul(&adj) == eye && adj.mul(&m) == eye;
    let m0 = eval_at_zero(&m);
    let constant_inverse_ok = m0.mul(&adjugate(&m0)?) == MatGR::eye_gr(&g, 2);
    Ok(Nk1Example {
        group: g,
        entries,
        m,
        det,
        adj,
        det_is_one,
        inverse_ok,
        constant_inverse_ok,
    })
}

/// Inverse of a trivial unit `±h`.
fn unit_inverse(x: &GRElem) -> Option<GRElem> {
    let g = x.group();
    let support = x.support();
    let &[h] = support.as_slice() else {
        return None;
    };
    let c = x.coeff(h);
    if !c.abs().is_one() {
        return None;
    }
    let mut out = GRElem::basis(g, g.inv(h));
    if c.is_negative() {
        out = out.neg();
    }
    Some(out)
}

#[derive(Clone, Debug)]
pub struct Higman {
    /// `M(0)⁻¹`, applied on the right before linearizing. Not part of `chain`.
    pub normalizer: MatGR,
    /// `M·M(0)⁻¹ = I − A` with `A` over `tℤG[t]`.
    pub normalized: MatGRPoly,
    /// `N = A^□`
    pub n: MatGR,
    /// El-only chain from `M·M(0)⁻¹` to `I − tN`.
    pub chain: MoveChain,
    /// `N^size = 0`, checked by powering.
    pub nilpotent: bool,
    /// Smallest `k` with `N^k = 0`, if at most the size.
    pub nilpotency_index: Option<usize>,
}

/// Linearizes `M` with `det M = 1` to `I − tN`: right-multiply by `M(0)⁻¹`,
/// then apply the companion linearization with el-only moves.
pub fn higman_linearize(m: &MatGRPoly) -> Result<Higman> {
    let n = m.require_square()?;
    let g = m.group();
    let det = det_poly_matrix(m)?;
    if det != GRPoly::one(g) {
        return Err(Error::Precondition(format!("det(M) = {det}, expected 1")));
    }
    let m0 = eval_at_zero(m);
    let d0 = crate::intlinalg::det(&m0)?;
    let d0_inv = unit_inverse(&d0).ok_or_else(|| {
        Error::Precondition(format!("det(M(0)) = {d0} is not a unit of the form ±h"))
    })?;
    let normalizer = adjugate(&m0)?.scale_right(&d0_inv);
    if m0.mul(&normalizer) != MatGR::eye_gr(g, n) {
        return Err(Error::Certificate("M(0) inverse check failed".into()));
    }
    let normalized = m.mul(&normalizer.to_poly());
    let a = i_minus(&normalized);
    let (big, chain) = box_construct_in(&a, Mode::ElOnly)?;
    let size = big.rows();
    let mut power = MatGR::eye_gr(g, size);
    let mut nilpotency_index = None;
    for k in 1..=size {
        power = power.mul(&big);
        if power.is_zero() {
            nilpotency_index = Some(k);
            break;
        }
    }
    Ok(Higman {
        normalizer,
        normalized,
        n: big,
        chain,
        nilpotent: nilpotency_index.is_some(),
        nilpotency_index,
    })
}

#[derive(Clone, Debug)]
pub struct KLPair {
    pub k: MatGRPoly,
    /// The five-matrix product `P·diag(K, (a b; c d))·P⁻¹`.
    pub l: MatGRPoly,
    /// The closed form as displayed alongside the product.
    pub displayed: MatGRPoly,
    /// Rows where the product and the displayed form disagree.
    pub displayed_mismatch_rows: Vec<usize>,
    pub k_zero_rows: Vec<usize>,
    pub l_zero_rows: Vec<usize>,
    /// Entries of `L` with a negative coefficient.
    pub l_negative_entries: Vec<(usize, usize)>,
    /// `K` and `L` both over `tℤ₊G[t]`.
    pub positive: bool,
    /// `g_primitive_test` on `K^□` and `L^□`, when both boxes are defined.
    pub k_box_primitive: Option<bool>,
    pub l_box_primitive: Option<bool>,
    /// `det(I − L) = det(I − K)·det(I − (a b; c d))`
    pub det_factorizes: bool,
    /// `det(I − L) = det(I − K)`
    pub det_equal: bool,
}

fn outer(g: &GroupRef, sign: i64) -> (MatGRPoly, MatGRPoly) {
    let one = GRPoly::from_int(g, sign);
    let mut p1 = MatGRPoly::eye_poly(g, 4);
    p1.set(2, 0, one.clone());
    p1.set(3, 0, one.clone());
    let mut p2 = MatGRPoly::eye_poly(g, 4);
    p2.set(1, 2, one.neg());
    p2.set(1, 3, one.neg());
    (p1, p2)
}

/// The 4×4 product for arbitrary `e, f` and `x = (a, b, c, d)`.
pub fn kl_product(e: &GRPoly, f: &GRPoly, x: &[GRPoly; 4]) -> MatGRPoly {
    let g = e.group();
    let (p1, p2) = outer(g, 1);
    let (p5, p4) = outer(g, -1);
    let z = GRPoly::zero(g);
    let [a, b, c, d] = x;
    let mid = Matrix::from_rows(
        vec![
            vec![e.clone(), f.clone(), z.clone(), z.clone()],
            vec![e.clone(), f.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), a.clone(), b.clone()],
            vec![z.clone(), z.clone(), c.clone(), d.clone()],
        ],
        z.clone(),
    )
    .expect("4x4");
    p1.mul(&p2).mul(&mid).mul(&p4).mul(&p5)
}

/// The closed form printed next to the product.
pub fn kl_displayed(e: &GRPoly, f: &GRPoly, x: &[GRPoly; 4]) -> MatGRPoly {
    let g = e.group();
    let [a, b, c, d] = x;
    let e2f = e.sub(&f.scale_int(&BigInt::from(2)));
    let z = GRPoly::zero(g);
    Matrix::from_rows(
        vec![
            vec![e2f.clone(), f.clone(), f.clone(), f.clone()],
            vec![
                e2f.add(&a.add(b).add(c).add(d)),
                f.clone(),
                f.sub(&a.add(c)),
                f.sub(&b.add(d)),
            ],
            vec![e.sub(&a.add(b)), z.clone(), f.sub(c), f.sub(d)],
            vec![e.sub(&c.add(d)), z, f.sub(a), f.sub(b)],
        ],
        GRPoly::zero(g),
    )
    .expect("4x4")
}

/// Rows on which product and displayed form disagree for indeterminate
/// `e, f, a, b, c, d`. Both sides are linear in these six entries with
/// integer outer factors, so it suffices to compare on unit inputs.
pub fn kl_generic_mismatch(g: &GroupRef) -> Vec<usize> {
    let mut rows = Vec::new();
    for slot in 0..6 {
        let mut v: Vec<GRPoly> = vec![GRPoly::zero(g); 6];
        v[slot] = GRPoly::one(g);
        let x = [v[2].clone(), v[3].clone(), v[4].clone(), v[5].clone()];
        let (p, q) = (kl_product(&v[0], &v[1], &x), kl_displayed(&v[0], &v[1], &x));
        for i in 0..4 {
            if p.row(i) != q.row(i) && !rows.contains(&i) {
                rows.push(i);
            }
        }
    }
    rows.sort_unstable();
    rows
}

fn zero_rows(m: &MatGRPoly) -> Vec<usize> {
    (0..m.rows())
        .filter(|&i| m.row(i).iter().all(|p| p.is_zero()))
        .collect()
}

fn over_t_nonneg(m: &MatGRPoly) -> bool {
    m.is_nonnegative() && m.entries().all(|(_, _, p)| !p.has_constant_term())
}

fn box_primitive(m: &MatGRPoly) -> Result<Option<bool>> {
    if !over_t_nonneg(m) || m.is_zero() {
        return Ok(None);
    }
    let sq = crate::equivalence::box_matrix(m)?;
    Ok(Some(g_primitive_test(&sq)?.g_primitive))
}

pub fn kl_pair_with(e: &GRPoly, f: &GRPoly, x: &[GRPoly; 4]) -> Result<KLPair> {
    let g = e.group();
    let k = Matrix::from_rows(
        vec![vec![e.clone(), f.clone()], vec![e.clone(), f.clone()]],
        GRPoly::zero(g),
    )?;
    let l = kl_product(e, f, x);
    let displayed = kl_displayed(e, f, x);
    let displayed_mismatch_rows = (0..4).filter(|&i| l.row(i) != displayed.row(i)).collect();
    let l_negative_entries = l
        .entries()
        .filter(|(_, _, p)| !p.is_nonnegative())
        .map(|(i, j, _)| (i, j))
        .collect();
    let positive = over_t_nonneg(&k) && over_t_nonneg(&l);
    let (k_box_primitive, l_box_primitive) = if positive {
        (box_primitive(&k)?, box_primitive(&l)?)
    } else {
        (None, None)
    };
    let dl = det_i_minus(&l)?;
    let dk = det_i_minus(&k)?;
    let dm = det_i_minus(&square2(g, x.clone()))?;
    Ok(KLPair {
        k_zero_rows: zero_rows(&k),
        l_zero_rows: zero_rows(&l),
        k,
        l,
        displayed,
        displayed_mismatch_rows,
        l_negative_entries,
        positive,
        k_box_primitive,
        l_box_primitive,
        det_factorizes: dl == dk.mul(&dm),
        det_equal: dl == dk,
    })
}

/// `kl_pair_with` on the entries of the `NK₁` example.
pub fn kl_pair(e: &GRPoly, f: &GRPoly) -> Result<KLPair> {
    let x = nk1_entries(e.group())?;
    kl_pair_with(e, f, &x)
}

/// Entries `I − M·M(0)⁻¹` of the normalized example, all in `tℤG[t]`.
pub fn nk1_normalized_entries() -> Result<[GRPoly; 4]> {
    let ex = nk1_example_c4()?;
    let h = higman_linearize(&ex.m)?;
    let a = i_minus(&h.normalized);
    Ok([
        a.get(0, 0).clone(),
        a.get(0, 1).clone(),
        a.get(1, 0).clone(),
        a.get(1, 1).clone(),
    ])
}

/// `c·u·(t + … + t^deg)`
pub fn u_band(g: &GroupRef, c: u64, deg: usize) -> GRPoly {
    let cu = GRElem::u(g).scale(&BigInt::from(c));
    GRPoly::from_terms(g, (1..=deg.max(1)).map(|d| (d, cu.clone())))
}

/// Smallest `c_f`, then smallest `c_e`, with `f = c_f·u·band` and
/// `e = c_e·u·band` (band covering every degree of `a..d`) making `K` and
/// `L` positive.
pub fn scan_kl(x: &[GRPoly; 4], max_cf: u64, max_ce: u64) -> Result<Option<(GRPoly, GRPoly)>> {
    let g = x[0].group();
    let deg = x.iter().filter_map(|p| p.degree()).max().unwrap_or(1);
    let zero = GRPoly::zero(g);
    for cf in 1..=max_cf {
        let f = u_band(g, cf, deg);
        // columns 1..3 of L do not involve e
        let l = kl_product(&zero, &f, x);
        let cols_ok = (0..4).all(|i| {
            (1..4).all(|j| l.get(i, j).is_nonnegative() && !l.get(i, j).has_constant_term())
        });
        if !cols_ok {
            continue;
        }
        for ce in 1..=max_ce {
            let e = u_band(g, ce, deg);
            let l = kl_product(&e, &f, x);
            if over_t_nonneg(&l)
                && over_t_nonneg(&Matrix::from_rows(
                    vec![vec![e.clone(), f.clone()]],
                    zero.clone(),
                )?)
            {
                return Ok(Some((e, f)));
            }
        }
    }
    Ok(None)
}

/// Whether any positive `e, f` can make `L` nonnegative: the constant terms
/// of `e, f` must vanish for `K` to be in NZC form, so column entries
/// `f ± x` keep the constant terms of `a..d`.
pub fn constant_obstruction(x: &[GRPoly; 4]) -> Vec<(usize, GRElem)> {
    let g = x[0].group();
    let zero = GRPoly::zero(g);
    let l = kl_product(&zero, &zero, x);
    let mut out = Vec::new();
    for (i, j, p) in l.entries() {
        let c = p.constant_term();
        if !c.is_nonnegative() {
            out.push((i * 4 + j, c));
        }
    }
    out
}
