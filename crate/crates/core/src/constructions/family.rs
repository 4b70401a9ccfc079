use crate::equivalence::{apply_move, ChainBuilder, ElementaryMove, Mode, MoveChain};
use crate::error::{Error, Result};
use crate::groupring::GRElem;
use crate::groups::GroupRef;
use crate::intlinalg::{smith_normal_form, Cokernel};
use crate::matrix::{IntMatrix, MatGRPoly};
use crate::poly::GRPoly;
use crate::polymat::{bar_poly, eval_at_one, i_minus, tilde};
use crate::ring::Ring;
use num_bigint::BigInt;

#[derive(Clone, Debug)]
pub struct FamilyParams {
    pub group: GroupRef,
    /// Index of the non-identity element `g`.
    pub g: usize,
    /// Exponents `n_1 < … < n_k` of `p_k = (e − g)(t^{n_1} + … + t^{n_k})`.
    pub exponents: Vec<usize>,
}

impl FamilyParams {
    pub fn new(group: &GroupRef, g: usize, mut exponents: Vec<usize>) -> Result<Self> {
        if g >= group.order() || g == group.identity() {
            return Err(Error::Precondition(
                "g must be a non-identity element".into(),
            ));
        }
        exponents.sort_unstable();
        if exponents.contains(&0) || exponents.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition(
                "exponents must be distinct and positive".into(),
            ));
        }
        Ok(FamilyParams {
            group: group.clone(),
            g,
            exponents,
        })
    }

    pub fn k(&self) -> usize {
        self.exponents.len()
    }

    pub fn p(&self) -> GRPoly {
        let g = &self.group;
        let c = GRElem::one(g).sub(&GRElem::basis(g, self.g));
        GRPoly::from_terms(g, self.exponents.iter().map(|&n| (n, c.clone())))
    }
}

#[derive(Clone, Debug)]
pub struct Family {
    pub c: MatGRPoly,
    pub d: MatGRPoly,
    pub f: MatGRPoly,
    pub u: MatGRPoly,
    pub v: MatGRPoly,
    pub p: GRPoly,
    /// `U⁻¹CU` equals the closed form of `D`.
    pub d_identity: bool,
    /// `VDV⁻¹` equals the closed form of `F`.
    pub f_identity: bool,
}

fn grid(g: &GroupRef, rows: &[[&GRPoly; 5]; 5]) -> MatGRPoly {
    MatGRPoly::from_fn(5, 5, GRPoly::zero(g), |i, j| rows[i][j].clone())
}

/// The 5×5 matrices `C_k`, `D_k`, `F_k` built from `s = ut`, `w = et`.
pub fn family_ck_fk(params: &FamilyParams) -> Result<Family> {
    let g = &params.group;
    let s = GRPoly::monomial(GRElem::u(g), 1);
    let w = GRPoly::t(g);
    let p = params.p();
    let z = GRPoly::zero(g);
    let two = |x: &GRPoly| x.scale_int(&BigInt::from(2));
    let (s2, s4) = (two(&s), s.scale_int(&BigInt::from(4)));
    let c = grid(
        g,
        &[
            [&s4, &s, &s, &z, &z],
            [&s4, &s, &s, &z, &z],
            [&s4, &s2, &s2, &z, &z],
            [&z, &z, &z, &w, &p],
            [&z, &z, &z, &z, &w],
        ],
    );
    let s2w = s2.sub(&w);
    let s2wp = s2w.sub(&p);
    let d_closed = grid(
        g,
        &[
            [&s4, &s, &s, &s, &s],
            [&s4, &s, &s, &s, &s],
            [&s4, &s2, &s2, &s2w, &s2wp],
            [&z, &z, &z, &w, &p],
            [&z, &z, &z, &z, &w],
        ],
    );
    let (w2p, sw, sp) = (two(&w).add(&p), s.add(&w), s.add(&p));
    let f_closed = grid(
        g,
        &[
            [&s2, &s, &s, &s, &s],
            [&s2, &s, &s, &s, &s],
            [&w2p, &s2, &s2, &s2w, &s2wp],
            [&s2wp, &s, &s, &sw, &sp],
            [&s2w, &s, &s, &s, &sw],
        ],
    );
    let one = GRPoly::one(g);
    let mut u = MatGRPoly::eye_poly(g, 5);
    u.set(2, 3, one.clone());
    u.set(2, 4, one.clone());
    let mut u_inv = MatGRPoly::eye_poly(g, 5);
    u_inv.set(2, 3, one.neg());
    u_inv.set(2, 4, one.neg());
    let mut v = MatGRPoly::eye_poly(g, 5);
    v.set(3, 0, one.clone());
    v.set(4, 0, one.clone());
    let mut v_inv = MatGRPoly::eye_poly(g, 5);
    v_inv.set(3, 0, one.neg());
    v_inv.set(4, 0, one.neg());
    let eye = MatGRPoly::eye_poly(g, 5);
    if u.mul(&u_inv) != eye || v.mul(&v_inv) != eye {
        return Err(Error::Certificate("U or V inverse is wrong".into()));
    }
    let d_identity = u_inv.mul(&c).mul(&u) == d_closed;
    let f_identity = v.mul(&d_closed).mul(&v_inv) == f_closed;
    Ok(Family {
        c,
        d: d_closed,
        f: f_closed,
        u,
        v,
        p,
        d_identity,
        f_identity,
    })
}

#[derive(Clone, Debug)]
pub struct Repair {
    /// `B_k`, reached from `F_k` by right moves `E_25(s^i)` then `E_21(s^i)`.
    pub b: MatGRPoly,
    pub chain: MoveChain,
    /// Every intermediate `bar(B_(i))` has entries in `tℤ₊[t]`.
    pub bar_positive: bool,
    /// `B_k` has entries in `tℤ₊G[t]`.
    pub positive: bool,
}

fn in_t_nonneg(m: &MatGRPoly) -> bool {
    m.is_nonnegative() && m.entries().all(|(_, _, p)| !p.has_constant_term())
}

/// The positivity repair `F_k → B_k` as an el-only move script.
pub fn repair_family(f: &MatGRPoly, k: usize) -> Result<Repair> {
    let g = f.group();
    let s = GRPoly::monomial(GRElem::u(g), 1);
    let mut moves = Vec::new();
    for col in [4, 0] {
        let mut si = GRPoly::one(g);
        for _ in 0..k {
            si = si.mul(&s);
            moves.push(ElementaryMove::right(1, col, si.clone()));
        }
    }
    let mut b = ChainBuilder::new(i_minus(f), Mode::ElOnly)?;
    let bar_ok = |x: &MatGRPoly| {
        let m = i_minus(x);
        bar_poly(&m)
            .entries()
            .all(|(_, _, p)| p.is_nonnegative() && p.coeff(0) == BigInt::from(0))
    };
    let mut bar_positive = bar_ok(b.current());
    for mv in moves {
        b.push(mv)?;
        bar_positive &= bar_ok(b.current());
    }
    let chain = b.finish();
    let bk = i_minus(&chain.end);
    let positive = in_t_nonneg(&bk);
    Ok(Repair {
        b: bk,
        chain,
        bar_positive,
        positive,
    })
}

fn combinations(pool: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, pool: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=pool {
            cur.push(x);
            rec(x + 1, pool, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, pool, k, &mut Vec::new(), &mut out);
    out
}

/// First exponent set, in lexicographic order over `{1..=max_exp}`, for which
/// the repaired `B_k` has entries in `tℤ₊G[t]`.
pub fn scan_exponents(
    group: &GroupRef,
    g: usize,
    k: usize,
    max_exp: usize,
) -> Result<Option<FamilyParams>> {
    for exps in combinations(max_exp, k) {
        let params = FamilyParams::new(group, g, exps)?;
        let fam = family_ck_fk(&params)?;
        if repair_family(&fam.f, k)?.positive {
            return Ok(Some(params));
        }
    }
    Ok(None)
}

/// `cok(I − C′)` for `C′` the regular-representation lift of `C` at `t = 1`.
pub fn cokernel_at_one(c: &MatGRPoly) -> Result<Cokernel> {
    c.require_square()?;
    let lifted = tilde(&eval_at_one(c));
    Ok(smith_normal_form(&i_minus(&lifted)).cokernel())
}

/// `cok(k(I − P))` for the cyclic permutation matrix `P` of order `m`.
pub fn cyclic_cokernel(m: usize, k: i64) -> Cokernel {
    let p = IntMatrix::from_fn(m, m, BigInt::from(0), |i, j| {
        BigInt::from(((i + 1) % m == j) as i64)
    });
    let x = i_minus(&p).scale_left(&BigInt::from(k));
    smith_normal_form(&x).cokernel()
}

/// Replays a chain and reports every intermediate state (start included).
pub fn replay_states(chain: &MoveChain) -> Result<Vec<MatGRPoly>> {
    let mut out = vec![chain.start.clone()];
    for mv in &chain.moves {
        let next = apply_move(out.last().unwrap(), mv, chain.mode)?;
        out.push(next);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::{essential_box, verify_chain};
    use crate::groups::{make_group, GroupSpec};
    use crate::invariants::{det_i_minus, g_primitive_test};

    #[test]
    fn identities_and_repair() {
        let c2 = make_group(&GroupSpec::cyclic(2)).unwrap();
        let f0 = family_ck_fk(&FamilyParams::new(&c2, 1, vec![]).unwrap()).unwrap();
        let a = bar_poly(&f0.f);
        let mut dets = Vec::new();
        for k in 0..=3 {
            let params = scan_exponents(&c2, 1, k, 2 * k + 2).unwrap().unwrap();
            assert_eq!(params.exponents, (2..k + 2).collect::<Vec<_>>());
            let fam = family_ck_fk(&params).unwrap();
            assert!(fam.d_identity && fam.f_identity);
            assert_eq!(bar_poly(&fam.f), a);
            dets.push(det_i_minus(&fam.c).unwrap());
            let rep = repair_family(&fam.f, k).unwrap();
            assert!(rep.positive && rep.bar_positive);
            assert!(verify_chain(&rep.chain).valid);
            assert!(
                g_primitive_test(&essential_box(&rep.b).unwrap().0)
                    .unwrap()
                    .g_primitive
            );
        }
        assert!(dets.windows(2).all(|w| w[0] == w[1]));
        assert!(FamilyParams::new(&c2, 0, vec![1]).is_err());
    }

    #[test]
    fn cokernels() {
        for m in [2, 3, 4] {
            for k in [2, 3, 5] {
                let c = cyclic_cokernel(m, k);
                assert_eq!(c.free_rank, 1);
                assert_eq!(c.torsion, vec![BigInt::from(k); m - 1]);
            }
        }
    }
}
