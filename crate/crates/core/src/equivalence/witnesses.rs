use super::moves::{ChainBuilder, ElementaryMove, Mode, MoveChain};
use crate::error::{Error, Result};
use crate::groupring::GRElem;
use crate::groups::same_group;
use crate::matrix::{IntMatrix, MatGR, MatGRPoly};
use crate::polymat::{bar, i_minus, lift_int};
use crate::ring::Ring;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Where the entries of a witness live. Integer witnesses are witnesses over
/// the trivial group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Semiring {
    /// `ℤ₊G`
    NonnegGroupRing,
    /// `ℤG`
    GroupRing,
    /// `ℤ₊G[t]`
    NonnegPoly,
}

impl Semiring {
    fn violation(&self, m: &MatGRPoly) -> Option<String> {
        let constant = matches!(self, Semiring::NonnegGroupRing | Semiring::GroupRing);
        if constant {
            if let Some((i, j, p)) = m.entries().find(|(_, _, p)| p.degree().unwrap_or(0) > 0) {
                return Some(format!("entry ({i},{j}) = {p} is not constant"));
            }
        }
        if matches!(self, Semiring::NonnegGroupRing | Semiring::NonnegPoly) {
            if let Some((i, j)) = m.first_negative() {
                return Some(format!(
                    "entry ({i},{j}) = {} has a negative coefficient",
                    m.get(i, j)
                ));
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SSEWitness {
    pub semiring: Semiring,
    /// Consecutive `(R_i, S_i)` with `A_i = R_i S_i`, `A_{i+1} = S_i R_i`.
    pub steps: Vec<(MatGRPoly, MatGRPoly)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SEWitness {
    pub semiring: Semiring,
    pub lag: usize,
    pub r: MatGRPoly,
    pub s: MatGRPoly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WitnessReport {
    pub valid: bool,
    pub failed_step: Option<usize>,
    pub message: Option<String>,
}

impl WitnessReport {
    fn ok() -> Self {
        WitnessReport {
            valid: true,
            failed_step: None,
            message: None,
        }
    }

    fn fail(step: Option<usize>, msg: impl Into<String>) -> Self {
        WitnessReport {
            valid: false,
            failed_step: step,
            message: Some(msg.into()),
        }
    }
}

fn membership(semiring: Semiring, named: &[(&str, &MatGRPoly)]) -> Option<String> {
    let g = named[0].1.group();
    for (name, m) in named {
        if !same_group(g, m.group()) {
            return Some(format!("{name} is over a different group"));
        }
        if let Some(v) = semiring.violation(m) {
            return Some(format!("{name}: {v}"));
        }
    }
    None
}

pub fn verify_sse(a: &MatGRPoly, b: &MatGRPoly, w: &SSEWitness) -> WitnessReport {
    if let Some(msg) = membership(w.semiring, &[("A", a), ("B", b)]) {
        return WitnessReport::fail(None, msg);
    }
    let mut cur = a.clone();
    for (k, (r, s)) in w.steps.iter().enumerate() {
        if let Some(msg) = membership(w.semiring, &[("A", a), ("R", r), ("S", s)]) {
            return WitnessReport::fail(Some(k), msg);
        }
        match r.checked_mul(s) {
            Ok(rs) if rs == cur => {}
            Ok(_) => return WitnessReport::fail(Some(k), "R S differs from the current matrix"),
            Err(e) => return WitnessReport::fail(Some(k), e.to_string()),
        }
        match s.checked_mul(r) {
            Ok(sr) => cur = sr,
            Err(e) => return WitnessReport::fail(Some(k), e.to_string()),
        }
    }
    if cur != *b {
        return WitnessReport::fail(Some(w.steps.len()), "last S R differs from B");
    }
    WitnessReport::ok()
}

pub fn verify_se(a: &MatGRPoly, b: &MatGRPoly, w: &SEWitness) -> WitnessReport {
    if w.lag == 0 {
        return WitnessReport::fail(None, "lag must be positive");
    }
    if let Some(msg) = membership(w.semiring, &[("A", a), ("B", b), ("R", &w.r), ("S", &w.s)]) {
        return WitnessReport::fail(None, msg);
    }
    if !a.is_square() || !b.is_square() {
        return WitnessReport::fail(None, "A and B must be square");
    }
    let check = |name: &str, lhs: Result<MatGRPoly>, rhs: Result<MatGRPoly>| -> Option<String> {
        match (lhs, rhs) {
            (Ok(x), Ok(y)) if x == y => None,
            (Ok(_), Ok(_)) => Some(format!("{name} fails")),
            (Err(e), _) | (_, Err(e)) => Some(format!("{name}: {e}")),
        }
    };
    let eqs = [
        check("A^lag = R S", Ok(a.pow(w.lag)), w.r.checked_mul(&w.s)),
        check("B^lag = S R", Ok(b.pow(w.lag)), w.s.checked_mul(&w.r)),
        check("A R = R B", a.checked_mul(&w.r), w.r.checked_mul(b)),
        check("S A = B S", w.s.checked_mul(a), b.checked_mul(&w.s)),
    ];
    for (k, e) in eqs.into_iter().enumerate() {
        if let Some(msg) = e {
            return WitnessReport::fail(Some(k), msg);
        }
    }
    WitnessReport::ok()
}

fn require_u_power(name: &str, p: usize, m: &MatGR) -> Result<()> {
    if let Some((i, j, x)) = m.entries().find(|(_, _, x)| !x.in_u_z()) {
        return Err(Error::Precondition(format!(
            "{name}^{p} entry ({i},{j}) = {x} is not in uZ"
        )));
    }
    Ok(())
}

fn constant_int(name: &str, m: &MatGRPoly) -> Result<IntMatrix> {
    if m.group().order() != 1 {
        return Err(Error::Precondition(format!(
            "{name} of the integer witness must be over the trivial group"
        )));
    }
    if m.degree().unwrap_or(0) > 0 {
        return Err(Error::Precondition(format!(
            "{name} of the integer witness is not constant"
        )));
    }
    Ok(bar(&m.coeff_matrix(0)))
}

/// `X^p Y` computed two ways: directly over `ℤG`, and as
/// `u·(1/|G|)·X̄^p Y` with an exact division.
fn lift_factor(name: &str, x: &MatGR, xp: &MatGR, y: &IntMatrix, p: usize) -> Result<MatGR> {
    let g = x.group();
    let direct = xp.mul(&lift_int(y, g));
    let m = BigInt::from(g.order());
    let q = bar(x).pow(p).mul(y);
    let u = GRElem::u(g);
    let mut via_u = MatGR::zeros_gr(g, q.rows(), q.cols());
    for (i, j, v) in q.entries() {
        if (v % &m) != BigInt::from(0) {
            return Err(Error::Precondition(format!(
                "{name}: entry ({i},{j}) = {v} is not divisible by |G| = {m}"
            )));
        }
        via_u.set(i, j, u.scale(&(v / &m)));
    }
    if direct != via_u {
        return Err(Error::Certificate(format!(
            "{name}: the two lift routes disagree"
        )));
    }
    Ok(direct)
}

/// Lifts an integer shift equivalence between `bar(A)` and `bar(B)` to one
/// over `ℤG` of lag `2p + ℓ`, given that `A^p` and `B^p` have entries in `uℤ`:
/// `R̃ = A^p R`, `S̃ = B^p S`.
pub fn forced_se_lift(a: &MatGR, b: &MatGR, p: usize, zw: &SEWitness) -> Result<SEWitness> {
    a.require_square()?;
    b.require_square()?;
    if !same_group(a.group(), b.group()) {
        return Err(Error::GroupMismatch);
    }
    if p == 0 {
        return Err(Error::Precondition("exponent p must be positive".into()));
    }
    let r = constant_int("R", &zw.r)?;
    let s = constant_int("S", &zw.s)?;
    let z = zw.r.group();
    let rep = verify_se(
        &lift_int(&bar(a), z).to_poly(),
        &lift_int(&bar(b), z).to_poly(),
        zw,
    );
    if !rep.valid {
        return Err(Error::Precondition(format!(
            "integer witness does not verify for bar(A), bar(B): {}",
            rep.message.unwrap_or_default()
        )));
    }
    let ap = a.pow(p);
    let bp = b.pow(p);
    require_u_power("A", p, &ap)?;
    require_u_power("B", p, &bp)?;
    let rt = lift_factor("R", a, &ap, &r, p)?;
    let st = lift_factor("S", b, &bp, &s, p)?;
    let positive = zw.semiring != Semiring::GroupRing
        && rt.is_nonnegative()
        && st.is_nonnegative()
        && a.is_nonnegative()
        && b.is_nonnegative();
    let out = SEWitness {
        semiring: if positive {
            Semiring::NonnegGroupRing
        } else {
            Semiring::GroupRing
        },
        lag: 2 * p + zw.lag,
        r: rt.to_poly(),
        s: st.to_poly(),
    };
    let check = verify_se(&a.to_poly(), &b.to_poly(), &out);
    if !check.valid {
        return Err(Error::Certificate(format!(
            "lifted witness fails: {}",
            check.message.unwrap_or_default()
        )));
    }
    Ok(out)
}

/// The positive equivalence behind one elementary SSE `A = RS`, `B = SR`:
/// from `I − RS` (padded) to `I_n ⊕ (I − SR)` through the block products
/// `(I 0; S I)(I −R; 0 I)(I−RS ⊕ I)(I 0; −S I)(I R; 0 I)`. The identity
/// block of the end sits in the top-left corner.
pub fn sse_step_chain(r: &MatGRPoly, s: &MatGRPoly) -> Result<MoveChain> {
    let (n, k) = (r.rows(), r.cols());
    if s.rows() != k || s.cols() != n {
        return Err(Error::Dimension(format!(
            "R is {n}x{k} but S is {}x{}",
            s.rows(),
            s.cols()
        )));
    }
    let mut b = ChainBuilder::new(i_minus(&r.mul(s)), Mode::Positive)?;
    let mut first = true;
    let mut push = |b: &mut ChainBuilder, mv: ElementaryMove| -> Result<()> {
        if mv.r.is_zero() {
            return Ok(());
        }
        let mv = if first { mv.padded(n + k) } else { mv };
        first = false;
        b.push(mv)
    };
    // 1: right by (I 0; -S I): column a += column (n+c)·(-S(c,a))
    for c in 0..k {
        for a in 0..n {
            push(&mut b, ElementaryMove::right(n + c, a, s.get(c, a).neg()))?;
        }
    }
    // 2: left by (I -R; 0 I): row a += -R(a,c)·row (n+c)
    for a in 0..n {
        for c in 0..k {
            push(&mut b, ElementaryMove::left(a, n + c, r.get(a, c).neg()))?;
        }
    }
    // 3: right by (I R; 0 I): column (n+c) += column a·R(a,c)
    for a in 0..n {
        for c in 0..k {
            push(&mut b, ElementaryMove::right(a, n + c, r.get(a, c).clone()))?;
        }
    }
    // 4: left by (I 0; S I): row (n+c) += S(c,a)·row a
    for c in 0..k {
        for a in 0..n {
            push(&mut b, ElementaryMove::left(n + c, a, s.get(c, a).clone()))?;
        }
    }
    let chain = b.finish();
    let g = r.group();
    let expect = MatGRPoly::eye_poly(g, n).direct_sum(&i_minus(&s.mul(r)));
    if chain.end != expect {
        return Err(Error::Certificate(
            "SSE step chain does not reach I ⊕ (I - SR)".into(),
        ));
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::super::moves::verify_chain;
    use super::*;
    use crate::groups::{make_group, trivial_group, GroupSpec};
    use crate::parse::{parse_const_matrix, parse_matrix};

    #[test]
    fn se_and_lift() {
        let c2 = make_group(&GroupSpec::cyclic(2)).unwrap();
        let z = trivial_group();
        let a = parse_const_matrix(&c2, "[[e+g]]").unwrap();
        let zw = SEWitness {
            semiring: Semiring::NonnegGroupRing,
            lag: 1,
            r: parse_matrix(&z, "[[2]]").unwrap(),
            s: parse_matrix(&z, "[[1]]").unwrap(),
        };
        let w = forced_se_lift(&a, &a, 1, &zw).unwrap();
        assert_eq!(w.lag, 3);
        assert_eq!(w.r, parse_matrix(&c2, "[[2*e + 2*g]]").unwrap());
        assert!(verify_se(&a.to_poly(), &a.to_poly(), &w).valid);
        let mut wrong = w.clone();
        wrong.lag = 2;
        assert!(!verify_se(&a.to_poly(), &a.to_poly(), &wrong).valid);

        let five = parse_const_matrix(&c2, "[[5*g]]").unwrap();
        let zw5 = SEWitness {
            semiring: Semiring::NonnegGroupRing,
            lag: 1,
            r: parse_matrix(&z, "[[5]]").unwrap(),
            s: parse_matrix(&z, "[[1]]").unwrap(),
        };
        let err = forced_se_lift(&five, &five, 1, &zw5).unwrap_err();
        assert!(err.to_string().contains("not in uZ"), "{err}");
    }

    #[test]
    fn sse_identity_and_chain() {
        let c3 = make_group(&GroupSpec::cyclic(3)).unwrap();
        let a = parse_matrix(&c3, "[[g, 1], [2, 0]]").unwrap();
        let w = SSEWitness {
            semiring: Semiring::NonnegGroupRing,
            steps: vec![(a.clone(), MatGRPoly::eye_poly(&c3, 2))],
        };
        assert!(verify_sse(&a, &a, &w).valid);
        let mut bad = w.clone();
        bad.steps[0]
            .0
            .set(0, 0, parse_matrix(&c3, "g + e").unwrap().get(0, 0).clone());
        assert!(!verify_sse(&a, &a, &bad).valid);

        let r = parse_matrix(&c3, "[[t, g*t^2]]").unwrap();
        let s = parse_matrix(&c3, "[[t], [t + g]]").unwrap();
        let chain = sse_step_chain(&r, &s).unwrap();
        assert!(verify_chain(&chain).valid);
    }
}
