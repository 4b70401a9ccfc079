use crate::groupring::GRElem;
use crate::groups::{same_group, GroupRef};
use crate::ring::Ring;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in `t` with coefficients in `ℤG`. Zero coefficients are never
/// stored.
#[derive(Clone)]
pub struct GRPoly {
    group: GroupRef,
    terms: BTreeMap<usize, GRElem>,
}

impl PartialEq for GRPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_group(&self.group, &other.group)
    }
}

impl fmt::Debug for GRPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GRPoly({self})")
    }
}

impl GRPoly {
    pub fn zero(group: &GroupRef) -> Self {
        GRPoly {
            group: group.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(group: &GroupRef) -> Self {
        Self::constant(GRElem::one(group))
    }

    pub fn constant(c: GRElem) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: GRElem, deg: usize) -> Self {
        let mut p = GRPoly::zero(c.group());
        if !c.is_zero() {
            p.terms.insert(deg, c);
        }
        p
    }

    /// The variable `t`.
    pub fn t(group: &GroupRef) -> Self {
        Self::monomial(GRElem::one(group), 1)
    }

    pub fn t_pow(group: &GroupRef, k: usize) -> Self {
        Self::monomial(GRElem::one(group), k)
    }

    pub fn from_int(group: &GroupRef, n: impl Into<BigInt>) -> Self {
        Self::constant(GRElem::from_int(group, n))
    }

    pub fn from_terms(group: &GroupRef, terms: impl IntoIterator<Item = (usize, GRElem)>) -> Self {
        let mut p = GRPoly::zero(group);
        for (d, c) in terms {
            p.add_term(d, &c);
        }
        p
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn terms(&self) -> &BTreeMap<usize, GRElem> {
        &self.terms
    }

    pub fn coeff(&self, d: usize) -> GRElem {
        self.terms
            .get(&d)
            .cloned()
            .unwrap_or_else(|| GRElem::zero(&self.group))
    }

    pub fn add_term(&mut self, d: usize, c: &GRElem) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&d) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&d);
        } else {
            self.terms.insert(d, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<usize> {
        self.terms.keys().next().copied()
    }

    pub fn constant_term(&self) -> GRElem {
        self.coeff(0)
    }

    pub fn has_constant_term(&self) -> bool {
        self.terms.contains_key(&0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(GRElem::is_nonnegative)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        GRPoly {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(d, c)| (d + k, c.clone())).collect(),
        }
    }

    /// Divide by `t^k`; `None` if some term has degree below `k`.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.low_degree().is_some_and(|d| d < k) {
            return None;
        }
        Some(GRPoly {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(d, c)| (d - k, c.clone())).collect(),
        })
    }

    pub fn scale(&self, c: &GRElem) -> Self {
        Self::from_terms(&self.group, self.terms.iter().map(|(d, x)| (*d, c.mul(x))))
    }

    pub fn scale_right(&self, c: &GRElem) -> Self {
        Self::from_terms(&self.group, self.terms.iter().map(|(d, x)| (*d, x.mul(c))))
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        Self::from_terms(
            &self.group,
            self.terms.iter().map(|(d, x)| (*d, x.scale(k))),
        )
    }

    pub fn map_coeffs(&self, f: impl Fn(&GRElem) -> GRElem) -> Self {
        Self::from_terms(&self.group, self.terms.iter().map(|(d, x)| (*d, f(x))))
    }

    pub fn eval_one(&self) -> GRElem {
        self.terms
            .values()
            .fold(GRElem::zero(&self.group), |acc, c| acc.add(c))
    }

    pub fn eval_zero(&self) -> GRElem {
        self.constant_term()
    }

    pub fn augment(&self) -> IntPoly {
        let mut p = IntPoly::zero();
        for (d, c) in &self.terms {
            p.add_term(*d, &c.augment());
        }
        p
    }

    pub fn opposite(&self) -> Self {
        self.map_coeffs(GRElem::opposite)
    }

    pub fn truncate(&self, max_deg: usize) -> Self {
        GRPoly {
            group: self.group.clone(),
            terms: self
                .terms
                .range(..=max_deg)
                .map(|(d, c)| (*d, c.clone()))
                .collect(),
        }
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .values()
            .map(GRElem::max_abs_coeff)
            .max()
            .unwrap_or_default()
    }

    /// Product truncated at degree `max_deg`.
    pub fn mul_trunc(&self, other: &Self, max_deg: usize) -> Self {
        let mut out = GRPoly::zero(&self.group);
        for (da, a) in &self.terms {
            for (db, b) in &other.terms {
                if da + db <= max_deg {
                    out.add_term(da + db, &a.mul(b));
                }
            }
        }
        out
    }
}

impl Ring for GRPoly {
    fn zero_like(&self) -> Self {
        GRPoly::zero(&self.group)
    }
    fn one_like(&self) -> Self {
        GRPoly::one(&self.group)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(*d, c);
        }
        out
    }
    fn neg(&self) -> Self {
        GRPoly {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(d, c)| (*d, c.neg())).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = GRPoly::zero(&self.group);
        for (da, a) in &self.terms {
            for (db, b) in &other.terms {
                out.add_term(da + db, &a.mul(b));
            }
        }
        out
    }
}

fn needs_parens(c: &GRElem) -> bool {
    c.support().len() > 1
}

impl fmt::Display for GRPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in &self.terms {
            let tpart = match d {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{d}"),
            };
            let supp = c.support();
            if needs_parens(c) {
                if !first {
                    write!(f, " + ")?;
                }
                if tpart.is_empty() {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "({c})*{tpart}")?;
                }
            } else {
                let g = supp[0];
                let k = c.coeff(g);
                let name = c.group().name(g);
                let body = match (g == 0, tpart.is_empty()) {
                    (true, true) => {
                        // a bare identity constant reads as "3*e" so it stays a ring element
                        name.to_string()
                    }
                    (true, false) => tpart.clone(),
                    (false, true) => name.to_string(),
                    (false, false) => format!("{name}*{tpart}"),
                };
                let neg = k.is_negative();
                let a = k.abs();
                match (first, neg) {
                    (true, true) => write!(f, "-")?,
                    (false, true) => write!(f, " - ")?,
                    (false, false) => write!(f, " + ")?,
                    (true, false) => {}
                }
                if a.is_one() {
                    write!(f, "{body}")?;
                } else {
                    write!(f, "{a}*{body}")?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// Polynomial over `ℤ`, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn t() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add_term(&mut self, d: usize, c: &BigInt) {
        if self.coeffs.len() <= d {
            self.coeffs.resize(d + 1, BigInt::zero());
        }
        self.coeffs[d] += c;
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Ring for IntPoly {
    fn zero_like(&self) -> Self {
        IntPoly::zero()
    }
    fn one_like(&self) -> Self {
        IntPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|d| self.coeff(d) + other.coeff(d)).collect())
    }
    fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            match d {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if d == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}
