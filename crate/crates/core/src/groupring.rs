use crate::groups::{same_group, GroupRef};
use crate::ring::Ring;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Element `Σ n_g g` of the integral group ring, stored densely in the
/// group's element order.
#[derive(Clone)]
pub struct GRElem {
    group: GroupRef,
    coeffs: Vec<BigInt>,
}

impl PartialEq for GRElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_group(&self.group, &other.group)
    }
}

impl fmt::Debug for GRElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GRElem({self})")
    }
}

impl GRElem {
    pub fn zero(group: &GroupRef) -> Self {
        GRElem {
            group: group.clone(),
            coeffs: vec![BigInt::zero(); group.order()],
        }
    }

    pub fn one(group: &GroupRef) -> Self {
        Self::basis(group, 0)
    }

    pub fn basis(group: &GroupRef, g: usize) -> Self {
        let mut x = Self::zero(group);
        x.coeffs[g] = BigInt::one();
        x
    }

    pub fn from_int(group: &GroupRef, n: impl Into<BigInt>) -> Self {
        let mut x = Self::zero(group);
        x.coeffs[0] = n.into();
        x
    }

    pub fn from_coeffs(group: &GroupRef, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(
            coeffs.len(),
            group.order(),
            "coefficient vector has wrong length"
        );
        GRElem {
            group: group.clone(),
            coeffs,
        }
    }

    pub fn from_i64(group: &GroupRef, coeffs: &[i64]) -> Self {
        Self::from_coeffs(group, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `u = Σ_g g`.
    pub fn u(group: &GroupRef) -> Self {
        GRElem {
            group: group.clone(),
            coeffs: vec![BigInt::one(); group.order()],
        }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> &BigInt {
        &self.coeffs[g]
    }

    pub fn coeff_mut(&mut self, g: usize) -> &mut BigInt {
        &mut self.coeffs[g]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// `x ≫ 0`: every coefficient strictly positive.
    pub fn is_strictly_positive(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_positive())
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&g| !Zero::is_zero(&self.coeffs[g]))
            .collect()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GRElem {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn augment(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn kappa(&self) -> ConjElem {
        let mut out = vec![BigInt::zero(); self.group.classes().len()];
        for (g, c) in self.coeffs.iter().enumerate() {
            out[self.group.class_of(g)] += c;
        }
        ConjElem {
            group: self.group.clone(),
            coeffs: out,
        }
    }

    /// `Σ n_g g ↦ Σ n_g g⁻¹`.
    pub fn opposite(&self) -> Self {
        let mut out = Self::zero(&self.group);
        for (g, c) in self.coeffs.iter().enumerate() {
            out.coeffs[self.group.inv(g)] = c.clone();
        }
        out
    }

    /// Exact division of every coefficient, `None` if some coefficient is not
    /// divisible.
    pub fn div_exact(&self, k: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !Zero::is_zero(&(c % k)) {
                return None;
            }
            out.push(c / k);
        }
        Some(GRElem {
            group: self.group.clone(),
            coeffs: out,
        })
    }

    /// Whether the element lies in `uℤ`, i.e. all coefficients are equal.
    pub fn in_u_z(&self) -> bool {
        self.coeffs.windows(2).all(|w| w[0] == w[1])
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    fn check(&self, other: &Self) {
        assert!(
            same_group(&self.group, &other.group),
            "group ring operands come from different groups"
        );
    }
}

impl Ring for GRElem {
    fn zero_like(&self) -> Self {
        GRElem::zero(&self.group)
    }
    fn one_like(&self) -> Self {
        GRElem::one(&self.group)
    }
    fn is_zero(&self) -> bool {
        GRElem::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self.check(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        GRElem {
            group: self.group.clone(),
            coeffs,
        }
    }
    fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        GRElem {
            group: self.group.clone(),
            coeffs,
        }
    }
    fn neg(&self) -> Self {
        GRElem {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let g = &self.group;
        let mut out = vec![BigInt::zero(); g.order()];
        for (a, x) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(x) {
                continue;
            }
            for (b, y) in other.coeffs.iter().enumerate() {
                if !Zero::is_zero(y) {
                    out[g.mul(a, b)] += x * y;
                }
            }
        }
        GRElem {
            group: g.clone(),
            coeffs: out,
        }
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt, body: &str) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    if a.is_one() {
        write!(f, "{body}")
    } else {
        write!(f, "{a}*{body}")
    }
}

impl fmt::Display for GRElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            write_term(f, first, c, self.group.name(g))?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Element of `ℤConjG`: one integer per conjugacy class.
#[derive(Clone)]
pub struct ConjElem {
    group: GroupRef,
    coeffs: Vec<BigInt>,
}

impl PartialEq for ConjElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_group(&self.group, &other.group)
    }
}

impl fmt::Debug for ConjElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConjElem({self})")
    }
}

impl ConjElem {
    pub fn zero(group: &GroupRef) -> Self {
        ConjElem {
            group: group.clone(),
            coeffs: vec![BigInt::zero(); group.classes().len()],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn add(&self, other: &ConjElem) -> ConjElem {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        ConjElem {
            group: self.group.clone(),
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for ConjElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let rep = self.group.classes()[k][0];
            write_term(f, first, c, &format!("[{}]", self.group.name(rep)))?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
