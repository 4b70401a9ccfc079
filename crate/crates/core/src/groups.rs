use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

pub type GroupRef = Arc<FiniteGroup>;

/// Description of a finite group, as it appears in input documents and
/// certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    Cyclic {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        generator: Option<String>,
    },
    Product {
        factors: Vec<GroupSpec>,
    },
    /// Dihedral group of order `2n`, generated by a rotation `r` and a flip `s`.
    Dihedral {
        n: usize,
    },
    Symmetric {
        n: usize,
    },
    Explicit {
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
}

impl GroupSpec {
    pub fn cyclic(n: usize) -> Self {
        GroupSpec::Cyclic { n, generator: None }
    }

    pub fn trivial() -> Self {
        GroupSpec::cyclic(1)
    }
}

/// A finite group stored as a dense multiplication table. Index 0 is the
/// identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    spec: GroupSpec,
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    names: Vec<String>,
    name_index: HashMap<String, usize>,
    generators: Vec<(String, usize)>,
    abelian: bool,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul && self.names == other.names
    }
}

impl Eq for FiniteGroup {}

pub fn same_group(a: &GroupRef, b: &GroupRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn make_group(spec: &GroupSpec) -> Result<GroupRef> {
    let raw = build_raw(spec)?;
    FiniteGroup::from_raw(spec.clone(), raw).map(Arc::new)
}

pub fn trivial_group() -> GroupRef {
    make_group(&GroupSpec::trivial()).expect("trivial group")
}

struct Raw {
    mul: Vec<usize>,
    names: Option<Vec<String>>,
    generators: Vec<(String, usize)>,
}

fn build_raw(spec: &GroupSpec) -> Result<Raw> {
    match spec {
        GroupSpec::Cyclic { n, generator } => {
            let n = *n;
            if n == 0 {
                return Err(Error::InvalidGroup(
                    "cyclic order must be at least 1".into(),
                ));
            }
            let g = generator.clone().unwrap_or_else(|| "g".to_string());
            check_ident(&g)?;
            let mut mul = vec![0; n * n];
            for a in 0..n {
                for b in 0..n {
                    mul[a * n + b] = (a + b) % n;
                }
            }
            let names = (0..n).map(|k| power_name(&g, k)).collect();
            let generators = if n > 1 { vec![(g, 1)] } else { vec![] };
            Ok(Raw {
                mul,
                names: Some(names),
                generators,
            })
        }
        GroupSpec::Dihedral { n } => {
            let n = *n;
            if n == 0 {
                return Err(Error::InvalidGroup(
                    "dihedral parameter must be at least 1".into(),
                ));
            }
            // r^k s^f lives at index f*n + k; s r s = r^-1.
            let m = 2 * n;
            let mut mul = vec![0; m * m];
            for x in 0..m {
                let (f, a) = (x / n, x % n);
                for y in 0..m {
                    let (h, b) = (y / n, y % n);
                    let k = if f == 0 { (a + b) % n } else { (a + n - b) % n };
                    mul[x * m + y] = ((f + h) % 2) * n + k;
                }
            }
            let names = (0..m)
                .map(|x| {
                    let (f, a) = (x / n, x % n);
                    match (a, f) {
                        (0, 0) => "e".to_string(),
                        (_, 0) => power_name("r", a),
                        (0, _) => "s".to_string(),
                        _ => format!("{}*s", power_name("r", a)),
                    }
                })
                .collect();
            let mut generators = Vec::new();
            if n > 1 {
                generators.push(("r".to_string(), 1));
            }
            generators.push(("s".to_string(), n));
            Ok(Raw {
                mul,
                names: Some(names),
                generators,
            })
        }
        GroupSpec::Symmetric { n } => {
            let n = *n;
            if n == 0 {
                return Err(Error::InvalidGroup(
                    "symmetric degree must be at least 1".into(),
                ));
            }
            if n > 7 {
                return Err(Error::InvalidGroup(format!(
                    "symmetric group of degree {n} is too large"
                )));
            }
            let perms = permutations(n);
            let index: HashMap<Vec<usize>, usize> = perms
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, p)| (p, i))
                .collect();
            let m = perms.len();
            let mut mul = vec![0; m * m];
            for (x, p) in perms.iter().enumerate() {
                for (y, q) in perms.iter().enumerate() {
                    // (pq)(i) = p(q(i))
                    let c: Vec<usize> = (0..n).map(|i| p[q[i]]).collect();
                    mul[x * m + y] = index[&c];
                }
            }
            let names = perms.iter().map(|p| cycle_name(p)).collect();
            Ok(Raw {
                mul,
                names: Some(names),
                generators: vec![],
            })
        }
        GroupSpec::Product { factors } => {
            if factors.is_empty() {
                return Ok(Raw {
                    mul: vec![0],
                    names: Some(vec!["e".into()]),
                    generators: vec![],
                });
            }
            let groups: Vec<GroupRef> = factors.iter().map(make_group).collect::<Result<_>>()?;
            let orders: Vec<usize> = groups.iter().map(|g| g.order()).collect();
            let m: usize = orders.iter().product();
            // Mixed radix with the first factor most significant.
            let split = |mut x: usize| -> Vec<usize> {
                let mut parts = vec![0; orders.len()];
                for k in (0..orders.len()).rev() {
                    parts[k] = x % orders[k];
                    x /= orders[k];
                }
                parts
            };
            let join = |parts: &[usize]| -> usize {
                parts.iter().zip(&orders).fold(0, |acc, (p, o)| acc * o + p)
            };
            let mut mul = vec![0; m * m];
            for x in 0..m {
                let px = split(x);
                for y in 0..m {
                    let py = split(y);
                    let pz: Vec<usize> = (0..orders.len())
                        .map(|k| groups[k].mul(px[k], py[k]))
                        .collect();
                    mul[x * m + y] = join(&pz);
                }
            }
            let mut gens: Vec<(String, usize, usize)> = Vec::new();
            for (k, g) in groups.iter().enumerate() {
                let gen_list: Vec<(String, usize)> = if g.generators.is_empty() {
                    g.minimal_generators()
                } else {
                    g.generators.clone()
                };
                for (name, idx) in gen_list {
                    gens.push((name, k, idx));
                }
            }
            let mut seen = HashMap::new();
            let clash = gens
                .iter()
                .any(|(name, _, _)| seen.insert(name.clone(), ()).is_some());
            let generators = gens
                .into_iter()
                .map(|(name, k, idx)| {
                    let mut parts = vec![0; orders.len()];
                    parts[k] = idx;
                    let name = if clash {
                        format!("{}{}", name, k + 1)
                    } else {
                        name
                    };
                    (name, join(&parts))
                })
                .collect();
            Ok(Raw {
                mul,
                names: None,
                generators,
            })
        }
        GroupSpec::Explicit { table, names } => {
            let m = table.len();
            if m == 0 {
                return Err(Error::InvalidGroup("explicit table is empty".into()));
            }
            for (i, row) in table.iter().enumerate() {
                if row.len() != m {
                    return Err(Error::InvalidGroup(format!(
                        "explicit table is not square: row {i} has length {}",
                        row.len()
                    )));
                }
                if let Some(bad) = row.iter().find(|&&v| v >= m) {
                    return Err(Error::InvalidGroup(format!(
                        "entry {bad} in row {i} is out of range"
                    )));
                }
            }
            let mul = table.iter().flatten().copied().collect();
            let names = match names {
                Some(ns) => {
                    if ns.len() != m {
                        return Err(Error::InvalidGroup(
                            "names length differs from table size".into(),
                        ));
                    }
                    for n in ns {
                        check_ident(n)?;
                    }
                    ns.clone()
                }
                None => (0..m)
                    .map(|i| if i == 0 { "e".into() } else { format!("x{i}") })
                    .collect(),
            };
            let generators = names
                .iter()
                .cloned()
                .enumerate()
                .skip(1)
                .map(|(i, n)| (n, i))
                .collect();
            Ok(Raw {
                mul,
                names: Some(names),
                generators,
            })
        }
    }
}

fn check_ident(name: &str) -> Result<()> {
    let mut chars = name.chars();
    let ok = match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => chars.all(|c| c.is_alphanumeric() || c == '_'),
        _ => false,
    };
    if !ok || name == "t" {
        return Err(Error::InvalidGroup(format!(
            "unusable element name {name:?}"
        )));
    }
    Ok(())
}

fn power_name(g: &str, k: usize) -> String {
    match k {
        0 => "e".to_string(),
        1 => g.to_string(),
        _ => format!("{g}^{k}"),
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Cycle notation on the points `1..=n`, e.g. `(143)` or `(12)(34)`.
pub fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        out.push('(');
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

impl FiniteGroup {
    fn from_raw(spec: GroupSpec, raw: Raw) -> Result<Self> {
        let mul = raw.mul;
        let m = (mul.len() as f64).sqrt().round() as usize;
        if m * m != mul.len() || m == 0 {
            return Err(Error::InvalidGroup("table is not square".into()));
        }
        let at = |a: usize, b: usize| mul[a * m + b];
        for x in 0..m {
            if at(0, x) != x || at(x, 0) != x {
                return Err(Error::InvalidGroup(format!(
                    "identity axiom fails: index 0 is not a two-sided identity (witness x={x})"
                )));
            }
        }
        let mut inv = vec![usize::MAX; m];
        for (x, slot) in inv.iter_mut().enumerate() {
            match (0..m).find(|&y| at(x, y) == 0) {
                Some(y) if at(y, x) == 0 => *slot = y,
                _ => {
                    return Err(Error::InvalidGroup(format!(
                        "inverse axiom fails for element {x}"
                    )));
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                let ab = at(a, b);
                for c in 0..m {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails on triple ({a},{b},{c})"
                        )));
                    }
                }
            }
        }

        let mut class_of = vec![usize::MAX; m];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..m {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut orbit: Vec<usize> = (0..m).map(|h| at(at(h, x), inv[h])).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                class_of[y] = classes.len();
            }
            classes.push(orbit);
        }
        classes.sort_by_key(|c| (c.len(), c[0]));
        for (ci, c) in classes.iter().enumerate() {
            for &y in c {
                class_of[y] = ci;
            }
        }
        let abelian = (0..m).all(|a| (0..m).all(|b| at(a, b) == at(b, a)));

        let mut g = FiniteGroup {
            spec,
            order: m,
            mul,
            inv,
            classes,
            class_of,
            names: Vec::new(),
            name_index: HashMap::new(),
            generators: raw.generators,
            abelian,
        };
        g.names = match raw.names {
            Some(n) => n,
            None => g.word_names(),
        };
        for (i, n) in g.names.iter().enumerate() {
            if g.name_index.insert(n.clone(), i).is_some() {
                return Err(Error::InvalidGroup(format!("duplicate element name {n:?}")));
            }
        }
        Ok(g)
    }

    /// Names every element by a shortest word in the generators.
    fn word_names(&self) -> Vec<String> {
        let m = self.order;
        let mut words: Vec<Option<Vec<usize>>> = vec![None; m];
        words[0] = Some(vec![]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (gi, (_, g)) in self.generators.iter().enumerate() {
                let y = self.mul(x, *g);
                if words[y].is_none() {
                    let mut w = words[x].clone().unwrap();
                    w.push(gi);
                    words[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        words
            .into_iter()
            .enumerate()
            .map(|(i, w)| match w {
                Some(w) if w.is_empty() => "e".to_string(),
                Some(w) => {
                    let mut parts: Vec<String> = Vec::new();
                    let mut k = 0;
                    while k < w.len() {
                        let mut run = 1;
                        while k + run < w.len() && w[k + run] == w[k] {
                            run += 1;
                        }
                        parts.push(power_name(&self.generators[w[k]].0, run));
                        k += run;
                    }
                    parts.join("*")
                }
                None => format!("x{i}"),
            })
            .collect()
    }

    /// Greedy generating set, used when a factor has no named generators.
    fn minimal_generators(&self) -> Vec<(String, usize)> {
        let mut reached = vec![false; self.order];
        reached[0] = true;
        let mut gens = Vec::new();
        for x in 1..self.order {
            if !reached[x] {
                gens.push((self.names[x].clone(), x));
                reached = self.closure(&gens.iter().map(|(_, g)| *g).collect::<Vec<_>>());
            }
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut reached = vec![false; self.order];
        reached[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !reached[y] {
                    reached[y] = true;
                    queue.push_back(y);
                }
            }
        }
        reached
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.name_index.get(name).copied()
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub fn is_symmetric(&self) -> bool {
        matches!(self.spec, GroupSpec::Symmetric { .. })
    }

    pub fn symmetric_degree(&self) -> Option<usize> {
        match self.spec {
            GroupSpec::Symmetric { n } => Some(n),
            _ => None,
        }
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    /// Element of the symmetric group given as an image list on `0..n`.
    pub fn from_permutation(&self, p: &[usize]) -> Option<usize> {
        if self.symmetric_degree() != Some(p.len()) {
            return None;
        }
        self.lookup(&cycle_name(p))
    }

    /// Subgroup generated by `elems`, as a sorted element list.
    pub fn generated_subgroup(&self, elems: &[usize]) -> Vec<usize> {
        let r = self.closure(elems);
        (0..self.order).filter(|&x| r[x]).collect()
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group of order {}", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(g: &FiniteGroup) {
        let m = g.order();
        for x in 0..m {
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, g.inv(x)), 0);
            assert_eq!(g.inv(g.inv(x)), x);
            for y in 0..m {
                assert_eq!(g.class_of(g.mul(x, y)), g.class_of(g.mul(y, x)));
                let conj = g.mul(g.mul(y, x), g.inv(y));
                assert_eq!(g.class_of(conj), g.class_of(x));
            }
        }
        for c in g.classes() {
            assert_eq!(m % c.len(), 0);
        }
        assert_eq!(g.classes()[0], vec![0]);
        for (i, n) in g.names().iter().enumerate() {
            assert_eq!(g.lookup(n), Some(i));
        }
    }

    #[test]
    fn cyclic_two() {
        let g = make_group(&GroupSpec::cyclic(2)).unwrap();
        assert_eq!(g.names(), ["e", "g"]);
        assert_eq!(g.mul(1, 1), 0);
        check_axioms(&g);
    }

    #[test]
    fn symmetric_four() {
        let g = make_group(&GroupSpec::Symmetric { n: 4 }).unwrap();
        assert_eq!(g.order(), 24);
        let sizes: Vec<usize> = g.classes().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        check_axioms(&g);
        let a = g.lookup("(143)").unwrap();
        let b = g.lookup("(123)").unwrap();
        let c = g.lookup("(12)(34)").unwrap();
        assert_eq!(g.mul(g.mul(a, b), c), 0);
        assert_eq!(g.name(g.inv(a)), "(134)");
    }

    #[test]
    fn klein_four() {
        let g = make_group(&GroupSpec::Product {
            factors: vec![GroupSpec::cyclic(2), GroupSpec::cyclic(2)],
        })
        .unwrap();
        assert_eq!(g.order(), 4);
        assert!((0..4).all(|x| g.inv(x) == x));
        assert_eq!(g.classes().len(), 4);
        assert_eq!(g.names(), ["e", "g2", "g1", "g1*g2"]);
        check_axioms(&g);
    }

    #[test]
    fn dihedral_and_small_cases() {
        for n in 1..=6 {
            let g = make_group(&GroupSpec::Dihedral { n }).unwrap();
            assert_eq!(g.order(), 2 * n);
            check_axioms(&g);
            assert_eq!(g.is_abelian(), n <= 2);
        }
        let d4 = make_group(&GroupSpec::Dihedral { n: 4 }).unwrap();
        assert_eq!(d4.classes().len(), 5);
        let c4 = make_group(&GroupSpec::cyclic(4)).unwrap();
        assert_eq!(c4.classes().len(), 4);
        let one = make_group(&GroupSpec::trivial()).unwrap();
        assert_eq!(one.names(), ["e"]);
    }

    #[test]
    fn explicit_table_errors() {
        let bad = GroupSpec::Explicit {
            table: vec![vec![0, 1], vec![1, 1]],
            names: None,
        };
        let err = make_group(&bad).unwrap_err().to_string();
        assert!(err.contains("inverse"), "{err}");
        // a loop that is not associative: the unique order-5 non-group Latin square with identity
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = make_group(&GroupSpec::Explicit {
            table: t,
            names: None,
        })
        .unwrap_err()
        .to_string();
        assert!(err.contains("associativity"), "{err}");
        let ok = GroupSpec::Explicit {
            table: vec![vec![0, 1], vec![1, 0]],
            names: Some(vec!["e".into(), "z".into()]),
        };
        assert_eq!(make_group(&ok).unwrap().lookup("z"), Some(1));
    }

    #[test]
    fn spec_json_shape() {
        let s: GroupSpec =
            serde_json::from_str(r#"{"kind":"cyclic","n":4,"generator":"s"}"#).unwrap();
        let g = make_group(&s).unwrap();
        assert_eq!(g.name(3), "s^3");
        let back = serde_json::to_string(&GroupSpec::Symmetric { n: 3 }).unwrap();
        assert_eq!(back, r#"{"kind":"symmetric","n":3}"#);
    }
}
