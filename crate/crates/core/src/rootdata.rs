//! Root systems of the simple types in Bourbaki numbering.
//!
//! Roots are integer coefficient vectors over the simple roots. The root list
//! is generated by closing the simple roots under the root-string rule
//! (`β + αᵢ ∈ Φ` iff `p - ⟨β, αᵢ∨⟩ > 0`), never by type-specific formulas.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    /// Smallest rank accepted for the family.
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
            Family::E => 6,
            Family::F => 4,
            Family::G => 2,
        }
    }

    fn accepts(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.accepts(rank) {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A root written over the simple roots: `Σ cᵢ αᵢ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    /// The simple root αᵢ for a 1-based index `i`.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i - 1] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Signed coefficient sum. Defined for any vector; [`RootSystem::height`]
    /// additionally checks membership.
    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled_sub(&self, k: i32, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - k * b).collect())
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Root {
    /// Compact form: `1,0,2` becomes `102` for small coefficients, negated with a leading `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let neg = !self.0.is_empty() && self.0.iter().all(|&c| c <= 0) && !self.is_zero();
        let body: Vec<String> = self
            .0
            .iter()
            .map(|&c| if neg { (-c).to_string() } else { c.to_string() })
            .collect();
        if neg {
            write!(f, "-")?;
        }
        if self.0.iter().all(|c| c.abs() < 10) {
            write!(f, "{}", body.concat())
        } else {
            write!(f, "{}", body.join(","))
        }
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: SimpleType,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    negation: Vec<usize>,
    cartan: Vec<Vec<i32>>,
    lengthsq: Vec<i32>,
    root_lengthsq: Vec<i32>,
}

fn dynkin_edges(ty: SimpleType) -> Vec<(usize, usize)> {
    let n = ty.rank();
    match ty.family() {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect()
        }
        Family::D => {
            let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
            e.push((n - 3, n - 1));
            e
        }
        Family::E => {
            let mut e = vec![(0, 2), (2, 3), (3, 4), (1, 3)];
            for i in 4..n - 1 {
                e.push((i, i + 1));
            }
            e
        }
    }
}

/// Squared lengths of the simple roots, normalised so that coroot expansions are integral.
fn simple_lengthsq(ty: SimpleType) -> Vec<i32> {
    let n = ty.rank();
    match ty.family() {
        Family::A | Family::D | Family::E => vec![2; n],
        Family::B => (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect(),
        Family::C => (0..n).map(|i| if i + 1 == n { 2 } else { 1 }).collect(),
        Family::F => vec![2, 2, 1, 1],
        Family::G => vec![1, 3],
    }
}

/// `C[i][j] = ⟨αᵢ, αⱼ∨⟩`.
pub fn cartan_matrix(ty: SimpleType) -> Vec<Vec<i32>> {
    let n = ty.rank();
    let len = simple_lengthsq(ty);
    let mut c = vec![vec![0; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in dynkin_edges(ty) {
        let m = len[i].max(len[j]);
        c[i][j] = -m / len[j];
        c[j][i] = -m / len[i];
    }
    c
}

impl RootSystem {
    pub fn build(ty: SimpleType) -> RootSystem {
        let n = ty.rank();
        let cartan = cartan_matrix(ty);
        let lengthsq = simple_lengthsq(ty);

        let simple: Vec<Root> = (1..=n).map(|i| Root::simple(n, i)).collect();
        let mut positive: HashSet<Root> = simple.iter().cloned().collect();
        let mut ordered: Vec<Root> = simple.clone();
        let mut layer = simple;
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    let alpha = Root::simple(n, i + 1);
                    if *beta == alpha {
                        continue;
                    }
                    let mut p = 0;
                    while positive.contains(&beta.scaled_sub(p + 1, &alpha)) {
                        p += 1;
                    }
                    let pairing: i32 = (0..n).map(|j| beta.0[j] * cartan[j][i]).sum();
                    if p - pairing > 0 {
                        let gamma = beta.add(&alpha);
                        if positive.insert(gamma.clone()) {
                            ordered.push(gamma.clone());
                            next.push(gamma);
                        }
                    }
                }
            }
            layer = next;
        }

        let mut roots: Vec<Root> = ordered.iter().map(Root::neg).collect();
        roots.extend(ordered);
        roots.sort_by(|a, b| (a.height(), &a.0).cmp(&(b.height(), &b.0)));
        let index: HashMap<Root, usize> =
            roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let negation = roots.iter().map(|r| index[&r.neg()]).collect();
        let root_lengthsq = roots
            .iter()
            .map(|r| {
                let mut twice = 0;
                for i in 0..n {
                    for j in 0..n {
                        twice += r.0[i] * r.0[j] * cartan[i][j] * lengthsq[j];
                    }
                }
                twice / 2
            })
            .collect();

        RootSystem {
            ty,
            roots,
            index,
            negation,
            cartan,
            lengthsq,
            root_lengthsq,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    /// All roots, sorted by `(height, coefficients)`.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.height() > 0)
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn lengthsq(&self) -> &[i32] {
        &self.lengthsq
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    /// Index of `-roots[i]`.
    pub fn negation_of(&self, i: usize) -> usize {
        self.negation[i]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    fn require(&self, r: &Root) -> Result<usize> {
        self.index_of(r).ok_or_else(|| Error::NotARoot(r.clone()))
    }

    pub fn height(&self, r: &Root) -> Result<i32> {
        self.require(r)?;
        Ok(r.height())
    }

    pub fn highest_root(&self) -> &Root {
        self.roots.last().expect("root systems are non-empty")
    }

    pub fn root_lengthsq(&self, r: &Root) -> Result<i32> {
        Ok(self.root_lengthsq[self.require(r)?])
    }

    /// `⟨β, αᵢ∨⟩` for a 0-based simple index `i`.
    pub fn pairing_with_simple_coroot(&self, beta: &Root, i: usize) -> i32 {
        (0..self.rank()).map(|j| beta.0[j] * self.cartan[j][i]).sum()
    }

    /// Largest `p ≥ 0` with `β − pα ∈ Φ`.
    pub fn chain_p(&self, alpha: &Root, beta: &Root) -> Result<u32> {
        self.require(alpha)?;
        self.require(beta)?;
        if alpha == beta || *alpha == beta.neg() {
            return Err(Error::ChainPrecondition {
                alpha: alpha.clone(),
                beta: beta.clone(),
            });
        }
        let mut p = 0;
        while self.contains(&beta.scaled_sub(p + 1, alpha)) {
            p += 1;
        }
        Ok(p as u32)
    }

    /// Coefficients `d` with `α∨ = Σ dᵢ αᵢ∨`.
    pub fn coroot_coeffs(&self, alpha: &Root) -> Result<Vec<i32>> {
        let len = self.root_lengthsq(alpha)?;
        Ok(alpha
            .0
            .iter()
            .zip(&self.lengthsq)
            .map(|(&c, &l)| {
                assert_eq!((c * l) % len, 0, "non-integral coroot for {alpha:?}");
                c * l / len
            })
            .collect())
    }

    /// Linear independence plus "no difference of two members is a root".
    pub fn is_subsystem_base(&self, set: &[Root]) -> bool {
        if set.iter().any(|r| !self.contains(r)) {
            return false;
        }
        let rows: Vec<Vec<i64>> = set
            .iter()
            .map(|r| r.0.iter().map(|&c| c as i64).collect())
            .collect();
        if rational_rank(rows) != set.len() {
            return false;
        }
        for (i, a) in set.iter().enumerate() {
            for b in &set[i + 1..] {
                if self.contains(&a.sub(b)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Rank over ℚ by fraction-free elimination.
pub(crate) fn rational_rank(mut rows: Vec<Vec<i64>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            let mut g = 0i64;
            for (x, &pv) in row.iter_mut().zip(&pivot) {
                *x = *x * pivot[col] - factor * pv;
                g = gcd(g, *x);
            }
            if g > 1 {
                row.iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::build(SimpleType::new(f, n).unwrap())
    }

    fn r(c: &[i32]) -> Root {
        Root::new(c.to_vec())
    }

    #[test]
    fn rank_bounds() {
        assert!(SimpleType::new(Family::B, 1).is_err());
        assert!(SimpleType::new(Family::D, 2).is_err());
        assert!(SimpleType::new(Family::E, 9).is_err());
        assert!(SimpleType::new(Family::G, 3).is_err());
        assert!(SimpleType::new(Family::A, 1).is_ok());
    }

    #[test]
    fn standard_root_counts() {
        let cases = [
            (Family::A, 1, 2),
            (Family::A, 5, 30),
            (Family::B, 2, 8),
            (Family::B, 5, 50),
            (Family::C, 4, 32),
            (Family::D, 4, 24),
            (Family::D, 7, 84),
            (Family::G, 2, 12),
            (Family::F, 4, 48),
            (Family::E, 6, 72),
            (Family::E, 7, 126),
            (Family::E, 8, 240),
        ];
        for (f, n, count) in cases {
            assert_eq!(rs(f, n).roots().len(), count, "{f}{n}");
        }
    }

    #[test]
    fn rank_two_positive_roots() {
        let a2: Vec<_> = rs(Family::A, 2).positive_roots().cloned().collect();
        assert_eq!(a2, vec![r(&[0, 1]), r(&[1, 0]), r(&[1, 1])]);
        let mut b2: Vec<_> = rs(Family::B, 2).positive_roots().cloned().collect();
        b2.sort();
        assert_eq!(b2, vec![r(&[0, 1]), r(&[1, 0]), r(&[1, 1]), r(&[1, 2])]);
    }

    #[test]
    fn bourbaki_cartan_matrices() {
        assert_eq!(rs(Family::B, 3).cartan()[1], vec![-1, 2, -2]);
        assert_eq!(rs(Family::C, 3).cartan()[2], vec![0, -2, 2]);
        assert_eq!(rs(Family::G, 2).cartan(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(rs(Family::F, 4).cartan()[1], vec![-1, 2, -2, 0]);
        let e6 = rs(Family::E, 6);
        assert_eq!(e6.cartan()[1], vec![0, 2, 0, -1, 0, 0]);
        let d4 = rs(Family::D, 4);
        assert_eq!(d4.cartan()[1], vec![-1, 2, -1, -1]);
    }

    #[test]
    fn heights() {
        let b2 = rs(Family::B, 2);
        assert_eq!(b2.height(&r(&[1, 2])).unwrap(), 3);
        assert_eq!(b2.height(&r(&[0, 1])).unwrap(), 1);
        assert!(b2.height(&r(&[2, 1])).is_err());
        let a4 = rs(Family::A, 4);
        assert_eq!(a4.height(a4.highest_root()).unwrap(), 4);
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs(Family::A, 3).highest_root(), &r(&[1, 1, 1]));
        assert_eq!(rs(Family::B, 2).highest_root(), &r(&[1, 2]));
        assert_eq!(rs(Family::G, 2).highest_root(), &r(&[3, 2]));
        assert_eq!(rs(Family::E, 8).highest_root(), &r(&[2, 3, 4, 6, 5, 4, 3, 2]));
        for n in 4..=9 {
            // brute-force max-height scan against the closed form
            let d = rs(Family::D, n);
            let best = d.roots().iter().max_by_key(|r| r.height()).unwrap();
            let mut expect = vec![2; n];
            expect[0] = 1;
            expect[n - 2] = 1;
            expect[n - 1] = 1;
            assert_eq!(best, &r(&expect));
            assert_eq!(d.highest_root(), best);
        }
    }

    #[test]
    fn chains() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.chain_p(&r(&[1, 0]), &r(&[0, 1])).unwrap(), 0);
        let b2 = rs(Family::B, 2);
        assert_eq!(b2.chain_p(&r(&[0, 1]), &r(&[1, 1])).unwrap(), 1);
        assert_eq!(b2.chain_p(&r(&[0, 1]), &r(&[1, 0])).unwrap(), 0);
        assert!(b2.chain_p(&r(&[0, 1]), &r(&[0, -1])).is_err());
        assert!(b2.chain_p(&r(&[0, 1]), &r(&[0, 1])).is_err());
    }

    #[test]
    fn coroots() {
        let b2 = rs(Family::B, 2);
        assert_eq!(b2.coroot_coeffs(&r(&[1, 2])).unwrap(), vec![1, 1]);
        // ⟨αⱼ, θ∨⟩ by brute force: θ∨ = α₁∨ + α₂∨, so ⟨αⱼ, θ∨⟩ = C[j][0] + C[j][1]
        let theta = r(&[1, 2]);
        for j in 0..2 {
            let via_expansion: i32 = (0..2)
                .map(|i| b2.coroot_coeffs(&theta).unwrap()[i] * b2.cartan()[j][i])
                .sum();
            let twice_ip: i32 = (0..2)
                .map(|i| theta.coeffs()[i] * b2.cartan()[j][i] * b2.lengthsq()[i])
                .sum();
            assert_eq!(via_expansion, twice_ip / b2.root_lengthsq(&theta).unwrap());
        }
        let a3 = rs(Family::A, 3);
        assert_eq!(a3.coroot_coeffs(&r(&[1, 1, 1])).unwrap(), vec![1, 1, 1]);
        assert_eq!(a3.coroot_coeffs(&r(&[0, 1, 0])).unwrap(), vec![0, 1, 0]);
    }

    #[test]
    fn subsystem_bases() {
        let d5 = rs(Family::D, 5);
        let simple: Vec<_> = (1..=5).map(|i| d5.simple_root(i)).collect();
        assert!(d5.is_subsystem_base(&simple));
        assert!(!d5.is_subsystem_base(&[r(&[1, 0, 0, 0, 0]), r(&[-1, 0, 0, 0, 0])]));
        assert!(!d5.is_subsystem_base(&[r(&[1, 0, 0, 0, 0]), r(&[1, 1, 0, 0, 0])]));
    }

    #[test]
    fn invariants_all_types() {
        let mut types = vec![];
        for n in 1..=8 {
            types.push((Family::A, n));
        }
        for n in 2..=8 {
            types.push((Family::B, n));
            types.push((Family::C, n));
        }
        for n in 3..=8 {
            types.push((Family::D, n));
        }
        types.extend([(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)]);
        for (f, n) in types {
            let sys = rs(f, n);
            for g in sys.roots() {
                assert!(g.is_positive() || g.neg().is_positive());
                assert!(sys.contains(&g.neg()));
                assert_eq!(sys.height(&g.neg()).unwrap(), -sys.height(g).unwrap());
                sys.coroot_coeffs(g).unwrap();
            }
            for a in sys.roots() {
                for b in sys.roots() {
                    if a != b && *a != b.neg() && sys.contains(&a.add(b)) {
                        assert!(sys.chain_p(a, b).unwrap() <= 3);
                    }
                }
            }
        }
    }
}
