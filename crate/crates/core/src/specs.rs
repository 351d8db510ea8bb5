//! Specification tuples of classical nilpotent orbits and their standard
//! representatives.
//!
//! Index conventions follow the tuple arithmetic
//! `u_i = Σ_{j<i} k_j`, `v_i = u_{r+1} + Σ_{j<i} m_j`, `w_i = v_{s+1} + Σ_{j<i} n_j`,
//! with all root indices 1-based. A formula that lands outside `1..=rank`
//! raises [`Error::RankGuard`] instead of being clamped.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{Family, Root, RootSystem, SimpleType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassTag {
    I,
    II,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassTag::I => "I",
            ClassTag::II => "II",
        })
    }
}

/// One flat record for all four classical families; unused fields stay empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Specification {
    pub family: Family,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub k: Vec<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub l: Vec<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub m: Vec<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub n: Vec<u32>,
    #[serde(rename = "mB", default, skip_serializing_if = "Option::is_none")]
    pub m_b: Option<u32>,
    #[serde(rename = "classTag", default, skip_serializing_if = "Option::is_none")]
    pub class_tag: Option<ClassTag>,
}

impl Specification {
    pub fn a(k: &[u32]) -> Self {
        Self::empty(Family::A).with_k(k)
    }

    pub fn b(k: &[u32], l: &[u32], m: &[u32], m_b: u32) -> Self {
        let mut s = Self::empty(Family::B).with_k(k).with_lm(l, m);
        s.m_b = Some(m_b);
        s
    }

    pub fn c(k: &[u32], l: &[u32], m: &[u32], n: &[u32]) -> Self {
        let mut s = Self::empty(Family::C).with_k(k).with_lm(l, m);
        s.n = n.to_vec();
        s
    }

    pub fn d(k: &[u32], l: &[u32], m: &[u32], tag: Option<ClassTag>) -> Self {
        let mut s = Self::empty(Family::D).with_k(k).with_lm(l, m);
        s.class_tag = tag;
        s
    }

    fn empty(family: Family) -> Self {
        Specification {
            family,
            k: vec![],
            l: vec![],
            m: vec![],
            n: vec![],
            m_b: None,
            class_tag: None,
        }
    }

    fn with_k(mut self, k: &[u32]) -> Self {
        self.k = k.to_vec();
        self
    }

    fn with_lm(mut self, l: &[u32], m: &[u32]) -> Self {
        self.l = l.to_vec();
        self.m = m.to_vec();
        self
    }

    /// Parse the JSON form; `family` may be omitted and is then taken from `default`.
    pub fn from_json(text: &str, default: Family) -> Result<Self> {
        let mut v: serde_json::Value = serde_json::from_str(text)?;
        if let Some(obj) = v.as_object_mut() {
            obj.entry("family")
                .or_insert_with(|| serde_json::Value::String(default.to_string()));
        }
        let spec: Specification = serde_json::from_value(v)?;
        if spec.family != default {
            return Err(Error::InvalidSpec {
                ty: default.to_string(),
                reason: format!("spec is for family {}", spec.family),
            });
        }
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("specifications always serialize")
    }

    pub fn s(&self) -> usize {
        self.m.len()
    }

    pub fn r(&self) -> usize {
        self.k.len()
    }

    pub fn t(&self) -> usize {
        self.n.len()
    }

    fn sort_key(&self) -> (&[u32], &[u32], &[u32], &[u32], Option<u32>, Option<ClassTag>) {
        (&self.k, &self.l, &self.m, &self.n, self.m_b, self.class_tag)
    }

    /// Regular orbit of the given rank.
    pub fn regular(ty: SimpleType) -> Specification {
        let n = ty.rank() as u32;
        match ty.family() {
            Family::A => Self::a(&[n + 1]),
            Family::B => Self::b(&[], &[], &[], n + 1),
            Family::C => Self::c(&[], &[], &[], &[n]),
            Family::D => Self::d(&[], &[n], &[n], None),
            _ => panic!("regular spec requested for exceptional type {ty}"),
        }
    }

    pub fn is_regular(&self, ty: SimpleType) -> bool {
        ty.family().is_classical() && *self == Self::regular(ty)
    }
}

impl PartialOrd for Specification {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Specification {
    fn cmp(&self, other: &Self) -> Ordering {
        self.family
            .cmp(&other.family)
            .then_with(|| self.sort_key().cmp(&other.sort_key()))
    }
}

impl fmt::Display for Specification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq = |v: &[u32]| {
            let parts: Vec<String> = v.iter().map(u32::to_string).collect();
            format!("({})", parts.join(","))
        };
        match self.family {
            Family::A => write!(f, "{}", seq(&self.k)),
            Family::B => write!(
                f,
                "({},{},{},{})",
                seq(&self.k),
                seq(&self.l),
                seq(&self.m),
                self.m_b.unwrap_or(0)
            ),
            Family::C => write!(
                f,
                "({},{},{},{})",
                seq(&self.k),
                seq(&self.l),
                seq(&self.m),
                seq(&self.n)
            ),
            _ => {
                write!(f, "({},{},{})", seq(&self.k), seq(&self.l), seq(&self.m))?;
                if let Some(t) = self.class_tag {
                    write!(f, "{t}")?;
                }
                Ok(())
            }
        }
    }
}

fn non_increasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

fn strictly_decreasing(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[0] > w[1])
}

fn sum(v: &[u32]) -> u32 {
    v.iter().sum()
}

fn lm_diffs(l: &[u32], m: &[u32]) -> Option<Vec<u32>> {
    l.iter().zip(m).map(|(&l, &m)| m.checked_sub(l)).collect()
}

/// Shared chain conditions on `(l_i)`, `(m_i)`, `(m_i - l_i)`.
fn lm_chains_ok(spec: &Specification) -> bool {
    if spec.l.len() != spec.m.len() {
        return false;
    }
    let Some(d) = lm_diffs(&spec.l, &spec.m) else {
        return false;
    };
    strictly_decreasing(&spec.m) && strictly_decreasing(&spec.l) && strictly_decreasing(&d)
}

/// `(m+1)/2 < l ≤ m`.
fn orthogonal_l_ok(l: u32, m: u32) -> bool {
    2 * l > m + 1 && l <= m
}

pub fn validate(spec: &Specification, ty: SimpleType) -> bool {
    if spec.family != ty.family() || !ty.family().is_classical() {
        return false;
    }
    let n = ty.rank() as u32;
    let positive = |v: &[u32]| v.iter().all(|&x| x > 0);
    if !(positive(&spec.k) && positive(&spec.l) && positive(&spec.m) && positive(&spec.n)) {
        return false;
    }
    if !non_increasing(&spec.k) {
        return false;
    }
    match spec.family {
        Family::A => {
            spec.l.is_empty()
                && spec.m.is_empty()
                && spec.n.is_empty()
                && spec.m_b.is_none()
                && spec.class_tag.is_none()
                && sum(&spec.k) == n + 1
        }
        Family::B => {
            let Some(mb) = spec.m_b else { return false };
            mb >= 1
                && spec.n.is_empty()
                && spec.class_tag.is_none()
                && lm_chains_ok(spec)
                && spec.l.iter().zip(&spec.m).all(|(&l, &m)| orthogonal_l_ok(l, m))
                && spec.l.last().is_none_or(|&ls| mb < ls)
                && sum(&spec.k) + sum(&spec.m) + mb == n + 1
        }
        Family::C => {
            let mult_ok = spec.n.windows(3).all(|w| !(w[0] == w[1] && w[1] == w[2]));
            spec.m_b.is_none()
                && spec.class_tag.is_none()
                && lm_chains_ok(spec)
                && non_increasing(&spec.n)
                && mult_ok
                && spec.l.iter().zip(&spec.m).all(|(&l, &m)| 2 * l < m)
                && spec.l.iter().zip(&spec.m).all(|(&l, &m)| {
                    spec.n.iter().all(|&nj| nj > m - l || nj < l)
                })
                && sum(&spec.k) + sum(&spec.m) + sum(&spec.n) == n
        }
        Family::D => {
            let splits = spec.m.is_empty() && spec.k.iter().all(|k| k % 2 == 0);
            spec.m_b.is_none()
                && spec.n.is_empty()
                && lm_chains_ok(spec)
                && spec.l.iter().zip(&spec.m).all(|(&l, &m)| orthogonal_l_ok(l, m))
                && splits == spec.class_tag.is_some()
                && sum(&spec.k) + sum(&spec.m) == n
        }
        _ => false,
    }
}

fn require_valid(spec: &Specification, ty: SimpleType) -> Result<()> {
    if validate(spec, ty) {
        Ok(())
    } else {
        Err(Error::InvalidSpec {
            ty: ty.to_string(),
            reason: format!("{spec} fails the specification conditions"),
        })
    }
}

// ---- enumeration ----

fn partitions(total: u32, max_part: u32, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
    if total == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=max_part.min(total)).rev() {
        cur.push(p);
        partitions(total - p, p, out, cur);
        cur.pop();
    }
}

fn all_partitions(total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    partitions(total, total, &mut out, &mut Vec::new());
    out
}

/// Non-increasing sequences summing to `total` with every value used at most twice.
fn partitions_mult2(total: u32) -> Vec<Vec<u32>> {
    all_partitions(total)
        .into_iter()
        .filter(|p| p.windows(3).all(|w| !(w[0] == w[1] && w[1] == w[2])))
        .collect()
}

fn strict_partitions(total: u32, max_part: u32, min_part: u32, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
    if total == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (min_part..=max_part.min(total)).rev() {
        cur.push(p);
        strict_partitions(total - p, p.saturating_sub(1), min_part, out, cur);
        cur.pop();
    }
}

/// All `(l, m)` pairs of sequences with `Σ m = total` obeying the chain
/// conditions and the per-entry bound `l_ok`.
fn lm_pairs(total: u32, min_m: u32, l_ok: &dyn Fn(u32, u32) -> bool) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut ms = Vec::new();
    strict_partitions(total, total, min_m, &mut ms, &mut Vec::new());
    let mut out = Vec::new();
    for m in ms {
        let mut ls: Vec<Vec<u32>> = vec![vec![]];
        for &mi in &m {
            let mut next = Vec::new();
            for prefix in &ls {
                for li in 1..=mi {
                    if !l_ok(li, mi) {
                        continue;
                    }
                    if let (Some(&pl), Some(&pm)) = (prefix.last(), m.get(prefix.len().wrapping_sub(1))) {
                        if li >= pl || mi - li >= pm - pl {
                            continue;
                        }
                    }
                    let mut p = prefix.clone();
                    p.push(li);
                    next.push(p);
                }
            }
            ls = next;
        }
        for l in ls {
            out.push((l, m.clone()));
        }
    }
    out
}

/// Every valid specification with non-empty representative support, sorted
/// lexicographically on `(k, l, m, n, mB, classTag)`.
pub fn enumerate(ty: SimpleType) -> Vec<Specification> {
    let n = ty.rank() as u32;
    let mut out = Vec::new();
    match ty.family() {
        Family::A => {
            for k in all_partitions(n + 1) {
                out.push(Specification::a(&k));
            }
        }
        Family::B => {
            for mb in 1..=n + 1 {
                for big_m in 0..=n + 1 - mb {
                    for (l, m) in lm_pairs(big_m, 2, &orthogonal_l_ok) {
                        if l.last().is_some_and(|&ls| mb >= ls) {
                            continue;
                        }
                        for k in all_partitions(n + 1 - mb - big_m) {
                            out.push(Specification::b(&k, &l, &m, mb));
                        }
                    }
                }
            }
        }
        Family::C => {
            for big_m in 0..=n {
                for (l, m) in lm_pairs(big_m, 3, &|l, m| 2 * l < m) {
                    for big_t in 0..=n - big_m {
                        for ns in partitions_mult2(big_t) {
                            for k in all_partitions(n - big_m - big_t) {
                                out.push(Specification::c(&k, &l, &m, &ns));
                            }
                        }
                    }
                }
            }
        }
        Family::D => {
            for big_m in 0..=n {
                for (l, m) in lm_pairs(big_m, 2, &orthogonal_l_ok) {
                    for k in all_partitions(n - big_m) {
                        if m.is_empty() && k.iter().all(|x| x % 2 == 0) {
                            out.push(Specification::d(&k, &l, &m, Some(ClassTag::I)));
                            out.push(Specification::d(&k, &l, &m, Some(ClassTag::II)));
                        } else {
                            out.push(Specification::d(&k, &l, &m, None));
                        }
                    }
                }
            }
        }
        _ => {}
    }
    out.retain(|s| validate(s, ty));
    let rs = RootSystem::build(ty);
    out.retain(|s| support_of(s, ty, &rs).map(|j| !j.is_empty()).unwrap_or(false));
    out.sort();
    out.dedup();
    out
}

// ---- representatives ----

/// A root given by `(lo, hi, coeff)` runs of 1-based indices; empty runs
/// (`lo = hi + 1`) are allowed.
fn run_root(ty: SimpleType, what: &str, runs: &[(i64, i64, i32)]) -> Result<Root> {
    let n = ty.rank() as i64;
    let mut c = vec![0; n as usize];
    for &(lo, hi, coeff) in runs {
        if lo > hi + 1 || lo < 1 || hi > n {
            let bad = if lo < 1 { lo } else { hi.max(lo) };
            return Err(Error::RankGuard {
                ty: ty.to_string(),
                what: what.to_string(),
                index: bad,
            });
        }
        for i in lo..=hi {
            c[(i - 1) as usize] += coeff;
        }
    }
    Ok(Root::new(c))
}

fn simple(ty: SimpleType, what: &str, i: i64) -> Result<Root> {
    run_root(ty, what, &[(i, i, 1)])
}

/// Offsets `u`, `v`, `w` as 0-based vectors: `u[i-1] = u_i`.
struct Offsets {
    u: Vec<i64>,
    v: Vec<i64>,
    w: Vec<i64>,
}

fn offsets(spec: &Specification) -> Offsets {
    let mut u = vec![0i64];
    for &k in &spec.k {
        u.push(u.last().unwrap() + k as i64);
    }
    let mut v = vec![*u.last().unwrap()];
    for &m in &spec.m {
        v.push(v.last().unwrap() + m as i64);
    }
    let mut w = vec![*v.last().unwrap()];
    for &x in &spec.n {
        w.push(w.last().unwrap() + x as i64);
    }
    Offsets { u, v, w }
}

/// Pieces of the standard representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pieces {
    pub j1: Vec<Root>,
    /// `β_i` in order, then (type C) `γ_i`.
    pub j2: Vec<Root>,
    pub j2_prime: Vec<Root>,
}

fn block(ty: SimpleType, start: i64, len: u32, out: &mut Vec<Root>) -> Result<()> {
    for j in 1..len as i64 {
        out.push(simple(ty, "J1", start + j)?);
    }
    Ok(())
}

fn raw_pieces(spec: &Specification, ty: SimpleType) -> Result<Pieces> {
    let n = ty.rank() as i64;
    let o = offsets(spec);
    let mut j1 = Vec::new();
    let mut j2 = Vec::new();
    let mut j2p = Vec::new();
    for (i, &k) in spec.k.iter().enumerate() {
        block(ty, o.u[i], k, &mut j1)?;
    }
    match spec.family {
        Family::A => {}
        Family::B => {
            for (i, (&l, &m)) in spec.l.iter().zip(&spec.m).enumerate() {
                block(ty, o.v[i], m, &mut j1)?;
                let vn = o.v[i + 1];
                let t = vn - 2 * (m as i64 - l as i64) - 1;
                j2.push(run_root(ty, "beta", &[(t, vn - 1, 1), (vn, n, 2)])?);
                j2p.push(run_root(ty, "beta~", &[(vn - 1, vn - 1, 1), (vn, n, 2)])?);
            }
            let mb = spec.m_b.unwrap_or(0) as i64;
            for j in n - mb + 2..=n {
                j1.push(simple(ty, "J1", j)?);
            }
        }
        Family::C => {
            for (i, (&l, &m)) in spec.l.iter().zip(&spec.m).enumerate() {
                block(ty, o.v[i], m, &mut j1)?;
                let a = o.v[i] + l as i64;
                j2.push(run_root(ty, "beta", &[(a, n - 1, 2), (n, n, 1)])?);
                let b = o.v[i + 1];
                j2p.push(run_root(ty, "beta~", &[(b, n - 1, 2), (n, n, 1)])?);
            }
            for (i, &x) in spec.n.iter().enumerate() {
                block(ty, o.w[i], x, &mut j1)?;
                let a = o.w[i] + x as i64;
                let g = if a < n {
                    run_root(ty, "gamma", &[(a, n - 1, 2), (n, n, 1)])?
                } else {
                    simple(ty, "gamma", n)?
                };
                j2.push(g.clone());
                j2p.push(g);
            }
        }
        Family::D => {
            let s = spec.s();
            for (i, (&l, &m)) in spec.l.iter().zip(&spec.m).enumerate() {
                block(ty, o.v[i], m, &mut j1)?;
                let vn = o.v[i + 1];
                let d = 2 * (m as i64 - l as i64);
                if i + 1 < s {
                    j2.push(run_root(
                        ty,
                        "beta",
                        &[(vn - d - 1, vn - 1, 1), (vn, n - 2, 2), (n - 1, n, 1)],
                    )?);
                    j2p.push(run_root(
                        ty,
                        "beta~",
                        &[(vn - 1, vn - 1, 1), (vn, n - 2, 2), (n - 1, n, 1)],
                    )?);
                } else {
                    j2.push(run_root(ty, "beta", &[(vn - d, n, 1)])?);
                    j2p.push(simple(ty, "beta~", n)?);
                }
            }
        }
        _ => {
            return Err(Error::InvalidSpec {
                ty: ty.to_string(),
                reason: "classical family required".into(),
            })
        }
    }
    let mut p = Pieces { j1, j2, j2_prime: j2p };
    if spec.class_tag == Some(ClassTag::II) {
        let from = Root::simple(ty.rank(), ty.rank() - 1);
        let to = Root::simple(ty.rank(), ty.rank());
        for list in [&mut p.j1, &mut p.j2, &mut p.j2_prime] {
            for r in list.iter_mut() {
                if *r == from {
                    *r = to.clone();
                }
            }
        }
    }
    Ok(p)
}

fn support_of(spec: &Specification, ty: SimpleType, rs: &RootSystem) -> Result<Vec<Root>> {
    let p = raw_pieces(spec, ty)?;
    let mut all = p.j1;
    all.extend(p.j2);
    for r in &all {
        if !rs.contains(r) {
            return Err(Error::InvalidSpec {
                ty: ty.to_string(),
                reason: format!("{spec} produced the non-root {r:?}"),
            });
        }
    }
    Ok(all)
}

/// A nilpotent element as `Σ_{γ ∈ support} e_γ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRep {
    pub support: Vec<Root>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<Specification>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl OrbitRep {
    /// Spec rendering for classical reps, label otherwise.
    pub fn name(&self) -> String {
        match (&self.spec, &self.label) {
            (Some(s), _) => s.to_string(),
            (None, Some(l)) => l.clone(),
            (None, None) => "?".to_string(),
        }
    }
}

pub fn pieces(spec: &Specification, ty: SimpleType) -> Result<Pieces> {
    require_valid(spec, ty)?;
    raw_pieces(spec, ty)
}

pub fn representative(spec: &Specification, ty: SimpleType) -> Result<OrbitRep> {
    require_valid(spec, ty)?;
    let rs = RootSystem::build(ty);
    representative_in(spec, ty, &rs)
}

/// As [`representative`], reusing an already built root system.
pub fn representative_in(spec: &Specification, ty: SimpleType, rs: &RootSystem) -> Result<OrbitRep> {
    require_valid(spec, ty)?;
    Ok(OrbitRep {
        support: support_of(spec, ty, rs)?,
        spec: Some(spec.clone()),
        label: None,
    })
}

/// `J1 ∪ J2′`.
pub fn overalgebra_base(spec: &Specification, ty: SimpleType) -> Result<Vec<Root>> {
    let p = pieces(spec, ty)?;
    let mut base = p.j1;
    base.extend(p.j2_prime);
    Ok(base)
}

/// Indices (1-based) `i` with `α_i ∈ J1` and `β_j − α_i ∈ Φ⁺`, for each `j`.
pub fn beta_minus_simple(spec: &Specification, ty: SimpleType) -> Result<Vec<Vec<usize>>> {
    if !matches!(ty.family(), Family::B | Family::D) {
        return Err(Error::WrongFamily("beta_root_facts".into()));
    }
    let p = pieces(spec, ty)?;
    let rs = RootSystem::build(ty);
    let n = ty.rank();
    let betas = &p.j2[..spec.s()];
    Ok(betas
        .iter()
        .map(|b| {
            (1..=n)
                .filter(|&i| {
                    let a = Root::simple(n, i);
                    p.j1.contains(&a) && {
                        let g = b.sub(&a);
                        g.is_positive() && rs.contains(&g)
                    }
                })
                .collect()
        })
        .collect())
}

/// Clause-by-clause report for the root facts on `β_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootFactsReport {
    /// Pairs `(i, j)` (1-based) with `β_i − β_j ∈ Φ`.
    pub difference_violations: Vec<(usize, usize)>,
    /// `(j, predicted index or None, actual indices)` where clause (ii) fails.
    pub index_violations: Vec<(usize, Option<usize>, Vec<usize>)>,
}

impl RootFactsReport {
    pub fn holds(&self) -> bool {
        self.difference_violations.is_empty() && self.index_violations.is_empty()
    }
}

/// Clause (ii) is read over simple roots in `J1`, which is where it is used.
/// The predicted index is `v_{j+1} - 2(m_j - l_j)` when `l_j < m_j`.
pub fn beta_root_facts_report(spec: &Specification, ty: SimpleType) -> Result<RootFactsReport> {
    let actual = beta_minus_simple(spec, ty)?;
    let p = pieces(spec, ty)?;
    let rs = RootSystem::build(ty);
    let s = spec.s();
    let betas = &p.j2[..s];
    let mut diff = Vec::new();
    for i in 0..s {
        for j in 0..s {
            if i != j && rs.contains(&betas[i].sub(&betas[j])) {
                diff.push((i + 1, j + 1));
            }
        }
    }
    let o = offsets(spec);
    let mut idx = Vec::new();
    for j in 0..s {
        let (l, m) = (spec.l[j] as i64, spec.m[j] as i64);
        let predicted = (l < m).then(|| (o.v[j + 1] - 2 * (m - l)) as usize);
        let want: Vec<usize> = predicted.into_iter().collect();
        if actual[j] != want {
            idx.push((j + 1, predicted, actual[j].clone()));
        }
    }
    Ok(RootFactsReport {
        difference_violations: diff,
        index_violations: idx,
    })
}

pub fn beta_root_facts(spec: &Specification, ty: SimpleType) -> Result<bool> {
    Ok(beta_root_facts_report(spec, ty)?.holds())
}

/// The orthogonal embedding `O_{2n+1} → O_{2n+2}`: append `m` to both `(l_i)` and `(m_i)`.
/// The result is returned even when it fails the D-family conditions.
pub fn embed_b_into_d(spec: &Specification) -> Result<Specification> {
    if spec.family != Family::B {
        return Err(Error::InvalidSpec {
            ty: spec.family.to_string(),
            reason: "embedding expects a type B specification".into(),
        });
    }
    let mb = spec.m_b.ok_or_else(|| Error::InvalidSpec {
        ty: "B".into(),
        reason: "missing mB".into(),
    })?;
    let mut l = spec.l.clone();
    let mut m = spec.m.clone();
    l.push(mb);
    m.push(mb);
    Ok(Specification::d(&spec.k, &l, &m, None))
}

/// `e ∈ so_{2n}` for a type C specification iff `s = t = 0`.
pub fn lies_in_so2n(spec: &Specification) -> bool {
    spec.m.is_empty() && spec.n.is_empty()
}
