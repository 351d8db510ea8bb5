//! Deciding and witnessing `[h,e] = e`, `s`-overalgebras, `pgl2`-triples and
//! `sl2`-triples for a nilpotent element of a Chevalley algebra over GF(2).
//!
//! Linear questions (`e ∈ im ad e`, `e ∈ im (ad e)²`) are answered exactly.
//! The nonlinear ones are searched; a failed search reports how far it got
//! instead of claiming nonexistence.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chevalley::{Element, IsogenyKind, LieAlgebra, LieBracket};
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::gf4::{self, Gf4};
use crate::rootdata::{Family, Root};
use crate::salg::recognize_s;
use crate::specs::{OrbitRep, Specification};

pub const DEFAULT_EXHAUSTIVE_CAP: usize = 16;

/// Largest algebra on which the GF(2)/GF(4) point searches run.
pub const EXHAUSTIVE_DIM: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    /// Affine spaces of dimension at most this are swept point by point.
    pub exhaustive_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            exhaustive_cap: DEFAULT_EXHAUSTIVE_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    HOnly,
    S,
    Pgl2,
    Sl2,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessKind::HOnly => "h_only",
            WitnessKind::S => "s",
            WitnessKind::Pgl2 => "pgl2",
            WitnessKind::Sl2 => "sl2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessTriple {
    pub kind: WitnessKind,
    pub e: Element,
    pub h: Element,
    pub f: Option<Element>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Proved,
    RefutedLinear,
    RefutedExhaustive,
    Unresolved,
}

impl SearchStatus {
    pub fn verdict(self) -> Option<bool> {
        match self {
            SearchStatus::Proved => Some(true),
            SearchStatus::RefutedLinear | SearchStatus::RefutedExhaustive => Some(false),
            SearchStatus::Unresolved => None,
        }
    }
}

impl fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchStatus::Proved => "proved",
            SearchStatus::RefutedLinear => "refuted_linear",
            SearchStatus::RefutedExhaustive => "refuted_exhaustive",
            SearchStatus::Unresolved => "unresolved",
        })
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witness: Option<WitnessTriple>,
    pub method: String,
}

impl SearchOutcome {
    fn found(w: WitnessTriple, method: impl Into<String>) -> Self {
        SearchOutcome {
            status: SearchStatus::Proved,
            witness: Some(w),
            method: method.into(),
        }
    }

    fn none(status: SearchStatus, method: impl Into<String>) -> Self {
        SearchOutcome {
            status,
            witness: None,
            method: method.into(),
        }
    }
}

// ---- linear problems ----

/// Some `h` with `[h,e] = e`, free variables set to zero.
pub fn solve_h(l: &LieAlgebra, e: &Element) -> Option<Element> {
    l.ad_matrix(e).solve(e).expect("square system")
}

/// Toral `h₀ ∈ span{h_i}` acting as the identity on the height-one part:
/// `π₁([h₀,e]) = [h₀,π₁(e)] = π₁(e)`.
pub fn toral_solution_check(l: &LieAlgebra, e: &Element) -> Option<Element> {
    let cart: Vec<usize> = l.cartan_indices().collect();
    let target = l.height_component(e, 1);
    let m = l.ad_matrix(&target).select_columns(&cart);
    m.solve(&target)
        .expect("column count matches")
        .map(|x| x.expand(&cart, l.dim()))
}

pub fn automiser_dim(l: &LieAlgebra, e: &Element) -> Result<usize> {
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok(solve_h(l, e).is_some() as usize)
}

/// All toral `h` with `[h,e] = e` exactly, as `(particular, kernel basis)`.
fn toral_solutions(l: &LieAlgebra, e: &Element) -> Option<(Element, Vec<Element>)> {
    let cart: Vec<usize> = l.cartan_indices().collect();
    let m = l.ad_matrix(e).select_columns(&cart);
    let x = m.solve(e).expect("column count matches")?;
    let ker = m.nullspace().into_iter().map(|k| k.expand(&cart, l.dim())).collect();
    Some((x.expand(&cart, l.dim()), ker))
}

/// Points of `base + span(kernel)`: every point when `dim ≤ cap`, otherwise
/// the base and its translates by single kernel vectors.
fn affine_points(base: &Element, kernel: &[Element], cap: usize) -> Vec<Element> {
    let mut out = vec![base.clone()];
    if kernel.len() <= cap {
        // Gray-code walk
        let mut cur = base.clone();
        for step in 1u64..1 << kernel.len() {
            cur.xor_assign(&kernel[step.trailing_zeros() as usize]);
            out.push(cur.clone());
        }
    } else {
        out.extend(kernel.iter().map(|k| base.add(k)));
    }
    out
}

fn is_simple_support(l: &LieAlgebra, e: &Element) -> bool {
    e.ones().all(|i| l.basis_height(i) == 1)
}

// ---- s ----

/// Candidate `f`'s solving `(ad e)² f = e` inside the column set `cols`.
fn restricted_solutions(m2: &Gf2Matrix, e: &Element, cols: &[usize], dim: usize, cap: usize) -> Vec<Element> {
    let sub = m2.select_columns(cols);
    let Some(x) = sub.solve(e).expect("column count matches") else {
        return vec![];
    };
    let ker = sub.nullspace();
    affine_points(&x, &ker, cap)
        .into_iter()
        .map(|v| v.expand(cols, dim))
        .collect()
}

pub fn s_witness(l: &LieAlgebra, e: &Element, opts: &SearchOptions) -> Result<SearchOutcome> {
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    let m = l.ad_matrix(e);
    let m2 = m.mul(&m).expect("square");
    if !m2.in_image(e).expect("square") {
        return Ok(SearchOutcome::none(SearchStatus::RefutedLinear, "e not in im (ad e)^2"));
    }
    let d = l.dim();
    let neg: Vec<usize> = (0..d).filter(|&i| l.basis_height(i) < 0).collect();
    let all: Vec<usize> = (0..d).collect();
    let mut stages: Vec<(&str, Vec<usize>)> = Vec::new();
    if is_simple_support(l, e) {
        let cols: Vec<usize> = e
            .ones()
            .map(|i| l.root_index(&l.basis_root(i).expect("root vector").neg()).expect("negative root"))
            .collect();
        stages.push(("f in span of e_-alpha, alpha in support", cols));
    }
    stages.push(("f in negative root span", neg));
    stages.push(("f unrestricted", all));
    for (name, cols) in &stages {
        for f in restricted_solutions(&m2, e, cols, d, opts.exhaustive_cap) {
            if let Ok((e1, h1, f1)) = recognize_s(l, e, &f) {
                let w = WitnessTriple {
                    kind: WitnessKind::S,
                    e: e1,
                    h: h1,
                    f: Some(f1),
                };
                return checked(l, w, name);
            }
        }
    }
    Ok(SearchOutcome::none(
        SearchStatus::Unresolved,
        "e in im (ad e)^2 but no searched f closes to s",
    ))
}

fn checked(l: &LieAlgebra, w: WitnessTriple, method: &str) -> Result<SearchOutcome> {
    if !verify_triple(l, &w) {
        return Err(Error::WitnessVerification { kind: w.kind.to_string() });
    }
    Ok(SearchOutcome::found(w, method))
}

// ---- pgl2 ----

/// `c(e) ∩ ker(ad h + 1)`.
fn pgl2_f_space(l: &LieAlgebra, ade: &Gf2Matrix, h: &Element) -> Vec<Element> {
    let adh = l.ad_matrix(h).add(&Gf2Matrix::identity(l.dim()));
    ade.vstack(&adh).nullspace()
}

/// Prefer a single positive root vector, then any basis vector of the space
/// that is not a multiple of `e`.
fn pick_pgl2_f(l: &LieAlgebra, e: &Element, space: &[Element]) -> Option<Element> {
    if crate::gf2::span_rank(l.dim(), space) < 2 {
        return None;
    }
    let base_rank = crate::gf2::span_rank(l.dim(), space);
    let in_space = |v: &Element| {
        let mut s = space.to_vec();
        s.push(v.clone());
        crate::gf2::span_rank(l.dim(), &s) == base_rank
    };
    let mut pos: Vec<usize> = (0..l.dim()).filter(|&i| l.basis_height(i) > 0).collect();
    pos.sort_by_key(|&i| std::cmp::Reverse(l.basis_height(i)));
    for i in pos {
        let v = l.basis(i);
        if v != *e && in_space(&v) {
            return Some(v);
        }
    }
    space.iter().find(|v| **v != *e && !v.is_zero()).cloned()
}

fn recipe_h_candidates(l: &LieAlgebra) -> Vec<(String, Element)> {
    let n = l.rank();
    let ty = l.simple_type();
    let sum = |idx: &[usize]| {
        let mut h = l.zero();
        for &i in idx {
            if (1..=n).contains(&i) {
                h.flip(i - 1);
            }
        }
        h
    };
    let mut out = vec![("h = sum of all h_i".to_string(), sum(&(1..=n).collect::<Vec<_>>()))];
    let pairs = |start: usize, upto: usize| -> Vec<usize> {
        (0..=upto).flat_map(|i| [4 * i + start, 4 * i + start + 1]).collect()
    };
    match ty.family() {
        Family::A if n >= 2 => {
            let idx = match n % 4 {
                2 | 3 => pairs(1, (n - 2) / 4),
                0 => pairs(2, n / 4),
                _ => vec![],
            };
            if !idx.is_empty() {
                out.push(("type A h recipe".into(), sum(&idx)));
            }
        }
        Family::D => {
            let idx = match n % 4 {
                0 | 3 => pairs(1, (n - 3) / 4),
                1 => pairs(2, (n - 2) / 4),
                _ => vec![],
            };
            if !idx.is_empty() {
                out.push(("type D h recipe".into(), sum(&idx)));
            }
            if l.isogeny() == IsogenyKind::HSpin {
                let mut idx: Vec<usize> = (1..=n - 2).collect();
                idx.push(n);
                out.push(("HSpin h = h_1+..+h_{n-2}+h_n".into(), sum(&idx)));
            }
        }
        _ => {}
    }
    out
}

pub fn pgl2_witness(l: &LieAlgebra, e: &Element, opts: &SearchOptions) -> Result<SearchOutcome> {
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    let ade = l.ad_matrix(e);
    let Some(h0) = ade.solve(e).expect("square") else {
        return Ok(SearchOutcome::none(SearchStatus::RefutedLinear, "no h with [h,e]=e"));
    };
    let try_h = |h: &Element| -> Option<WitnessTriple> {
        if l.bracket(h, e) != *e {
            return None;
        }
        let space = pgl2_f_space(l, &ade, h);
        pick_pgl2_f(l, e, &space).map(|f| WitnessTriple {
            kind: WitnessKind::Pgl2,
            e: e.clone(),
            h: h.clone(),
            f: Some(f),
        })
    };
    for (name, h) in recipe_h_candidates(l) {
        if let Some(w) = try_h(&h) {
            return checked(l, w, &name);
        }
    }
    if let Some((t0, tker)) = toral_solutions(l, e) {
        for h in affine_points(&t0, &tker, opts.exhaustive_cap) {
            if let Some(w) = try_h(&h) {
                return checked(l, w, "toral h sweep");
            }
        }
    }
    let ker = ade.nullspace();
    let complete = ker.len() <= opts.exhaustive_cap;
    for h in affine_points(&h0, &ker, opts.exhaustive_cap) {
        if let Some(w) = try_h(&h) {
            return checked(l, w, "affine h sweep");
        }
    }
    if l.dim() <= EXHAUSTIVE_DIM && complete {
        if pgl2_exists_gf4(l, e, &h0, &ker) {
            return Ok(SearchOutcome::none(
                SearchStatus::Proved,
                "triple exists over GF(4) only; no GF(2) witness",
            ));
        }
        return Ok(SearchOutcome::none(
            SearchStatus::RefutedExhaustive,
            "no triple over GF(2) or GF(4)",
        ));
    }
    Ok(SearchOutcome::none(SearchStatus::Unresolved, "search exhausted without witness"))
}

// ---- sl2 ----

fn root_vector_if(l: &LieAlgebra, r: Root) -> Option<Element> {
    l.root_vector(&r).ok()
}

fn sl2_recipe(l: &LieAlgebra, e: &Element) -> Option<(String, Element)> {
    let n = l.rank();
    if n < 2 {
        return None;
    }
    let rs = l.root_system();
    let top = rs.highest_root().clone();
    let a1 = Root::simple(n, 1);
    let a2 = Root::simple(n, 2);
    match l.simple_type().family() {
        Family::A | Family::C => root_vector_if(l, top.sub(&a1)).map(|f| ("f = e_{top-a1}".into(), f)),
        Family::B | Family::D => {
            let a2_in = l.root_index(&a2).map(|i| e.get(i)).unwrap_or(false);
            if a2_in {
                root_vector_if(l, top.sub(&a2)).map(|f| ("f = e_{top-a2}".into(), f))
            } else {
                root_vector_if(l, top.sub(&a1).sub(&a2)).map(|f| ("f = e_{top-a1-a2}".into(), f))
            }
        }
        _ => None,
    }
}

fn sl2_triple(l: &LieAlgebra, e: &Element, f: &Element) -> Option<WitnessTriple> {
    let h = l.bracket(e, f);
    let w = WitnessTriple {
        kind: WitnessKind::Sl2,
        e: e.clone(),
        h,
        f: Some(f.clone()),
    };
    verify_triple(l, &w).then_some(w)
}

pub fn sl2_witness(l: &LieAlgebra, e: &Element, _opts: &SearchOptions) -> Result<SearchOutcome> {
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    if let Some((name, f)) = sl2_recipe(l, e) {
        if let Some(w) = sl2_triple(l, e, &f) {
            return checked(l, w, &name);
        }
    }
    let mut order: Vec<usize> = (l.rank()..l.dim()).collect();
    // positive roots from the top down, then negative roots
    order.sort_by_key(|&i| std::cmp::Reverse(l.basis_height(i)));
    for i in order {
        if let Some(w) = sl2_triple(l, e, &l.basis(i)) {
            return checked(l, w, "single root vector scan");
        }
    }
    if l.dim() <= EXHAUSTIVE_DIM {
        return Ok(if sl2_exists_gf4(l, e) {
            SearchOutcome::none(SearchStatus::Proved, "triple exists over GF(4) only; no GF(2) witness")
        } else {
            SearchOutcome::none(SearchStatus::RefutedExhaustive, "no triple over GF(2) or GF(4)")
        });
    }
    Ok(SearchOutcome::none(SearchStatus::Unresolved, "no root vector f works"))
}

// ---- GF(4) brute force ----

type V4 = Vec<Gf4>;

fn lift(v: &Element) -> V4 {
    (0..v.len()).map(|i| Gf4::from_bool(v.get(i))).collect()
}

fn bracket4(l: &LieAlgebra, x: &V4, y: &V4) -> V4 {
    let d = l.dim();
    let mut out = vec![Gf4::ZERO; d];
    for i in (0..d).filter(|&i| !x[i].is_zero()) {
        for j in (0..d).filter(|&j| !y[j].is_zero()) {
            let c = x[i] * y[j];
            for k in l.basis_bracket(i, j).ones() {
                out[k] = out[k] + c;
            }
        }
    }
    out
}

fn points4(len: usize) -> impl Iterator<Item = Vec<Gf4>> {
    (0u64..1 << (2 * len)).map(move |m| (0..len).map(|i| Gf4::new((m >> (2 * i)) as u8)).collect())
}

fn combine4(base: &Element, ker: &[Element], c: &[Gf4]) -> V4 {
    let mut h = lift(base);
    for (k, &ci) in ker.iter().zip(c) {
        for j in k.ones() {
            h[j] = h[j] + ci;
        }
    }
    h
}

/// Over GF(4): some `h ∈ h₀ + ker(ad e)` with `c(e) ∩ ker(ad h + 1)` of dimension ≥ 2.
fn pgl2_exists_gf4(l: &LieAlgebra, e: &Element, h0: &Element, ker: &[Element]) -> bool {
    let d = l.dim();
    let e4 = lift(e);
    let basis: Vec<V4> = (0..d).map(|j| lift(&l.basis(j))).collect();
    points4(ker.len()).any(|c| {
        let h = combine4(h0, ker, &c);
        let mut rows: Vec<V4> = vec![vec![Gf4::ZERO; d]; 2 * d];
        for (j, bj) in basis.iter().enumerate() {
            let col_e = bracket4(l, &e4, bj);
            let col_h = bracket4(l, &h, bj);
            for i in 0..d {
                rows[i][j] = col_e[i];
                rows[d + i][j] = col_h[i] + if i == j { Gf4::ONE } else { Gf4::ZERO };
            }
        }
        d - gf4::rank(&rows) >= 2
    })
}

/// Over GF(4): some `f` with `h = [e,f] ≠ 0` and `[h,e] = [h,f] = 0`.
fn sl2_exists_gf4(l: &LieAlgebra, e: &Element) -> bool {
    let e4 = lift(e);
    points4(l.dim()).any(|f| {
        let h = bracket4(l, &e4, &f);
        h.iter().any(|x| !x.is_zero())
            && bracket4(l, &h, &e4).iter().all(|x| x.is_zero())
            && bracket4(l, &h, &f).iter().all(|x| x.is_zero())
    })
}

// ---- verification ----

pub fn verify_triple<L: LieBracket>(l: &L, w: &WitnessTriple) -> bool {
    let (e, h) = (&w.e, &w.h);
    if e.is_zero() || (w.kind != WitnessKind::Sl2 && l.bracket(h, e) != *e) {
        return false;
    }
    let f = match (&w.kind, &w.f) {
        (WitnessKind::HOnly, _) => return true,
        (_, Some(f)) => f,
        (_, None) => return false,
    };
    match w.kind {
        WitnessKind::S => l.bracket(e, f) == *h && l.bracket(h, f) == *f,
        WitnessKind::Pgl2 => {
            l.bracket(e, f).is_zero()
                && l.bracket(h, f) == *f
                && crate::gf2::span_rank(l.dim(), &[e.clone(), h.clone(), f.clone()]) == 3
        }
        WitnessKind::Sl2 => {
            l.bracket(e, f) == *h
                && !h.is_zero()
                && l.bracket(h, e).is_zero()
                && l.bracket(h, f).is_zero()
        }
        WitnessKind::HOnly => unreachable!(),
    }
}

// ---- Table-4 construction ----

/// `(e, h, f)` for `D_n`, spec `((),(l),(n))`, `n ≢ 2 (mod 4)`, in the simply
/// connected algebra `l`.
pub fn dn_family_triple(l: &LieAlgebra, big_l: usize) -> Result<WitnessTriple> {
    let ty = l.simple_type();
    let n = ty.rank();
    if ty.family() != Family::D || n % 4 == 2 {
        return Err(Error::OutOfScope(format!("Table-4 construction for {ty}")));
    }
    let spec = Specification::d(&[], &[big_l as u32], &[n as u32], None);
    let rep = crate::specs::representative(&spec, ty)?;
    let e = l.element_from_support(&rep.support)?;
    let idx: Vec<usize> = match n % 4 {
        0 => (0..n / 4).flat_map(|i| [4 * i + 1, 4 * i + 2]).collect(),
        1 => (0..=(n - 5) / 4).flat_map(|i| [4 * i + 2, 4 * i + 3]).collect(),
        _ => (0..=(n - 3) / 4).flat_map(|i| [4 * i + 1, 4 * i + 2]).collect(),
    };
    let mut h = l.zero();
    let mut f = l.zero();
    for &i in &idx {
        h.flip(i - 1);
        f.xor_assign(&l.root_vector(&Root::simple(n, i).neg())?);
    }
    let add_deltas = match n % 4 {
        0 => big_l % 2 == 1,
        1 => big_l.is_multiple_of(2),
        _ => !(big_l.is_multiple_of(2) || big_l == n),
    };
    if add_deltas {
        for k in 1..=n - big_l {
            let mut c = vec![0; n];
            let lo = 2 * big_l + k - n;
            for i in lo..=n - 2 {
                c[i - 1] += 1;
            }
            for j in n - k + 1..=n {
                c[j - 1] += 1;
            }
            f.xor_assign(&l.root_vector(&Root::new(c))?);
        }
    }
    Ok(WitnessTriple {
        kind: WitnessKind::S,
        e,
        h,
        f: Some(f),
    })
}

// ---- reports ----

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub kind: WitnessKind,
    pub h: Vec<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<u8>>,
}

impl From<&WitnessTriple> for WitnessRecord {
    fn from(w: &WitnessTriple) -> Self {
        WitnessRecord {
            kind: w.kind,
            h: w.h.to_bits(),
            f: w.f.as_ref().map(Gf2Vector::to_bits),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Statuses {
    pub s: SearchStatus,
    pub pgl2: SearchStatus,
    pub sl2: SearchStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
    pub isogeny: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<Specification>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub h_exists: bool,
    pub automiser_dim: usize,
    pub s: Option<bool>,
    pub pgl2: Option<bool>,
    pub sl2: Option<bool>,
    pub statuses: Statuses,
    pub witnesses: Vec<WitnessRecord>,
    pub method_notes: Vec<String>,
}

impl ClassificationReport {
    pub fn orbit_name(&self) -> String {
        match (&self.spec, &self.label) {
            (Some(s), _) => s.to_string(),
            (_, Some(l)) => l.clone(),
            _ => "?".into(),
        }
    }
}

/// Run every decision procedure on `Σ_{γ ∈ support} e_γ`.
pub fn classify(l: &LieAlgebra, rep: &OrbitRep, opts: &SearchOptions) -> Result<ClassificationReport> {
    let e = l.element_from_support(&rep.support)?;
    let (report, _) = classify_element(l, &e, opts)?;
    Ok(ClassificationReport {
        spec: rep.spec.clone(),
        label: rep.label.clone(),
        ..report
    })
}

/// As [`classify`], also returning the full witness triples.
pub fn classify_element(
    l: &LieAlgebra,
    e: &Element,
    opts: &SearchOptions,
) -> Result<(ClassificationReport, Vec<WitnessTriple>)> {
    let h = solve_h(l, e);
    let auto = automiser_dim(l, e)?;
    let s = s_witness(l, e, opts)?;
    let p = pgl2_witness(l, e, opts)?;
    let q = sl2_witness(l, e, opts)?;
    let mut triples = Vec::new();
    let mut notes = Vec::new();
    if let Some(h) = &h {
        triples.push(WitnessTriple {
            kind: WitnessKind::HOnly,
            e: e.clone(),
            h: h.clone(),
            f: None,
        });
    }
    for (name, o) in [("s", &s), ("pgl2", &p), ("sl2", &q)] {
        notes.push(format!("{name}: {} ({})", o.status, o.method));
        if let Some(w) = &o.witness {
            triples.push(w.clone());
        }
    }
    let ty = l.simple_type();
    let report = ClassificationReport {
        ty: ty.to_string(),
        rank: ty.rank(),
        isogeny: l.isogeny().short().to_string(),
        spec: None,
        label: None,
        h_exists: h.is_some(),
        automiser_dim: auto,
        s: s.status.verdict(),
        pgl2: p.status.verdict(),
        sl2: q.status.verdict(),
        statuses: Statuses {
            s: s.status,
            pgl2: p.status,
            sl2: q.status,
        },
        witnesses: triples.iter().map(WitnessRecord::from).collect(),
        method_notes: notes,
    };
    Ok((report, triples))
}
