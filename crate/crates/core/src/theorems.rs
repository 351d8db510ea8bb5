//! Closed-form predictions for the four overalgebra questions, and the
//! exceptional label tables they consult.
//!
//! Classical orbits are keyed on their specification; exceptional ones on a
//! normalised Bala–Carter label (see [`normalize_label`]).

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::chevalley::IsogenyKind;
use crate::error::{Error, Result};
use crate::rootdata::{Family, Root, SimpleType};
use crate::specs::{OrbitRep, Specification};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    HExists,
    #[serde(rename = "s")]
    SOver,
    Pgl2,
    Sl2,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [Theorem::HExists, Theorem::SOver, Theorem::Pgl2, Theorem::Sl2];

    pub fn key(self) -> &'static str {
        match self {
            Theorem::HExists => "h_exists",
            Theorem::SOver => "s",
            Theorem::Pgl2 => "pgl2",
            Theorem::Sl2 => "sl2",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.key() == s)
            .ok_or_else(|| Error::OutOfScope(format!("unknown theorem {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelTable {
    pub family: Family,
    pub rank: usize,
    /// Absent when the list does not depend on the isogeny.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isogeny: Option<IsogenyKind>,
    pub theorem: Theorem,
    pub labels: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelTables {
    pub version: u32,
    pub tables: Vec<LabelTable>,
}

const LABELS_JSON: &str = include_str!("../data/labels.json");

pub fn label_tables() -> &'static LabelTables {
    static TABLES: OnceLock<LabelTables> = OnceLock::new();
    TABLES.get_or_init(|| serde_json::from_str(LABELS_JSON).expect("bundled label tables parse"))
}

/// The bundled tables as shipped.
pub fn label_tables_json() -> &'static str {
    LABELS_JSON
}

pub fn label_table(ty: SimpleType, iso: IsogenyKind, which: Theorem) -> Option<&'static LabelTable> {
    label_tables().tables.iter().find(|t| {
        t.family == ty.family() && t.rank == ty.rank() && t.theorem == which && t.isogeny.is_none_or(|i| i == iso)
    })
}

/// ASCII form of a Bala–Carter label.
///
/// Accepts TeX (`E_{6}(a_{1})`, `\tilde{A}_{2}`, `(B_{2})^{(2)}`) or Unicode
/// (`E₆(a₁)`, `Ã₂`) input. Tildes become a trailing `~` and primes stay.
pub fn normalize_label(raw: &str) -> String {
    let s = raw.replace(['$', ' '], "");
    let mut out = String::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        if let Some(after) = rest.strip_prefix("\\tilde{") {
            let close = matching_brace(after);
            out.push_str(&normalize_label(&after[..close]));
            rest = &after[close + 1..];
            // the tilde goes after any subscript that follows the letter
            let sub_len = subscript_prefix(rest);
            out.push_str(&normalize_label(&rest[..sub_len]));
            out.push('~');
            rest = &rest[sub_len..];
            continue;
        }
        let c = rest.chars().next().unwrap();
        rest = &rest[c.len_utf8()..];
        match c {
            '_' | '{' | '}' => {}
            '\u{303}' => out.push('~'),
            '₀'..='₉' => out.push(char::from(b'0' + (c as u32 - '₀' as u32) as u8)),
            '′' | '’' => out.push('\''),
            'Ã' => out.push_str("A~"),
            _ => out.push(c),
        }
    }
    // combining tildes land right after the letter; move them past the digits
    let mut fixed = String::new();
    let mut chars = out.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '~' {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
            }
            fixed.push_str(&digits);
        }
        fixed.push(c);
    }
    fixed
}

fn matching_brace(s: &str) -> usize {
    let mut depth = 0;
    for (i, c) in s.char_indices() {
        match c {
            '{' => depth += 1,
            '}' if depth == 0 => return i,
            '}' => depth -= 1,
            _ => {}
        }
    }
    s.len()
}

fn subscript_prefix(s: &str) -> usize {
    if let Some(after) = s.strip_prefix("_{") {
        2 + matching_brace(after) + 1
    } else if s.starts_with('_') {
        1 + s[1..].chars().next().map_or(0, char::len_utf8)
    } else {
        s.chars().take_while(|c| ('₀'..='₉').contains(c)).map(char::len_utf8).sum()
    }
}

fn check_scope(ty: SimpleType, iso: IsogenyKind) -> Result<()> {
    if iso.supports(ty) {
        Ok(())
    } else {
        Err(Error::InvalidIsogeny {
            ty: ty.to_string(),
            isogeny: iso.to_string(),
        })
    }
}

fn spec_of(ty: SimpleType, rep: &OrbitRep) -> Result<&Specification> {
    rep.spec
        .as_ref()
        .filter(|s| s.family == ty.family())
        .ok_or_else(|| Error::OutOfScope(format!("{ty} orbit needs a specification")))
}

fn label_of(ty: SimpleType, rep: &OrbitRep) -> Result<&str> {
    rep.label
        .as_deref()
        .ok_or_else(|| Error::OutOfScope(format!("{ty} orbit needs a label")))
}

fn in_table(ty: SimpleType, iso: IsogenyKind, which: Theorem, label: &str) -> Result<bool> {
    let table = label_table(ty, iso, which)
        .ok_or_else(|| Error::OutOfScope(format!("no {which} label table for {ty} {iso}")))?;
    let label = normalize_label(label);
    Ok(table.labels.contains(&label))
}

/// `[X(T) : ZΦ]` is odd. Adjoint groups count, as does `SL_{n+1}` for even `n`.
pub fn index_is_odd(ty: SimpleType, iso: IsogenyKind) -> bool {
    match iso {
        IsogenyKind::Adjoint => true,
        IsogenyKind::SO | IsogenyKind::HSpin => false,
        IsogenyKind::SimplyConnected => match ty.family() {
            Family::A => ty.rank().is_multiple_of(2),
            Family::B | Family::C | Family::D => false,
            Family::E => ty.rank() != 7,
            Family::F | Family::G => true,
        },
    }
}

fn any_odd(v: &[u32]) -> bool {
    v.iter().any(|x| x % 2 == 1)
}

fn any_2_mod_4(v: &[u32]) -> bool {
    v.iter().any(|x| x % 4 == 2)
}

fn mentions_simple(support: &[Root], i: usize) -> bool {
    support.iter().any(|r| r.coeffs()[i - 1] != 0)
}

/// Some `h` has `[h,e] = e`.
pub fn predict_h_exists(ty: SimpleType, iso: IsogenyKind, rep: &OrbitRep) -> Result<bool> {
    check_scope(ty, iso)?;
    let n = ty.rank();
    if !ty.family().is_classical() {
        let label = label_of(ty, rep)?;
        if (ty.family(), n, iso) == (Family::E, 7, IsogenyKind::SimplyConnected) {
            return in_table(ty, iso, Theorem::HExists, label);
        }
        return Ok(index_is_odd(ty, iso));
    }
    let spec = spec_of(ty, rep)?;
    if index_is_odd(ty, iso) || iso == IsogenyKind::SO {
        return Ok(true);
    }
    let odd_km = any_odd(&spec.k) || any_odd(&spec.m);
    Ok(match (ty.family(), iso) {
        (Family::A, _) => n % 4 != 1 || any_odd(&spec.k),
        (Family::B, _) => !matches!(n % 4, 1 | 2) || odd_km,
        (Family::C, _) => spec.s() == 0 && spec.t() == 0,
        (Family::D, IsogenyKind::HSpin) => {
            n % 4 != 2 || odd_km || (spec.s() == 0 && !mentions_simple(&rep.support, n - 1))
        }
        (Family::D, _) => n % 4 != 2 || odd_km,
        _ => unreachable!("classical family"),
    })
}

/// `e` lies in a copy of the simple three-dimensional algebra. The answer
/// does not depend on the isogeny.
pub fn predict_s(ty: SimpleType, rep: &OrbitRep) -> Result<bool> {
    if !ty.family().is_classical() {
        return in_table(ty, IsogenyKind::SimplyConnected, Theorem::SOver, label_of(ty, rep)?);
    }
    let spec = spec_of(ty, rep)?;
    Ok(match ty.family() {
        Family::A => !any_2_mod_4(&spec.k),
        Family::B => {
            let mb = spec.m_b.unwrap_or(0);
            !matches!(mb % 4, 2 | 3) && !any_2_mod_4(&spec.k) && !any_2_mod_4(&spec.m)
        }
        Family::C => spec.s() == 0 && spec.t() == 0 && !any_2_mod_4(&spec.k),
        Family::D => !any_2_mod_4(&spec.k) && !any_2_mod_4(&spec.m),
        _ => unreachable!("classical family"),
    })
}

fn is_regular(ty: SimpleType, rep: &OrbitRep) -> bool {
    match &rep.spec {
        Some(spec) => spec.is_regular(ty),
        None => rep.label.as_deref().is_some_and(|l| normalize_label(l) == ty.to_string()),
    }
}

/// `e` extends to a `pgl_2`-triple.
pub fn predict_pgl2(ty: SimpleType, iso: IsogenyKind, rep: &OrbitRep) -> Result<bool> {
    let h = predict_h_exists(ty, iso, rep)?;
    let a2_regular = ty.family() == Family::A && ty.rank() == 2 && is_regular(ty, rep);
    Ok(h && !a2_regular)
}

/// Every nonzero nilpotent extends to a Heisenberg triple except in `PGL_2`.
pub fn predict_sl2(ty: SimpleType, iso: IsogenyKind) -> Result<bool> {
    check_scope(ty, iso)?;
    Ok(!(ty.family() == Family::A && ty.rank() == 1 && iso == IsogenyKind::Adjoint))
}

pub fn predict(which: Theorem, ty: SimpleType, iso: IsogenyKind, rep: &OrbitRep) -> Result<bool> {
    match which {
        Theorem::HExists => predict_h_exists(ty, iso, rep),
        Theorem::SOver => {
            check_scope(ty, iso)?;
            predict_s(ty, rep)
        }
        Theorem::Pgl2 => predict_pgl2(ty, iso, rep),
        Theorem::Sl2 => predict_sl2(ty, iso),
    }
}
