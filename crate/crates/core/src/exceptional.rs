//! Exceptional orbit representatives read from JSON.
//!
//! A file names the group and lists `{label, support}` records, each support
//! root given by its coefficients in Bourbaki order. Whether two records lie in
//! distinct orbits is taken on trust.

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::chevalley::{IsogenyKind, LieAlgebra};
use crate::error::{Error, Result};
use crate::rootdata::{Family, Root, RootSystem, SimpleType};
use crate::specs::OrbitRep;
use crate::theorems::normalize_label;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitDataFile {
    pub family: Family,
    pub rank: usize,
    pub isogeny: IsogenyKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub orbits: Vec<OrbitRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitRecord {
    pub label: String,
    pub support: Vec<Vec<i32>>,
}

/// Validated orbits of one group.
#[derive(Debug, Clone)]
pub struct OrbitSet {
    pub ty: SimpleType,
    pub isogeny: IsogenyKind,
    pub source: Option<String>,
    pub orbits: Vec<OrbitRep>,
}

const G2_JSON: &str = include_str!("../data/g2.json");

pub fn bundled_g2() -> OrbitSet {
    parse_orbits(G2_JSON).expect("bundled G2 data is valid")
}

pub fn bundled_g2_json() -> &'static str {
    G2_JSON
}

pub fn load_orbits(path: &Path) -> Result<OrbitSet> {
    parse_orbits(&std::fs::read_to_string(path)?)
}

/// Parse and validate. Labels are stored normalised.
pub fn parse_orbits(text: &str) -> Result<OrbitSet> {
    let file: OrbitDataFile = serde_json::from_str(text)?;
    let ty = SimpleType::new(file.family, file.rank)?;
    if ty.family().is_classical() {
        return Err(Error::OrbitData(format!("{ty} is classical; orbit files cover exceptional types")));
    }
    if !file.isogeny.supports(ty) {
        return Err(Error::InvalidIsogeny {
            ty: ty.to_string(),
            isogeny: file.isogeny.to_string(),
        });
    }
    let l = LieAlgebra::build(ty, file.isogeny)?;
    let mut seen = HashSet::new();
    let mut orbits = Vec::with_capacity(file.orbits.len());
    for rec in &file.orbits {
        let label = normalize_label(&rec.label);
        if !seen.insert(label.clone()) {
            return Err(Error::OrbitData(format!("label {label} repeated")));
        }
        let mut support = Vec::with_capacity(rec.support.len());
        for c in &rec.support {
            if c.len() != ty.rank() {
                return Err(Error::OrbitData(format!(
                    "{label}: root {c:?} has {} coefficients, expected {}",
                    c.len(),
                    ty.rank()
                )));
            }
            let r = Root::new(c.clone());
            if !l.root_system().contains(&r) {
                return Err(Error::OrbitData(format!("{label}: {c:?} is not a root of {ty}")));
            }
            support.push(r);
        }
        let rep = OrbitRep {
            support,
            spec: None,
            label: Some(label.clone()),
        };
        if !validate_orbit(&l, &rep) {
            return Err(Error::OrbitData(format!(
                "{label}: support must be distinct positive roots giving a nonzero ad-nilpotent element"
            )));
        }
        orbits.push(rep);
    }
    Ok(OrbitSet {
        ty,
        isogeny: file.isogeny,
        source: file.source,
        orbits,
    })
}

/// Distinct positive roots whose root-vector sum is nonzero and ad-nilpotent.
pub fn validate_orbit(l: &LieAlgebra, rep: &OrbitRep) -> bool {
    let rs: &RootSystem = l.root_system();
    let distinct = rep.support.iter().collect::<HashSet<_>>().len() == rep.support.len();
    if !distinct || rep.support.iter().any(|r| !r.is_positive() || !rs.contains(r)) {
        return false;
    }
    match l.element_from_support(&rep.support) {
        Ok(e) => !e.is_zero() && l.is_ad_nilpotent(&e),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> LieAlgebra {
        LieAlgebra::build(SimpleType::new(Family::G, 2).unwrap(), IsogenyKind::Adjoint).unwrap()
    }

    fn rep(coeffs: &[[i32; 2]]) -> OrbitRep {
        OrbitRep {
            support: coeffs.iter().map(|c| Root::new(c.to_vec())).collect(),
            spec: None,
            label: None,
        }
    }

    #[test]
    fn bundled_g2_loads() {
        let set = bundled_g2();
        assert_eq!(set.orbits.len(), 4);
        let regular = &set.orbits[0];
        assert_eq!(regular.label.as_deref(), Some("G2"));
        assert_eq!(regular.support, vec![Root::simple(2, 1), Root::simple(2, 2)]);
    }

    #[test]
    fn validation() {
        let l = g2();
        for r in l.root_system().positive_roots() {
            assert!(validate_orbit(&l, &rep(&[[r.coeffs()[0], r.coeffs()[1]]])));
        }
        assert!(!validate_orbit(&l, &rep(&[[-1, 0]])));
        assert!(!validate_orbit(&l, &rep(&[[1, 0], [1, 0]])));
        assert!(!validate_orbit(&l, &rep(&[])));
        assert!(validate_orbit(&l, &rep(&[[1, 0], [0, 1]])));
    }

    #[test]
    fn file_errors() {
        let empty = r#"{"family":"G","rank":2,"isogeny":"Ad","orbits":[]}"#;
        assert!(parse_orbits(empty).unwrap().orbits.is_empty());
        let dup = r#"{"family":"G","rank":2,"isogeny":"Ad","orbits":[
            {"label":"A1","support":[[0,1]]},{"label":"A_{1}","support":[[1,0]]}]}"#;
        assert!(matches!(parse_orbits(dup), Err(Error::OrbitData(_))));
        let bad_root = r#"{"family":"G","rank":2,"isogeny":"Ad","orbits":[{"label":"x","support":[[2,2]]}]}"#;
        assert!(matches!(parse_orbits(bad_root), Err(Error::OrbitData(_))));
        let classical = r#"{"family":"A","rank":2,"isogeny":"Ad","orbits":[]}"#;
        assert!(parse_orbits(classical).is_err());
        let extra = r#"{"family":"G","rank":2,"isogeny":"Ad","orbits":[],"x":1}"#;
        assert!(matches!(parse_orbits(extra), Err(Error::Json(_))));
    }
}
