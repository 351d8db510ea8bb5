//! Computed-versus-predicted agreement over whole families of orbits.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::chevalley::{IsogenyKind, LieAlgebra};
use crate::error::Result;
use crate::exceptional::OrbitSet;
use crate::overalg::{classify_element, verify_triple, ClassificationReport, SearchOptions, SearchStatus};
use crate::rootdata::{Family, RootSystem, SimpleType};
use crate::specs::{enumerate, representative_in, OrbitRep};
use crate::theorems::{predict, Theorem};

/// What one row of the summary counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    HExists,
    S,
    Pgl2,
    Sl2,
    /// `automiser_dim == 1` exactly when `h` exists.
    Automiser,
    /// Every returned triple passes `verify_triple`.
    Witness,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::HExists,
        CheckKind::S,
        CheckKind::Pgl2,
        CheckKind::Sl2,
        CheckKind::Automiser,
        CheckKind::Witness,
    ];

    fn theorem(self) -> Option<Theorem> {
        match self {
            CheckKind::HExists => Some(Theorem::HExists),
            CheckKind::S => Some(Theorem::SOver),
            CheckKind::Pgl2 => Some(Theorem::Pgl2),
            CheckKind::Sl2 => Some(Theorem::Sl2),
            _ => None,
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CheckKind::HExists => "h_exists",
            CheckKind::S => "s",
            CheckKind::Pgl2 => "pgl2",
            CheckKind::Sl2 => "sl2",
            CheckKind::Automiser => "automiser",
            CheckKind::Witness => "witness",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    /// A predicted negative the search could neither confirm nor refute.
    Flagged,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub kind: CheckKind,
    pub predicted: Option<bool>,
    pub computed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<SearchStatus>,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub report: ClassificationReport,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub data_file: Option<String>,
}

impl CaseResult {
    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.outcome == Outcome::Fail)
    }

    /// A CLI invocation reproducing this case.
    pub fn reproducer(&self) -> String {
        let r = &self.report;
        let family = &r.ty[..1];
        let orbit = match (&r.spec, &r.label) {
            (Some(s), _) => format!("--spec '{}'", s.to_json()),
            (_, Some(l)) => {
                let data = self.data_file.as_deref().unwrap_or("<data.json>");
                format!("--label '{l}' --data {data}")
            }
            _ => String::new(),
        };
        format!("jm2 classify --family {family} --rank {} --isogeny {} {orbit}", r.rank, r.isogeny)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub flagged: usize,
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub families: Vec<Family>,
    pub min_rank: usize,
    pub max_rank: usize,
    /// Restrict to these isogenies; empty means every supported one.
    pub isogenies: Vec<IsogenyKind>,
    pub options: SearchOptions,
    /// Worker threads; 1 keeps everything on the calling thread.
    pub jobs: usize,
    /// Negate one predictor, to prove the harness notices.
    pub fault: Option<Theorem>,
    pub exceptional: Vec<(OrbitSet, Option<String>)>,
}

impl SweepConfig {
    pub fn classical(max_rank: usize) -> SweepConfig {
        SweepConfig {
            families: vec![Family::A, Family::B, Family::C, Family::D],
            min_rank: 1,
            max_rank,
            isogenies: Vec::new(),
            options: SearchOptions::default(),
            jobs: 1,
            fault: None,
            exceptional: Vec::new(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub cases: Vec<CaseResult>,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn counts(&self) -> BTreeMap<CheckKind, Counts> {
        let mut out: BTreeMap<CheckKind, Counts> = CheckKind::ALL.iter().map(|&k| (k, Counts::default())).collect();
        for case in &self.cases {
            for c in &case.checks {
                let e = out.entry(c.kind).or_default();
                match c.outcome {
                    Outcome::Pass => e.pass += 1,
                    Outcome::Fail => e.fail += 1,
                    Outcome::Flagged => e.flagged += 1,
                }
            }
        }
        out
    }

    pub fn failures(&self) -> impl Iterator<Item = (&CaseResult, &Check)> {
        self.cases.iter().flat_map(|c| c.failed().map(move |k| (c, k)))
    }

    pub fn all_pass(&self) -> bool {
        self.failures().next().is_none()
    }
}

struct Group {
    ty: SimpleType,
    iso: IsogenyKind,
    reps: Vec<OrbitRep>,
    data_file: Option<String>,
}

fn groups(cfg: &SweepConfig) -> Result<Vec<Group>> {
    let mut out = Vec::new();
    for &family in &cfg.families {
        if !family.is_classical() {
            continue;
        }
        for rank in cfg.min_rank.max(family.min_rank())..=cfg.max_rank {
            let ty = SimpleType::new(family, rank)?;
            let rs = RootSystem::build(ty);
            let reps = enumerate(ty)
                .iter()
                .map(|s| representative_in(s, ty, &rs))
                .collect::<Result<Vec<_>>>()?;
            for iso in IsogenyKind::for_type(ty) {
                if cfg.isogenies.is_empty() || cfg.isogenies.contains(&iso) {
                    out.push(Group {
                        ty,
                        iso,
                        reps: reps.clone(),
                        data_file: None,
                    });
                }
            }
        }
    }
    for (set, path) in &cfg.exceptional {
        out.push(Group {
            ty: set.ty,
            iso: set.isogeny,
            reps: set.orbits.clone(),
            data_file: path.clone(),
        });
    }
    Ok(out)
}

/// Classify one orbit and compare against every predictor.
pub fn check_case(
    l: &LieAlgebra,
    rep: &OrbitRep,
    opts: &SearchOptions,
    fault: Option<Theorem>,
) -> Result<CaseResult> {
    let ty = l.simple_type();
    let iso = l.isogeny();
    let e = l.element_from_support(&rep.support)?;
    let (report, triples) = classify_element(l, &e, opts)?;
    let report = ClassificationReport {
        spec: rep.spec.clone(),
        label: rep.label.clone(),
        ..report
    };
    let mut checks = Vec::new();
    for kind in [CheckKind::HExists, CheckKind::S, CheckKind::Pgl2, CheckKind::Sl2] {
        let theorem = kind.theorem().unwrap();
        let mut predicted = predict(theorem, ty, iso, rep)?;
        if fault == Some(theorem) {
            predicted = !predicted;
        }
        let (computed, status) = match kind {
            CheckKind::HExists => (Some(report.h_exists), None),
            CheckKind::S => (report.s, Some(report.statuses.s)),
            CheckKind::Pgl2 => (report.pgl2, Some(report.statuses.pgl2)),
            _ => (report.sl2, Some(report.statuses.sl2)),
        };
        let outcome = match computed {
            Some(c) if c == predicted => Outcome::Pass,
            Some(_) => Outcome::Fail,
            None if predicted => Outcome::Fail,
            None => Outcome::Flagged,
        };
        checks.push(Check {
            kind,
            predicted: Some(predicted),
            computed,
            status,
            outcome,
        });
    }
    let auto_ok = (report.automiser_dim == 1) == report.h_exists;
    checks.push(Check {
        kind: CheckKind::Automiser,
        predicted: Some(report.h_exists),
        computed: Some(report.automiser_dim == 1),
        status: None,
        outcome: if auto_ok { Outcome::Pass } else { Outcome::Fail },
    });
    let witnesses_ok = triples.iter().all(|w| verify_triple(l, w));
    checks.push(Check {
        kind: CheckKind::Witness,
        predicted: None,
        computed: Some(witnesses_ok),
        status: None,
        outcome: if witnesses_ok { Outcome::Pass } else { Outcome::Fail },
    });
    Ok(CaseResult {
        report,
        checks,
        data_file: None,
    })
}

/// Run the sweep. Results come back in enumeration order whatever `jobs` is.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    let start = Instant::now();
    let work = || -> Result<Vec<CaseResult>> {
        let mut cases = Vec::new();
        for g in groups(cfg)? {
            let l = LieAlgebra::build(g.ty, g.iso)?;
            let one = |rep: &OrbitRep| {
                check_case(&l, rep, &cfg.options, cfg.fault).map(|mut c| {
                    c.data_file = g.data_file.clone();
                    c
                })
            };
            let batch: Vec<CaseResult> = if cfg.jobs > 1 {
                g.reps.par_iter().map(one).collect::<Result<_>>()?
            } else {
                g.reps.iter().map(one).collect::<Result<_>>()?
            };
            cases.extend(batch);
        }
        Ok(cases)
    };
    let cases = if cfg.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .expect("thread pool");
        pool.install(work)?
    } else {
        work()?
    };
    Ok(SweepReport {
        cases,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_agrees() {
        let report = run_sweep(&SweepConfig::classical(3)).unwrap();
        for (case, check) in report.failures() {
            panic!("{} {check:?}\n{}", case.report.orbit_name(), case.reproducer());
        }
        // A1..A3, B2, B3, C2, C3, D3 under every isogeny
        assert!(report.cases.len() > 20);
    }

    #[test]
    fn fault_is_caught_with_reproducer() {
        let mut cfg = SweepConfig::classical(2);
        cfg.families = vec![Family::A];
        cfg.fault = Some(Theorem::Sl2);
        let report = run_sweep(&cfg).unwrap();
        let (case, check) = report.failures().next().expect("fault must surface");
        assert_eq!(check.kind, CheckKind::Sl2);
        assert!(case.reproducer().starts_with("jm2 classify --family A --rank 1"));
    }

    #[test]
    fn parallel_matches_serial() {
        let mut cfg = SweepConfig::classical(4);
        cfg.families = vec![Family::B, Family::D];
        let serial = run_sweep(&cfg).unwrap();
        cfg.jobs = 3;
        let parallel = run_sweep(&cfg).unwrap();
        let names = |r: &SweepReport| r.cases.iter().map(|c| c.report.clone()).collect::<Vec<_>>();
        assert_eq!(names(&serial), names(&parallel));
    }
}
