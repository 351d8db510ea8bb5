//! `jm2`: build Chevalley algebras mod 2, list nilpotent orbits, classify
//! their overalgebras and check the closed-form predictions.

mod render;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use jm2_core::chevalley::{IsogenyKind, LieAlgebra};
use jm2_core::exceptional::{bundled_g2, load_orbits, OrbitSet};
use jm2_core::overalg::{classify, ClassificationReport, SearchOptions, DEFAULT_EXHAUSTIVE_CAP};
use jm2_core::rootdata::{Family, SimpleType};
use jm2_core::specs::{enumerate, representative_in, OrbitRep, Specification};
use jm2_core::sweep::{run_sweep, CheckKind, Outcome, SweepConfig};
use jm2_core::theorems::{label_tables, label_tables_json, normalize_label, Theorem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Parser)]
#[command(name = "jm2", version, about = "Overalgebras of nilpotent elements in characteristic 2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Group {
    /// A, B, C, D, E, F or G
    #[arg(long)]
    family: String,
    #[arg(long)]
    rank: usize,
    /// SC, Ad, SO (type D) or HSpin (type D, even rank)
    #[arg(long, default_value = "SC")]
    isogeny: String,
}

#[derive(Args, Clone, Default)]
struct DataArgs {
    /// Orbit data file for an exceptional group; defaults to
    /// `$JM2_DATA_DIR/<family><rank>.json`, then the bundled G2 set.
    #[arg(long)]
    data: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Algebra summary and the self-checks
    Info {
        #[command(flatten)]
        group: Group,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
    /// Enumerate orbit representatives
    Orbits {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        data: DataArgs,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
    /// Classify one orbit
    Classify {
        #[command(flatten)]
        group: Group,
        /// Specification as JSON, e.g. '{"k":[3]}'
        #[arg(long, conflicts_with = "label")]
        spec: Option<String>,
        /// Bala–Carter label of an exceptional orbit
        #[arg(long)]
        label: Option<String>,
        #[command(flatten)]
        data: DataArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
        exhaustive_cap: usize,
    },
    /// Compare computed classifications with the predictions
    Verify {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long, default_value_t = 1)]
        min_rank: usize,
        /// Restrict to these classical families (default: all four)
        #[arg(long, value_delimiter = ',')]
        family: Vec<String>,
        /// Exceptional orbit files to include
        #[arg(long)]
        data: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
        exhaustive_cap: usize,
        /// Negate one predictor (harness self-test)
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Write classification tables for every orbit of a type
    Export {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        /// One isogeny; all supported ones if omitted
        #[arg(long)]
        isogeny: Option<String>,
        #[command(flatten)]
        data: DataArgs,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
        /// Output file; stdout if omitted
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
        exhaustive_cap: usize,
    },
    /// Print the exceptional label tables
    Labels {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Normalise a typeset label instead
        #[arg(long)]
        normalize: Option<String>,
    },
}

/// Exit 2: bad input; exit 1: a verification mismatch.
enum Failure {
    Usage(String),
    Mismatch,
}

impl From<jm2_core::Error> for Failure {
    fn from(e: jm2_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn parse_group(family: &str, rank: usize, isogeny: &str) -> CliResult<(SimpleType, IsogenyKind)> {
    let family: Family = family.parse()?;
    let ty = SimpleType::new(family, rank)?;
    let iso: IsogenyKind = isogeny.parse()?;
    if !iso.supports(ty) {
        return Err(Failure::Usage(format!("isogeny {iso} cannot be paired with {ty}")));
    }
    Ok((ty, iso))
}

fn exceptional_set(ty: SimpleType, data: &DataArgs) -> CliResult<OrbitSet> {
    let path = data.data.clone().or_else(|| {
        std::env::var_os("JM2_DATA_DIR")
            .map(|d| Path::new(&d).join(format!("{}{}.json", ty.family().to_string().to_lowercase(), ty.rank())))
            .filter(|p| p.exists())
    });
    let set = match path {
        Some(p) => load_orbits(&p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        None if ty == SimpleType::new(Family::G, 2)? => bundled_g2(),
        None => {
            return Err(Failure::Usage(format!(
                "no orbit data for {ty}: pass --data or set JM2_DATA_DIR"
            )))
        }
    };
    if set.ty != ty {
        return Err(Failure::Usage(format!("data file describes {}, not {ty}", set.ty)));
    }
    Ok(set)
}

fn all_orbits(ty: SimpleType, data: &DataArgs) -> CliResult<Vec<OrbitRep>> {
    if ty.family().is_classical() {
        let rs = jm2_core::rootdata::RootSystem::build(ty);
        Ok(enumerate(ty)
            .iter()
            .map(|s| representative_in(s, ty, &rs))
            .collect::<jm2_core::Result<_>>()?)
    } else {
        Ok(exceptional_set(ty, data)?.orbits)
    }
}

fn emit(text: &str, output: Option<&Path>) -> CliResult<()> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            // a closed pipe is not worth a panic
            let _ = std::io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn cmd_info(group: &Group, format: Format) -> CliResult<()> {
    let (ty, iso) = parse_group(&group.family, group.rank, &group.isogeny)?;
    let l = LieAlgebra::build(ty, iso)?;
    let jacobi = l.jacobi_violation().is_none();
    let rows = vec![
        vec!["type".into(), ty.to_string()],
        vec!["isogeny".into(), iso.to_string()],
        vec!["dimension".into(), l.dim().to_string()],
        vec!["roots".into(), l.root_system().roots().len().to_string()],
        vec!["A".into(), format!("{:?}", l.matrix_a())],
        vec!["B".into(), format!("{:?}", l.matrix_b())],
        vec!["jacobi".into(), jacobi.to_string()],
    ];
    let text = match format {
        Format::Json => {
            let v = serde_json::json!({
                "type": ty.to_string(),
                "isogeny": iso.to_string(),
                "dimension": l.dim(),
                "roots": l.root_system().roots().len(),
                "A": l.matrix_a(),
                "B": l.matrix_b(),
                "jacobi": jacobi,
            });
            serde_json::to_string_pretty(&v).unwrap() + "\n"
        }
        _ => render::table(format, &["field", "value"], &rows),
    };
    emit(&text, None)
}

fn resolve_orbit(
    ty: SimpleType,
    spec: Option<&str>,
    label: Option<&str>,
    data: &DataArgs,
) -> CliResult<OrbitRep> {
    match (spec, label) {
        (Some(json), _) => {
            if !ty.family().is_classical() {
                return Err(Failure::Usage(format!("{ty} orbits are named by --label")));
            }
            let spec = Specification::from_json(json, ty.family())?;
            let rs = jm2_core::rootdata::RootSystem::build(ty);
            Ok(representative_in(&spec, ty, &rs)?)
        }
        (None, Some(label)) => {
            let want = normalize_label(label);
            exceptional_set(ty, data)?
                .orbits
                .into_iter()
                .find(|o| o.label.as_deref() == Some(want.as_str()))
                .ok_or_else(|| Failure::Usage(format!("no orbit labelled {want} for {ty}")))
        }
        (None, None) => Err(Failure::Usage("classify needs --spec or --label".into())),
    }
}

fn cmd_verify(
    max_rank: usize,
    min_rank: usize,
    families: &[String],
    data: &[PathBuf],
    jobs: usize,
    cap: usize,
    fault: Option<&str>,
) -> CliResult<()> {
    if min_rank > max_rank {
        return Err(Failure::Usage("--min-rank exceeds --max-rank".into()));
    }
    let mut cfg = SweepConfig::classical(max_rank);
    cfg.min_rank = min_rank;
    cfg.jobs = jobs.max(1);
    cfg.options = SearchOptions { exhaustive_cap: cap };
    if !families.is_empty() {
        cfg.families = families
            .iter()
            .map(|f| f.parse::<Family>())
            .collect::<jm2_core::Result<_>>()?;
        if let Some(f) = cfg.families.iter().find(|f| !f.is_classical()) {
            return Err(Failure::Usage(format!("--family {f}: exceptional groups come in via --data")));
        }
    }
    cfg.fault = fault.map(|f| f.parse::<Theorem>()).transpose()?;
    for p in data {
        let set = load_orbits(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
        cfg.exceptional.push((set, Some(p.display().to_string())));
    }
    let report = run_sweep(&cfg)?;
    let mut out = String::new();
    out.push_str(&format!("verify: {} orbits, ranks {}..={max_rank}\n", report.cases.len(), min_rank));
    for (kind, c) in report.counts() {
        out.push_str(&format!(
            "{:<10} pass {:>6}  fail {:>4}  unresolved-negative {:>4}\n",
            kind.to_string(),
            c.pass,
            c.fail,
            c.flagged
        ));
    }
    let failures: Vec<_> = report.failures().collect();
    for (case, check) in failures.iter().take(10) {
        let r = &case.report;
        let status = check.status.map(|s| format!(" ({s})")).unwrap_or_default();
        out.push_str(&format!(
            "MISMATCH {} {} {} {}: predicted {}, computed {}{status}\n  reproduce: {}\n",
            check.kind,
            r.ty,
            r.isogeny,
            r.orbit_name(),
            render::tri(check.predicted),
            render::tri(check.computed),
            case.reproducer()
        ));
    }
    if failures.len() > 10 {
        out.push_str(&format!("... {} more mismatches\n", failures.len() - 10));
    }
    let flagged = report
        .cases
        .iter()
        .flat_map(|c| c.checks.iter().map(move |k| (c, k)))
        .filter(|(_, k)| k.outcome == Outcome::Flagged && k.kind != CheckKind::Witness);
    for (case, check) in flagged.take(10) {
        out.push_str(&format!(
            "note: {} for {} {} {} left to the prediction ({})\n",
            check.kind,
            case.report.ty,
            case.report.isogeny,
            case.report.orbit_name(),
            check.status.map(|s| s.to_string()).unwrap_or_default()
        ));
    }
    out.push_str(if failures.is_empty() { "result: PASS\n" } else { "result: FAIL\n" });
    emit(&out, None)?;
    eprintln!("elapsed {:.2?}", report.elapsed);
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_export(
    family: &str,
    rank: usize,
    isogeny: Option<&str>,
    data: &DataArgs,
    format: Format,
    output: Option<&Path>,
    cap: usize,
) -> CliResult<()> {
    let family_parsed: Family = family.parse()?;
    let ty = SimpleType::new(family_parsed, rank)?;
    let isos = match isogeny {
        Some(i) => vec![parse_group(family, rank, i)?.1],
        None => IsogenyKind::for_type(ty),
    };
    let orbits = all_orbits(ty, data)?;
    let opts = SearchOptions { exhaustive_cap: cap };
    let mut reports: Vec<ClassificationReport> = Vec::new();
    for iso in isos {
        let l = LieAlgebra::build(ty, iso)?;
        for o in &orbits {
            reports.push(classify(&l, o, &opts)?);
        }
    }
    emit(&render::reports(format, &reports), output)
}

fn cmd_labels(format: Format, normalize: Option<&str>) -> CliResult<()> {
    if let Some(raw) = normalize {
        return emit(&(normalize_label(raw) + "\n"), None);
    }
    let text = match format {
        Format::Json => label_tables_json().to_string(),
        _ => {
            let rows: Vec<Vec<String>> = label_tables()
                .tables
                .iter()
                .flat_map(|t| {
                    t.labels.iter().map(move |l| {
                        vec![
                            format!("{}{}", t.family, t.rank),
                            t.isogeny.map_or("any".into(), |i| i.to_string()),
                            t.theorem.to_string(),
                            l.clone(),
                        ]
                    })
                })
                .collect();
            render::table(format, &["type", "isogeny", "theorem", "label"], &rows)
        }
    };
    emit(&text, None)
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Info { group, format } => cmd_info(&group, format),
        Command::Orbits { group, data, format } => {
            let (ty, _) = parse_group(&group.family, group.rank, &group.isogeny)?;
            emit(&render::orbits(format, &all_orbits(ty, &data)?), None)
        }
        Command::Classify {
            group,
            spec,
            label,
            data,
            format,
            exhaustive_cap,
        } => {
            let (ty, iso) = parse_group(&group.family, group.rank, &group.isogeny)?;
            let rep = resolve_orbit(ty, spec.as_deref(), label.as_deref(), &data)?;
            let l = LieAlgebra::build(ty, iso)?;
            let report = classify(&l, &rep, &SearchOptions { exhaustive_cap })?;
            emit(&render::single_report(format, &l, &report), None)
        }
        Command::Verify {
            max_rank,
            min_rank,
            family,
            data,
            jobs,
            exhaustive_cap,
            inject_fault,
        } => cmd_verify(max_rank, min_rank, &family, &data, jobs, exhaustive_cap, inject_fault.as_deref()),
        Command::Export {
            family,
            rank,
            isogeny,
            data,
            format,
            output,
            exhaustive_cap,
        } => cmd_export(&family, rank, isogeny.as_deref(), &data, format, output.as_deref(), exhaustive_cap),
        Command::Labels { format, normalize } => cmd_labels(format, normalize.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
