//! Text renderings of classification reports and orbit lists.

use std::fmt::Write as _;

use jm2_core::chevalley::{Element, LieAlgebra};
use jm2_core::gf2::Gf2Vector;
use jm2_core::overalg::{ClassificationReport, WitnessRecord};
use jm2_core::specs::OrbitRep;

use crate::Format;

/// CSV and markdown column order for classification tables.
pub const REPORT_COLUMNS: [&str; 12] = [
    "type",
    "rank",
    "isogeny",
    "orbit",
    "h_exists",
    "automiser_dim",
    "s",
    "pgl2",
    "sl2",
    "s_status",
    "pgl2_status",
    "sl2_status",
];

pub fn tri(v: Option<bool>) -> String {
    match v {
        Some(true) => "true".into(),
        Some(false) => "false".into(),
        None => "unresolved".into(),
    }
}

pub fn report_row(r: &ClassificationReport) -> Vec<String> {
    vec![
        r.ty.clone(),
        r.rank.to_string(),
        r.isogeny.clone(),
        r.orbit_name(),
        r.h_exists.to_string(),
        r.automiser_dim.to_string(),
        tri(r.s),
        tri(r.pgl2),
        tri(r.sl2),
        r.statuses.s.to_string(),
        r.statuses.pgl2.to_string(),
        r.statuses.sl2.to_string(),
    ]
}

/// `h1 + e[-011]`, or `0`.
pub fn element_terms(l: &LieAlgebra, x: &Element) -> String {
    let terms: Vec<String> = x.ones().map(|i| l.basis_label(i)).collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn bits_terms(l: &LieAlgebra, bits: &[u8]) -> String {
    element_terms(l, &Gf2Vector::from_bits(bits))
}

pub fn witness_lines(l: &LieAlgebra, ws: &[WitnessRecord]) -> Vec<String> {
    ws.iter()
        .map(|w| {
            let mut s = format!("{}: h = {}", w.kind, bits_terms(l, &w.h));
            if let Some(f) = &w.f {
                write!(s, "; f = {}", bits_terms(l, f)).unwrap();
            }
            s
        })
        .collect()
}

pub fn markdown_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    writeln!(out, "| {} |", header.join(" | ")).unwrap();
    writeln!(out, "|{}", "---|".repeat(header.len())).unwrap();
    for r in rows {
        writeln!(out, "| {} |", r.join(" | ")).unwrap();
    }
    out
}

pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).unwrap();
    for r in rows {
        w.write_record(r).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

pub fn table(format: Format, header: &[&str], rows: &[Vec<String>]) -> String {
    match format {
        Format::Csv => csv_table(header, rows),
        _ => markdown_table(header, rows),
    }
}

pub fn reports(format: Format, reports: &[ClassificationReport]) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(reports).unwrap() + "\n",
        _ => {
            let rows: Vec<Vec<String>> = reports.iter().map(report_row).collect();
            table(format, &REPORT_COLUMNS, &rows)
        }
    }
}

pub fn single_report(format: Format, l: &LieAlgebra, r: &ClassificationReport) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).unwrap() + "\n",
        Format::Csv => reports(format, std::slice::from_ref(r)),
        Format::Markdown => {
            let mut out = reports(format, std::slice::from_ref(r));
            if !r.witnesses.is_empty() {
                out.push_str("\nWitnesses:\n\n");
                for line in witness_lines(l, &r.witnesses) {
                    writeln!(out, "- {line}").unwrap();
                }
            }
            out.push_str("\nMethods:\n\n");
            for note in &r.method_notes {
                writeln!(out, "- {note}").unwrap();
            }
            out
        }
    }
}

pub const ORBIT_COLUMNS: [&str; 3] = ["orbit", "support", "size"];

pub fn orbits(format: Format, orbits: &[OrbitRep]) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(orbits).unwrap() + "\n",
        _ => {
            let rows: Vec<Vec<String>> = orbits
                .iter()
                .map(|o| {
                    let support: Vec<String> = o.support.iter().map(|r| r.to_string()).collect();
                    vec![o.name(), support.join(" "), o.support.len().to_string()]
                })
                .collect();
            table(format, &ORBIT_COLUMNS, &rows)
        }
    }
}
