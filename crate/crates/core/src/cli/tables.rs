//! Row types emitted by the command front end, and their CSV/JSON writers.

use std::io::Write;

use serde::Serialize;

use crate::error::Result;
use crate::separability::{self, PptReport};
use crate::spinstate::{two_spin_density, Statistics};
use crate::statmech::ExchangeValue;

/// Version of every JSON document written by the CLI.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExchangeRow {
    pub sep_reduced: f64,
    pub sep_si: Option<f64>,
    pub f: f64,
}

/// Column-oriented JSON form of an exchange sweep.
#[derive(Debug, Serialize)]
struct ExchangeColumns<'a> {
    schema: u32,
    system: &'a str,
    fugacity: Option<f64>,
    sep_reduced: Vec<f64>,
    sep_si: Vec<Option<f64>>,
    f: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumRecord {
    pub schema: u32,
    pub alpha: usize,
    pub statistics: Statistics,
    pub f: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sep_reduced: Option<f64>,
    pub spectrum: Vec<f64>,
    pub min_eigenvalue: f64,
    pub negativity: f64,
    pub is_ppt: bool,
}

impl SpectrumRecord {
    pub fn compute(
        f: ExchangeValue,
        alpha: usize,
        statistics: Statistics,
        sep_reduced: Option<f64>,
    ) -> Result<Self> {
        let rho = two_spin_density(f, alpha, statistics)?;
        let PptReport {
            spectrum,
            min_eigenvalue,
            negativity,
            is_ppt,
        } = separability::ppt_report(&rho)?;
        Ok(SpectrumRecord {
            schema: SCHEMA_VERSION,
            alpha,
            statistics,
            f: f.value(),
            sep_reduced,
            spectrum,
            min_eigenvalue,
            negativity,
            is_ppt,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecompositionRecord {
    pub schema: u32,
    pub f: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sep_reduced: Option<f64>,
    pub weight_rho0: f64,
    pub weight_sigma0: f64,
    pub weight_sigma1: f64,
    pub reconstruction_error: f64,
}

impl DecompositionRecord {
    pub fn compute(f: ExchangeValue, sep_reduced: Option<f64>) -> Result<Self> {
        let d = separability::qutrit_decomposition(f)?;
        let reconstruction_error = separability::verify_decomposition(f)?;
        Ok(DecompositionRecord {
            schema: SCHEMA_VERSION,
            f: f.value(),
            sep_reduced,
            weight_rho0: d.weight_rho0,
            weight_sigma0: d.weight_sigma0,
            weight_sigma1: d.weight_sigma1,
            reconstruction_error,
        })
    }
}

fn num(x: f64) -> String {
    x.to_string()
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

pub fn write_exchange_csv<W: Write>(out: W, rows: &[ExchangeRow]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["sep_reduced", "sep_si", "f"])?;
    for r in rows {
        w.write_record([num(r.sep_reduced), opt(r.sep_si), num(r.f)])?;
    }
    w.flush()
}

pub fn write_exchange_json<W: Write>(
    out: W,
    system: &str,
    fugacity: Option<f64>,
    rows: &[ExchangeRow],
) -> std::io::Result<()> {
    let doc = ExchangeColumns {
        schema: SCHEMA_VERSION,
        system,
        fugacity,
        sep_reduced: rows.iter().map(|r| r.sep_reduced).collect(),
        sep_si: rows.iter().map(|r| r.sep_si).collect(),
        f: rows.iter().map(|r| r.f).collect(),
    };
    write_json(out, &doc)
}

pub fn write_spectrum_csv<W: Write>(out: W, records: &[SpectrumRecord]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let n = records.first().map_or(0, |r| r.spectrum.len());
    let mut header: Vec<String> = [
        "sep_reduced",
        "f",
        "alpha",
        "statistics",
        "min_eigenvalue",
        "negativity",
        "is_ppt",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    header.extend((0..n).map(|i| format!("lambda_{i}")));
    w.write_record(&header)?;
    for r in records {
        let mut row = vec![
            opt(r.sep_reduced),
            num(r.f),
            r.alpha.to_string(),
            r.statistics.to_string(),
            num(r.min_eigenvalue),
            num(r.negativity),
            r.is_ppt.to_string(),
        ];
        row.extend(r.spectrum.iter().copied().map(num));
        w.write_record(&row)?;
    }
    w.flush()
}

pub fn write_decomposition_csv<W: Write>(
    out: W,
    records: &[DecompositionRecord],
) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "sep_reduced",
        "f",
        "weight_rho0",
        "weight_sigma0",
        "weight_sigma1",
        "reconstruction_error",
    ])?;
    for r in records {
        w.write_record([
            opt(r.sep_reduced),
            num(r.f),
            num(r.weight_rho0),
            num(r.weight_sigma0),
            num(r.weight_sigma1),
            num(r.reconstruction_error),
        ])?;
    }
    w.flush()
}

/// Pretty-printed JSON followed by a newline.
pub fn write_json<W: Write, T: Serialize + ?Sized>(mut out: W, value: &T) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)
}
