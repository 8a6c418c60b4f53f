//! Tabulated expectations, one row per `n`, as CSV or JSON.
//!
//! Exact values travel as decimal-string numerator/denominator pairs. In CSV
//! every float is printed with 17 significant digits; JSON uses the shortest
//! representation that round-trips.

use std::io::{Read, Write};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expectations::{
    asymptotic_noncommuting, expected_commutations, expected_commutations_f64,
    expected_noncommuting_f64, DP_MAX_N,
};
use crate::tableaux::{hook_length_count, staircase};
use crate::ExactRational;

pub const CSV_HEADER: &str = "n,word_count,ec_num,ec_den,ec_float,noncomm_float,asymp_noncomm_float";

/// Rows up to this `n` carry exact fields; above it they are left empty.
pub const TABLE_EXACT_MAX_N: usize = DP_MAX_N;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: usize,
    pub word_count: Option<String>,
    pub e_commutations_num: Option<String>,
    pub e_commutations_den: Option<String>,
    pub e_commutations_float: f64,
    pub e_noncommuting_float: f64,
    pub asymptotic_noncommuting_float: f64,
    pub braid_expectation: String,
}

impl TableRow {
    pub fn compute(n: usize) -> Result<TableRow> {
        if n < 3 {
            return Err(Error::DegreeTooSmall { n, min: 3 });
        }
        let (word_count, num, den) = if n <= TABLE_EXACT_MAX_N {
            let ec = expected_commutations(n)?;
            (
                Some(hook_length_count(&staircase(n)?).to_string()),
                Some(ec.numer().to_string()),
                Some(ec.denom().to_string()),
            )
        } else {
            (None, None, None)
        };
        Ok(TableRow {
            n,
            word_count,
            e_commutations_num: num,
            e_commutations_den: den,
            e_commutations_float: expected_commutations_f64(n)?,
            e_noncommuting_float: expected_noncommuting_f64(n)?,
            asymptotic_noncommuting_float: asymptotic_noncommuting(n),
            braid_expectation: "1".to_string(),
        })
    }

    /// The exact expectation, when the row carries one.
    pub fn e_commutations(&self) -> Option<ExactRational> {
        let num: BigInt = self.e_commutations_num.as_ref()?.parse().ok()?;
        let den: BigInt = self.e_commutations_den.as_ref()?.parse().ok()?;
        Some(ExactRational::new(num, den))
    }
}

pub fn rows(from: usize, to: usize) -> Result<Vec<TableRow>> {
    if from < 3 || from > to {
        return Err(Error::OutOfRange(format!(
            "need 3 <= from <= to, got from={from} to={to}"
        )));
    }
    (from..=to).map(TableRow::compute).collect()
}

/// `x` with 17 significant digits in positional notation.
pub fn format_sig17(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.16e}");
    let exponent: i32 = sci
        .rsplit('e')
        .next()
        .and_then(|e| e.parse().ok())
        .unwrap_or(0);
    let decimals = (16 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

fn csv_error(e: csv::Error) -> Error {
    Error::Table(format!("csv: {e}"))
}

pub fn write_csv<W: Write>(rows: &[TableRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER.split(',')).map_err(csv_error)?;
    for r in rows {
        let opt = |s: &Option<String>| s.clone().unwrap_or_default();
        w.write_record([
            r.n.to_string(),
            opt(&r.word_count),
            opt(&r.e_commutations_num),
            opt(&r.e_commutations_den),
            format_sig17(r.e_commutations_float),
            format_sig17(r.e_noncommuting_float),
            format_sig17(r.asymptotic_noncommuting_float),
        ])
        .map_err(csv_error)?;
    }
    w.flush().map_err(|e| Error::Table(format!("csv: {e}")))
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<TableRow>> {
    let mut reader = csv::Reader::from_reader(input);
    let header: Vec<String> = reader
        .headers()
        .map_err(csv_error)?
        .iter()
        .map(str::to_string)
        .collect();
    if header.join(",") != CSV_HEADER {
        return Err(Error::Table(format!("unexpected csv header {header:?}")));
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(csv_error)?;
        let opt = |k: usize| Some(record[k].to_string()).filter(|s| !s.is_empty());
        let float = |k: usize| {
            record[k]
                .parse::<f64>()
                .map_err(|e| Error::Table(format!("csv field {k}: {e}")))
        };
        rows.push(TableRow {
            n: record[0]
                .parse()
                .map_err(|e| Error::Table(format!("csv field 0: {e}")))?,
            word_count: opt(1),
            e_commutations_num: opt(2),
            e_commutations_den: opt(3),
            e_commutations_float: float(4)?,
            e_noncommuting_float: float(5)?,
            asymptotic_noncommuting_float: float(6)?,
            braid_expectation: "1".to_string(),
        });
    }
    Ok(rows)
}

pub fn write_json<W: Write>(rows: &[TableRow], mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, rows)
        .map_err(|e| Error::Table(format!("json: {e}")))?;
    writeln!(out).map_err(|e| Error::Table(format!("json: {e}")))
}

pub fn read_json<R: Read>(input: R) -> Result<Vec<TableRow>> {
    serde_json::from_reader(input).map_err(|e| Error::Table(format!("json: {e}")))
}
