//! Coefficient tables of the order-`2 alpha + 4` operator.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{format_rational, to_decimal, Rational};
use crate::highops::{explicit_coefficient, HighOpParams};
use crate::report::Format;

/// Coefficients of `d_1, ..., d_{2a+4}` in ascending powers of `x`.
pub fn coefficient_rows(alpha: u32, beta: &Rational) -> Result<Vec<Vec<Rational>>> {
    let prm = HighOpParams::new(alpha, beta.clone()).map_err(|e| Error::InvalidGrid(e.to_string()))?;
    (1..=prm.order())
        .map(|i| explicit_coefficient(i, &prm).map(|d| d.to_vec()))
        .collect()
}

#[derive(Serialize)]
struct JsonRow {
    i: usize,
    coeffs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    approx: Option<Vec<String>>,
}

#[derive(Serialize)]
struct JsonTable {
    alpha: String,
    beta: String,
    rows: Vec<JsonRow>,
}

/// Renders the table. Rational entries are written as `p/q`; with
/// `float_digits` the table and JSON forms also carry decimal approximations.
/// CSV rows are padded with zeros to the common width `2a+5`.
pub fn coefficient_table(
    alpha: u32,
    beta: &Rational,
    format: Format,
    float_digits: Option<usize>,
) -> Result<String> {
    let rows = coefficient_rows(alpha, beta)?;
    let width = 2 * alpha as usize + 5;
    let exact = |row: &[Rational]| row.iter().map(format_rational).collect::<Vec<_>>();
    let approx = |row: &[Rational]| {
        float_digits.map(|k| row.iter().map(|c| to_decimal(c, k)).collect::<Vec<_>>())
    };
    let mut out = String::new();
    match format {
        Format::Csv => {
            let header: Vec<String> = (0..width).map(|k| format!("coeff{k}")).collect();
            let _ = writeln!(out, "i,{}", header.join(","));
            for (idx, row) in rows.iter().enumerate() {
                let mut cells = exact(row);
                cells.resize(width, "0".to_string());
                let _ = writeln!(out, "{},{}", idx + 1, cells.join(","));
            }
        }
        Format::Table => {
            let _ = writeln!(
                out,
                "alpha = {}, beta = {}  (coefficients in ascending powers of x)",
                alpha,
                format_rational(beta)
            );
            for (idx, row) in rows.iter().enumerate() {
                let _ = write!(out, "{:>3}  [{}]", idx + 1, exact(row).join(", "));
                if let Some(a) = approx(row) {
                    let _ = write!(out, "  ~ [{}]", a.join(", "));
                }
                out.push('\n');
            }
        }
        Format::Json => {
            let table = JsonTable {
                alpha: alpha.to_string(),
                beta: format_rational(beta),
                rows: rows
                    .iter()
                    .enumerate()
                    .map(|(idx, row)| JsonRow {
                        i: idx + 1,
                        coeffs: exact(row),
                        approx: approx(row),
                    })
                    .collect(),
            };
            out = serde_json::to_string_pretty(&table).expect("table serializes");
            out.push('\n');
        }
    }
    Ok(out)
}
