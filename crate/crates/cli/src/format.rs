use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use chebgreen::GreenMatrix;
use serde::Serialize;

/// Shortest round-trip scientific notation with a signed two-digit exponent,
/// e.g. `-2.5e-01`. Zero prints as `0` (or `-0`).
pub fn format_number(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let s = format!("{v:e}");
    let (mantissa, exp) = s.split_once('e').expect("`{:e}` always has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

pub fn parse_number(s: &str) -> Result<f64> {
    s.trim()
        .parse()
        .with_context(|| format!("not a number: {s:?}"))
}

/// Matrix rows in output order; `ascending` reverses both indices.
pub fn ordered_rows(g: &GreenMatrix, ascending: bool) -> Vec<Vec<f64>> {
    let n = g.degree();
    let idx = |k: usize| if ascending { n - k } else { k };
    (0..=n)
        .map(|k| (0..=n).map(|i| g.get(idx(k), idx(i))).collect())
        .collect()
}

pub fn matrix_csv(rows: &[Vec<f64>]) -> String {
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format_number(*v)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct MatrixDoc<'a> {
    degree: usize,
    ordering: &'static str,
    entries: &'a [Vec<f64>],
}

pub fn matrix_json(degree: usize, ascending: bool, rows: &[Vec<f64>]) -> Result<String> {
    let doc = MatrixDoc {
        degree,
        ordering: if ascending { "ascending" } else { "descending" },
        entries: rows,
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

pub fn column_csv(values: &[f64]) -> String {
    values.iter().map(|v| format_number(*v) + "\n").collect()
}

pub fn read_column(path: &Path) -> Result<Vec<f64>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_number)
        .collect()
}

/// Writes to `path`, or to stdout when no path is given.
pub fn emit(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, content).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}
