//! Input parsing for the command-line tool: numbers (decimal or exact
//! rational), comma-separated coordinate lists, and square CSV matrices with
//! an optional label header.

use crate::linalg::Matrix;
use sha2::{Digest, Sha256};

/// Parses a decimal ("2.5", "1e-3") or rational ("1/3", "-2/3") token. The
/// rational form is evaluated as one division of exactly-represented
/// integers, so the result is the double nearest to the exact fraction.
pub fn parse_number(token: &str) -> Result<f64, String> {
    let t = token.trim();
    if t.is_empty() {
        return Err("empty number".to_string());
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: i64 = num
            .trim()
            .parse()
            .map_err(|_| format!("malformed rational '{t}': bad numerator"))?;
        let d: i64 = den
            .trim()
            .parse()
            .map_err(|_| format!("malformed rational '{t}': bad denominator"))?;
        if d == 0 {
            return Err(format!("malformed rational '{t}': zero denominator"));
        }
        return Ok(n as f64 / d as f64);
    }
    let value: f64 = t.parse().map_err(|_| format!("malformed number '{t}'"))?;
    if !value.is_finite() {
        return Err(format!("number '{t}' is not finite"));
    }
    Ok(value)
}

/// Parses a comma-separated list of numbers.
pub fn parse_number_list(text: &str) -> Result<Vec<f64>, String> {
    let values: Result<Vec<f64>, String> = text.split(',').map(parse_number).collect();
    let values = values?;
    if values.is_empty() {
        return Err("empty list".to_string());
    }
    Ok(values)
}

/// Parses a square matrix from CSV text. A first row whose tokens are not
/// all numeric is treated as a label header and skipped; label count must
/// then match the matrix size. Blank lines are ignored.
pub fn parse_matrix_csv(text: &str) -> Result<Matrix, String> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    if lines.is_empty() {
        return Err("matrix file contains no data".to_string());
    }
    let first_tokens: Vec<&str> = lines[0].split(',').map(str::trim).collect();
    let has_header = first_tokens.iter().any(|t| parse_number(t).is_err());
    let data_lines = if has_header { &lines[1..] } else { &lines[..] };
    if data_lines.is_empty() {
        return Err("matrix file contains a header but no rows".to_string());
    }

    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(data_lines.len());
    for (index, line) in data_lines.iter().enumerate() {
        let row: Result<Vec<f64>, String> = line
            .split(',')
            .map(|t| parse_number(t).map_err(|e| format!("row {}: {}", index + 1, e)))
            .collect();
        rows.push(row?);
    }
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        let widths: Vec<usize> = rows.iter().map(Vec::len).collect();
        return Err(format!(
            "matrix is not square: {} rows with widths {:?}",
            n, widths
        ));
    }
    if has_header && first_tokens.len() != n {
        return Err(format!(
            "header has {} labels but the matrix has {} columns",
            first_tokens.len(),
            n
        ));
    }
    Matrix::from_rows(&rows).map_err(|e| e.to_string())
}

/// "sha256:<hex>" digest of raw input bytes, used to tie reports to their
/// inputs.
pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}
