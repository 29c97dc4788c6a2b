//! Gram-matrix files.
//!
//! The first non-blank line holds the dimension `n`; the next `n` non-blank
//! lines hold the rows as whitespace-separated integers. Lines starting with
//! `%` are comments.

use std::path::Path;

use circle_bundles::{FourManifold, IntegerMatrix};
use num_bigint::BigInt;

use crate::error::CliError;

pub fn parse_gram(text: &str) -> Result<IntegerMatrix, CliError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('%'));
    let header = lines
        .next()
        .ok_or_else(|| CliError::Parse("empty Gram file".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| CliError::Parse(format!("bad dimension line `{header}`")))?;
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| CliError::Parse(format!("expected {n} rows, found {i}")))?;
        let row: Vec<BigInt> = line
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| CliError::Parse(format!("bad integer `{t}` in row {}", i + 1)))
            })
            .collect::<Result<_, _>>()?;
        if row.len() != n {
            return Err(CliError::Parse(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        entries.extend(row);
    }
    if let Some(extra) = lines.next() {
        return Err(CliError::Parse(format!(
            "unexpected trailing line `{extra}`"
        )));
    }
    Ok(IntegerMatrix::from_entries(n, n, entries))
}

/// Reads and validates a Gram file; the label is the file name.
pub fn read_gram_file(path: &Path) -> Result<FourManifold, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let gram = parse_gram(&text)?;
    let label = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok(FourManifold::new(gram, label)?)
}

pub fn format_gram(m: &IntegerMatrix) -> String {
    format!("{}\n{m}", m.rows())
}
