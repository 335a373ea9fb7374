//! Truth-table text format.
//!
//! ```text
//! 3
//! 00010111
//! ```
//!
//! Line 1 holds the decimal arity `n`, line 2 the `2^n` outputs in index
//! order (leftmost character is index 0). Trailing whitespace is ignored;
//! any other character is an error.

use std::fs;
use std::path::Path;

use super::TruthTable;
use crate::{Error, Result, DEFAULT_N_MAX};

pub fn parse_table(text: &str) -> Result<TruthTable> {
    parse_table_with_limit(text, DEFAULT_N_MAX)
}

pub fn parse_table_with_limit(text: &str, n_max: usize) -> Result<TruthTable> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing arity line"))?;
    let header = header.trim_end();
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(1, format!("arity {header:?} is not a decimal integer")))?;

    let body = lines
        .next()
        .ok_or_else(|| parse_err(2, "missing truth-table line"))?;
    let mut bits = Vec::with_capacity(body.len());
    for (col, c) in body.trim_end().chars().enumerate() {
        match c {
            '0' => bits.push(false),
            '1' => bits.push(true),
            other => {
                return Err(parse_err(
                    2,
                    format!("unexpected character {other:?} at column {}", col + 1),
                ))
            }
        }
    }
    for (i, rest) in lines.enumerate() {
        if !rest.trim_end().is_empty() {
            return Err(parse_err(i + 3, "unexpected content after truth table"));
        }
    }
    TruthTable::from_bits_with_limit(n, bits, n_max)
}

pub fn write_table(tt: &TruthTable) -> String {
    format!("{}\n{}\n", tt.arity(), tt.to_bit_string())
}

pub fn read_table_file(path: impl AsRef<Path>, n_max: usize) -> Result<TruthTable> {
    parse_table_with_limit(&fs::read_to_string(path)?, n_max)
}

pub fn write_table_file(path: impl AsRef<Path>, tt: &TruthTable) -> Result<()> {
    fs::write(path, write_table(tt))?;
    Ok(())
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
