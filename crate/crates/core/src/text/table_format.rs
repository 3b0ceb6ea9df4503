//! Table files: the first non-comment line holds the order `n`, followed by
//! `n` rows of `n` whitespace-separated entries in `0..n`. Lines starting
//! with `#` and blank lines are ignored. Row index is the left operand.

use std::path::Path;

use crate::error::{Error, Result};
use crate::table::CayleyTable;

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses a table and rejects non-associative operations.
pub fn parse_table(text: &str) -> Result<CayleyTable> {
    let t = parse_table_unchecked(text)?;
    t.require_associative()?;
    Ok(t)
}

/// Parses a table, checking only syntax and entry ranges.
pub fn parse_table_unchecked(text: &str) -> Result<CayleyTable> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| syntax(1, 1, "missing order line"))?;
    let header_col = column_of(header, header.trim_start());
    let order: usize = header.trim().parse().map_err(|_| {
        syntax(
            header_line,
            header_col,
            format!("expected the order, found {:?}", header.trim()),
        )
    })?;
    if order == 0 {
        return Err(syntax(header_line, header_col, "order must be positive"));
    }
    let mut rows = Vec::with_capacity(order);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        if rows.len() == order {
            return Err(syntax(line_no, 1, format!("more than {order} rows")));
        }
        last_line = line_no;
        let mut row = Vec::with_capacity(order);
        for token in line.split_whitespace() {
            let col = column_of(line, token);
            let value: usize = token
                .parse()
                .map_err(|_| syntax(line_no, col, format!("expected an entry, found {token:?}")))?;
            if value >= order {
                return Err(syntax(
                    line_no,
                    col,
                    format!(
                        "entry {value} out of range 0..{order} at cell ({}, {})",
                        rows.len(),
                        row.len()
                    ),
                ));
            }
            row.push(value);
        }
        if row.len() != order {
            return Err(syntax(
                line_no,
                line.len() + 1,
                format!(
                    "row {} has {} entries, expected {order}",
                    rows.len(),
                    row.len()
                ),
            ));
        }
        rows.push(row);
    }
    if rows.len() != order {
        return Err(syntax(
            last_line + 1,
            1,
            format!("expected {order} rows, found {}", rows.len()),
        ));
    }
    CayleyTable::new(rows)
}

/// 1-based column of `part`, which must be a subslice of `line`.
fn column_of(line: &str, part: &str) -> usize {
    part.as_ptr() as usize - line.as_ptr() as usize + 1
}

pub fn format_table(t: &CayleyTable) -> String {
    let mut out = format!("{}\n", t.order());
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_table_file(path: &Path, check_associative: bool) -> Result<CayleyTable> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let parsed = if check_associative {
        parse_table(&text)
    } else {
        parse_table_unchecked(&text)
    };
    parsed.map_err(|e| match e {
        Error::Parse { .. } => Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        },
        other => other,
    })
}
