//! Text format for Cayley tables.
//!
//! ```text
//! order 2
//! 0 1
//! 1 0
//! names e s
//! ```

use super::catalog::catalog;
use super::group::FiniteGroup;
use crate::error::{Error, Result};

/// Parses the group file format (blank lines and `#` comments are ignored).
pub fn parse_group_file(text: &str) -> Result<FiniteGroup> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty group file".into()))?;
    let order: usize = header
        .strip_prefix("order")
        .map(str::trim)
        .and_then(|n| n.parse().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::Parse(format!("expected `order n`, found `{header}`")))?;
    let mut table = Vec::with_capacity(order);
    for i in 0..order {
        let line = lines.next().ok_or_else(|| Error::Parse(format!("missing table row {i}")))?;
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad entry `{t}` in row {i}"))))
            .collect::<Result<Vec<_>>>()?;
        table.push(row);
    }
    let names = match lines.next() {
        None => None,
        Some(line) => {
            let rest = line
                .strip_prefix("names")
                .ok_or_else(|| Error::Parse(format!("unexpected line `{line}`")))?;
            Some(rest.split_whitespace().map(str::to_string).collect())
        }
    };
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("trailing content `{extra}`")));
    }
    FiniteGroup::from_table(table, names)
}

/// Serializes a group in the file format.
pub fn write_group_file(group: &FiniteGroup) -> String {
    let mut out = format!("order {}\n", group.order());
    for row in group.table_rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out.push_str("names ");
    out.push_str(&group.names().join(" "));
    out.push('\n');
    out
}

/// Resolves a catalog name, or reads a group file when `spec` names an existing path.
pub fn load_group(spec: &str) -> Result<FiniteGroup> {
    match catalog(spec) {
        Ok(g) => Ok(g),
        Err(Error::UnknownGroup(_)) if std::path::Path::new(spec).is_file() => {
            let text = std::fs::read_to_string(spec).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
            parse_group_file(&text)
        }
        Err(e) => Err(e),
    }
}
