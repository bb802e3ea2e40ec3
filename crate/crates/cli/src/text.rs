//! Plain-text tables.

/// Largest number of rows and columns printed for a matrix in text mode.
pub const MATRIX_CAP: usize = 8;

/// Left-aligned columns separated by two spaces.
pub fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    rows.iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Square matrix of labels capped at [`MATRIX_CAP`] with `…` marking elided
/// rows and columns; `header` labels rows and columns.
pub fn capped_matrix(header: &[String], cell: impl Fn(usize, usize) -> String) -> String {
    let n = header.len();
    let shown = n.min(MATRIX_CAP);
    let elided = n > MATRIX_CAP;
    let mut rows = Vec::new();
    let mut top = vec![String::new()];
    top.extend(header[..shown].iter().cloned());
    if elided {
        top.push("…".into());
    }
    rows.push(top);
    for i in 0..shown {
        let mut row = vec![header[i].clone()];
        row.extend((0..shown).map(|j| cell(i, j)));
        if elided {
            row.push("…".into());
        }
        rows.push(row);
    }
    if elided {
        rows.push(vec!["…".into()]);
    }
    table(&rows)
}
