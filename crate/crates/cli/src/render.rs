//! Plain-text layout helpers. Output must stay byte-stable: golden tests pin it.

use toric_weights::koszul::PageCell;

/// Right-aligned columns separated by two spaces, one line per row.
pub fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    for row in std::iter::once(&header).chain(rows) {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
        out.push_str(&cells.join("  "));
        out.push('\n');
    }
    out
}

pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// `dim(twist)`, with a zero twist omitted and zero cells printed bare.
pub fn twisted_cell(dim: usize, twist: usize) -> String {
    match (dim, twist) {
        (0, _) => "0".into(),
        (d, 0) => d.to_string(),
        (d, t) => format!("{d}({t})"),
    }
}

/// A grid with a row label column, a rule under the body and column labels
/// underneath, the way spectral sequence pages are drawn.
pub fn grid(row_labels: &[String], column_labels: &[String], body: &[Vec<String>]) -> String {
    let label_width = row_labels.iter().map(String::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..column_labels.len())
        .map(|j| body.iter().map(|r| r[j].len()).chain([column_labels[j].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: &[String]| -> String {
        cells.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect::<Vec<_>>().join("  ")
    };
    let mut out = String::new();
    for (label, row) in row_labels.iter().zip(body) {
        out.push_str(&format!("{label:>label_width$} | {}\n", line(row)));
    }
    let rule_len = widths.iter().sum::<usize>() + 2 * widths.len().saturating_sub(1) + 1;
    out.push_str(&format!("{:label_width$} +{}\n", "", "-".repeat(rule_len)));
    out.push_str(&format!("{:label_width$}   {}\n", "", line(column_labels)));
    out
}

/// Lays out `column = 2a, row = b` cells over `k = 0..=2 max_a`, odd columns
/// zero, rows descending.
pub fn page(cells: &[PageCell], rank: usize, max_a: usize) -> String {
    let columns = 2 * max_a + 1;
    let rows: Vec<usize> = (0..=rank).rev().collect();
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|&b| {
            (0..columns)
                .map(|k| {
                    cells
                        .iter()
                        .find(|c| c.row == b && c.column == k)
                        .map_or_else(|| "0".to_string(), |c| twisted_cell(c.dim, c.twist))
                })
                .collect()
        })
        .collect();
    let row_labels: Vec<String> = rows.iter().map(usize::to_string).collect();
    let column_labels: Vec<String> = (0..columns).map(|k| k.to_string()).collect();
    grid(&row_labels, &column_labels, &body)
}
