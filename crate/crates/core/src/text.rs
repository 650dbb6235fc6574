//! Plain-text rendering shared by the CSV and table outputs.

/// CSV with a header row. Fields containing commas or quotes are quoted.
pub(crate) fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

/// Columns separated by two spaces; `right[c]` right-aligns column `c`.
/// Trailing whitespace is trimmed from every line.
pub(crate) fn aligned(header: &[&str], rows: &[Vec<String>], right: &[bool]) -> String {
    let ncols = header.len();
    let widths: Vec<usize> = (0..ncols)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).chain([header[c].chars().count()]).max().unwrap_or(0))
        .collect();
    let header: Vec<String> = header.iter().map(|s| s.to_string()).collect();
    let mut out = String::new();
    for row in std::iter::once(&header).chain(rows) {
        let cells: Vec<String> = (0..ncols)
            .map(|c| {
                if right[c] {
                    format!("{:>w$}", row[c], w = widths[c])
                } else {
                    format!("{:<w$}", row[c], w = widths[c])
                }
            })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}
