//! ASCII Betti diagrams: column `i`, row `j - i`, `-` for zero.

use sqfree_core::BettiTable;

/// Renders the diagram with a header of column indices. Rows run from the
/// first to the last nonzero row, so interior empty rows show as all `-`.
/// The empty table renders as an empty header.
pub fn render_betti(table: &BettiTable) -> String {
    let (Some(pd), Some(first), Some(last)) = (table.projective_dimension(), table.first_row(), table.regularity())
    else {
        return "\n".to_string();
    };
    let rows: Vec<(usize, Vec<String>)> = (first..=last)
        .map(|r| {
            let cells = table.row(r).iter().map(|v| if *v == 0u32.into() { "-".into() } else { v.to_string() }).collect();
            (r, cells)
        })
        .collect();
    let widths: Vec<usize> = (0..=pd)
        .map(|c| rows.iter().map(|(_, cells)| cells[c].len()).max().unwrap_or(1).max(c.to_string().len()))
        .collect();
    let label = last.to_string().len();
    let mut out = String::new();
    let header: Vec<String> = widths.iter().enumerate().map(|(c, w)| format!("{c:>w$}")).collect();
    out.push_str(&format!("{:label$}   {}\n", "", header.join(" ")));
    for (r, cells) in rows {
        let cells: Vec<String> = cells.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        out.push_str(&format!("{r:>label$} : {}\n", cells.join(" ")));
    }
    out
}
