//! Grid renderers for the command line.

use percoperm::grid::GridConfig;

const CELL: usize = 20;
const RED: &str = "#d94f4f";
const BLUE: &str = "#4f86d9";

/// One SVG rectangle per cell, same row/column orientation as the text
/// format (row 1 at the top).
pub fn to_svg(grid: &GridConfig) -> String {
    let width = grid.cols() * CELL;
    let height = grid.rows() * CELL;
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    );
    for r in 1..=grid.rows() {
        for c in 1..=grid.cols() {
            let fill = if grid.is_red((r, c)) { RED } else { BLUE };
            s.push_str(&format!(
                "  <rect x=\"{}\" y=\"{}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{fill}\"/>\n",
                (c - 1) * CELL,
                (r - 1) * CELL,
            ));
        }
    }
    s.push_str("</svg>\n");
    s
}
