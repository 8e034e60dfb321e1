//! Two-neighbor bootstrap percolation on rectangular grids.
//!
//! A `GridConfig` is an immutable rectangular grid of red/blue cells. A blue
//! cell turns red when at least two of its orthogonal neighbors are red; red
//! cells stay red. `closure` iterates the synchronous update rule to its
//! fixpoint. Red cells are stored one machine word per row so a percolation
//! step is a handful of shifts and boolean ops per row; the enumeration
//! sweeps upstream call `closure` millions of times.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

/// Row-word storage limits grids to 64 columns.
pub const MAX_COLS: usize = 64;

/// Census sizes beyond this need more than desk-scale budget.
pub const CENSUS_CAP: usize = 6;

/// A cell position `(row, col)`, 1-based, row 1 at top, col 1 at left.
pub type Cell = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GridError {
    #[error(
        "grid dimensions {0}x{1} are invalid (rows, cols must be positive, cols <= {MAX_COLS})"
    )]
    BadDimensions(usize, usize),
    #[error("cell ({0}, {1}) out of bounds")]
    CellOutOfBounds(usize, usize),
    #[error("region out of bounds")]
    RegionOutOfBounds,
    #[error("rectangle bounds are not ordered")]
    BadRect,
    #[error("cell ({0}, {1}) is not red")]
    CellNotRed(usize, usize),
    #[error("configuration is not a fixpoint of the update rule")]
    NotFinal,
    #[error("fine-graining factor must be at least 1")]
    BadFactor,
    #[error("census size {0} exceeds the configured budget {CENSUS_CAP}")]
    BudgetExceeded(usize),
    #[error("malformed grid text: {0}")]
    Parse(String),
}

/// A rectangular region with 1-based inclusive bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rect {
    pub top: usize,
    pub left: usize,
    pub bottom: usize,
    pub right: usize,
}

impl Rect {
    pub fn new(top: usize, left: usize, bottom: usize, right: usize) -> Result<Self, GridError> {
        if top == 0 || left == 0 || top > bottom || left > right {
            return Err(GridError::BadRect);
        }
        Ok(Rect {
            top,
            left,
            bottom,
            right,
        })
    }

    pub fn contains(&self, (r, c): Cell) -> bool {
        self.top <= r && r <= self.bottom && self.left <= c && c <= self.right
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.top..=self.bottom).flat_map(move |r| (self.left..=self.right).map(move |c| (r, c)))
    }

    /// Smallest rectangle containing both.
    pub fn bounding(&self, other: &Rect) -> Rect {
        Rect {
            top: self.top.min(other.top),
            left: self.left.min(other.left),
            bottom: self.bottom.max(other.bottom),
            right: self.right.max(other.right),
        }
    }
}

/// A rectangular grid with a set of red cells; the percolation state.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GridConfig {
    rows: usize,
    cols: usize,
    // bit j-1 of words[i-1] is cell (i, j)
    words: Vec<u64>,
}

impl GridConfig {
    /// All-blue grid.
    pub fn blank(rows: usize, cols: usize) -> Result<Self, GridError> {
        if rows == 0 || cols == 0 || cols > MAX_COLS {
            return Err(GridError::BadDimensions(rows, cols));
        }
        Ok(GridConfig {
            rows,
            cols,
            words: vec![0; rows],
        })
    }

    /// Grid with the given red cells; rejects out-of-range coordinates.
    pub fn from_cells<I>(rows: usize, cols: usize, red: I) -> Result<Self, GridError>
    where
        I: IntoIterator<Item = Cell>,
    {
        let mut grid = Self::blank(rows, cols)?;
        for (r, c) in red {
            if r == 0 || r > rows || c == 0 || c > cols {
                return Err(GridError::CellOutOfBounds(r, c));
            }
            grid.words[r - 1] |= 1u64 << (c - 1);
        }
        Ok(grid)
    }

    /// All-red grid.
    pub fn full(rows: usize, cols: usize) -> Result<Self, GridError> {
        let mut grid = Self::blank(rows, cols)?;
        let mask = grid.col_mask();
        for w in &mut grid.words {
            *w = mask;
        }
        Ok(grid)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn col_mask(&self) -> u64 {
        if self.cols == 64 {
            u64::MAX
        } else {
            (1u64 << self.cols) - 1
        }
    }

    pub fn is_red(&self, (r, c): Cell) -> bool {
        debug_assert!(r >= 1 && r <= self.rows && c >= 1 && c <= self.cols);
        self.words[r - 1] >> (c - 1) & 1 == 1
    }

    pub fn red_count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Red cells in row-major order.
    pub fn red_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.rows).flat_map(move |r| {
            let word = self.words[r - 1];
            (1..=self.cols).filter_map(move |c| (word >> (c - 1) & 1 == 1).then_some((r, c)))
        })
    }

    pub fn is_subset_of(&self, other: &GridConfig) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    /// Cellwise intersection of two configurations on the same grid.
    pub fn intersection(&self, other: &GridConfig) -> GridConfig {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        GridConfig {
            rows: self.rows,
            cols: self.cols,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Cellwise union of two configurations on the same grid.
    pub fn union(&self, other: &GridConfig) -> GridConfig {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        GridConfig {
            rows: self.rows,
            cols: self.cols,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    fn without_cell(&self, (r, c): Cell) -> GridConfig {
        let mut g = self.clone();
        g.words[r - 1] &= !(1u64 << (c - 1));
        g
    }

    /// One synchronous step of the update rule: every blue cell with at
    /// least two red orthogonal neighbors turns red.
    pub fn percolate_step(&self) -> GridConfig {
        let mut next = self.clone();
        self.step_into(&mut next.words);
        next
    }

    #[allow(clippy::needless_range_loop)] // rows index into three neighbors
    fn step_into(&self, out: &mut [u64]) {
        let mask = self.col_mask();
        for i in 0..self.rows {
            let row = self.words[i];
            let up = if i > 0 { self.words[i - 1] } else { 0 };
            let down = if i + 1 < self.rows {
                self.words[i + 1]
            } else {
                0
            };
            let left = (row << 1) & mask;
            let right = row >> 1;
            let two = (up & down)
                | (up & left)
                | (up & right)
                | (down & left)
                | (down & right)
                | (left & right);
            out[i] = row | (two & mask);
        }
    }

    /// Least fixpoint of `percolate_step` containing `self`.
    pub fn closure(&self) -> GridConfig {
        let mut current = self.clone();
        let mut scratch = vec![0u64; self.rows];
        // each productive step adds at least one red cell
        for _ in 0..=self.rows * self.cols {
            current.step_into(&mut scratch);
            if scratch == current.words {
                return current;
            }
            std::mem::swap(&mut current.words, &mut scratch);
        }
        unreachable!("closure exceeded the rows*cols iteration bound");
    }

    /// True iff the closure covers every cell.
    pub fn is_percolating(&self) -> bool {
        let mask = self.col_mask();
        self.closure().words.iter().all(|&w| w == mask)
    }

    /// True iff percolating and removing any single red cell breaks it.
    pub fn is_minimal_percolating(&self) -> bool {
        if !self.is_percolating() {
            return false;
        }
        self.red_cells()
            .all(|cell| !self.without_cell(cell).is_percolating())
    }

    /// True iff the closure contains every cell of `region`.
    pub fn spans(&self, region: &Rect) -> Result<bool, GridError> {
        if region.bottom > self.rows || region.right > self.cols {
            return Err(GridError::RegionOutOfBounds);
        }
        let closed = self.closure();
        Ok(region.cells().all(|cell| closed.is_red(cell)))
    }

    /// Fixpoint test: one step changes nothing.
    pub fn is_final(&self) -> bool {
        let mut scratch = vec![0u64; self.rows];
        self.step_into(&mut scratch);
        scratch == self.words
    }

    /// Structural test for final configurations: every 4-connected red
    /// component is a full rectangle whose 2-collar contains no red cell.
    /// Agrees with [`GridConfig::is_final`] on every configuration.
    pub fn is_final_structural(&self) -> bool {
        let comps = self.components();
        for (rect, size) in &comps {
            let area = (rect.bottom - rect.top + 1) * (rect.right - rect.left + 1);
            if area != *size {
                return false;
            }
            let collar = CellSet::from_rect(self.rows, self.cols, rect).collar(2);
            if collar.cells().iter().any(|&cell| self.is_red(cell)) {
                return false;
            }
        }
        true
    }

    // 4-connected components of red cells: (bounding rect, cell count),
    // sorted by (top, left).
    fn components(&self) -> Vec<(Rect, usize)> {
        let mut seen = vec![0u64; self.rows];
        let mut out = Vec::new();
        for start in self.red_cells() {
            if seen[start.0 - 1] >> (start.1 - 1) & 1 == 1 {
                continue;
            }
            let mut stack = vec![start];
            seen[start.0 - 1] |= 1u64 << (start.1 - 1);
            let (mut top, mut left, mut bottom, mut right) = (start.0, start.1, start.0, start.1);
            let mut size = 0;
            while let Some((r, c)) = stack.pop() {
                size += 1;
                top = top.min(r);
                bottom = bottom.max(r);
                left = left.min(c);
                right = right.max(c);
                let mut push = |nr: usize, nc: usize| {
                    if nr >= 1
                        && nr <= self.rows
                        && nc >= 1
                        && nc <= self.cols
                        && self.is_red((nr, nc))
                        && seen[nr - 1] >> (nc - 1) & 1 == 0
                    {
                        seen[nr - 1] |= 1u64 << (nc - 1);
                        stack.push((nr, nc));
                    }
                };
                push(r.wrapping_sub(1), c);
                push(r + 1, c);
                push(r, c.wrapping_sub(1));
                push(r, c + 1);
            }
            out.push((
                Rect {
                    top,
                    left,
                    bottom,
                    right,
                },
                size,
            ));
        }
        out.sort_by_key(|(rect, _)| (rect.top, rect.left));
        out
    }

    /// The 4-connected components of a final configuration, each certified
    /// to be a full rectangle, sorted by `(top, left)`.
    pub fn rect_components(&self) -> Result<Vec<Rect>, GridError> {
        if !self.is_final() {
            return Err(GridError::NotFinal);
        }
        let comps = self.components();
        Ok(comps
            .into_iter()
            .map(|(rect, size)| {
                let area = (rect.bottom - rect.top + 1) * (rect.right - rect.left + 1);
                // final configurations decompose into full rectangles
                assert_eq!(
                    area, size,
                    "non-rectangular component in a final configuration"
                );
                rect
            })
            .collect())
    }

    /// Substitution `self ∘_(cell) tau`: the red `cell` is replaced by the
    /// whole of `tau`; the other cells of its row are refined to columns of
    /// height `tau.rows()` and the other cells of its column to rows of
    /// width `tau.cols()`, copying their colors.
    pub fn substitute_at(&self, cell: Cell, tau: &GridConfig) -> Result<GridConfig, GridError> {
        let (i, j) = cell;
        if i == 0 || i > self.rows || j == 0 || j > self.cols {
            return Err(GridError::CellOutOfBounds(i, j));
        }
        if !self.is_red(cell) {
            return Err(GridError::CellNotRed(i, j));
        }
        let p = tau.rows();
        let q = tau.cols();
        let rows = self.rows + p - 1;
        let cols = self.cols + q - 1;
        let mut out = GridConfig::blank(rows, cols)?;
        let map_row = |r: usize| if r < i { r } else { r + p - 1 };
        let map_col = |c: usize| if c < j { c } else { c + q - 1 };
        for (r, c) in self.red_cells() {
            if (r, c) == (i, j) {
                for (tr, tc) in tau.red_cells() {
                    out.words[i + tr - 2] |= 1u64 << (j + tc - 2);
                }
            } else if r == i {
                // refined to a column of height p
                let nc = map_col(c);
                for dr in 0..p {
                    out.words[i + dr - 1] |= 1u64 << (nc - 1);
                }
            } else if c == j {
                // refined to a row of width q
                let nr = map_row(r);
                for dc in 0..q {
                    out.words[nr - 1] |= 1u64 << (j + dc - 1);
                }
            } else {
                out.words[map_row(r) - 1] |= 1u64 << (map_col(c) - 1);
            }
        }
        Ok(out)
    }

    /// Block renormalization: every cell becomes a `k`-by-`k` block of the
    /// same color.
    pub fn fine_grain(&self, k: usize) -> Result<GridConfig, GridError> {
        if k == 0 {
            return Err(GridError::BadFactor);
        }
        let mut out = GridConfig::blank(self.rows * k, self.cols * k)?;
        for (r, c) in self.red_cells() {
            for dr in 0..k {
                let block = ((1u64 << k) - 1) << ((c - 1) * k);
                out.words[(r - 1) * k + dr] |= block;
            }
        }
        Ok(out)
    }

    /// Grid text format: `<rows> <cols>` header, then one line per row with
    /// `#` for red and `.` for blue.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for r in 1..=self.rows {
            for c in 1..=self.cols {
                s.push(if self.is_red((r, c)) { '#' } else { '.' });
            }
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<GridConfig, GridError> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| GridError::Parse("missing header line".into()))?;
        let mut parts = header.split_whitespace();
        let rows: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GridError::Parse("bad row count".into()))?;
        let cols: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GridError::Parse("bad column count".into()))?;
        if parts.next().is_some() {
            return Err(GridError::Parse("trailing tokens in header".into()));
        }
        let mut grid = GridConfig::blank(rows, cols)?;
        for r in 1..=rows {
            let line = lines
                .next()
                .ok_or_else(|| GridError::Parse(format!("missing row {r}")))?;
            if line.chars().count() != cols {
                return Err(GridError::Parse(format!(
                    "row {r} has {} cells, expected {cols}",
                    line.chars().count()
                )));
            }
            for (idx, ch) in line.chars().enumerate() {
                match ch {
                    '#' => grid.words[r - 1] |= 1u64 << idx,
                    '.' => {}
                    other => {
                        return Err(GridError::Parse(format!(
                            "unexpected character {other:?} in row {r}"
                        )))
                    }
                }
            }
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(GridError::Parse("trailing content after grid".into()));
        }
        Ok(grid)
    }
}

impl fmt::Debug for GridConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\n{}", self.to_text())
    }
}

impl fmt::Display for GridConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A set of cells in a host grid, colors ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellSet {
    rows: usize,
    cols: usize,
    cells: BTreeSet<Cell>,
}

impl CellSet {
    pub fn new<I>(rows: usize, cols: usize, cells: I) -> Result<Self, GridError>
    where
        I: IntoIterator<Item = Cell>,
    {
        if rows == 0 || cols == 0 {
            return Err(GridError::BadDimensions(rows, cols));
        }
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        for &(r, c) in &cells {
            if r == 0 || r > rows || c == 0 || c > cols {
                return Err(GridError::CellOutOfBounds(r, c));
            }
        }
        Ok(CellSet { rows, cols, cells })
    }

    pub fn from_rect(rows: usize, cols: usize, rect: &Rect) -> Self {
        CellSet::new(rows, cols, rect.cells()).expect("rect within host grid")
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    /// The k-collar: cells of the host grid within Manhattan distance `k` of
    /// the set, excluding the set itself. Empty for `k = 0`.
    pub fn collar(&self, k: usize) -> CellSet {
        let mut out = BTreeSet::new();
        for &(r, c) in &self.cells {
            for dr in -(k as isize)..=(k as isize) {
                let budget = k as isize - dr.abs();
                for dc in -budget..=budget {
                    let nr = r as isize + dr;
                    let nc = c as isize + dc;
                    if nr >= 1 && nr <= self.rows as isize && nc >= 1 && nc <= self.cols as isize {
                        out.insert((nr as usize, nc as usize));
                    }
                }
            }
        }
        for cell in &self.cells {
            out.remove(cell);
        }
        CellSet {
            rows: self.rows,
            cols: self.cols,
            cells: out,
        }
    }
}

/// The family of minimal percolating sets with cells at `(1, 3k−1)`,
/// `(1, 3k)`, `(3k−1, 1)`, `(3k, 1)` for `1 ≤ k ≤ m`, on a `3m`-by-`3m` grid.
pub fn family_a(m: usize) -> Result<GridConfig, GridError> {
    if m == 0 {
        return Err(GridError::BadDimensions(0, 0));
    }
    let n = 3 * m;
    let cells = (1..=m).flat_map(|k| [(1, 3 * k - 1), (1, 3 * k), (3 * k - 1, 1), (3 * k, 1)]);
    GridConfig::from_cells(n, n, cells)
}

/// Morris upper bound for the size of a minimal percolating set in an
/// `n`-by-`n` grid.
pub fn morris_bound(n: usize) -> usize {
    (n + 2) * (n + 2) / 6
}

/// Number of minimal percolating sets of size `n` in the `n`-by-`n` grid.
///
/// `n` is the minimum possible size of a percolating set, so these are the
/// minimum-cardinality minimal sets; that is what the published sequence
/// counts. Minimal sets of larger sizes exist (up to the Morris bound) and
/// are reported by [`minimal_census_by_size`].
pub fn minimal_census(n: usize) -> Result<u64, GridError> {
    let by_size = census_by_size_bounded(n, n)?;
    Ok(by_size
        .iter()
        .find(|&&(size, _)| size == n)
        .map(|&(_, c)| c)
        .unwrap_or(0))
}

/// Census of all minimal percolating sets grouped by size, as
/// `(size, count)` pairs; sizes range over `n ..= (n+2)²/6`.
pub fn minimal_census_by_size(n: usize) -> Result<Vec<(usize, u64)>, GridError> {
    census_by_size_bounded(n, morris_bound(n))
}

// Enumerates exactly the irredundant sets of at most `bound` cells: a set
// where some cell lies in the closure of the others cannot be extended to
// a minimal percolating set, so the whole branch is pruned. An irredundant
// percolating set is minimal, and every subset of a minimal percolating set
// is irredundant, so the search is exhaustive. Labeled sets; symmetry is
// not quotiented.
fn census_by_size_bounded(n: usize, bound: usize) -> Result<Vec<(usize, u64)>, GridError> {
    if n == 0 || n > CENSUS_CAP {
        return Err(GridError::BudgetExceeded(n));
    }
    let total_cells = n * n;

    // branch on the first chosen cell; totals are order-independent sums
    let per_size: Vec<Vec<u64>> = (0..total_cells)
        .into_par_iter()
        .map(|first| {
            let mut counts = vec![0u64; bound + 1];
            let cell = (first / n + 1, first % n + 1);
            let config = GridConfig::from_cells(n, n, [cell]).unwrap();
            census_dfs(&config, &mut vec![cell], first, bound, &mut counts);
            counts
        })
        .collect();

    let mut totals = vec![0u64; bound + 1];
    for counts in per_size {
        for (size, c) in counts.iter().enumerate() {
            totals[size] += c;
        }
    }
    Ok(totals
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .collect())
}

fn census_dfs(
    config: &GridConfig,
    chosen: &mut Vec<Cell>,
    last: usize,
    bound: usize,
    counts: &mut Vec<u64>,
) {
    let n = config.rows();
    let closed = config.closure();
    if closed.red_count() == n * n {
        if irredundant(config, chosen) {
            counts[chosen.len()] += 1;
        }
        // supersets of a percolating set are never minimal
        return;
    }
    if !irredundant(config, chosen) || chosen.len() == bound {
        return;
    }
    for idx in last + 1..n * n {
        let cell = (idx / n + 1, idx % n + 1);
        // a cell already in the closure would be redundant immediately
        if closed.is_red(cell) {
            continue;
        }
        let mut next = config.clone();
        next.words[cell.0 - 1] |= 1u64 << (cell.1 - 1);
        chosen.push(cell);
        census_dfs(&next, chosen, idx, bound, counts);
        chosen.pop();
    }
}

fn irredundant(config: &GridConfig, chosen: &[Cell]) -> bool {
    chosen.iter().all(|&cell| {
        let reduced = config.without_cell(cell);
        !reduced.closure().is_red(cell)
    })
}
