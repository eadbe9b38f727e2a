//! Partitions, Young diagrams (straight and skew), standard and
//! semistandard tableaux, hooks, contents, and Schur elements.
//!
//! Tableau enumerations return a deterministic order: sorted by the row
//! reading word, lexicographically.

use crate::error::{Error, Result};
use crate::ratfunc::{qint, LaurentPoly, RatFunc};
use std::fmt;
use std::str::FromStr;

/// Partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        let parts = parts.into_iter().take_while(|&p| p > 0).collect();
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn rows(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn part(&self, row: u32) -> u32 {
        self.parts.get((row - 1) as usize).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=cols)
                .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        }
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        (1..=inner.rows()).all(|r| inner.part(r) <= self.part(r))
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &p) in self.parts.iter().enumerate() {
            for c in 1..=p {
                out.push(Cell::new(i as u32 + 1, c));
            }
        }
        out
    }

    /// Cells whose addition leaves a partition, sorted by increasing content.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        out.push(Cell::new(self.rows() + 1, 1));
        for i in (1..=self.rows()).rev() {
            if i == 1 || self.part(i - 1) > self.part(i) {
                out.push(Cell::new(i, self.part(i) + 1));
            }
        }
        out
    }

    pub fn with_added(&self, cell: Cell) -> Partition {
        let mut parts = self.parts.clone();
        if cell.row as usize > parts.len() {
            assert!(cell.row as usize == parts.len() + 1 && cell.col == 1);
            parts.push(1);
        } else {
            assert!(cell.col == parts[(cell.row - 1) as usize] + 1);
            parts[(cell.row - 1) as usize] += 1;
        }
        Partition::new(parts)
    }

    pub fn hook_length(&self, cell: Cell) -> u32 {
        assert!(self.contains_cell(cell), "hook of cell outside diagram");
        let arm = self.part(cell.row) - cell.col;
        let leg = self.conjugate().part(cell.col) - cell.row;
        arm + leg + 1
    }

    /// prod over cells of q^content * [hook]; a unit of the coefficient field.
    pub fn schur_element(&self) -> RatFunc {
        let mut poly = LaurentPoly::one();
        let mut shift = 0i64;
        for cell in self.cells() {
            poly = &poly * &qint(self.hook_length(cell) as i64);
            shift += cell.content();
        }
        RatFunc::from_laurent(poly.shifted(shift))
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn num_standard(&self) -> u64 {
        let m = self.size() as u64;
        let mut num = 1u64;
        for k in 1..=m {
            num *= k;
        }
        let mut den = 1u64;
        for cell in self.cells() {
            den *= self.hook_length(cell) as u64;
        }
        assert!(num % den == 0);
        num / den
    }
}

/// All partitions of m, largest-first lexicographic order.
pub fn partitions_of(m: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m.max(1), &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse("empty partition".into()));
        }
        let mut parts = Vec::new();
        for piece in trimmed.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition part {piece:?}")))?;
            if p == 0 {
                return Err(Error::Parse("partition parts must be positive".into()));
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!(
                "partition parts must be weakly decreasing: {trimmed:?}"
            )));
        }
        Ok(Partition::new(parts))
    }
}

/// One cell of a diagram; rows and columns are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }

    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// Skew diagram outer/inner; a straight shape has empty inner.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Self {
        assert!(
            outer.contains(&inner),
            "inner shape {inner} not contained in outer {outer}"
        );
        SkewShape { outer, inner }
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.parts().is_empty()
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// Skew cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.outer
            .cells()
            .into_iter()
            .filter(|&c| !self.inner.contains_cell(c))
            .collect()
    }

    /// True when no column contains two cells of the skew diagram.
    pub fn is_horizontal_strip(&self) -> bool {
        let cells = self.cells();
        for c in &cells {
            if cells
                .iter()
                .any(|d| d.col == c.col && d.row == c.row + 1)
            {
                return false;
            }
        }
        true
    }
}

impl From<Partition> for SkewShape {
    fn from(p: Partition) -> Self {
        SkewShape::straight(p)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Standard tableau of a (possibly skew) shape: entries 1..m increase along
/// rows and down columns. Stored as the cell of each entry.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StandardTableau {
    shape: SkewShape,
    cells: Vec<Cell>,
}

impl StandardTableau {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn size(&self) -> u32 {
        self.cells.len() as u32
    }

    pub fn cell_of(&self, entry: u32) -> Cell {
        assert!(entry >= 1 && entry <= self.size(), "entry out of range");
        self.cells[(entry - 1) as usize]
    }

    pub fn entry_at(&self, cell: Cell) -> Option<u32> {
        self.cells
            .iter()
            .position(|&c| c == cell)
            .map(|i| i as u32 + 1)
    }

    pub fn content(&self, entry: u32) -> i64 {
        self.cell_of(entry).content()
    }

    pub fn content_seq(&self) -> Vec<i64> {
        self.cells.iter().map(Cell::content).collect()
    }

    /// d_k = c_{k+1} - c_k; nonzero for every standard tableau.
    pub fn axial_distance(&self, k: u32) -> i64 {
        assert!(k >= 1 && k < self.size(), "axial distance index out of range");
        let d = self.content(k + 1) - self.content(k);
        debug_assert!(d != 0);
        d
    }

    /// Swap entries k and k+1 if the result is standard.
    pub fn swap_entries(&self, k: u32) -> Option<StandardTableau> {
        assert!(k >= 1 && k < self.size());
        let a = self.cell_of(k);
        let b = self.cell_of(k + 1);
        if a.row == b.row || a.col == b.col {
            return None;
        }
        let mut cells = self.cells.clone();
        cells.swap((k - 1) as usize, k as usize);
        Some(StandardTableau {
            shape: self.shape.clone(),
            cells,
        })
    }

    /// Straight shape formed by entries 1..=j (straight tableaux only).
    pub fn prefix_shape(&self, j: u32) -> Partition {
        assert!(self.shape.is_straight(), "prefix shape needs a straight tableau");
        assert!(j <= self.size());
        let mut counts: Vec<u32> = Vec::new();
        for e in 1..=j {
            let r = self.cell_of(e).row as usize;
            if counts.len() < r {
                counts.resize(r, 0);
            }
            counts[r - 1] += 1;
        }
        Partition::new(counts)
    }

    /// The standard tableau formed by entries 1..=j (straight tableaux only).
    pub fn prefix_tableau(&self, j: u32) -> StandardTableau {
        let shape = SkewShape::straight(self.prefix_shape(j));
        StandardTableau {
            shape,
            cells: self.cells[..j as usize].to_vec(),
        }
    }

    /// Row reading word: rows top to bottom, each left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        let mut cells: Vec<(Cell, u32)> = self
            .cells
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i as u32 + 1))
            .collect();
        cells.sort_by_key(|(c, _)| (c.row, c.col));
        cells.into_iter().map(|(_, e)| e).collect()
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        let lo = if self.shape.is_straight() { 1 } else { 1 };
        let hi = self.shape.outer().rows();
        (lo..=hi)
            .map(|r| {
                (1..=self.shape.outer().part(r))
                    .filter_map(|c| self.entry_at(Cell::new(r, c)))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|e| e.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "{}", rows.join(""))
    }
}

/// All standard tableaux of the shape, sorted by reading word.
pub fn standard_tableaux(shape: &SkewShape) -> Vec<StandardTableau> {
    let cells = shape.cells();
    let m = cells.len();
    let mut out = Vec::new();
    let mut assignment: Vec<Option<Cell>> = vec![None; m];
    let mut used = vec![false; m];

    fn placeable(shape: &SkewShape, taken: &[Cell], cell: Cell) -> bool {
        let left = if cell.col > 1 {
            Some(Cell::new(cell.row, cell.col - 1))
        } else {
            None
        };
        let up = if cell.row > 1 {
            Some(Cell::new(cell.row - 1, cell.col))
        } else {
            None
        };
        for n in [left, up].into_iter().flatten() {
            if shape.contains_cell(n) && !taken.contains(&n) {
                return false;
            }
        }
        true
    }

    fn rec(
        shape: &SkewShape,
        cells: &[Cell],
        entry: usize,
        assignment: &mut Vec<Option<Cell>>,
        used: &mut Vec<bool>,
        out: &mut Vec<StandardTableau>,
    ) {
        let m = cells.len();
        if entry == m {
            out.push(StandardTableau {
                shape: shape.clone(),
                cells: assignment.iter().map(|c| c.unwrap()).collect(),
            });
            return;
        }
        let taken: Vec<Cell> = assignment.iter().flatten().copied().collect();
        for (i, &cell) in cells.iter().enumerate() {
            if used[i] || !placeable(shape, &taken, cell) {
                continue;
            }
            used[i] = true;
            assignment[entry] = Some(cell);
            rec(shape, cells, entry + 1, assignment, used, out);
            assignment[entry] = None;
            used[i] = false;
        }
    }

    rec(shape, &cells, 0, &mut assignment, &mut used, &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}

pub fn standard_tableaux_of(shape: &Partition) -> Vec<StandardTableau> {
    standard_tableaux(&SkewShape::straight(shape.clone()))
}

/// Filling of a straight shape with positive entries; used for semistandard
/// tableaux and for the weakly increasing fillings of the coset identity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>) -> Self {
        assert_eq!(rows.len() as u32, shape.rows(), "row count mismatch");
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len() as u32, shape.part(i as u32 + 1), "row length mismatch");
        }
        Tableau { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn entry(&self, cell: Cell) -> u32 {
        self.rows[(cell.row - 1) as usize][(cell.col - 1) as usize]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Weakly increasing along rows and down columns.
    pub fn is_weakly_increasing(&self) -> bool {
        for row in &self.rows {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
        }
        for r in 1..self.rows.len() {
            for c in 0..self.rows[r].len() {
                if self.rows[r - 1][c] > self.rows[r][c] {
                    return false;
                }
            }
        }
        true
    }

    /// Weakly increasing rows, strictly increasing columns.
    pub fn is_semistandard(&self) -> bool {
        if !self.is_weakly_increasing() {
            return false;
        }
        for r in 1..self.rows.len() {
            for c in 0..self.rows[r].len() {
                if self.rows[r - 1][c] == self.rows[r][c] {
                    return false;
                }
            }
        }
        true
    }

    /// Shape of the sub-diagram with entries <= bound; requires the result
    /// to be a partition (true for weakly increasing fillings).
    pub fn shape_of_entries_le(&self, bound: u32) -> Partition {
        let counts: Vec<u32> = self
            .rows
            .iter()
            .map(|row| row.iter().filter(|&&e| e <= bound).count() as u32)
            .collect();
        Partition::new(counts.into_iter().collect())
    }

    /// Sorted multiset of entries.
    pub fn sorted_entries(&self) -> Vec<u32> {
        let mut v = self.reading_word();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|e| e.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "{}", rows.join(""))
    }
}

fn enumerate_fillings(shape: &Partition, n: u32, strict_columns: bool) -> Vec<Tableau> {
    let cells = shape.cells();
    let mut rows: Vec<Vec<u32>> = shape
        .parts()
        .iter()
        .map(|&p| vec![0; p as usize])
        .collect();
    let mut out = Vec::new();

    fn rec(
        shape: &Partition,
        cells: &[Cell],
        idx: usize,
        n: u32,
        strict: bool,
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<Tableau>,
    ) {
        if idx == cells.len() {
            out.push(Tableau::new(shape.clone(), rows.clone()));
            return;
        }
        let cell = cells[idx];
        let (r, c) = ((cell.row - 1) as usize, (cell.col - 1) as usize);
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 {
            let above = rows[r - 1][c];
            lo = lo.max(if strict { above + 1 } else { above });
        }
        for e in lo..=n {
            rows[r][c] = e;
            rec(shape, cells, idx + 1, n, strict, rows, out);
        }
        rows[r][c] = 0;
    }

    rec(shape, &cells, 0, n, strict_columns, &mut rows, &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}

/// Semistandard tableaux with entries bounded by n, sorted by reading word.
pub fn semistandard_tableaux(shape: &Partition, n: u32) -> Vec<Tableau> {
    enumerate_fillings(shape, n, true)
}

/// Fillings weakly increasing along rows and down columns, entries <= n.
pub fn weak_fillings(shape: &Partition, n: u32) -> Vec<Tableau> {
    enumerate_fillings(shape, n, false)
}

pub fn ssyt_count(shape: &Partition, n: u32) -> u64 {
    semistandard_tableaux(shape, n).len() as u64
}

/// Dimension of the highest-weight gl_n module by the Weyl formula; the
/// independent cross-check for ssyt_count.
pub fn weyl_dim(shape: &Partition, n: u32) -> u64 {
    if shape.rows() > n {
        return 0;
    }
    let lam = |i: u32| shape.part(i) as i64;
    let mut num = 1i128;
    let mut den = 1i128;
    for i in 1..=n {
        for j in (i + 1)..=n {
            num *= (lam(i) - lam(j) + j as i64 - i as i64) as i128;
            den *= (j - i) as i128;
        }
    }
    assert!(num % den == 0);
    (num / den) as u64
}
