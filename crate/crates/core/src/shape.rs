//! The periodic strip on which affine pipe dreams for `(k, n, λ)` live.
//!
//! Frame: the path starts at the origin, `r` grows south and `c` grows east.
//! Step `i` goes South when `i ∈ λ` and East otherwise, and repeats with
//! period `(k, n - k)`. The strip lies between this path and its copy `k`
//! rows further north. Row `r` of the strip is the run of `n - k` cells east
//! of the vertical segment in that row; column `c` is the run of `k` cells
//! north of the horizontal segment in that column.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permcore::ColumnSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Step {
    South,
    East,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    /// NW corner, row.
    pub r: i64,
    /// NW corner, column.
    pub c: i64,
    pub row_label: usize,
    pub col_label: usize,
    pub letter: usize,
    pub reading_index: usize,
}

/// An axis-aligned rectangle inside the strip whose SW corner is a corner of
/// the lower boundary and whose NE corner is a corner of the upper one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RectRegion {
    /// Lattice point `(r, c)` of the SW corner, in the first period.
    pub sw: (i64, i64),
    pub ne: (i64, i64),
    pub height: usize,
    pub width: usize,
    /// Reading indices of the member cells, row-major from the north row.
    pub cells: Vec<usize>,
}

impl RectRegion {
    pub fn cell(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.width + b]
    }
}

#[derive(Clone, Debug)]
pub struct StripShape {
    k: usize,
    n: usize,
    lambda: ColumnSet,
    lam: Vec<usize>,
    comp: Vec<usize>,
    path: Vec<Step>,
    cells: Vec<Cell>,
    index: HashMap<(i64, i64), usize>,
}

impl PartialEq for StripShape {
    fn eq(&self, other: &Self) -> bool {
        self.lambda == other.lambda
    }
}

impl Eq for StripShape {}

pub fn build_shape(k: usize, n: usize, lambda: &ColumnSet) -> Result<StripShape> {
    if k == 0 || k >= n {
        return Err(Error::DegenerateGrassmannian { k, n });
    }
    strip(k, n, lambda)
}

/// Like [`build_shape`] but also accepts `k = 0` and `k = n`, where the strip
/// has no cells and every pipe exits where it enters.
pub fn strip(k: usize, n: usize, lambda: &ColumnSet) -> Result<StripShape> {
    if lambda.n() != n || lambda.k() != k {
        return Err(Error::KMismatch { f_k: k, lambda_k: lambda.k() });
    }
    let lam = lambda.members().to_vec();
    let comp = lambda.complement();
    let path = (1..=n).map(|i| if lambda.contains(i) { Step::South } else { Step::East }).collect();
    let mut shape = StripShape {
        k,
        n,
        lambda: lambda.clone(),
        lam,
        comp,
        path,
        cells: Vec::new(),
        index: HashMap::new(),
    };
    let mut raw = Vec::with_capacity(k * (n - k));
    for r in 0..k as i64 {
        let (c0, label) = shape.row_start(r);
        for c in c0..c0 + (n - k) as i64 {
            let (_, col) = shape.column_floor(c);
            raw.push(Cell {
                r,
                c,
                row_label: label as usize,
                col_label: residue(col, n),
                letter: ((r + c).rem_euclid(n as i64) + 1) as usize,
                reading_index: 0,
            });
        }
    }
    // west to east by column, south to north inside a column
    raw.sort_by_key(|cell| (cell.c, -cell.r));
    for (idx, cell) in raw.iter_mut().enumerate() {
        cell.reading_index = idx;
        shape.index.insert((cell.r, cell.c), idx);
    }
    shape.cells = raw;
    Ok(shape)
}

fn residue(x: i64, n: usize) -> usize {
    ((x - 1).rem_euclid(n as i64) + 1) as usize
}

impl StripShape {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &ColumnSet {
        &self.lambda
    }

    pub fn path(&self) -> &[Step] {
        &self.path
    }

    /// Cells of the fundamental window in reading order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Lifted members of λ strictly below `x`, counted from 1 (affine-linear in `x`).
    pub fn count_below(set: &[usize], n: usize, x: i64) -> i64 {
        let q = (x - 1).div_euclid(n as i64);
        let r = ((x - 1).rem_euclid(n as i64) + 1) as usize;
        q * set.len() as i64 + set.iter().filter(|&&m| m < r).count() as i64
    }

    /// Lattice point reached after step `i` of the lifted path.
    pub fn path_point(&self, i: i64) -> (i64, i64) {
        (Self::count_below(&self.lam, self.n, i + 1), Self::count_below(&self.comp, self.n, i + 1))
    }

    /// Westmost column of row `r` and the lifted label of its vertical segment.
    pub fn row_start(&self, r: i64) -> (i64, i64) {
        let k = self.k as i64;
        let q = r.div_euclid(k);
        let label = self.lam[r.rem_euclid(k) as usize] as i64 + q * self.n as i64;
        (Self::count_below(&self.comp, self.n, label), label)
    }

    /// Row just south of column `c` and the lifted label of its horizontal segment.
    pub fn column_floor(&self, c: i64) -> (i64, i64) {
        let w = (self.n - self.k) as i64;
        let q = c.div_euclid(w);
        let label = self.comp[c.rem_euclid(w) as usize] as i64 + q * self.n as i64;
        (Self::count_below(&self.lam, self.n, label), label)
    }

    pub fn in_strip(&self, r: i64, c: i64) -> bool {
        if self.cells.is_empty() {
            return false;
        }
        let (low, _) = self.column_floor(c);
        low - self.k as i64 <= r && r < low
    }

    /// Reading index of the fundamental cell translated to `(r, c)`, with the
    /// number of periods `q` such that `(r, c) = cell + q·(k, n - k)`.
    pub fn locate(&self, r: i64, c: i64) -> Option<(usize, i64)> {
        if !self.in_strip(r, c) {
            return None;
        }
        let q = r.div_euclid(self.k as i64);
        let r0 = r - q * self.k as i64;
        let c0 = c - q * (self.n - self.k) as i64;
        self.index.get(&(r0, c0)).map(|&idx| (idx, q))
    }

    pub fn translate(&self, idx: usize, q: i64) -> (i64, i64) {
        let cell = &self.cells[idx];
        (cell.r + q * self.k as i64, cell.c + q * (self.n - self.k) as i64)
    }

    /// Letters in reading order.
    pub fn word(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.letter).collect()
    }

    /// Window of the all-elbow filling, `g(i) = i + k`.
    pub fn base(&self) -> Vec<i64> {
        (1..=self.n as i64).map(|i| i + self.k as i64).collect()
    }

    pub fn cell_by_labels(&self, row: usize, col: usize) -> Option<usize> {
        self.cells.iter().position(|c| c.row_label == row && c.col_label == col)
    }

    pub fn row_band(&self, label: usize) -> Vec<usize> {
        self.cells.iter().filter(|c| c.row_label == label).map(|c| c.reading_index).collect()
    }

    pub fn column_band(&self, label: usize) -> Vec<usize> {
        self.cells.iter().filter(|c| c.col_label == label).map(|c| c.reading_index).collect()
    }

    /// Cells directly south and west of `idx`, up to translation. Any linear
    /// extension must place them before `idx`.
    pub fn predecessors(&self, idx: usize) -> Vec<usize> {
        let cell = &self.cells[idx];
        [(1, 0), (0, -1)].iter().filter_map(|&(dr, dc)| self.locate(cell.r + dr, cell.c + dc).map(|(nb, _)| nb)).collect()
    }

    /// Whether `order` (a permutation of reading indices) adds cells so that
    /// the south and west neighbours of every cell, up to translation, come
    /// first.
    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        if order.len() != self.len() {
            return false;
        }
        let mut done = vec![false; self.len()];
        for &idx in order {
            if idx >= self.len() || done[idx] {
                return false;
            }
            if self.predecessors(idx).iter().any(|&nb| !done[nb]) {
                return false;
            }
            done[idx] = true;
        }
        true
    }

    /// Lower-boundary corners where a South step is followed by an East step.
    fn lower_corners(&self) -> Vec<(i64, i64)> {
        (1..=self.n as i64)
            .filter(|&i| self.lambda.contains_lifted(i) && !self.lambda.contains_lifted(i + 1))
            .map(|i| self.path_point(i))
            .collect()
    }

    /// Upper-boundary corners (East then South) over a window of periods.
    fn upper_corners(&self, from: i64, to: i64) -> Vec<(i64, i64)> {
        (from..=to)
            .filter(|&j| !self.lambda.contains_lifted(j) && self.lambda.contains_lifted(j + 1))
            .map(|j| {
                let (r, c) = self.path_point(j);
                (r - self.k as i64, c)
            })
            .collect()
    }

    fn rect_inside(&self, sw: (i64, i64), ne: (i64, i64)) -> bool {
        (sw.1..ne.1).all(|c| {
            let (low, _) = self.column_floor(c);
            low - self.k as i64 <= ne.0 && sw.0 <= low
        })
    }

    fn make_rect(&self, sw: (i64, i64), ne: (i64, i64)) -> RectRegion {
        let height = (sw.0 - ne.0) as usize;
        let width = (ne.1 - sw.1) as usize;
        let mut cells = Vec::with_capacity(height * width);
        for r in ne.0..sw.0 {
            for c in sw.1..ne.1 {
                cells.push(self.locate(r, c).expect("rectangle inside strip").0);
            }
        }
        RectRegion { sw, ne, height, width, cells }
    }

    /// Maximal rectangles, one representative per period translate.
    pub fn maximal_rectangles(&self) -> Vec<RectRegion> {
        let n = self.n as i64;
        let ups = self.upper_corners(1 - n, 3 * n);
        let mut out = Vec::new();
        for sw in self.lower_corners() {
            for &ne in &ups {
                if ne.0 < sw.0 && ne.1 > sw.1 && self.rect_inside(sw, ne) {
                    out.push(self.make_rect(sw, ne));
                }
            }
        }
        out.sort_by_key(|r| (r.sw, r.ne));
        out
    }

    /// Every corner pair over three periods, reduced to the first period.
    /// Reference for [`maximal_rectangles`](Self::maximal_rectangles).
    pub fn maximal_rectangles_brute(&self) -> Vec<RectRegion> {
        let n = self.n as i64;
        let lows: Vec<(i64, i64)> = (1 - n..=2 * n)
            .filter(|&i| self.lambda.contains_lifted(i) && !self.lambda.contains_lifted(i + 1))
            .map(|i| self.path_point(i))
            .collect();
        let ups = self.upper_corners(1 - 2 * n, 4 * n);
        let (pk, pw) = (self.k as i64, (self.n - self.k) as i64);
        let mut out: Vec<RectRegion> = Vec::new();
        for &sw in &lows {
            for &ne in &ups {
                if ne.0 < sw.0 && ne.1 > sw.1 && self.rect_inside(sw, ne) {
                    // translate so the SW corner's path step lies in 1..=n
                    let q = (0..=3)
                        .map(|t| t - 1)
                        .find(|&q| self.lower_corners().contains(&(sw.0 - q * pk, sw.1 - q * pw)))
                        .expect("corner is a translate of a first-period corner");
                    let sw0 = (sw.0 - q * pk, sw.1 - q * pw);
                    let ne0 = (ne.0 - q * pk, ne.1 - q * pw);
                    if !out.iter().any(|r| r.sw == sw0 && r.ne == ne0) {
                        out.push(self.make_rect(sw0, ne0));
                    }
                }
            }
        }
        out.sort_by_key(|r| (r.sw, r.ne));
        out
    }
}

/// Letters of the shape in reading order.
pub fn canonical_word(shape: &StripShape) -> Vec<usize> {
    shape.word()
}

/// The pair `(colLabel, rowLabel)` naming the weight `y_col - y_row` of a cell.
pub fn cell_weight(shape: &StripShape, cell: usize) -> Result<(usize, usize)> {
    let c = shape.cells().get(cell).ok_or(Error::CellNotInShape(cell))?;
    Ok((c.col_label, c.row_label))
}

pub fn maximal_rectangles(shape: &StripShape) -> Vec<RectRegion> {
    shape.maximal_rectangles()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn shape(n: usize, m: &[usize]) -> StripShape {
        let lam = ColumnSet::new(n, m.to_vec()).unwrap();
        build_shape(m.len(), n, &lam).unwrap()
    }

    fn multiset(word: &[usize]) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &d in word {
            *m.entry(d).or_insert(0) += 1;
        }
        m
    }

    #[test]
    fn three_seven_fixture() {
        let s = shape(7, &[2, 5, 7]);
        assert_eq!(s.len(), 12);
        let expected: BTreeMap<usize, usize> = [(1, 2), (2, 2), (3, 2), (4, 1), (5, 2), (6, 1), (7, 2)].into();
        assert_eq!(multiset(&s.word()), expected);
        // westmost cell of the band labeled 7
        let west = s.cells().iter().filter(|c| c.row_label == 7).min_by_key(|c| c.c).unwrap();
        assert_eq!(west.letter, 7);
    }

    #[test]
    fn square_fixture() {
        let s = shape(4, &[1, 2]);
        assert_eq!(s.len(), 4);
        let expected: BTreeMap<usize, usize> = [(1, 1), (2, 2), (3, 1)].into();
        assert_eq!(multiset(&s.word()), expected);
        let mut rows: Vec<usize> = s.cells().iter().map(|c| c.row_label).collect();
        rows.sort();
        assert_eq!(rows, vec![1, 1, 2, 2]);
        let mut pairs: Vec<(usize, usize)> = (0..4).map(|i| cell_weight(&s, i).unwrap()).collect();
        pairs.sort();
        assert_eq!(pairs, vec![(3, 1), (3, 2), (4, 1), (4, 2)]);
        assert!(matches!(cell_weight(&s, 4), Err(Error::CellNotInShape(4))));
    }

    #[test]
    fn single_cell_chain() {
        let s = shape(2, &[1]);
        assert_eq!(s.len(), 1);
        assert_eq!(s.word(), vec![1]);
    }

    #[test]
    fn degenerate_shapes_are_rejected() {
        let lam = ColumnSet::new(3, vec![]).unwrap();
        assert!(matches!(build_shape(0, 3, &lam), Err(Error::DegenerateGrassmannian { .. })));
    }

    #[test]
    fn rectangles_of_runs_and_rows() {
        let s = shape(4, &[1, 2]);
        let rects = s.maximal_rectangles();
        assert_eq!(rects.len(), 1);
        assert_eq!((rects[0].height, rects[0].width), (2, 2));
        for i in 1..=6 {
            let s = shape(6, &[i]);
            let rects = s.maximal_rectangles();
            assert_eq!(rects.len(), 1);
            assert_eq!((rects[0].height, rects[0].width), (1, 5));
        }
    }

    #[test]
    fn reading_order_is_a_linear_extension() {
        let s = shape(4, &[1, 3]);
        let order: Vec<usize> = (0..s.len()).collect();
        assert!(s.is_linear_extension(&order));
        // the row-by-row order starting from the south band is not
        let mut by_rows: Vec<usize> = (0..s.len()).collect();
        by_rows.sort_by_key(|&i| (-s.cells()[i].r, s.cells()[i].c));
        assert!(!s.is_linear_extension(&by_rows));
    }
}
