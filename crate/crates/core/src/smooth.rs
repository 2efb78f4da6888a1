//! Smoothness at a fixed point: the maximal-rectangle test, the pipe dream
//! count and the comparison of extreme pipe dreams.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permcore::{contains_point, ColumnSet, Siteswap};
use crate::pipedream::{enumerate, greedy_bottom, greedy_top, traffic, Move, PipeDream};
use crate::shape::{RectRegion, StripShape};
use crate::word::{self, Group};

/// A rectangular cross/elbow grid, row 0 to the north.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TileGrid {
    h: usize,
    w: usize,
    cells: Vec<bool>,
}

impl TileGrid {
    pub fn new(h: usize, w: usize, cells: Vec<bool>) -> Self {
        assert_eq!(cells.len(), h * w, "grid size");
        Self { h, w, cells }
    }

    pub fn empty(h: usize, w: usize) -> Self {
        Self::new(h, w, vec![false; h * w])
    }

    /// Bit `a * w + b` of `bits` is the tile at `(a, b)`.
    pub fn from_bits(h: usize, w: usize, bits: u64) -> Self {
        Self::new(h, w, (0..h * w).map(|i| bits >> i & 1 == 1).collect())
    }

    /// Rows of `+` and `.` (or `·`).
    pub fn parse(rows: &[&str]) -> Self {
        let h = rows.len();
        let grid: Vec<Vec<bool>> = rows.iter().map(|r| r.chars().filter(|c| !c.is_whitespace()).map(|c| c == '+').collect()).collect();
        let w = grid.first().map_or(0, Vec::len);
        assert!(grid.iter().all(|r| r.len() == w), "ragged grid");
        Self::new(h, w, grid.concat())
    }

    pub fn of_rect(pd: &PipeDream, rect: &RectRegion) -> Self {
        Self::new(rect.height, rect.width, rect.cells.iter().map(|&i| pd.is_cross(i)).collect())
    }

    pub fn height(&self) -> usize {
        self.h
    }

    pub fn width(&self) -> usize {
        self.w
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        self.cells[a * self.w + b]
    }

    fn crosses(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.h).flat_map(move |a| (0..self.w).map(move |b| (a, b))).filter(|&(a, b)| self.get(a, b))
    }

    fn nw_closed(&self, a: usize, b: usize) -> bool {
        (0..=a).all(|i| (0..=b).all(|j| self.get(i, j)))
    }

    fn se_closed(&self, a: usize, b: usize) -> bool {
        (a..self.h).all(|i| (b..self.w).all(|j| self.get(i, j)))
    }

    /// Drop the given rows and columns.
    fn minor(&self, rows: &[bool], cols: &[bool]) -> Self {
        let keep_r: Vec<usize> = (0..self.h).filter(|&a| !rows[a]).collect();
        let keep_c: Vec<usize> = (0..self.w).filter(|&b| !cols[b]).collect();
        let cells = keep_r.iter().flat_map(|&a| keep_c.iter().map(move |&b| (a, b))).map(|(a, b)| self.get(a, b)).collect();
        Self::new(keep_r.len(), keep_c.len(), cells)
    }

    fn full_lines(&self) -> (Vec<bool>, Vec<bool>) {
        let rows = (0..self.h).map(|a| (0..self.w).all(|b| self.get(a, b))).collect();
        let cols = (0..self.w).map(|b| (0..self.h).all(|a| self.get(a, b))).collect();
        (rows, cols)
    }

    /// The grid with every full row and full column of the original removed.
    pub fn without_full_lines(&self) -> Self {
        let (rows, cols) = self.full_lines();
        self.minor(&rows, &cols)
    }

    /// Keep removing full rows and columns until none remain.
    pub fn without_full_lines_repeatedly(&self) -> Self {
        let mut g = self.clone();
        loop {
            let (rows, cols) = g.full_lines();
            if g.h == 0 || g.w == 0 || !rows.iter().chain(&cols).any(|&x| x) {
                return g;
            }
            g = g.minor(&rows, &cols);
        }
    }

    /// Word of the grid as a finite shape: letter `a + b + 1` in `S_{h+w}`,
    /// columns west to east, each read south to north.
    pub fn finite_word(&self) -> (Vec<usize>, Vec<bool>) {
        let mut word = Vec::with_capacity(self.h * self.w);
        let mut chosen = Vec::with_capacity(self.h * self.w);
        for b in 0..self.w {
            for a in (0..self.h).rev() {
                word.push(a + b + 1);
                chosen.push(self.get(a, b));
            }
        }
        (word, chosen)
    }
}

impl fmt::Display for TileGrid {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in 0..self.h {
            let row: String = (0..self.w).map(|b| if self.get(a, b) { '+' } else { '·' }).collect();
            writeln!(fm, "{row}")?;
        }
        Ok(())
    }
}

pub fn is_nw_partition(grid: &TileGrid) -> bool {
    grid.crosses().all(|(a, b)| grid.nw_closed(a, b))
}

pub fn is_se_partition(grid: &TileGrid) -> bool {
    grid.crosses().all(|(a, b)| grid.se_closed(a, b))
}

/// Every cross sits in a NW-closed or SE-closed staircase.
fn splits_into_corners(grid: &TileGrid) -> bool {
    grid.crosses().all(|(a, b)| grid.nw_closed(a, b) || grid.se_closed(a, b))
}

/// After removing the full rows and columns (one pass), what is left is a NW
/// partition together with a SE partition.
pub fn reduces_to_nw_se(grid: &TileGrid) -> bool {
    splits_into_corners(&grid.without_full_lines())
}

/// The same test with full rows and columns removed until none remain.
pub fn reduces_to_nw_se_iterated(grid: &TileGrid) -> bool {
    splits_into_corners(&grid.without_full_lines_repeatedly())
}

/// No cross has an elbow somewhere north of it in its column and another
/// somewhere east in its row, and none has elbows both south and west.
pub fn rect_rigid_le(grid: &TileGrid) -> bool {
    grid.crosses().all(|(a, b)| {
        let north = (0..a).any(|i| !grid.get(i, b));
        let east = (b + 1..grid.w).any(|j| !grid.get(a, j));
        let south = (a + 1..grid.h).any(|i| !grid.get(i, b));
        let west = (0..b).any(|j| !grid.get(a, j));
        !(north && east) && !(south && west)
    })
}

/// The grid read as its own finite pipe dream is reduced and admits no
/// cross-elbow move.
pub fn standalone_move_free(grid: &TileGrid) -> bool {
    let (word, chosen) = grid.finite_word();
    let g = Group::Finite(grid.h + grid.w);
    let base = g.identity();
    word::is_reduced_subword(g, &base, &word, &chosen) && word::flips(g, &base, &word, &chosen).is_empty()
}

/// A cross and an elbow carrying the same two pipes. The elbow sits
/// `offset` periods from the fundamental copy of `elbow`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BoxPair {
    pub cross: usize,
    pub elbow: usize,
    pub offset: i64,
    /// Rows and columns spanned by the two cells.
    pub height: usize,
    pub width: usize,
    /// True when the elbow lies north-east of (or level with) the cross.
    pub elbow_northeast: bool,
}

impl BoxPair {
    pub fn as_move(&self) -> Move {
        Move { from: self.cross, to: self.elbow, offset: self.offset }
    }
}

/// Every cross/elbow pair through which the same two pipes pass.
pub fn box_scan(pd: &PipeDream) -> Vec<BoxPair> {
    let shape = pd.shape();
    let tr = traffic(pd);
    let mut out = BTreeSet::new();
    for x in pd.key() {
        let cell = &shape.cells()[x];
        let mut pair = tr.through[&(cell.r, cell.c)].clone();
        pair.sort_unstable();
        for &(r, c) in &tr.traces[&pair[0]].cells {
            let Some((e, q)) = shape.locate(r, c) else { continue };
            if pd.is_cross(e) {
                continue;
            }
            let mut other = tr.through[&(r, c)].clone();
            other.sort_unstable();
            if other == pair {
                out.insert(BoxPair {
                    cross: x,
                    elbow: e,
                    offset: q,
                    height: (r - cell.r).unsigned_abs() as usize + 1,
                    width: (c - cell.c).unsigned_abs() as usize + 1,
                    elbow_northeast: r <= cell.r && c >= cell.c,
                });
            }
        }
    }
    out.into_iter().collect()
}

/// Whether a lifted cell lies in some translate of `rect` by `t` periods.
fn rect_holds(shape: &StripShape, rect: &RectRegion, cell: (i64, i64), t: i64) -> bool {
    let (dr, dc) = (t * shape.k() as i64, t * (shape.n() - shape.k()) as i64);
    (rect.ne.0 + dr..rect.sw.0 + dr).contains(&cell.0) && (rect.sw.1 + dc..rect.ne.1 + dc).contains(&cell.1)
}

/// A maximal rectangle holding both cells of the move, if any.
pub fn rectangle_of_move(pd: &PipeDream, m: &Move) -> Option<RectRegion> {
    let shape = pd.shape();
    let x = shape.translate(m.from, 0);
    let e = shape.translate(m.to, m.offset);
    shape
        .maximal_rectangles()
        .into_iter()
        .find(|rect| (-3..=3).any(|t| rect_holds(shape, rect, x, t) && rect_holds(shape, rect, e, t)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Status {
    Smooth,
    Singular,
    NotOnVariety,
}

impl fmt::Display for Status {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Smooth => "Smooth",
            Status::Singular => "Singular",
            Status::NotOnVariety => "NotOnVariety",
        };
        fm.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Rect,
    Count,
    TopBottom,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    /// Crosses of the unique pipe dream.
    PipeDream { crosses: Vec<usize> },
    /// A maximal rectangle that does not reduce, with its tiles.
    Rectangle { sw: (i64, i64), ne: (i64, i64), tiles: Vec<String> },
    /// Two distinct pipe dreams.
    Pair { bottom: Vec<usize>, top: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessVerdict {
    pub status: Status,
    pub multiplicity: Option<usize>,
    pub witness: Option<Witness>,
}

impl SmoothnessVerdict {
    fn off() -> Self {
        Self { status: Status::NotOnVariety, multiplicity: Some(0), witness: None }
    }
}

/// The first maximal rectangle of the shape on which `pd` fails to reduce.
pub fn failing_rectangle(pd: &PipeDream) -> Option<(RectRegion, TileGrid)> {
    pd.shape().maximal_rectangles().into_iter().find_map(|rect| {
        let grid = TileGrid::of_rect(pd, &rect);
        (!reduces_to_nw_se(&grid)).then_some((rect, grid))
    })
}

fn by_rectangles(f: &Siteswap, lambda: &ColumnSet) -> Result<SmoothnessVerdict> {
    let pd = greedy_bottom(f, lambda)?;
    Ok(match failing_rectangle(&pd) {
        None => SmoothnessVerdict { status: Status::Smooth, multiplicity: None, witness: Some(Witness::PipeDream { crosses: pd.key() }) },
        Some((rect, grid)) => SmoothnessVerdict {
            status: Status::Singular,
            multiplicity: None,
            witness: Some(Witness::Rectangle { sw: rect.sw, ne: rect.ne, tiles: grid.to_string().lines().map(String::from).collect() }),
        },
    })
}

fn by_count(f: &Siteswap, lambda: &ColumnSet) -> Result<SmoothnessVerdict> {
    let all = enumerate(f, lambda)?;
    let m = all.len();
    let status = if m == 1 { Status::Smooth } else { Status::Singular };
    let witness = if m == 1 {
        Witness::PipeDream { crosses: all[0].key() }
    } else {
        Witness::Pair { bottom: all[0].key(), top: all[m - 1].key() }
    };
    Ok(SmoothnessVerdict { status, multiplicity: Some(m), witness: Some(witness) })
}

fn by_extremes(f: &Siteswap, lambda: &ColumnSet) -> Result<SmoothnessVerdict> {
    let bottom = greedy_bottom(f, lambda)?;
    let top = greedy_top(f, lambda)?;
    Ok(if bottom == top {
        SmoothnessVerdict { status: Status::Smooth, multiplicity: None, witness: Some(Witness::PipeDream { crosses: bottom.key() }) }
    } else {
        SmoothnessVerdict { status: Status::Singular, multiplicity: None, witness: Some(Witness::Pair { bottom: bottom.key(), top: top.key() }) }
    })
}

/// Verdict by the chosen method. `Method::All` runs the other three and
/// fails with [`Error::InvariantViolation`] if they disagree.
pub fn smooth_with(f: &Siteswap, lambda: &ColumnSet, method: Method) -> Result<SmoothnessVerdict> {
    if f.n() != lambda.n() {
        return Err(Error::ShapeMismatch(f.n(), lambda.n()));
    }
    if !contains_point(f, lambda)? {
        return Ok(SmoothnessVerdict::off());
    }
    match method {
        Method::Rect => by_rectangles(f, lambda),
        Method::Count => by_count(f, lambda),
        Method::TopBottom => by_extremes(f, lambda),
        Method::All => {
            let rect = by_rectangles(f, lambda)?;
            let count = by_count(f, lambda)?;
            let ends = by_extremes(f, lambda)?;
            if rect.status != count.status || count.status != ends.status {
                return Err(Error::InvariantViolation(format!(
                    "methods disagree on ({f}, {lambda}): rect {}, count {}, topbottom {}",
                    rect.status, count.status, ends.status
                )));
            }
            Ok(SmoothnessVerdict { multiplicity: count.multiplicity, ..rect })
        }
    }
}

/// Verdict by the maximal-rectangle test on the bottom pipe dream.
pub fn smooth_at(f: &Siteswap, lambda: &ColumnSet) -> Result<SmoothnessVerdict> {
    smooth_with(f, lambda, Method::Rect)
}

/// Number of pipe dreams; zero off the variety.
pub fn multiplicity(f: &Siteswap, lambda: &ColumnSet) -> Result<usize> {
    if !contains_point(f, lambda)? {
        return Ok(0);
    }
    Ok(enumerate(f, lambda)?.len())
}

/// Smooth at every fixed point on the variety, with the singular ones listed.
pub fn smooth_everywhere(f: &Siteswap) -> Result<(bool, Vec<ColumnSet>)> {
    let sets = ColumnSet::all(f.n(), f.k());
    let verdicts: Vec<(ColumnSet, Status)> = sets
        .into_par_iter()
        .map(|lam| smooth_at(f, &lam).map(|v| (lam, v.status)))
        .collect::<Result<_>>()?;
    let singular: Vec<ColumnSet> = verdicts.into_iter().filter(|(_, s)| *s == Status::Singular).map(|(l, _)| l).collect();
    Ok((singular.is_empty(), singular))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_siteswap;
    use crate::pipedream::moves;

    fn cs(n: usize, m: &[usize]) -> ColumnSet {
        ColumnSet::new(n, m.to_vec()).unwrap()
    }

    #[test]
    fn partition_examples() {
        let empty = TileGrid::empty(3, 3);
        assert!(is_nw_partition(&empty) && is_se_partition(&empty));
        let full = TileGrid::new(3, 3, vec![true; 9]);
        assert!(is_nw_partition(&full) && is_se_partition(&full));
        let bad = TileGrid::parse(&["···", "···", "··+"]);
        assert!(!is_nw_partition(&bad));
        assert!(is_se_partition(&bad));
        let stair = TileGrid::parse(&["++·", "+··", "···"]);
        assert!(is_nw_partition(&stair) && !is_se_partition(&stair));
    }

    #[test]
    fn reduction_examples() {
        let corners = TileGrid::parse(&["++·+·", "+··+·", "+++++", "···++", "···++"]);
        assert!(reduces_to_nw_se(&corners));
        assert!(rect_rigid_le(&corners));
        let lone = TileGrid::parse(&["···", "·+·", "···"]);
        assert!(!reduces_to_nw_se(&lone));
        assert!(!rect_rigid_le(&lone));
        assert!(!standalone_move_free(&lone));
        let full = TileGrid::new(2, 3, vec![true; 6]);
        assert!(rect_rigid_le(&full) && reduces_to_nw_se(&full) && standalone_move_free(&full));
    }

    #[test]
    fn square_box_scan() {
        let lam = cs(4, &[1, 2]);
        for pd in enumerate(&parse_siteswap("2312").unwrap(), &lam).unwrap() {
            let found = box_scan(&pd);
            assert_eq!(found.len(), 1);
            let m = moves(&pd);
            assert_eq!(found[0].as_move(), m[0]);
            assert_eq!(pd.shape().cells()[found[0].elbow].letter, 2);
        }
    }

    #[test]
    fn verdict_fixtures() {
        let f = parse_siteswap("342333").unwrap();
        let lam = cs(6, &[1, 2, 5]);
        let v = smooth_with(&f, &lam, Method::All).unwrap();
        assert_eq!(v.status, Status::Singular);
        assert!(v.multiplicity.unwrap() >= 2);
        let sq = smooth_with(&parse_siteswap("2312").unwrap(), &cs(4, &[1, 2]), Method::All).unwrap();
        assert_eq!((sq.status, sq.multiplicity), (Status::Singular, Some(2)));
        let gr = smooth_with(&parse_siteswap("2222").unwrap(), &cs(4, &[1, 3]), Method::All).unwrap();
        assert_eq!((gr.status, gr.multiplicity), (Status::Smooth, Some(1)));
        let away = ColumnSet::all(6, 3).into_iter().find(|l| !contains_point(&f, l).unwrap()).unwrap();
        assert_eq!(smooth_at(&f, &away).unwrap().status, Status::NotOnVariety);
        assert_eq!(multiplicity(&f, &away).unwrap(), 0);
        let (ok, bad) = smooth_everywhere(&f).unwrap();
        assert!(!ok);
        assert!(bad.contains(&lam));
        assert_eq!(smooth_everywhere(&Siteswap::uniform(2, 5)).unwrap(), (true, vec![]));
    }
}
