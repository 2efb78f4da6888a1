//! Finite symmetric-group counterparts: classic pipe dreams, 321-avoidance,
//! heaps, skew shapes and smoothness of Schubert varieties at 321-avoiding
//! points.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::smooth::{reduces_to_nw_se, Status, TileGrid};
use crate::word::{self, Group};

/// One-line notation `w(1..=n)`, values in `1..=n`.
pub type Perm = Vec<usize>;

fn as_window(w: &[usize]) -> Vec<i64> {
    w.iter().map(|&x| x as i64).collect()
}

fn from_window(g: &[i64]) -> Perm {
    g.iter().map(|&x| x as usize).collect()
}

pub fn length(w: &[usize]) -> usize {
    Group::Finite(w.len()).length(&as_window(w))
}

pub fn identity(n: usize) -> Perm {
    (1..=n).collect()
}

/// Every permutation of `1..=n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    use itertools::Itertools;
    (1..=n).permutations(n).collect()
}

/// Product of the letters of `word` at the chosen positions.
pub fn word_product(n: usize, word: &[usize], chosen: &[bool]) -> Perm {
    let g = Group::Finite(n);
    from_window(&word::subword_product(g, &g.identity(), word, chosen))
}

/// A classic pipe dream: crosses among the cells `(i, j)` with `i + j <= n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ClassicPipeDream {
    pub n: usize,
    /// 1-based `(row, column)` of each cross, sorted.
    pub crosses: Vec<(usize, usize)>,
}

/// Cells above the antidiagonal in reading order: rows from the top, each
/// read east to west.
pub fn staircase_cells(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|i| (1..=n - i).rev().map(move |j| (i, j))).collect()
}

fn staircase_word(n: usize) -> Vec<usize> {
    staircase_cells(n).iter().map(|&(i, j)| i + j - 1).collect()
}

/// Exit column of each pipe entering from the west, by following tiles.
pub fn trace_classic(pd: &ClassicPipeDream) -> Perm {
    let n = pd.n;
    let cross: HashSet<(usize, usize)> = pd.crosses.iter().copied().collect();
    (1..=n)
        .map(|start| {
            let (mut r, mut c, mut east) = (start as i64, 1i64, true);
            while r >= 1 {
                let here = (r as usize, c as usize);
                if !cross.contains(&here) {
                    east = !east;
                }
                if east {
                    c += 1;
                } else {
                    r -= 1;
                }
            }
            c as usize
        })
        .collect()
}

/// Reduced classic pipe dreams for `w`: flips from the greedy seed, sorted.
pub fn square_pipe_dreams(w: &[usize]) -> Result<Vec<ClassicPipeDream>> {
    let n = w.len();
    if n > 8 {
        return Err(Error::PermTooLarge(n));
    }
    let cells = staircase_cells(n);
    let g = Group::Finite(n);
    let subs = word::enumerate_subwords(g, &g.identity(), &staircase_word(n), &as_window(&inverse(w)));
    let mut out: Vec<ClassicPipeDream> = subs
        .into_iter()
        .map(|idx| {
            let mut crosses: Vec<(usize, usize)> = idx.iter().map(|&i| cells[i]).collect();
            crosses.sort_unstable();
            ClassicPipeDream { n, crosses }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Reference: every filling of the staircase, kept when reduced and tracing to `w`.
pub fn square_pipe_dreams_brute(w: &[usize]) -> Result<Vec<ClassicPipeDream>> {
    let n = w.len();
    let cells = staircase_cells(n);
    if cells.len() > 24 {
        return Err(Error::WindowTooLarge(cells.len()));
    }
    let len = length(w);
    let mut out = Vec::new();
    for bits in 0u32..(1 << cells.len()) {
        if bits.count_ones() as usize != len {
            continue;
        }
        let mut crosses: Vec<(usize, usize)> = (0..cells.len()).filter(|&i| bits >> i & 1 == 1).map(|i| cells[i]).collect();
        crosses.sort_unstable();
        let pd = ClassicPipeDream { n, crosses };
        if trace_classic(&pd) == w {
            out.push(pd);
        }
    }
    out.sort();
    Ok(out)
}

pub fn inverse(w: &[usize]) -> Perm {
    let mut inv = vec![0; w.len()];
    for (i, &x) in w.iter().enumerate() {
        inv[x - 1] = i + 1;
    }
    inv
}

pub fn is_321_avoiding(w: &[usize]) -> bool {
    // Track the largest value seen and the largest value that already has a
    // larger one before it; a third, smaller value completes the pattern.
    let mut max = 0;
    let mut second = 0;
    for &x in w {
        if x < second {
            return false;
        }
        if x < max {
            second = second.max(x);
        }
        max = max.max(x);
    }
    true
}

/// 0/1 values with `x_j - x_i = 1` for every inversion `i < j`,
/// `w(i) > w(j)`; `None` when no such values exist.
pub fn cominuscule_weights(w: &[usize]) -> Option<Vec<u8>> {
    let n = w.len();
    let mut x: Vec<Option<u8>> = vec![None; n];
    let mut set = |p: usize, v: u8| match x[p] {
        Some(old) if old != v => false,
        _ => {
            x[p] = Some(v);
            true
        }
    };
    for i in 0..n {
        for j in i + 1..n {
            if w[i] > w[j] && !(set(i, 0) && set(j, 1)) {
                return None;
            }
        }
    }
    Some(x.into_iter().map(|v| v.unwrap_or(0)).collect())
}

/// A reduced word for `w` (right descents stripped from the largest).
pub fn reduced_word(w: &[usize]) -> Vec<usize> {
    let g = Group::Finite(w.len());
    let mut cur = as_window(w);
    let mut rev = Vec::new();
    while let Some(d) = (1..w.len()).find(|&d| g.right_descent(&cur, d)) {
        g.swap_positions(&mut cur, d);
        rev.push(d);
    }
    rev.reverse();
    rev
}

/// Every reduced word of `w`, by descent recursion.
pub fn reduced_words(w: &[usize]) -> Result<Vec<Vec<usize>>> {
    let n = w.len();
    if n > 7 {
        return Err(Error::PermTooLarge(n));
    }
    fn rec(g: Group, cur: &mut Vec<i64>, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let ds: Vec<usize> = (1..g.size()).filter(|&d| g.right_descent(cur, d)).collect();
        if ds.is_empty() {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for d in ds {
            g.swap_positions(cur, d);
            suffix.push(d);
            rec(g, cur, suffix, out);
            suffix.pop();
            g.swap_positions(cur, d);
        }
    }
    let mut out = Vec::new();
    rec(Group::Finite(n), &mut as_window(w), &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

fn braid_site(word: &[usize]) -> bool {
    word.windows(3).any(|t| t[0] == t[2] && t[0].abs_diff(t[1]) == 1)
}

/// All reduced words share one heap: the commutation class of one reduced
/// word contains no `s_i s_{i±1} s_i`.
pub fn unique_heap(w: &[usize]) -> Result<bool> {
    if w.len() > 7 {
        return Err(Error::PermTooLarge(w.len()));
    }
    let start = reduced_word(w);
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(word) = queue.pop_front() {
        if braid_site(&word) {
            return Ok(false);
        }
        for p in 0..word.len().saturating_sub(1) {
            if word[p].abs_diff(word[p + 1]) >= 2 {
                let mut next = word.clone();
                next.swap(p, p + 1);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(true)
}

/// Region between two lattice paths from `(0, 0)`, `r` growing south. Row
/// `r` holds columns `starts[r]..ends[r]`; cell `(r, c)` carries letter
/// `r + c + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewShape {
    pub n: usize,
    pub starts: Vec<usize>,
    pub ends: Vec<usize>,
    /// Outer and inner partitions, rows from the top, measured from the
    /// east edge of the bounding box.
    pub nu: Vec<usize>,
    pub rho: Vec<usize>,
}

impl SkewShape {
    pub fn contains(&self, r: usize, c: usize) -> bool {
        r < self.starts.len() && self.starts[r] <= c && c < self.ends[r]
    }

    /// Cells in reading order: columns west to east, each south to north.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let width = self.ends.iter().copied().max().unwrap_or(0);
        (0..width).flat_map(|c| (0..self.starts.len()).rev().map(move |r| (r, c))).filter(|&(r, c)| self.contains(r, c)).collect()
    }

    pub fn word(&self) -> Vec<usize> {
        self.cells().iter().map(|&(r, c)| r + c + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.starts.iter().zip(&self.ends).map(|(s, e)| e - s).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rows weakly shift east going south on both sides: the region is a
    /// skew diagram.
    pub fn is_skew(&self) -> bool {
        let rows = self.starts.len();
        (0..rows).all(|r| self.starts[r] <= self.ends[r])
            && (1..rows).all(|r| self.starts[r - 1] <= self.starts[r] && self.ends[r - 1] <= self.ends[r])
    }

    /// Inclusion-maximal rectangles `(top, left, height, width)` of the region.
    pub fn maximal_rectangles(&self) -> Vec<(usize, usize, usize, usize)> {
        let rows = self.starts.len();
        let width = self.ends.iter().copied().max().unwrap_or(0);
        let mut all = Vec::new();
        for top in 0..rows {
            for bot in top + 1..=rows {
                for left in 0..width {
                    for right in left + 1..=width {
                        if (top..bot).all(|r| (left..right).all(|c| self.contains(r, c))) {
                            all.push((top, left, bot - top, right - left));
                        }
                    }
                }
            }
        }
        let inside = |a: &(usize, usize, usize, usize), b: &(usize, usize, usize, usize)| {
            b.0 <= a.0 && b.1 <= a.1 && a.0 + a.2 <= b.0 + b.2 && a.1 + a.3 <= b.1 + b.3
        };
        all.iter().filter(|a| !all.iter().any(|b| b != *a && inside(a, b))).copied().collect()
    }
}

/// The shape whose row `r` runs from the `r`-th excedance position `i` to
/// the `r`-th excedance value `v(i)`, both sorted.
fn excedance_shape(v: &[usize]) -> SkewShape {
    let n = v.len();
    let mut pos: Vec<usize> = (1..=n).filter(|&i| v[i - 1] > i).collect();
    let mut val: Vec<usize> = pos.iter().map(|&i| v[i - 1]).collect();
    pos.sort_unstable();
    val.sort_unstable();
    let starts: Vec<usize> = pos.iter().enumerate().map(|(r, &i)| i - 1 - r).collect();
    let ends: Vec<usize> = val.iter().enumerate().map(|(r, &j)| j - 1 - r).collect();
    let width = n - pos.len();
    let nu = starts.iter().map(|&s| width.saturating_sub(s)).collect();
    let rho = ends.iter().map(|&e| width.saturating_sub(e)).collect();
    SkewShape { n, starts, ends, nu, rho }
}

/// Skew shape of a 321-avoiding permutation; its full filling reads to `v`.
pub fn skew_shape(v: &[usize]) -> Result<SkewShape> {
    if !is_321_avoiding(v) {
        return Err(Error::Not321Avoiding);
    }
    let s = excedance_shape(v);
    let word = s.word();
    if word_product(v.len(), &word, &vec![true; word.len()]) != v || word.len() != length(v) {
        return Err(Error::CalibrationFailure(format!("skew shape of {v:?} does not read back")));
    }
    Ok(s)
}

/// The excedance construction yields a skew diagram whose reduced filling
/// reads to `v`.
pub fn heap_is_skew(v: &[usize]) -> bool {
    let s = excedance_shape(v);
    let word = s.word();
    s.is_skew() && word.len() == length(v) && word_product(v.len(), &word, &vec![true; word.len()]) == v
}

/// Subwords of the skew shape's word reading to `w`, as sorted index lists.
pub fn skew_pipe_dreams(w: &[usize], v: &[usize]) -> Result<(SkewShape, Vec<Vec<usize>>)> {
    let s = skew_shape(v)?;
    let g = Group::Finite(v.len());
    let subs = word::enumerate_subwords(g, &g.identity(), &s.word(), &as_window(w));
    Ok((s, subs))
}

/// Tiles of one rectangle of a skew filling.
fn rect_grid(chosen: &BTreeSet<(usize, usize)>, rect: (usize, usize, usize, usize)) -> TileGrid {
    let (top, left, h, wd) = rect;
    TileGrid::new(h, wd, (0..h).flat_map(|a| (0..wd).map(move |b| (top + a, left + b))).map(|c| chosen.contains(&c)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchubertVerdict {
    pub status: SchubertStatus,
    pub multiplicity: usize,
    /// Crosses of the bottom pipe dream, as `(row, column)` in the skew shape.
    pub crosses: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SchubertStatus {
    Smooth,
    Singular,
    NotContained,
}

impl From<SchubertStatus> for Status {
    fn from(s: SchubertStatus) -> Self {
        match s {
            SchubertStatus::Smooth => Status::Smooth,
            SchubertStatus::Singular => Status::Singular,
            SchubertStatus::NotContained => Status::NotOnVariety,
        }
    }
}

/// Smoothness of the Schubert variety of `w` at `v` by the rectangle test on
/// the bottom pipe dream inside the skew shape of `v`. Fails with
/// [`Error::InvariantViolation`] if the test and the count disagree.
pub fn schubert_smooth_at(w: &[usize], v: &[usize]) -> Result<SchubertVerdict> {
    if w.len() != v.len() {
        return Err(Error::ShapeMismatch(w.len(), v.len()));
    }
    let (s, subs) = skew_pipe_dreams(w, v)?;
    let Some(bottom) = subs.first() else {
        return Ok(SchubertVerdict { status: SchubertStatus::NotContained, multiplicity: 0, crosses: vec![] });
    };
    let cells = s.cells();
    let chosen: BTreeSet<(usize, usize)> = bottom.iter().map(|&i| cells[i]).collect();
    let rigid = s.maximal_rectangles().into_iter().all(|rect| reduces_to_nw_se(&rect_grid(&chosen, rect)));
    if rigid != (subs.len() == 1) {
        return Err(Error::InvariantViolation(format!(
            "rectangle test says {rigid} but {} pipe dreams exist for {w:?} in {v:?}",
            subs.len()
        )));
    }
    let status = if rigid { SchubertStatus::Smooth } else { SchubertStatus::Singular };
    Ok(SchubertVerdict { status, multiplicity: subs.len(), crosses: chosen.into_iter().collect() })
}

/// Whether every flip of every pipe dream of `w` in the skew shape of `v`
/// has both cells inside one maximal rectangle.
pub fn skew_moves_in_rectangles(w: &[usize], v: &[usize]) -> Result<bool> {
    let (s, subs) = skew_pipe_dreams(w, v)?;
    let cells = s.cells();
    let word = s.word();
    let rects = s.maximal_rectangles();
    let g = Group::Finite(v.len());
    let inside = |rect: &(usize, usize, usize, usize), (r, c): (usize, usize)| {
        rect.0 <= r && r < rect.0 + rect.2 && rect.1 <= c && c < rect.1 + rect.3
    };
    for sub in subs {
        let chosen = word::mask(word.len(), &sub);
        for (x, e) in word::flips(g, &g.identity(), &word, &chosen) {
            if !rects.iter().any(|rc| inside(rc, cells[x]) && inside(rc, cells[e])) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
