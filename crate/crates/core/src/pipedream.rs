//! Cross/elbow fillings of a strip shape, read out by tracing pipes.
//!
//! A pipe enters heading east through each vertical segment of the lower
//! boundary and heading north through each horizontal one. At a cross it
//! goes straight; at an elbow a pipe from the south turns east and a pipe
//! from the west turns north. The pipe entering at label `i` leaves at the
//! upper copy of label `g(i)`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permcore::{
    contains_point, contract_siteswap, delete_siteswap, reindex_contract, reindex_delete, BoundedAffinePermutation,
    ColumnSet, PositroidPair, Siteswap,
};
use crate::shape::{strip, StripShape};
use crate::word::{self, Group};

#[derive(Clone, Debug)]
pub struct PipeDream {
    shape: Arc<StripShape>,
    crosses: Vec<bool>,
}

impl PartialEq for PipeDream {
    fn eq(&self, other: &Self) -> bool {
        self.shape.lambda() == other.shape.lambda() && self.crosses == other.crosses
    }
}

impl Eq for PipeDream {}

impl PartialOrd for PipeDream {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PipeDream {
    /// Lexicographic on the sorted reading indices of the crosses.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.shape.lambda(), self.key()).cmp(&(other.shape.lambda(), other.key()))
    }
}

impl std::hash::Hash for PipeDream {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.shape.lambda().hash(state);
        self.crosses.hash(state);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Heading {
    East,
    North,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipeTrace {
    pub entry: i64,
    pub exit: i64,
    /// Lifted cells visited, in order.
    pub cells: Vec<(i64, i64)>,
}

/// A cross at fundamental cell `from` traded for the elbow at `to`, where the
/// elbow is met `offset` periods away from the cross.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Move {
    pub from: usize,
    pub to: usize,
    pub offset: i64,
}

impl PipeDream {
    pub fn new(shape: Arc<StripShape>, crosses: Vec<bool>) -> Result<Self> {
        if crosses.len() != shape.len() {
            return Err(Error::PreconditionViolated(format!(
                "{} tiles for a shape of {} cells",
                crosses.len(),
                shape.len()
            )));
        }
        Ok(Self { shape, crosses })
    }

    pub fn from_indices(shape: Arc<StripShape>, idx: &[usize]) -> Result<Self> {
        if let Some(&bad) = idx.iter().find(|&&i| i >= shape.len()) {
            return Err(Error::CellNotInShape(bad));
        }
        let crosses = word::mask(shape.len(), idx);
        Ok(Self { shape, crosses })
    }

    pub fn all_elbows(shape: Arc<StripShape>) -> Self {
        let len = shape.len();
        Self { shape, crosses: vec![false; len] }
    }

    pub fn all_crosses(shape: Arc<StripShape>) -> Self {
        let len = shape.len();
        Self { shape, crosses: vec![true; len] }
    }

    pub fn shape(&self) -> &StripShape {
        &self.shape
    }

    pub fn shape_arc(&self) -> Arc<StripShape> {
        self.shape.clone()
    }

    pub fn crosses(&self) -> &[bool] {
        &self.crosses
    }

    pub fn is_cross(&self, idx: usize) -> bool {
        self.crosses[idx]
    }

    /// Sorted reading indices of the crosses.
    pub fn key(&self) -> Vec<usize> {
        word::indices(&self.crosses)
    }

    pub fn num_crosses(&self) -> usize {
        self.crosses.iter().filter(|&&c| c).count()
    }

    /// Tile at a lifted cell; `None` outside the strip.
    pub fn cross_at(&self, r: i64, c: i64) -> Option<bool> {
        self.shape.locate(r, c).map(|(idx, _)| self.crosses[idx])
    }

    pub fn with_toggled(&self, idx: &[usize]) -> Self {
        let mut crosses = self.crosses.clone();
        for &i in idx {
            crosses[i] = !crosses[i];
        }
        Self { shape: self.shape.clone(), crosses }
    }

    pub fn apply_move(&self, m: &Move) -> Self {
        self.with_toggled(&[m.from, m.to])
    }
}

/// Follow the pipe entering at lifted label `entry`.
pub fn trace(pd: &PipeDream, entry: i64) -> PipeTrace {
    let shape = pd.shape();
    if shape.is_empty() {
        return PipeTrace { entry, exit: entry + shape.k() as i64, cells: Vec::new() };
    }
    let (r0, c0) = shape.path_point(entry - 1);
    let (mut r, mut c, mut heading) = if shape.lambda().contains_lifted(entry) {
        (r0, c0, Heading::East)
    } else {
        (r0 - 1, c0, Heading::North)
    };
    let mut cells = Vec::new();
    while let Some(cross) = pd.cross_at(r, c) {
        cells.push((r, c));
        if !cross {
            heading = match heading {
                Heading::East => Heading::North,
                Heading::North => Heading::East,
            };
        }
        match heading {
            Heading::East => c += 1,
            Heading::North => r -= 1,
        }
    }
    let exit = match heading {
        Heading::North => shape.column_floor(c).1,
        Heading::East => shape.row_start(r).1 + shape.n() as i64,
    };
    PipeTrace { entry, exit, cells }
}

/// Window read off by tracing pipes `1..=n`.
pub fn readout(pd: &PipeDream) -> Result<BoundedAffinePermutation> {
    let n = pd.shape().n() as i64;
    let window = (1..=n).map(|i| trace(pd, i).exit).collect();
    BoundedAffinePermutation::new(window)
}

/// Window obtained by applying the letters of the crosses to `i + k`.
pub fn word_readout(pd: &PipeDream) -> Vec<i64> {
    let shape = pd.shape();
    word::subword_product(Group::Affine(shape.n()), &shape.base(), &shape.word(), pd.crosses())
}

/// Checks the two calibrations on a shape: all elbows give `k^n` and all
/// crosses give the point permutation, both by tracing and by letters.
pub fn calibrate(shape: &Arc<StripShape>) -> Result<()> {
    let elbows = PipeDream::all_elbows(shape.clone());
    let crosses = PipeDream::all_crosses(shape.clone());
    let base = shape.base();
    let point = crate::permcore::point_permutation(shape.lambda());
    let checks = [
        (readout(&elbows)?.window().to_vec(), base.clone(), "traced all-elbow"),
        (word_readout(&elbows), base, "lettered all-elbow"),
        (readout(&crosses)?.window().to_vec(), point.window().to_vec(), "traced all-cross"),
        (word_readout(&crosses), point.window().to_vec(), "lettered all-cross"),
    ];
    for (got, want, what) in checks {
        if got != want {
            return Err(Error::CalibrationFailure(format!("{what}: {got:?} != {want:?}")));
        }
    }
    Ok(())
}

pub(crate) struct Traffic {
    pub(crate) traces: HashMap<i64, PipeTrace>,
    pub(crate) through: HashMap<(i64, i64), Vec<i64>>,
}

/// Traces of every pipe entering within one period on either side of `1..=n`
/// (and one more for safety), indexed by the cells they pass.
pub(crate) fn traffic(pd: &PipeDream) -> Traffic {
    let n = pd.shape().n() as i64;
    let mut traces = HashMap::new();
    let mut through: HashMap<(i64, i64), Vec<i64>> = HashMap::new();
    for e in (1 - 2 * n)..=(3 * n) {
        let t = trace(pd, e);
        for &cell in &t.cells {
            through.entry(cell).or_default().push(e);
        }
        traces.insert(e, t);
    }
    Traffic { traces, through }
}

/// No two pipes cross twice, checked by tracing.
pub fn is_reduced(pd: &PipeDream) -> bool {
    let n = pd.shape().n() as i64;
    let tr = traffic(pd);
    for i in 1..=n {
        let mut met: HashMap<i64, usize> = HashMap::new();
        for &(r, c) in &tr.traces[&i].cells {
            if pd.cross_at(r, c) != Some(true) {
                continue;
            }
            let others = &tr.through[&(r, c)];
            debug_assert_eq!(others.len(), 2, "two pipes through a cross");
            for &o in others {
                if o != i {
                    let e = met.entry(o).or_insert(0);
                    *e += 1;
                    if *e >= 2 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Cross-elbow trades that keep the readout: candidates are the elbows on
/// the two pipes through each cross, then each swap is verified.
pub fn moves(pd: &PipeDream) -> Vec<Move> {
    let shape = pd.shape();
    let group = Group::Affine(shape.n());
    let base = shape.base();
    let word = shape.word();
    let target = word::subword_product(group, &base, &word, pd.crosses());
    let tr = traffic(pd);
    let mut out: BTreeSet<Move> = BTreeSet::new();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    for x in pd.key() {
        let here = (shape.cells()[x].r, shape.cells()[x].c);
        for &p in &tr.through[&here] {
            for &(r, c) in &tr.traces[&p].cells {
                let (e, q) = shape.locate(r, c).expect("traced cell in strip");
                if pd.is_cross(e) || !seen.insert((x, e)) {
                    continue;
                }
                let mut trial = pd.crosses().to_vec();
                trial[x] = false;
                trial[e] = true;
                if word::subword_product(group, &base, &word, &trial) == target {
                    out.insert(Move { from: x, to: e, offset: q });
                }
            }
        }
    }
    out.into_iter().collect()
}

fn checked_shape(f: &Siteswap, lambda: &ColumnSet) -> Result<Arc<StripShape>> {
    if !contains_point(f, lambda)? {
        return Err(Error::PointNotOnVariety);
    }
    Ok(Arc::new(strip(lambda.k(), lambda.n(), lambda)?))
}

/// The filling using the earliest letters of the reading word.
pub fn greedy_bottom(f: &Siteswap, lambda: &ColumnSet) -> Result<PipeDream> {
    let shape = checked_shape(f, lambda)?;
    let chosen = word::greedy_first(Group::Affine(shape.n()), &shape.base(), &shape.word(), f.window().window())
        .ok_or(Error::PointNotOnVariety)?;
    PipeDream::new(shape, chosen)
}

/// The filling using the latest letters of the reading word.
pub fn greedy_top(f: &Siteswap, lambda: &ColumnSet) -> Result<PipeDream> {
    let shape = checked_shape(f, lambda)?;
    let chosen = word::greedy_last(Group::Affine(shape.n()), &shape.base(), &shape.word(), f.window().window())
        .ok_or(Error::PointNotOnVariety)?;
    PipeDream::new(shape, chosen)
}

/// Every reduced pipe dream for `(f, λ)`, sorted by cross key. Breadth-first
/// closure under [`moves`] from the greedy seed.
pub fn enumerate(f: &Siteswap, lambda: &ColumnSet) -> Result<Vec<PipeDream>> {
    let seed = greedy_bottom(f, lambda)?;
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let mut out = Vec::new();
    seen.insert(seed.key());
    queue.push_back(seed);
    while let Some(pd) = queue.pop_front() {
        for m in moves(&pd) {
            let next = pd.apply_move(&m);
            if seen.insert(next.key()) {
                queue.push_back(next);
            }
        }
        out.push(pd);
    }
    out.sort();
    Ok(out)
}

/// Reference enumeration over all `2^{k(n-k)}` fillings.
pub fn brute_enumerate(f: &Siteswap, lambda: &ColumnSet) -> Result<Vec<PipeDream>> {
    let shape = checked_shape(f, lambda)?;
    let m = shape.len();
    if m > 24 {
        return Err(Error::WindowTooLarge(m));
    }
    let g = f.window();
    let len = Group::Affine(shape.n()).length(g.window());
    let mut out = Vec::new();
    for bits in 0u32..(1u32 << m) {
        if bits.count_ones() as usize != len {
            continue;
        }
        let crosses: Vec<bool> = (0..m).map(|i| bits >> i & 1 == 1).collect();
        let pd = PipeDream::new(shape.clone(), crosses)?;
        if readout(&pd).ok().as_ref() == Some(&g) && is_reduced(&pd) {
            out.push(pd);
        }
    }
    out.sort();
    Ok(out)
}

/// Lexicographically least cross key over [`enumerate`].
pub fn bottom_pd(f: &Siteswap, lambda: &ColumnSet) -> Result<PipeDream> {
    enumerate(f, lambda)?.into_iter().next().ok_or(Error::PointNotOnVariety)
}

/// Lexicographically greatest cross key over [`enumerate`].
pub fn top_pd(f: &Siteswap, lambda: &ColumnSet) -> Result<PipeDream> {
    enumerate(f, lambda)?.into_iter().next_back().ok_or(Error::PointNotOnVariety)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Op {
    Delete(usize),
    Contract(usize),
}

impl std::fmt::Display for Op {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Op::Delete(i) => write!(fm, "delete {i}"),
            Op::Contract(i) => write!(fm, "contract {i}"),
        }
    }
}

/// Outcome of deleting or contracting a column on the pipe dream side.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub op: Op,
    /// The chosen pipe dream with the band filled by crosses, on the original shape.
    pub filled: PipeDream,
    /// Siteswap of the filled pipe dream before reindexing.
    pub unreindexed: Siteswap,
    pub pair: PositroidPair,
    pub child: PipeDream,
}

fn reduce(f: &Siteswap, lambda: &ColumnSet, op: Op) -> Result<Option<Reduction>> {
    let (i, contract) = match op {
        Op::Delete(i) => (i, false),
        Op::Contract(i) => (i, true),
    };
    if i == 0 || i > lambda.n() || lambda.contains(i) != contract {
        return Err(Error::PreconditionViolated(format!(
            "{op} is not allowed at {lambda}: contract members, delete the rest"
        )));
    }
    if !contains_point(f, lambda)? {
        return Err(Error::PointNotOnVariety);
    }
    let sweep = if contract { contract_siteswap(f, i) } else { delete_siteswap(f, i) };
    let Some(f1) = sweep else { return Ok(None) };
    let pds = enumerate(f, lambda)?;
    let shape = pds[0].shape_arc();
    let band = if contract { shape.row_band(i) } else { shape.column_band(i) };
    let in_band = |pd: &PipeDream| band.iter().filter(|&&b| pd.is_cross(b)).count();
    let best = pds.iter().map(in_band).max().unwrap_or(0);
    let chosen = pds.iter().find(|pd| in_band(pd) == best).expect("nonempty enumeration");
    let mut crosses = chosen.crosses().to_vec();
    for &b in &band {
        crosses[b] = true;
    }
    let filled = PipeDream::new(shape.clone(), crosses)?;
    let read = readout(&filled)?;
    if read != f1.window() {
        return Err(Error::InvariantViolation(format!(
            "{op} on {f} at {lambda}: filled pipe dream reads {read}, sweep gives {}",
            f1.window()
        )));
    }
    let f2 = if contract { reindex_contract(&f1, i)? } else { reindex_delete(&f1, i)? };
    let lambda2 = lambda.remove_column(i);
    let child_shape = Arc::new(strip(lambda2.k(), lambda2.n(), &lambda2)?);
    let shift = |x: usize| if x > i { x - 1 } else { x };
    let mut idx = Vec::new();
    for cell in shape.cells() {
        if filled.is_cross(cell.reading_index) && !band.contains(&cell.reading_index) {
            let j = child_shape
                .cell_by_labels(shift(cell.row_label), shift(cell.col_label))
                .ok_or_else(|| Error::InvariantViolation("cell lost in reindexing".into()))?;
            idx.push(j);
        }
    }
    let child = PipeDream::from_indices(child_shape, &idx)?;
    if readout(&child)? != f2.window() {
        return Err(Error::InvariantViolation(format!("{op} on {f} at {lambda}: child pipe dream does not read {f2}")));
    }
    Ok(Some(Reduction { op, filled, unreindexed: f1, pair: PositroidPair::new(f2, lambda2)?, child }))
}

/// Delete column `i ∉ λ`. `None` when the deletion is empty.
pub fn delete_pd(f: &Siteswap, lambda: &ColumnSet, i: usize) -> Result<Option<Reduction>> {
    reduce(f, lambda, Op::Delete(i))
}

/// Contract column `i ∈ λ`. `None` when the contraction is empty.
pub fn contract_pd(f: &Siteswap, lambda: &ColumnSet, i: usize) -> Result<Option<Reduction>> {
    reduce(f, lambda, Op::Contract(i))
}

/// JSON form `{k, n, lambda, siteswap, crosses}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipeDreamJson {
    pub k: usize,
    pub n: usize,
    pub lambda: Vec<usize>,
    pub siteswap: String,
    pub crosses: Vec<usize>,
}

pub fn to_json(pd: &PipeDream) -> Result<PipeDreamJson> {
    let shape = pd.shape();
    let f = crate::permcore::siteswap_of(&readout(pd)?);
    Ok(PipeDreamJson {
        k: shape.k(),
        n: shape.n(),
        lambda: shape.lambda().members().to_vec(),
        siteswap: f.to_string(),
        crosses: pd.key(),
    })
}

pub fn from_json(j: &PipeDreamJson) -> Result<PipeDream> {
    let lambda = ColumnSet::new(j.n, j.lambda.clone())?;
    if lambda.k() != j.k {
        return Err(Error::KMismatch { f_k: j.k, lambda_k: lambda.k() });
    }
    let shape = Arc::new(strip(j.k, j.n, &lambda)?);
    let pd = PipeDream::from_indices(shape, &j.crosses)?;
    let f = crate::io::parse_siteswap(&j.siteswap)?;
    if readout(&pd)? != f.window() {
        return Err(Error::PreconditionViolated(format!("crosses do not read out to {}", j.siteswap)));
    }
    Ok(pd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::{point_siteswap, siteswap_of};
    use crate::shape::build_shape;

    fn ss(s: &str) -> Siteswap {
        crate::io::parse_siteswap(s).unwrap()
    }

    fn cs(n: usize, m: &[usize]) -> ColumnSet {
        ColumnSet::new(n, m.to_vec()).unwrap()
    }

    fn shape(n: usize, m: &[usize]) -> Arc<StripShape> {
        Arc::new(build_shape(m.len(), n, &cs(n, m)).unwrap())
    }

    #[test]
    fn calibrations_hold_on_small_shapes() {
        for n in 2..=7 {
            for k in 1..n {
                for lam in ColumnSet::all(n, k) {
                    calibrate(&Arc::new(build_shape(k, n, &lam).unwrap())).unwrap();
                }
            }
        }
    }

    #[test]
    fn point_fixture_by_tracing() {
        let s = shape(7, &[2, 5, 7]);
        let g = readout(&PipeDream::all_crosses(s)).unwrap();
        assert_eq!(siteswap_of(&g).values(), &[0, 7, 0, 0, 7, 0, 7]);
    }

    #[test]
    fn single_cross_on_the_square() {
        let s = shape(4, &[1, 2]);
        let twos: Vec<usize> = s.cells().iter().filter(|c| c.letter == 2).map(|c| c.reading_index).collect();
        assert_eq!(twos.len(), 2);
        for &t in &twos {
            let pd = PipeDream::from_indices(s.clone(), &[t]).unwrap();
            assert_eq!(siteswap_of(&readout(&pd).unwrap()), ss("2312"));
            assert_eq!(word_readout(&pd), vec![3, 5, 4, 6]);
            assert!(is_reduced(&pd));
            let ms = moves(&pd);
            assert_eq!(ms.len(), 1);
            assert_eq!(ms[0].to, twos.iter().copied().find(|&o| o != t).unwrap());
        }
        let both = PipeDream::from_indices(s.clone(), &twos).unwrap();
        assert!(!is_reduced(&both));
        assert_eq!(readout(&both).unwrap().window(), &[3, 4, 5, 6]);
        assert!(moves(&PipeDream::all_elbows(s)).is_empty());
    }

    #[test]
    fn enumeration_fixtures() {
        let lam = cs(4, &[1, 2]);
        let e = enumerate(&ss("2312"), &lam).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e, brute_enumerate(&ss("2312"), &lam).unwrap());
        assert!(e.iter().all(|pd| pd.num_crosses() == 1));
        assert_ne!(bottom_pd(&ss("2312"), &lam).unwrap(), top_pd(&ss("2312"), &lam).unwrap());
        let gr = enumerate(&ss("2222"), &lam).unwrap();
        assert_eq!(gr.len(), 1);
        assert_eq!(gr[0].num_crosses(), 0);
        let p = point_siteswap(&cs(5, &[2, 4]));
        let e = enumerate(&p, &cs(5, &[2, 4])).unwrap();
        assert_eq!(e.len(), 1);
        assert!(e[0].crosses().iter().all(|&c| c));
        assert!(matches!(enumerate(&p, &cs(5, &[1, 4])), Err(Error::PointNotOnVariety)));
    }

    #[test]
    fn worked_pair_is_multiple() {
        let lam = cs(6, &[1, 2, 5]);
        let e = brute_enumerate(&ss("342333"), &lam).unwrap();
        assert!(e.len() >= 2);
        assert_eq!(e, enumerate(&ss("342333"), &lam).unwrap());
    }

    #[test]
    fn square_reductions() {
        let lam = cs(4, &[1, 2]);
        let d = delete_pd(&ss("2312"), &lam, 3).unwrap().unwrap();
        assert_eq!(d.pair.f, ss("222"));
        assert_eq!(d.pair.lambda, cs(3, &[1, 2]));
        assert_eq!(d.child.num_crosses(), 0);
        let c = contract_pd(&ss("2312"), &lam, 1).unwrap().unwrap();
        assert_eq!(c.pair.f, ss("111"));
        assert_eq!(c.pair.lambda, cs(3, &[1]));
        assert!(delete_pd(&ss("2312"), &lam, 1).is_err());
        let gr = contract_pd(&ss("3333"), &cs(4, &[1, 2, 4]), 4).unwrap().unwrap();
        assert_eq!(gr.pair.f, ss("222"));
        assert_eq!(gr.pair.lambda, cs(3, &[1, 2]));
    }

    #[test]
    fn json_round_trip() {
        let lam = cs(6, &[1, 2, 5]);
        for pd in enumerate(&ss("342333"), &lam).unwrap() {
            let j = to_json(&pd).unwrap();
            let text = serde_json::to_string(&j).unwrap();
            let back: PipeDreamJson = serde_json::from_str(&text).unwrap();
            assert_eq!(from_json(&back).unwrap(), pd);
        }
    }
}
