//! Deletion/contraction children of a pair, atomic pairs and the search for
//! an atomic pair below a singular one.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permcore::{rotate_siteswap, siteswap_of, ColumnSet, PositroidPair};
use crate::pipedream::{contract_pd, delete_pd, greedy_bottom, readout, is_reduced, Op, PipeDream};
use crate::shape::{build_shape, RectRegion};
use crate::smooth::{is_nw_partition, is_se_partition, smooth_at, Status, TileGrid};

/// One non-empty deletion or contraction of a pair.
#[derive(Clone, Debug)]
pub struct PairChild {
    pub op: Op,
    pub pair: PositroidPair,
    pub pdream: PipeDream,
}

/// Every deletion (columns off λ) and contraction (columns in λ), with
/// `None` for the empty ones, in column order.
pub fn children_with_empty(pair: &PositroidPair) -> Result<Vec<(Op, Option<PairChild>)>> {
    let (f, lam) = (&pair.f, &pair.lambda);
    let mut out = Vec::with_capacity(pair.n());
    for i in 1..=pair.n() {
        let r = if lam.contains(i) { contract_pd(f, lam, i)? } else { delete_pd(f, lam, i)? };
        let op = if lam.contains(i) { Op::Contract(i) } else { Op::Delete(i) };
        out.push((op, r.map(|r| PairChild { op, pair: r.pair, pdream: r.child })));
    }
    Ok(out)
}

/// The non-empty children.
pub fn children(pair: &PositroidPair) -> Result<Vec<PairChild>> {
    Ok(children_with_empty(pair)?.into_iter().filter_map(|(_, c)| c).collect())
}

fn status(pair: &PositroidPair) -> Result<Status> {
    Ok(smooth_at(&pair.f, &pair.lambda)?.status)
}

/// Singular, with every non-empty child smooth.
pub fn is_atomic(pair: &PositroidPair) -> Result<bool> {
    if status(pair)? != Status::Singular {
        return Ok(false);
    }
    for c in children(pair)? {
        if status(&c.pair)? != Status::Smooth {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sequence of operations from `pair` down to an atomic pair, found by
/// breadth-first search through singular children. `None` for smooth pairs.
pub fn atomic_path(pair: &PositroidPair) -> Result<Option<(Vec<Op>, PositroidPair)>> {
    if status(pair)? != Status::Singular {
        return Ok(None);
    }
    let mut parent: HashMap<PositroidPair, (PositroidPair, Op)> = HashMap::new();
    let mut queue = VecDeque::from([pair.clone()]);
    let mut seen = BTreeSet::from([pair.clone()]);
    while let Some(p) = queue.pop_front() {
        let mut singular = Vec::new();
        for c in children(&p)? {
            if status(&c.pair)? == Status::Singular {
                singular.push(c);
            }
        }
        if singular.is_empty() {
            let mut ops = Vec::new();
            let mut cur = p.clone();
            while let Some((up, op)) = parent.get(&cur) {
                ops.push(*op);
                cur = up.clone();
            }
            ops.reverse();
            return Ok(Some((ops, p)));
        }
        for c in singular {
            if seen.insert(c.pair.clone()) {
                parent.insert(c.pair.clone(), (p.clone(), c.op));
                queue.push_back(c.pair);
            }
        }
    }
    Err(Error::InvariantViolation(format!("no atomic pair below singular {pair}")))
}

/// An atomic pair reachable from `pair` by deletions and contractions.
pub fn atomic_witness(pair: &PositroidPair) -> Result<Option<PositroidPair>> {
    Ok(atomic_path(pair)?.map(|(_, p)| p))
}

/// The tiles of the single `k × k` window, `k >= 2`, if the shape is one.
fn square_window(pd: &PipeDream) -> Option<(usize, TileGrid)> {
    let shape = pd.shape();
    let (k, n) = (shape.k(), shape.n());
    if k < 2 || n != 2 * k || !shape.lambda().is_cyclic_run() {
        return None;
    }
    let rects = shape.maximal_rectangles();
    match rects.as_slice() {
        [r] if r.height == k && r.width == k => Some((k, TileGrid::of_rect(pd, r))),
        _ => None,
    }
}

/// Whether `pd` has the atomic form: a square `k × k` window, exactly one
/// cross on the main SW-NE diagonal, none on the two diagonals beside it, a
/// NW partition above them and a SE partition below.
pub fn structural_atomic_check(pd: &PipeDream) -> bool {
    let Some((k, grid)) = square_window(pd) else { return false };
    let mut on_main = 0;
    let mut nw_cells = vec![false; k * k];
    let mut se_cells = vec![false; k * k];
    for a in 0..k {
        for b in 0..k {
            if !grid.get(a, b) {
                continue;
            }
            let d = a + b;
            if d == k - 1 {
                on_main += 1;
            } else if d + 2 == k || d == k {
                return false;
            } else if d + 1 < k {
                nw_cells[a * k + b] = true;
            } else {
                se_cells[a * k + b] = true;
            }
        }
    }
    on_main == 1 && is_nw_partition(&TileGrid::new(k, k, nw_cells)) && is_se_partition(&TileGrid::new(k, k, se_cells))
}

/// Subsets of `cells` (positions in a `k × k` grid) closed under `pred`.
fn closed_subsets(k: usize, cells: &[(usize, usize)], pred: fn(&TileGrid) -> bool) -> Vec<Vec<(usize, usize)>> {
    cells
        .iter()
        .copied()
        .powerset()
        .filter(|sub| {
            let mut bits = vec![false; k * k];
            for &(a, b) in sub {
                bits[a * k + b] = true;
            }
            pred(&TileGrid::new(k, k, bits))
        })
        .collect()
}

/// Every pair read off a filling of the `k × k` window of `λ = {1..k}` in
/// `Gr(k, 2k)` that has the atomic form and is reduced.
pub fn generate_atomic(k: usize) -> Result<Vec<PositroidPair>> {
    if k < 2 {
        return Err(Error::PreconditionViolated(format!("atomic pairs need k >= 2, got {k}")));
    }
    let n = 2 * k;
    let lambda = ColumnSet::new(n, (1..=k).collect())?;
    let shape = Arc::new(build_shape(k, n, &lambda)?);
    let rect: RectRegion = shape.maximal_rectangles().into_iter().next().expect("square window");
    let at = |a: usize, b: usize| rect.cell(a, b);
    let nw_region: Vec<(usize, usize)> = (0..k).cartesian_product(0..k).filter(|&(a, b)| a + b + 3 <= k).collect();
    let se_region: Vec<(usize, usize)> = (0..k).cartesian_product(0..k).filter(|&(a, b)| a + b > k).collect();
    let nws = closed_subsets(k, &nw_region, is_nw_partition);
    let ses = closed_subsets(k, &se_region, is_se_partition);
    let mut out = BTreeSet::new();
    for a in 0..k {
        let b = k - 1 - a;
        for nw in &nws {
            for se in &ses {
                let mut idx = vec![at(a, b)];
                idx.extend(nw.iter().chain(se).map(|&(x, y)| at(x, y)));
                let pd = PipeDream::from_indices(shape.clone(), &idx)?;
                if is_reduced(&pd) {
                    let f = siteswap_of(&readout(&pd)?);
                    out.insert(PositroidPair::new(f, lambda.clone())?);
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Least relabeling of the pair under the cyclic shifts `i -> i + t`.
pub fn canonical_rotation(pair: &PositroidPair) -> PositroidPair {
    (0..pair.n())
        .map(|t| PositroidPair { f: rotate_siteswap(&pair.f, t), lambda: pair.lambda.rotate(t) })
        .min()
        .expect("n >= 1")
}

/// Labels of `(row, column)` for each surviving cell of the original shape.
#[derive(Clone, Debug, Serialize)]
pub struct RectTrace {
    pub ops: Vec<Op>,
    pub atomic: PositroidPair,
    /// Original `(row label, column label)` of every cell left at the end.
    pub surviving: Vec<(usize, usize)>,
    /// South-west corner of a maximal rectangle holding all of them.
    pub rectangle: Option<(i64, i64)>,
}

/// Follow the witness path and check that the cells still present at the
/// atomic pair all lie in one maximal rectangle of the original shape.
pub fn trace_to_rectangle(pair: &PositroidPair) -> Result<RectTrace> {
    let Some((ops, atomic)) = atomic_path(pair)? else {
        return Err(Error::PreconditionViolated(format!("{pair} is smooth")));
    };
    let mut orig: Vec<usize> = (1..=pair.n()).collect();
    for op in &ops {
        let (Op::Delete(i) | Op::Contract(i)) = *op;
        orig.remove(i - 1);
    }
    let lam = &pair.lambda;
    let rows: Vec<usize> = orig.iter().copied().filter(|&c| lam.contains(c)).collect();
    let cols: Vec<usize> = orig.iter().copied().filter(|&c| !lam.contains(c)).collect();
    let surviving: Vec<(usize, usize)> = rows.iter().copied().cartesian_product(cols.iter().copied()).collect();
    let pd = greedy_bottom(&pair.f, lam)?;
    let shape = pd.shape();
    let rectangle = shape.maximal_rectangles().into_iter().find_map(|rect| {
        let labels: BTreeSet<(usize, usize)> =
            rect.cells.iter().map(|&i| (shape.cells()[i].row_label, shape.cells()[i].col_label)).collect();
        surviving.iter().all(|s| labels.contains(s)).then_some(rect.sw)
    });
    Ok(RectTrace { ops, atomic, surviving, rectangle })
}

/// Whether the witness path stays inside one maximal rectangle.
pub fn pair_in_max_rect(pair: &PositroidPair) -> Result<bool> {
    Ok(trace_to_rectangle(pair)?.rectangle.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_siteswap;
    use crate::pipedream::enumerate;

    fn pair(f: &str, n: usize, m: &[usize]) -> PositroidPair {
        PositroidPair::new(parse_siteswap(f).unwrap(), ColumnSet::new(n, m.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn square_children() {
        let p = pair("2312", 4, &[1, 2]);
        let ch = children(&p).unwrap();
        let ops: Vec<Op> = ch.iter().map(|c| c.op).collect();
        assert_eq!(ops, vec![Op::Contract(1), Op::Contract(2), Op::Delete(3), Op::Delete(4)]);
        for c in &ch {
            let want = if matches!(c.op, Op::Contract(_)) { (1, 3) } else { (2, 3) };
            assert_eq!((c.pair.k(), c.pair.n()), want);
            assert_eq!(status(&c.pair).unwrap(), Status::Smooth);
        }
        assert!(is_atomic(&p).unwrap());
        assert_eq!(atomic_witness(&p).unwrap(), Some(p.clone()));
        for pd in enumerate(&p.f, &p.lambda).unwrap() {
            assert!(structural_atomic_check(&pd));
        }
    }

    #[test]
    fn worked_pair() {
        let p = pair("342333", 6, &[1, 2, 5]);
        assert!(!is_atomic(&p).unwrap());
        let singular: Vec<Op> = children(&p)
            .unwrap()
            .into_iter()
            .filter(|c| status(&c.pair).unwrap() == Status::Singular)
            .map(|c| c.op)
            .collect();
        assert_eq!(singular, vec![Op::Contract(5), Op::Delete(6)]);
        assert_eq!(atomic_witness(&p).unwrap(), Some(pair("2312", 4, &[1, 2])));
        assert!(pair_in_max_rect(&p).unwrap());
    }

    #[test]
    fn grassmannians_are_not_atomic() {
        let p = pair("2222", 4, &[1, 3]);
        assert!(!is_atomic(&p).unwrap());
        assert_eq!(atomic_witness(&p).unwrap(), None);
        assert!(pair_in_max_rect(&p).is_err());
        let elbows = PipeDream::all_elbows(Arc::new(build_shape(2, 4, &ColumnSet::new(4, vec![1, 2]).unwrap()).unwrap()));
        assert!(!structural_atomic_check(&elbows));
    }

    #[test]
    fn generated_pairs_are_atomic() {
        let two = generate_atomic(2).unwrap();
        assert_eq!(two, vec![pair("2312", 4, &[1, 2])]);
        for k in 2..=3 {
            for p in generate_atomic(k).unwrap() {
                assert!(is_atomic(&p).unwrap(), "{p}");
                assert!(structural_atomic_check(&greedy_bottom(&p.f, &p.lambda).unwrap()));
            }
        }
    }
}
