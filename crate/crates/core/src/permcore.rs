//! Bounded affine permutations, siteswaps, cyclic rank functions and the
//! siteswap-level deletion and contraction sweeps.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::Group;

/// Window `g(1..=n)` with `i <= g(i) <= i + n` and distinct residues mod n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundedAffinePermutation {
    window: Vec<i64>,
}

/// Jumps `f(i) = g(i) - i`, each in `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Siteswap {
    values: Vec<i64>,
}

/// A k-subset of `1..=n`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnSet {
    n: usize,
    members: Vec<usize>,
}

/// A positroid variety together with a torus-fixed point of the same Grassmannian.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PositroidPair {
    pub f: Siteswap,
    pub lambda: ColumnSet,
}

impl BoundedAffinePermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::InvalidWindow("empty window".into()));
        }
        let mut seen = vec![false; n];
        for (idx, &g) in window.iter().enumerate() {
            let i = idx as i64 + 1;
            if g < i || g > i + n as i64 {
                return Err(Error::InvalidWindow(format!("g({i}) = {g} is outside [{i}, {}]", i + n as i64)));
            }
            let r = (g - 1).rem_euclid(n as i64) as usize;
            if seen[r] {
                return Err(Error::InvalidWindow(format!("residue of g({i}) = {g} repeats")));
            }
            seen[r] = true;
        }
        Ok(Self { window })
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn k(&self) -> usize {
        let n = self.n() as i64;
        let s: i64 = self.window.iter().enumerate().map(|(i, &g)| g - i as i64 - 1).sum();
        (s / n) as usize
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `g(x)` for any integer `x`.
    pub fn at(&self, x: i64) -> i64 {
        Group::Affine(self.n()).eval(&self.window, x)
    }
}

impl Siteswap {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidSiteswap("empty siteswap".into()));
        }
        for (idx, &v) in values.iter().enumerate() {
            if v < 0 || v > n as i64 {
                return Err(Error::InvalidSiteswap(format!("f({}) = {v} is outside 0..={n}", idx + 1)));
            }
        }
        let sum: i64 = values.iter().sum();
        if sum % n as i64 != 0 {
            return Err(Error::InvalidSiteswap(format!("sum {sum} is not divisible by n = {n}")));
        }
        let mut seen = vec![false; n];
        for (idx, &v) in values.iter().enumerate() {
            let r = (idx as i64 + v).rem_euclid(n as i64) as usize;
            if seen[r] {
                return Err(Error::InvalidSiteswap(format!("landing site of f({}) collides", idx + 1)));
            }
            seen[r] = true;
        }
        Ok(Self { values })
    }

    /// The uniform siteswap `k^n`, i.e. the whole Grassmannian.
    pub fn uniform(k: usize, n: usize) -> Self {
        Self { values: vec![k as i64; n] }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn k(&self) -> usize {
        (self.values.iter().sum::<i64>() / self.n() as i64) as usize
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn window(&self) -> BoundedAffinePermutation {
        window_from_siteswap(self)
    }
}

impl ColumnSet {
    pub fn new(n: usize, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidColumnSet(format!("{} repeats", w[0])));
            }
        }
        if let Some(&m) = members.iter().find(|&&m| m == 0 || m > n) {
            return Err(Error::InvalidColumnSet(format!("{m} is outside 1..={n}")));
        }
        Ok(Self { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// Members of `1..=n` not in the set, sorted.
    pub fn complement(&self) -> Vec<usize> {
        (1..=self.n).filter(|i| !self.contains(*i)).collect()
    }

    pub fn complement_set(&self) -> ColumnSet {
        ColumnSet { n: self.n, members: self.complement() }
    }

    /// Whether `x` (any integer) is a lift of a member.
    pub fn contains_lifted(&self, x: i64) -> bool {
        self.contains((x - 1).rem_euclid(self.n as i64) as usize + 1)
    }

    /// Drop column `i` and shift later labels down, giving a set on `n - 1`.
    pub fn remove_column(&self, i: usize) -> ColumnSet {
        let members = self
            .members
            .iter()
            .filter(|&&m| m != i)
            .map(|&m| if m > i { m - 1 } else { m })
            .collect();
        ColumnSet { n: self.n - 1, members }
    }

    /// Cyclic relabeling `m -> m + t (mod n)`.
    pub fn rotate(&self, t: usize) -> ColumnSet {
        let n = self.n;
        let members = self.members.iter().map(|&m| (m - 1 + t) % n + 1).collect();
        ColumnSet::new(n, members).expect("rotation keeps validity")
    }

    /// Whether the members form one cyclic run of consecutive residues.
    pub fn is_cyclic_run(&self) -> bool {
        let k = self.k();
        if k == 0 || k == self.n {
            return true;
        }
        let starts = self
            .members
            .iter()
            .filter(|&&m| !self.contains(if m == 1 { self.n } else { m - 1 }))
            .count();
        starts == 1
    }

    pub fn all(n: usize, k: usize) -> Vec<ColumnSet> {
        use itertools::Itertools;
        (1..=n).combinations(k).map(|members| ColumnSet { n, members }).collect()
    }
}

/// Serialized as its text form.
impl Serialize for ColumnSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl PositroidPair {
    pub fn new(f: Siteswap, lambda: ColumnSet) -> Result<Self> {
        if f.n() != lambda.n() {
            return Err(Error::ShapeMismatch(f.n(), lambda.n()));
        }
        if f.k() != lambda.k() {
            return Err(Error::KMismatch { f_k: f.k(), lambda_k: lambda.k() });
        }
        Ok(Self { f, lambda })
    }

    pub fn k(&self) -> usize {
        self.lambda.k()
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }
}

impl fmt::Display for Siteswap {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.iter().all(|&v| v <= 9) {
            for v in &self.values {
                write!(fm, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            write!(fm, "{}", parts.join(","))
        }
    }
}

/// Serialized as its text form.
impl Serialize for Siteswap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for BoundedAffinePermutation {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(fm, "({})", parts.join(","))
    }
}

impl fmt::Display for ColumnSet {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|v| v.to_string()).collect();
        write!(fm, "{{{}}}", parts.join(","))
    }
}

impl fmt::Display for PositroidPair {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "({}, {})", self.f, self.lambda)
    }
}

pub fn window_from_siteswap(f: &Siteswap) -> BoundedAffinePermutation {
    let window = f.values.iter().enumerate().map(|(i, &v)| i as i64 + 1 + v).collect();
    BoundedAffinePermutation { window }
}

pub fn siteswap_from_window(g: &[i64]) -> Result<Siteswap> {
    let bap = BoundedAffinePermutation::new(g.to_vec())?;
    Ok(siteswap_of(&bap))
}

pub fn siteswap_of(g: &BoundedAffinePermutation) -> Siteswap {
    let values = g.window.iter().enumerate().map(|(i, &x)| x - i as i64 - 1).collect();
    Siteswap { values }
}

/// `(j - i + 1) - #{a in [i, j] : g(a) <= j}` for `1 <= i <= n`, `i <= j <= i + n - 1`.
pub fn rank_interval(f: &Siteswap, i: i64, j: i64) -> Result<usize> {
    let n = f.n() as i64;
    if i < 1 || i > n || j < i || j > i + n - 1 {
        return Err(Error::IntervalOutOfRange { i, j, n: f.n() });
    }
    let g = f.window();
    let landed = (i..=j).filter(|&a| g.at(a) <= j).count() as i64;
    Ok((j - i + 1 - landed) as usize)
}

/// Every cyclic interval `[i, i + len - 1]`, `i in 1..=n`, `len in 1..=n`.
pub fn cyclic_intervals(n: usize) -> impl Iterator<Item = (i64, i64)> {
    let n = n as i64;
    (1..=n).flat_map(move |i| (1..=n).map(move |len| (i, i + len - 1)))
}

pub fn contains_point(f: &Siteswap, lambda: &ColumnSet) -> Result<bool> {
    if f.n() != lambda.n() {
        return Err(Error::ShapeMismatch(f.n(), lambda.n()));
    }
    if f.k() != lambda.k() {
        return Err(Error::KMismatch { f_k: f.k(), lambda_k: lambda.k() });
    }
    for (i, j) in cyclic_intervals(f.n()) {
        let here = (i..=j).filter(|&a| lambda.contains_lifted(a)).count();
        if here > rank_interval(f, i, j)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `g(i) = i + n` on the set, `g(i) = i` off it.
pub fn point_permutation(lambda: &ColumnSet) -> BoundedAffinePermutation {
    let n = lambda.n() as i64;
    let window = (1..=n).map(|i| if lambda.contains(i as usize) { i + n } else { i }).collect();
    BoundedAffinePermutation { window }
}

pub fn point_siteswap(lambda: &ColumnSet) -> Siteswap {
    siteswap_of(&point_permutation(lambda))
}

fn check_nondegenerate(k: usize, n: usize, i: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::DegenerateGrassmannian { k, n });
    }
    if i == 0 || i > n {
        return Err(Error::PreconditionViolated(format!("column {i} outside 1..={n}")));
    }
    Ok(())
}

/// Cyclic pattern starting at slot `i`.
fn place_cyclic(n: usize, i: usize, pattern: &[i64]) -> Siteswap {
    let mut values = vec![0; n];
    for (off, &v) in pattern.iter().enumerate() {
        values[(i - 1 + off) % n] = v;
    }
    Siteswap { values }
}

/// The siteswap of deleting column `i` from `Gr(k, n)`: a `0` at slot `i`,
/// then `k^(n-k-1)`, then `(k+1)^k` wrapping back to slot `i - 1`.
pub fn del_model(k: usize, n: usize, i: usize) -> Result<Siteswap> {
    check_nondegenerate(k, n, i)?;
    let mut pattern = vec![0i64];
    pattern.extend(std::iter::repeat_n(k as i64, n - k - 1));
    pattern.extend(std::iter::repeat_n(k as i64 + 1, k));
    Ok(place_cyclic(n, i, &pattern))
}

/// The siteswap of contracting column `i` in `Gr(k, n)`: `n` at slot `i`,
/// then `(k-1)^(n-k)`, then `k^(k-1)`.
pub fn contr_model(k: usize, n: usize, i: usize) -> Result<Siteswap> {
    check_nondegenerate(k, n, i)?;
    let mut pattern = vec![n as i64];
    pattern.extend(std::iter::repeat_n(k as i64 - 1, n - k));
    pattern.extend(std::iter::repeat_n(k as i64, k - 1));
    Ok(place_cyclic(n, i, &pattern))
}

struct Lifted {
    g: Vec<i64>,
}

impl Lifted {
    fn n(&self) -> i64 {
        self.g.len() as i64
    }
    fn get(&self, p: i64) -> i64 {
        let n = self.n();
        self.g[(p - 1).rem_euclid(n) as usize] + (p - 1).div_euclid(n) * n
    }
    fn set(&mut self, p: i64, v: i64) {
        let n = self.n();
        self.g[(p - 1).rem_euclid(n) as usize] = v - (p - 1).div_euclid(n) * n;
    }
}

/// Largest positroid inside `f` with `f'(i) = 0`, by the descending sweep
/// over `i-1, i-2, …`. `None` exactly when `f(i) = n`.
pub fn delete_siteswap(f: &Siteswap, i: usize) -> Option<Siteswap> {
    let n = f.n() as i64;
    let i = i as i64;
    let mut w = Lifted { g: f.window().window.clone() };
    for j in 1..n {
        if w.get(i) == i {
            break;
        }
        let p = i - j;
        let (gp, gi) = (w.get(p), w.get(i));
        if i <= gp && gp < gi {
            w.set(i, gp);
            w.set(p, gi);
        }
    }
    (w.get(i) == i).then(|| Siteswap::new(siteswap_of(&BoundedAffinePermutation { window: w.g }).values).expect("sweep keeps validity"))
}

/// Largest positroid inside `f` with `f'(i) = n`, by the ascending sweep over
/// `i+1, i+2, …` with acceptance `g(i) < g(p) <= i + n`. `None` exactly when
/// `f(i) = 0`.
pub fn contract_siteswap(f: &Siteswap, i: usize) -> Option<Siteswap> {
    let n = f.n() as i64;
    let i = i as i64;
    let mut w = Lifted { g: f.window().window.clone() };
    for j in 1..n {
        if w.get(i) == i + n {
            break;
        }
        let p = i + j;
        let (gp, gi) = (w.get(p), w.get(i));
        if gi < gp && gp <= i + n {
            w.set(i, gp);
            w.set(p, gi);
        }
    }
    (w.get(i) == i + n).then(|| Siteswap::new(siteswap_of(&BoundedAffinePermutation { window: w.g }).values).expect("sweep keeps validity"))
}

/// Remove position `i` and the strand through it, relabeling residues
/// order-preservingly with period `n - 1`.
fn drop_strand(f: &Siteswap, i: usize) -> Siteswap {
    let n = f.n() as i64;
    let g = f.window();
    let m = n - 1;
    let ii = i as i64;
    let mut window = Vec::with_capacity(f.n() - 1);
    for p in 1..=n {
        if p == ii {
            continue;
        }
        let v = g.at(p);
        let r = (v - 1).rem_euclid(n) + 1;
        let q = (v - 1).div_euclid(n);
        let r2 = if r > ii { r - 1 } else { r };
        window.push(r2 + q * m);
    }
    let values = window.iter().enumerate().map(|(idx, &v)| v - idx as i64 - 1).collect();
    Siteswap { values }
}

pub fn reindex_delete(f: &Siteswap, i: usize) -> Result<Siteswap> {
    if i == 0 || i > f.n() || f.values[i - 1] != 0 {
        return Err(Error::PreconditionViolated(format!("reindex_delete needs f({i}) = 0 in {f}")));
    }
    let out = drop_strand(f, i);
    Siteswap::new(out.values)
}

pub fn reindex_contract(f: &Siteswap, i: usize) -> Result<Siteswap> {
    if i == 0 || i > f.n() || f.values[i - 1] != f.n() as i64 {
        return Err(Error::PreconditionViolated(format!("reindex_contract needs f({i}) = n in {f}")));
    }
    let out = drop_strand(f, i);
    Siteswap::new(out.values)
}

/// Containment of positroid varieties via cyclic rank comparison.
pub fn positroid_leq(f1: &Siteswap, f2: &Siteswap) -> Result<bool> {
    if f1.n() != f2.n() {
        return Err(Error::ShapeMismatch(f1.n(), f2.n()));
    }
    if f1.k() != f2.k() {
        return Err(Error::KMismatch { f_k: f1.k(), lambda_k: f2.k() });
    }
    for (i, j) in cyclic_intervals(f1.n()) {
        if rank_interval(f1, i, j)? > rank_interval(f2, i, j)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dual positroid in `Gr(n - k, n)`: `g*(i) = g^{-1}(i) + n`.
pub fn grassmann_dual(f: &Siteswap) -> Siteswap {
    let n = f.n();
    let g = f.window();
    let inv = Group::Affine(n).inverse(g.window());
    let window: Vec<i64> = inv.iter().map(|&x| x + n as i64).collect();
    siteswap_of(&BoundedAffinePermutation { window })
}

/// `f'(i) = f(i - t)`: the siteswap relabeled by `i -> i + t (mod n)`.
pub fn rotate_siteswap(f: &Siteswap, t: usize) -> Siteswap {
    let n = f.n();
    let mut values = vec![0; n];
    for (idx, &v) in f.values.iter().enumerate() {
        values[(idx + t) % n] = v;
    }
    Siteswap { values }
}

/// Every bounded affine permutation with the given `k` and `n`, in
/// lexicographic order of siteswaps.
pub fn all_siteswaps(n: usize, k: usize) -> Vec<Siteswap> {
    fn rec(n: usize, pos: usize, remaining: i64, used: &mut Vec<bool>, cur: &mut Vec<i64>, out: &mut Vec<Siteswap>) {
        if pos == n {
            if remaining == 0 {
                out.push(Siteswap { values: cur.clone() });
            }
            return;
        }
        let slots_left = (n - pos) as i64;
        for v in 0..=n as i64 {
            if v > remaining || remaining - v > (slots_left - 1) * n as i64 {
                continue;
            }
            let r = (pos as i64 + v).rem_euclid(n as i64) as usize;
            if used[r] {
                continue;
            }
            used[r] = true;
            cur.push(v);
            rec(n, pos + 1, remaining - v, used, cur, out);
            cur.pop();
            used[r] = false;
        }
    }
    let mut out = Vec::new();
    rec(n, 0, (k * n) as i64, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// Every `(f, lambda)` in `Gr(k, n)` with `lambda` on `Π_f`.
pub fn all_pairs(n: usize, k: usize) -> Vec<PositroidPair> {
    let sets = ColumnSet::all(n, k);
    let mut out = Vec::new();
    for f in all_siteswaps(n, k) {
        for lambda in &sets {
            if contains_point(&f, lambda).expect("same k and n") {
                out.push(PositroidPair { f: f.clone(), lambda: lambda.clone() });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ss(s: &str) -> Siteswap {
        Siteswap::new(s.bytes().map(|b| (b - b'0') as i64).collect()).unwrap()
    }

    fn cs(n: usize, m: &[usize]) -> ColumnSet {
        ColumnSet::new(n, m.to_vec()).unwrap()
    }

    #[test]
    fn conversion_fixtures() {
        let f = Siteswap::new(vec![3, 4, 0, 3, 6, 2]).unwrap();
        assert_eq!(window_from_siteswap(&f).window(), &[4, 6, 3, 7, 11, 8]);
        assert_eq!(siteswap_from_window(&[4, 6, 3, 7, 11, 8]).unwrap(), f);
        assert_eq!(window_from_siteswap(&ss("2312")).window(), &[3, 5, 4, 6]);
        assert_eq!(siteswap_from_window(&[1, 2, 3, 4]).unwrap().values(), &[0, 0, 0, 0]);
        assert_eq!(window_from_siteswap(&Siteswap::uniform(3, 5)).window(), &[4, 5, 6, 7, 8]);
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        assert!(matches!(Siteswap::new(vec![2, 1]), Err(Error::InvalidSiteswap(_))));
        assert!(matches!(Siteswap::new(vec![1, 2]), Err(Error::InvalidSiteswap(_))));
        assert!(matches!(siteswap_from_window(&[2, 2]), Err(Error::InvalidWindow(_))));
        assert!(matches!(siteswap_from_window(&[0, 3]), Err(Error::InvalidWindow(_))));
    }

    #[test]
    fn rank_examples() {
        let gr = Siteswap::uniform(2, 5);
        for (i, j) in cyclic_intervals(5) {
            assert_eq!(rank_interval(&gr, i, j).unwrap(), ((j - i + 1) as usize).min(2));
        }
        let f = ss("2312");
        // g = (3,5,4,6): on [2,3] nothing lands by 3
        assert_eq!(rank_interval(&f, 2, 3).unwrap(), 2);
        assert_eq!(rank_interval(&ss("342333"), 3, 3).unwrap(), 1);
        let z = Siteswap::new(vec![3, 3, 0, 2]).unwrap();
        assert_eq!(rank_interval(&z, 3, 3).unwrap(), 0);
        assert!(rank_interval(&f, 1, 5).is_err());
    }

    #[test]
    fn containment_examples() {
        assert!(contains_point(&ss("342333"), &cs(6, &[1, 2, 5])).unwrap());
        let lam = cs(5, &[1, 3]);
        let p = point_siteswap(&lam);
        for other in ColumnSet::all(5, 2) {
            assert_eq!(contains_point(&p, &other).unwrap(), other == lam);
            assert!(contains_point(&Siteswap::uniform(2, 5), &other).unwrap());
        }
        assert!(matches!(contains_point(&ss("2312"), &cs(4, &[1])), Err(Error::KMismatch { .. })));
    }

    #[test]
    fn point_permutations() {
        assert_eq!(point_permutation(&cs(4, &[1, 2])).window(), &[5, 6, 3, 4]);
        assert_eq!(point_siteswap(&cs(7, &[2, 5, 7])).values(), &[0, 7, 0, 0, 7, 0, 7]);
        assert_eq!(point_permutation(&cs(3, &[])).window(), &[1, 2, 3]);
    }

    #[test]
    fn models() {
        assert_eq!(del_model(2, 4, 4).unwrap().values(), &[2, 3, 3, 0]);
        assert_eq!(contr_model(1, 3, 2).unwrap().values(), &[0, 3, 0]);
        assert!(matches!(del_model(0, 4, 1), Err(Error::DegenerateGrassmannian { .. })));
        for n in 2..=7 {
            for k in 1..n {
                for i in 1..=n {
                    let d = del_model(k, n, i).unwrap();
                    let c = contr_model(k, n, i).unwrap();
                    assert_eq!((d.k(), d.values()[i - 1]), (k, 0));
                    assert_eq!((c.k(), c.values()[i - 1]), (k, n as i64));
                    Siteswap::new(d.values().to_vec()).unwrap();
                    Siteswap::new(c.values().to_vec()).unwrap();
                }
            }
        }
    }

    #[test]
    fn sweeps_on_worked_examples() {
        let f = ss("2312");
        let d = delete_siteswap(&f, 3).unwrap();
        assert_eq!(d.values(), &[3, 3, 0, 2]);
        assert_eq!(d.window().window(), &[4, 5, 3, 6]);
        let c = contract_siteswap(&f, 1).unwrap();
        assert_eq!(c.values(), &[4, 1, 1, 2]);
        assert_eq!(c.window().window(), &[5, 3, 4, 6]);
        assert_eq!(reindex_delete(&d, 3).unwrap().values(), &[2, 2, 2]);
        assert_eq!(reindex_contract(&c, 1).unwrap().values(), &[1, 1, 1]);
        assert!(reindex_delete(&f, 3).is_err());
    }

    #[test]
    fn sweeps_on_grassmannians_give_models() {
        for n in 2..=7 {
            for k in 1..n {
                let gr = Siteswap::uniform(k, n);
                for i in 1..=n {
                    let d = delete_siteswap(&gr, i).unwrap();
                    assert_eq!(d, del_model(k, n, i).unwrap());
                    assert_eq!(contract_siteswap(&gr, i).unwrap(), contr_model(k, n, i).unwrap());
                    assert_eq!(reindex_delete(&d, i).unwrap(), Siteswap::uniform(k, n - 1));
                    let c = contract_siteswap(&gr, i).unwrap();
                    assert_eq!(reindex_contract(&c, i).unwrap(), Siteswap::uniform(k - 1, n - 1));
                }
            }
        }
    }

    #[test]
    fn sweeps_fix_already_extreme_slots() {
        let f = Siteswap::new(vec![3, 3, 0, 2]).unwrap();
        assert_eq!(delete_siteswap(&f, 3).unwrap(), f);
        let c = Siteswap::new(vec![4, 1, 1, 2]).unwrap();
        assert_eq!(contract_siteswap(&c, 1).unwrap(), c);
        assert!(delete_siteswap(&c, 1).is_none());
        assert!(contract_siteswap(&f, 3).is_none());
    }

    #[test]
    fn duality_basics() {
        assert_eq!(grassmann_dual(&Siteswap::uniform(2, 5)), Siteswap::uniform(3, 5));
        for n in 2..=6 {
            for k in 1..n {
                for i in 1..=n {
                    let d = grassmann_dual(&del_model(k, n, i).unwrap());
                    assert_eq!(d, contr_model(n - k, n, i).unwrap());
                }
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(ss("342333").to_string(), "342333");
        assert_eq!(Siteswap::new(vec![10, 0, 0, 0, 0, 0, 0, 0, 0, 0]).unwrap().to_string(), "10,0,0,0,0,0,0,0,0,0");
        assert_eq!(cs(6, &[5, 1, 2]).to_string(), "{1,2,5}");
        assert_eq!(window_from_siteswap(&ss("2312")).to_string(), "(3,5,4,6)");
    }

    #[test]
    fn siteswap_counts_match_known_totals() {
        // numbers of positroid varieties in all Gr(k, n), k = 0..=n
        let totals = [2usize, 5, 16, 65, 326];
        for (idx, &t) in totals.iter().enumerate() {
            let n = idx + 1;
            let s: usize = (0..=n).map(|k| all_siteswaps(n, k).len()).sum();
            assert_eq!(s, t, "n = {n}");
        }
    }

    #[test]
    fn cyclic_runs() {
        assert!(cs(4, &[1, 4]).is_cyclic_run());
        assert!(cs(4, &[2, 3]).is_cyclic_run());
        assert!(!cs(4, &[1, 3]).is_cyclic_run());
    }
}
