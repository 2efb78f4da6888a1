//! Simple reflections of the affine and finite symmetric groups acting on
//! windows, plus the subword routines shared by every pipe dream shape.
//!
//! A window `w` lists `w(1..=n)`. In the affine case `w(i + n) = w(i) + n`.
//! Letters are `1..=n` (affine, `s_n` swaps positions `n` and `n + 1`) or
//! `1..n` (finite).

use std::collections::{BTreeSet, VecDeque};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    Affine(usize),
    Finite(usize),
}

impl Group {
    pub fn size(self) -> usize {
        match self {
            Group::Affine(n) | Group::Finite(n) => n,
        }
    }

    pub fn is_affine(self) -> bool {
        matches!(self, Group::Affine(_))
    }

    pub fn num_letters(self) -> usize {
        match self {
            Group::Affine(n) => n,
            Group::Finite(n) => n.saturating_sub(1),
        }
    }

    pub fn identity(self) -> Vec<i64> {
        (1..=self.size() as i64).collect()
    }

    /// `w(x)` for any integer `x` (affine) or `x` in `1..=n` (finite).
    pub fn eval(self, w: &[i64], x: i64) -> i64 {
        let n = self.size() as i64;
        let q = (x - 1).div_euclid(n);
        let r = (x - 1).rem_euclid(n);
        w[r as usize] + q * n
    }

    /// Right multiplication by `s_d`: swaps the entries at positions `d`, `d+1`.
    pub fn swap_positions(self, w: &mut [i64], d: usize) {
        let n = self.size();
        if d < n {
            w.swap(d - 1, d);
        } else {
            debug_assert!(self.is_affine() && d == n);
            let a = w[n - 1];
            let b = w[0];
            w[n - 1] = b + n as i64;
            w[0] = a - n as i64;
        }
    }

    /// Left multiplication by `s_d`: swaps the values `d` and `d+1` (mod n).
    pub fn swap_values(self, w: &mut [i64], d: usize) {
        let n = self.size() as i64;
        let d = d as i64;
        for v in w.iter_mut() {
            match self {
                Group::Finite(_) => {
                    if *v == d {
                        *v = d + 1;
                    } else if *v == d + 1 {
                        *v = d;
                    }
                }
                Group::Affine(_) => {
                    let r = (*v - 1).rem_euclid(n) + 1;
                    if r == d {
                        *v += 1;
                    } else if r == d % n + 1 {
                        *v -= 1;
                    }
                }
            }
        }
    }

    pub fn right_descent(self, w: &[i64], d: usize) -> bool {
        self.eval(w, d as i64) > self.eval(w, d as i64 + 1)
    }

    pub fn inverse(self, w: &[i64]) -> Vec<i64> {
        let n = self.size() as i64;
        let mut inv = vec![0i64; w.len()];
        for (idx, &v) in w.iter().enumerate() {
            let i = idx as i64 + 1;
            let q = (v - 1).div_euclid(n);
            let r = (v - 1).rem_euclid(n);
            inv[r as usize] = i - q * n;
        }
        inv
    }

    pub fn left_descent(self, w: &[i64], d: usize) -> bool {
        self.right_descent(&self.inverse(w), d)
    }

    /// Coxeter length. Only differences of window entries enter, so a window
    /// shifted by a constant has the length of the unshifted element.
    pub fn length(self, w: &[i64]) -> usize {
        let n = w.len();
        let mut total = 0i64;
        for i in 0..n {
            for j in i + 1..n {
                match self {
                    Group::Finite(_) => {
                        if w[i] > w[j] {
                            total += 1;
                        }
                    }
                    Group::Affine(_) => {
                        total += (w[j] - w[i]).div_euclid(n as i64).abs();
                    }
                }
            }
        }
        total as usize
    }

    /// Whether `s_a` and `s_b` fail to commute (including `a == b`).
    pub fn linked(self, a: usize, b: usize) -> bool {
        if a == b {
            return true;
        }
        match self {
            Group::Finite(_) => a.abs_diff(b) == 1,
            Group::Affine(n) => a % n + 1 == b || b % n + 1 == a,
        }
    }
}

/// `base ∘ s_{d_m} ∘ … ∘ s_{d_1}`, where `d_1, …, d_m` are the chosen letters
/// in word order. This is the element read off a shape whose cells are
/// listed in `word` along a southwest-compatible order.
pub fn subword_product(group: Group, base: &[i64], word: &[usize], chosen: &[bool]) -> Vec<i64> {
    let mut w = base.to_vec();
    for (idx, &d) in word.iter().enumerate().rev() {
        if chosen[idx] {
            group.swap_positions(&mut w, d);
        }
    }
    w
}

/// Reduced means the chosen letters realise a product of the same length.
/// `base` must be the identity or (affine) a uniform shift of it.
pub fn is_reduced_subword(group: Group, base: &[i64], word: &[usize], chosen: &[bool]) -> bool {
    let count = chosen.iter().filter(|&&c| c).count();
    group.length(&subword_product(group, base, word, chosen)) == count
}

/// The reduced subword using the earliest possible letters: scan forward and
/// strip right descents of the target. `None` if the target is not below the
/// word's product.
pub fn greedy_first(group: Group, base: &[i64], word: &[usize], target: &[i64]) -> Option<Vec<bool>> {
    let mut v = target.to_vec();
    let mut chosen = vec![false; word.len()];
    for (idx, &d) in word.iter().enumerate() {
        if group.right_descent(&v, d) {
            group.swap_positions(&mut v, d);
            chosen[idx] = true;
        }
    }
    (v == base).then_some(chosen)
}

/// Mirror of [`greedy_first`]: scan backward and strip left descents.
pub fn greedy_last(group: Group, base: &[i64], word: &[usize], target: &[i64]) -> Option<Vec<bool>> {
    let shift = base[0] - 1;
    let mut v: Vec<i64> = target.iter().map(|x| x - shift).collect();
    let mut chosen = vec![false; word.len()];
    for (idx, &d) in word.iter().enumerate().rev() {
        if group.left_descent(&v, d) {
            group.swap_values(&mut v, d);
            chosen[idx] = true;
        }
    }
    (v == group.identity()).then_some(chosen)
}

pub fn indices(chosen: &[bool]) -> Vec<usize> {
    chosen.iter().enumerate().filter(|(_, &c)| c).map(|(i, _)| i).collect()
}

pub fn mask(len: usize, idx: &[usize]) -> Vec<bool> {
    let mut m = vec![false; len];
    for &i in idx {
        m[i] = true;
    }
    m
}

/// Pairs `(x, e)` with `x` chosen and `e` unchosen such that trading `x` for
/// `e` keeps the product and reducedness.
pub fn flips(group: Group, base: &[i64], word: &[usize], chosen: &[bool]) -> Vec<(usize, usize)> {
    let target = subword_product(group, base, word, chosen);
    let mut out = Vec::new();
    let mut trial = chosen.to_vec();
    for x in 0..word.len() {
        if !chosen[x] {
            continue;
        }
        for e in 0..word.len() {
            if chosen[e] {
                continue;
            }
            trial[x] = false;
            trial[e] = true;
            if subword_product(group, base, word, &trial) == target {
                out.push((x, e));
            }
            trial[x] = true;
            trial[e] = false;
        }
    }
    out
}

/// All reduced subwords with product `target`, as sorted index lists in
/// lexicographic order. Breadth-first search over flips from the greedy seed.
pub fn enumerate_subwords(group: Group, base: &[i64], word: &[usize], target: &[i64]) -> Vec<Vec<usize>> {
    let Some(seed) = greedy_first(group, base, word, target) else {
        return Vec::new();
    };
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(indices(&seed));
    queue.push_back(seed);
    while let Some(cur) = queue.pop_front() {
        for (x, e) in flips(group, base, word, &cur) {
            let mut next = cur.clone();
            next[x] = false;
            next[e] = true;
            if seen.insert(indices(&next)) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// Reference enumeration over every subset of the word.
pub fn brute_subwords(group: Group, base: &[i64], word: &[usize], target: &[i64]) -> Vec<Vec<usize>> {
    let m = word.len();
    assert!(m <= 24, "brute force limited to 24 letters");
    let len = group.length(target);
    let mut out = Vec::new();
    for bits in 0u32..(1u32 << m) {
        if bits.count_ones() as usize != len {
            continue;
        }
        let chosen: Vec<bool> = (0..m).map(|i| bits >> i & 1 == 1).collect();
        if subword_product(group, base, word, &chosen) == target {
            out.push(indices(&chosen));
        }
    }
    out.sort();
    out
}

/// Two words have the same heap iff their restrictions to every pair of
/// linked letters agree.
pub fn same_heap(group: Group, a: &[usize], b: &[usize]) -> bool {
    let mut la: Vec<usize> = a.to_vec();
    let mut lb: Vec<usize> = b.to_vec();
    la.sort_unstable();
    lb.sort_unstable();
    if la != lb {
        return false;
    }
    la.dedup();
    for (i, &x) in la.iter().enumerate() {
        for &y in &la[i..] {
            if !group.linked(x, y) {
                continue;
            }
            let pa: Vec<usize> = a.iter().copied().filter(|&z| z == x || z == y).collect();
            let pb: Vec<usize> = b.iter().copied().filter(|&z| z == x || z == y).collect();
            if pa != pb {
                return false;
            }
        }
    }
    true
}

/// Product of a full word, `s_{a_1} s_{a_2} ⋯ s_{a_m}` applied to the
/// identity from the right in word order.
pub fn word_element(group: Group, word: &[usize]) -> Vec<i64> {
    let mut w = group.identity();
    for &d in word {
        group.swap_positions(&mut w, d);
    }
    w
}
