//! Torus-equivariant class of the variety near a fixed point, as a sum over
//! pipe dreams of products of linear forms, computed from cell labels and
//! independently from roots of the reading word.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permcore::{ColumnSet, Siteswap};
use crate::pipedream::enumerate;
use crate::shape::{cell_weight, StripShape};

/// `y_plus - y_minus`, variables indexed from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LinearForm {
    pub plus: usize,
    pub minus: usize,
}

impl LinearForm {
    pub fn new(plus: usize, minus: usize) -> Result<Self> {
        if plus == minus {
            return Err(Error::PreconditionViolated(format!("y_{plus} - y_{minus} is zero")));
        }
        Ok(Self { plus, minus })
    }

    pub fn negated(self) -> Self {
        Self { plus: self.minus, minus: self.plus }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "(y{} - y{})", self.plus, self.minus)
    }
}

/// A sum of products of linear forms, one product per pipe dream.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassExpr {
    pub n: usize,
    pub terms: Vec<Vec<LinearForm>>,
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, term) in self.terms.iter().enumerate() {
            let body = if term.is_empty() { "1".to_string() } else { term.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("") };
            let sep = if t == 0 { "  " } else { "+ " };
            writeln!(fm, "{sep}{body}")?;
        }
        Ok(())
    }
}

/// Integer polynomial in `y_1..y_n`, keyed by exponent vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    pub terms: BTreeMap<Vec<u32>, i64>,
}

impl Polynomial {
    pub fn one(n: usize) -> Self {
        Self { terms: BTreeMap::from([(vec![0; n], 1)]) }
    }

    pub fn times_form(&self, l: LinearForm) -> Self {
        let mut out: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        for (mono, &c) in &self.terms {
            for (var, sign) in [(l.plus, 1), (l.minus, -1)] {
                let mut m = mono.clone();
                m[var - 1] += 1;
                *out.entry(m).or_insert(0) += sign * c;
            }
        }
        out.retain(|_, c| *c != 0);
        Self { terms: out }
    }

    pub fn add(&mut self, other: &Self) {
        for (m, &c) in &other.terms {
            *self.terms.entry(m.clone()).or_insert(0) += c;
        }
        self.terms.retain(|_, c| *c != 0);
    }
}

impl ClassExpr {
    pub fn expand(&self) -> Polynomial {
        let mut total = Polynomial::default();
        for term in &self.terms {
            let p = term.iter().fold(Polynomial::one(self.n), |acc, &l| acc.times_form(l));
            total.add(&p);
        }
        total
    }
}

/// One term per pipe dream, one factor `y_col - y_row` per cross.
pub fn ajs_class_cells(f: &Siteswap, lambda: &ColumnSet) -> Result<ClassExpr> {
    let pds = enumerate(f, lambda)?;
    let mut terms = Vec::with_capacity(pds.len());
    for pd in &pds {
        let mut term = Vec::new();
        for idx in pd.key() {
            let (col, row) = cell_weight(pd.shape(), idx)?;
            term.push(LinearForm::new(col, row)?);
        }
        terms.push(term);
    }
    Ok(ClassExpr { n: f.n(), terms })
}

/// `r_d` on variable indices: swaps `d` and `d + 1`, with `n + 1` read as 1.
fn reflect(n: usize, d: usize, v: usize) -> usize {
    let next = d % n + 1;
    if v == d {
        next
    } else if v == next {
        d
    } else {
        v
    }
}

/// `r_{Q(1)} ... r_{Q(i-1)} (x_{Q(i)} - x_{Q(i)+1})` for every position `i`.
pub fn roots(n: usize, word: &[usize]) -> Vec<LinearForm> {
    (0..word.len())
        .map(|i| {
            let (mut a, mut b) = (word[i], word[i] % n + 1);
            for &d in word[..i].iter().rev() {
                a = reflect(n, d, a);
                b = reflect(n, d, b);
            }
            LinearForm { plus: a, minus: b }
        })
        .collect()
}

/// Roots class in the reading order `order` (a linear extension of the
/// cells). Each factor is flipped to the sign whose specialization is `+h`;
/// the second value counts the flips made.
pub fn ajs_class_roots_in_order(f: &Siteswap, lambda: &ColumnSet, order: &[usize]) -> Result<(ClassExpr, usize)> {
    let pds = enumerate(f, lambda)?;
    let n = f.n();
    let shape = pds[0].shape();
    if !shape.is_linear_extension(order) {
        return Err(Error::PreconditionViolated("order is not a linear extension of the cells".into()));
    }
    let word: Vec<usize> = order.iter().map(|&i| shape.cells()[i].letter).collect();
    let betas = roots(n, &word);
    let mut flips = 0;
    let mut terms = Vec::with_capacity(pds.len());
    for pd in &pds {
        let mut term = Vec::new();
        for (pos, &idx) in order.iter().enumerate() {
            if !pd.is_cross(idx) {
                continue;
            }
            let b = betas[pos];
            if lambda.contains(b.plus) && !lambda.contains(b.minus) {
                flips += 1;
                term.push(b.negated());
            } else {
                term.push(b);
            }
        }
        terms.push(term);
    }
    Ok((ClassExpr { n, terms }, flips))
}

/// A linear extension of the cells, choosing uniformly among the ready
/// cells at each step.
pub fn random_linear_extension<R: Rng + ?Sized>(shape: &StripShape, rng: &mut R) -> Vec<usize> {
    let m = shape.len();
    let preds: Vec<Vec<usize>> = (0..m).map(|i| shape.predecessors(i)).collect();
    let mut done = vec![false; m];
    let mut order = Vec::with_capacity(m);
    while order.len() < m {
        let ready: Vec<usize> = (0..m).filter(|&i| !done[i] && preds[i].iter().all(|&p| done[p])).collect();
        let &pick = ready.choose(rng).expect("cell order is acyclic");
        done[pick] = true;
        order.push(pick);
    }
    order
}

/// Roots class in the canonical reading order.
pub fn ajs_class_roots(f: &Siteswap, lambda: &ColumnSet) -> Result<ClassExpr> {
    let cells = crate::shape::strip(lambda.k(), lambda.n(), lambda)?.len();
    let canonical: Vec<usize> = (0..cells).collect();
    Ok(ajs_class_roots_in_order(f, lambda, &canonical)?.0)
}

/// Substitute `y_i = 0` on `λ` and `y_i = h` off it. Returns `(m, l)` for
/// the result `m·h^l`.
pub fn specialize(cls: &ClassExpr, lambda: &ColumnSet) -> Result<(i64, usize)> {
    let value = |v: usize| if lambda.contains(v) { 0 } else { 1 };
    let mut degree = None;
    let mut coeff = 0;
    for term in &cls.terms {
        match degree {
            None => degree = Some(term.len()),
            Some(d) if d != term.len() => {
                return Err(Error::NonMonomialSpecialization(format!("terms of degree {d} and {}", term.len())));
            }
            _ => {}
        }
        coeff += term.iter().map(|l| value(l.plus) - value(l.minus)).product::<i64>();
    }
    Ok((coeff, degree.unwrap_or(0)))
}
