//! Text forms shared by the library and the CLI.
//!
//! Siteswaps are digit strings (`342333`) or comma lists (`3,4,10,...`),
//! windows carry a `g:` prefix (`g:4,6,3,7,11,8`), column sets are braced
//! lists (`{1,2,5}`) and finite permutations are one-line digit strings or
//! comma lists.

use crate::error::{Error, Result};
use crate::permcore::{siteswap_from_window, BoundedAffinePermutation, ColumnSet, Siteswap};

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

/// Integers of a digit string or comma list, each with its byte offset in `s`.
/// `base` is added to reported positions.
fn numbers(s: &str, base: usize) -> Result<Vec<(usize, i64)>> {
    let t = s.trim_end();
    let lead = t.len() - t.trim_start().len();
    let t = t.trim_start();
    if t.is_empty() {
        return Err(perr(base + lead, "expected a value"));
    }
    let mut out = Vec::new();
    if t.contains(',') {
        let mut off = 0;
        for part in t.split(',') {
            let inner = part.trim();
            let at = base + lead + off + (part.len() - part.trim_start().len());
            if inner.is_empty() {
                return Err(perr(at, "empty entry"));
            }
            let v: i64 = inner.parse().map_err(|_| {
                let bad = inner.find(|c: char| !(c.is_ascii_digit() || c == '-')).unwrap_or(0);
                perr(at + bad, format!("not an integer: {inner:?}"))
            })?;
            out.push((at, v));
            off += part.len() + 1;
        }
    } else {
        for (i, ch) in t.char_indices() {
            let d = ch.to_digit(10).ok_or_else(|| perr(base + lead + i, format!("unexpected character {ch:?}")))?;
            out.push((base + lead + i, d as i64));
        }
    }
    Ok(out)
}

fn strip_parens(s: &str) -> (&str, usize) {
    let t = s.trim();
    let lead = s.len() - s.trim_start().len();
    if let Some(inner) = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
        (inner, lead + 1)
    } else {
        (t, lead)
    }
}

pub fn parse_siteswap(s: &str) -> Result<Siteswap> {
    let (body, base) = strip_parens(s);
    let vals: Vec<i64> = numbers(body, base)?.into_iter().map(|(_, v)| v).collect();
    Siteswap::new(vals)
}

/// A window, with or without the `g:` prefix.
pub fn parse_window(s: &str) -> Result<BoundedAffinePermutation> {
    let t = s.trim_start();
    let lead = s.len() - t.len();
    let (body, base) = match t.strip_prefix("g:") {
        Some(rest) => (rest, lead + 2),
        None => (t, lead),
    };
    let (body, extra) = strip_parens(body);
    let vals: Vec<i64> = numbers(body, base + extra)?.into_iter().map(|(_, v)| v).collect();
    BoundedAffinePermutation::new(vals)
}

/// Either form; a `g:` prefix selects the window form.
pub enum PermInput {
    Siteswap(Siteswap),
    Window(BoundedAffinePermutation),
}

pub fn parse_perm(s: &str) -> Result<PermInput> {
    if s.trim_start().starts_with("g:") {
        parse_window(s).map(PermInput::Window)
    } else {
        parse_siteswap(s).map(PermInput::Siteswap)
    }
}

/// A siteswap given in either form.
pub fn parse_any_siteswap(s: &str) -> Result<Siteswap> {
    match parse_perm(s)? {
        PermInput::Siteswap(f) => Ok(f),
        PermInput::Window(g) => siteswap_from_window(g.window()),
    }
}

/// `{1,2,5}`, `1,2,5` or `125`; `{}` is the empty set.
pub fn parse_column_set(s: &str, n: usize) -> Result<ColumnSet> {
    let t = s.trim();
    let lead = s.len() - s.trim_start().len();
    let (body, base) = match t.strip_prefix('{') {
        Some(rest) => match rest.strip_suffix('}') {
            Some(inner) => (inner, lead + 1),
            None => return Err(perr(lead + t.len(), "missing '}'")),
        },
        None => (t, lead),
    };
    let mut members = Vec::new();
    if !body.trim().is_empty() {
        for (pos, v) in numbers(body, base)? {
            if v < 1 || v > n as i64 {
                return Err(perr(pos, format!("column {v} is outside 1..={n}")));
            }
            members.push(v as usize);
        }
    }
    ColumnSet::new(n, members)
}

/// One-line notation for a permutation of `1..=n`.
pub fn parse_one_line(s: &str) -> Result<Vec<usize>> {
    let (body, base) = strip_parens(s);
    let nums = numbers(body, base)?;
    let n = nums.len();
    let mut seen = vec![false; n + 1];
    let mut out = Vec::with_capacity(n);
    for (pos, v) in nums {
        if v < 1 || v > n as i64 || seen[v as usize] {
            return Err(perr(pos, format!("{v} breaks bijectivity on 1..={n}")));
        }
        seen[v as usize] = true;
        out.push(v as usize);
    }
    Ok(out)
}
