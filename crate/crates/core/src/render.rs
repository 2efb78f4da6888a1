//! Text and SVG pictures of one period of a pipe dream.
//!
//! The text form starts with `f=<siteswap> lambda=<set>`, then a line of
//! column labels, then one line per row, north first, as
//! `<row label> | <tiles>` with `+` for a cross, `·` for an elbow and a
//! blank outside the strip. [`parse_text`] reads it back.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::io::{parse_column_set, parse_siteswap};
use crate::permcore::siteswap_of;
use crate::pipedream::{readout, PipeDream};
use crate::shape::{strip, StripShape};

/// Columns spanned by the fundamental rows and the tile layout per row.
struct Layout {
    width: usize,
    /// `(row label, [(column offset, reading index)])`, north first.
    rows: Vec<(usize, Vec<(usize, usize)>)>,
    col_labels: Vec<usize>,
}

fn layout(shape: &StripShape) -> Layout {
    let k = shape.k() as i64;
    let c0 = (0..k).map(|r| shape.row_start(r).0).min().unwrap_or(0);
    let c1 = (0..k).map(|r| shape.row_start(r).0 + (shape.n() - shape.k()) as i64).max().unwrap_or(0);
    let mut rows = Vec::new();
    for r in 0..k {
        let (start, label) = shape.row_start(r);
        let tiles = (0..(shape.n() - shape.k()) as i64)
            .map(|d| {
                let (idx, _) = shape.locate(r, start + d).expect("row cell in strip");
                ((start + d - c0) as usize, idx)
            })
            .collect();
        rows.push((label as usize, tiles));
    }
    let w = shape.n() as i64;
    let col_labels = (c0..c1).map(|c| ((shape.column_floor(c).1 - 1).rem_euclid(w) + 1) as usize).collect();
    Layout { width: (c1 - c0) as usize, rows, col_labels }
}

fn label_width(n: usize) -> usize {
    n.to_string().len()
}

pub fn to_text(pd: &PipeDream) -> Result<String> {
    let shape = pd.shape();
    let f = siteswap_of(&readout(pd)?);
    let lay = layout(shape);
    let lw = label_width(shape.n());
    let mut out = String::new();
    writeln!(out, "f={f} lambda={}", shape.lambda()).unwrap();
    let head: Vec<String> = lay.col_labels.iter().map(|c| format!("{c:>lw$}")).collect();
    writeln!(out, "{:lw$}   {}", "", head.join(" ")).unwrap();
    for (label, tiles) in &lay.rows {
        let mut cells = vec![" ".repeat(lw); lay.width];
        for &(off, idx) in tiles {
            cells[off] = format!("{:>lw$}", if pd.is_cross(idx) { "+" } else { "·" });
        }
        writeln!(out, "{label:>lw$} | {}", cells.join(" ").trim_end()).unwrap();
    }
    Ok(out)
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos: line, msg: msg.into() }
}

/// Read back [`to_text`]. Parse positions are line numbers (from 1).
pub fn parse_text(text: &str) -> Result<PipeDream> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| perr(1, "empty input"))?;
    let rest = header.strip_prefix("f=").ok_or_else(|| perr(1, "expected 'f='"))?;
    let (fs, ls) = rest.split_once(" lambda=").ok_or_else(|| perr(1, "expected ' lambda='"))?;
    let f = parse_siteswap(fs)?;
    let lambda = parse_column_set(ls, f.n())?;
    let shape = Arc::new(strip(lambda.k(), lambda.n(), &lambda)?);
    let lay = layout(&shape);
    let lw = label_width(shape.n());
    lines.next().ok_or_else(|| perr(2, "missing column labels"))?;
    let mut crosses = vec![false; shape.len()];
    for (r, (label, tiles)) in lay.rows.iter().enumerate() {
        let line_no = r + 3;
        let line = lines.next().ok_or_else(|| perr(line_no, "missing row"))?;
        let (lab, body) = line.split_once(" | ").ok_or_else(|| perr(line_no, "expected '<label> | '"))?;
        if lab.trim().parse::<usize>().ok() != Some(*label) {
            return Err(perr(line_no, format!("expected row label {label}")));
        }
        let chars: Vec<char> = body.chars().collect();
        for &(off, idx) in tiles {
            let at = off * (lw + 1) + lw - 1;
            match chars.get(at) {
                Some('+') => crosses[idx] = true,
                Some('·') | Some('.') => {}
                other => return Err(perr(line_no, format!("bad tile {other:?} in column {}", off + 1))),
            }
        }
    }
    let pd = PipeDream::new(shape, crosses)?;
    if readout(&pd)? != f.window() {
        return Err(perr(1, format!("tiles do not read out to {f}")));
    }
    Ok(pd)
}

/// The letters of one period of the strip, laid out like [`to_text`].
pub fn shape_text(shape: &StripShape) -> String {
    let lay = layout(shape);
    let lw = label_width(shape.n());
    let mut out = String::new();
    let head: Vec<String> = lay.col_labels.iter().map(|c| format!("{c:>lw$}")).collect();
    writeln!(out, "{:lw$}   {}", "", head.join(" ")).unwrap();
    for (label, tiles) in &lay.rows {
        let mut cells = vec![" ".repeat(lw); lay.width];
        for &(off, idx) in tiles {
            cells[off] = format!("{:>lw$}", shape.cells()[idx].letter);
        }
        writeln!(out, "{label:>lw$} | {}", cells.join(" ").trim_end()).unwrap();
    }
    out
}

const CELL: i64 = 40;
const MARGIN: i64 = 30;

/// An SVG picture: one `<rect class="cell">` per tile, crosses as two
/// `<line>`s, elbows as two quarter-circle `<path>`s.
pub fn to_svg(pd: &PipeDream) -> Result<String> {
    let shape = pd.shape();
    let f = siteswap_of(&readout(pd)?);
    let lay = layout(shape);
    let w = MARGIN * 2 + CELL * lay.width as i64;
    let h = MARGIN * 2 + CELL * lay.rows.len() as i64;
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#).unwrap();
    writeln!(s, "  <title>f={f} lambda={}</title>", shape.lambda()).unwrap();
    writeln!(s, r#"  <g fill="none" stroke="black" stroke-width="2">"#).unwrap();
    let half = CELL / 2;
    for (r, (label, tiles)) in lay.rows.iter().enumerate() {
        let y = MARGIN + CELL * r as i64;
        writeln!(s, r#"    <text x="{}" y="{}" font-size="12" stroke="none" fill="black">{label}</text>"#, 4, y + half + 4).unwrap();
        for &(off, idx) in tiles {
            let x = MARGIN + CELL * off as i64;
            let kind = if pd.is_cross(idx) { "cross" } else { "elbow" };
            writeln!(s, r#"    <rect class="cell {kind}" x="{x}" y="{y}" width="{CELL}" height="{CELL}" stroke="gray" stroke-width="1"/>"#).unwrap();
            if pd.is_cross(idx) {
                writeln!(s, r#"    <line x1="{}" y1="{y}" x2="{}" y2="{}"/>"#, x + half, x + half, y + CELL).unwrap();
                writeln!(s, r#"    <line x1="{x}" y1="{}" x2="{}" y2="{}"/>"#, y + half, x + CELL, y + half).unwrap();
            } else {
                writeln!(s, r#"    <path d="M {} {} A {half} {half} 0 0 1 {} {}"/>"#, x + half, y + CELL, x + CELL, y + half).unwrap();
                writeln!(s, r#"    <path d="M {x} {} A {half} {half} 0 0 0 {} {y}"/>"#, y + half, x + half).unwrap();
            }
        }
    }
    for (off, c) in lay.col_labels.iter().enumerate() {
        let x = MARGIN + CELL * off as i64 + half - 4;
        writeln!(s, r#"    <text x="{x}" y="{}" font-size="12" stroke="none" fill="black">{c}</text>"#, MARGIN - 8).unwrap();
    }
    writeln!(s, "  </g>").unwrap();
    writeln!(s, "</svg>").unwrap();
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::ColumnSet;
    use crate::pipedream::enumerate;

    #[test]
    fn square_text() {
        let f = parse_siteswap("2312").unwrap();
        let lam = ColumnSet::new(4, vec![1, 2]).unwrap();
        for pd in enumerate(&f, &lam).unwrap() {
            let t = to_text(&pd).unwrap();
            assert_eq!(t.lines().count(), 4);
            assert_eq!(t.matches('+').count(), 1);
            assert_eq!(parse_text(&t).unwrap(), pd);
        }
    }

    #[test]
    fn svg_has_one_rect_per_cell() {
        let f = parse_siteswap("342333").unwrap();
        let lam = ColumnSet::new(6, vec![1, 2, 5]).unwrap();
        let pd = enumerate(&f, &lam).unwrap().remove(0);
        let svg = to_svg(&pd).unwrap();
        assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
        assert_eq!(svg.matches("<rect class=\"cell").count(), 9);
        assert_eq!(svg.matches("<rect class=\"cell cross\"").count(), pd.num_crosses());
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn bad_text_is_rejected() {
        assert!(matches!(parse_text("g=2312 lambda={1,2}\n"), Err(Error::Parse { pos: 1, .. })));
        let f = parse_siteswap("2312").unwrap();
        let lam = ColumnSet::new(4, vec![1, 2]).unwrap();
        let t = to_text(&enumerate(&f, &lam).unwrap()[0]).unwrap().replace('+', "x");
        assert!(matches!(parse_text(&t), Err(Error::Parse { .. })));
    }
}
