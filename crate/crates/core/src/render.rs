//! Static braid diagrams, one crossing per column.
//!
//! Strand positions run top to bottom; the braid is read left to right.
//! A positive letter `i` draws the strand entering at position `i` over the
//! strand entering at position `i+1`; a negative letter draws it under.

use std::fmt::Write;

use crate::garside::{BraidWord, GarsideError};

pub const CONVENTION: &str =
    "letter i > 0: strand at position i crosses over strand at position i+1; letter -i: under";

const COL: usize = 40;
const ROW: usize = 30;
const MARGIN: usize = 20;

pub fn render_ascii(strands: usize, word: &BraidWord) -> Result<String, GarsideError> {
    word.check_rank(strands.saturating_sub(1))?;
    let rows = 2 * strands - 1;
    let mut grid: Vec<String> = (0..rows)
        .map(|r| {
            if r % 2 == 0 {
                format!("{:>3} --", r / 2 + 1)
            } else {
                "      ".to_string()
            }
        })
        .collect();
    for &l in word.letters() {
        let top = 2 * (l.unsigned_abs() as usize - 1);
        for (r, line) in grid.iter_mut().enumerate() {
            let cell = if r == top {
                "\\ /-"
            } else if r == top + 1 {
                if l > 0 {
                    " \\  "
                } else {
                    " /  "
                }
            } else if r == top + 2 {
                "/ \\-"
            } else if r % 2 == 0 {
                "----"
            } else {
                "    "
            };
            line.push_str(cell);
        }
    }
    let mut out = String::new();
    writeln!(out, "# braid on {strands} strands: {word}").unwrap();
    writeln!(out, "# {CONVENTION}").unwrap();
    for line in grid {
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
    Ok(out)
}

pub fn render_svg(strands: usize, word: &BraidWord) -> Result<String, GarsideError> {
    word.check_rank(strands.saturating_sub(1))?;
    let width = 2 * MARGIN + COL * word.len().max(1);
    let height = 2 * MARGIN + ROW * (strands - 1);
    let y = |p: usize| MARGIN + ROW * (p - 1);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, "<!-- braid on {strands} strands: {word} -->").unwrap();
    writeln!(out, "<!-- {CONVENTION} -->").unwrap();
    writeln!(out, r#"<g stroke="black" stroke-width="2" fill="none">"#).unwrap();
    if word.is_empty() {
        for p in 1..=strands {
            writeln!(out, r#"<line x1="{MARGIN}" y1="{0}" x2="{1}" y2="{0}"/>"#, y(p), width - MARGIN).unwrap();
        }
    }
    for (c, &l) in word.letters().iter().enumerate() {
        let x0 = MARGIN + COL * c;
        let x1 = x0 + COL;
        let i = l.unsigned_abs() as usize;
        for p in (1..=strands).filter(|&p| p != i && p != i + 1) {
            writeln!(out, r#"<line x1="{x0}" y1="{0}" x2="{x1}" y2="{0}"/>"#, y(p)).unwrap();
        }
        let (ya, yb) = (y(i), y(i + 1));
        // over strand runs (x0, over_from) -> (x1, over_to)
        let (over_from, over_to) = if l > 0 { (ya, yb) } else { (yb, ya) };
        let (under_from, under_to) = (over_to, over_from);
        let lerp = |a: usize, b: usize, num: usize| (a * (10 - num) + b * num) as f64 / 10.0;
        writeln!(out, r#"<g class="crossing" data-letter="{l}">"#).unwrap();
        writeln!(out, r#"<line x1="{x0}" y1="{over_from}" x2="{x1}" y2="{over_to}"/>"#).unwrap();
        writeln!(
            out,
            r#"<line x1="{x0}" y1="{under_from}" x2="{:.1}" y2="{:.1}"/>"#,
            lerp(x0, x1, 4),
            lerp(under_from, under_to, 4)
        )
        .unwrap();
        writeln!(
            out,
            r#"<line x1="{:.1}" y1="{:.1}" x2="{x1}" y2="{under_to}"/>"#,
            lerp(x0, x1, 6),
            lerp(under_from, under_to, 6)
        )
        .unwrap();
        writeln!(out, "</g>").unwrap();
    }
    writeln!(out, "</g>\n</svg>").unwrap();
    Ok(out)
}
