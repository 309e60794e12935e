//! Text formats for polylines, OV instances and Cell Reachability instances.
//!
//! Polylines are one vertex per line with comma-separated coordinates; lines
//! starting with `#` are comments. Numbers are written in the shortest form
//! that parses back to the same `f64`.

use std::fmt::Write as _;

use crate::cell_reach::CellReachInstance;
use crate::error::{Error, Result};
use crate::geometry::Polyline;
use crate::hardness::OvInstance;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_polyline(text: &str) -> Result<Polyline> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| parse_error(idx + 1, format!("not a finite number: {tok:?}")))
            })
            .collect::<Result<Vec<f64>>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(parse_error(
                    idx + 1,
                    format!("ragged arity: expected {} coordinates, found {}", first.len(), row.len()),
                ));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::EmptyPolyline);
    }
    Polyline::from_rows(rows)
}

pub fn format_polyline(curve: &Polyline) -> String {
    let mut out = String::new();
    for v in curve.vertices() {
        for (k, x) in v.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            write!(out, "{x:?}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Three blocks of `n` bit strings each, separated by blank lines, in the
/// order `A`, `B`, `C`.
pub fn parse_ov_instance(text: &str) -> Result<OvInstance> {
    let mut blocks: Vec<Vec<Vec<bool>>> = vec![Vec::new()];
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !blocks.last().unwrap().is_empty() {
                blocks.push(Vec::new());
            }
            continue;
        }
        let bits = line
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(parse_error(idx + 1, format!("unexpected character {other:?} in bit string"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        blocks.last_mut().unwrap().push(bits);
    }
    if blocks.last().is_some_and(|b| b.is_empty()) {
        blocks.pop();
    }
    if blocks.len() != 3 {
        return Err(parse_error(
            0,
            format!("expected 3 blocks of vectors, found {}", blocks.len()),
        ));
    }
    let c = blocks.pop().unwrap();
    let b = blocks.pop().unwrap();
    let a = blocks.pop().unwrap();
    OvInstance::new(a, b, c)
}

pub fn format_ov_instance(inst: &OvInstance) -> String {
    let block = |set: &[Vec<bool>]| -> String {
        set.iter()
            .map(|v| v.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>() + "\n")
            .collect()
    };
    format!("{}\n{}\n{}", block(inst.a()), block(inst.b()), block(inst.c()))
}

pub fn parse_cell_reach(text: &str) -> Result<CellReachInstance> {
    serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.to_string()))
}

pub fn format_cell_reach(inst: &CellReachInstance) -> String {
    serde_json::to_string_pretty(inst).expect("instances always serialize")
}
