//! PD-code text format.
//!
//! A diagram is a whitespace-separated list of records `X(a,b,c,d)`: edge
//! labels 1..2n around the crossing counterclockwise, starting at the incoming
//! under-strand (so the under-strand runs `a -> c`). Shadows use `P(a,b,c,d)`
//! records with the same port order; the traversal direction is taken from the
//! first record's `a -> c` strand. The single token `U` is the unknot.

use std::sync::OnceLock;

use regex::Regex;

use crate::diagram::Diagram;
use crate::error::{Error, Result};

fn record_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(r"^([XP])\[?\(?\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)?\]?$")
            .expect("static regex")
    })
}

/// Splits the text into record tokens, tolerating whitespace inside records.
fn tokens(text: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for ch in text.chars() {
        match ch {
            '(' | '[' => {
                depth += 1;
                cur.push(ch);
            }
            ')' | ']' => {
                depth = depth.checked_sub(1).ok_or_else(|| Error::Parse("unbalanced ')'".into()))?;
                cur.push(ch);
                if depth == 0 {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c if c.is_whitespace() && depth == 0 => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c if c.is_whitespace() => {}
            c => cur.push(c),
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced '('".into()));
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let toks = tokens(text.trim())?;
    if toks.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    if toks.len() == 1 && toks[0] == "U" {
        return Ok(Diagram::unknot());
    }
    let mut records = Vec::with_capacity(toks.len());
    let mut kind = None;
    for t in &toks {
        let caps = record_re()
            .captures(t)
            .ok_or_else(|| Error::Parse(format!("unrecognised token {t:?}")))?;
        let k = caps[1].chars().next().expect("non-empty");
        match kind {
            None => kind = Some(k),
            Some(prev) if prev != k => return Err(Error::MixedRecords),
            _ => {}
        }
        let mut q = [0usize; 4];
        for (i, slot) in q.iter_mut().enumerate() {
            *slot = caps[i + 2]
                .parse()
                .map_err(|_| Error::Parse(format!("bad label in {t:?}")))?;
        }
        records.push(q);
    }
    let n = records.len();
    let max_label = 2 * n;
    let mut where_used: Vec<Vec<u32>> = vec![Vec::new(); max_label + 1];
    for (c, q) in records.iter().enumerate() {
        for (p, &label) in q.iter().enumerate() {
            if label == 0 || label > max_label {
                return Err(Error::EdgeLabels { expected: max_label, found: label });
            }
            where_used[label].push((4 * c + p) as u32);
        }
    }
    for (label, uses) in where_used.iter().enumerate().skip(1) {
        if uses.len() != 2 {
            return Err(Error::EdgeMultiplicity { label, count: uses.len() });
        }
    }
    let mut glue = vec![0u32; 4 * n];
    for uses in where_used.iter().skip(1) {
        glue[uses[0] as usize] = uses[1];
        glue[uses[1] as usize] = uses[0];
    }
    let is_diagram = kind == Some('X');
    let over = is_diagram.then(|| vec![1u8; n]);
    let d = Diagram::from_glue(glue, over, 0)?;
    if is_diagram {
        let entries: std::collections::HashSet<u32> = d.pass_entries().iter().copied().collect();
        for c in 0..n {
            if !entries.contains(&(4 * c as u32)) {
                return Err(Error::Orientation(c));
            }
        }
    }
    Ok(d)
}

impl std::str::FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_diagram(s)
    }
}
