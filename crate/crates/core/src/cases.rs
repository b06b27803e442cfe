//! Rebuilds the degree-two shadows from the tangles such a shadow must
//! contain. Case 1 starts from a half-curve of length four. Case 2 starts from
//! two disjoint half-curves of length two, and Case 3 from a single one whose
//! outside is a tangle of two segments.
//!
//! Each configuration is completed in every way its crossing rules allow on a
//! planar map, then closed up and measured.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::census::CensusEntry;
use crate::classify::Report;
use crate::error::{Error, Result};
use crate::pmap::{add_circle, route, to_diagram, Drawing, LoopTangle, Rules, Slot, Tag};
use crate::table::KnotTable;

/// A perfect matching of boundary labels, each pair written low-high and the
/// pairs sorted.
pub type Matching = Vec<(u8, u8)>;

/// Matchings of `1..=2m` that close into a single cycle together with
/// `inner`, in lexicographic order.
pub fn connections(m: u8, inner: &[(u8, u8)]) -> Vec<Matching> {
    fn go(free: &[u8], cur: &mut Matching, out: &mut Vec<Matching>) {
        let Some(&a) = free.first() else {
            out.push(cur.clone());
            return;
        };
        for i in 1..free.len() {
            let b = free[i];
            let mut rest = free.to_vec();
            rest.remove(i);
            rest.remove(0);
            cur.push((a, b));
            go(&rest, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    go(&(1..=2 * m).collect::<Vec<_>>(), &mut Vec::new(), &mut all);
    all.retain(|mt| single_cycle(2 * m, inner, mt));
    all
}

fn single_cycle(size: u8, inner: &[(u8, u8)], outer: &[(u8, u8)]) -> bool {
    let partner = |pairs: &[(u8, u8)], x: u8| {
        pairs.iter().find_map(|&(a, b)| if a == x { Some(b) } else if b == x { Some(a) } else { None })
    };
    let (mut x, mut steps) = (1u8, 0);
    loop {
        x = partner(inner, x).expect("inner pairs cover the labels");
        x = partner(outer, x).expect("outer pairs cover the labels");
        steps += 2;
        if x == 1 {
            return steps == size as usize;
        }
    }
}

/// The image of a matching under `x -> size + 1 - x`.
pub fn reflect(size: u8, m: &[(u8, u8)]) -> Matching {
    let mut out: Matching = m
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (size + 1 - a, size + 1 - b);
            (a.min(b), a.max(b))
        })
        .collect();
    out.sort();
    out
}

/// Full matchings grouped into reflection classes, each class listed with
/// its lexicographically least member first.
pub fn reflection_classes(size: u8, all: &[Matching]) -> Vec<Vec<Matching>> {
    let mut classes: BTreeMap<Matching, Vec<Matching>> = BTreeMap::new();
    for m in all {
        let r = reflect(size, m);
        let key = m.clone().min(r.clone());
        let class = classes.entry(key).or_default();
        for x in [m.clone(), r] {
            if !class.contains(&x) {
                class.push(x);
            }
        }
    }
    classes
        .into_values()
        .map(|mut c| {
            c.sort();
            c
        })
        .collect()
}

pub fn letter(i: usize, upper: bool) -> char {
    let base = if upper { b'A' } else { b'a' };
    (base + i as u8) as char
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedShadow {
    pub name: String,
    pub entry: CensusEntry,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LengthFourTangle {
    /// "1A", "1B" or "1C"
    pub name: String,
    pub inner: Matching,
    pub crossings: usize,
    pub connections: Vec<Matching>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CaseReport {
    pub tangles: Vec<LengthFourTangle>,
    /// Every completion of every length-four tangle, by connection letter.
    pub case1: Vec<NamedShadow>,
    pub case2_connections: Vec<Matching>,
    pub case2_classes: Vec<Vec<Matching>>,
    /// Reduced completions in each class, named by class letter and index.
    pub case2: Vec<NamedShadow>,
    pub case3_connections: Vec<Matching>,
    pub case3: Vec<NamedShadow>,
    /// Reduced shadows of degree two over all cases, one per canonical code.
    pub degree_two: Vec<CensusEntry>,
}

impl CaseReport {
    pub fn find(&self, name: &str) -> Option<&NamedShadow> {
        self.case1.iter().chain(&self.case2).chain(&self.case3).find(|s| s.name == name)
    }
}

const UNBOUNDED: usize = usize::MAX;

/// Draws the segments one after another, each from the first slot to the
/// second.
fn draw_all(start: Drawing, segments: &[(usize, Slot, Slot)], rules: Rules) -> Vec<Drawing> {
    let mut layer = vec![start];
    for &(id, a, b) in segments {
        layer = layer.iter().flat_map(|d| route(d, id, a, b, rules)).collect();
    }
    layer
}

/// Distinct closed shadows in drawing order of first appearance, keyed by
/// canonical code.
fn close_all(drawings: &[Drawing], table: &KnotTable) -> Result<Vec<CensusEntry>> {
    let mut seen = BTreeMap::new();
    for d in drawings {
        let Ok(p) = to_diagram(&d.map) else { continue };
        let code = p.canonical_code();
        if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(code) {
            e.insert(CensusEntry::from_shadow(&p, table)?);
        }
    }
    Ok(seen.into_values().collect())
}

/// Slots by boundary label (1-based) for a tangle whose circle has been added.
fn slots_by_label(tips: &[(usize, Slot)]) -> Vec<Slot> {
    tips.iter().map(|&(_, s)| s).collect()
}

fn segments_for(m: &[(u8, u8)], slots: &[Slot], first_id: usize) -> Vec<(usize, Slot, Slot)> {
    m.iter()
        .enumerate()
        .map(|(i, &(a, b))| (first_id + i, slots[a as usize - 1], slots[b as usize - 1]))
        .collect()
}

fn name_variants(prefix: &str, entries: Vec<CensusEntry>, out: &mut Vec<NamedShadow>) {
    let single = entries.len() == 1;
    for (i, entry) in entries.into_iter().enumerate() {
        let name = if single { prefix.to_string() } else { format!("{prefix}{}", i + 1) };
        out.push(NamedShadow { name, entry });
    }
}

/// Inner pairings of the four loop points, as boundary labels 2..5.
pub const LENGTH_FOUR_INNER: [(&str, [(u8, u8); 2]); 3] =
    [("1A", [(2, 3), (4, 5)]), ("1B", [(2, 5), (3, 4)]), ("1C", [(2, 4), (3, 5)])];

fn case1(table: &KnotTable) -> Result<(Vec<LengthFourTangle>, Vec<NamedShadow>)> {
    let mut tangles = Vec::new();
    let mut shadows = Vec::new();
    for (name, pairs) in LENGTH_FOUR_INNER {
        let t = LoopTangle::new(4);
        // boundary label of p_i: labels run 1 = end, 2..5 = p_4..p_1, 6 = end
        let slot_of = |label: u8| t.inner[(5 - label) as usize];
        let inner: Vec<(usize, Slot, Slot)> =
            pairs.iter().enumerate().map(|(i, &(a, b))| (i, slot_of(a), slot_of(b))).collect();
        let rules = Rules { max_per_segment: UNBOUNDED, max_per_pair: 1 };
        let drawn = draw_all(Drawing::new(t.map.clone(), 5), &inner, rules);
        debug_assert_eq!(drawn.len(), 1, "one way to fill the loop");
        let full_inner: Matching = {
            let mut m = vec![(1, 6)];
            m.extend(pairs);
            m.sort();
            m
        };
        let conns = connections(3, &full_inner);
        for d in &drawn {
            let mut map = d.map.clone();
            let tips = add_circle(&mut map, t.ends[0]);
            let slots = slots_by_label(&tips);
            let crossings = (0..map.vertex_count()).filter(|&v| map.degree(v) == 4).count();
            for (i, m) in conns.iter().enumerate() {
                let mut base = d.clone();
                base.map = map.clone();
                let done = draw_all(base, &segments_for(m, &slots, 2), rules);
                name_variants(&format!("{name}{}", letter(i, false)), close_all(&done, table)?, &mut shadows);
            }
            tangles.push(LengthFourTangle {
                name: name.to_string(),
                inner: full_inner.clone(),
                crossings,
                connections: conns.clone(),
            });
        }
    }
    Ok((tangles, shadows))
}

/// A length-two tangle with its inner arc drawn and its boundary circle
/// added; tips in circle order start at an end of the looping strand.
fn two_tangle(mirrored: bool) -> (crate::pmap::PMap, Vec<(usize, Slot)>) {
    let t = LoopTangle::new(2);
    let rules = Rules { max_per_segment: 0, max_per_pair: 0 };
    let drawn = route(&Drawing::new(t.map.clone(), 1), 0, t.inner[0], t.inner[1], rules);
    let mut map = drawn.into_iter().next().expect("the inner arc").map;
    if mirrored {
        map.mirror();
    }
    let tips = add_circle(&mut map, t.ends[0]);
    (map, tips)
}

/// Inner pairs of the two length-two tangles on labels 1..8.
pub const TWO_TANGLE_INNER: [(u8, u8); 4] = [(1, 8), (2, 7), (3, 6), (4, 5)];

/// Connections, their reflection classes and the named outputs.
type CaseTwo = (Vec<Matching>, Vec<Vec<Matching>>, Vec<NamedShadow>);

fn case2(table: &KnotTable) -> Result<CaseTwo> {
    let conns = connections(4, &TWO_TANGLE_INNER);
    let classes = reflection_classes(8, &conns);
    let rules = Rules { max_per_segment: 2, max_per_pair: 1 };
    let mut out = Vec::new();
    for (ci, class) in classes.iter().enumerate() {
        let mut found: BTreeMap<String, CensusEntry> = BTreeMap::new();
        for m in class {
            for chiral in [false, true] {
                for e in complete_pair(m, chiral, rules, table)? {
                    if e.reduced {
                        found.entry(e.code.clone()).or_insert(e);
                    }
                }
            }
        }
        for (i, e) in found.into_values().enumerate() {
            out.push(NamedShadow { name: format!("2{}{}", letter(ci, true), letter(i, false)), entry: e });
        }
    }
    Ok((conns, classes, out))
}

/// Both tangles side by side: labels 1, 2, 7, 8 on the first and 3..6 on the
/// second, joined across by the first pair that links them.
fn complete_pair(m: &[(u8, u8)], chiral: bool, rules: Rules, table: &KnotTable) -> Result<Vec<CensusEntry>> {
    let (mut map, tips1) = two_tangle(false);
    let (second, tips2) = two_tangle(chiral);
    let (he, _) = map.absorb(&second);
    let mut slots = vec![Slot { after: 0 }; 8];
    for (label, &(_, s)) in [1, 2, 7, 8].iter().zip(&tips1) {
        slots[label - 1] = s;
    }
    for (label, &(_, s)) in [3, 4, 5, 6].iter().zip(&tips2) {
        slots[label - 1] = Slot { after: s.after + he };
    }
    let left = |x: u8| [1, 2, 7, 8].contains(&x);
    let bridge = m.iter().position(|&(a, b)| left(a) != left(b)).expect("a knot joins both tangles");
    let (a, b) = m[bridge];
    map.connect(slots[a as usize - 1], slots[b as usize - 1], Tag::Segment(bridge));
    let rest: Vec<(usize, Slot, Slot)> = segments_for(m, &slots, 0).into_iter().filter(|s| s.0 != bridge).collect();
    let done = draw_all(Drawing::new(map, 4), &rest, rules);
    close_all(&done, table)
}

fn case3(table: &KnotTable) -> Result<(Vec<Matching>, Vec<NamedShadow>)> {
    let conns = connections(2, &[(1, 4), (2, 3)]);
    let rules = Rules { max_per_segment: 3, max_per_pair: 3 };
    let (map, tips) = two_tangle(false);
    let slots = slots_by_label(&tips);
    let mut found: BTreeMap<String, CensusEntry> = BTreeMap::new();
    for m in &conns {
        let done = draw_all(Drawing::new(map.clone(), 2), &segments_for(m, &slots, 0), rules);
        for e in close_all(&done, table)? {
            if e.reduced {
                found.entry(e.code.clone()).or_insert(e);
            }
        }
    }
    let mut by_size: Vec<CensusEntry> = found.into_values().collect();
    by_size.sort_by(|a, b| (a.n, a.wd, &a.code).cmp(&(b.n, b.wd, &b.code)));
    let out = by_size
        .into_iter()
        .enumerate()
        .map(|(i, entry)| NamedShadow { name: format!("3{}", letter(i, true)), entry })
        .collect();
    Ok((conns, out))
}

/// Runs all three configurations and collects the reduced degree-two results.
pub fn enumerate_by_cases(table: &KnotTable) -> Result<CaseReport> {
    let (tangles, case1) = case1(table)?;
    let (case2_connections, case2_classes, case2) = case2(table)?;
    let (case3_connections, case3) = case3(table)?;
    let mut union: BTreeMap<String, CensusEntry> = BTreeMap::new();
    for s in case1.iter().chain(&case2).chain(&case3) {
        if s.entry.reduced && s.entry.wd == 2 {
            union.entry(s.entry.code.clone()).or_insert_with(|| s.entry.clone());
        }
    }
    let mut degree_two: Vec<CensusEntry> = union.into_values().collect();
    degree_two.sort_by(|a, b| (a.n, &a.code).cmp(&(b.n, &b.code)));
    Ok(CaseReport { tangles, case1, case2_connections, case2_classes, case2, case3_connections, case3, degree_two })
}

/// Checks the case construction against a census reaching at least eight
/// crossings.
pub fn verify_cases(r: &CaseReport, census: &[CensusEntry]) -> Report {
    let mut out = Report::default();
    let sizes: Vec<String> = r.tangles.iter().map(|t| format!("{}:{}", t.name, t.crossings)).collect();
    out.check("three length-four tangles", r.tangles.len() == 3, sizes.join(" "));
    let eight = r.tangles.iter().all(|t| t.connections.len() == 8);
    out.check("eight connections per length-four tangle", eight, "");
    out.check(
        "48 connections of two length-two tangles",
        r.case2_connections.len() == 48,
        format!("found {}", r.case2_connections.len()),
    );
    out.check(
        "24 reflection classes",
        r.case2_classes.len() == 24,
        format!("found {}", r.case2_classes.len()),
    );
    out.check(
        "two connections around one length-two tangle",
        r.case3_connections.len() == 2,
        format!("found {}", r.case3_connections.len()),
    );
    let max = census.iter().map(|e| e.n).max().unwrap_or(0);
    let beyond: Vec<&CensusEntry> = r.degree_two.iter().filter(|e| e.n > max).collect();
    out.check(
        "no case result beyond the census",
        beyond.is_empty(),
        beyond.iter().map(|e| e.code.as_str()).collect::<Vec<_>>().join(" "),
    );
    let mut ours: Vec<&str> = r.degree_two.iter().map(|e| e.code.as_str()).collect();
    let mut theirs: Vec<&str> = census.iter().filter(|e| e.wd == 2).map(|e| e.code.as_str()).collect();
    ours.sort();
    theirs.sort();
    out.check(
        "case results equal the census shadows of degree two",
        max >= 8 && ours == theirs,
        format!("{} from cases, {} in census", ours.len(), theirs.len()),
    );
    out
}

/// One named projection as stored in the figures file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Figure {
    pub name: String,
    pub pd: String,
}

/// Every named projection of the report, rendered as a shadow PD code.
pub fn figures(r: &CaseReport) -> Result<Vec<Figure>> {
    r.case1
        .iter()
        .chain(&r.case2)
        .chain(&r.case3)
        .map(|s| Ok(Figure { name: s.name.clone(), pd: s.entry.shadow()?.render_pd() }))
        .collect()
}

/// Parses a figures file, one JSON object per line.
pub fn parse_figures(text: &str) -> Result<Vec<Figure>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| Error::Parse(format!("figure record: {e}"))))
        .collect()
}
