//! Minimal warping degree of prime alternating knots and the verification
//! drivers built on the census.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::census::CensusEntry;
use crate::error::{Error, Result};
use crate::table::{knot_order, KnotTable};

/// The prime alternating knots of minimal warping degree two.
pub const DEGREE_TWO_KNOTS: [&str; 9] = ["5_1", "5_2", "6_1", "6_2", "6_3", "7_6", "7_7", "8_12", "8_18"];

/// Expected md for every prime alternating knot with at most eight crossings.
pub fn expected_md_table() -> Vec<(String, usize)> {
    let mut out = Vec::new();
    let mut put = |name: String, md: usize| out.push((name, md));
    put("3_1".into(), 1);
    put("4_1".into(), 1);
    for name in ["5_1", "5_2", "6_1", "6_2", "6_3"] {
        put(name.into(), 2);
    }
    for i in 1..=5 {
        put(format!("7_{i}"), 3);
    }
    put("7_6".into(), 2);
    put("7_7".into(), 2);
    for j in (1..=17).filter(|&j| j != 12) {
        put(format!("8_{j}"), 3);
    }
    put("8_12".into(), 2);
    put("8_18".into(), 2);
    out.sort_by_key(|a| knot_order(&a.0));
    out
}

/// md(K): least d(P) over reduced shadows with c(K) crossings whose
/// alternating diagrams are K. Only defined for prime alternating knots,
/// whose minimal diagrams are exactly the reduced alternating ones.
pub fn minimal_warping_degree(name: &str, census: &[CensusEntry], table: &KnotTable) -> Result<usize> {
    let entry = table.get(name).ok_or_else(|| Error::UnknownKnot(name.into()))?;
    if !entry.alternating {
        return Err(Error::NotAlternating);
    }
    let c = entry.record.crossings;
    if !census.iter().any(|e| e.n == c) {
        return Err(Error::CensusBound(c));
    }
    census
        .iter()
        .filter(|e| e.n == c && e.knots.iter().any(|k| k == name))
        .map(|e| e.wd)
        .min()
        .ok_or_else(|| Error::Table(format!("no census shadow carries {name}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

fn upto(census: &[CensusEntry], n: usize) -> impl Iterator<Item = &CensusEntry> {
    census.iter().filter(move |e| e.n <= n)
}

/// Names of the prime knots carried by degree-two shadows with at most eight
/// crossings.
pub fn degree_two_prime_knots(census: &[CensusEntry]) -> BTreeSet<String> {
    upto(census, 8)
        .filter(|e| e.wd == 2 && e.prime)
        .flat_map(|e| e.knots.iter().cloned())
        .collect()
}

/// The census entry of the granny knot's alternating diagram: the composite
/// of two trefoil shadows whose alternating diagrams have writhe of absolute
/// value six.
pub fn granny_entry(census: &[CensusEntry]) -> Result<Option<&CensusEntry>> {
    for e in census.iter().filter(|e| e.n == 6 && !e.prime) {
        let (a, _) = e.shadow()?.alternating_pair()?;
        if a.writhe()?.abs() == 6 {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

pub fn verify_prop16(census: &[CensusEntry]) -> Result<Report> {
    let mut r = Report::default();
    let max = census.iter().map(|e| e.n).max().unwrap_or(0);
    r.check("census reaches eight crossings", max >= 8, format!("largest n = {max}"));
    let two: Vec<&CensusEntry> = upto(census, 8).filter(|e| e.wd == 2).collect();
    let prime = two.iter().filter(|e| e.prime).count();
    r.check("sixteen shadows of degree two", two.len() == 16, format!("found {}", two.len()));
    r.check("nine of them prime", prime == 9, format!("found {prime}"));
    r.check("seven of them composite", two.len() - prime == 7, format!("found {}", two.len() - prime));
    r.check("all reduced", two.iter().all(|e| e.reduced), "");
    let zero = upto(census, 8).filter(|e| e.wd == 0).count();
    r.check("no shadow of degree zero", zero == 0, format!("found {zero}"));
    let lengths: BTreeSet<usize> = two.iter().map(|e| e.length).collect();
    r.check(
        "degree-two lengths lie in {2, 4}",
        lengths.iter().all(|l| [2, 4].contains(l)),
        format!("{lengths:?}"),
    );
    let granny = granny_entry(census)?;
    r.check(
        "granny shadow is a composite of degree two",
        granny.is_some_and(|g| g.wd == 2 && !g.prime),
        granny.map_or("granny shadow not in census".to_string(), |g| format!("{} d = {}", g.code, g.wd)),
    );
    Ok(r)
}

pub fn verify_theorem1(census: &[CensusEntry]) -> Report {
    let mut r = Report::default();
    let found = degree_two_prime_knots(census);
    let expected: BTreeSet<String> = DEGREE_TWO_KNOTS.iter().map(|s| s.to_string()).collect();
    r.check(
        "prime knots of degree two",
        found == expected,
        found.iter().cloned().collect::<Vec<_>>().join(", "),
    );
    r
}

/// md for every prime alternating knot up to eight crossings, and when the
/// census reaches nine crossings, md >= 3 for every nine-crossing one.
pub fn verify_md_table(census: &[CensusEntry], table: &KnotTable) -> Report {
    let mut r = Report::default();
    for (name, expected) in expected_md_table() {
        match minimal_warping_degree(&name, census, table) {
            Ok(md) => r.check(format!("md({name}) = {expected}"), md == expected, format!("computed {md}")),
            Err(e) => r.check(format!("md({name}) = {expected}"), false, e.to_string()),
        }
    }
    if census.iter().any(|e| e.n == 9) {
        let low: Vec<String> = table
            .entries()
            .iter()
            .filter(|e| e.record.crossings == 9 && e.alternating)
            .filter_map(|e| {
                let md = minimal_warping_degree(&e.record.name, census, table).ok()?;
                (md <= 2).then(|| format!("{} ({md})", e.record.name))
            })
            .collect();
        r.check("no nine-crossing alternating knot has md <= 2", low.is_empty(), low.join(", "));
    }
    r
}

/// The nine-knot set together with the md table and the granny shadow.
pub fn verify_classification(census: &[CensusEntry], table: &KnotTable) -> Result<Report> {
    for name in DEGREE_TWO_KNOTS {
        if table.get(name).is_none() {
            return Err(Error::UnknownKnot(name.into()));
        }
    }
    let mut r = verify_theorem1(census);
    r.extend(verify_md_table(census, table));
    let granny = granny_entry(census)?;
    r.check(
        "granny shadow has d(P) = 2",
        granny.is_some_and(|g| g.wd == 2),
        granny.map_or("missing".to_string(), |g| g.knots.join(", ")),
    );
    Ok(r)
}
