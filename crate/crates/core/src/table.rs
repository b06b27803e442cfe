//! The bundled knot table and identification by Jones polynomial.
//!
//! Records are JSON lines `{name, c, pd, alternating?, jones?, mirror_of?}`.
//! The Jones polynomial is always recomputed from the PD code; a stored value,
//! when present, must agree up to t <-> 1/t. Entries marked `mirror_of` are
//! aliases of another entry and must have the mirrored invariant. The
//! remaining entries are checked to be injective up to mirror images, so that
//! a lookup names a unique knot.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bracket::jones_polynomial;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::pd::parse_diagram;
use crate::poly::LaurentPolynomial;

const BUNDLED: &str = include_str!("../data/knots.jsonl");

/// Name used for the trivial knot.
pub const UNKNOT: &str = "0_1";
/// Name returned when no table entry (or product of entries) matches.
pub const UNKNOWN: &str = "unknown";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotRecord {
    pub name: String,
    #[serde(rename = "c")]
    pub crossings: usize,
    pub pd: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alternating: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jones: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mirror_of: Option<String>,
}

#[derive(Clone, Debug)]
pub struct KnotEntry {
    pub record: KnotRecord,
    pub diagram: Diagram,
    pub jones: LaurentPolynomial,
    /// Stored flag, or whether the reference diagram is alternating.
    pub alternating: bool,
}

#[derive(Clone, Debug)]
pub struct KnotTable {
    entries: Vec<KnotEntry>,
    /// Jones polynomial, normalised to the lesser of V(t) and V(1/t) -> index.
    by_jones: BTreeMap<LaurentPolynomial, usize>,
}

fn mirror_class(v: &LaurentPolynomial) -> LaurentPolynomial {
    let w = v.invert_variable();
    if w < *v { w } else { v.clone() }
}

impl KnotTable {
    pub fn from_jsonl(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut by_jones = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let record: KnotRecord = serde_json::from_str(line)
                .map_err(|e| Error::Table(format!("line {}: {e}", i + 1)))?;
            let diagram = parse_diagram(&record.pd)
                .map_err(|e| Error::Table(format!("{}: {e}", record.name)))?;
            if diagram.crossing_count() != record.crossings {
                return Err(Error::Table(format!(
                    "{}: PD code has {} crossings, record says {}",
                    record.name,
                    diagram.crossing_count(),
                    record.crossings
                )));
            }
            let computed = jones_polynomial(&diagram)?;
            if let Some(text) = &record.jones {
                let stored = LaurentPolynomial::parse(text, 't')?;
                if computed != stored && computed.invert_variable() != stored {
                    return Err(Error::Table(format!(
                        "{}: stored Jones {text} but PD code gives {}",
                        record.name,
                        computed.render('t')
                    )));
                }
            }
            let alternating = record.alternating.unwrap_or_else(|| diagram.is_alternating());
            let class = mirror_class(&computed);
            match &record.mirror_of {
                Some(base) => {
                    let j = entries
                        .iter()
                        .position(|e: &KnotEntry| &e.record.name == base)
                        .ok_or_else(|| Error::Table(format!("{}: mirror of unknown {base}", record.name)))?;
                    if mirror_class(&entries[j].jones) != class {
                        return Err(Error::Table(format!("{} is not a mirror of {base}", record.name)));
                    }
                }
                None => {
                    if let Some(&j) = by_jones.get(&class) {
                        let other: &KnotEntry = &entries[j];
                        return Err(Error::Table(format!(
                            "{} and {} share a Jones polynomial up to mirror",
                            other.record.name, record.name
                        )));
                    }
                    by_jones.insert(class, entries.len());
                }
            }
            entries.push(KnotEntry { record, diagram, jones: computed, alternating });
        }
        Ok(KnotTable { entries, by_jones })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_jsonl(&std::fs::read_to_string(path)?)
    }

    /// The table shipped with the crate (prime knots up to nine crossings).
    pub fn bundled() -> &'static KnotTable {
        static TABLE: OnceLock<KnotTable> = OnceLock::new();
        TABLE.get_or_init(|| KnotTable::from_jsonl(BUNDLED).expect("bundled table is valid"))
    }

    pub fn entries(&self) -> &[KnotEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&KnotEntry> {
        self.entries.iter().find(|e| e.record.name == name)
    }

    pub fn max_crossings(&self) -> usize {
        self.entries.iter().map(|e| e.record.crossings).max().unwrap_or(0)
    }

    /// Table entry whose Jones polynomial is `v` or its mirror.
    pub fn lookup(&self, v: &LaurentPolynomial) -> Option<&KnotEntry> {
        self.by_jones.get(&mirror_class(v)).map(|&i| &self.entries[i])
    }

    /// Names the knot type of `d` up to mirror image.
    ///
    /// Diagrams with a 2-edge cut are split and identified factor by factor,
    /// giving names such as `3_1 # 3_1`. Only meaningful for knots whose prime
    /// factors are within the table's range.
    pub fn identify(&self, d: &Diagram) -> Result<String> {
        let mut factors = Vec::new();
        self.collect_factors(d, &mut factors)?;
        factors.retain(|f| f != UNKNOT);
        if factors.iter().any(|f| f == UNKNOWN) {
            return Ok(UNKNOWN.into());
        }
        if factors.is_empty() {
            return Ok(UNKNOT.into());
        }
        factors.sort_by_key(|a| knot_order(a));
        Ok(factors.join(" # "))
    }

    fn collect_factors(&self, d: &Diagram, out: &mut Vec<String>) -> Result<()> {
        if d.is_shadow() {
            return Err(Error::ShadowInput);
        }
        if let Some(&(e1, e2)) = d.two_edge_cuts().first() {
            let (a, b) = d.split_at_cut(e1, e2)?;
            self.collect_factors(&a, out)?;
            return self.collect_factors(&b, out);
        }
        let v = jones_polynomial(d)?;
        let name = if v == LaurentPolynomial::one() {
            UNKNOT.to_string()
        } else {
            self.lookup(&v).map_or_else(|| UNKNOWN.to_string(), |e| e.record.name.clone())
        };
        out.push(name);
        Ok(())
    }
}

/// Sort key for Rolfsen names: crossing number, then index.
pub fn knot_order(name: &str) -> (usize, usize, String) {
    let mut it = name.split('_');
    let c = it.next().and_then(|s| s.parse().ok()).unwrap_or(usize::MAX);
    let i = it.next().and_then(|s| s.parse().ok()).unwrap_or(usize::MAX);
    (c, i, name.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_table_loads() {
        let t = KnotTable::bundled();
        assert_eq!(t.entries().len(), 84);
        assert_eq!(t.max_crossings(), 9);
        assert!(t.get("8_19").is_some_and(|e| !e.alternating));
        assert!(t.get("8_18").is_some_and(|e| e.alternating));
    }

    #[test]
    fn table_entries_identify_themselves() {
        let t = KnotTable::bundled();
        for e in t.entries() {
            if e.record.mirror_of.is_some() {
                continue;
            }
            assert_eq!(t.identify(&e.diagram).unwrap(), e.record.name);
            assert_eq!(t.identify(&e.diagram.mirror().unwrap()).unwrap(), e.record.name);
        }
    }

    #[test]
    fn granny_knot_splits() {
        let t = KnotTable::bundled();
        let d = parse_diagram("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        let g = d.connected_sum(&d).unwrap();
        assert_eq!(t.identify(&g).unwrap(), "3_1 # 3_1");
        let square = d.connected_sum(&d.mirror().unwrap()).unwrap();
        assert_eq!(t.identify(&square).unwrap(), "3_1 # 3_1");
        let e = t.get("4_1").unwrap().diagram.connected_sum(&d).unwrap();
        assert_eq!(t.identify(&e).unwrap(), "3_1 # 4_1");
    }

    #[test]
    fn unknot_and_kink() {
        let t = KnotTable::bundled();
        assert_eq!(t.identify(&Diagram::unknot()).unwrap(), UNKNOT);
        assert_eq!(t.identify(&parse_diagram("X(1,2,2,1)").unwrap()).unwrap(), UNKNOT);
    }

    #[test]
    fn rejects_wrong_jones() {
        let bad = r#"{"name": "3_1", "c": 3, "pd": "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)", "alternating": true, "jones": "t+t^3"}"#;
        assert!(matches!(KnotTable::from_jsonl(bad), Err(Error::Table(_))));
    }

    #[test]
    fn rejects_duplicate_invariant() {
        let line = r#"{"name": "3_1", "c": 3, "pd": "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)", "alternating": true, "jones": "t+t^3-t^4"}"#;
        let twice = format!("{line}\n{}", line.replace("\"3_1\"", "\"3_1m\""));
        let err = KnotTable::from_jsonl(&twice).unwrap_err();
        assert!(err.to_string().contains("share"), "{err}");
    }

    #[test]
    fn minimal_records_and_mirror_aliases() {
        let text = r#"{"name": "3_1", "c": 3, "pd": "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"}
{"name": "3_1m", "c": 3, "pd": "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "mirror_of": "3_1"}"#;
        let t = KnotTable::from_jsonl(text).unwrap();
        assert_eq!(t.entries().len(), 2);
        assert!(t.get("3_1").unwrap().alternating);
        let m = &t.get("3_1m").unwrap().diagram;
        assert_eq!(t.identify(m).unwrap(), "3_1");
        let bad = text.replace("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").replace("\"c\": 3, \"pd\": \"X(4", "\"c\": 4, \"pd\": \"X(4");
        assert!(KnotTable::from_jsonl(&bad).is_err());
    }

    #[test]
    fn sort_key() {
        let mut v = vec!["9_1", "3_1", "10_2", "4_1"];
        v.sort_by_key(|s| knot_order(s));
        assert_eq!(v, ["3_1", "4_1", "9_1", "10_2"]);
    }
}
