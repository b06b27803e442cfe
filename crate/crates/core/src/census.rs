//! Exhaustive census of reduced knot shadows.
//!
//! Shadows are generated from Gauss words: every chord diagram on 2n points
//! in which each chord meets an even, nonzero number of other chords (the
//! parity condition is necessary for planarity, and a chord meeting nothing is
//! a nugatory crossing). For each dihedrally-minimal word every assignment of
//! crossing handedness is tried, with the first crossing's fixed to quotient
//! out the reflection of the sphere; the ones that embed on the sphere are
//! kept and deduplicated by canonical code.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::decode;
use crate::diagram::{face_count, gauss_glue, Diagram, Shadow};
use crate::error::{Error, Result};
use crate::halfcurve::projection_length;
use crate::table::KnotTable;
use crate::warping::projection_warping_degree;

/// Largest supported crossing count.
pub const MAX_CENSUS: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub code: String,
    pub n: usize,
    pub reduced: bool,
    pub prime: bool,
    /// d(P)
    pub wd: usize,
    /// l(P)
    pub length: usize,
    /// Names of the knots carried by the two alternating diagrams.
    pub knots: Vec<String>,
}

impl CensusEntry {
    pub fn from_shadow(p: &Shadow, table: &KnotTable) -> Result<Self> {
        let p = p.shadow();
        let (a, b) = p.alternating_pair()?;
        let knots: BTreeSet<String> = [table.identify(&a)?, table.identify(&b)?].into_iter().collect();
        Ok(CensusEntry {
            code: p.canonical_code(),
            n: p.crossing_count(),
            reduced: p.is_reduced(),
            prime: p.is_prime(),
            wd: projection_warping_degree(&p)?,
            length: projection_length(&p)?,
            knots: knots.into_iter().collect(),
        })
    }

    pub fn shadow(&self) -> Result<Shadow> {
        decode(&self.code)
    }

    /// Recomputes every field from the code.
    pub fn revalidate(&self, table: &KnotTable) -> Result<bool> {
        Ok(CensusEntry::from_shadow(&self.shadow()?, table)? == *self)
    }
}

fn check_bound(n: usize) -> Result<()> {
    if n == 0 || n > MAX_CENSUS {
        return Err(Error::CensusBound(n));
    }
    Ok(())
}

/// Offsets to the partner position; dihedral images of a word act on these.
fn offsets(partner: &[usize]) -> Vec<usize> {
    let m = partner.len();
    (0..m).map(|i| (partner[i] + m - i) % m).collect()
}

fn is_dihedral_minimum(partner: &[usize]) -> bool {
    let m = partner.len();
    let off = offsets(partner);
    let reflected: Vec<usize> = (0..m).map(|j| (m - off[m - 1 - j]) % m).collect();
    for seq in [&off, &reflected] {
        for r in 0..m {
            let rotated = (0..m).map(|j| seq[(j + r) % m]);
            match rotated.cmp(off.iter().copied()) {
                std::cmp::Ordering::Less => return false,
                _ => continue,
            }
        }
    }
    true
}

/// Number of chords with exactly one end strictly between `i` and `j`.
fn interlace(partner: &[usize], i: usize, j: usize) -> usize {
    (i + 1..j).filter(|&k| partner[k] < i || partner[k] > j).count()
}

fn extend(partner: &mut Vec<usize>, p: usize, out: &mut Vec<Vec<usize>>) {
    let m = partner.len();
    if p == m {
        if is_dihedral_minimum(partner) {
            out.push(partner.clone());
        }
        return;
    }
    if partner[p] != usize::MAX {
        let i = partner[p];
        if i < p {
            let count = interlace(partner, i, p);
            if count == 0 || count % 2 == 1 {
                return;
            }
        }
        extend(partner, p + 1, out);
        return;
    }
    for q in p + 2..m {
        if partner[q] != usize::MAX || (p == 0 && q == m - 1) {
            continue;
        }
        partner[p] = q;
        partner[q] = p;
        extend(partner, p + 1, out);
        partner[p] = usize::MAX;
        partner[q] = usize::MAX;
    }
}

/// Gauss words (crossings labelled by first occurrence) on `n` crossings
/// whose chords all have even, nonzero interlacement, one per dihedral class.
pub fn gauss_words(n: usize) -> Vec<Vec<usize>> {
    let mut matchings = Vec::new();
    extend(&mut vec![usize::MAX; 2 * n], 0, &mut matchings);
    matchings
        .into_iter()
        .map(|partner| {
            let mut label = vec![usize::MAX; 2 * n];
            let mut next = 0;
            for i in 0..2 * n {
                if label[i] == usize::MAX {
                    label[i] = next;
                    label[partner[i]] = next;
                    next += 1;
                }
            }
            label
        })
        .collect()
}

fn embeddings(word: &[usize]) -> Vec<Shadow> {
    let n = word.len() / 2;
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let signs: Vec<bool> = (0..n).map(|c| c == 0 || mask >> (c - 1) & 1 == 1).collect();
        let glue = gauss_glue(word, &signs).expect("valid Gauss word");
        if face_count(&glue) == n + 2 {
            out.push(Diagram::from_glue(glue, None, 0).expect("planar gluing"));
        }
    }
    out
}

/// Every reduced shadow with exactly `n` crossings, in canonical-code order.
pub fn shadows_at(n: usize) -> Result<Vec<Shadow>> {
    check_bound(n)?;
    let found: Vec<(String, Shadow)> = gauss_words(n)
        .par_iter()
        .flat_map_iter(|w| embeddings(w))
        .filter(|s| s.is_reduced())
        .map(|s| (s.canonical_code(), s))
        .collect();
    let unique: BTreeMap<String, Shadow> = found.into_iter().collect();
    Ok(unique.into_values().collect())
}

/// Census entries with exactly `n` crossings, in canonical-code order.
pub fn census_at(n: usize, table: &KnotTable) -> Result<Vec<CensusEntry>> {
    let shadows = shadows_at(n)?;
    let mut entries: Vec<CensusEntry> = shadows
        .par_iter()
        .map(|s| CensusEntry::from_shadow(s, table))
        .collect::<Result<_>>()?;
    entries.sort_by(|a, b| a.code.cmp(&b.code));
    Ok(entries)
}

/// All reduced shadows with at most `max_n` crossings, ordered by crossing
/// count and then canonical code.
pub fn enumerate_shadows(max_n: usize, table: &KnotTable) -> Result<Vec<CensusEntry>> {
    check_bound(max_n)?;
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(census_at(n, table)?);
    }
    Ok(all)
}

pub fn with_degree(entries: &[CensusEntry], wd: usize) -> Vec<CensusEntry> {
    entries.iter().filter(|e| e.wd == wd).cloned().collect()
}

/// Shadows of warping degree two with at most `max_n` crossings.
pub fn wd2_census(max_n: usize, table: &KnotTable) -> Result<Vec<CensusEntry>> {
    Ok(with_degree(&enumerate_shadows(max_n, table)?, 2))
}
