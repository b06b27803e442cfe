//! Warping crossing points and warping degrees.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, Orientation};
use crate::error::{Error, Result};

/// An oriented diagram with a base point on one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedOrientedDiagram<'a> {
    pub diagram: &'a Diagram,
    pub orientation: Orientation,
    pub base: usize,
}

impl<'a> BasedOrientedDiagram<'a> {
    pub fn new(diagram: &'a Diagram, orientation: Orientation, base: usize) -> Result<Self> {
        if diagram.crossing_count() > 0 && base >= diagram.edge_count() {
            return Err(Error::Gluing(format!("edge {base} out of range")));
        }
        Ok(BasedOrientedDiagram { diagram, orientation, base })
    }

    /// Same base edge, opposite direction.
    pub fn reverse(&self) -> Self {
        BasedOrientedDiagram { orientation: self.orientation.reversed(), ..self.clone() }
    }

    /// Pass indices in travel order starting from the base point.
    pub fn travel(&self) -> impl Iterator<Item = usize> {
        let m = self.diagram.edge_count();
        let base = self.base;
        let orientation = self.orientation;
        (0..m).map(move |i| match orientation {
            // edge k runs from pass k into pass k + 1
            Orientation::Forward => (base + 1 + i) % m,
            Orientation::Backward => (base + m - i) % m,
        })
    }
}

/// Over/under flags of the passes, in stored order.
fn over_flags(d: &Diagram) -> Result<Vec<bool>> {
    if d.is_shadow() {
        return Err(Error::ShadowInput);
    }
    Ok(d.passes().map(|p| p.over.expect("diagram has flags")).collect())
}

/// Crossings first met as under-crossings when travelling from the base.
pub fn warping_points(b: &BasedOrientedDiagram<'_>) -> Result<BTreeSet<usize>> {
    let flags = over_flags(b.diagram)?;
    let mut seen = vec![false; b.diagram.crossing_count()];
    let mut out = BTreeSet::new();
    for k in b.travel() {
        let c = b.diagram.pass(k).crossing;
        if !seen[c] {
            seen[c] = true;
            if !flags[k] {
                out.insert(c);
            }
        }
    }
    Ok(out)
}

fn count_from(word: &[usize], flags: &[bool], n: usize, order: impl Iterator<Item = usize>) -> usize {
    let mut seen = vec![false; n];
    let mut count = 0;
    for k in order {
        let c = word[k];
        if !seen[c] {
            seen[c] = true;
            count += usize::from(!flags[k]);
        }
    }
    count
}

/// Warping counts for every base edge of one orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WarpingReport {
    pub orientation: Orientation,
    /// `counts[e]` is d(D_b) for the base point on edge `e`.
    pub counts: Vec<usize>,
    pub points: Vec<BTreeSet<usize>>,
    pub minimum: usize,
    pub argmin: Vec<usize>,
}

pub fn warping_report(d: &Diagram, orientation: Orientation) -> Result<WarpingReport> {
    over_flags(d)?;
    let m = d.edge_count();
    let mut counts = Vec::with_capacity(m);
    let mut points = Vec::with_capacity(m);
    for base in 0..m {
        let b = BasedOrientedDiagram { diagram: d, orientation, base };
        let pts = warping_points(&b)?;
        counts.push(pts.len());
        points.push(pts);
    }
    let minimum = counts.iter().copied().min().unwrap_or(0);
    let argmin = (0..m).filter(|&e| counts[e] == minimum).collect();
    Ok(WarpingReport { orientation, counts, points, minimum, argmin })
}

/// d(D): minimum over all base edges.
pub fn warping_degree(d: &Diagram, orientation: Orientation) -> Result<usize> {
    let flags = over_flags(d)?;
    let m = d.edge_count();
    if m == 0 {
        return Ok(0);
    }
    let word = d.gauss_word();
    let n = d.crossing_count();
    let best = (0..m)
        .map(|base| {
            let b = BasedOrientedDiagram { diagram: d, orientation, base };
            count_from(&word, &flags, n, b.travel())
        })
        .min()
        .expect("nonempty");
    if d.is_alternating() {
        debug_assert_eq!(best, warping_degree_alternating(d, orientation)?);
    }
    Ok(best)
}

/// d(D) for an alternating diagram, minimising only over base points just
/// before an over-crossing.
pub fn warping_degree_alternating(d: &Diagram, orientation: Orientation) -> Result<usize> {
    let flags = over_flags(d)?;
    if !d.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let m = d.edge_count();
    if m == 0 {
        return Ok(0);
    }
    let word = d.gauss_word();
    let n = d.crossing_count();
    (0..m)
        .filter(|&base| {
            let next = match orientation {
                Orientation::Forward => (base + 1) % m,
                Orientation::Backward => base,
            };
            flags[next]
        })
        .map(|base| {
            let b = BasedOrientedDiagram { diagram: d, orientation, base };
            count_from(&word, &flags, n, b.travel())
        })
        .min()
        .ok_or(Error::NotAlternating)
}

/// d(D) + d(D*) for a fixed orientation; equals d(D) + d(-D).
pub fn warping_sum(d: &Diagram, orientation: Orientation) -> Result<usize> {
    Ok(warping_degree(d, orientation)? + warping_degree(&d.mirror()?, orientation)?)
}

/// d(P): least warping degree over both alternating diagrams of the shadow.
pub fn projection_warping_degree(p: &Diagram) -> Result<usize> {
    if p.crossing_count() == 0 {
        return Err(Error::Trivial);
    }
    let (a, b) = p.shadow().alternating_pair()?;
    Ok(warping_degree(&a, Orientation::Forward)?.min(warping_degree(&b, Orientation::Forward)?))
}
