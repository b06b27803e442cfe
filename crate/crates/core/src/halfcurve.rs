//! Half-curves and the lower bounds on the warping degree they give.

use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, Face};
use crate::error::{Error, Result};

/// One of the two loops obtained by splitting the traversal at a crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfCurve {
    pub crossing: usize,
    /// 0 for the loop that follows the first pass through the crossing,
    /// 1 for the loop that follows the second.
    pub side: u8,
    /// Edges of the loop in travel order.
    pub edges: Vec<usize>,
    /// Crossings met on the loop, in travel order (excluding the base crossing).
    pub crossings: Vec<usize>,
    pub self_crossing: bool,
    /// Number of crossings shared with the other loop; `None` when the loop
    /// crosses itself.
    pub length: Option<usize>,
}

pub fn half_curves_at(d: &Diagram, crossing: usize) -> Result<(HalfCurve, HalfCurve)> {
    let n = d.crossing_count();
    if crossing >= n {
        return Err(Error::NoSuchCrossing(crossing));
    }
    let [i, j] = d.crossing_passes()[crossing];
    let m = d.edge_count();
    let word = d.gauss_word();
    let build = |side: u8, from: usize, to: usize| {
        // passes strictly between `from` and `to`, edges from..to
        let span = (to + m - from) % m;
        let edges: Vec<usize> = (0..span).map(|t| (from + t) % m).collect();
        let crossings: Vec<usize> = (1..span).map(|t| word[(from + t) % m]).collect();
        let mut count = vec![0u8; n];
        for &c in &crossings {
            count[c] += 1;
        }
        let self_crossing = count.contains(&2);
        let shared = count.iter().filter(|&&k| k == 1).count();
        HalfCurve {
            crossing,
            side,
            edges,
            crossings,
            self_crossing,
            length: (!self_crossing).then_some(shared),
        }
    };
    Ok((build(0, i, j), build(1, j, i)))
}

pub fn all_half_curves(d: &Diagram) -> Vec<HalfCurve> {
    (0..d.crossing_count())
        .flat_map(|c| {
            let (a, b) = half_curves_at(d, c).expect("crossing in range");
            [a, b]
        })
        .collect()
}

/// l(P): the largest defined half-curve length.
pub fn projection_length(d: &Diagram) -> Result<usize> {
    if d.crossing_count() == 0 {
        return Err(Error::Trivial);
    }
    all_half_curves(d)
        .iter()
        .filter_map(|h| h.length)
        .max()
        .ok_or_else(|| Error::Gluing("no half-curve without self-crossings".into()))
}

/// Largest number of pairwise crossing-disjoint faces (each with at least two
/// crossings) that leave at least one crossing uncovered.
pub fn max_disjoint_polygons(d: &Diagram) -> usize {
    let n = d.crossing_count();
    let faces: Vec<Face> = d.faces().into_iter().filter(|f| f.gon() >= 2).collect();
    let masks: Vec<u64> = faces
        .iter()
        .map(|f| f.crossings.iter().fold(0u64, |m, &c| m | (1 << c)))
        .collect();
    assert!(n < 64, "polygon search is limited to 63 crossings");
    let full: u64 = (1u64 << n) - 1;
    fn go(masks: &[u64], i: usize, used: u64, count: usize, full: u64, best: &mut usize) {
        if used != full && count > *best {
            *best = count;
        }
        if count + (masks.len() - i) <= *best {
            return;
        }
        for k in i..masks.len() {
            if masks[k] & used == 0 {
                go(masks, k + 1, used | masks[k], count + 1, full, best);
            }
        }
    }
    let mut best = 0;
    go(&masks, 0, 0, 0, full, &mut best);
    best
}

/// Lower bounds for d(D) of an alternating diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBounds {
    /// l(D) / 2
    pub length_bound: usize,
    /// disjoint polygons plus a free crossing
    pub polygon_bound: usize,
}

impl LowerBounds {
    pub fn best(&self) -> usize {
        self.length_bound.max(self.polygon_bound)
    }
}

pub fn lower_bounds(d: &Diagram) -> Result<LowerBounds> {
    if d.crossing_count() == 0 {
        return Err(Error::Trivial);
    }
    if !d.is_alternating() {
        return Err(Error::NotAlternating);
    }
    Ok(LowerBounds {
        length_bound: projection_length(d)? / 2,
        polygon_bound: max_disjoint_polygons(d),
    })
}
