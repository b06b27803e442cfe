//! r-factors with the two-sided bound they give on d(P). Also Conway-notation
//! shadows.

use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, Face, Shadow};
use crate::error::{Error, Result};

/// Pairwise crossing-disjoint faces covering every crossing except `excluded`,
/// none of them touching it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RFactor {
    pub excluded: usize,
    /// Indices into [`Diagram::faces`].
    pub faces: Vec<usize>,
    /// k_i for each chosen face.
    pub gons: Vec<usize>,
}

impl RFactor {
    /// Re-checks the three defining conditions against `faces`.
    pub fn is_valid(&self, n: usize, faces: &[Face]) -> bool {
        let mut covered = vec![0u8; n];
        for &f in &self.faces {
            for &c in &faces[f].crossings {
                covered[c] += 1;
            }
        }
        (0..n).all(|c| if c == self.excluded { covered[c] == 0 } else { covered[c] == 1 })
    }
}

/// Every r-factor of P^c, by exact-cover backtracking.
pub fn find_rfactors(p: &Diagram, c: usize) -> Result<Vec<RFactor>> {
    let n = p.crossing_count();
    if c >= n {
        return Err(Error::NoSuchCrossing(c));
    }
    if n > 63 {
        return Err(Error::TooManyCrossings(n));
    }
    let faces = p.faces();
    let masks: Vec<u64> = faces
        .iter()
        .map(|f| f.crossings.iter().fold(0u64, |m, &x| m | 1 << x))
        .collect();
    let target: u64 = ((1u64 << n) - 1) & !(1 << c);
    let usable: Vec<usize> = (0..faces.len()).filter(|&f| masks[f] & (1 << c) == 0).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(masks: &[u64], usable: &[usize], target: u64, used: u64, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if used == target {
            out.push(chosen.clone());
            return;
        }
        let first = (target & !used).trailing_zeros();
        for &f in usable {
            if masks[f] >> first & 1 == 1 && masks[f] & used == 0 {
                chosen.push(f);
                go(masks, usable, target, used | masks[f], chosen, out);
                chosen.pop();
            }
        }
    }
    let mut sets = Vec::new();
    go(&masks, &usable, target, 0, &mut chosen, &mut sets);
    for mut set in sets {
        set.sort();
        out.push(RFactor {
            excluded: c,
            gons: set.iter().map(|&f| faces[f].gon()).collect(),
            faces: set,
        });
    }
    Ok(out)
}

/// (n, sum k_i - n) for an r-factor of a shadow without 1-gons.
pub fn rfactor_bounds(p: &Diagram, r: &RFactor) -> Result<(usize, usize)> {
    if p.has_monogon() {
        return Err(Error::HasMonogon);
    }
    let n = r.faces.len();
    Ok((n, r.gons.iter().sum::<usize>() - n))
}

/// Tightest bounds over all r-factors at every crossing, if any exist.
pub fn best_rfactor_bounds(p: &Diagram) -> Result<Option<(usize, usize)>> {
    let mut best: Option<(usize, usize)> = None;
    for c in 0..p.crossing_count() {
        for r in find_rfactors(p, c)? {
            let (lo, hi) = rfactor_bounds(p, &r)?;
            best = Some(match best {
                None => (lo, hi),
                Some((a, b)) => (a.max(lo), b.min(hi)),
            });
        }
    }
    Ok(best)
}

/// A partial map with four free boundary darts NE, NW, SW, SE.
struct Tangle {
    glue: Vec<u32>,
    ends: [u32; 4],
}

const FREE: u32 = u32::MAX;

impl Tangle {
    fn crossing() -> Self {
        Tangle { glue: vec![FREE; 4], ends: [0, 1, 2, 3] }
    }

    fn add_crossing(&mut self) -> u32 {
        let base = self.glue.len() as u32;
        self.glue.extend([FREE; 4]);
        base
    }

    fn join(&mut self, a: u32, b: u32) {
        self.glue[a as usize] = b;
        self.glue[b as usize] = a;
    }

    /// New crossing to the right, joined to NE and SE.
    fn twist_horizontal(&mut self) {
        let x = self.add_crossing();
        let [ne, _, _, se] = self.ends;
        self.join(ne, x + 1);
        self.join(se, x + 2);
        self.ends[0] = x;
        self.ends[3] = x + 3;
    }

    /// New crossing below, joined to SW and SE.
    fn twist_vertical(&mut self) {
        let x = self.add_crossing();
        let [_, _, sw, se] = self.ends;
        self.join(sw, x + 1);
        self.join(se, x);
        self.ends[2] = x + 2;
        self.ends[3] = x + 3;
    }

    fn close(&self, numerator: bool) -> Result<Diagram> {
        let mut t = Tangle { glue: self.glue.clone(), ends: self.ends };
        let [ne, nw, sw, se] = self.ends;
        if numerator {
            t.join(ne, nw);
            t.join(sw, se);
        } else {
            t.join(ne, se);
            t.join(nw, sw);
        }
        Diagram::from_glue(t.glue, None, 0)
    }
}

/// A shadow given in the two Conway forms used for torus and twist-type knots.
#[derive(Clone, Debug)]
pub struct ConwayShadow {
    pub spec: Vec<usize>,
    pub shadow: Shadow,
    /// (k - 1) / 2 for `[k]`, l / 2 + (m - 1) / 2 for `[l, m]`.
    pub predicted_degree: usize,
}

/// Builds the closure of the integer tangle `[k]` (k odd) or of the rational
/// tangle `[l, m]` (l even, m odd).
pub fn conway_shadow(spec: &[usize]) -> Result<ConwayShadow> {
    let (tangle, n, predicted) = match *spec {
        [k] => {
            if k == 0 || k % 2 == 0 {
                return Err(Error::Conway(format!("[{k}] needs k odd and positive")));
            }
            let mut t = Tangle::crossing();
            for _ in 1..k {
                t.twist_horizontal();
            }
            (t, k, (k - 1) / 2)
        }
        [l, m] => {
            if l == 0 || l % 2 == 1 || m % 2 == 0 {
                return Err(Error::Conway(format!("[{l}, {m}] needs l even positive and m odd")));
            }
            let mut t = Tangle::crossing();
            for _ in 1..l {
                t.twist_horizontal();
            }
            for _ in 0..m {
                t.twist_vertical();
            }
            (t, l + m, l / 2 + (m - 1) / 2)
        }
        _ => return Err(Error::Conway(format!("expected one or two integers, got {}", spec.len()))),
    };
    let closures: Vec<Diagram> = [true, false]
        .into_iter()
        .filter_map(|num| tangle.close(num).ok())
        .filter(|d| d.crossing_count() == n)
        .collect();
    let shadow = closures
        .iter()
        .find(|d| d.is_reduced())
        .or_else(|| closures.first())
        .cloned()
        .ok_or_else(|| Error::Conway(format!("{spec:?} closes to a link")))?;
    Ok(ConwayShadow { spec: spec.to_vec(), shadow, predicted_degree: predicted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::KnotTable;
    use crate::warping::projection_warping_degree;

    fn name_of(s: &Shadow) -> String {
        let (a, _) = s.alternating_pair().unwrap();
        KnotTable::bundled().identify(&a).unwrap()
    }

    #[test]
    fn torus_shadows() {
        for (k, name) in [(3, "3_1"), (5, "5_1"), (7, "7_1"), (9, "9_1")] {
            let c = conway_shadow(&[k]).unwrap();
            assert_eq!(c.shadow.crossing_count(), k);
            assert!(c.shadow.is_reduced());
            assert_eq!(name_of(&c.shadow), name);
            assert_eq!(projection_warping_degree(&c.shadow).unwrap(), c.predicted_degree);
        }
        let one = conway_shadow(&[1]).unwrap();
        assert_eq!(projection_warping_degree(&one.shadow).unwrap(), 0);
    }

    #[test]
    fn torus_face_structure() {
        let s = conway_shadow(&[5]).unwrap().shadow;
        let mut gons: Vec<usize> = s.faces().iter().map(Face::gon).collect();
        gons.sort();
        assert_eq!(gons, [2, 2, 2, 2, 2, 5, 5]);
    }

    #[test]
    fn twist_shadows() {
        for (l, m, name) in [(2, 1, "3_1"), (2, 3, "5_2"), (2, 5, "7_2"), (4, 1, "5_1"), (4, 3, "7_3")] {
            let c = conway_shadow(&[l, m]).unwrap();
            assert_eq!(name_of(&c.shadow), name, "[{l},{m}]");
            assert_eq!(projection_warping_degree(&c.shadow).unwrap(), c.predicted_degree);
        }
    }

    #[test]
    fn parity_errors() {
        assert!(matches!(conway_shadow(&[4]), Err(Error::Conway(_))));
        assert!(matches!(conway_shadow(&[3, 1]), Err(Error::Conway(_))));
        assert!(matches!(conway_shadow(&[2, 2]), Err(Error::Conway(_))));
        assert!(matches!(conway_shadow(&[]), Err(Error::Conway(_))));
    }

    #[test]
    fn torus_rfactors_are_bigons() {
        let s = conway_shadow(&[5]).unwrap().shadow;
        let faces = s.faces();
        for c in 0..5 {
            let rs = find_rfactors(&s, c).unwrap();
            assert!(!rs.is_empty());
            for r in &rs {
                assert!(r.is_valid(5, &faces));
            }
            assert!(rs.iter().any(|r| r.gons == [2, 2]));
            let r = rs.iter().find(|r| r.gons == [2, 2]).unwrap();
            assert_eq!(rfactor_bounds(&s, r).unwrap(), (2, 2));
        }
        assert_eq!(best_rfactor_bounds(&s).unwrap(), Some((2, 2)));
    }

    #[test]
    fn monogon_rejected() {
        let s = conway_shadow(&[1]).unwrap().shadow;
        let r = RFactor { excluded: 0, faces: vec![], gons: vec![] };
        assert_eq!(rfactor_bounds(&s, &r).unwrap_err(), Error::HasMonogon);
    }
}
