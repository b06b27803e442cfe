//! Knot diagrams and shadows as 4-valent combinatorial maps on the sphere.
//!
//! A crossing owns four darts (ports) numbered counterclockwise; dart `4c + p`
//! is port `p` of crossing `c`, and ports `p` and `p ^ 2` are opposite, so the
//! knot runs straight through them. Edges are the involution `glue` on darts.
//! Faces are the cycles of `d -> rotate_cw(glue[d])`; the face of a dart is the
//! one lying counterclockwise after it.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Direction of travel along the knot, relative to the stored traversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Forward,
    Backward,
}

impl Orientation {
    pub const BOTH: [Orientation; 2] = [Orientation::Forward, Orientation::Backward];

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Forward => Orientation::Backward,
            Orientation::Backward => Orientation::Forward,
        }
    }
}

#[inline]
pub(crate) fn crossing_of(dart: u32) -> usize {
    (dart / 4) as usize
}

#[inline]
pub(crate) fn port_of(dart: u32) -> u32 {
    dart % 4
}

#[inline]
pub(crate) fn rotate(dart: u32, by: u32) -> u32 {
    (dart & !3) | ((dart + by) & 3)
}

/// One pass of the traversal through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pass {
    pub crossing: usize,
    pub entry: u32,
    /// `None` for shadows.
    pub over: Option<bool>,
}

/// A face of the map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Darts whose counterclockwise corner lies in this face, in boundary order.
    pub darts: Vec<u32>,
    /// Edge incidences in the same order.
    pub edges: Vec<usize>,
    /// Distinct crossings on the boundary, sorted.
    pub crossings: Vec<usize>,
}

impl Face {
    /// Number of distinct crossings on the boundary.
    pub fn gon(&self) -> usize {
        self.crossings.len()
    }

    pub fn touches(&self, crossing: usize) -> bool {
        self.crossings.binary_search(&crossing).is_ok()
    }

    pub fn is_disjoint_from(&self, other: &Face) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.crossings.len() && j < other.crossings.len() {
            match self.crossings[i].cmp(&other.crossings[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }
}

/// A knot diagram, or a shadow when the over/under information is absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    glue: Vec<u32>,
    /// Per crossing, the parity of the ports carrying the over-strand.
    over: Option<Vec<u8>>,
    /// Entry dart of each pass in the forward traversal.
    passes: Vec<u32>,
    /// Dart -> index of the edge it lies on. Edge `k` runs from the exit of
    /// pass `k` to the entry of pass `k + 1`.
    edge_of: Vec<u32>,
}

/// A diagram with over/under information forgotten.
pub type Shadow = Diagram;

/// Number of faces of the map given by `glue`.
pub(crate) fn face_count(glue: &[u32]) -> usize {
    let mut seen = vec![false; glue.len()];
    let mut faces = 0;
    for start in 0..glue.len() {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut d = start as u32;
        while !seen[d as usize] {
            seen[d as usize] = true;
            d = rotate(glue[d as usize], 3);
        }
    }
    faces
}

impl Diagram {
    /// The zero-crossing unknot.
    pub fn unknot() -> Self {
        Diagram {
            glue: Vec::new(),
            over: Some(Vec::new()),
            passes: Vec::new(),
            edge_of: Vec::new(),
        }
    }

    /// Builds a diagram from a dart gluing, traversing forward from `start`
    /// (taken as the entry dart of pass 0).
    pub fn from_glue(glue: Vec<u32>, over: Option<Vec<u8>>, start: u32) -> Result<Self> {
        let darts = glue.len();
        if !darts.is_multiple_of(4) {
            return Err(Error::Gluing(format!("{darts} darts is not a multiple of 4")));
        }
        let n = darts / 4;
        if let Some(o) = &over {
            if o.len() != n || o.iter().any(|&a| a > 1) {
                return Err(Error::Gluing("over/under table does not match crossings".into()));
            }
        }
        if n == 0 {
            let mut u = Diagram::unknot();
            u.over = over.or(Some(Vec::new()));
            return Ok(u);
        }
        for (d, &g) in glue.iter().enumerate() {
            if g as usize >= darts || g as usize == d || glue[g as usize] as usize != d {
                return Err(Error::Gluing(format!("dart {d} is not properly paired")));
            }
        }
        if start as usize >= darts {
            return Err(Error::Gluing("start dart out of range".into()));
        }
        let mut passes = Vec::with_capacity(2 * n);
        let mut used = vec![false; darts];
        let mut entry = start;
        loop {
            if used[entry as usize] {
                break;
            }
            let exit = entry ^ 2;
            used[entry as usize] = true;
            used[exit as usize] = true;
            passes.push(entry);
            entry = glue[exit as usize];
        }
        if entry != start || passes.len() != 2 * n {
            return Err(Error::NotAKnot { visited: passes.len(), expected: 2 * n });
        }
        let faces = face_count(&glue);
        if faces != n + 2 {
            return Err(Error::NotPlanar { faces, expected: n + 2 });
        }
        let mut edge_of = vec![0u32; darts];
        for (k, &e) in passes.iter().enumerate() {
            let next = passes[(k + 1) % passes.len()];
            edge_of[(e ^ 2) as usize] = k as u32;
            edge_of[next as usize] = k as u32;
        }
        Ok(Diagram { glue, over, passes, edge_of })
    }

    /// Builds a shadow from a Gauss word (each crossing label appears twice)
    /// and, per crossing, whether the second pass enters at port 1 (`true`)
    /// or port 3 (`false`). The first pass always runs port 0 -> port 2.
    pub fn from_gauss(word: &[usize], second_at_port_one: &[bool]) -> Result<Self> {
        let n = second_at_port_one.len();
        let glue = gauss_glue(word, second_at_port_one)?;
        debug_assert_eq!(glue.len(), 4 * n);
        let start = (4 * word.first().copied().unwrap_or(0)) as u32;
        Diagram::from_glue(glue, None, start)
    }

    pub fn crossing_count(&self) -> usize {
        self.glue.len() / 4
    }

    pub fn is_shadow(&self) -> bool {
        self.over.is_none()
    }

    pub fn glue(&self) -> &[u32] {
        &self.glue
    }

    pub(crate) fn over_axes(&self) -> Option<&[u8]> {
        self.over.as_deref()
    }

    /// Entry darts of the forward traversal.
    pub fn pass_entries(&self) -> &[u32] {
        &self.passes
    }

    pub fn pass(&self, k: usize) -> Pass {
        let entry = self.passes[k];
        let crossing = crossing_of(entry);
        Pass {
            crossing,
            entry,
            over: self.over.as_ref().map(|o| o[crossing] as u32 == port_of(entry) & 1),
        }
    }

    pub fn passes(&self) -> impl Iterator<Item = Pass> + '_ {
        (0..self.passes.len()).map(move |k| self.pass(k))
    }

    /// Crossing labels along the forward traversal.
    pub fn gauss_word(&self) -> Vec<usize> {
        self.passes.iter().map(|&e| crossing_of(e)).collect()
    }

    /// The two pass indices of every crossing, ascending.
    pub fn crossing_passes(&self) -> Vec<[usize; 2]> {
        let mut out = vec![[usize::MAX; 2]; self.crossing_count()];
        for (k, &e) in self.passes.iter().enumerate() {
            let slot = &mut out[crossing_of(e)];
            if slot[0] == usize::MAX {
                slot[0] = k;
            } else {
                slot[1] = k;
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.passes.len()
    }

    pub fn edge_of_dart(&self, dart: u32) -> usize {
        self.edge_of[dart as usize] as usize
    }

    /// The two darts of edge `e`: the exit of pass `e` and the entry of pass `e + 1`.
    pub fn edge_darts(&self, e: usize) -> (u32, u32) {
        let exit = self.passes[e] ^ 2;
        (exit, self.glue[exit as usize])
    }

    pub fn faces(&self) -> Vec<Face> {
        let mut seen = vec![false; self.glue.len()];
        let mut faces = Vec::with_capacity(self.crossing_count() + 2);
        for start in 0..self.glue.len() as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut darts = Vec::new();
            let mut d = start;
            while !seen[d as usize] {
                seen[d as usize] = true;
                darts.push(d);
                d = rotate(self.glue[d as usize], 3);
            }
            let edges = darts.iter().map(|&d| self.edge_of_dart(d)).collect();
            let crossings: BTreeSet<usize> = darts.iter().map(|&d| crossing_of(d)).collect();
            faces.push(Face { darts, edges, crossings: crossings.into_iter().collect() });
        }
        faces
    }

    /// False iff some face meets a crossing at two opposite corners.
    pub fn is_reduced(&self) -> bool {
        self.faces().iter().all(|f| {
            f.darts
                .iter()
                .all(|&d| !f.darts.contains(&(d ^ 2)))
        })
    }

    /// Whether some face meets only one crossing.
    pub fn has_monogon(&self) -> bool {
        self.faces().iter().any(|f| f.gon() == 1)
    }

    /// All pairs of distinct edges whose removal disconnects the crossings.
    pub fn two_edge_cuts(&self) -> Vec<(usize, usize)> {
        let n = self.crossing_count();
        let m = self.edge_count();
        let ends: Vec<(usize, usize)> = (0..m)
            .map(|e| {
                let (a, b) = self.edge_darts(e);
                (crossing_of(a), crossing_of(b))
            })
            .collect();
        let mut cuts = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let mut uf = UnionFind::new(n);
                for (e, &(a, b)) in ends.iter().enumerate() {
                    if e != i && e != j {
                        uf.union(a, b);
                    }
                }
                if uf.components() > 1 {
                    cuts.push((i, j));
                }
            }
        }
        cuts
    }

    /// False iff two edges can be cut to split the map into two parts that
    /// each contain a crossing.
    pub fn is_prime(&self) -> bool {
        self.two_edge_cuts().is_empty()
    }

    /// Splits along the 2-cut `(e1, e2)`, closing each side with one new edge.
    pub fn split_at_cut(&self, e1: usize, e2: usize) -> Result<(Diagram, Diagram)> {
        let n = self.crossing_count();
        let mut uf = UnionFind::new(n);
        for e in 0..self.edge_count() {
            if e != e1 && e != e2 {
                let (a, b) = self.edge_darts(e);
                uf.union(crossing_of(a), crossing_of(b));
            }
        }
        if uf.components() != 2 {
            return Err(Error::Gluing(format!("edges {e1},{e2} are not a 2-cut")));
        }
        let (a1, b1) = self.edge_darts(e1);
        let (a2, b2) = self.edge_darts(e2);
        let roots: Vec<usize> = (0..n).map(|c| uf.find(c)).collect();
        let side = |d: u32| roots[crossing_of(d)];
        let root_a = side(a1);
        let (s2, t2) = if side(a2) == root_a { (a2, b2) } else { (b2, a2) };
        let mut parts = Vec::new();
        for (x, y, root) in [(a1, s2, root_a), (b1, t2, side(b1))] {
            let members: Vec<usize> = (0..n).filter(|&c| roots[c] == root).collect();
            let mut index = vec![usize::MAX; n];
            for (i, &c) in members.iter().enumerate() {
                index[c] = i;
            }
            let relabel = |d: u32| (4 * index[crossing_of(d)]) as u32 + port_of(d);
            let mut glue = vec![0u32; 4 * members.len()];
            for &c in &members {
                for p in 0..4u32 {
                    let d = 4 * c as u32 + p;
                    let g = if d == x {
                        y
                    } else if d == y {
                        x
                    } else {
                        self.glue[d as usize]
                    };
                    glue[relabel(d) as usize] = relabel(g);
                }
            }
            let over = self
                .over
                .as_ref()
                .map(|o| members.iter().map(|&c| o[c]).collect());
            parts.push(Diagram::from_glue(glue, over, 0)?);
        }
        let second = parts.pop().expect("two parts");
        let first = parts.pop().expect("two parts");
        Ok((first, second))
    }

    /// Connected sum, splicing edge 0 of `self` with edge 0 of `other`.
    pub fn connected_sum(&self, other: &Diagram) -> Result<Diagram> {
        if self.is_shadow() != other.is_shadow() {
            return Err(Error::Gluing("cannot sum a shadow with a diagram".into()));
        }
        if self.crossing_count() == 0 {
            return Ok(other.clone());
        }
        if other.crossing_count() == 0 {
            return Ok(self.clone());
        }
        let shift = self.glue.len() as u32;
        let mut glue: Vec<u32> = self.glue.iter().copied().chain(other.glue.iter().map(|g| g + shift)).collect();
        let (x1, y1) = self.edge_darts(0);
        let (x2, y2) = other.edge_darts(0);
        let (x2, y2) = (x2 + shift, y2 + shift);
        for (a, b) in [(x1, y2), (x2, y1)] {
            glue[a as usize] = b;
            glue[b as usize] = a;
        }
        let over = match (&self.over, &other.over) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        Diagram::from_glue(glue, over, self.passes[0])
    }

    /// The same map with over/under information dropped.
    pub fn shadow(&self) -> Diagram {
        Diagram { over: None, ..self.clone() }
    }

    /// Replaces the over/under information.
    pub fn with_over_axes(&self, axes: Vec<u8>) -> Result<Diagram> {
        if axes.len() != self.crossing_count() || axes.iter().any(|&a| a > 1) {
            return Err(Error::Gluing("over/under table does not match crossings".into()));
        }
        Ok(Diagram { over: Some(axes), ..self.clone() })
    }

    /// Every crossing changed.
    pub fn mirror(&self) -> Result<Diagram> {
        let over = self.over.as_ref().ok_or(Error::ShadowInput)?;
        Ok(Diagram { over: Some(over.iter().map(|a| a ^ 1).collect()), ..self.clone() })
    }

    /// Reflection of the map itself (reverses every cyclic order).
    pub fn reflect(&self) -> Diagram {
        let flip = |d: u32| (d & !3) | ((4 - (d & 3)) & 3);
        let mut glue = vec![0u32; self.glue.len()];
        for (d, &g) in self.glue.iter().enumerate() {
            glue[flip(d as u32) as usize] = flip(g);
        }
        let over = self.over.as_ref().map(|o| o.to_vec());
        let start = self.passes.first().map(|&e| flip(e)).unwrap_or(0);
        Diagram::from_glue(glue, over, start).expect("reflection preserves validity")
    }

    pub fn is_alternating(&self) -> bool {
        match &self.over {
            None => false,
            Some(_) => {
                let m = self.passes.len();
                (0..m).all(|k| self.pass(k).over != self.pass((k + 1) % m).over)
            }
        }
    }

    /// The two alternating diagrams over this shadow; the second is the
    /// mirror of the first.
    pub fn alternating_pair(&self) -> Result<(Diagram, Diagram)> {
        let n = self.crossing_count();
        if n == 0 {
            return Err(Error::Trivial);
        }
        let mut axes = vec![u8::MAX; n];
        for (k, &e) in self.passes.iter().enumerate() {
            let c = crossing_of(e);
            let axis = if k % 2 == 0 { port_of(e) & 1 } else { (port_of(e) & 1) ^ 1 } as u8;
            if axes[c] == u8::MAX {
                axes[c] = axis;
            } else if axes[c] != axis {
                return Err(Error::NotAlternating);
            }
        }
        let first = Diagram { over: Some(axes), ..self.clone() };
        let second = first.mirror()?;
        Ok((first, second))
    }

    /// Crossing sign under the forward orientation (right-handed = +1).
    pub fn crossing_sign(&self, crossing: usize) -> Result<i32> {
        let over = self.over.as_ref().ok_or(Error::ShadowInput)?;
        let mut under_in = None;
        let mut over_in = None;
        for &e in &self.passes {
            if crossing_of(e) == crossing {
                if over[crossing] as u32 == port_of(e) & 1 {
                    over_in = Some(port_of(e));
                } else {
                    under_in = Some(port_of(e));
                }
            }
        }
        let (u, o) = (under_in.expect("two passes"), over_in.expect("two passes"));
        Ok(if o == (u + 3) % 4 { 1 } else { -1 })
    }

    pub fn writhe(&self) -> Result<i32> {
        (0..self.crossing_count()).map(|c| self.crossing_sign(c)).sum()
    }

    /// PD code with edges numbered 1..2n along the forward traversal.
    pub fn render_pd(&self) -> String {
        if self.crossing_count() == 0 {
            return "U".to_string();
        }
        let mut entry_port = vec![0u32; self.crossing_count()];
        let mut first_seen = vec![false; self.crossing_count()];
        for &e in &self.passes {
            let c = crossing_of(e);
            match &self.over {
                Some(o) => {
                    if o[c] as u32 != port_of(e) & 1 {
                        entry_port[c] = port_of(e);
                    }
                }
                None => {
                    if !first_seen[c] {
                        entry_port[c] = port_of(e);
                    }
                }
            }
            first_seen[c] = true;
        }
        let tag = if self.over.is_some() { 'X' } else { 'P' };
        let mut out = Vec::with_capacity(self.crossing_count());
        for (c, &p) in entry_port.iter().enumerate() {
            let labels: Vec<String> = (0..4u32)
                .map(|i| {
                    let d = 4 * c as u32 + (p + i) % 4;
                    (self.edge_of_dart(d) + 1).to_string()
                })
                .collect();
            out.push(format!("{tag}({})", labels.join(",")));
        }
        out.join(" ")
    }

    /// Isomorphism-class code on the sphere, reflections included.
    pub fn canonical_code(&self) -> String {
        crate::canon::canonical_code(self)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_pd())
    }
}

pub(crate) fn gauss_glue(word: &[usize], second_at_port_one: &[bool]) -> Result<Vec<u32>> {
    let n = second_at_port_one.len();
    if word.len() != 2 * n {
        return Err(Error::Gluing("Gauss word length must be twice the crossing count".into()));
    }
    let mut seen = vec![0u8; n];
    let mut entries = Vec::with_capacity(word.len());
    for &c in word {
        if c >= n || seen[c] == 2 {
            return Err(Error::Gluing(format!("crossing {c} misused in Gauss word")));
        }
        let port = if seen[c] == 0 {
            0
        } else if second_at_port_one[c] {
            1
        } else {
            3
        };
        seen[c] += 1;
        entries.push(4 * c as u32 + port);
    }
    let mut glue = vec![0u32; 4 * n];
    for k in 0..entries.len() {
        let exit = entries[k] ^ 2;
        let next = entries[(k + 1) % entries.len()];
        glue[exit as usize] = next;
        glue[next as usize] = exit;
    }
    Ok(glue)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    count: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), count: n }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.count -= 1;
        }
    }

    pub(crate) fn components(&self) -> usize {
        self.count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::parse_diagram;

    const TREFOIL: &str = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";

    #[test]
    fn trefoil_faces() {
        let d = parse_diagram(TREFOIL).unwrap();
        let mut gons: Vec<usize> = d.faces().iter().map(Face::gon).collect();
        gons.sort();
        assert_eq!(gons, [2, 2, 2, 3, 3]);
        assert!(d.is_reduced() && d.is_prime() && !d.has_monogon());
    }

    #[test]
    fn kink_has_monogon() {
        let d = parse_diagram("X(1,2,2,1)").unwrap();
        assert!(d.has_monogon());
        assert!(!d.is_reduced());
    }

    #[test]
    fn writhe_of_trefoil_and_mirror() {
        let d = parse_diagram(TREFOIL).unwrap();
        let w = d.writhe().unwrap();
        assert_eq!(w.abs(), 3);
        assert_eq!(d.mirror().unwrap().writhe().unwrap(), -w);
        assert_eq!(d.shadow().writhe().unwrap_err(), Error::ShadowInput);
    }

    #[test]
    fn sum_and_split() {
        let d = parse_diagram(TREFOIL).unwrap();
        let g = d.connected_sum(&d).unwrap();
        assert_eq!(g.crossing_count(), 6);
        assert!(g.is_reduced() && !g.is_prime());
        assert_eq!(g.writhe().unwrap(), 2 * d.writhe().unwrap());
        let cuts = g.two_edge_cuts();
        assert_eq!(cuts.len(), 1);
        let (a, b) = g.split_at_cut(cuts[0].0, cuts[0].1).unwrap();
        assert_eq!(a.canonical_code(), d.canonical_code());
        assert_eq!(b.canonical_code(), d.canonical_code());
    }

    #[test]
    fn alternating_pair_of_shadow() {
        let s = parse_diagram(TREFOIL).unwrap().shadow();
        let (a, b) = s.alternating_pair().unwrap();
        assert!(a.is_alternating() && b.is_alternating());
        assert_eq!(a.mirror().unwrap(), b);
        assert_eq!(Diagram::unknot().shadow().alternating_pair().unwrap_err(), Error::Trivial);
    }

    #[test]
    fn reflect_keeps_class() {
        let d = parse_diagram(TREFOIL).unwrap();
        assert_eq!(d.reflect().canonical_code(), d.canonical_code());
        assert_eq!(d.reflect().writhe().unwrap(), -d.writhe().unwrap());
    }

    #[test]
    fn gauss_word_round_trip() {
        let planar: Vec<Diagram> = (0..8u8)
            .filter_map(|m| {
                let signs = [m & 1 != 0, m & 2 != 0, m & 4 != 0];
                Diagram::from_gauss(&[0, 1, 2, 0, 1, 2], &signs).ok()
            })
            .collect();
        // the embedding is unique up to reflection
        assert_eq!(planar.len(), 2);
        let s = &planar[0];
        assert!(s.is_shadow());
        assert_eq!(s.canonical_code(), parse_diagram(TREFOIL).unwrap().shadow().canonical_code());
    }

    #[test]
    fn rejects_nonplanar_gluing() {
        // the Gauss word 0101 cannot be drawn on the sphere with one crossing pair
        let err = Diagram::from_gauss(&[0, 1, 0, 1], &[true, true]).unwrap_err();
        assert!(matches!(err, Error::NotPlanar { .. }), "{err}");
    }
}
