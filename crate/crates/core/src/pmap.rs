//! A small planar-map engine: half-edges with rotation systems, used to build
//! tangles and route segments across faces.
//!
//! Half-edge `h` and its twin `h ^ 1` form an edge. `rot[v]` lists the
//! half-edges leaving `v` counterclockwise. The face to the left of `h`
//! continues with the half-edge just clockwise of `twin(h)` at its origin, so
//! the corner between `g` and its counterclockwise successor lies in the face
//! to the left of `g`.

use crate::diagram::Diagram;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Tag {
    Fixed,
    Circle,
    Segment(usize),
}

#[derive(Clone, Debug, Default)]
pub(crate) struct PMap {
    origin: Vec<usize>,
    tag: Vec<Tag>,
    rot: Vec<Vec<usize>>,
}

/// A corner where a new edge may be attached: just counterclockwise of `after`
/// at its origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Slot {
    pub after: usize,
}

impl PMap {
    pub fn add_vertex(&mut self) -> usize {
        self.rot.push(Vec::new());
        self.rot.len() - 1
    }

    /// New edge `u -> v`; returns the half-edge leaving `u`. Rotations are
    /// left to the caller.
    fn new_edge(&mut self, u: usize, v: usize, tag: Tag) -> usize {
        let h = self.origin.len();
        self.origin.push(u);
        self.origin.push(v);
        self.tag.push(tag);
        h
    }

    /// New edge appended to both rotations.
    pub fn push_edge(&mut self, u: usize, v: usize, tag: Tag) -> usize {
        let h = self.new_edge(u, v, tag);
        self.rot[u].push(h);
        self.rot[v].push(h ^ 1);
        h
    }

    pub fn set_rot(&mut self, v: usize, rot: Vec<usize>) {
        debug_assert!(rot.iter().all(|&h| self.origin[h] == v));
        self.rot[v] = rot;
    }

    pub fn origin(&self, h: usize) -> usize {
        self.origin[h]
    }

    pub fn tag(&self, h: usize) -> Tag {
        self.tag[h / 2]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    pub fn vertex_count(&self) -> usize {
        self.rot.len()
    }

    pub fn rot(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    fn position(&self, h: usize) -> usize {
        self.rot[self.origin[h]].iter().position(|&g| g == h).expect("half-edge in its rotation")
    }

    pub fn rot_prev(&self, h: usize) -> usize {
        let r = &self.rot[self.origin[h]];
        r[(self.position(h) + r.len() - 1) % r.len()]
    }

    pub fn face_next(&self, h: usize) -> usize {
        self.rot_prev(h ^ 1)
    }

    /// Half-edges of the face to the left of `h`, starting with `h`.
    pub fn face_of(&self, h: usize) -> Vec<usize> {
        let mut out = vec![h];
        let mut g = self.face_next(h);
        while g != h {
            out.push(g);
            g = self.face_next(g);
        }
        out
    }

    /// Reverses every rotation: the mirror image of the map.
    pub fn mirror(&mut self) {
        for r in &mut self.rot {
            r.reverse();
        }
    }

    /// Disjoint union; returns the half-edge and vertex offsets of `other`.
    pub fn absorb(&mut self, other: &PMap) -> (usize, usize) {
        let (he, vx) = (self.origin.len(), self.rot.len());
        self.origin.extend(other.origin.iter().map(|&v| v + vx));
        self.tag.extend(other.tag.iter().copied());
        self.rot.extend(other.rot.iter().map(|r| r.iter().map(|&h| h + he).collect::<Vec<_>>()));
        (he, vx)
    }

    fn insert_after(&mut self, after: usize, h: usize) {
        let v = self.origin[after];
        let i = self.position(after);
        self.rot[v].insert(i + 1, h);
    }

    /// Joins two slots directly by a new edge tagged `tag`.
    pub fn connect(&mut self, a: Slot, b: Slot, tag: Tag) -> usize {
        let (u, v) = (self.origin[a.after], self.origin[b.after]);
        let h = self.new_edge(u, v, tag);
        self.insert_after(a.after, h);
        self.insert_after(b.after, h ^ 1);
        h
    }

    /// Number of faces of a connected map.
    #[cfg(test)]
    pub fn face_count(&self) -> usize {
        let mut seen = vec![false; self.origin.len()];
        let mut count = 0;
        for v in 0..self.rot.len() {
            for &h in &self.rot[v] {
                if !seen[h] {
                    count += 1;
                    for g in self.face_of(h) {
                        seen[g] = true;
                    }
                }
            }
        }
        count
    }
}

/// A tangle around one half-curve: a crossing `c` whose loop meets `k`
/// further crossings `p_1 .. p_k`, with an outgoing stub at every free port.
#[derive(Clone, Debug)]
pub(crate) struct LoopTangle {
    pub map: PMap,
    /// Slot inside the loop at each `p_i`.
    pub inner: Vec<Slot>,
    /// Tips of the two stubs at `c` (entering and leaving the loop strand).
    pub ends: [usize; 2],
    /// Tip of the stub at each `p_i`.
    #[cfg_attr(not(test), allow(dead_code))]
    pub stubs: Vec<usize>,
}

impl LoopTangle {
    pub fn new(k: usize) -> Self {
        let mut m = PMap::default();
        let c = m.add_vertex();
        let p: Vec<usize> = (0..k).map(|_| m.add_vertex()).collect();
        let ends = [m.add_vertex(), m.add_vertex()];
        let stubs: Vec<usize> = (0..k).map(|_| m.add_vertex()).collect();
        let o1 = m.push_edge(c, ends[0], Tag::Fixed);
        let o2 = m.push_edge(c, ends[1], Tag::Fixed);
        let l1 = m.new_edge(c, p[0], Tag::Fixed);
        let links: Vec<usize> = (0..k - 1).map(|i| m.new_edge(p[i], p[i + 1], Tag::Fixed)).collect();
        let l2 = m.new_edge(p[k - 1], c, Tag::Fixed);
        // O1 is opposite L1 and O2 opposite L2, so the strand runs O1 -> loop -> O2
        m.set_rot(c, vec![o1, o2, l1, l2 ^ 1]);
        let mut inner = Vec::with_capacity(k);
        for i in 0..k {
            let next = if i + 1 < k { links[i] } else { l2 };
            let prev = if i == 0 { l1 ^ 1 } else { links[i - 1] ^ 1 };
            let stub = m.new_edge(p[i], stubs[i], Tag::Fixed);
            m.rot[stubs[i]].push(stub ^ 1);
            // the loop's left side (at the slot after `next`) is its inside
            m.set_rot(p[i], vec![next, prev, stub]);
            inner.push(Slot { after: next });
        }
        LoopTangle { map: m, inner, ends, stubs }
    }
}

/// Boundary circle through the tips of a tangle, giving each tip an outer slot.
pub(crate) fn add_circle(m: &mut PMap, any_tip: usize) -> Vec<(usize, Slot)> {
    let start = m.rot[any_tip][0];
    let mut tips = Vec::new();
    for h in m.face_of(start) {
        let v = m.origin[h];
        if m.degree(v) == 1 {
            tips.push(v);
        }
    }
    let k = tips.len();
    let edges: Vec<usize> = (0..k).map(|i| m.new_edge(tips[i], tips[(i + 1) % k], Tag::Circle)).collect();
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let stub = m.rot[tips[i]][0];
        let c_out = edges[i];
        let c_in = edges[(i + k - 1) % k] ^ 1;
        m.set_rot(tips[i], vec![stub, c_out, c_in]);
        out.push((tips[i], Slot { after: c_out }));
    }
    out
}

/// Limits on how the segments of one drawing phase may cross.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Rules {
    pub max_per_segment: usize,
    pub max_per_pair: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct Drawing {
    pub map: PMap,
    /// crossings on each segment of the phase
    pub per_segment: Vec<usize>,
    /// mutual crossings, indexed `[a][b]`
    pub per_pair: Vec<Vec<usize>>,
}

impl Drawing {
    pub fn new(map: PMap, segments: usize) -> Self {
        Drawing { map, per_segment: vec![0; segments], per_pair: vec![vec![0; segments]; segments] }
    }
}

/// Every way to draw segment `id` from slot `a` to slot `b` without
/// crossing itself, crossing only earlier segments of the phase.
pub(crate) fn route(d: &Drawing, id: usize, a: Slot, b: Slot, rules: Rules) -> Vec<Drawing> {
    let mut d = d.clone();
    let pen_v = d.map.add_vertex();
    let s = d.map.origin[a.after];
    // q runs from the pen back to the previous vertex
    let q = d.map.new_edge(pen_v, s, Tag::Segment(id));
    d.map.rot[pen_v].push(q);
    d.map.insert_after(a.after, q ^ 1);
    let mut out = Vec::new();
    extend_route(d, id, q, b, rules, &mut out);
    out
}

fn extend_route(d: Drawing, id: usize, q: usize, b: Slot, rules: Rules, out: &mut Vec<Drawing>) {
    let face = d.map.face_of(q);
    if face.contains(&b.after) {
        let mut fin = d.clone();
        let pen_v = fin.map.origin[q];
        let t = fin.map.origin[b.after];
        fin.map.rot[pen_v].clear();
        fin.map.origin[q] = t;
        fin.map.insert_after(b.after, q);
        out.push(fin);
    }
    if d.per_segment[id] >= rules.max_per_segment {
        return;
    }
    let mut tried = Vec::new();
    for &h in &face {
        let other = match d.map.tag(h) {
            Tag::Segment(o) if o != id => o,
            _ => continue,
        };
        if tried.contains(&h) {
            continue;
        }
        tried.push(h);
        if d.per_segment[other] >= rules.max_per_segment || d.per_pair[id][other] >= rules.max_per_pair {
            continue;
        }
        let mut next = d.clone();
        let r = cross(&mut next.map, h, q);
        next.per_segment[id] += 1;
        next.per_segment[other] += 1;
        next.per_pair[id][other] += 1;
        next.per_pair[other][id] += 1;
        extend_route(next, id, r, b, rules, out);
    }
}

/// Pushes the pen edge `q` across half-edge `h` (whose left face holds the
/// pen), creating a crossing. Returns the new pen edge.
fn cross(m: &mut PMap, h: usize, q: usize) -> usize {
    let pen_v = m.origin[q];
    let u_tag = m.tag(h);
    let v = m.origin[h ^ 1];
    let x = m.add_vertex();
    // h becomes u -> x, a new edge g runs x -> v
    let g = m.new_edge(x, v, u_tag);
    let i = m.position(h ^ 1);
    m.rot[v][i] = g ^ 1;
    m.origin[h ^ 1] = x;
    // the old pen edge now ends at x; a fresh one continues to the pen
    m.origin[q] = x;
    let r = m.new_edge(x, pen_v, Tag::Segment(match m.tag(q) {
        Tag::Segment(s) => s,
        _ => unreachable!("pen edges are segments"),
    }));
    m.rot[pen_v] = vec![r ^ 1];
    m.set_rot(x, vec![g, q, h ^ 1, r]);
    r ^ 1
}

/// Drops circle edges and smooths the resulting degree-2 vertices.
pub(crate) fn to_diagram(m: &PMap) -> Result<Diagram> {
    let keep = |h: usize| m.tag(h) != Tag::Circle;
    let live: Vec<Vec<usize>> = (0..m.vertex_count())
        .map(|v| m.rot(v).iter().copied().filter(|&h| keep(h)).collect())
        .collect();
    let mut index = vec![usize::MAX; m.vertex_count()];
    let mut n = 0;
    for v in 0..m.vertex_count() {
        match live[v].len() {
            0 | 2 => {}
            4 => {
                index[v] = n;
                n += 1;
            }
            deg => return Err(Error::Gluing(format!("vertex of degree {deg} in a closed drawing"))),
        }
    }
    let mut glue = vec![0u32; 4 * n];
    for v in 0..m.vertex_count() {
        if index[v] == usize::MAX {
            continue;
        }
        for (p, &h) in live[v].iter().enumerate() {
            let mut g = h;
            loop {
                let w = m.origin(g ^ 1);
                if index[w] != usize::MAX {
                    let port = live[w].iter().position(|&e| e == g ^ 1).expect("twin present");
                    glue[4 * index[v] + p] = (4 * index[w] + port) as u32;
                    break;
                }
                g = *live[w].iter().find(|&&e| e != g ^ 1).expect("degree two");
            }
        }
    }
    Diagram::from_glue(glue, None, 0)
}
