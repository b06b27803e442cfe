#![allow(dead_code)]

use std::collections::VecDeque;

use warplab::census::{census_at, CensusEntry};
use warplab::table::KnotTable;
use warplab::{Diagram, Shadow};

pub fn census_to(n: usize) -> Vec<CensusEntry> {
    (1..=n).flat_map(|k| census_at(k, KnotTable::bundled()).unwrap()).collect()
}

pub fn shadows_to(n: usize) -> Vec<Shadow> {
    census_to(n).iter().map(|e| e.shadow().unwrap()).collect()
}

/// Relabels crossings by `perm` and turns crossing `c`'s ports by `turn[c]`.
/// With `mirror` every rotation is reversed too.
pub fn relabel(d: &Diagram, perm: &[usize], turn: &[u32], mirror: bool) -> Diagram {
    let n = d.crossing_count();
    let map = |dart: u32| -> u32 {
        let (c, p) = (dart as usize / 4, dart % 4);
        let p = if mirror { (4 - p) % 4 } else { p };
        4 * perm[c] as u32 + (p + turn[c]) % 4
    };
    let mut glue = vec![0u32; 4 * n];
    for (dart, &other) in d.glue().iter().enumerate() {
        glue[map(dart as u32) as usize] = map(other);
    }
    let over = (!d.is_shadow()).then(|| {
        // the over axis is a port parity, so odd turns flip it
        let mut axes = vec![0u8; n];
        let src = over_axes(d);
        for c in 0..n {
            axes[perm[c]] = src[c] ^ (turn[c] & 1) as u8;
        }
        axes
    });
    Diagram::from_glue(glue, over, 0).unwrap()
}

/// Over axis of each crossing: the port parity of its over strand.
pub fn over_axes(d: &Diagram) -> Vec<u8> {
    let mut axes = vec![0u8; d.crossing_count()];
    for p in d.passes() {
        if p.over == Some(true) {
            axes[p.crossing] = (p.entry % 2) as u8;
        }
    }
    axes
}

/// Whether two shadows are isomorphic on the sphere, allowing reflection, by
/// propagating a dart bijection from every possible image of dart 0.
pub fn isomorphic(a: &Diagram, b: &Diagram) -> bool {
    let n = a.crossing_count();
    if n != b.crossing_count() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let (ga, gb) = (a.glue(), b.glue());
    let step = |dart: u32, k: u32| 4 * (dart / 4) + (dart % 4 + k) % 4;
    for x in 0..4 * n as u32 {
        for mirror in [false, true] {
            let turn_b = if mirror { 3 } else { 1 };
            let mut phi = vec![u32::MAX; 4 * n];
            let mut used = vec![false; 4 * n];
            let mut queue = VecDeque::from([(0u32, x)]);
            let mut ok = true;
            while let Some((d, e)) = queue.pop_front() {
                if phi[d as usize] != u32::MAX {
                    if phi[d as usize] != e {
                        ok = false;
                        break;
                    }
                    continue;
                }
                if used[e as usize] {
                    ok = false;
                    break;
                }
                phi[d as usize] = e;
                used[e as usize] = true;
                queue.push_back((ga[d as usize], gb[e as usize]));
                queue.push_back((step(d, 1), step(e, turn_b)));
            }
            if ok && phi.iter().all(|&p| p != u32::MAX) {
                return true;
            }
        }
    }
    false
}

/// Every over/under choice on a shadow.
pub fn all_diagrams(p: &Shadow) -> impl Iterator<Item = Diagram> + '_ {
    let n = p.crossing_count();
    (0u32..1 << n).map(move |mask| {
        let axes = (0..n).map(|c| (mask >> c & 1) as u8).collect();
        p.with_over_axes(axes).unwrap()
    })
}

/// Reduced, read off the Gauss word: every chord meets another.
pub fn gauss_reduced(word: &[usize]) -> bool {
    let m = word.len();
    (0..m).all(|i| {
        let j = (i + 1..m).find(|&j| word[j] == word[i]);
        match j {
            None => true,
            Some(j) => (i + 1..j).any(|k| {
                let other = (0..m).filter(|&t| word[t] == word[k]).collect::<Vec<_>>();
                other.iter().any(|&t| t < i || t > j)
            }),
        }
    })
}

/// Composite, read off the Gauss word: some proper cyclic interval holding
/// at least one chord is closed under partners and so is its complement.
pub fn gauss_composite(word: &[usize]) -> bool {
    let m = word.len();
    for start in 0..m {
        for len in 2..=m - 2 {
            let inside: Vec<usize> = (0..len).map(|k| word[(start + k) % m]).collect();
            let closed = inside.iter().all(|c| inside.iter().filter(|&&x| x == *c).count() == 2);
            if closed {
                return true;
            }
        }
    }
    false
}

/// Small deterministic generator for relabelling tests.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next(&mut self, bound: usize) -> usize {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((self.0 >> 33) % bound as u64) as usize
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            p.swap(i, self.next(i + 1));
        }
        p
    }
}
