//! Canonical codes for maps on the sphere.
//!
//! Every dart together with a choice of cyclic direction gives a rooted,
//! oriented relabelling of the map by breadth-first search; the code is the
//! lexicographically least relabelling. Taking both directions makes the code
//! invariant under reflections of the sphere.

use crate::diagram::{crossing_of, port_of, Diagram};
use crate::error::{Error, Result};

fn rooted_code(d: &Diagram, root: u32, reflect: bool, best: Option<&[u32]>) -> Option<Vec<u32>> {
    let n = d.crossing_count();
    let glue = d.glue();
    let over = d.over_axes();
    let mut label = vec![u32::MAX; n];
    let mut base = vec![0u32; n];
    let mut order = Vec::with_capacity(n);
    label[crossing_of(root)] = 0;
    base[crossing_of(root)] = port_of(root);
    order.push(crossing_of(root));
    let local = |base_port: u32, dart: u32| -> u32 {
        if reflect {
            (base_port + 4 - port_of(dart)) % 4
        } else {
            (port_of(dart) + 4 - base_port) % 4
        }
    };
    let mut code = Vec::with_capacity(5 * n);
    let mut tight = best.is_some();
    // appends a word; false once the code is known to exceed `best`
    let mut push = |code: &mut Vec<u32>, w: u32| -> bool {
        code.push(w);
        if tight {
            let b = best.expect("tight implies best");
            match w.cmp(&b[code.len() - 1]) {
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Less => tight = false,
                std::cmp::Ordering::Equal => {}
            }
        }
        true
    };
    let mut head = 0;
    while head < order.len() {
        let c = order[head];
        head += 1;
        if let Some(o) = over {
            if !push(&mut code, u32::from(o[c] as u32 == base[c] & 1)) {
                return None;
            }
        }
        for i in 0..4u32 {
            let port = if reflect { (base[c] + 4 - i) % 4 } else { (base[c] + i) % 4 };
            let g = glue[4 * c + port as usize];
            let target = crossing_of(g);
            if label[target] == u32::MAX {
                label[target] = order.len() as u32;
                base[target] = port_of(g);
                order.push(target);
            }
            if !push(&mut code, 4 * label[target] + local(base[target], g)) {
                return None;
            }
        }
    }
    Some(code)
}

/// The least rooted relabelling over all darts and both directions.
pub fn canonical_words(d: &Diagram) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for root in 0..d.glue().len() as u32 {
        for reflect in [false, true] {
            if let Some(code) = rooted_code(d, root, reflect, best.as_deref()) {
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
    }
    best.unwrap_or_default()
}

pub fn canonical_code(d: &Diagram) -> String {
    let n = d.crossing_count();
    if n == 0 {
        return "U".to_string();
    }
    let kind = if d.is_shadow() { 'S' } else { 'D' };
    let words = canonical_words(d);
    let mut s = format!("{kind}{n}:");
    for w in words {
        s.push(char::from_digit(w % 36, 36).expect("digit"));
        s.push(char::from_digit(w / 36, 36).expect("digit"));
    }
    s
}

/// Rebuilds a diagram (in its canonical labelling) from a canonical code.
pub fn decode(code: &str) -> Result<Diagram> {
    if code == "U" {
        return Ok(Diagram::unknot());
    }
    let bad = || Error::Parse(format!("malformed canonical code {code:?}"));
    let (head, body) = code.split_once(':').ok_or_else(bad)?;
    let mut head_chars = head.chars();
    let kind = head_chars.next().ok_or_else(bad)?;
    let n: usize = head_chars.as_str().parse().map_err(|_| bad())?;
    let with_over = match kind {
        'S' => false,
        'D' => true,
        _ => return Err(bad()),
    };
    let chars: Vec<u32> = body.chars().map(|c| c.to_digit(36)).collect::<Option<_>>().ok_or_else(bad)?;
    if !chars.len().is_multiple_of(2) {
        return Err(bad());
    }
    let words: Vec<u32> = chars.chunks(2).map(|p| p[0] + 36 * p[1]).collect();
    let per = if with_over { 5 } else { 4 };
    if words.len() != per * n {
        return Err(bad());
    }
    let mut glue = Vec::with_capacity(4 * n);
    let mut over = Vec::with_capacity(n);
    for chunk in words.chunks(per) {
        let ports = if with_over {
            // the stored bit says whether the over-strand uses even ports
            over.push(if chunk[0] == 1 { 0 } else { 1 });
            &chunk[1..]
        } else {
            chunk
        };
        glue.extend_from_slice(ports);
    }
    if glue.iter().any(|&g| g as usize >= 4 * n) {
        return Err(bad());
    }
    let d = Diagram::from_glue(glue, with_over.then_some(over), 0)?;
    if canonical_code(&d) != code {
        return Err(bad());
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::parse_diagram;

    const TREFOIL: &str = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
    const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

    #[test]
    fn relabelling_invariance() {
        let a = parse_diagram(TREFOIL).unwrap();
        let b = parse_diagram("X(3,1,4,6) X(5,3,6,2) X(1,5,2,4)").unwrap();
        assert_eq!(a.canonical_code(), b.canonical_code());
        assert_eq!(a.shadow().canonical_code(), b.shadow().canonical_code());
    }

    #[test]
    fn distinguishes_shadows() {
        let t = parse_diagram(TREFOIL).unwrap().shadow();
        let f = parse_diagram(FIGURE_EIGHT).unwrap().shadow();
        assert_ne!(t.canonical_code(), f.canonical_code());
    }

    #[test]
    fn reflection_invariance() {
        let t = parse_diagram(TREFOIL).unwrap();
        assert_eq!(t.reflect().canonical_code(), t.canonical_code());
        // reflecting the sphere turns a diagram into its mirror image, so the
        // code cannot tell them apart
        assert_eq!(t.mirror().unwrap().canonical_code(), t.canonical_code());
        assert_eq!(t.mirror().unwrap().shadow().canonical_code(), t.shadow().canonical_code());
    }

    #[test]
    fn decode_round_trip() {
        for text in [TREFOIL, FIGURE_EIGHT, "X(1,2,2,1)"] {
            let d = parse_diagram(text).unwrap();
            for x in [d.clone(), d.shadow()] {
                let code = x.canonical_code();
                assert_eq!(decode(&code).unwrap().canonical_code(), code);
            }
        }
        assert_eq!(decode("U").unwrap().crossing_count(), 0);
        assert!(decode("S3:zz").is_err());
        assert!(decode("Q1:00000000").is_err());
    }
}
