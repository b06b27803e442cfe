mod common;

use std::collections::BTreeSet;

use common::*;
use warplab::census::shadows_at;
use warplab::Diagram;

/// Every perfect matching of the 4n ports that closes to a reduced knot
/// shadow on the sphere, one per canonical class.
fn brute_force_shadows(n: usize) -> BTreeSet<String> {
    fn go(glue: &mut Vec<u32>, n: usize, out: &mut BTreeSet<String>) {
        let Some(first) = glue.iter().position(|&g| g == u32::MAX) else {
            if let Ok(d) = Diagram::from_glue(glue.clone(), None, 0) {
                if d.is_reduced() {
                    out.insert(d.canonical_code());
                }
            }
            return;
        };
        for other in first + 1..4 * n {
            if glue[other] != u32::MAX {
                continue;
            }
            glue[first] = other as u32;
            glue[other] = first as u32;
            go(glue, n, out);
            glue[first] = u32::MAX;
            glue[other] = u32::MAX;
        }
    }
    let mut out = BTreeSet::new();
    go(&mut vec![u32::MAX; 4 * n], n, &mut out);
    out
}

#[test]
fn census_matches_port_brute_force() {
    for n in 1..=4 {
        let census: BTreeSet<String> = shadows_at(n).unwrap().iter().map(|s| s.canonical_code()).collect();
        assert_eq!(census, brute_force_shadows(n), "n = {n}");
    }
}

#[test]
fn canonical_classes_match_isomorphism_search() {
    let mut rng = Lcg(7);
    let mut pool = Vec::new();
    for s in shadows_to(5) {
        let n = s.crossing_count();
        pool.push(s.clone());
        for _ in 0..3 {
            let perm = rng.permutation(n);
            let turn: Vec<u32> = (0..n).map(|_| rng.next(4) as u32).collect();
            let mirror = rng.next(2) == 1;
            pool.push(relabel(&s, &perm, &turn, mirror));
        }
    }
    for (i, a) in pool.iter().enumerate() {
        for b in &pool[i..] {
            assert_eq!(a.canonical_code() == b.canonical_code(), isomorphic(a, b));
        }
    }
}

#[test]
fn reduced_and_prime_match_gauss_word_tests() {
    for e in census_to(6) {
        let s = e.shadow().unwrap();
        let word = s.gauss_word();
        assert!(gauss_reduced(&word), "{}", e.code);
        assert_eq!(e.prime, !gauss_composite(&word), "{}", e.code);
        assert_eq!(e.prime, s.is_prime());
    }
}

#[test]
fn non_reduced_curves_are_detected() {
    // every shadow the port brute force rejects as non-reduced at n = 3
    fn go(glue: &mut Vec<u32>, bad: &mut usize) {
        let Some(first) = glue.iter().position(|&g| g == u32::MAX) else {
            if let Ok(d) = Diagram::from_glue(glue.clone(), None, 0) {
                assert_eq!(d.is_reduced(), gauss_reduced(&d.gauss_word()));
                assert_eq!(d.is_prime(), !gauss_composite(&d.gauss_word()));
                *bad += usize::from(!d.is_reduced());
            }
            return;
        };
        for other in first + 1..glue.len() {
            if glue[other] == u32::MAX {
                glue[first] = other as u32;
                glue[other] = first as u32;
                go(glue, bad);
                glue[first] = u32::MAX;
                glue[other] = u32::MAX;
            }
        }
    }
    let mut bad = 0;
    go(&mut vec![u32::MAX; 12], &mut bad);
    assert!(bad > 0);
}
