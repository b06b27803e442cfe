mod common;

use common::*;
use warplab::halfcurve::{lower_bounds, projection_length};
use warplab::rfactor::{find_rfactors, rfactor_bounds};
use warplab::warping::{warping_degree_alternating, warping_report};
use warplab::{projection_warping_degree, warping_degree, Orientation};

#[test]
fn warping_sum_of_reduced_alternating_diagrams() {
    for p in shadows_to(8) {
        let (a, b) = p.alternating_pair().unwrap();
        let c = p.crossing_count();
        for d in [a, b] {
            for o in Orientation::BOTH {
                let sum = warping_degree(&d, o).unwrap() + warping_degree(&d.mirror().unwrap(), o).unwrap();
                assert_eq!(sum, c - 1);
            }
        }
    }
}

#[test]
fn reversal_equals_mirror_on_every_diagram() {
    for p in shadows_to(8) {
        for d in all_diagrams(&p) {
            let reversed = warping_degree(&d, Orientation::Backward).unwrap();
            let mirrored = warping_degree(&d.mirror().unwrap(), Orientation::Forward).unwrap();
            assert_eq!(reversed, mirrored);
        }
    }
}

#[test]
fn over_crossing_shortcut_equals_full_minimum() {
    for p in shadows_to(8) {
        let (a, b) = p.alternating_pair().unwrap();
        for d in [a, b] {
            for o in Orientation::BOTH {
                let full = warping_report(&d, o).unwrap().minimum;
                assert_eq!(warping_degree_alternating(&d, o).unwrap(), full);
            }
        }
    }
}

#[test]
fn lower_bounds_hold_for_alternating_diagrams() {
    for p in shadows_to(8) {
        let (a, b) = p.alternating_pair().unwrap();
        for d in [a, b] {
            let lb = lower_bounds(&d).unwrap();
            assert_eq!(lb.length_bound, projection_length(&p).unwrap() / 2);
            for o in Orientation::BOTH {
                let wd = warping_degree(&d, o).unwrap();
                assert!(lb.length_bound <= wd && lb.polygon_bound <= wd);
            }
        }
    }
}

#[test]
fn rfactor_bounds_hold() {
    let mut checked = 0;
    for p in shadows_to(7).into_iter().filter(|p| !p.has_monogon()) {
        let wd = projection_warping_degree(&p).unwrap();
        for c in 0..p.crossing_count() {
            for r in find_rfactors(&p, c).unwrap() {
                let (lo, hi) = rfactor_bounds(&p, &r).unwrap();
                assert!(lo <= wd && wd <= hi);
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn eight_eighteen_shadow_has_no_rfactor() {
    let census = census_to(8);
    let e = census.iter().find(|e| e.knots == ["8_18"]).unwrap();
    let p = e.shadow().unwrap();
    for c in 0..8 {
        assert!(find_rfactors(&p, c).unwrap().is_empty());
    }
}
