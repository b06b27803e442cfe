use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use warplab_ffi::*;

const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

fn parse(pd: &str) -> (WarplabStatus, *mut WarplabDiagram) {
    let text = CString::new(pd).unwrap();
    let mut d = ptr::null_mut();
    let s = unsafe { warplab_diagram_parse(text.as_ptr(), &mut d) };
    (s, d)
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { warplab_string_free(p) };
    s
}

#[test]
fn trefoil_round_trip() {
    let (s, d) = parse(TREFOIL);
    assert_eq!(s, WarplabStatus::Ok);
    let mut n = 0usize;
    assert_eq!(unsafe { warplab_crossing_count(d, &mut n) }, WarplabStatus::Ok);
    assert_eq!(n, 3);
    for o in [WarplabOrientation::Forward, WarplabOrientation::Backward] {
        let mut wd = 99usize;
        assert_eq!(unsafe { warplab_warping_degree(d, o as i32, &mut wd) }, WarplabStatus::Ok);
        assert_eq!(wd, 1);
    }
    let mut pw = 0usize;
    assert_eq!(unsafe { warplab_projection_warping_degree(d, &mut pw) }, WarplabStatus::Ok);
    assert_eq!(pw, 1);
    let mut len = 0usize;
    assert_eq!(unsafe { warplab_projection_length(d, &mut len) }, WarplabStatus::Ok);
    assert_eq!(len, 2);
    let mut name = ptr::null_mut();
    assert_eq!(unsafe { warplab_identify(d, &mut name) }, WarplabStatus::Ok);
    assert_eq!(take_string(name), "3_1");
    let mut code = ptr::null_mut();
    assert_eq!(unsafe { warplab_canonical_code(d, &mut code) }, WarplabStatus::Ok);
    let code = take_string(code);
    let expected = warplab::pd::parse_diagram(TREFOIL).unwrap().canonical_code();
    assert_eq!(code, expected);
    unsafe { warplab_diagram_free(d) };
}

#[test]
fn errors_are_reported() {
    let (s, d) = parse("X(1,2,3)");
    assert_eq!(s, WarplabStatus::Parse);
    assert!(d.is_null());
    let msg = unsafe { CStr::from_ptr(warplab_last_error()) }.to_str().unwrap();
    assert!(!msg.is_empty());

    let (s, shadow) = parse("P(1,4,2,5) P(3,6,4,1) P(5,2,6,3)");
    assert_eq!(s, WarplabStatus::Ok);
    let mut flag = false;
    assert_eq!(unsafe { warplab_is_shadow(shadow, &mut flag) }, WarplabStatus::Ok);
    assert!(flag);
    let mut wd = 0usize;
    assert_eq!(unsafe { warplab_warping_degree(shadow, 0, &mut wd) }, WarplabStatus::ShadowInput);
    assert_eq!(unsafe { warplab_projection_warping_degree(shadow, &mut wd) }, WarplabStatus::Ok);
    assert_eq!(unsafe { warplab_warping_degree(shadow, 7, &mut wd) }, WarplabStatus::InvalidArgument);
    unsafe { warplab_diagram_free(shadow) };

    assert_eq!(unsafe { warplab_crossing_count(ptr::null(), &mut wd) }, WarplabStatus::NullPointer);
    assert_eq!(unsafe { warplab_diagram_parse(ptr::null(), &mut ptr::null_mut()) }, WarplabStatus::NullPointer);
    unsafe { warplab_diagram_free(ptr::null_mut()) };
    unsafe { warplab_string_free(ptr::null_mut()) };
}

fn header() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/warplab.h")
}

#[test]
fn header_declares_the_interface() {
    let h = std::fs::read_to_string(header()).unwrap();
    for name in [
        "warplab_diagram_parse",
        "warplab_diagram_free",
        "warplab_warping_degree",
        "warplab_projection_warping_degree",
        "warplab_canonical_code",
        "warplab_string_free",
        "warplab_last_error",
        "typedef struct WarplabDiagram WarplabDiagram",
        "WARPLAB_ORIENTATION_BACKWARD",
        "WARPLAB_STATUS_SHADOW_INPUT",
    ] {
        assert!(h.contains(name), "{name}");
    }
}

/// Compiles a small C program against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|p| p.parent()).unwrap();
    let lib = profile_dir.join("libwarplab_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static library or C compiler");
        return;
    }
    let dir = tempfile_dir();
    let src = dir.join("main.c");
    std::fs::write(
        &src,
        r#"
#include <stdio.h>
#include "warplab.h"
int main(void) {
    WarplabDiagram *d = NULL;
    if (warplab_diagram_parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", &d) != WARPLAB_STATUS_OK) return 1;
    size_t wd = 0;
    if (warplab_warping_degree(d, WARPLAB_ORIENTATION_FORWARD, &wd) != WARPLAB_STATUS_OK) return 2;
    char *name = NULL;
    if (warplab_identify(d, &name) != WARPLAB_STATUS_OK) return 3;
    printf("%zu %s\n", wd, name);
    warplab_string_free(name);
    warplab_diagram_free(d);
    if (warplab_diagram_parse("nonsense", &d) != WARPLAB_STATUS_PARSE) return 4;
    printf("%s\n", warplab_last_error() ? "error set" : "no error");
    return 0;
}
"#,
    )
    .unwrap();
    let bin = dir.join("main");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(header().parent().unwrap())
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{:?}", out);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1 3_1\nerror set\n");
}

fn tempfile_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("warplab-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
