//! C ABI for warplab.
//!
//! Diagrams are opaque handles created by [`warplab_diagram_parse`] and
//! released with [`warplab_diagram_free`]. Every fallible call returns a
//! [`WarplabStatus`] and writes its result through an out pointer; on failure
//! [`warplab_last_error`] describes the most recent error on the calling
//! thread. Strings handed out by the library are freed with
//! [`warplab_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use warplab::table::KnotTable;
use warplab::{Diagram, Error, Orientation};

/// Result codes of the C interface.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WarplabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    ShadowInput = 4,
    InvalidArgument = 5,
    Unsupported = 6,
    Panic = 7,
}

/// Direction of travel along the knot, as passed to
/// [`warplab_warping_degree`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WarplabOrientation {
    Forward = 0,
    Backward = 1,
}

/// An opaque knot diagram or shadow.
pub struct WarplabDiagram {
    inner: Diagram,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(e: &Error) -> WarplabStatus {
    match e {
        Error::Parse(_)
        | Error::EdgeMultiplicity { .. }
        | Error::EdgeLabels { .. }
        | Error::MixedRecords
        | Error::NotAKnot { .. }
        | Error::Orientation(_)
        | Error::NotPlanar { .. }
        | Error::Gluing(_) => WarplabStatus::Parse,
        Error::ShadowInput => WarplabStatus::ShadowInput,
        Error::NoSuchCrossing(_) | Error::Conway(_) | Error::CensusBound(_) => WarplabStatus::InvalidArgument,
        _ => WarplabStatus::Unsupported,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (WarplabStatus, String)>) -> WarplabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => WarplabStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            WarplabStatus::Panic
        }
    }
}

fn lib(e: Error) -> (WarplabStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (WarplabStatus, String) {
    (WarplabStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `d` must be null or a live handle from [`warplab_diagram_parse`].
unsafe fn diagram<'a>(d: *const WarplabDiagram) -> Result<&'a Diagram, (WarplabStatus, String)> {
    d.as_ref().map(|h| &h.inner).ok_or_else(|| null("diagram"))
}

fn write_string(s: String, out: *mut *mut c_char) -> Result<(), (WarplabStatus, String)> {
    let c = CString::new(s).map_err(|_| (WarplabStatus::Panic, "string with nul".to_string()))?;
    // SAFETY: caller checked `out` for null.
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Parses a PD code (`X(...)` records for a diagram, `P(...)` for a shadow).
///
/// # Safety
/// `pd` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn warplab_diagram_parse(pd: *const c_char, out: *mut *mut WarplabDiagram) -> WarplabStatus {
    guard(|| {
        if pd.is_null() {
            return Err(null("pd"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(pd)
            .to_str()
            .map_err(|_| (WarplabStatus::InvalidUtf8, "pd is not UTF-8".to_string()))?;
        let d = warplab::pd::parse_diagram(text).map_err(lib)?;
        *out = Box::into_raw(Box::new(WarplabDiagram { inner: d }));
        Ok(())
    })
}

/// Releases a diagram. Null is ignored.
///
/// # Safety
/// `d` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn warplab_diagram_free(d: *mut WarplabDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn warplab_crossing_count(d: *const WarplabDiagram, out: *mut usize) -> WarplabStatus {
    guard(|| {
        let d = diagram(d)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = d.crossing_count();
        Ok(())
    })
}

/// Whether the handle is a shadow (no over/under information).
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn warplab_is_shadow(d: *const WarplabDiagram, out: *mut bool) -> WarplabStatus {
    guard(|| {
        let d = diagram(d)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = d.is_shadow();
        Ok(())
    })
}

/// d(D) for an orientation given as a [`WarplabOrientation`] value.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn warplab_warping_degree(
    d: *const WarplabDiagram,
    orientation: i32,
    out: *mut usize,
) -> WarplabStatus {
    guard(|| {
        let d = diagram(d)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let o = match orientation {
            x if x == WarplabOrientation::Forward as i32 => Orientation::Forward,
            x if x == WarplabOrientation::Backward as i32 => Orientation::Backward,
            x => return Err((WarplabStatus::InvalidArgument, format!("orientation {x}"))),
        };
        *out = warplab::warping_degree(d, o).map_err(lib)?;
        Ok(())
    })
}

/// d(P) of the underlying shadow.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn warplab_projection_warping_degree(d: *const WarplabDiagram, out: *mut usize) -> WarplabStatus {
    guard(|| {
        let d = diagram(d)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = warplab::projection_warping_degree(d).map_err(lib)?;
        Ok(())
    })
}

/// l(P) of the underlying shadow.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn warplab_projection_length(d: *const WarplabDiagram, out: *mut usize) -> WarplabStatus {
    guard(|| {
        let d = diagram(d)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = warplab::halfcurve::projection_length(&d.shadow()).map_err(lib)?;
        Ok(())
    })
}

/// Canonical code of the diagram, equal for isomorphic diagrams.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer. Free the result with
/// [`warplab_string_free`].
#[no_mangle]
pub unsafe extern "C" fn warplab_canonical_code(d: *const WarplabDiagram, out: *mut *mut c_char) -> WarplabStatus {
    guard(|| {
        let d = diagram(d)?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(d.canonical_code(), out)
    })
}

/// Knot name from the bundled table, e.g. "5_2" or "3_1 # 3_1".
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer. Free the result with
/// [`warplab_string_free`].
#[no_mangle]
pub unsafe extern "C" fn warplab_identify(d: *const WarplabDiagram, out: *mut *mut c_char) -> WarplabStatus {
    guard(|| {
        let d = diagram(d)?;
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(KnotTable::bundled().identify(d).map_err(lib)?, out)
    })
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn warplab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn warplab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
