//! C ABI over the `r2subfield` library.
//!
//! Handles are opaque and owned by the caller once returned; release them
//! with the matching `*_free` function. Every fallible call returns an
//! [`R2sStatus`]; on failure [`r2s_last_error`] describes the problem for the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use r2subfield::analysis::{predicted_parameters, Cardinalities, FamilyId};
use r2subfield::cli::{analyze, render_report, CodeReport, Configuration, Format};
use r2subfield::Error;

/// Result codes shared by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum R2sStatus {
    Ok = 0,
    InvalidArgument = 1,
    Degenerate = 2,
    TooLarge = 3,
    NullPointer = 4,
    OutOfRange = 5,
    Internal = 6,
}

/// A measured code together with its predicted parameters.
pub struct R2sReport {
    inner: CodeReport,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: R2sStatus, msg: impl Into<String>) -> R2sStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> R2sStatus {
    match e {
        Error::Degenerate(_) | Error::TrivialCode => R2sStatus::Degenerate,
        Error::AmbientTooLarge { .. } | Error::CodeTooLarge { .. } => R2sStatus::TooLarge,
        _ => R2sStatus::InvalidArgument,
    }
}

fn guarded(f: impl FnOnce() -> R2sStatus) -> R2sStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == R2sStatus::Ok {
                set_error("");
            }
            s
        }
        Err(_) => fail(R2sStatus::Internal, "internal panic"),
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, R2sStatus> {
    if p.is_null() {
        return Err(fail(R2sStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(R2sStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into this library.
#[no_mangle]
pub extern "C" fn r2s_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds and analyses one configuration. Subsets use `"1,3"` syntax with
/// `"-"` for the empty set. On success `*out` receives a new report.
///
/// # Safety
/// String arguments must be null or valid NUL-terminated strings; `out` must
/// be null or writable.
#[no_mangle]
pub unsafe extern "C" fn r2s_analyze(
    m: u32,
    family: u8,
    l: *const c_char,
    mm: *const c_char,
    nn: *const c_char,
    out: *mut *mut R2sReport,
) -> R2sStatus {
    guarded(|| {
        if out.is_null() {
            return fail(R2sStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let (l, mm, nn) = match (read_str(l, "L"), read_str(mm, "M"), read_str(nn, "N")) {
            (Ok(a), Ok(b), Ok(c)) => (a, b, c),
            (Err(s), _, _) | (_, Err(s), _) | (_, _, Err(s)) => return s,
        };
        let report = Configuration::parse(m as usize, family, l, mm, nn).and_then(|c| analyze(&c));
        match report {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(R2sReport { inner }));
                R2sStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Releases a report. Passing null is a no-op.
///
/// # Safety
/// `report` must come from [`r2s_analyze`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn r2s_report_free(report: *mut R2sReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

unsafe fn with_report<T>(
    report: *const R2sReport,
    default: T,
    f: impl FnOnce(&CodeReport) -> T,
) -> T {
    match report.as_ref() {
        Some(r) => f(&r.inner),
        None => {
            set_error("report is null");
            default
        }
    }
}

/// Code length; 0 for a null report.
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn r2s_report_n(report: *const R2sReport) -> u64 {
    with_report(report, 0, |r| r.n as u64)
}

/// Dimension; 0 for a null report.
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn r2s_report_k(report: *const R2sReport) -> u32 {
    with_report(report, 0, |r| r.k)
}

/// Minimum distance; 0 for a null report.
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn r2s_report_d(report: *const R2sReport) -> u64 {
    with_report(report, 0, |r| r.d as u64)
}

/// Whether the measured code equals its prediction.
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn r2s_report_matches(report: *const R2sReport) -> bool {
    with_report(report, false, |r| r.matches)
}

/// Number of distinct weights (including 0) in the measured distribution.
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn r2s_report_weight_count(report: *const R2sReport) -> usize {
    with_report(report, 0, |r| r.weights.len())
}

/// The `index`-th entry of the measured distribution, ascending by weight.
///
/// # Safety
/// `report` must be null or a live report; `weight` and `count` must be null
/// or writable.
#[no_mangle]
pub unsafe extern "C" fn r2s_report_weight(
    report: *const R2sReport,
    index: usize,
    weight: *mut u64,
    count: *mut u64,
) -> R2sStatus {
    guarded(|| {
        let Some(r) = report.as_ref() else {
            return fail(R2sStatus::NullPointer, "report is null");
        };
        if weight.is_null() || count.is_null() {
            return fail(R2sStatus::NullPointer, "output pointer is null");
        }
        match r.inner.weights.get(index) {
            Some(e) => {
                *weight = e.w as u64;
                *count = e.count;
                R2sStatus::Ok
            }
            None => fail(
                R2sStatus::OutOfRange,
                format!(
                    "index {index} out of range for {} weights",
                    r.inner.weights.len()
                ),
            ),
        }
    })
}

/// The report as JSON. Free the result with [`r2s_string_free`]; null on error.
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn r2s_report_json(report: *const R2sReport) -> *mut c_char {
    with_report(report, ptr::null_mut(), |r| {
        CString::new(render_report(r, Format::Json))
            .map(CString::into_raw)
            .unwrap_or(ptr::null_mut())
    })
}

/// Releases a string returned by this library. Passing null is a no-op.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn r2s_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `Σ_{i<k} ⌈d / 2^i⌉`.
#[no_mangle]
pub extern "C" fn r2s_griesmer_sum(k: u32, d: u64) -> u64 {
    r2subfield::analysis::griesmer_sum(k, d)
}

/// Closed-form `[n, k, d]` for a family and subset sizes.
///
/// # Safety
/// Output pointers must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn r2s_predicted_parameters(
    family: u8,
    m: u32,
    size_l: u32,
    size_m: u32,
    size_n: u32,
    n: *mut u64,
    k: *mut u32,
    d: *mut u64,
) -> R2sStatus {
    guarded(|| {
        if n.is_null() || k.is_null() || d.is_null() {
            return fail(R2sStatus::NullPointer, "output pointer is null");
        }
        let sizes = Cardinalities::new(size_l, size_m, size_n);
        match FamilyId::new(family).and_then(|f| predicted_parameters(f, m, sizes)) {
            Ok((pn, pk, pd)) => {
                *n = pn as u64;
                *k = pk;
                *d = pd as u64;
                R2sStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_mapping() {
        assert_eq!(
            status_of(&Error::Degenerate("x".into())),
            R2sStatus::Degenerate
        );
        assert_eq!(
            status_of(&Error::CodeTooLarge { size: 2, cap: 1 }),
            R2sStatus::TooLarge
        );
        assert_eq!(
            status_of(&Error::InvalidFamily(0)),
            R2sStatus::InvalidArgument
        );
    }

    #[test]
    fn last_error_is_cleared_on_success() {
        set_error("boom");
        assert_eq!(guarded(|| R2sStatus::Ok), R2sStatus::Ok);
        assert!(unsafe { CStr::from_ptr(r2s_last_error()) }
            .to_bytes()
            .is_empty());
        assert_eq!(guarded(|| panic!("inner")), R2sStatus::Internal);
    }
}
