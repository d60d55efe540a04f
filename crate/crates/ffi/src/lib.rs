//! C interface to `fltl`.
//!
//! Formulas and automata are opaque heap handles released with their `_free`
//! function. Every fallible call returns an [`FltlStatus`]; on failure a
//! message is available from [`fltl_last_error`] on the same thread. Strings
//! handed out by the library must be released with [`fltl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fltl::analysis::{is_satisfiable, run};
use fltl::export::{export, Format};
use fltl::tableau::{build_with, merge_edges, BuildOptions};
use fltl::{Error, Formula, Nfa, Trace};

/// Opaque parsed formula.
pub struct FltlFormula(Formula);

/// Opaque automaton with merged edges.
pub struct FltlNfa(Nfa);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FltlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    TraceError = 4,
    AlphabetMismatch = 5,
    UnsupportedFormat = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FltlMode {
    Relaxed = 0,
    Strict = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: FltlStatus, msg: impl Into<String>) -> FltlStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> FltlStatus {
    let status = match e {
        Error::Parse { .. } => FltlStatus::ParseError,
        Error::Trace { .. } => FltlStatus::TraceError,
        Error::AlphabetMismatch(_) => FltlStatus::AlphabetMismatch,
        Error::UnsupportedFormat(_) => FltlStatus::UnsupportedFormat,
        _ => FltlStatus::Internal,
    };
    fail(status, e.to_string())
}

/// Run `body`, turning panics into `Internal`.
fn guarded(body: impl FnOnce() -> FltlStatus) -> FltlStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|_| fail(FltlStatus::Internal, "panic inside fltl"))
}

unsafe fn c_str<'a>(p: *const c_char) -> Result<&'a str, FltlStatus> {
    if p.is_null() {
        return Err(fail(FltlStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(FltlStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library output has no NUL").into_raw()
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn fltl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fltl_formula_parse(text: *const c_char, out: *mut *mut FltlFormula) -> FltlStatus {
    guarded(|| {
        if out.is_null() {
            return fail(FltlStatus::NullPointer, "null output pointer");
        }
        let src = match c_str(text) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match fltl::parse(src) {
            Ok(f) => {
                *out = Box::into_raw(Box::new(FltlFormula(f)));
                FltlStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Canonical text of a formula, to be released with `fltl_string_free`.
///
/// # Safety
/// `formula` must come from `fltl_formula_parse`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fltl_formula_print(formula: *const FltlFormula, out: *mut *mut c_char) -> FltlStatus {
    guarded(|| {
        if formula.is_null() || out.is_null() {
            return fail(FltlStatus::NullPointer, "null argument");
        }
        *out = into_c_string((*formula).0.to_string());
        FltlStatus::Ok
    })
}

/// # Safety
/// `formula` must come from `fltl_formula_parse` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fltl_formula_free(formula: *mut FltlFormula) {
    if !formula.is_null() {
        drop(Box::from_raw(formula));
    }
}

/// Build the automaton for a formula and merge parallel edges.
///
/// # Safety
/// `formula` must come from `fltl_formula_parse`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fltl_nfa_build(formula: *const FltlFormula, mode: FltlMode, out: *mut *mut FltlNfa) -> FltlStatus {
    guarded(|| {
        if formula.is_null() || out.is_null() {
            return fail(FltlStatus::NullPointer, "null argument");
        }
        let options = match mode {
            FltlMode::Relaxed => BuildOptions::default(),
            FltlMode::Strict => BuildOptions::strict(),
        };
        match build_with(&(*formula).0, &options) {
            Ok(nfa) => {
                *out = Box::into_raw(Box::new(FltlNfa(merge_edges(&nfa))));
                FltlStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `nfa` must come from `fltl_nfa_build` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fltl_nfa_free(nfa: *mut FltlNfa) {
    if !nfa.is_null() {
        drop(Box::from_raw(nfa));
    }
}

/// Number of states; 0 for NULL.
///
/// # Safety
/// `nfa` must be NULL or come from `fltl_nfa_build`.
#[no_mangle]
pub unsafe extern "C" fn fltl_nfa_state_count(nfa: *const FltlNfa) -> usize {
    nfa.as_ref().map_or(0, |n| n.0.state_count())
}

/// Number of merged symbolic edges; 0 for NULL.
///
/// # Safety
/// `nfa` must be NULL or come from `fltl_nfa_build`.
#[no_mangle]
pub unsafe extern "C" fn fltl_nfa_edge_count(nfa: *const FltlNfa) -> usize {
    nfa.as_ref().map_or(0, |n| n.0.edge_count())
}

/// Run one trace in the line format (`a b; ; a`, or `<eps>`).
///
/// # Safety
/// `nfa` must come from `fltl_nfa_build`, `trace` must be NUL-terminated and
/// `accepted` writable.
#[no_mangle]
pub unsafe extern "C" fn fltl_nfa_accepts(nfa: *const FltlNfa, trace: *const c_char, accepted: *mut bool) -> FltlStatus {
    guarded(|| {
        if nfa.is_null() || accepted.is_null() {
            return fail(FltlStatus::NullPointer, "null argument");
        }
        let line = match c_str(trace) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match line.parse::<Trace>().and_then(|t| run(&(*nfa).0, &t)) {
            Ok(b) => {
                *accepted = b;
                FltlStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Render the automaton as `"dot"` or `"json"`; release with `fltl_string_free`.
///
/// # Safety
/// `nfa` must come from `fltl_nfa_build`, `format` must be NUL-terminated and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fltl_nfa_export(nfa: *const FltlNfa, format: *const c_char, out: *mut *mut c_char) -> FltlStatus {
    guarded(|| {
        if nfa.is_null() || out.is_null() {
            return fail(FltlStatus::NullPointer, "null argument");
        }
        let name = match c_str(format) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match name.parse::<Format>() {
            Ok(fmt) => {
                *out = into_c_string(export(&(*nfa).0, fmt));
                FltlStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Decide satisfiability. When satisfiable and `witness` is not NULL, a
/// shortest accepted trace is written there in the line format; otherwise
/// `*witness` is set to NULL.
///
/// # Safety
/// `formula` must come from `fltl_formula_parse`; `satisfiable` must be
/// writable and `witness` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn fltl_formula_sat(
    formula: *const FltlFormula,
    satisfiable: *mut bool,
    witness: *mut *mut c_char,
) -> FltlStatus {
    guarded(|| {
        if formula.is_null() || satisfiable.is_null() {
            return fail(FltlStatus::NullPointer, "null argument");
        }
        let w = is_satisfiable(&(*formula).0);
        *satisfiable = w.is_some();
        if !witness.is_null() {
            *witness = w.map_or(ptr::null_mut(), |w| into_c_string(w.trace.to_string()));
        }
        FltlStatus::Ok
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fltl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
