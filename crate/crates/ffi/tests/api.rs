use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use fltl_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    fltl_string_free(s);
    out
}

unsafe fn parse(text: &str) -> *mut FltlFormula {
    let mut f = ptr::null_mut();
    assert_eq!(fltl_formula_parse(c(text).as_ptr(), &mut f), FltlStatus::Ok);
    f
}

#[test]
fn parse_print_free() {
    unsafe {
        let f = parse("G (a -> F b)");
        let mut out = ptr::null_mut();
        assert_eq!(fltl_formula_print(f, &mut out), FltlStatus::Ok);
        assert_eq!(take(out), "false R (!a | true U b)");
        fltl_formula_free(f);
        fltl_formula_free(ptr::null_mut());
    }
}

#[test]
fn errors_carry_status_and_message() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(fltl_formula_parse(c("a U").as_ptr(), &mut f), FltlStatus::ParseError);
        assert!(f.is_null());
        assert!(!fltl_last_error().is_null());
        assert_eq!(fltl_formula_parse(ptr::null(), &mut f), FltlStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(fltl_formula_parse(bad.as_ptr().cast(), &mut f), FltlStatus::InvalidUtf8);

        let g = parse("a");
        let mut nfa = ptr::null_mut();
        assert_eq!(fltl_nfa_build(g, FltlMode::Relaxed, &mut nfa), FltlStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(fltl_nfa_export(nfa, c("svg").as_ptr(), &mut out), FltlStatus::UnsupportedFormat);
        let mut yes = false;
        assert_eq!(fltl_nfa_accepts(nfa, c("a;; 1x").as_ptr(), &mut yes), FltlStatus::TraceError);
        assert_eq!(fltl_nfa_accepts(nfa, c("b").as_ptr(), &mut yes), FltlStatus::AlphabetMismatch);
        let msg = CStr::from_ptr(fltl_last_error()).to_str().unwrap();
        assert!(msg.contains('b'), "{msg}");
        fltl_nfa_free(nfa);
        fltl_formula_free(g);
    }
}

#[test]
fn build_run_export() {
    unsafe {
        let f = parse("!(X true)");
        for mode in [FltlMode::Relaxed, FltlMode::Strict] {
            let mut nfa = ptr::null_mut();
            assert_eq!(fltl_nfa_build(f, mode, &mut nfa), FltlStatus::Ok);
            assert_eq!(fltl_nfa_state_count(nfa), 1);
            assert_eq!(fltl_nfa_edge_count(nfa), 0);
            let mut yes = false;
            assert_eq!(fltl_nfa_accepts(nfa, c("<eps>").as_ptr(), &mut yes), FltlStatus::Ok);
            assert!(yes);
            let mut out = ptr::null_mut();
            assert_eq!(fltl_nfa_export(nfa, c("json").as_ptr(), &mut out), FltlStatus::Ok);
            let json = take(out);
            assert!(json.contains("\"accepting\": true"));
            fltl_nfa_free(nfa);
        }
        fltl_formula_free(f);
        assert_eq!(fltl_nfa_state_count(ptr::null()), 0);
    }
}

#[test]
fn satisfiability() {
    unsafe {
        let f = parse("G a");
        let mut sat = true;
        let mut w = ptr::null_mut();
        assert_eq!(fltl_formula_sat(f, &mut sat, &mut w), FltlStatus::Ok);
        assert!(!sat && w.is_null());
        fltl_formula_free(f);

        let f = parse("X X a");
        assert_eq!(fltl_formula_sat(f, &mut sat, &mut w), FltlStatus::Ok);
        assert!(sat);
        assert_eq!(take(w), "; ; a");
        assert_eq!(fltl_formula_sat(f, &mut sat, ptr::null_mut()), FltlStatus::Ok);
        fltl_formula_free(f);
    }
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_is_generated() {
    let header = std::fs::read_to_string(crate_dir().join("include/fltl.h")).unwrap();
    for name in [
        "fltl_formula_parse",
        "fltl_formula_print",
        "fltl_formula_free",
        "fltl_nfa_build",
        "fltl_nfa_accepts",
        "fltl_nfa_export",
        "fltl_formula_sat",
        "fltl_string_free",
        "fltl_last_error",
        "FLTL_STATUS_PARSE_ERROR",
        "typedef struct FltlNfa FltlNfa;",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

fn static_lib() -> Option<PathBuf> {
    // target/<profile>/deps/api-xxxx -> target/<profile>
    let profile = std::env::current_exe().ok()?.parent()?.parent()?.to_path_buf();
    let lib = profile.join("libfltl_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_and_runs() {
    let Some(lib) = static_lib() else {
        eprintln!("static library not found, skipping");
        return;
    };
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler, skipping");
        return;
    }
    let exe = std::env::temp_dir().join(format!("fltl-smoke-{}", std::process::id()));
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C smoke test failed to compile");
    let out = Command::new(&exe).output().unwrap();
    let _ = std::fs::remove_file(Path::new(&exe));
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
