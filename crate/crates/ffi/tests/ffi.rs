use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use finicert_ffi::*;

fn parse(text: &str) -> *mut FcSystem {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { fc_system_parse(c.as_ptr(), &mut out) }, FcStatus::Ok, "{}", last_error());
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(fc_last_error_message()) }.to_string_lossy().into_owned()
}

const NEWTON2: &str = "variables: x, y\nx + y\nx^2 + y^2\n";
const ELEM2: &str = "variables: x, y\nx + y\nx*y\n";

#[test]
fn check_and_witness_chart() {
    let ok = parse(NEWTON2);
    let bad = parse("variables: x, y\nx^2\nx*y\n");
    unsafe {
        assert_eq!(fc_system_arity(ok), 2);
        let mut chart = 99;
        assert_eq!(fc_check(ok, 0, &mut chart), FcStatus::Ok);
        assert_eq!(chart, 0);
        assert_eq!(fc_check(bad, 0, &mut chart), FcStatus::Rejected);
        assert_eq!(chart, 2);
        assert!(last_error().contains("chart 2"));
        assert_eq!(fc_check(bad, 0, ptr::null_mut()), FcStatus::Rejected);
        fc_system_free(ok);
        fc_system_free(bad);
    }
}

#[test]
fn certify_round_trip_and_verify() {
    let sys = parse(NEWTON2);
    let other = parse(ELEM2);
    unsafe {
        let mut cert = ptr::null_mut();
        assert_eq!(fc_certify(sys, 0, &mut cert), FcStatus::Ok);
        assert_eq!(fc_certificate_bound(cert), 3);

        let json = fc_certificate_to_json(cert);
        assert!(!json.is_null());
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        fc_string_free(json);

        let mut back = ptr::null_mut();
        let c = CString::new(text.clone()).unwrap();
        assert_eq!(fc_certificate_from_json(c.as_ptr(), &mut back), FcStatus::Ok);
        assert_eq!(fc_verify(sys, back), FcStatus::Ok);
        assert_eq!(fc_verify(other, back), FcStatus::Rejected);
        assert!(last_error().contains("hash"), "{}", last_error());

        let edited = CString::new(text.replacen("\"1/2\"", "\"3/2\"", 1)).unwrap();
        let mut tampered = ptr::null_mut();
        assert_eq!(fc_certificate_from_json(edited.as_ptr(), &mut tampered), FcStatus::Ok);
        assert_eq!(fc_verify(sys, tampered), FcStatus::Rejected);

        let garbage = CString::new(&text[..text.len() / 2]).unwrap();
        let mut none = ptr::null_mut();
        assert_eq!(fc_certificate_from_json(garbage.as_ptr(), &mut none), FcStatus::InputError);
        assert!(none.is_null());

        fc_certificate_free(tampered);
        fc_certificate_free(back);
        fc_certificate_free(cert);
        fc_system_free(other);
        fc_system_free(sys);
    }
}

#[test]
fn certify_refuses_and_budget_is_enforced() {
    let bad = parse("variables: x, y\nx^2\nx*y\n");
    let n3 = parse("variables: x, y, z\nx + y + z\nx^2 + y^2 + z^2\nx^3 + y^3 + z^3\n");
    unsafe {
        let mut cert = ptr::null_mut();
        assert_eq!(fc_certify(bad, 0, &mut cert), FcStatus::Rejected);
        assert!(cert.is_null());
        assert_eq!(fc_check(n3, 3, ptr::null_mut()), FcStatus::BudgetExceeded);
        assert_eq!(fc_check(n3, 0, ptr::null_mut()), FcStatus::Ok);
        fc_system_free(bad);
        fc_system_free(n3);
    }
}

#[test]
fn fiber_lengths() {
    let e2 = parse(ELEM2);
    let bad = parse("variables: x, y\nx^2\nx*y\n");
    unsafe {
        let mut len = 0;
        assert_eq!(fc_fiber_length(e2, [1, -6].as_ptr(), [1, 1].as_ptr(), 2, 0, &mut len), FcStatus::Ok);
        assert_eq!(len, 2);
        assert_eq!(fc_fiber_length(bad, [0, 0].as_ptr(), [1, 1].as_ptr(), 2, 0, &mut len), FcStatus::Ok);
        assert_eq!(len, -1);
        assert_eq!(fc_fiber_length(e2, [1, 1].as_ptr(), [1, 0].as_ptr(), 2, 0, &mut len), FcStatus::InputError);
        assert_eq!(fc_fiber_length(e2, [1].as_ptr(), [1].as_ptr(), 1, 0, &mut len), FcStatus::InputError);
        fc_system_free(e2);
        fc_system_free(bad);
    }
}

#[test]
fn input_errors_and_null_handles() {
    unsafe {
        let mut out = ptr::null_mut();
        let src = CString::new("variables: x, y\nx + y\nx^2 + w\n").unwrap();
        assert_eq!(fc_system_parse(src.as_ptr(), &mut out), FcStatus::InputError);
        assert!(out.is_null());
        assert!(last_error().contains("3:7"), "{}", last_error());

        let non_square = CString::new("variables: x, y\nx\ny\nx + y\n").unwrap();
        assert_eq!(fc_system_parse(non_square.as_ptr(), &mut out), FcStatus::InputError);

        assert_eq!(fc_system_parse(ptr::null(), &mut out), FcStatus::InternalError);
        assert_eq!(fc_check(ptr::null(), 0, ptr::null_mut()), FcStatus::InternalError);
        assert_eq!(last_error(), "null handle");
        assert_eq!(fc_verify(ptr::null(), ptr::null()), FcStatus::InternalError);
        assert_eq!(fc_system_arity(ptr::null()), 0);
        assert_eq!(fc_certificate_bound(ptr::null()), 0);
        assert!(fc_certificate_to_json(ptr::null()).is_null());
        fc_system_free(ptr::null_mut());
        fc_certificate_free(ptr::null_mut());
        fc_string_free(ptr::null_mut());

        let ok = parse(NEWTON2);
        assert_eq!(fc_check(ok, 0, ptr::null_mut()), FcStatus::Ok);
        assert_eq!(last_error(), "");
        fc_system_free(ok);
    }
}

#[test]
fn version_is_set() {
    let v = unsafe { CStr::from_ptr(fc_version()) }.to_str().unwrap();
    assert!(!v.is_empty());
}

// Compiles tests/smoke.c against the generated header and the static library.
#[test]
fn c_smoke_program() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libfinicert_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("finicert_smoke");
    let status = Command::new(&cc)
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status();
    match status {
        Ok(s) => assert!(s.success(), "C compile failed"),
        Err(e) => {
            eprintln!("skipping: no C compiler ({e})");
            return;
        }
    }
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("smoke ok"));
}
