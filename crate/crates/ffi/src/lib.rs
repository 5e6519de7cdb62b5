//! C ABI over the certifier.
//!
//! Handles are opaque and owned by the caller once returned; free them with
//! the matching `*_free`. Strings returned as `char *` are freed with
//! [`fc_string_free`]. Every call that fails records a message retrievable
//! with [`fc_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use finicert_core::certifier::serial::{CertificateFile, TOOL_VERSION};
use finicert_core::certifier::{
    check_origin_only_zero, fiber_dimension, finiteness_certificate, CertError, CertifierConfig, FiberLength,
    SquareSystem, Verdict,
};
use finicert_core::groebner::DEFAULT_BUDGET;
use finicert_core::polyring::{scalar, Scalar};
use finicert_core::sysfile::SystemFile;

/// Status codes; 0 to 3 match the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FcStatus {
    Ok = 0,
    /// The system is not finite, or a certificate did not verify.
    Rejected = 1,
    InputError = 2,
    BudgetExceeded = 3,
    /// A null handle or a caught panic.
    InternalError = 4,
}

/// A parsed square homogeneous system.
pub struct FcSystem {
    inner: SquareSystem,
}

/// A finiteness certificate bound to the system it was made for.
pub struct FcCertificate {
    inner: CertificateFile,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap_or_default());
}

fn status_of(e: &CertError) -> FcStatus {
    match e {
        CertError::NotFinite(_) | CertError::CertificateInvalid(_) => FcStatus::Rejected,
        CertError::ResourceBudgetExceeded(_) => FcStatus::BudgetExceeded,
        _ => FcStatus::InputError,
    }
}

fn fail(e: CertError) -> FcStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

fn config(budget: u64) -> CertifierConfig {
    CertifierConfig { budget: Some(if budget == 0 { DEFAULT_BUDGET } else { budget }), ..CertifierConfig::default() }
}

fn guard(f: impl FnOnce() -> FcStatus) -> FcStatus {
    set_error("");
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        set_error("internal panic");
        FcStatus::InternalError
    })
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, FcStatus> {
    if p.is_null() {
        set_error("null string");
        return Err(FcStatus::InternalError);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string is not UTF-8");
        FcStatus::InputError
    })
}

macro_rules! deref {
    ($p:expr) => {
        match $p.as_ref() {
            Some(v) => v,
            None => {
                set_error("null handle");
                return FcStatus::InternalError;
            }
        }
    };
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Parses a system file (`variables: x, y` then one polynomial per line).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_system_parse(text: *const c_char, out: *mut *mut FcSystem) -> FcStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return FcStatus::InternalError;
        }
        *out = ptr::null_mut();
        let src = tri!(read_str(text));
        let file = match SystemFile::parse(src) {
            Ok(f) => f,
            Err(e) => {
                set_error(e.to_string());
                return FcStatus::InputError;
            }
        };
        match SquareSystem::new(file.ring, file.polys) {
            Ok(sys) => {
                *out = Box::into_raw(Box::new(FcSystem { inner: sys }));
                FcStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `sys` must come from [`fc_system_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn fc_system_free(sys: *mut FcSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Number of variables, or 0 for a null handle.
///
/// # Safety
/// `sys` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_system_arity(sys: *const FcSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.inner.arity())
}

/// `FC_STATUS_OK` if the only common zero is the origin, `FC_STATUS_REJECTED`
/// otherwise with the 1-based witness chart in `witness_chart`. A `budget` of
/// 0 selects the default.
///
/// # Safety
/// `sys` must be a live handle; `witness_chart` may be null.
#[no_mangle]
pub unsafe extern "C" fn fc_check(sys: *const FcSystem, budget: u64, witness_chart: *mut u32) -> FcStatus {
    guard(|| {
        let sys = deref!(sys);
        if !witness_chart.is_null() {
            *witness_chart = 0;
        }
        match check_origin_only_zero(&sys.inner, &config(budget)) {
            Ok(Verdict::CertifiedFinite) => FcStatus::Ok,
            Ok(Verdict::RejectedPositiveDimensional(w)) => {
                if !witness_chart.is_null() {
                    *witness_chart = w.chart as u32 + 1;
                }
                set_error(format!("zero fiber is positive dimensional (chart {})", w.chart + 1));
                FcStatus::Rejected
            }
            Ok(Verdict::InputError(e)) => {
                set_error(e);
                FcStatus::InputError
            }
            Err(e) => fail(e),
        }
    })
}

/// Builds and self-verifies a certificate.
///
/// # Safety
/// `sys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_certify(sys: *const FcSystem, budget: u64, out: *mut *mut FcCertificate) -> FcStatus {
    guard(|| {
        let sys = deref!(sys);
        if out.is_null() {
            set_error("null output pointer");
            return FcStatus::InternalError;
        }
        *out = ptr::null_mut();
        match finiteness_certificate(&sys.inner, &config(budget)) {
            Ok(cert) => {
                *out = Box::into_raw(Box::new(FcCertificate { inner: CertificateFile::new(&sys.inner, cert) }));
                FcStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `cert` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn fc_certificate_free(cert: *mut FcCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// The bound `c` with `X_k^c` in the ideal for every `k`; 0 for null.
///
/// # Safety
/// `cert` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_certificate_bound(cert: *const FcCertificate) -> u32 {
    cert.as_ref().map_or(0, |c| c.inner.certificate.c)
}

/// JSON document; free with [`fc_string_free`]. Null on failure.
///
/// # Safety
/// `cert` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fc_certificate_to_json(cert: *const FcCertificate) -> *mut c_char {
    let Some(cert) = cert.as_ref() else {
        set_error("null handle");
        return ptr::null_mut();
    };
    match CString::new(cert.inner.to_json()) {
        Ok(s) => s.into_raw(),
        Err(_) => ptr::null_mut(),
    }
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_certificate_from_json(json: *const c_char, out: *mut *mut FcCertificate) -> FcStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return FcStatus::InternalError;
        }
        *out = ptr::null_mut();
        let src = tri!(read_str(json));
        match CertificateFile::from_json(src) {
            Ok(f) => {
                *out = Box::into_raw(Box::new(FcCertificate { inner: f }));
                FcStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// `FC_STATUS_OK` iff the certificate's hash matches `sys` and the
/// certificate identities hold.
///
/// # Safety
/// Both handles must be live.
#[no_mangle]
pub unsafe extern "C" fn fc_verify(sys: *const FcSystem, cert: *const FcCertificate) -> FcStatus {
    guard(|| {
        let sys = deref!(sys);
        let cert = deref!(cert);
        match cert.inner.verify_against(&sys.inner) {
            Ok(()) => FcStatus::Ok,
            Err(e) => fail(e),
        }
    })
}

/// Fiber length over the target `num[i] / den[i]`; `-1` in `length` means
/// positive dimensional.
///
/// # Safety
/// `num` and `den` must point to `len` values; `length` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fc_fiber_length(
    sys: *const FcSystem,
    num: *const i64,
    den: *const i64,
    len: usize,
    budget: u64,
    length: *mut i64,
) -> FcStatus {
    guard(|| {
        let sys = deref!(sys);
        if length.is_null() || (len > 0 && (num.is_null() || den.is_null())) {
            set_error("null pointer");
            return FcStatus::InternalError;
        }
        let (nums, dens) = if len == 0 {
            (&[][..], &[][..])
        } else {
            (std::slice::from_raw_parts(num, len), std::slice::from_raw_parts(den, len))
        };
        if dens.contains(&0) {
            set_error("zero denominator");
            return FcStatus::InputError;
        }
        let target: Vec<Scalar> = nums.iter().zip(dens).map(|(&n, &d)| scalar::frac(n, d)).collect();
        match fiber_dimension(&sys.inner, &target, &config(budget)) {
            Ok(FiberLength::Length(l)) => {
                *length = l as i64;
                FcStatus::Ok
            }
            Ok(FiberLength::PositiveDimensional) => {
                *length = -1;
                FcStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Message for the last failure on this thread; empty after a success.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn fc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn fc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn fc_version() -> *const c_char {
    static VERSION: std::sync::OnceLock<CString> = std::sync::OnceLock::new();
    VERSION.get_or_init(|| CString::new(TOOL_VERSION).unwrap()).as_ptr()
}
