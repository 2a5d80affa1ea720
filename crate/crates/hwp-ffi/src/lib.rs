//! C ABI for the hwp library.
//!
//! Certificates are opaque handles. Every function returns an `HwpStatus`;
//! on failure `hwp_last_error()` describes what went wrong on the calling thread.
//! Strings returned by the library must be released with `hwp_string_free`,
//! handles with `hwp_certificate_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hwp::{Certificate, HwpError, NKind, Params, SolveOptions};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HwpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Unsupported = 3,
    ProviderExhausted = 4,
    InvalidCertificate = 5,
    Internal = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HwpNKind {
    /// N = 2x
    TwoX = 0,
    /// N = 3x
    ThreeX = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HwpCertInfo {
    pub v: usize,
    pub n: usize,
    pub beta: usize,
    pub parts: usize,
    pub part_size: usize,
}

/// Opaque certificate handle.
pub struct HwpCertificate {
    inner: Certificate,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &HwpError) -> HwpStatus {
    match e {
        HwpError::Unsupported(_) => HwpStatus::Unsupported,
        HwpError::ProviderExhausted { .. } => HwpStatus::ProviderExhausted,
        HwpError::InvalidInput(_) | HwpError::Precondition(_) | HwpError::MalformedCycle(_) | HwpError::Json(_) | HwpError::Io(_) => {
            HwpStatus::InvalidInput
        }
        HwpError::Internal(_) => HwpStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (HwpStatus, String)>) -> HwpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            HwpStatus::Ok
        }
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("panic inside hwp");
            HwpStatus::Panic
        }
    }
}

fn fail(e: HwpError) -> (HwpStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (HwpStatus, String) {
    (HwpStatus::NullPointer, "null pointer argument".to_string())
}

/// Construct and verify a certificate for HWP(6xt; 6, N; 1, 3xt-2).
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle pointer.
#[no_mangle]
pub unsafe extern "C" fn hwp_solve(x: u32, t: u32, n_kind: HwpNKind, out: *mut *mut HwpCertificate) -> HwpStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        *out = ptr::null_mut();
        let kind = match n_kind {
            HwpNKind::TwoX => NKind::TwoX,
            HwpNKind::ThreeX => NKind::ThreeX,
        };
        let p = Params::new(x as usize, t as usize, kind).map_err(fail)?;
        let cert = hwp::solve(&p, &SolveOptions::default()).map_err(fail)?;
        *out = Box::into_raw(Box::new(HwpCertificate { inner: cert }));
        Ok(())
    })
}

/// Run the verifier and store the verdict in `*valid`. An invalid certificate
/// returns `InvalidCertificate`, with the failing checks in `hwp_last_error()`.
///
/// # Safety
/// `cert` must be a live handle; `valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hwp_verify(cert: *const HwpCertificate, valid: *mut bool) -> HwpStatus {
    guard(|| {
        if cert.is_null() || valid.is_null() {
            return Err(null());
        }
        let rep = hwp::verify(&(*cert).inner);
        *valid = rep.is_valid();
        if !rep.is_valid() {
            return Err((HwpStatus::InvalidCertificate, rep.to_string()));
        }
        Ok(())
    })
}

/// Header numbers of a certificate.
///
/// # Safety
/// `cert` must be a live handle; `info` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hwp_certificate_info(cert: *const HwpCertificate, info: *mut HwpCertInfo) -> HwpStatus {
    guard(|| {
        if cert.is_null() || info.is_null() {
            return Err(null());
        }
        let h = (*cert).inner.header;
        *info = HwpCertInfo { v: h.v, n: h.n, beta: h.beta, parts: h.parts, part_size: h.part_size };
        Ok(())
    })
}

/// Serialize to JSON. Free the string with `hwp_string_free`.
///
/// # Safety
/// `cert` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hwp_certificate_to_json(cert: *const HwpCertificate, out: *mut *mut c_char) -> HwpStatus {
    guard(|| {
        if cert.is_null() || out.is_null() {
            return Err(null());
        }
        *out = ptr::null_mut();
        let s = (*cert).inner.to_json().map_err(fail)?;
        let c = CString::new(s).map_err(|e| (HwpStatus::Internal, e.to_string()))?;
        *out = c.into_raw();
        Ok(())
    })
}

/// Parse a certificate from JSON. Parsing does not verify; call `hwp_verify`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hwp_certificate_from_json(json: *const c_char, out: *mut *mut HwpCertificate) -> HwpStatus {
    guard(|| {
        if json.is_null() || out.is_null() {
            return Err(null());
        }
        *out = ptr::null_mut();
        let s = CStr::from_ptr(json).to_str().map_err(|e| (HwpStatus::InvalidInput, e.to_string()))?;
        let cert = Certificate::from_json(s).map_err(fail)?;
        *out = Box::into_raw(Box::new(HwpCertificate { inner: cert }));
        Ok(())
    })
}

/// # Safety
/// `cert` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hwp_certificate_free(cert: *mut HwpCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hwp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failing call on this thread; empty after a success.
/// The pointer stays valid until the next hwp call on the same thread.
#[no_mangle]
pub extern "C" fn hwp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
