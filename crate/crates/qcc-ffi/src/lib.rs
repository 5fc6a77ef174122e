//! C ABI for the certification pipeline.
//!
//! Certificates travel as opaque handles; every fallible call returns a
//! `QccStatus` and leaves a human-readable message retrievable through
//! [`qcc_last_error_message`]. Strings returned through out-parameters are
//! heap-allocated and must be released with [`qcc_string_free`]; handles
//! with [`qcc_certificate_free`]. The header `include/qcc.h` is generated
//! by cbindgen at build time.

use qcc::cosets::Family;
use qcc::error::Error;
use qcc::quantum::{
    construct_family_i, construct_family_ii, quantum_singleton_bound, QccCertificate,
    VerifyOptions,
};
use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Call outcome. Mirrors the CLI exit codes for the fallible values.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QccStatus {
    Ok = 0,
    InternalError = 1,
    PreconditionViolated = 2,
    BudgetExceeded = 3,
    NullArgument = 4,
    Panic = 5,
}

/// The two constructions.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QccFamily {
    I = 1,
    II = 2,
}

impl From<QccFamily> for Family {
    fn from(f: QccFamily) -> Family {
        match f {
            QccFamily::I => Family::I,
            QccFamily::II => Family::II,
        }
    }
}

/// Opaque certificate handle.
pub struct QccCertificateHandle {
    inner: QccCertificate,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let cstring = CString::new(message.replace('\0', " "))
        .unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(cstring));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn status_of(err: &Error) -> QccStatus {
    match err.exit_code() {
        2 => QccStatus::PreconditionViolated,
        3 => QccStatus::BudgetExceeded,
        _ => QccStatus::InternalError,
    }
}

fn report(err: Error) -> QccStatus {
    let status = status_of(&err);
    set_last_error(err.to_string());
    status
}

fn string_out(out: *mut *mut c_char, value: String) -> QccStatus {
    match CString::new(value) {
        Ok(cstring) => {
            unsafe { *out = cstring.into_raw() };
            QccStatus::Ok
        }
        Err(_) => {
            set_last_error("output contained an interior NUL byte".into());
            QccStatus::InternalError
        }
    }
}

fn guarded<T>(
    out: *mut T,
    empty: T,
    body: impl FnOnce() -> Result<T, Error> + std::panic::UnwindSafe,
) -> QccStatus {
    if out.is_null() {
        set_last_error("output pointer is NULL".into());
        return QccStatus::NullArgument;
    }
    unsafe { ptr::write(out, empty) };
    clear_last_error();
    match catch_unwind(body) {
        Ok(Ok(value)) => {
            unsafe { ptr::write(out, value) };
            QccStatus::Ok
        }
        Ok(Err(err)) => report(err),
        Err(panic) => {
            let message = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic across the FFI boundary".into());
            set_last_error(message);
            QccStatus::Panic
        }
    }
}

/// Most recent error message on this thread, or NULL when the last call
/// succeeded. The caller owns the string and frees it with
/// `qcc_string_free`.
#[no_mangle]
pub extern "C" fn qcc_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Crate version as a static string; do not free.
#[no_mangle]
pub extern "C" fn qcc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Constructs one code with default work budgets and writes an owned
/// certificate handle to `out`.
///
/// `level` is 0 (closed-form), 1 (algebraic checks) or 2 (adds the
/// exhaustive distance oracles).
#[no_mangle]
pub extern "C" fn qcc_construct(
    family: QccFamily,
    q: u64,
    i: u64,
    level: u8,
    out: *mut *mut QccCertificateHandle,
) -> QccStatus {
    let opts = VerifyOptions::default();
    qcc_construct_with_budgets(family, q, i, level, opts.budget_ranks, opts.budget_words, out)
}

/// As `qcc_construct`, with explicit level-2 work budgets.
#[no_mangle]
pub extern "C" fn qcc_construct_with_budgets(
    family: QccFamily,
    q: u64,
    i: u64,
    level: u8,
    budget_ranks: u64,
    budget_words: u64,
    out: *mut *mut QccCertificateHandle,
) -> QccStatus {
    guarded(out, ptr::null_mut(), move || {
        let opts = VerifyOptions { level, budget_ranks, budget_words };
        let cert = match family.into() {
            Family::I => construct_family_i(q, i, &opts)?,
            Family::II => construct_family_ii(q, i, &opts)?,
        };
        Ok(Box::into_raw(Box::new(QccCertificateHandle { inner: cert })))
    })
}

/// Whether every check required at the certificate's level ran and passed.
///
/// # Safety
/// `cert` must be a live handle returned by a construct call.
#[no_mangle]
pub unsafe extern "C" fn qcc_certificate_is_valid(cert: *const QccCertificateHandle) -> bool {
    if cert.is_null() {
        return false;
    }
    (*cert).inner.is_valid()
}

/// The certificate's [(n, k, μ; γ, d_f)] parameters, written to the five
/// out-pointers. Returns false on a NULL handle.
///
/// # Safety
/// `cert` must be a live handle; the out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcc_certificate_params(
    cert: *const QccCertificateHandle,
    n: *mut u64,
    k: *mut u64,
    mu: *mut u64,
    gamma: *mut u64,
    d_f: *mut u64,
) -> bool {
    if cert.is_null() || n.is_null() || k.is_null() || mu.is_null() || gamma.is_null() || d_f.is_null()
    {
        return false;
    }
    let params = (*cert).inner.params;
    *n = params.n;
    *k = params.k;
    *mu = params.mu;
    *gamma = params.gamma;
    *d_f = params.d_f;
    true
}

/// Serializes a certificate to its JSON form. The caller frees the string
/// with `qcc_string_free`.
///
/// # Safety
/// `cert` must be a live handle returned by a construct call.
#[no_mangle]
pub unsafe extern "C" fn qcc_certificate_json(
    cert: *const QccCertificateHandle,
    out: *mut *mut c_char,
) -> QccStatus {
    if out.is_null() {
        set_last_error("output pointer is NULL".into());
        return QccStatus::NullArgument;
    }
    *out = ptr::null_mut();
    if cert.is_null() {
        set_last_error("certificate handle is NULL".into());
        return QccStatus::NullArgument;
    }
    clear_last_error();
    string_out(out, (*cert).inner.to_json())
}

/// Releases a certificate handle. NULL is a no-op.
///
/// # Safety
/// `cert` must be NULL or a handle returned by a construct call, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn qcc_certificate_free(cert: *mut QccCertificateHandle) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// Releases a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qcc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Exact quantum Singleton bound (n−k)/2·(⌊2γ/(n+k)⌋+1) + γ + 1, written to
/// `out`. Fails with a precondition status when n ≤ k or n − k is odd.
#[no_mangle]
pub extern "C" fn qcc_singleton_bound(n: u64, k: u64, gamma: u64, out: *mut u64) -> QccStatus {
    let status = guarded(out, 0, move || Ok(quantum_singleton_bound(n, k, gamma)));
    if status == QccStatus::Panic {
        // the bound asserts its preconditions; surface them as such
        return QccStatus::PreconditionViolated;
    }
    status
}

/// Parameter table of a family over `qs[0..qs_len]` as CSV, one row per
/// (q, i) in the construction's range; invalid q values become warning
/// rows. The caller frees the string with `qcc_string_free`.
///
/// # Safety
/// `qs` must point to `qs_len` readable u64 values.
#[no_mangle]
pub unsafe extern "C" fn qcc_table_csv(
    family: QccFamily,
    qs: *const u64,
    qs_len: usize,
    level: u8,
    out: *mut *mut c_char,
) -> QccStatus {
    if out.is_null() || (qs.is_null() && qs_len > 0) {
        set_last_error("NULL argument".into());
        return QccStatus::NullArgument;
    }
    *out = ptr::null_mut();
    clear_last_error();
    let q_list: Vec<u64> = std::slice::from_raw_parts(qs, qs_len).to_vec();
    let opts = VerifyOptions { level, ..Default::default() };
    match catch_unwind(AssertUnwindSafe(|| {
        let rows = qcc::cli::table_rows(family.into(), &q_list, None, &opts);
        qcc::cli::table_csv(&rows)
    })) {
        Ok(csv) => string_out(out, csv),
        Err(_) => {
            set_last_error("panic while building the table".into());
            QccStatus::Panic
        }
    }
}

/// Cyclotomic coset decomposition of a family context as JSON. The caller
/// frees the string with `qcc_string_free`.
#[no_mangle]
pub extern "C" fn qcc_cosets_json(family: QccFamily, q: u64, out: *mut *mut c_char) -> QccStatus {
    if out.is_null() {
        set_last_error("output pointer is NULL".into());
        return QccStatus::NullArgument;
    }
    unsafe { *out = ptr::null_mut() };
    clear_last_error();
    match qcc::cli::cosets_value(family.into(), q) {
        Ok(value) => match serde_json::to_string_pretty(&value) {
            Ok(json) => string_out(out, json),
            Err(e) => {
                set_last_error(format!("serialization failed: {e}"));
                QccStatus::InternalError
            }
        },
        Err(err) => report(err),
    }
}
