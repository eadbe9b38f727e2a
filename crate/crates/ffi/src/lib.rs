//! C ABI over the hecke-fusion library. Every entry point is JSON-in,
//! JSON-out: results arrive in an opaque buffer the caller must free with
//! `hf_buffer_free`, statuses are plain error codes, and the last failure
//! message is kept per thread for `hf_last_error_message`.

use hecke_fusion::qchar::{formal_qcharacter, hc_image, kappa_from_json, wakimoto_eigenvalue};
use hecke_fusion::rmatrix::{fused_idempotent, hecke_action};
use hecke_fusion::seminormal::matrix_unit_diag;
use hecke_fusion::suites::{self, SuiteConfig, SuiteName};
use hecke_fusion::young::{standard_tableaux_of, Partition};
use hecke_fusion::Error;
use serde::Deserialize;
use serde_json::{json, Value};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HfStatus {
    /// Success; the output buffer is populated.
    HfOk = 0,
    /// Malformed input (partition string, JSON document, coefficient).
    HfParse = 1,
    /// A cost guardrail was exceeded.
    HfLimit = 2,
    /// A requested evaluation point sits on a pole.
    HfSingular = 3,
    /// An unknown verification suite name.
    HfUnknownSuite = 4,
    /// A series whose top coefficient cannot be inverted.
    HfNonInvertible = 5,
    /// Filesystem failure.
    HfIo = 6,
    /// JSON (de)serialization failure.
    HfJson = 7,
    /// A required pointer argument was null.
    HfNullArgument = 8,
    /// A string argument was not valid UTF-8.
    HfUtf8 = 9,
    /// An internal invariant failed; the library state is still sound.
    HfPanic = 10,
}

/// Opaque, heap-allocated byte buffer holding a NUL-terminated JSON document.
pub struct HfBuffer {
    inner: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized: String = msg.chars().filter(|&ch| ch != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).expect("NUL-free message");
    });
}

fn status_of(e: &Error) -> HfStatus {
    match e {
        Error::Parse(_) => HfStatus::HfParse,
        Error::LimitExceeded { .. } => HfStatus::HfLimit,
        Error::SingularLimit { .. } => HfStatus::HfSingular,
        Error::UnknownSuite(_) => HfStatus::HfUnknownSuite,
        Error::NonInvertibleSeries => HfStatus::HfNonInvertible,
        Error::Io(_) => HfStatus::HfIo,
        Error::Json(_) => HfStatus::HfJson,
    }
}

fn fail(e: &Error) -> HfStatus {
    set_error(&e.to_string());
    status_of(e)
}

/// Reads a required C-string argument.
///
/// # Safety
/// `p` must be null or point to a NUL-terminated string.
unsafe fn text_arg<'a>(p: *const c_char) -> Result<&'a str, HfStatus> {
    if p.is_null() {
        set_error("null argument");
        return Err(HfStatus::HfNullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        HfStatus::HfUtf8
    })
}

fn deliver(out: *mut *mut HfBuffer, doc: &Value) -> HfStatus {
    if out.is_null() {
        set_error("null output pointer");
        return HfStatus::HfNullArgument;
    }
    let text = serde_json::to_string(doc).expect("serializable document");
    let inner = CString::new(text).expect("JSON has no NUL bytes");
    unsafe {
        *out = Box::into_raw(Box::new(HfBuffer { inner }));
    }
    HfStatus::HfOk
}

fn guarded(f: impl FnOnce() -> HfStatus) -> HfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal panic".into());
            set_error(&msg);
            HfStatus::HfPanic
        }
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hf_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

/// Message for the most recent failure on this thread; empty if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Pointer to the buffer's NUL-terminated contents; null for a null buffer.
///
/// # Safety
/// `buf` must be null or a live pointer obtained from this library.
#[no_mangle]
pub unsafe extern "C" fn hf_buffer_data(buf: *const HfBuffer) -> *const c_char {
    if buf.is_null() {
        return std::ptr::null();
    }
    (*buf).inner.as_ptr()
}

/// Length of the buffer's contents in bytes, excluding the terminator.
///
/// # Safety
/// `buf` must be null or a live pointer obtained from this library.
#[no_mangle]
pub unsafe extern "C" fn hf_buffer_len(buf: *const HfBuffer) -> usize {
    if buf.is_null() {
        return 0;
    }
    (*buf).inner.as_bytes().len()
}

/// Releases a buffer returned by this library. Null is ignored.
///
/// # Safety
/// `buf` must be null or a pointer obtained from this library that has not
/// been freed already.
#[no_mangle]
pub unsafe extern "C" fn hf_buffer_free(buf: *mut HfBuffer) {
    if !buf.is_null() {
        drop(Box::from_raw(buf));
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VerifyRequest {
    #[serde(default)]
    suites: Vec<String>,
    #[serde(default = "default_max_m")]
    max_m: u32,
    #[serde(default = "default_max_n")]
    max_n: u32,
    #[serde(default = "default_trunc")]
    trunc: u32,
    #[serde(default = "default_seed")]
    seed: u64,
    #[serde(default)]
    timings: bool,
}

fn default_max_m() -> u32 {
    3
}
fn default_max_n() -> u32 {
    2
}
fn default_trunc() -> u32 {
    6
}
fn default_seed() -> u64 {
    1
}

/// Runs verification suites. `config_json` holds an object with optional
/// fields `suites` (array of names; empty means all), `max_m`, `max_n`,
/// `trunc`, `seed`, and `timings`. The result buffer holds the full report;
/// a report with failing cases is still `HfOk` — inspect `summary.failed`.
///
/// # Safety
/// `config_json` must be null-terminated; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_verify(
    config_json: *const c_char,
    out: *mut *mut HfBuffer,
) -> HfStatus {
    guarded(|| {
        let text = match text_arg(config_json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let request: VerifyRequest = match serde_json::from_str(text) {
            Ok(r) => r,
            Err(e) => return fail(&Error::Json(e)),
        };
        let mut names = Vec::with_capacity(request.suites.len());
        for s in &request.suites {
            match SuiteName::from_str(s) {
                Ok(v) => names.push(v),
                Err(e) => return fail(&e),
            }
        }
        let config = SuiteConfig {
            suites: names,
            max_m: request.max_m,
            max_n: request.max_n,
            trunc: request.trunc,
            seed: request.seed,
        };
        match suites::run(&config) {
            Ok(report) => deliver(out, &report.to_json(request.timings)),
            Err(e) => fail(&e),
        }
    })
}

fn checked_partition(partition: &str, n: u32) -> Result<Partition, HfStatus> {
    let lam = Partition::from_str(partition).map_err(|e| fail(&e))?;
    if lam.size() > suites::MAX_RANK {
        return Err(fail(&Error::LimitExceeded {
            what: "partition size".into(),
            got: lam.size(),
            max: suites::MAX_RANK,
        }));
    }
    if n == 0 || n > suites::MAX_TENSOR {
        return Err(fail(&Error::LimitExceeded {
            what: "tensor-factor dimension".into(),
            got: n,
            max: suites::MAX_TENSOR,
        }));
    }
    Ok(lam)
}

/// Computes a primitive idempotent on tensor space as a sparse triple list.
/// `tableau` indexes the standard tableaux in reading-word order. With
/// `use_fusion` false the Jucys-Murphy recurrence route is used instead of
/// the spectral-product route; both produce identical output.
///
/// # Safety
/// `partition` must be null-terminated; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_idempotent(
    partition: *const c_char,
    tableau: u32,
    n: u32,
    use_fusion: bool,
    out: *mut *mut HfBuffer,
) -> HfStatus {
    guarded(|| {
        let text = match text_arg(partition) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let lam = match checked_partition(text, n) {
            Ok(l) => l,
            Err(s) => return s,
        };
        let tabs = standard_tableaux_of(&lam);
        if tableau as usize >= tabs.len() {
            return fail(&Error::LimitExceeded {
                what: format!("tableau index for shape {lam}"),
                got: tableau,
                max: tabs.len() as u32 - 1,
            });
        }
        let t = &tabs[tableau as usize];
        let op = if use_fusion {
            match fused_idempotent(t, n) {
                Ok(op) => op,
                Err(e) => return fail(&e),
            }
        } else {
            hecke_action(&matrix_unit_diag(t), n)
        };
        let mut doc = op.to_json();
        if lam.rows() > n {
            doc["note"] = json!(format!(
                "shape {lam} has more than {n} rows; the projector is zero"
            ));
        }
        deliver(out, &doc)
    })
}

/// Formal q-character of a shape: monomials in variables indexed by
/// (row value, content), with multiplicities.
///
/// # Safety
/// `partition` must be null-terminated; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_qchar_formal(
    partition: *const c_char,
    n: u32,
    out: *mut *mut HfBuffer,
) -> HfStatus {
    guarded(|| {
        let text = match text_arg(partition) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let lam = match checked_partition(text, n) {
            Ok(l) => l,
            Err(s) => return s,
        };
        deliver(out, &formal_qcharacter(&lam, n).to_json())
    })
}

/// Tableau-sum series image of a shape over the generator algebra,
/// truncated at order `trunc`.
///
/// # Safety
/// `partition` must be null-terminated; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_qchar_image(
    partition: *const c_char,
    n: u32,
    trunc: u32,
    out: *mut *mut HfBuffer,
) -> HfStatus {
    guarded(|| {
        let text = match text_arg(partition) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let lam = match checked_partition(text, n) {
            Ok(l) => l,
            Err(s) => return s,
        };
        if trunc > suites::MAX_TRUNC {
            return fail(&Error::LimitExceeded {
                what: "truncation order".into(),
                got: trunc,
                max: suites::MAX_TRUNC,
            });
        }
        deliver(out, &hc_image(&lam, n, trunc).to_json())
    })
}

/// Eigenvalue series under a boson specialization. `kappa_json` carries the
/// same document accepted by the CLI: "kappa_plus" (one coefficient array
/// per row, entry r multiplying z^r) and "kappa_minus" (entry r multiplying
/// z^-r); the number of rows fixes the rank n.
///
/// # Safety
/// `partition` and `kappa_json` must be null-terminated; `out` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_wakimoto(
    partition: *const c_char,
    kappa_json: *const c_char,
    trunc: u32,
    out: *mut *mut HfBuffer,
) -> HfStatus {
    guarded(|| {
        let lam_text = match text_arg(partition) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let kappa_text = match text_arg(kappa_json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let doc: Value = match serde_json::from_str(kappa_text) {
            Ok(d) => d,
            Err(e) => return fail(&Error::Json(e)),
        };
        let rows = match doc.get("kappa_plus").and_then(Value::as_array) {
            Some(a) if !a.is_empty() => a.len() as u32,
            _ => {
                return fail(&Error::Parse(
                    "kappa document needs a non-empty \"kappa_plus\" array".into(),
                ))
            }
        };
        let lam = match checked_partition(lam_text, rows) {
            Ok(l) => l,
            Err(s) => return s,
        };
        if trunc > suites::MAX_TRUNC {
            return fail(&Error::LimitExceeded {
                what: "truncation order".into(),
                got: trunc,
                max: suites::MAX_TRUNC,
            });
        }
        let (plus, minus) = match kappa_from_json(&doc, rows) {
            Ok(pair) => pair,
            Err(e) => return fail(&e),
        };
        match wakimoto_eigenvalue(&lam, &plus, &minus, trunc) {
            Ok(series) => deliver(out, &series.to_json()),
            Err(e) => fail(&e),
        }
    })
}
