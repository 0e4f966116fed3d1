//! C ABI over `plethysm-core`.
//!
//! Shapes cross the boundary as NUL-terminated strings in the usual text
//! syntax (`3,2,1`, `3,2,1/1`, empty or `0` for the empty partition).
//! Coefficients come back as decimal strings because they are unbounded;
//! structured results come back as JSON. Every returned string must be
//! released with [`plethysm_string_free`].
//!
//! Functions return a [`PlethysmStatus`]; on failure a description is kept
//! per thread and can be read with [`plethysm_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use plethysm_core::{Engine, Error, ENGINE_VERSION, Partition, SequenceSpec, SkewShape};

/// Opaque engine handle. Holds the memo tables; safe to share across
/// threads.
pub struct PlethysmEngine {
    inner: Engine,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlethysmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    VerificationFailed = 5,
    Internal = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(PlethysmStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => PlethysmStatus::ParseError,
            Error::Verification { .. } => PlethysmStatus::VerificationFailed,
            _ => PlethysmStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> PlethysmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            PlethysmStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal error (panic)".to_string());
            PlethysmStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(PlethysmStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(PlethysmStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn partition(p: *const c_char, what: &str) -> Result<Partition, Failure> {
    Ok(text(p, what)?.parse()?)
}

unsafe fn skew(p: *const c_char, what: &str) -> Result<SkewShape, Failure> {
    Ok(text(p, what)?.parse()?)
}

unsafe fn engine<'a>(p: *const PlethysmEngine) -> Result<&'a Engine, Failure> {
    p.as_ref()
        .map(|e| &e.inner)
        .ok_or_else(|| Failure(PlethysmStatus::NullPointer, "engine is null".to_string()))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(PlethysmStatus::NullPointer, "output pointer is null".to_string()));
    }
    let c = CString::new(s).map_err(|_| Failure(PlethysmStatus::Internal, "NUL in output".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

fn json_failure(e: serde_json::Error) -> Failure {
    Failure(PlethysmStatus::Internal, e.to_string())
}

/// Creates an engine. Release it with [`plethysm_engine_free`].
#[no_mangle]
pub extern "C" fn plethysm_engine_new() -> *mut PlethysmEngine {
    Box::into_raw(Box::new(PlethysmEngine { inner: Engine::new() }))
}

/// # Safety
/// `engine` must come from [`plethysm_engine_new`] and not be used again.
#[no_mangle]
pub unsafe extern "C" fn plethysm_engine_free(engine: *mut PlethysmEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// `a^ν_{λ,μ}` as a decimal string in `*out`. `nu` and `lambda` may be skew
/// shapes.
///
/// # Safety
/// Pointers must be valid NUL-terminated strings, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn plethysm_coefficient(
    engine: *const PlethysmEngine,
    nu: *const c_char,
    lambda: *const c_char,
    mu: *const c_char,
    out: *mut *mut c_char,
) -> PlethysmStatus {
    guard(|| {
        let e = self::engine(engine)?;
        let v = e.skew_plethysm_coefficient(&skew(nu, "nu")?, &skew(lambda, "lambda")?, &partition(mu, "mu")?);
        write_string(out, v.to_string())
    })
}

/// Littlewood–Richardson coefficient `c^ν_{λ,μ}`.
///
/// # Safety
/// Pointers must be valid NUL-terminated strings, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn plethysm_lr_coefficient(
    engine: *const PlethysmEngine,
    nu: *const c_char,
    lambda: *const c_char,
    mu: *const c_char,
    out: *mut u64,
) -> PlethysmStatus {
    guard(|| {
        let e = self::engine(engine)?;
        let v = e.lr_coefficient(&partition(nu, "nu")?, &partition(lambda, "lambda")?, &partition(mu, "mu")?);
        if out.is_null() {
            return Err(Failure(PlethysmStatus::NullPointer, "output pointer is null".to_string()));
        }
        *out = v;
        Ok(())
    })
}

/// Schur expansion of `s_λ ∘ s_μ` as a JSON object from partition text to
/// integer coefficient.
///
/// # Safety
/// Pointers must be valid NUL-terminated strings, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn plethysm_expansion(
    engine: *const PlethysmEngine,
    lambda: *const c_char,
    mu: *const c_char,
    out: *mut *mut c_char,
) -> PlethysmStatus {
    guard(|| {
        let e = self::engine(engine)?;
        let expansion = e.plethysm_schur(&partition(lambda, "lambda")?, &partition(mu, "mu")?);
        write_string(out, serde_json::to_string(&*expansion).map_err(json_failure)?)
    })
}

/// Stability sequence report for `(σ, τ, l, m)` over `j = 0..=j_max`, as
/// JSON.
///
/// # Safety
/// Pointers must be valid NUL-terminated strings, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn plethysm_sequence(
    engine: *const PlethysmEngine,
    sigma: *const c_char,
    tau: *const c_char,
    l: usize,
    m: usize,
    j_max: usize,
    window: usize,
    out: *mut *mut c_char,
) -> PlethysmStatus {
    guard(|| {
        let e = self::engine(engine)?;
        let spec = SequenceSpec::new(skew(sigma, "sigma")?, skew(tau, "tau")?, l, m, j_max)?;
        let report = e.sequence_a(&spec, window)?;
        write_string(out, serde_json::to_string(&report).map_err(json_failure)?)
    })
}

/// Description of the last failure on this thread, or null after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn plethysm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn plethysm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Engine version tag, statically allocated.
#[no_mangle]
pub extern "C" fn plethysm_version() -> *const c_char {
    static VERSION: OnceLock<CString> = OnceLock::new();
    VERSION
        .get_or_init(|| CString::new(ENGINE_VERSION).expect("version tag has no NUL"))
        .as_ptr()
}
