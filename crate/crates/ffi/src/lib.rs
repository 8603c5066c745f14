//! C ABI for the lgv exact computational-algebra library.
//!
//! Conventions, uniform across every entry point:
//!
//! * Fallible calls return an [`LgvStatus`]; results travel through out
//!   pointers, which are written only on `LGV_STATUS_OK`.
//! * Handles ([`LgvIdeal`]) and strings written to out pointers are owned by
//!   the caller: release them with [`lgv_ideal_free`] / [`lgv_string_free`].
//! * After any non-OK status, [`lgv_last_error_message`] returns a
//!   thread-local description of what went wrong.
//! * Rust panics are caught at the boundary and surfaced as
//!   `LGV_STATUS_INTERNAL_ERROR`; unwinding never crosses into C.
//! * Numeric limit arguments treat `0` as "use the stock value", since C has
//!   no way to omit an argument.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use lgv_core::ideal_ops::krull_dimension;
use lgv_core::parse::{emit_ideal_file, parse_ideal_file};
use lgv_core::schemes::{
    canonical_chain, commuting_pair_ideal, standard_chart_ideal, ChartSpec,
};
use lgv_core::verify::{run_full_suite, SuiteConfig};
use lgv_core::{Error, FieldSpec, Guards, Ideal, MonomialOrder};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LgvStatus {
    /// The call succeeded and any out pointers were written.
    Ok = 0,
    /// A pointer was null, a string was not UTF-8, or an argument value was
    /// rejected (unknown field or order name, invalid chart parameters).
    InvalidArgument = 1,
    /// Input text did not match the ideal-file format.
    ParseError = 2,
    /// A degree, basis-size, or wall-clock guard stopped the computation
    /// before it finished; retry with larger limits if the wait is worth it.
    ResourceLimit = 3,
    /// The request was well formed but has no answer — for example the
    /// dimension of an empty scheme, or maps that fail `f·g = g·f = s·Id`.
    DomainError = 4,
    /// A caught panic or internal inconsistency; please report these.
    InternalError = 5,
}

/// An ideal together with its ambient ring. Opaque: create one with
/// [`lgv_ideal_parse`], [`lgv_chart_ideal`], [`lgv_commuting_pair_ideal`] or
/// [`lgv_ideal_groebner`], and release it with [`lgv_ideal_free`].
pub struct LgvIdeal {
    ideal: Ideal,
}

impl LgvIdeal {
    fn boxed(ideal: Ideal) -> *mut LgvIdeal {
        Box::into_raw(Box::new(LgvIdeal { ideal }))
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let owned = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = owned);
}

fn null_arg(what: &str) -> LgvStatus {
    set_last_error(&format!("`{what}` must not be null"));
    LgvStatus::InvalidArgument
}

fn status_of(err: &Error) -> LgvStatus {
    match err {
        Error::Parse { .. } => LgvStatus::ParseError,
        Error::Resource { .. } => LgvStatus::ResourceLimit,
        Error::InvalidField(_)
        | Error::InvalidChart(_)
        | Error::RingMismatch(_)
        | Error::FieldMismatch(_) => LgvStatus::InvalidArgument,
        Error::EmptyScheme
        | Error::ZeroPolynomial
        | Error::DivisionByZero
        | Error::NotLinkedPair(_)
        | Error::PointNotOnScheme { .. }
        | Error::Schedule { .. } => LgvStatus::DomainError,
        Error::Internal(_) | Error::Io(_) => LgvStatus::InternalError,
    }
}

fn report(err: Error) -> LgvStatus {
    let status = status_of(&err);
    set_last_error(&err.to_string());
    status
}

fn panic_text(payload: &(dyn std::any::Any + Send)) -> &str {
    if let Some(text) = payload.downcast_ref::<&str>() {
        text
    } else if let Some(text) = payload.downcast_ref::<String>() {
        text.as_str()
    } else {
        "non-string payload"
    }
}

/// Run `f` with panics caught; an `Err` is a status already recorded via
/// [`set_last_error`].
fn run<T>(f: impl FnOnce() -> lgv_core::Result<T>) -> Result<T, LgvStatus> {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(value)) => Ok(value),
        Ok(Err(err)) => Err(report(err)),
        Err(payload) => {
            set_last_error(&format!("internal panic: {}", panic_text(payload.as_ref())));
            Err(LgvStatus::InternalError)
        }
    }
}

/// Borrow a C string as UTF-8, reporting null or encoding problems.
///
/// # Safety
/// A non-null `ptr` must point to a NUL-terminated string that stays valid
/// for the duration of the call.
unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, LgvStatus> {
    if ptr.is_null() {
        return Err(null_arg(what));
    }
    match CStr::from_ptr(ptr).to_str() {
        Ok(text) => Ok(text),
        Err(_) => {
            set_last_error(&format!("`{what}` is not valid UTF-8"));
            Err(LgvStatus::InvalidArgument)
        }
    }
}

fn into_owned_cstring(text: String) -> *mut c_char {
    CString::new(text.replace('\0', " "))
        .expect("interior NULs removed")
        .into_raw()
}

/// Stock resource limits (degree cap 64, basis cap 4096, 300-second wall
/// clock), with zero meaning "keep the stock value".
fn guards_with(max_degree: u64, timeout_seconds: u64) -> Guards {
    let mut guards = Guards::default();
    if max_degree > 0 {
        guards.max_degree = max_degree;
    }
    if timeout_seconds > 0 {
        guards.timeout = Duration::from_secs(timeout_seconds);
    }
    guards
}

/// Version of this library as a static NUL-terminated string; do not free.
#[no_mangle]
pub extern "C" fn lgv_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message describing the most recent failure on the calling thread, as a
/// NUL-terminated string; empty until some call fails. The pointer stays
/// valid until the next failing call on the same thread. Do not free it.
#[no_mangle]
pub extern "C" fn lgv_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parse ideal-file text — a `vars:` header, an optional `weights:` header,
/// `#` comments, and one polynomial generator per line — over the field
/// named by `field_text` (`"rat"`, or `"fp:<p>"` for an odd prime
/// `p < 2^31`). On success writes a caller-owned handle to `*out`.
///
/// # Safety
/// `text` and `field_text` must be NUL-terminated strings and `out` a
/// writable slot, all valid for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn lgv_ideal_parse(
    text: *const c_char,
    field_text: *const c_char,
    out: *mut *mut LgvIdeal,
) -> LgvStatus {
    let Some(out) = out.as_mut() else {
        return null_arg("out");
    };
    *out = ptr::null_mut();
    let text = match read_str(text, "text") {
        Ok(text) => text,
        Err(status) => return status,
    };
    let field_text = match read_str(field_text, "field_text") {
        Ok(text) => text,
        Err(status) => return status,
    };
    match run(|| {
        let field = FieldSpec::parse(field_text)?;
        let (ring, gens) = parse_ideal_file(text, field)?;
        Ok(LgvIdeal::boxed(Ideal::new(&ring, gens)))
    }) {
        Ok(handle) => {
            *out = handle;
            LgvStatus::Ok
        }
        Err(status) => status,
    }
}

/// Render the ideal back into the text format accepted by
/// [`lgv_ideal_parse`]. On success writes a caller-owned NUL-terminated
/// string to `*out`; release it with [`lgv_string_free`].
///
/// # Safety
/// `handle` must be a live handle from this library and `out` a writable
/// slot, both valid for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn lgv_ideal_emit(
    handle: *const LgvIdeal,
    out: *mut *mut c_char,
) -> LgvStatus {
    let Some(out) = out.as_mut() else {
        return null_arg("out");
    };
    *out = ptr::null_mut();
    let Some(handle) = handle.as_ref() else {
        return null_arg("handle");
    };
    match run(|| Ok(emit_ideal_file(handle.ideal.ring(), handle.ideal.gens()))) {
        Ok(text) => {
            *out = into_owned_cstring(text);
            LgvStatus::Ok
        }
        Err(status) => status,
    }
}

/// Compute the reduced Groebner basis of the ideal under `order_text`
/// (`"lex"`, `"grevlex"`, or `"wgrevlex"`) and write it to `*out` as a new
/// caller-owned ideal whose generators are the basis elements, monic and
/// sorted by ascending leading term. `max_degree` and `timeout_seconds`
/// bound the computation; zero keeps the stock limits (64 / 300 s).
///
/// # Safety
/// `handle` must be a live handle from this library, `order_text` a
/// NUL-terminated string, and `out` a writable slot, all valid for the
/// duration of the call.
#[no_mangle]
pub unsafe extern "C" fn lgv_ideal_groebner(
    handle: *const LgvIdeal,
    order_text: *const c_char,
    max_degree: u64,
    timeout_seconds: u64,
    out: *mut *mut LgvIdeal,
) -> LgvStatus {
    let Some(out) = out.as_mut() else {
        return null_arg("out");
    };
    *out = ptr::null_mut();
    let Some(handle) = handle.as_ref() else {
        return null_arg("handle");
    };
    let order_text = match read_str(order_text, "order_text") {
        Ok(text) => text,
        Err(status) => return status,
    };
    let Some(order) = MonomialOrder::parse(order_text) else {
        set_last_error(&format!(
            "unknown monomial order `{order_text}`: expected `lex`, `grevlex`, or `wgrevlex`"
        ));
        return LgvStatus::InvalidArgument;
    };
    let guards = guards_with(max_degree, timeout_seconds);
    match run(|| {
        let basis = handle.ideal.groebner_basis(&order, &guards)?;
        Ok(LgvIdeal::boxed(Ideal::new(
            handle.ideal.ring(),
            basis.as_ref().clone(),
        )))
    }) {
        Ok(gb) => {
            *out = gb;
            LgvStatus::Ok
        }
        Err(status) => status,
    }
}

/// Krull dimension of the quotient by the ideal, written to `*out_dim`.
/// Fails with `LGV_STATUS_DOMAIN_ERROR` when the ideal contains 1 (the
/// empty scheme has no dimension). `timeout_seconds` zero keeps the stock
/// 300-second limit.
///
/// # Safety
/// `handle` must be a live handle from this library and `out_dim` a
/// writable slot, both valid for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn lgv_ideal_dimension(
    handle: *const LgvIdeal,
    timeout_seconds: u64,
    out_dim: *mut i64,
) -> LgvStatus {
    let Some(out_dim) = out_dim.as_mut() else {
        return null_arg("out_dim");
    };
    let Some(handle) = handle.as_ref() else {
        return null_arg("handle");
    };
    let guards = guards_with(0, timeout_seconds);
    match run(|| krull_dimension(&handle.ideal, &guards)) {
        Ok(result) => {
            *out_dim = result.dim as i64;
            LgvStatus::Ok
        }
        Err(status) => status,
    }
}

/// Build the canonical chart ideal of a chain of `n` linked rank-`r`
/// subspaces of `d`-space and write a caller-owned handle to `*out`. For
/// `n = 2` this is the standard two-node chart with the largest exchanged
/// block; the variables are `A<i>_<j>_<k>` plus the base parameter `s`.
///
/// # Safety
/// `field_text` must be a NUL-terminated string and `out` a writable slot,
/// both valid for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn lgv_chart_ideal(
    d: u32,
    r: u32,
    n: u32,
    field_text: *const c_char,
    out: *mut *mut LgvIdeal,
) -> LgvStatus {
    let Some(out) = out.as_mut() else {
        return null_arg("out");
    };
    *out = ptr::null_mut();
    let field_text = match read_str(field_text, "field_text") {
        Ok(text) => text,
        Err(status) => return status,
    };
    match run(|| {
        let field = FieldSpec::parse(field_text)?;
        let chart = if n == 2 {
            standard_chart_ideal(&ChartSpec::canonical(d as usize, r as usize)?, field)?
        } else {
            canonical_chain(d as usize, r as usize, n as usize, field)?
        };
        Ok(LgvIdeal::boxed(chart.ideal))
    }) {
        Ok(handle) => {
            *out = handle;
            LgvStatus::Ok
        }
        Err(status) => status,
    }
}

/// Build the commuting-pair ideal for two `ell × ell` matrices `x`, `y`:
/// the entries of `x·y − s·Id` and `y·x − s·Id` in the ring `k[s, x, y]`
/// with `s` of weight two. Writes a caller-owned handle to `*out`.
///
/// # Safety
/// `field_text` must be a NUL-terminated string and `out` a writable slot,
/// both valid for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn lgv_commuting_pair_ideal(
    ell: u32,
    field_text: *const c_char,
    out: *mut *mut LgvIdeal,
) -> LgvStatus {
    let Some(out) = out.as_mut() else {
        return null_arg("out");
    };
    *out = ptr::null_mut();
    let field_text = match read_str(field_text, "field_text") {
        Ok(text) => text,
        Err(status) => return status,
    };
    match run(|| {
        let field = FieldSpec::parse(field_text)?;
        Ok(LgvIdeal::boxed(commuting_pair_ideal(ell as usize, field)?))
    }) {
        Ok(handle) => {
            *out = handle;
            LgvStatus::Ok
        }
        Err(status) => status,
    }
}

/// Run the full structural verification suite — local product structure,
/// flatness, dimensions, linkage conditions, Cohen-Macaulayness, reduced
/// fibers, gluing, plus planted failure controls — and write the report as
/// a caller-owned JSON string to `*out_json` (release it with
/// [`lgv_string_free`]). `spec_dmax` caps the ambient dimension swept by
/// the per-chart checks; zero keeps the stock value 4. The status is OK
/// whenever the suite ran to completion; inspect the per-check `status`
/// fields in the JSON for PASS / FAIL / INCONCLUSIVE outcomes.
///
/// # Safety
/// `field_text` must be a NUL-terminated string and `out_json` a writable
/// slot, both valid for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn lgv_suite_run(
    field_text: *const c_char,
    seed: u64,
    spec_dmax: u32,
    out_json: *mut *mut c_char,
) -> LgvStatus {
    let Some(out_json) = out_json.as_mut() else {
        return null_arg("out_json");
    };
    *out_json = ptr::null_mut();
    let field_text = match read_str(field_text, "field_text") {
        Ok(text) => text,
        Err(status) => return status,
    };
    match run(|| {
        let field = FieldSpec::parse(field_text)?;
        let mut config = SuiteConfig {
            field,
            seed,
            ..SuiteConfig::default()
        };
        if spec_dmax > 0 {
            config.spec_dmax = spec_dmax as usize;
        }
        let report = run_full_suite(&config)?;
        Ok(report.to_json())
    }) {
        Ok(json) => {
            *out_json = into_owned_cstring(json);
            LgvStatus::Ok
        }
        Err(status) => status,
    }
}

/// Release a handle returned by this library. Null is a no-op.
///
/// # Safety
/// `handle` must be null or a pointer returned by this library that has not
/// already been freed.
#[no_mangle]
pub unsafe extern "C" fn lgv_ideal_free(handle: *mut LgvIdeal) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Release a string written to an out pointer by this library. Null is a
/// no-op.
///
/// # Safety
/// `text` must be null or a string pointer returned by this library that
/// has not already been freed.
#[no_mangle]
pub unsafe extern "C" fn lgv_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}
