//! C ABI over the `mine` crate.
//!
//! Instances are opaque `MineInstance` handles created by the parse and
//! reduce functions and released with `mine_instance_free`. Every fallible
//! function returns a `MineStatus`; on failure `mine_last_error` describes
//! the error of the calling thread. Strings returned through `char **` are
//! owned by the caller and must be released with `mine_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mine::classifier::classify;
use mine::cost::ExtendedCost;
use mine::error::Error;
use mine::geometry::Drawing;
use mine::instance::{evaluate, EnergyInstance, Labeling};
use mine::io::{parse_instance, parse_wcnf3, serialize_instance};
use mine::reductions::{planarize, qpbo_to_klabel, w3sat_to_qpbo};
use mine::solvers::{solve, Method};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MineStatus {
    Ok = 0,
    /// Null pointer, invalid UTF-8 or an out-of-range enum value.
    InvalidArgument = 1,
    /// Malformed text or an inconsistent instance.
    Parse = 2,
    /// Valid input outside what the operation accepts.
    Precondition = 3,
    /// A labeling or trace does not fit the instance.
    Verification = 4,
    /// A panic was caught at the boundary.
    Internal = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MineMethod {
    Brute = 0,
    Elim = 1,
    Tree = 2,
    Mincut = 3,
    Alphaexp = 4,
}

fn method_of(raw: u32) -> Result<Method, Failure> {
    Ok(match raw {
        m if m == MineMethod::Brute as u32 => Method::Brute,
        m if m == MineMethod::Elim as u32 => Method::Elim,
        m if m == MineMethod::Tree as u32 => Method::Tree,
        m if m == MineMethod::Mincut as u32 => Method::Mincut,
        m if m == MineMethod::Alphaexp as u32 => Method::Alphaexp,
        m => return Err(invalid(&format!("unknown method {m}"))),
    })
}

/// An energy instance with its optional straight-line drawing.
pub struct MineInstance {
    instance: EnergyInstance,
    drawing: Option<Drawing>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> MineStatus {
    match e {
        _ if e.is_precondition() => MineStatus::Precondition,
        Error::MissingCoordinate(_) => MineStatus::Precondition,
        Error::LabelingLength { .. } | Error::LabelOutOfRange { .. } | Error::TraceMismatch(_) => {
            MineStatus::Verification
        }
        Error::Oracle(_) | Error::Overflow => MineStatus::Internal,
        _ => MineStatus::Parse,
    }
}

struct Failure(MineStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn invalid(message: &str) -> Failure {
    Failure(MineStatus::InvalidArgument, message.to_string())
}

/// Runs `f`, records any failure and converts panics to `Internal`.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> MineStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            MineStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            MineStatus::Internal
        }
    }
}

unsafe fn c_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(invalid("null string"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| invalid("string is not UTF-8"))
}

unsafe fn handle<'a>(p: *const MineInstance) -> Result<&'a MineInstance, Failure> {
    p.as_ref().ok_or_else(|| invalid("null instance handle"))
}

unsafe fn store_handle(out: *mut *mut MineInstance, instance: EnergyInstance, drawing: Option<Drawing>) {
    *out = Box::into_raw(Box::new(MineInstance { instance, drawing }));
}

unsafe fn store_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    *out = CString::new(s).map_err(|_| invalid("output contains a nul byte"))?.into_raw();
    Ok(())
}

unsafe fn store_cost(c: ExtendedCost, value: *mut i64, infinite: *mut bool) {
    *value = c.finite().unwrap_or(0);
    *infinite = c.is_infinite();
}

fn check_out<T>(p: *mut T) -> Result<(), Failure> {
    if p.is_null() {
        Err(invalid("null output pointer"))
    } else {
        Ok(())
    }
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn mine_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses an instance file.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn mine_instance_parse(text: *const c_char, out: *mut *mut MineInstance) -> MineStatus {
    guard(|| {
        check_out(out)?;
        let (i, d) = parse_instance(c_str(text)?)?;
        store_handle(out, i, d);
        Ok(())
    })
}

/// Releases a handle; NULL is ignored.
///
/// # Safety
/// `instance` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mine_instance_free(instance: *mut MineInstance) {
    if !instance.is_null() {
        drop(Box::from_raw(instance));
    }
}

/// Number of nodes, or 0 for NULL.
///
/// # Safety
/// `instance` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mine_instance_num_nodes(instance: *const MineInstance) -> usize {
    instance.as_ref().map_or(0, |h| h.instance.num_nodes())
}

/// Canonical text of the instance and its drawing.
///
/// # Safety
/// `instance` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn mine_instance_serialize(instance: *const MineInstance, out: *mut *mut c_char) -> MineStatus {
    guard(|| {
        check_out(out)?;
        let h = handle(instance)?;
        store_string(out, serialize_instance(&h.instance, h.drawing.as_ref())?)
    })
}

/// Releases a string returned by this library; NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mine_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Energy of a labeling of `len` entries. `*infinite` is set for `+INF`,
/// in which case `*value` is 0.
///
/// # Safety
/// `labels` must point to `len` readable entries; the outputs must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn mine_evaluate(
    instance: *const MineInstance,
    labels: *const usize,
    len: usize,
    value: *mut i64,
    infinite: *mut bool,
) -> MineStatus {
    guard(|| {
        check_out(value)?;
        check_out(infinite)?;
        let h = handle(instance)?;
        if labels.is_null() && len > 0 {
            return Err(invalid("null labels"));
        }
        let y = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(labels, len).to_vec() };
        store_cost(evaluate(&h.instance, &Labeling::new(y))?, value, infinite);
        Ok(())
    })
}

/// Minimizes with `method` (a `MineMethod` value) and writes one label per node into `labels_out`,
/// which must hold `len ≥ num_nodes` entries.
///
/// # Safety
/// `labels_out` must point to `len` writable entries; the outputs must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn mine_solve(
    instance: *const MineInstance,
    method: u32,
    labels_out: *mut usize,
    len: usize,
    value: *mut i64,
    infinite: *mut bool,
) -> MineStatus {
    guard(|| {
        check_out(value)?;
        check_out(infinite)?;
        let h = handle(instance)?;
        let n = h.instance.num_nodes();
        if len < n || (labels_out.is_null() && n > 0) {
            return Err(invalid("label buffer too small"));
        }
        let r = solve(&h.instance, method_of(method)?)?;
        if n > 0 {
            std::slice::from_raw_parts_mut(labels_out, n).copy_from_slice(r.labeling.as_slice());
        }
        store_cost(r.value, value, infinite);
        Ok(())
    })
}

/// Complexity report as JSON.
///
/// # Safety
/// `instance` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn mine_classify_json(instance: *const MineInstance, out: *mut *mut c_char) -> MineStatus {
    guard(|| {
        check_out(out)?;
        let h = handle(instance)?;
        store_string(out, classify(&h.instance, h.drawing.as_ref()).to_json())
    })
}

/// Binary instance of a weighted 3-SAT formula given in wcnf3 text.
///
/// # Safety
/// `wcnf3` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn mine_reduce_w3sat_to_qpbo(wcnf3: *const c_char, out: *mut *mut MineInstance) -> MineStatus {
    guard(|| {
        check_out(out)?;
        let (i, _) = w3sat_to_qpbo(&parse_wcnf3(c_str(wcnf3)?)?)?;
        store_handle(out, i, None);
        Ok(())
    })
}

/// `k`-label instance embedding a finite binary instance.
///
/// # Safety
/// `instance` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn mine_reduce_qpbo_to_klabel(
    instance: *const MineInstance,
    k: usize,
    out: *mut *mut MineInstance,
) -> MineStatus {
    guard(|| {
        check_out(out)?;
        let (i, _) = qpbo_to_klabel(&handle(instance)?.instance, k)?;
        store_handle(out, i, None);
        Ok(())
    })
}

/// Crossing-free 3-label instance with its drawing; the input must carry
/// a drawing in general position.
///
/// # Safety
/// `instance` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn mine_reduce_planarize(
    instance: *const MineInstance,
    out: *mut *mut MineInstance,
) -> MineStatus {
    guard(|| {
        check_out(out)?;
        let h = handle(instance)?;
        let d = h.drawing.as_ref().ok_or(Error::MissingCoordinate(0))?;
        let (i, d, _) = planarize(&h.instance, d)?;
        store_handle(out, i, Some(d));
        Ok(())
    })
}
