//! C ABI over `gallai-core`.
//!
//! Graphs cross the boundary as opaque `GallaiGraphHandle` pointers. Every
//! function returns a `GallaiStatus`; results go through out-pointers. On a
//! non-OK status, `gallai_last_error_message` describes the failure for the
//! calling thread. Strings returned by the library must be released with
//! `gallai_string_free`, handles with `gallai_graph_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use gallai_core::chromatic::{chromatic_number, criticality, is_k_colorable};
use gallai_core::fractional::fractional_chromatic_number;
use gallai_core::gallai::build_h;
use gallai_core::graph::{emit_graph6, parse_graph6, Graph, VertexSet};
use gallai_core::replication::replicate;
use gallai_core::signseq::SignSequence;
use gallai_core::strolls::classify_sequence;
use gallai_core::theorem::{verify_theorem, Mode, VerifyOptions};
use gallai_core::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GallaiStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    CapExceeded = 4,
    /// A checked claim did not hold.
    Falsification = 5,
    Internal = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GallaiMode {
    Constructive = 0,
    Solver = 1,
    Both = 2,
}

/// Opaque graph handle.
pub struct GallaiGraphHandle {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(GallaiStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::VertexOutOfRange { .. } | Error::InvalidArgument(_) | Error::Precondition(_) => {
                GallaiStatus::InvalidArgument
            }
            Error::Graph6(_) | Error::Parse(_) => GallaiStatus::Parse,
            Error::CapExceeded { .. } => GallaiStatus::CapExceeded,
            Error::Falsification(_) => GallaiStatus::Falsification,
            Error::Lp(_) | Error::Io(_) => GallaiStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(GallaiStatus::NullPointer, format!("{what} is null"))
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> GallaiStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            GallaiStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| payload.downcast_ref::<&str>().copied())
                .unwrap_or("unknown panic");
            set_error(&format!("panic: {msg}"));
            GallaiStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(h: *const GallaiGraphHandle) -> Result<&'a Graph, Failure> {
    h.as_ref()
        .map(|h| &h.graph)
        .ok_or_else(|| null("graph handle"))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null("output pointer"))
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null("string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(GallaiStatus::InvalidArgument, "string is not UTF-8".into()))
}

fn into_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(GallaiStatus::Internal, "interior nul in output".into()))
}

fn into_handle(graph: Graph) -> *mut GallaiGraphHandle {
    Box::into_raw(Box::new(GallaiGraphHandle { graph }))
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string(v).map_err(|e| Failure(GallaiStatus::Internal, e.to_string()))
}

/// Message for the last non-OK status on this thread, or an empty string.
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn gallai_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gallai_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut GallaiGraphHandle,
) -> GallaiStatus {
    guard(|| {
        let out = out_ref(out)?;
        let g = parse_graph6(read_str(text)?.trim())?;
        *out = into_handle(g);
        Ok(())
    })
}

/// Builds `H_n`; vertex `(i, j)` has index `3i + j`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gallai_build_h(
    n: usize,
    out: *mut *mut GallaiGraphHandle,
) -> GallaiStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = into_handle(build_h(n)?.into_graph());
        Ok(())
    })
}

/// # Safety
/// `h` must be null or a handle from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn gallai_graph_free(h: *mut GallaiGraphHandle) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn gallai_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gallai_graph_vertex_count(
    h: *const GallaiGraphHandle,
    out: *mut usize,
) -> GallaiStatus {
    guard(|| {
        *out_ref(out)? = graph_ref(h)?.vertex_count();
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gallai_graph_edge_count(
    h: *const GallaiGraphHandle,
    out: *mut usize,
) -> GallaiStatus {
    guard(|| {
        *out_ref(out)? = graph_ref(h)?.edge_count();
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gallai_graph_to_graph6(
    h: *const GallaiGraphHandle,
    out: *mut *mut c_char,
) -> GallaiStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = into_c_string(emit_graph6(graph_ref(h)?)?)?;
        Ok(())
    })
}

/// Replicates the vertices whose bits are set in `mask`. The clone of the
/// k-th smallest replicated vertex gets index `vertex_count + k`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gallai_replicate(
    h: *const GallaiGraphHandle,
    mask: u64,
    out: *mut *mut GallaiGraphHandle,
) -> GallaiStatus {
    guard(|| {
        let out = out_ref(out)?;
        let rg = replicate(graph_ref(h)?, VertexSet::from_bits(mask))?;
        *out = into_handle(rg.into_graph());
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gallai_chromatic_number(
    h: *const GallaiGraphHandle,
    out: *mut u32,
) -> GallaiStatus {
    guard(|| {
        *out_ref(out)? = chromatic_number(graph_ref(h)?).0;
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gallai_is_k_colorable(
    h: *const GallaiGraphHandle,
    k: u32,
    out: *mut bool,
) -> GallaiStatus {
    guard(|| {
        *out_ref(out)? = is_k_colorable(graph_ref(h)?, k).is_some();
        Ok(())
    })
}

/// Criticality report as JSON. `edges` adds per-edge chromatic numbers.
///
/// # Safety
/// `h` must be a live handle; `json_out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gallai_criticality(
    h: *const GallaiGraphHandle,
    k: u32,
    edges: bool,
    json_out: *mut *mut c_char,
) -> GallaiStatus {
    guard(|| {
        let out = out_ref(json_out)?;
        let report = criticality(graph_ref(h)?, k, edges)?;
        *out = into_c_string(json(&report)?)?;
        Ok(())
    })
}

/// Fractional chromatic number as `"p/q"`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gallai_fractional_chromatic_number(
    h: *const GallaiGraphHandle,
    out: *mut *mut c_char,
) -> GallaiStatus {
    guard(|| {
        let out = out_ref(out)?;
        let sol = fractional_chromatic_number(graph_ref(h)?)?;
        *out = into_c_string(sol.value.to_string())?;
        Ok(())
    })
}

/// Classifies a sign sequence written over `+`, `-`, `0`.
///
/// # Safety
/// `sigma` must be a nul-terminated string; `good` and `reversing` writable.
#[no_mangle]
pub unsafe extern "C" fn gallai_classify_sequence(
    sigma: *const c_char,
    good: *mut bool,
    reversing: *mut bool,
) -> GallaiStatus {
    guard(|| {
        let (good, reversing) = (out_ref(good)?, out_ref(reversing)?);
        let s: SignSequence = read_str(sigma)?.parse()?;
        let c = classify_sequence(&s);
        *good = c.good;
        *reversing = c.reversing;
        Ok(())
    })
}

/// Exhaustive theorem check on `H_n` (n at most 6). Writes the JSON report
/// and the pass flag; a failed check still returns `GALLAI_STATUS_OK`.
///
/// # Safety
/// `json_out` and `pass` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gallai_verify_theorem(
    n: usize,
    mode: GallaiMode,
    seed: u64,
    json_out: *mut *mut c_char,
    pass: *mut bool,
) -> GallaiStatus {
    guard(|| {
        let (out, pass) = (out_ref(json_out)?, out_ref(pass)?);
        let mode = match mode {
            GallaiMode::Constructive => Mode::Constructive,
            GallaiMode::Solver => Mode::Solver,
            GallaiMode::Both => Mode::Both,
        };
        let opts = VerifyOptions {
            mode,
            seed,
            ..VerifyOptions::default()
        };
        let report = verify_theorem(n, &opts)?;
        *pass = report.pass;
        *out = into_c_string(json(&report)?)?;
        Ok(())
    })
}
