//! C ABI over `resmatch`.
//!
//! Objects cross the boundary as opaque handles (`RmGraph`, `RmArtifact`)
//! that the caller frees with the matching `*_free` function. Every fallible
//! call returns an [`RmStatus`]; on failure [`rm_last_error`] describes the
//! problem. Strings returned through out-parameters are owned by the caller
//! and released with [`rm_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use resmatch::color::nu2_bipartite;
use resmatch::format::{emit_graph, parse_graph};
use resmatch::rational::{format_rational, parse_rational};
use resmatch::reduction::calibration::{additive_threshold, calibration};
use resmatch::reduction::certify::{verify_artifact, VerifyOptions};
use resmatch::reduction::{build_artifact, parse_dimacs, ReductionArtifact, Variant};
use resmatch::{nu, spectrum, Error, Graph};

/// Opaque graph handle.
pub struct RmGraph(Graph);

/// Opaque reduction artifact handle.
pub struct RmArtifact(ReductionArtifact);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed graph, DIMACS or rational text.
    ParseError = 3,
    /// Well-formed input outside an operation's domain.
    InvalidArgument = 4,
    /// An enumeration or brute-force search hit its cap.
    LimitExceeded = 5,
    /// A Rust panic was caught at the boundary.
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RmVariant {
    /// Maximum degree four, tracks `L`.
    L = 0,
    /// Maximum degree three, tracks `ell`.
    Ell = 1,
}

impl From<RmVariant> for Variant {
    fn from(v: RmVariant) -> Self {
        match v {
            RmVariant::L => Variant::BigL,
            RmVariant::Ell => Variant::Ell,
        }
    }
}

/// Summary of the residual spectrum of a graph.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RmSpectrum {
    pub nu: usize,
    pub ell: usize,
    pub big_l: usize,
    pub matchings_enumerated: usize,
    pub truncated: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("nul bytes removed"));
}

fn status_of(e: &Error) -> RmStatus {
    match e {
        Error::Parse { .. } | Error::Dimacs(_) | Error::Clause { .. } | Error::Rational(_) | Error::Tolerance(_) => RmStatus::ParseError,
        Error::CapExceeded { .. } | Error::Truncated { .. } => RmStatus::LimitExceeded,
        _ => RmStatus::InvalidArgument,
    }
}

/// Runs `f`, translating errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), RmStatus>) -> RmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RmStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            RmStatus::Internal
        }
    }
}

fn fail(e: Error) -> RmStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, RmStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(RmStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        RmStatus::InvalidUtf8
    })
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, RmStatus> {
    p.as_mut().ok_or_else(|| {
        set_error("null output pointer");
        RmStatus::NullPointer
    })
}

unsafe fn graph<'a>(g: *const RmGraph) -> Result<&'a Graph, RmStatus> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| {
        set_error("null graph handle");
        RmStatus::NullPointer
    })
}

unsafe fn artifact<'a>(a: *const RmArtifact) -> Result<&'a ReductionArtifact, RmStatus> {
    a.as_ref().map(|a| &a.0).ok_or_else(|| {
        set_error("null artifact handle");
        RmStatus::NullPointer
    })
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn rm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph in the `p mg` text format.
///
/// # Safety
/// `source` must be a NUL-terminated string; `out_graph` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_graph_parse(source: *const c_char, out_graph: *mut *mut RmGraph) -> RmStatus {
    guard(|| {
        let out_graph = out(out_graph)?;
        *out_graph = ptr::null_mut();
        let g = parse_graph(text(source)?).map_err(fail)?;
        *out_graph = Box::into_raw(Box::new(RmGraph(g)));
        Ok(())
    })
}

/// Builds a graph on vertices `1..=vertex_count` from `edge_count` pairs
/// stored flat in `endpoints` (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `endpoints` must point to `2 * edge_count` readable values.
#[no_mangle]
pub unsafe extern "C" fn rm_graph_from_edges(
    vertex_count: usize,
    endpoints: *const usize,
    edge_count: usize,
    out_graph: *mut *mut RmGraph,
) -> RmStatus {
    guard(|| {
        let out_graph = out(out_graph)?;
        *out_graph = ptr::null_mut();
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if endpoints.is_null() {
            set_error("null endpoint array");
            return Err(RmStatus::NullPointer);
        } else {
            std::slice::from_raw_parts(endpoints, 2 * edge_count)
        };
        let g = Graph::new(vertex_count, flat.chunks(2).map(|p| (p[0], p[1]))).map_err(fail)?;
        *out_graph = Box::into_raw(Box::new(RmGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rm_graph_free(g: *mut RmGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn rm_graph_vertex_count(g: *const RmGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn rm_graph_edge_count(g: *const RmGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Canonical text of the graph.
///
/// # Safety
/// `g` must be a live handle; `out_text` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_graph_to_text(g: *const RmGraph, out_text: *mut *mut c_char) -> RmStatus {
    guard(|| {
        let o = out(out_text)?;
        *o = owned_string(emit_graph(graph(g)?));
        Ok(())
    })
}

/// Matching number.
///
/// # Safety
/// `g` must be a live handle; `out_nu` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_graph_nu(g: *const RmGraph, out_nu: *mut usize) -> RmStatus {
    guard(|| {
        let o = out(out_nu)?;
        *o = nu(graph(g)?);
        Ok(())
    })
}

/// Largest 2-edge-colourable subgraph of a bipartite graph.
/// Fails with `InvalidArgument` when `g` is not bipartite.
///
/// # Safety
/// `g` must be a live handle; `out_nu2` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_graph_nu2(g: *const RmGraph, out_nu2: *mut usize) -> RmStatus {
    guard(|| {
        let o = out(out_nu2)?;
        let g = graph(g)?;
        let Some(b) = g.bipartition() else {
            set_error("graph is not bipartite");
            return Err(RmStatus::InvalidArgument);
        };
        *o = nu2_bipartite(g, &b).map_err(fail)?.size;
        Ok(())
    })
}

/// Enumerates up to `cap` maximum matchings. A truncated result is still
/// returned (with `truncated` set) and the call reports `LimitExceeded`.
///
/// # Safety
/// `g` must be a live handle; `out_spectrum` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_graph_spectrum(g: *const RmGraph, cap: usize, out_spectrum: *mut RmSpectrum) -> RmStatus {
    guard(|| {
        let o = out(out_spectrum)?;
        let s = spectrum(graph(g)?, cap).map_err(fail)?;
        *o = RmSpectrum { nu: s.nu, ell: s.ell, big_l: s.big_l, matchings_enumerated: s.matchings_enumerated, truncated: s.truncated };
        if s.truncated {
            set_error(format!("enumeration stopped at {cap} maximum matchings"));
            return Err(RmStatus::LimitExceeded);
        }
        Ok(())
    })
}

/// Compiles DIMACS CNF text into a reduction artifact.
///
/// # Safety
/// `dimacs` must be a NUL-terminated string; `out_artifact` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_reduce(dimacs: *const c_char, variant: RmVariant, out_artifact: *mut *mut RmArtifact) -> RmStatus {
    guard(|| {
        let o = out(out_artifact)?;
        *o = ptr::null_mut();
        let cnf = parse_dimacs(text(dimacs)?).map_err(fail)?;
        *o = Box::into_raw(Box::new(RmArtifact(build_artifact(&cnf, variant.into()))));
        Ok(())
    })
}

/// # Safety
/// `a` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rm_artifact_free(a: *mut RmArtifact) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Copies the artifact's graph into a new handle.
///
/// # Safety
/// `a` must be a live handle; `out_graph` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_artifact_graph(a: *const RmArtifact, out_graph: *mut *mut RmGraph) -> RmStatus {
    guard(|| {
        let o = out(out_graph)?;
        *o = Box::into_raw(Box::new(RmGraph(artifact(a)?.graph.clone())));
        Ok(())
    })
}

/// Certifies the artifact. `exhaustive_vars` bounds the number of variables
/// for the per-assignment sweep (0 disables it). Writes the certificate as
/// JSON and whether every check passed.
///
/// # Safety
/// `a` must be a live handle; the out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_artifact_certify(
    a: *const RmArtifact,
    exhaustive_vars: usize,
    out_json: *mut *mut c_char,
    out_passed: *mut bool,
) -> RmStatus {
    guard(|| {
        let json = out(out_json)?;
        let passed = out(out_passed)?;
        let opts = VerifyOptions { exhaustive_vars, ..VerifyOptions::default() };
        let cert = verify_artifact(artifact(a)?, opts).map_err(fail)?;
        *passed = cert.ok();
        *json = owned_string(serde_json::to_string(&cert).expect("certificate serializes"));
        Ok(())
    })
}

/// `delta` for the given `epsilon`, both as `p/q` strings.
///
/// # Safety
/// `epsilon` must be a NUL-terminated string; `out_delta` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_calibration(variant: RmVariant, epsilon: *const c_char, out_delta: *mut *mut c_char) -> RmStatus {
    guard(|| {
        let o = out(out_delta)?;
        let eps = parse_rational(text(epsilon)?).map_err(fail)?;
        let delta = calibration(variant.into(), &eps).map_err(fail)?;
        *o = owned_string(format_rational(&delta));
        Ok(())
    })
}

/// Whether `c < 1/256 - epsilon/32`.
///
/// # Safety
/// `c` and `epsilon` must be NUL-terminated strings; `out_result` writable.
#[no_mangle]
pub unsafe extern "C" fn rm_additive_threshold(c: *const c_char, epsilon: *const c_char, out_result: *mut bool) -> RmStatus {
    guard(|| {
        let o = out(out_result)?;
        let c = parse_rational(text(c)?).map_err(fail)?;
        let eps = parse_rational(text(epsilon)?).map_err(fail)?;
        *o = additive_threshold(&c, &eps).map_err(fail)?;
        Ok(())
    })
}
