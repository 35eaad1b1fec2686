//! C ABI over the `hitclique` library.
//!
//! Graphs and certificates are opaque heap handles owned by the caller and
//! released with their `_free` function. Every fallible call returns an
//! [`HcStatus`]; on failure a message is available from
//! [`hc_last_error_message`] until the next failing call on the same thread.
//! Panics never cross the boundary; they are reported as `HC_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hitclique::counterexample::{
    build_counterexample, verify_counterexample, DEFAULT_ENUMERATION_LIMIT,
};
use hitclique::hitting::{verify_certificate, CertificateDoc};
use hitclique::io::{parse_graph, write_graph, GraphFormat};
use hitclique::{Error, Graph, HittingCertificate, Solver};
use num_rational::Ratio;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    /// The input is outside the solver's hypothesis.
    Precondition = 4,
    LimitExceeded = 5,
    /// A result failed its own verification; indicates a bug.
    Internal = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcFormat {
    EdgeList = 0,
    Graph6 = 1,
    Json = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcCertificateKind {
    StableSet = 0,
    OddHoleProduct = 1,
}

/// Opaque graph handle.
pub struct HcGraph(Graph);

/// Opaque solver result.
pub struct HcCertificate {
    cert: HittingCertificate,
    n: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> HcStatus {
    match e {
        Error::VertexOutOfRange { .. }
        | Error::SelfLoop(..)
        | Error::TooLarge(..)
        | Error::InvalidParameter(_) => HcStatus::InvalidArgument,
        Error::Parse(_) | Error::Json(_) | Error::Io(_) => HcStatus::Parse,
        Error::UndefinedOmega | Error::Precondition(_) => HcStatus::Precondition,
        Error::CliqueCapExceeded(_) | Error::SizeCapExceeded { .. } => HcStatus::LimitExceeded,
        Error::InternalContradiction(_) => HcStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (HcStatus, String)>) -> HcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HcStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside hitclique");
            HcStatus::Panic
        }
    }
}

fn lib<T>(r: hitclique::Result<T>) -> Result<T, (HcStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (HcStatus, String) {
    (HcStatus::NullPointer, format!("{what} is null"))
}

fn format_of(f: HcFormat) -> GraphFormat {
    match f {
        HcFormat::EdgeList => GraphFormat::EdgeList,
        HcFormat::Graph6 => GraphFormat::Graph6,
        HcFormat::Json => GraphFormat::Json,
    }
}

unsafe fn graph_ref<'a>(g: *const HcGraph) -> Result<&'a Graph, (HcStatus, String)> {
    g.as_ref().map(|h| &h.0).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (HcStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> Result<*mut c_char, (HcStatus, String)> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| (HcStatus::Internal, "string contains NUL".to_string()))
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`edges[2i]`, `edges[2i+1]`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (it may be NULL
/// when `edge_count` is 0). `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut HcGraph,
) -> HcStatus {
    guard(|| {
        let pairs: Vec<(usize, usize)> = if edge_count == 0 {
            Vec::new()
        } else {
            if edges.is_null() {
                return Err(null("edges"));
            }
            std::slice::from_raw_parts(edges, 2 * edge_count)
                .chunks_exact(2)
                .map(|c| (c[0], c[1]))
                .collect()
        };
        let g = lib(Graph::new(n, &pairs))?;
        write_out(out, Box::into_raw(Box::new(HcGraph(g))))
    })
}

/// Parses a NUL-terminated graph description.
///
/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_graph_parse(
    text: *const c_char,
    format: HcFormat,
    out: *mut *mut HcGraph,
) -> HcStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| (HcStatus::Parse, "input is not UTF-8".to_string()))?;
        let g = lib(parse_graph(text, format_of(format)))?;
        write_out(out, Box::into_raw(Box::new(HcGraph(g))))
    })
}

/// Strong product `a ⊠ b`; vertex `(u, x)` is numbered `u * n(b) + x`.
///
/// # Safety
/// `a` and `b` must be live graph handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_graph_strong_product(
    a: *const HcGraph,
    b: *const HcGraph,
    out: *mut *mut HcGraph,
) -> HcStatus {
    guard(|| {
        let g = lib(hitclique::strong_product(graph_ref(a)?, graph_ref(b)?))?;
        write_out(out, Box::into_raw(Box::new(HcGraph(g))))
    })
}

/// Serialises a graph; free the result with [`hc_string_free`].
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_graph_write(
    g: *const HcGraph,
    format: HcFormat,
    out: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        let s = write_graph(graph_ref(g)?, format_of(format));
        write_out(out, into_c_string(s)?)
    })
}

/// # Safety
/// `g` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hc_graph_free(g: *mut HcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn hc_graph_vertex_count(g: *const HcGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.n())
}

/// Maximum degree, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn hc_graph_max_degree(g: *const HcGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.max_degree())
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_graph_clique_number(g: *const HcGraph, out: *mut usize) -> HcStatus {
    guard(|| {
        let omega = lib(hitclique::cliques::clique_number(graph_ref(g)?))?;
        write_out(out, omega)
    })
}

/// Runs the hitting-set solver with default limits.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_solve(g: *const HcGraph, out: *mut *mut HcCertificate) -> HcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let cert = lib(Solver::default().hitting_stable_set(g))?;
        write_out(
            out,
            Box::into_raw(Box::new(HcCertificate { cert, n: g.n() })),
        )
    })
}

/// # Safety
/// `c` must be NULL or a certificate handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hc_certificate_free(c: *mut HcCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live certificate handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_certificate_kind(
    c: *const HcCertificate,
    out: *mut HcCertificateKind,
) -> HcStatus {
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null("certificate"))?;
        let kind = match c.cert {
            HittingCertificate::StableSetHit(_) => HcCertificateKind::StableSet,
            HittingCertificate::OddHoleProduct { .. } => HcCertificateKind::OddHoleProduct,
        };
        write_out(out, kind)
    })
}

/// Copies the certificate's vertex list into `buf`: the stable set, or the
/// vertices of the odd hole product. `*len` receives the full length even
/// when `HC_STATUS_BUFFER_TOO_SMALL` is returned; `buf` may then be NULL.
///
/// # Safety
/// `c` must be a live certificate handle, `buf` must have room for `cap`
/// values, and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_certificate_vertices(
    c: *const HcCertificate,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> HcStatus {
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null("certificate"))?;
        let vertices = match &c.cert {
            HittingCertificate::StableSetHit(s) => s.to_vec(),
            HittingCertificate::OddHoleProduct { component, .. } => component.clone(),
        };
        write_out(len, vertices.len())?;
        if vertices.len() > cap {
            return Err((
                HcStatus::BufferTooSmall,
                format!("need {} slots, got {cap}", vertices.len()),
            ));
        }
        if !vertices.is_empty() {
            if buf.is_null() {
                return Err(null("buffer"));
            }
            ptr::copy_nonoverlapping(vertices.as_ptr(), buf, vertices.len());
        }
        Ok(())
    })
}

/// Hole length `k` and clique size `m` of an odd-hole-product certificate.
///
/// # Safety
/// `c` must be a live certificate handle; `k` and `m` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_certificate_hole(
    c: *const HcCertificate,
    k: *mut usize,
    m: *mut usize,
) -> HcStatus {
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null("certificate"))?;
        match &c.cert {
            HittingCertificate::OddHoleProduct { witness, .. } => {
                write_out(k, witness.hole_length)?;
                write_out(m, witness.clique_size)
            }
            HittingCertificate::StableSetHit(_) => Err((
                HcStatus::InvalidArgument,
                "certificate is a stable set".to_string(),
            )),
        }
    })
}

/// JSON form of the certificate, as written by `hitclique solve`. Free
/// with [`hc_string_free`].
///
/// # Safety
/// `c` must be a live certificate handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_certificate_to_json(
    c: *const HcCertificate,
    out: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null("certificate"))?;
        let json = serde_json::to_string(&c.cert.to_doc(c.n))
            .map_err(|e| (HcStatus::Internal, e.to_string()))?;
        write_out(out, into_c_string(json)?)
    })
}

/// Re-checks a JSON certificate against `g`; `*valid` is set to 1 or 0.
///
/// # Safety
/// `g` must be a live graph handle, `json` a valid C string, and `valid`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn hc_verify_json(
    g: *const HcGraph,
    json: *const c_char,
    valid: *mut bool,
) -> HcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|_| (HcStatus::Parse, "certificate is not UTF-8".to_string()))?;
        let doc: CertificateDoc =
            serde_json::from_str(text).map_err(|e| (HcStatus::Parse, e.to_string()))?;
        let verdict = lib(verify_certificate(
            g,
            &doc,
            hitclique::cliques::DEFAULT_CLIQUE_CAP,
        ))?;
        if !verdict.valid {
            set_error(verdict.reason);
        }
        write_out(valid, verdict.valid)
    })
}

/// Builds the `(k, t)` counterexample graph for `ε = eps_num / eps_den`.
/// When `hitting_set_exists` is non-NULL the instance is also verified and
/// the flag receives the outcome (0 on every correct instance).
///
/// # Safety
/// `out` must be writable; `hitting_set_exists` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn hc_counterexample(
    k: usize,
    t: usize,
    eps_num: i64,
    eps_den: i64,
    out: *mut *mut HcGraph,
    hitting_set_exists: *mut bool,
) -> HcStatus {
    guard(|| {
        if eps_den == 0 {
            return Err((HcStatus::InvalidArgument, "zero denominator".to_string()));
        }
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let inst = lib(build_counterexample(k, t, Ratio::new(eps_num, eps_den)))?;
        if !hitting_set_exists.is_null() {
            let report = lib(verify_counterexample(&inst, DEFAULT_ENUMERATION_LIMIT))?;
            hitting_set_exists.write(report.hitting_set_exists);
        }
        write_out(out, Box::into_raw(Box::new(HcGraph(inst.graph))))
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
