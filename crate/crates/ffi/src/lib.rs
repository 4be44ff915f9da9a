//! C ABI over `paley-core`.
//!
//! Graphs are opaque handles created by [`paley_graph_new`] and released with
//! [`paley_graph_free`]. Every fallible call returns a [`PaleyStatus`]; on
//! failure the message is available from [`paley_last_error`] on the same
//! thread. Strings handed out by this library must be released with
//! [`paley_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use paley::cliques::{count_cliques, BruteForceLimits, CountMethod};
use paley::tables::verify_tables;
use paley::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaleyStatus {
    Ok = 0,
    InvalidInput = 1,
    NotAdmissible = 2,
    Consistency = 3,
    CeilingExceeded = 4,
    /// The value does not fit the output type; use the decimal variant.
    Overflow = 5,
    NullPointer = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaleyMethod {
    Bruteforce = 0,
    Reduction = 1,
    Formula = 2,
}

impl From<PaleyMethod> for CountMethod {
    fn from(m: PaleyMethod) -> Self {
        match m {
            PaleyMethod::Bruteforce => CountMethod::Bruteforce,
            PaleyMethod::Reduction => CountMethod::Reduction,
            PaleyMethod::Formula => CountMethod::Formula,
        }
    }
}

/// Summary of a validated modulus.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PaleyModulusInfo {
    pub n: u64,
    /// Exponent of 2 in n (0 or 1).
    pub s: u32,
    /// Number of distinct odd primes.
    pub k: u32,
    pub phi: u64,
    /// |R_n| = phi(n) / 2^k.
    pub square_count: u64,
}

/// Opaque graph handle.
pub struct PaleyGraph {
    inner: paley::PaleyGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PaleyStatus {
    match e {
        Error::InvalidInput(_) => PaleyStatus::InvalidInput,
        Error::NotAdmissible { .. } => PaleyStatus::NotAdmissible,
        Error::Consistency(_) => PaleyStatus::Consistency,
        Error::CeilingExceeded { .. } => PaleyStatus::CeilingExceeded,
    }
}

/// Runs `f`, recording errors and converting panics into `Panic`.
fn guard(f: impl FnOnce() -> Result<(), (PaleyStatus, String)>) -> PaleyStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PaleyStatus::Ok,
        Ok(Err((status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside paley".into());
            PaleyStatus::Panic
        }
    }
}

fn core_err(e: Error) -> (PaleyStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (PaleyStatus, String) {
    (PaleyStatus::NullPointer, format!("{what} is NULL"))
}

/// Message for the last failed call on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn paley_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn paley_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Validates `n`. `out` may be NULL when only the status is wanted.
///
/// # Safety
/// `out` must be NULL or point to writable memory for one `PaleyModulusInfo`.
#[no_mangle]
pub unsafe extern "C" fn paley_check_admissible(n: u64, out: *mut PaleyModulusInfo) -> PaleyStatus {
    guard(|| {
        let m = paley::check_admissible(n).map_err(core_err)?;
        if !out.is_null() {
            *out = PaleyModulusInfo {
                n: m.n(),
                s: m.s(),
                k: m.k() as u32,
                phi: m.phi(),
                square_count: m.square_count(),
            };
        }
        Ok(())
    })
}

/// Builds `G_n`. On success `*out` owns a handle for [`paley_graph_free`].
///
/// # Safety
/// `out` must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn paley_graph_new(n: u64, out: *mut *mut PaleyGraph) -> PaleyStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let inner = paley::PaleyGraph::new(n).map_err(core_err)?;
        *out = Box::into_raw(Box::new(PaleyGraph { inner }));
        Ok(())
    })
}

/// # Safety
/// `graph` must be NULL or a handle from [`paley_graph_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn paley_graph_free(graph: *mut PaleyGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices; 0 for a NULL handle.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn paley_graph_order(graph: *const PaleyGraph) -> u64 {
    graph.as_ref().map_or(0, |g| g.inner.order() as u64)
}

/// Common vertex degree |R_n|; 0 for a NULL handle.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn paley_graph_degree(graph: *const PaleyGraph) -> u64 {
    graph.as_ref().map_or(0, |g| g.inner.degree() as u64)
}

/// Whether `x - y` is a unit square mod n. False for NULL or out-of-range vertices.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn paley_graph_is_adjacent(graph: *const PaleyGraph, x: u64, y: u64) -> bool {
    let Some(g) = graph.as_ref() else { return false };
    let n = g.inner.order() as u64;
    x < n && y < n && g.inner.is_adjacent(x as usize, y as usize)
}

/// Writes the edge list ("u v\n" per edge, u < v) to `path`.
///
/// # Safety
/// `graph` must be a live handle and `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn paley_graph_write_edges(graph: *const PaleyGraph, path: *const c_char) -> PaleyStatus {
    guard(|| {
        let g = graph.as_ref().ok_or_else(|| null("graph"))?;
        if path.is_null() {
            return Err(null("path"));
        }
        let path = CStr::from_ptr(path).to_str().map_err(|e| (PaleyStatus::InvalidInput, e.to_string()))?;
        let file = std::fs::File::create(path).map_err(|e| (PaleyStatus::InvalidInput, format!("{path}: {e}")))?;
        g.inner
            .write_edge_list(std::io::BufWriter::new(file))
            .map_err(|e| (PaleyStatus::InvalidInput, format!("{path}: {e}")))
    })
}

fn count(graph: *const PaleyGraph, order: u32, method: PaleyMethod) -> Result<paley::BigCount, (PaleyStatus, String)> {
    // SAFETY: callers of the exported functions guarantee `graph` is NULL or live.
    let g = unsafe { graph.as_ref() }.ok_or_else(|| null("graph"))?;
    count_cliques(&g.inner, order, method.into(), &BruteForceLimits::default())
        .map(|r| r.value)
        .map_err(core_err)
}

/// Counts cliques of order 3 or 4. Returns `Overflow` if the count exceeds
/// `uint64_t`; use [`paley_count_cliques_decimal`] then.
///
/// # Safety
/// `graph` must be a live handle; `out` must point to one writable `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn paley_count_cliques(
    graph: *const PaleyGraph,
    order: u32,
    method: PaleyMethod,
    out: *mut u64,
) -> PaleyStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let value = count(graph, order, method)?;
        *out = u64::try_from(&value).map_err(|_| (PaleyStatus::Overflow, format!("{value} does not fit in 64 bits")))?;
        Ok(())
    })
}

/// Like [`paley_count_cliques`] but returns the count as a decimal string
/// (free with [`paley_string_free`]). Returns NULL on failure and sets
/// `*status` when `status` is not NULL.
///
/// # Safety
/// `graph` must be a live handle; `status` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn paley_count_cliques_decimal(
    graph: *const PaleyGraph,
    order: u32,
    method: PaleyMethod,
    status: *mut PaleyStatus,
) -> *mut c_char {
    let mut result = ptr::null_mut();
    let st = guard(|| {
        let value = count(graph, order, method)?;
        result = CString::new(value.to_string()).expect("digits").into_raw();
        Ok(())
    });
    if !status.is_null() {
        *status = st;
    }
    result
}

/// `J(psi, chi) = x + iy` mod `p^alpha`, with psi sending the smallest
/// primitive root to i.
///
/// # Safety
/// `x` and `y` must each point to one writable `int64_t`.
#[no_mangle]
pub unsafe extern "C" fn paley_jacobi_sum(p: u64, alpha: u32, x: *mut i64, y: *mut i64) -> PaleyStatus {
    guard(|| {
        if x.is_null() || y.is_null() {
            return Err(null("x/y"));
        }
        let j = paley::charsums::jacobi_sum_for(p, alpha).map_err(core_err)?;
        *x = j.x;
        *y = j.y;
        Ok(())
    })
}

/// Checks `2(x^2 - y^2) = 2 p^(2 alpha - 2) (p - 2a^2)`; `*ok` receives the verdict.
///
/// # Safety
/// `ok` must point to one writable `bool`.
#[no_mangle]
pub unsafe extern "C" fn paley_verify_xyreln(p: u64, alpha: u32, ok: *mut bool) -> PaleyStatus {
    guard(|| {
        if ok.is_null() {
            return Err(null("ok"));
        }
        *ok = paley::verify_xyreln(p, alpha).map_err(core_err)?.ok;
        Ok(())
    })
}

/// True iff `G_n` has no 4-cliques, decided from the factorization alone.
///
/// # Safety
/// `out` must point to one writable `bool`.
#[no_mangle]
pub unsafe extern "C" fn paley_k4_is_zero(n: u64, out: *mut bool) -> PaleyStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let m = paley::check_admissible(n).map_err(core_err)?;
        *out = !m.is_odd() || paley::k4_zero_predicate(&m);
        Ok(())
    })
}

/// Runs the reference-table suite and returns its JSON report (free with
/// [`paley_string_free`]). `*all_pass` receives the overall verdict.
///
/// # Safety
/// `json` must point to one writable pointer; `all_pass` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn paley_verify_tables_json(json: *mut *mut c_char, all_pass: *mut bool) -> PaleyStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        *json = ptr::null_mut();
        let suite = verify_tables(None).map_err(core_err)?;
        if !all_pass.is_null() {
            *all_pass = suite.all_pass;
        }
        let text = paley::cli::suite_json(&suite);
        *json = CString::new(text).expect("JSON has no NUL").into_raw();
        Ok(())
    })
}
