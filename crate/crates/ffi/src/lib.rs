//! C ABI over rainbow-core.
//!
//! Graphs and colourings are opaque heap handles created by `rainbow_*_new`
//! style functions and released with the matching `_free`. Every fallible
//! function returns a [`RainbowStatus`]; on failure a message is available
//! from [`rainbow_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rainbow_core::constructions::{construct, ConstructionSpec, Family};
use rainbow_core::extremal::Extremal;
use rainbow_core::graph::graph6;
use rainbow_core::rainbow::{verify_rainbow_k_connected, EdgeColouring, Verdict};
use rainbow_core::solver::{rc_exact, SolveError, SolverConfig};
use rainbow_core::Graph;

/// Result codes. The first five match the `rainbow` command's exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RainbowStatus {
    Ok = 0,
    CounterexampleFound = 1,
    InvalidArgument = 2,
    Undefined = 3,
    BudgetExceeded = 4,
    NullPointer = 5,
    Panic = 6,
}

/// Opaque graph handle.
pub struct RainbowGraph(Graph);

/// Opaque colouring handle; colours are listed in the graph's edge order.
pub struct RainbowColouring(EdgeColouring);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl ToString) {
    let msg = msg.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap());
}

fn guard(f: impl FnOnce() -> Result<RainbowStatus, (RainbowStatus, String)>) -> RainbowStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RainbowStatus::Panic
        }
    }
}

fn invalid(msg: impl ToString) -> (RainbowStatus, String) {
    (RainbowStatus::InvalidArgument, msg.to_string())
}

fn null(name: &str) -> (RainbowStatus, String) {
    (RainbowStatus::NullPointer, format!("{name} is null"))
}

fn solve_error(e: SolveError) -> (RainbowStatus, String) {
    match e {
        SolveError::BudgetExceeded { .. } => (RainbowStatus::BudgetExceeded, e.to_string()),
        _ => invalid(e),
    }
}

unsafe fn borrow<'a, T>(p: *const T, name: &str) -> Result<&'a T, (RainbowStatus, String)> {
    p.as_ref().ok_or_else(|| null(name))
}

unsafe fn out<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, (RainbowStatus, String)> {
    p.as_mut().ok_or_else(|| null(name))
}

unsafe fn c_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, (RainbowStatus, String)> {
    if p.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(format!("{name} is not UTF-8")))
}

fn boxed<T>(x: T) -> *mut T {
    Box::into_raw(Box::new(x))
}

/// The message of the last failed call on this thread. Owned by the
/// library; valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rainbow_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be null when
/// `edge_count` is 0); `out_graph` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rainbow_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out_graph: *mut *mut RainbowGraph,
) -> RainbowStatus {
    guard(|| {
        let slot = out(out_graph, "out_graph")?;
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else {
            if edges.is_null() {
                return Err(null("edges"));
            }
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let g = Graph::new(n, flat.chunks(2).map(|p| (p[0], p[1]))).map_err(invalid)?;
        *slot = boxed(RainbowGraph(g));
        Ok(RainbowStatus::Ok)
    })
}

/// Parses one graph6 string.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out_graph` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rainbow_graph_from_graph6(
    text: *const c_char,
    out_graph: *mut *mut RainbowGraph,
) -> RainbowStatus {
    guard(|| {
        let slot = out(out_graph, "out_graph")?;
        let g = graph6::decode(c_str(text, "text")?.trim()).map_err(invalid)?;
        *slot = boxed(RainbowGraph(g));
        Ok(RainbowStatus::Ok)
    })
}

/// The graph6 encoding, as a string to release with [`rainbow_string_free`].
///
/// # Safety
/// `graph` must be a live handle; `out_text` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rainbow_graph_to_graph6(
    graph: *const RainbowGraph,
    out_text: *mut *mut c_char,
) -> RainbowStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        let slot = out(out_text, "out_text")?;
        *slot = CString::new(graph6::encode(&g.0)).unwrap().into_raw();
        Ok(RainbowStatus::Ok)
    })
}

/// # Safety
/// `graph` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn rainbow_graph_vertex_count(graph: *const RainbowGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `graph` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn rainbow_graph_edge_count(graph: *const RainbowGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Writes edge `index` (with `u < v`).
///
/// # Safety
/// `graph` must be a live handle; `u` and `v` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rainbow_graph_edge(
    graph: *const RainbowGraph,
    index: usize,
    u: *mut usize,
    v: *mut usize,
) -> RainbowStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        let (u, v) = (out(u, "u")?, out(v, "v")?);
        if index >= g.0.edge_count() {
            return Err(invalid(format!("edge index {index} out of range")));
        }
        (*u, *v) = g.0.edge(index);
        Ok(RainbowStatus::Ok)
    })
}

/// # Safety
/// `graph` must be a handle from this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn rainbow_graph_free(graph: *mut RainbowGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `text` must come from this library, not yet freed, or be null.
#[no_mangle]
pub unsafe extern "C" fn rainbow_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// A colouring of `graph` with colours in `1..=colour_count`, one per edge
/// in edge order.
///
/// # Safety
/// `graph` must be live; `colours` must hold `len` values; `out_colouring`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn rainbow_colouring_new(
    graph: *const RainbowGraph,
    colours: *const u32,
    len: usize,
    colour_count: u32,
    out_colouring: *mut *mut RainbowColouring,
) -> RainbowStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        let slot = out(out_colouring, "out_colouring")?;
        let colours: &[u32] = if len == 0 {
            &[]
        } else {
            if colours.is_null() {
                return Err(null("colours"));
            }
            std::slice::from_raw_parts(colours, len)
        };
        let c = EdgeColouring::new(&g.0, colours.to_vec(), colour_count).map_err(invalid)?;
        *slot = boxed(RainbowColouring(c));
        Ok(RainbowStatus::Ok)
    })
}

/// # Safety
/// `colouring` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn rainbow_colouring_len(colouring: *const RainbowColouring) -> usize {
    colouring.as_ref().map_or(0, |c| c.0.colours().len())
}

/// # Safety
/// `colouring` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn rainbow_colouring_colour_count(colouring: *const RainbowColouring) -> u32 {
    colouring.as_ref().map_or(0, |c| c.0.colour_count())
}

/// Copies the colours into `buffer`, which must hold the colouring's length.
///
/// # Safety
/// `colouring` must be live; `buffer` must be writable for `len` values.
#[no_mangle]
pub unsafe extern "C" fn rainbow_colouring_get(
    colouring: *const RainbowColouring,
    buffer: *mut u32,
    len: usize,
) -> RainbowStatus {
    guard(|| {
        let c = borrow(colouring, "colouring")?;
        if len != c.0.colours().len() {
            return Err(invalid(format!(
                "buffer holds {len} colours, colouring has {}",
                c.0.colours().len()
            )));
        }
        if len > 0 {
            if buffer.is_null() {
                return Err(null("buffer"));
            }
            std::slice::from_raw_parts_mut(buffer, len).copy_from_slice(c.0.colours());
        }
        Ok(RainbowStatus::Ok)
    })
}

/// # Safety
/// `colouring` must be a handle from this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn rainbow_colouring_free(colouring: *mut RainbowColouring) {
    if !colouring.is_null() {
        drop(Box::from_raw(colouring));
    }
}

/// Builds a construction by family name (for example "GNR", "g1"). Pass 0
/// for `r` or `k` when the family takes no such parameter. Uncoloured
/// families set `*out_colouring` to null.
///
/// # Safety
/// `family` must be NUL-terminated; both out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn rainbow_construct(
    family: *const c_char,
    n: usize,
    r: usize,
    k: usize,
    out_graph: *mut *mut RainbowGraph,
    out_colouring: *mut *mut RainbowColouring,
) -> RainbowStatus {
    guard(|| {
        let family: Family = c_str(family, "family")?.parse().map_err(invalid)?;
        let (gslot, cslot) = (out(out_graph, "out_graph")?, out(out_colouring, "out_colouring")?);
        let spec = ConstructionSpec {
            family,
            n,
            r: (r > 0).then_some(r),
            k: (k > 0).then_some(k),
        };
        let bundle = construct(&spec).map_err(invalid)?;
        *cslot = bundle.colouring.map_or(ptr::null_mut(), |c| boxed(RainbowColouring(c)));
        *gslot = boxed(RainbowGraph(bundle.graph));
        Ok(RainbowStatus::Ok)
    })
}

/// Checks rainbow k-connectivity. Returns `Ok` when connected, or
/// `CounterexampleFound` with the first failing pair in `fail_u`, `fail_v`
/// (either may be null).
///
/// # Safety
/// Handles must be live; non-null out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn rainbow_verify(
    graph: *const RainbowGraph,
    colouring: *const RainbowColouring,
    k: usize,
    fail_u: *mut usize,
    fail_v: *mut usize,
) -> RainbowStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        let c = borrow(colouring, "colouring")?;
        match verify_rainbow_k_connected(&g.0, &c.0, k).map_err(invalid)? {
            Verdict::Connected(_) => Ok(RainbowStatus::Ok),
            Verdict::Fails { u, v } => {
                if let Some(p) = fail_u.as_mut() {
                    *p = u;
                }
                if let Some(p) = fail_v.as_mut() {
                    *p = v;
                }
                Ok(RainbowStatus::CounterexampleFound)
            }
        }
    })
}

/// Exact rc_k with an optimal colouring. `node_budget` 0 means unlimited.
///
/// # Safety
/// `graph` must be live; `out_rc` must be writable; `out_witness` may be
/// null when the colouring is not wanted.
#[no_mangle]
pub unsafe extern "C" fn rainbow_rc_exact(
    graph: *const RainbowGraph,
    k: usize,
    node_budget: u64,
    out_rc: *mut u32,
    out_witness: *mut *mut RainbowColouring,
) -> RainbowStatus {
    guard(|| {
        let g = borrow(graph, "graph")?;
        let rc = out(out_rc, "out_rc")?;
        let config = SolverConfig {
            node_budget: (node_budget > 0).then_some(node_budget),
            parallel: false,
        };
        let res = rc_exact(&g.0, k, &config).map_err(solve_error)?;
        *rc = res.rc_value;
        if let Some(slot) = out_witness.as_mut() {
            *slot = boxed(RainbowColouring(res.witness));
        }
        Ok(RainbowStatus::Ok)
    })
}

/// t_k(n, r) (`kind` = 't') or s_k(n, r) (`kind` = 's') by exhaustive
/// enumeration, with a witness graph when `out_witness` is non-null.
/// Returns `Undefined` when no graph qualifies.
///
/// # Safety
/// `out_value` must be writable; `out_witness` may be null.
#[no_mangle]
pub unsafe extern "C" fn rainbow_extremal(
    kind: c_char,
    k: usize,
    n: usize,
    r: u32,
    out_value: *mut usize,
    out_witness: *mut *mut RainbowGraph,
) -> RainbowStatus {
    guard(|| {
        let value = out(out_value, "out_value")?;
        let mut ex = Extremal::new(SolverConfig::default());
        let rec = match kind as u8 {
            b't' => ex.extremal_t(n, r, k),
            b's' => ex.extremal_s(n, r, k),
            other => return Err(invalid(format!("kind must be 't' or 's', got {:?}", other as char))),
        }
        .map_err(|e| match e {
            rainbow_core::extremal::ExtremalError::Solve(s) => solve_error(s),
            e => invalid(e),
        })?;
        let Some(v) = rec.value else {
            return Err((
                RainbowStatus::Undefined,
                format!("{}{k}({n}, {r}) is undefined", rec.kind),
            ));
        };
        *value = v;
        if let Some(slot) = out_witness.as_mut() {
            *slot = boxed(RainbowGraph(rec.witness_graph.unwrap()));
        }
        Ok(RainbowStatus::Ok)
    })
}
