//! C ABI over the `symcoh` engine.
//!
//! Objects are opaque heap handles released with the matching `_free`
//! function. Every fallible call returns a [`SymcohStatus`]; on failure a
//! description is available from [`symcoh_last_error`] on the same thread.
//! Panics never cross the boundary.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use symcoh::catalog::{Catalog, Task};
use symcoh::cochain::Limits;
use symcoh::cohomology::{cohomology_group, natural_map_analysis, CohomologyResult};
use symcoh::gmodule::GModule;
use symcoh::group::Group;
use symcoh::report::{run_all, select, Selection};
use symcoh::zlinalg::{Int, IntMatrix};
use symcoh::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymcohStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidGroup = 3,
    InvalidModule = 4,
    ResourceGuard = 5,
    /// A value does not fit the caller's integer type or buffer.
    Overflow = 6,
    /// The catalog or one of its instances could not be processed.
    CatalogError = 7,
    Internal = 8,
}

/// A finite group given by its multiplication table.
pub struct SymcohGroup {
    group: Arc<Group>,
}

/// A finitely generated module over a group.
pub struct SymcohModule {
    group: Arc<Group>,
    module: Arc<GModule>,
}

/// A computed `H^n` or `HS^n`.
pub struct SymcohCohomology {
    result: CohomologyResult,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: SymcohStatus, msg: impl Into<String>) -> SymcohStatus {
    set_error(msg.into());
    status
}

fn status_of(e: &Error) -> SymcohStatus {
    match e {
        Error::Group(_) => SymcohStatus::InvalidGroup,
        Error::Module(_) => SymcohStatus::InvalidModule,
        Error::DegreeCapExceeded { .. } | Error::MemoryGuard { .. } => SymcohStatus::ResourceGuard,
        Error::Catalog(_) => SymcohStatus::CatalogError,
        _ => SymcohStatus::Internal,
    }
}

fn from_error(e: Error) -> SymcohStatus {
    fail(status_of(&e), e.to_string())
}

/// Runs `f`, converting panics into `Internal`.
fn guard(f: impl FnOnce() -> SymcohStatus) -> SymcohStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            fail(SymcohStatus::Internal, format!("internal error: {msg}"))
        }
    }
}

unsafe fn slice<'a, T>(p: *const T, len: usize) -> Option<&'a [T]> {
    if len == 0 {
        Some(&[])
    } else if p.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(p, len))
    }
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

/// Message describing the last failure on this thread, or NULL. Valid until
/// the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn symcoh_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn symcoh_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

/// Builtin group: `kind` is one of `trivial`, `cyclic`, `dihedral`,
/// `klein4`, `symmetric`; `n` is ignored where it does not apply.
#[no_mangle]
pub unsafe extern "C" fn symcoh_group_builtin(kind: *const c_char, n: usize, out: *mut *mut SymcohGroup) -> SymcohStatus {
    guard(|| {
        if kind.is_null() || out.is_null() {
            return fail(SymcohStatus::NullPointer, "null argument");
        }
        let Ok(kind) = CStr::from_ptr(kind).to_str() else {
            return fail(SymcohStatus::InvalidArgument, "kind is not UTF-8");
        };
        match Group::builtin(kind, Some(n)) {
            Ok(g) => {
                write_out(out, SymcohGroup { group: Arc::new(g) });
                SymcohStatus::Ok
            }
            Err(e) => from_error(e.into()),
        }
    })
}

/// Group from a row-major `order × order` table with identity 0.
#[no_mangle]
pub unsafe extern "C" fn symcoh_group_from_table(table: *const usize, order: usize, out: *mut *mut SymcohGroup) -> SymcohStatus {
    guard(|| {
        if out.is_null() {
            return fail(SymcohStatus::NullPointer, "null argument");
        }
        let Some(len) = order.checked_mul(order) else {
            return fail(SymcohStatus::Overflow, "order too large");
        };
        let Some(flat) = slice(table, len) else {
            return fail(SymcohStatus::NullPointer, "null table");
        };
        let rows: Vec<Vec<usize>> = flat.chunks(order.max(1)).map(<[usize]>::to_vec).collect();
        match Group::from_table(&rows) {
            Ok(g) => {
                write_out(out, SymcohGroup { group: Arc::new(g) });
                SymcohStatus::Ok
            }
            Err(e) => from_error(e.into()),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn symcoh_group_order(group: *const SymcohGroup) -> usize {
    group.as_ref().map_or(0, |g| g.group.order())
}

#[no_mangle]
pub unsafe extern "C" fn symcoh_group_free(group: *mut SymcohGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Module `Z/d₁ ⊕ … ⊕ Z/d_k` (`d = 0` for `Z`). Generator `gens[i]` acts by
/// the row-major `k × k` matrix at `matrices + i·k·k`; the action is
/// completed by products. With `ngens = 0` the action is trivial.
#[no_mangle]
pub unsafe extern "C" fn symcoh_module_new(
    group: *const SymcohGroup,
    relations: *const i64,
    k: usize,
    gens: *const usize,
    matrices: *const i64,
    ngens: usize,
    out: *mut *mut SymcohModule,
) -> SymcohStatus {
    guard(|| {
        let (Some(g), false) = (group.as_ref(), out.is_null()) else {
            return fail(SymcohStatus::NullPointer, "null argument");
        };
        let (Some(rel), Some(gens)) = (slice(relations, k), slice(gens, ngens)) else {
            return fail(SymcohStatus::NullPointer, "null array");
        };
        let Some(mats) = k.checked_mul(k).and_then(|kk| kk.checked_mul(ngens)).and_then(|len| slice(matrices, len)) else {
            return fail(SymcohStatus::NullPointer, "null or oversized matrix array");
        };
        let group = g.group.clone();
        let m = if ngens == 0 {
            if let Some(d) = rel.iter().find(|&&d| d < 0) {
                return fail(SymcohStatus::InvalidModule, format!("negative relation {d}"));
            }
            Ok(GModule::trivial(&group, rel))
        } else {
            if let Some(&x) = gens.iter().find(|&&x| x >= group.order()) {
                return fail(SymcohStatus::InvalidArgument, format!("element {x} out of range"));
            }
            let gens: Vec<(usize, IntMatrix)> = gens
                .iter()
                .enumerate()
                .map(|(i, &x)| {
                    let block = &mats[i * k * k..(i + 1) * k * k];
                    let rows: Vec<&[i64]> = block.chunks(k.max(1)).collect();
                    (x, if k == 0 { IntMatrix::zeros(0, 0) } else { IntMatrix::from_rows(&rows) })
                })
                .collect();
            GModule::from_generators(&group, rel.iter().map(|&d| Int::from(d)).collect(), &gens)
        };
        match m {
            Ok(m) => {
                write_out(out, SymcohModule { group, module: Arc::new(m) });
                SymcohStatus::Ok
            }
            Err(e) => from_error(e.into()),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn symcoh_module_free(module: *mut SymcohModule) {
    if !module.is_null() {
        drop(Box::from_raw(module));
    }
}

/// `H^n(G, A)`, or `HS^n(G, A)` when `symmetric` is true.
#[no_mangle]
pub unsafe extern "C" fn symcoh_cohomology(
    module: *const SymcohModule,
    degree: usize,
    symmetric: bool,
    out: *mut *mut SymcohCohomology,
) -> SymcohStatus {
    guard(|| {
        let (Some(m), false) = (module.as_ref(), out.is_null()) else {
            return fail(SymcohStatus::NullPointer, "null argument");
        };
        match cohomology_group(&m.group, &m.module, degree, symmetric, &Limits::default()) {
            Ok(result) => {
                write_out(out, SymcohCohomology { result });
                SymcohStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Number of invariant factors (cyclic summands).
#[no_mangle]
pub unsafe extern "C" fn symcoh_cohomology_factor_count(c: *const SymcohCohomology) -> usize {
    c.as_ref().map_or(0, |c| c.result.factors().len())
}

fn copy_factors(factors: &[Int], buf: *mut i64, len: usize) -> SymcohStatus {
    if factors.len() > len {
        return fail(SymcohStatus::Overflow, format!("buffer holds {len}, need {}", factors.len()));
    }
    if factors.is_empty() {
        return SymcohStatus::Ok;
    }
    if buf.is_null() {
        return fail(SymcohStatus::NullPointer, "null buffer");
    }
    for (i, f) in factors.iter().enumerate() {
        let Some(x) = f.to_i64() else {
            return fail(SymcohStatus::Overflow, format!("factor {f} exceeds 64 bits"));
        };
        // SAFETY: i < factors.len() <= len
        unsafe { *buf.add(i) = x };
    }
    SymcohStatus::Ok
}

/// Writes the invariant factors (`0` for a copy of `Z`) into `buf`.
#[no_mangle]
pub unsafe extern "C" fn symcoh_cohomology_factors(c: *const SymcohCohomology, buf: *mut i64, len: usize) -> SymcohStatus {
    guard(|| match c.as_ref() {
        None => fail(SymcohStatus::NullPointer, "null argument"),
        Some(c) => copy_factors(&c.result.factors(), buf, len),
    })
}

#[no_mangle]
pub unsafe extern "C" fn symcoh_cohomology_free(c: *mut SymcohCohomology) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Invariant factors of the kernel of `HS^n → H^n`; `*count` receives the
/// number written (0 means injective).
#[no_mangle]
pub unsafe extern "C" fn symcoh_natural_map_kernel(
    module: *const SymcohModule,
    degree: usize,
    buf: *mut i64,
    len: usize,
    count: *mut usize,
) -> SymcohStatus {
    guard(|| {
        let (Some(m), false) = (module.as_ref(), count.is_null()) else {
            return fail(SymcohStatus::NullPointer, "null argument");
        };
        match natural_map_analysis(&m.group, &m.module, degree, &Limits::default()) {
            Ok(map) => {
                let f = map.kernel_factors();
                *count = f.len();
                copy_factors(&f, buf, len)
            }
            Err(e) => from_error(e),
        }
    })
}

/// Runs every job of a catalog (axioms, section 2 checks, search) and
/// returns the JSON report in `*out`, to be released with
/// [`symcoh_string_free`].
#[no_mangle]
pub unsafe extern "C" fn symcoh_verify_catalog_json(catalog: *const c_char, seed: u64, out: *mut *mut c_char) -> SymcohStatus {
    guard(|| {
        if catalog.is_null() || out.is_null() {
            return fail(SymcohStatus::NullPointer, "null argument");
        }
        let Ok(text) = CStr::from_ptr(catalog).to_str() else {
            return fail(SymcohStatus::InvalidArgument, "catalog is not UTF-8");
        };
        let cat = match Catalog::from_json(text) {
            Ok(c) => c,
            Err(e) => return from_error(e),
        };
        let tasks = [Task::Axioms, Task::Section2, Task::Search];
        let report = select(&cat, &Selection::default(), &tasks)
            .and_then(|specs| run_all(&cat, &specs, Limits::default(), seed, 1, "verify"));
        match report {
            Ok(r) => {
                let json = CString::new(r.to_json()).expect("JSON has no NUL");
                *out = json.into_raw();
                SymcohStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn symcoh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
