//! C ABI over `fengrao`.
//!
//! Objects cross the boundary as opaque handles created by `*_new` and
//! released by the matching `*_free`. Every fallible call returns a
//! [`FengraoStatus`]; on failure a message is kept per thread and can be read
//! with [`fengrao_last_error`]. Results go through out-pointers, which are only
//! written on success.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::fmt::Display;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fengrao::codes::{improved_params, reference_table, render, Params, Rule, Step, TableFormat};
use fengrao::construct::{
    build_check_matrix, code_dim, enumerate_points, min_distance_exhaustive, ConstructError,
    PlaneModel,
};
use fengrao::curves::{instance, CurveInstance};
use fengrao::semigroup::NumericalSemigroup;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FengraoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// The library rejected the input (bad parameters, infeasible d, ...).
    Domain = 3,
    BudgetExceeded = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FengraoRule {
    /// `[n, k, d - s]`
    ReduceDistance = 1,
    /// `[n, k - s, d]`
    ReduceDimension = 2,
    /// `[n - s, k - s, d]`
    Shorten = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FengraoFormat {
    Csv = 0,
    Markdown = 1,
    Json = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FengraoParams {
    pub n: u64,
    pub k: u64,
    pub d: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FengraoCurveInfo {
    pub q: u32,
    pub q0: u32,
    pub genus: u64,
    /// Rational points over GF(q).
    pub points: u64,
}

/// Opaque numerical semigroup.
pub struct FengraoSemigroup(NumericalSemigroup);

/// Opaque catalog curve.
pub struct FengraoCurve(CurveInstance);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(FengraoStatus, String);

impl Failure {
    fn domain(e: impl Display) -> Self {
        Failure(FengraoStatus::Domain, e.to_string())
    }

    fn null(what: &str) -> Self {
        Failure(FengraoStatus::NullPointer, format!("{what} is null"))
    }
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> FengraoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FengraoStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            FengraoStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::null(what))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn string_arg(p: *const c_char, what: &str) -> Result<String, Failure> {
    if p.is_null() {
        return Err(Failure::null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map(str::to_string)
        .map_err(|_| Failure(FengraoStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn fengrao_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn fengrao_status_str(status: FengraoStatus) -> *const c_char {
    let s: &'static CStr = match status {
        FengraoStatus::Ok => c"ok",
        FengraoStatus::NullPointer => c"null pointer",
        FengraoStatus::InvalidArgument => c"invalid argument",
        FengraoStatus::Domain => c"rejected by the library",
        FengraoStatus::BudgetExceeded => c"search budget exceeded",
        FengraoStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// # Safety
/// `gens` points to `len` readable values; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fengrao_semigroup_new(
    gens: *const u32,
    len: usize,
    out: *mut *mut FengraoSemigroup,
) -> FengraoStatus {
    guard(|| {
        if gens.is_null() {
            return Err(Failure::null("gens"));
        }
        let gens = std::slice::from_raw_parts(gens, len);
        let sg = NumericalSemigroup::new(gens).map_err(Failure::domain)?;
        write(out, Box::into_raw(Box::new(FengraoSemigroup(sg))))
    })
}

/// # Safety
/// `sg` is NULL or a handle from this library, not freed before.
#[no_mangle]
pub unsafe extern "C" fn fengrao_semigroup_free(sg: *mut FengraoSemigroup) {
    if !sg.is_null() {
        drop(Box::from_raw(sg));
    }
}

/// # Safety
/// `sg` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fengrao_semigroup_genus(sg: *const FengraoSemigroup, out: *mut u32) -> FengraoStatus {
    guard(|| write(out, deref(sg, "semigroup")?.0.genus()))
}

/// # Safety
/// `sg` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fengrao_semigroup_conductor(
    sg: *const FengraoSemigroup,
    out: *mut u32,
) -> FengraoStatus {
    guard(|| write(out, deref(sg, "semigroup")?.0.conductor()))
}

/// `rho_i`, one-based.
///
/// # Safety
/// `sg` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fengrao_semigroup_rho(
    sg: *const FengraoSemigroup,
    i: u64,
    out: *mut u64,
) -> FengraoStatus {
    guard(|| {
        let v = deref(sg, "semigroup")?.0.rho(i).map_err(Failure::domain)?;
        write(out, v)
    })
}

/// # Safety
/// `sg` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fengrao_semigroup_nu(sg: *const FengraoSemigroup, l: u64, out: *mut u64) -> FengraoStatus {
    guard(|| write(out, deref(sg, "semigroup")?.0.nu(l)))
}

/// # Safety
/// `sg` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fengrao_semigroup_r(sg: *const FengraoSemigroup, d: u32, out: *mut u64) -> FengraoStatus {
    guard(|| {
        let v = deref(sg, "semigroup")?.0.r(d).map_err(Failure::domain)?;
        write(out, v)
    })
}

/// `[n, n - r_d, d]`.
///
/// # Safety
/// `sg` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fengrao_improved_params(
    sg: *const FengraoSemigroup,
    n: u64,
    d: u32,
    q: u32,
    out: *mut FengraoParams,
) -> FengraoStatus {
    guard(|| {
        let rec = improved_params(&deref(sg, "semigroup")?.0, n, d, q).map_err(Failure::domain)?;
        write(
            out,
            FengraoParams {
                n: rec.n,
                k: rec.k,
                d: rec.d,
            },
        )
    })
}

/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fengrao_propagate(
    params: FengraoParams,
    rule: FengraoRule,
    s: u64,
    out: *mut FengraoParams,
) -> FengraoStatus {
    guard(|| {
        let rule = match rule {
            FengraoRule::ReduceDistance => Rule::I,
            FengraoRule::ReduceDimension => Rule::Ii,
            FengraoRule::Shorten => Rule::Iii,
        };
        let p = Params {
            n: params.n,
            k: params.k,
            d: params.d,
        }
        .apply(Step { rule, s })
        .map_err(Failure::domain)?;
        write(out, FengraoParams { n: p.n, k: p.k, d: p.d })
    })
}

/// A catalog curve by name: `D2`, `H3`, or `D:q0=7,m=2`.
///
/// # Safety
/// `name` is a NUL-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fengrao_curve_new(name: *const c_char, out: *mut *mut FengraoCurve) -> FengraoStatus {
    guard(|| {
        let name = string_arg(name, "name")?;
        let inst = instance(&name).map_err(Failure::domain)?;
        write(out, Box::into_raw(Box::new(FengraoCurve(inst))))
    })
}

/// # Safety
/// `curve` is NULL or a handle from this library, not freed before.
#[no_mangle]
pub unsafe extern "C" fn fengrao_curve_free(curve: *mut FengraoCurve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

/// # Safety
/// `curve` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fengrao_curve_info(curve: *const FengraoCurve, out: *mut FengraoCurveInfo) -> FengraoStatus {
    guard(|| {
        let c = &deref(curve, "curve")?.0;
        write(
            out,
            FengraoCurveInfo {
                q: c.q,
                q0: c.q0,
                genus: c.genus,
                points: c.points,
            },
        )
    })
}

/// The semigroup at a labelled point (`Pinf`, `P`, `P1`, ...). The returned
/// handle is owned by the caller.
///
/// # Safety
/// `curve` is a live handle, `label` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fengrao_curve_semigroup(
    curve: *const FengraoCurve,
    label: *const c_char,
    out: *mut *mut FengraoSemigroup,
) -> FengraoStatus {
    guard(|| {
        let c = &deref(curve, "curve")?.0;
        let label = string_arg(label, "label")?;
        let ps = c.semigroup(&label).map_err(Failure::domain)?;
        write(out, Box::into_raw(Box::new(FengraoSemigroup(ps.semigroup.clone()))))
    })
}

fn check_matrix(c: &CurveInstance, d: u32) -> Result<fengrao::construct::CheckMatrix, Failure> {
    let model = PlaneModel::for_instance(c).map_err(Failure::domain)?;
    let pts = enumerate_points(&model).map_err(Failure::domain)?;
    build_check_matrix(&model, &pts, d).map_err(Failure::domain)
}

/// Dimension of the improved code at infinity, by rank of its check matrix.
///
/// # Safety
/// `curve` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fengrao_curve_code_dim(curve: *const FengraoCurve, d: u32, out: *mut u64) -> FengraoStatus {
    guard(|| {
        let m = check_matrix(&deref(curve, "curve")?.0, d)?;
        write(out, code_dim(&m) as u64)
    })
}

/// Exact minimum distance of the improved code at infinity, if `q^k` stays
/// within `budget`.
///
/// # Safety
/// `curve` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fengrao_curve_min_distance(
    curve: *const FengraoCurve,
    d: u32,
    budget: u64,
    out: *mut u64,
) -> FengraoStatus {
    guard(|| {
        let m = check_matrix(&deref(curve, "curve")?.0, d)?;
        let w = min_distance_exhaustive(&m, budget).map_err(|e| match e {
            ConstructError::BudgetExceeded { .. } => Failure(FengraoStatus::BudgetExceeded, e.to_string()),
            e => Failure::domain(e),
        })?;
        write(out, w)
    })
}

/// The recomputed reference table over GF(q) as a newly allocated string.
/// Release it with [`fengrao_string_free`].
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn fengrao_table(q: u32, format: FengraoFormat, out: *mut *mut c_char) -> FengraoStatus {
    guard(|| {
        let format = match format {
            FengraoFormat::Csv => TableFormat::Csv,
            FengraoFormat::Markdown => TableFormat::Markdown,
            FengraoFormat::Json => TableFormat::Json,
        };
        let rows = reference_table(q).map_err(Failure::domain)?;
        let text = render(&rows, format).map_err(Failure::domain)?;
        let s = CString::new(text).map_err(Failure::domain)?;
        write(out, s.into_raw())
    })
}

/// # Safety
/// `s` is NULL or a string returned by this library, not freed before.
#[no_mangle]
pub unsafe extern "C" fn fengrao_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
