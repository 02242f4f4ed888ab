//! C ABI over the `steenrod` crate.
//!
//! Objects are opaque heap handles created by `*_parse`/`*_builtin`-style
//! constructors and released with the matching `*_free`. Strings returned
//! through `char **` are owned by the caller and released with
//! [`steenrod_string_free`]. Every fallible call returns a
//! [`SteenrodStatus`]; on failure [`steenrod_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use steenrod::modules::{builtin, distinguish_theorem37, sq_matrix, verify_axioms, GradedModule};
use steenrod::parse::{parse_poly, parse_sq};
use steenrod::{
    act, admissible_basis, poly::faithful_rank, AdemElement, Error, Normalizer, PolyElement,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SteenrodStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    BudgetExceeded = 4,
    Inhomogeneous = 5,
    InvalidModule = 6,
    Panic = 7,
}

/// An element of the mod-2 Steenrod algebra.
pub struct SteenrodElement(AdemElement);

/// A polynomial in F2[t1, t2, ...].
pub struct SteenrodPoly(PolyElement);

/// A finite graded module.
pub struct SteenrodModule(GradedModule);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SteenrodStatus {
    match e {
        Error::Parse { .. } => SteenrodStatus::Parse,
        Error::BudgetExceeded { .. } => SteenrodStatus::BudgetExceeded,
        Error::Inhomogeneous | Error::VariableNotFresh(_) | Error::NotAdemPair { .. } => {
            SteenrodStatus::Inhomogeneous
        }
        Error::InvalidModule(_) | Error::UnknownModule(_) | Error::Io(_) => {
            SteenrodStatus::InvalidModule
        }
    }
}

struct Fail(SteenrodStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SteenrodStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SteenrodStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            SteenrodStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(SteenrodStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        Fail(
            SteenrodStatus::InvalidUtf8,
            format!("{what} is not valid UTF-8"),
        )
    })
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(SteenrodStatus::NullPointer, format!("{what} is null")))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(
            SteenrodStatus::NullPointer,
            "output pointer is null".into(),
        ));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(
            SteenrodStatus::NullPointer,
            "output pointer is null".into(),
        ));
    }
    *out = CString::new(s)
        .expect("rendered text has no nul bytes")
        .into_raw();
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn steenrod_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn steenrod_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `Sq3 Sq1 + Sq4` style text.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn steenrod_element_parse(
    text: *const c_char,
    out: *mut *mut SteenrodElement,
) -> SteenrodStatus {
    guard(|| {
        let e = parse_sq(str_arg(text, "text")?)?;
        put(out, SteenrodElement(e))
    })
}

/// # Safety
/// `e` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn steenrod_element_free(e: *mut SteenrodElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Admissible form of `e`; `budget` of 0 selects the default.
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn steenrod_element_normalize(
    e: *const SteenrodElement,
    budget: u64,
    out: *mut *mut SteenrodElement,
) -> SteenrodStatus {
    guard(|| {
        let e = ref_arg(e, "element")?;
        let mut n = if budget == 0 {
            Normalizer::default()
        } else {
            Normalizer::with_budget(budget)
        };
        put(out, SteenrodElement(n.normalize(&e.0)?))
    })
}

/// Normalized composite `lhs ∘ rhs`.
///
/// # Safety
/// `lhs`, `rhs` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn steenrod_element_product(
    lhs: *const SteenrodElement,
    rhs: *const SteenrodElement,
    out: *mut *mut SteenrodElement,
) -> SteenrodStatus {
    guard(|| {
        let (a, b) = (ref_arg(lhs, "lhs")?, ref_arg(rhs, "rhs")?);
        put(out, SteenrodElement(steenrod::product(&a.0, &b.0)?))
    })
}

/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn steenrod_element_to_string(
    e: *const SteenrodElement,
    out: *mut *mut c_char,
) -> SteenrodStatus {
    guard(|| put_string(out, ref_arg(e, "element")?.0.to_string()))
}

/// Parses `t1^3*t2 + t2^4` style text.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn steenrod_poly_parse(
    text: *const c_char,
    out: *mut *mut SteenrodPoly,
) -> SteenrodStatus {
    guard(|| {
        let p = parse_poly(str_arg(text, "text")?)?;
        put(out, SteenrodPoly(p))
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn steenrod_poly_free(p: *mut SteenrodPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `e`, `p` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn steenrod_poly_act(
    e: *const SteenrodElement,
    p: *const SteenrodPoly,
    out: *mut *mut SteenrodPoly,
) -> SteenrodStatus {
    guard(|| {
        let (e, p) = (ref_arg(e, "element")?, ref_arg(p, "poly")?);
        put(out, SteenrodPoly(act(&e.0, &p.0)))
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn steenrod_poly_to_string(
    p: *const SteenrodPoly,
    out: *mut *mut c_char,
) -> SteenrodStatus {
    guard(|| put_string(out, ref_arg(p, "poly")?.0.to_string()))
}

/// Builds `s<n>`, `rp<n>`, `cp<n>`, `wedge(a,b)`, `susp(a)` or `pt`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn steenrod_module_builtin(
    name: *const c_char,
    out: *mut *mut SteenrodModule,
) -> SteenrodStatus {
    guard(|| {
        let m = builtin(str_arg(name, "name")?)?;
        put(out, SteenrodModule(m))
    })
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn steenrod_module_from_json(
    json: *const c_char,
    out: *mut *mut SteenrodModule,
) -> SteenrodStatus {
    guard(|| {
        let m = GradedModule::from_json(str_arg(json, "json")?)?;
        put(out, SteenrodModule(m))
    })
}

/// # Safety
/// `m` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn steenrod_module_free(m: *mut SteenrodModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Runs the axiom checks through `max_degree`; `*passed` receives the verdict
/// and `*failures` (if not NULL) the number of failed instances.
///
/// # Safety
/// `m` must be a live handle; `passed` must be writable; `failures` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn steenrod_module_verify(
    m: *const SteenrodModule,
    max_degree: u32,
    passed: *mut bool,
    failures: *mut usize,
) -> SteenrodStatus {
    guard(|| {
        let m = ref_arg(m, "module")?;
        if passed.is_null() {
            return Err(Fail(SteenrodStatus::NullPointer, "passed is null".into()));
        }
        let report = verify_axioms(&m.0, max_degree);
        *passed = report.passed();
        if !failures.is_null() {
            *failures = report.failures.len();
        }
        Ok(())
    })
}

/// Rank of `Sq^i` from degree `d` to `d + i`.
///
/// # Safety
/// `m` must be a live handle; `rank` must be writable.
#[no_mangle]
pub unsafe extern "C" fn steenrod_module_sq_rank(
    m: *const SteenrodModule,
    i: u32,
    d: u32,
    rank: *mut usize,
) -> SteenrodStatus {
    guard(|| {
        let m = ref_arg(m, "module")?;
        if rank.is_null() {
            return Err(Fail(SteenrodStatus::NullPointer, "rank is null".into()));
        }
        *rank = sq_matrix(&m.0, i, d).rank();
        Ok(())
    })
}

/// Number of admissible monomials of degree `d`.
#[no_mangle]
pub extern "C" fn steenrod_basis_size(d: u32) -> usize {
    admissible_basis(d).len()
}

/// Rank of the action of the degree-`d` admissible basis on `t1 ... td`.
#[no_mangle]
pub extern "C" fn steenrod_faithful_rank(d: u32) -> usize {
    faithful_rank(d)
}

/// JSON report separating ΣCP² from S⁵ ∨ S³.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn steenrod_distinguish_pi4_json(out: *mut *mut c_char) -> SteenrodStatus {
    guard(|| {
        let report = distinguish_theorem37();
        put_string(
            out,
            serde_json::to_string(&report).expect("report serializes"),
        )
    })
}
