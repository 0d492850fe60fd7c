//! C ABI over `yangian-core`.
//!
//! Every fallible function returns a [`YangianStatus`]. On failure a
//! thread-local message is available from [`yangian_last_error`]. Handles are
//! opaque and must be released with the matching `_free` function; strings
//! returned through out-parameters are released with [`yangian_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use yangian_core::current::graded_dim;
use yangian_core::suite::{run_suite, OmegaSource, Suite, SuiteConfig};
use yangian_core::ugl::{UAlgebra, UElement};
use yangian_core::words::Word;
use yangian_core::{Error, Scalar};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YangianStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Precondition = 4,
    SizeLimit = 5,
    NotStabilized = 6,
    Failed = 7,
    Panic = 8,
}

/// `U(gl(N, Ω))` for a fixed algebra and `N`.
pub struct YangianAlgebra {
    inner: UAlgebra,
}

/// An element of some `U(gl(N, Ω))`.
pub struct YangianElement {
    inner: UElement,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> YangianStatus {
    match e {
        Error::Parse { .. } => YangianStatus::Parse,
        Error::Precondition(_) | Error::NotUnital => YangianStatus::Precondition,
        Error::SizeLimit(_) => YangianStatus::SizeLimit,
        Error::NotStabilized(_) => YangianStatus::NotStabilized,
        Error::Io(_) => YangianStatus::Failed,
        _ => YangianStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), YangianStatus>) -> YangianStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => YangianStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            YangianStatus::Panic
        }
    }
}

fn fail(e: Error) -> YangianStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn null(what: &str) -> YangianStatus {
    set_error(format!("{what} is null"));
    YangianStatus::NullPointer
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, YangianStatus> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("{what} is not UTF-8"));
        YangianStatus::InvalidArgument
    })
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn yangian_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn yangian_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds `U(gl(n, Ω))`. `omega` is a builtin name such as `"C"` or
/// `"matrix(2)"`, or the path of a JSON specification.
///
/// # Safety
/// `omega` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn yangian_algebra_new(
    omega: *const c_char,
    n: usize,
    out: *mut *mut YangianAlgebra,
) -> YangianStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let src = OmegaSource::parse(str_arg(omega, "omega")?);
        let alg = src.load().map_err(fail)?;
        let inner = UAlgebra::new(alg, n).map_err(fail)?;
        *out = Box::into_raw(Box::new(YangianAlgebra { inner }));
        Ok(())
    })
}

/// # Safety
/// `alg` must be null or a handle from [`yangian_algebra_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn yangian_algebra_free(alg: *mut YangianAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// `N` of the algebra, or 0 for a null handle.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn yangian_algebra_rank(alg: *const YangianAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.inner.n())
}

/// The element `t_ij(w; N; s)` with `s = s_num / s_den`. Indices `i, j` are
/// 1-based; the letters of `w` are 0-based basis positions of `Ω`.
///
/// # Safety
/// `alg` must be live; `letters` must point to `len` values; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn yangian_t_elem(
    alg: *const YangianAlgebra,
    i: usize,
    j: usize,
    letters: *const usize,
    len: usize,
    s_num: i64,
    s_den: i64,
    out: *mut *mut YangianElement,
) -> YangianStatus {
    guard(|| {
        let alg = alg.as_ref().ok_or_else(|| null("alg"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        if letters.is_null() && len > 0 {
            return Err(null("letters"));
        }
        let w = if len == 0 {
            Word(Vec::new())
        } else {
            Word(std::slice::from_raw_parts(letters, len).to_vec())
        };
        let s = Scalar::new(s_num, s_den).map_err(fail)?;
        let inner = alg.inner.t_elem(i, j, &w, &s).map_err(fail)?;
        *out = Box::into_raw(Box::new(YangianElement { inner }));
        Ok(())
    })
}

/// Projects `elem`, an element of `from`, into `to`, which must have rank one
/// less over the same algebra.
///
/// # Safety
/// All handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn yangian_project_down(
    from: *const YangianAlgebra,
    elem: *const YangianElement,
    to: *const YangianAlgebra,
    out: *mut *mut YangianElement,
) -> YangianStatus {
    guard(|| {
        let from = from.as_ref().ok_or_else(|| null("from"))?;
        let to = to.as_ref().ok_or_else(|| null("to"))?;
        let elem = elem.as_ref().ok_or_else(|| null("elem"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let inner = from.inner.project_down(&elem.inner, &to.inner).map_err(fail)?;
        *out = Box::into_raw(Box::new(YangianElement { inner }));
        Ok(())
    })
}

/// Whether two elements are equal. Writes 1 or 0 to `out`.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn yangian_element_equal(
    a: *const YangianElement,
    b: *const YangianElement,
    out: *mut i32,
) -> YangianStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("a"))?;
        let b = b.as_ref().ok_or_else(|| null("b"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = (a.inner == b.inner) as i32;
        Ok(())
    })
}

/// Text form of `elem` using the basis labels of `alg`.
///
/// # Safety
/// Handles must be live; `out` writable. Free the result with
/// [`yangian_string_free`].
#[no_mangle]
pub unsafe extern "C" fn yangian_element_text(
    alg: *const YangianAlgebra,
    elem: *const YangianElement,
    out: *mut *mut c_char,
) -> YangianStatus {
    guard(|| {
        let alg = alg.as_ref().ok_or_else(|| null("alg"))?;
        let elem = elem.as_ref().ok_or_else(|| null("elem"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = into_c_string(elem.inner.to_text(alg.inner.omega()));
        Ok(())
    })
}

/// # Safety
/// `elem` must be null or a live element handle.
#[no_mangle]
pub unsafe extern "C" fn yangian_element_free(elem: *mut YangianElement) {
    if !elem.is_null() {
        drop(Box::from_raw(elem));
    }
}

/// Dimension `d²·L^(n+1)` of grade `n` of `gl_d` over the current algebra of
/// an `L`-dimensional `Ω`. Fails with `INVALID_ARGUMENT` on overflow.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn yangian_graded_dim(dim: usize, d: usize, n: usize, out: *mut u64) -> YangianStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let too_big = || fail(Error::InvalidArgument("dimension does not fit in 64 bits".into()));
        *out = graded_dim(dim, d, n)
            .and_then(|v| u64::try_from(v).ok())
            .ok_or_else(too_big)?;
        Ok(())
    })
}

/// Runs a named suite with default bounds and writes the JSON report to
/// `out`. `omega` may be null to use each suite's default algebras. The
/// status is `OK` when the suite ran, even if checks failed; `passed`
/// receives 1 when no check failed.
///
/// # Safety
/// `suite` must be a nul-terminated string, `omega` null or one; `out` and
/// `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn yangian_run_suite(
    suite: *const c_char,
    omega: *const c_char,
    out: *mut *mut c_char,
    passed: *mut i32,
) -> YangianStatus {
    guard(|| {
        if out.is_null() || passed.is_null() {
            return Err(null("out"));
        }
        let suite: Suite = str_arg(suite, "suite")?.parse().map_err(fail)?;
        let mut cfg = SuiteConfig::new(suite);
        if !omega.is_null() {
            cfg.omega = Some(OmegaSource::parse(str_arg(omega, "omega")?));
        }
        let report = run_suite(&cfg).map_err(fail)?;
        *passed = report.passed() as i32;
        *out = into_c_string(report.to_json());
        Ok(())
    })
}
