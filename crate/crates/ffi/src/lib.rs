//! C interface to `surfhom`.
//!
//! Groups are opaque handles created by `surfhom_group_new` and released
//! with `surfhom_group_free`. Every fallible call returns a `SurfhomStatus`;
//! on failure `surfhom_last_error` describes the problem. Counts are
//! returned as NUL-terminated decimal strings (they can exceed 64 bits) and
//! must be released with `surfhom_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::{Arc, OnceLock};

use surfhom::chartable::{compute_character_table, CharacterTable};
use surfhom::group::{build_group, FiniteGroup, GroupSpec};
use surfhom::oracle::{oracle_count_with_boundary, Budget};
use surfhom::surface::{count_general, count_surface, SurfaceKind, SurfaceSpec};
use surfhom::words::parse_word;
use surfhom::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurfhomStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    BudgetExceeded = 4,
    Internal = 5,
    Panic = 6,
}

/// A finite permutation group with its lazily computed character table.
pub struct SurfhomGroup {
    group: Arc<FiniteGroup>,
    table: OnceLock<CharacterTable>,
}

impl SurfhomGroup {
    fn table(&self) -> Result<&CharacterTable, Error> {
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        let t = compute_character_table(self.group.clone())?;
        Ok(self.table.get_or_init(|| t))
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SurfhomStatus {
    match e {
        Error::BudgetExceeded { .. } => SurfhomStatus::BudgetExceeded,
        Error::Syntax { .. } | Error::UnknownGenerator { .. } | Error::GroupSpec(_) | Error::InvalidPermutation(_) => {
            SurfhomStatus::Parse
        }
        e if e.is_internal() => SurfhomStatus::Internal,
        _ => SurfhomStatus::InvalidArgument,
    }
}

/// Runs `f`, translating errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), (SurfhomStatus, String)>) -> SurfhomStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SurfhomStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside surfhom".into());
            SurfhomStatus::Panic
        }
    }
}

fn lib<T>(r: Result<T, Error>) -> Result<T, (SurfhomStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (SurfhomStatus, String) {
    (SurfhomStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (SurfhomStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (SurfhomStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn group_arg<'a>(g: *const SurfhomGroup) -> Result<&'a SurfhomGroup, (SurfhomStatus, String)> {
    g.as_ref().ok_or_else(|| null("group"))
}

unsafe fn classes_arg(classes: *const usize, n: usize) -> Result<Vec<usize>, (SurfhomStatus, String)> {
    if n == 0 {
        return Ok(Vec::new());
    }
    if classes.is_null() {
        return Err(null("classes"));
    }
    Ok(std::slice::from_raw_parts(classes, n).to_vec())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (SurfhomStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| (SurfhomStatus::Internal, "interior NUL".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

fn kind(orientable: bool, genus: u32) -> SurfaceKind {
    if orientable {
        SurfaceKind::Orientable(genus as usize)
    } else {
        SurfaceKind::Nonorientable(genus as usize)
    }
}

/// Message for the most recent failure on this thread, or NULL. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn surfhom_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn surfhom_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version string"),
    };
    VERSION.as_ptr()
}

/// Builds a group from a spec string such as `builtin:sym:4`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn surfhom_group_new(spec: *const c_char, out: *mut *mut SurfhomGroup) -> SurfhomStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let spec: GroupSpec = lib(str_arg(spec, "spec")?.trim().parse())?;
        let group = Arc::new(lib(build_group(&spec))?);
        *out = Box::into_raw(Box::new(SurfhomGroup {
            group,
            table: OnceLock::new(),
        }));
        Ok(())
    })
}

/// Releases a group handle. NULL is ignored.
///
/// # Safety
/// `g` must come from `surfhom_group_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn surfhom_group_free(g: *mut SurfhomGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn surfhom_group_order(g: *const SurfhomGroup, out: *mut u64) -> SurfhomStatus {
    guard(|| {
        let g = group_arg(g)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = g.group.order() as u64;
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn surfhom_group_class_count(g: *const SurfhomGroup, out: *mut u64) -> SurfhomStatus {
    guard(|| {
        let g = group_arg(g)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = g.group.classes().len() as u64;
        Ok(())
    })
}

/// Homomorphisms from a closed surface group: orientable of genus `genus`,
/// or nonorientable with `genus` crosscaps.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn surfhom_count_closed(
    g: *const SurfhomGroup,
    orientable: bool,
    genus: u32,
    out: *mut *mut c_char,
) -> SurfhomStatus {
    surfhom_count_bounded(g, orientable, genus, ptr::null(), 0, out)
}

/// As `surfhom_count_closed`, with boundary circles in the classes
/// `classes[0..n]` (canonical class indices).
///
/// # Safety
/// `g` must be a live handle, `classes` must point to `n` values when
/// `n > 0`, and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn surfhom_count_bounded(
    g: *const SurfhomGroup,
    orientable: bool,
    genus: u32,
    classes: *const usize,
    n: usize,
    out: *mut *mut c_char,
) -> SurfhomStatus {
    guard(|| {
        let g = group_arg(g)?;
        let boundary = classes_arg(classes, n)?;
        let t = lib(g.table())?;
        let spec = SurfaceSpec {
            kind: kind(orientable, genus),
            boundary,
        };
        let c = lib(count_surface(t, &spec))?;
        put_string(out, c.value.to_string())
    })
}

/// Solutions of `γ(g) c_1 ⋯ c_n = 1` for a word of the given rank, by the
/// character formula. Unrecognized word shapes use enumeration limited to
/// `max_tuples` assignments.
///
/// # Safety
/// Pointer arguments as for `surfhom_count_bounded`; `word` must be a
/// NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn surfhom_count_word(
    g: *const SurfhomGroup,
    word: *const c_char,
    rank: u32,
    classes: *const usize,
    n: usize,
    max_tuples: u64,
    out: *mut *mut c_char,
) -> SurfhomStatus {
    guard(|| {
        let g = group_arg(g)?;
        let w = lib(parse_word(str_arg(word, "word")?, rank as usize))?;
        let boundary = classes_arg(classes, n)?;
        let t = lib(g.table())?;
        let budget = Budget::new(max_tuples, 1);
        let c = lib(count_general(&w, t, &boundary, &budget))?;
        put_string(out, c.value.to_string())
    })
}

/// Brute-force count of `γ(g) c_1 ⋯ c_n = 1` over `G^rank × ΠC_i`.
///
/// # Safety
/// As for `surfhom_count_word`.
#[no_mangle]
pub unsafe extern "C" fn surfhom_oracle_count(
    g: *const SurfhomGroup,
    word: *const c_char,
    rank: u32,
    classes: *const usize,
    n: usize,
    max_tuples: u64,
    workers: u32,
    out: *mut *mut c_char,
) -> SurfhomStatus {
    guard(|| {
        let g = group_arg(g)?;
        let w = lib(parse_word(str_arg(word, "word")?, rank as usize))?;
        let boundary = classes_arg(classes, n)?;
        let budget = Budget::new(max_tuples, workers.max(1) as usize);
        let c = lib(oracle_count_with_boundary(&w, &g.group, &boundary, &budget))?;
        put_string(out, c.to_string())
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn surfhom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
