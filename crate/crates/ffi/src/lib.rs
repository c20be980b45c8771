//! C ABI for the fibertool engine: opaque instance handles, status codes
//! mirroring the CLI exit codes, and JSON-string reports.
//!
//! Ownership rules: every `*mut FtInstance` comes from `ft_instance_parse`
//! and must be released with `ft_instance_free`; every `char*` produced by
//! this library must be released with `ft_string_free`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use fibertool::parse::{parse_instance, Instance};
use fibertool::report::{
    run_check, run_fiber, run_invariants, run_reduction, run_superficial, run_tor, Report,
};
use fibertool::verdict::Params;

/// Status codes returned by every fallible entry point. The numeric values
/// match the CLI exit codes where a counterpart exists.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FtStatus {
    /// Success.
    Ok = 0,
    /// Engine failure (details via ft_last_error_message).
    EngineError = 1,
    /// Instance text failed to parse.
    ParseError = 2,
    /// Analysis finished but some outcome is undecided (advice in report).
    Undecided = 3,
    /// A statement verdict was refuted.
    Refuted = 4,
    /// Null pointer or malformed argument.
    InvalidArgument = 5,
    /// Internal panic was caught at the boundary.
    Panic = 6,
}

/// Opaque parsed instance.
pub struct FtInstance {
    inner: Instance,
}

/// Run parameters; obtain defaults from `ft_params_default`.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct FtParams {
    pub cutoff: u32,
    pub nmax: u32,
    pub window: u32,
    pub trials: u32,
    pub mmax: u32,
    pub retries: u32,
    pub cmax: u32,
    pub seed: u64,
}

impl FtParams {
    fn to_params(self) -> Params {
        Params {
            cutoff: self.cutoff,
            nmax: self.nmax,
            window: self.window as usize,
            trials: self.trials,
            mmax: self.mmax,
            retries: self.retries,
            cmax: self.cmax,
            seed: self.seed,
        }
    }
}

thread_local! {
    static LAST_ERROR: std::cell::RefCell<Option<CString>> = const { std::cell::RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// Default parameters (cutoff 12, nmax 12, window 4, trials 16, mmax 5,
/// retries 8, cmax 6, seed 0).
#[no_mangle]
pub extern "C" fn ft_params_default() -> FtParams {
    let p = Params::default();
    FtParams {
        cutoff: p.cutoff,
        nmax: p.nmax,
        window: p.window as u32,
        trials: p.trials,
        mmax: p.mmax,
        retries: p.retries,
        cmax: p.cmax,
        seed: p.seed,
    }
}

/// Parse an instance file. On success writes a handle to `out` and returns
/// Ok; the handle must be freed with `ft_instance_free`.
///
/// # Safety
/// `text` must be a valid NUL-terminated C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ft_instance_parse(
    text: *const c_char,
    out: *mut *mut FtInstance,
) -> FtStatus {
    if text.is_null() || out.is_null() {
        return FtStatus::InvalidArgument;
    }
    *out = std::ptr::null_mut();
    let res = catch_unwind(AssertUnwindSafe(|| {
        let s = match CStr::from_ptr(text).to_str() {
            Ok(s) => s,
            Err(_) => {
                set_last_error("instance text is not valid UTF-8".into());
                return Err(FtStatus::InvalidArgument);
            }
        };
        match parse_instance(s) {
            Ok(inst) => Ok(Box::into_raw(Box::new(FtInstance { inner: inst }))),
            Err(e) => {
                set_last_error(e.to_string());
                Err(FtStatus::ParseError)
            }
        }
    }));
    match res {
        Ok(Ok(ptr)) => {
            *out = ptr;
            FtStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => {
            set_last_error("panic across the FFI boundary".into());
            FtStatus::Panic
        }
    }
}

/// Release an instance handle. Null is a no-op.
///
/// # Safety
/// `inst` must come from `ft_instance_parse` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ft_instance_free(inst: *mut FtInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Canonical rendering of a parsed instance (the same echo the reports
/// carry). Caller frees with `ft_string_free`.
///
/// # Safety
/// `inst` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ft_instance_render(
    inst: *const FtInstance,
    out: *mut *mut c_char,
) -> FtStatus {
    if inst.is_null() || out.is_null() {
        return FtStatus::InvalidArgument;
    }
    let res = catch_unwind(AssertUnwindSafe(|| {
        fibertool::parse::print_instance(&(*inst).inner)
    }));
    match res {
        Ok(text) => {
            *out = CString::new(text).unwrap_or_default().into_raw();
            FtStatus::Ok
        }
        Err(_) => FtStatus::Panic,
    }
}

fn dispatch(command: &str, inst: &Instance, params: &Params) -> fibertool::Result<Report> {
    match command {
        "invariants" => run_invariants(inst, params),
        "tor" => run_tor(inst, params),
        "fiber" => run_fiber(inst, params),
        "reduction" => run_reduction(inst, params),
        "superficial" => run_superficial(inst, params),
        "check" => run_check(inst, params),
        other => Err(fibertool::Error::DomainError(format!(
            "unknown command '{other}'"
        ))),
    }
}

/// Run one analysis command ("invariants", "tor", "fiber", "reduction",
/// "superficial", "check") and write the JSON report to `out_json` (caller
/// frees with `ft_string_free`). The status reflects the report outcome:
/// Ok, Undecided, or Refuted; the JSON is written in all three cases.
///
/// # Safety
/// All pointers must be valid; `command` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn ft_run_json(
    inst: *const FtInstance,
    command: *const c_char,
    params: *const FtParams,
    out_json: *mut *mut c_char,
) -> FtStatus {
    if inst.is_null() || command.is_null() || params.is_null() || out_json.is_null() {
        return FtStatus::InvalidArgument;
    }
    *out_json = std::ptr::null_mut();
    let res = catch_unwind(AssertUnwindSafe(|| {
        let cmd = match CStr::from_ptr(command).to_str() {
            Ok(c) => c,
            Err(_) => return Err(FtStatus::InvalidArgument),
        };
        let p = (*params).to_params();
        match dispatch(cmd, &(*inst).inner, &p) {
            Ok(report) => {
                let json = serde_json::to_string_pretty(&report).expect("report serializes");
                let status = match report.exit_code() {
                    0 => FtStatus::Ok,
                    3 => FtStatus::Undecided,
                    4 => FtStatus::Refuted,
                    _ => FtStatus::EngineError,
                };
                Ok((json, status))
            }
            Err(e) => {
                set_last_error(e.to_string());
                Err(FtStatus::EngineError)
            }
        }
    }));
    match res {
        Ok(Ok((json, status))) => {
            *out_json = CString::new(json).unwrap_or_default().into_raw();
            status
        }
        Ok(Err(status)) => status,
        Err(_) => {
            set_last_error("panic across the FFI boundary".into());
            FtStatus::Panic
        }
    }
}

/// Convenience wrapper: full `check` with default parameters and a seed.
///
/// # Safety
/// As for `ft_run_json`.
#[no_mangle]
pub unsafe extern "C" fn ft_check_json(
    inst: *const FtInstance,
    seed: u64,
    out_json: *mut *mut c_char,
) -> FtStatus {
    let mut params = ft_params_default();
    params.seed = seed;
    let command = c"check".as_ptr();
    ft_run_json(inst, command, &params, out_json)
}

/// Last error message for this thread, or null when none. Caller frees with
/// `ft_string_free`.
#[no_mangle]
pub extern "C" fn ft_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match e.borrow().as_ref() {
        Some(c) => c.clone().into_raw(),
        None => std::ptr::null_mut(),
    })
}

/// Release a string produced by this library. Null is a no-op.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ft_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
