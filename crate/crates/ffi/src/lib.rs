//! C ABI over `besseltrig`.
//!
//! Formulas are opaque `BtFormula` handles owned by the caller and released
//! with `bt_formula_free`. Every fallible call returns a `BtStatus`; on
//! failure the message is kept per thread and read back with
//! `bt_last_error_message`. Strings are copied into caller buffers: the
//! required size (including the NUL) is always stored in `*needed`, and
//! `BT_STATUS_BUFFER_TOO_SMALL` is returned when `len` is short.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use num_rational::BigRational;

use besseltrig::error::Error;
use besseltrig::error_lab::spot_error;
use besseltrig::formula::{self, OutputFormat, TrigFormula};
use besseltrig::oracle::{bessel_j, BesselOrder};
use besseltrig::power_sums::{brute_force, closed_form, PowerSumQuery, SumFamily, Theta};
use besseltrig::real::{Precision, Real};

/// Opaque formula handle.
pub struct BtFormula(TrigFormula);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    BufferTooSmall = 3,
    InvalidArgument = 4,
    InvalidSpec = 5,
    UnknownName = 6,
    InvalidTarget = 7,
    Domain = 8,
    Precision = 9,
    NoSignChange = 10,
    UnsupportedQuery = 11,
    Panic = 12,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BtFormat {
    Text = 0,
    Latex = 1,
    Json = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BtSumFamily {
    CosEvenHalf = 0,
    SinEvenHalf = 1,
    CosOddCircle = 2,
    CosEvenCircle = 3,
    MixEvenEven = 4,
    MixEvenOdd = 5,
    ZeroEvenEven = 6,
    MixOddEvenCos = 7,
    MixOddEvenSin = 8,
    MixOddOddCos = 9,
    MixOddOddSin = 10,
}

impl From<BtSumFamily> for SumFamily {
    fn from(f: BtSumFamily) -> Self {
        match f {
            BtSumFamily::CosEvenHalf => SumFamily::CosEvenHalf,
            BtSumFamily::SinEvenHalf => SumFamily::SinEvenHalf,
            BtSumFamily::CosOddCircle => SumFamily::CosOddCircle,
            BtSumFamily::CosEvenCircle => SumFamily::CosEvenCircle,
            BtSumFamily::MixEvenEven => SumFamily::MixEvenEven,
            BtSumFamily::MixEvenOdd => SumFamily::MixEvenOdd,
            BtSumFamily::ZeroEvenEven => SumFamily::ZeroEvenEven,
            BtSumFamily::MixOddEvenCos => SumFamily::MixOddEvenCos,
            BtSumFamily::MixOddEvenSin => SumFamily::MixOddEvenSin,
            BtSumFamily::MixOddOddCos => SumFamily::MixOddOddCos,
            BtSumFamily::MixOddOddSin => SumFamily::MixOddOddSin,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> BtStatus {
    match e {
        Error::Domain(_) => BtStatus::Domain,
        Error::Precision(_) => BtStatus::Precision,
        Error::InvalidSpec(_) => BtStatus::InvalidSpec,
        Error::UnknownName(_) => BtStatus::UnknownName,
        Error::InvalidTarget(_) => BtStatus::InvalidTarget,
        Error::NoSignChange(_) => BtStatus::NoSignChange,
        Error::UnsupportedQuery(_) => BtStatus::UnsupportedQuery,
        Error::InvalidArgument(_) => BtStatus::InvalidArgument,
    }
}

struct Fail(BtStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(BtStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, records any failure, and never unwinds into C.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> BtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(String::new());
            BtStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            BtStatus::Panic
        }
    }
}

fn precision(digits: u32) -> Result<Precision, Fail> {
    if digits == 0 {
        return Ok(Precision::default());
    }
    Ok(Precision::new(digits)?)
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(BtStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn formula_ref<'a>(f: *const BtFormula) -> Result<&'a TrigFormula, Fail> {
    f.as_ref().map(|h| &h.0).ok_or_else(|| null("formula"))
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

unsafe fn write_str(s: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> Result<(), Fail> {
    let n = s.len() + 1;
    if !needed.is_null() {
        needed.write(n);
    }
    if len < n {
        return Err(Fail(BtStatus::BufferTooSmall, format!("buffer holds {len} bytes, {n} needed")));
    }
    if buf.is_null() {
        return Err(null("buffer"));
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf as *mut u8, s.len());
    buf.add(s.len()).write(0);
    Ok(())
}

unsafe fn hand_out(out: *mut *mut BtFormula, f: TrigFormula) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output handle"));
    }
    out.write(Box::into_raw(Box::new(BtFormula(f))));
    Ok(())
}

fn turn(num: i64, den: i64) -> Result<BigRational, Fail> {
    if den == 0 {
        return Err(Fail(BtStatus::InvalidArgument, "theta denominator is zero".into()));
    }
    Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// Copies the calling thread's last error message (empty after a success).
///
/// # Safety
/// `buf` must be valid for `len` bytes; `needed` may be null.
#[no_mangle]
pub unsafe extern "C" fn bt_last_error_message(buf: *mut c_char, len: usize, needed: *mut usize) -> BtStatus {
    let msg = LAST_ERROR.with(|e| e.borrow().clone());
    match write_str(&msg, buf, len, needed) {
        Ok(()) => BtStatus::Ok,
        Err(Fail(s, _)) => s,
    }
}

/// Looks up a named formula such as `"APP1"` or `"J0n6opt"`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_formula_catalog(name: *const c_char, out: *mut *mut BtFormula) -> BtStatus {
    guard(|| {
        let f = formula::catalog(read_str(name, "name")?)?;
        hand_out(out, f)
    })
}

/// `J_0` from `n` cosine nodes offset by `theta = (theta_num/theta_den)·π`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_formula_build_j0(
    n: u32,
    theta_num: i64,
    theta_den: i64,
    out: *mut *mut BtFormula,
) -> BtStatus {
    guard(|| hand_out(out, formula::build_j0(n, &turn(theta_num, theta_den)?)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_formula_build_j0_optimal(n: u32, out: *mut *mut BtFormula) -> BtStatus {
    guard(|| hand_out(out, formula::build_j0_optimal(n)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_formula_build_jp(p: u32, n: u32, out: *mut *mut BtFormula) -> BtStatus {
    guard(|| hand_out(out, formula::build_jp(p, n)?))
}

/// `J_{2n+1}` from `2n + 1` sine terms.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_formula_build_odd_order(n: u32, out: *mut *mut BtFormula) -> BtStatus {
    guard(|| hand_out(out, formula::build_odd_order(n)?))
}

/// `-d/dx` of a `J_0` formula, which approximates `J_1`.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_formula_differentiate(f: *const BtFormula, out: *mut *mut BtFormula) -> BtStatus {
    guard(|| hand_out(out, formula::differentiate(formula_ref(f)?)?))
}

/// # Safety
/// `f` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bt_formula_free(f: *mut BtFormula) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Bessel order the formula approximates.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_formula_target(f: *const BtFormula, out: *mut u32) -> BtStatus {
    guard(|| write_out(out, formula_ref(f)?.target.get()))
}

/// Power of `x` in the leading term of the predicted error.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_formula_error_order(f: *const BtFormula, out: *mut u32) -> BtStatus {
    guard(|| write_out(out, formula_ref(f)?.predicted_error.order))
}

/// # Safety
/// `f` must be a live handle; `buf` must be valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn bt_formula_emit(
    f: *const BtFormula,
    format: BtFormat,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> BtStatus {
    guard(|| {
        let fmt = match format {
            BtFormat::Text => OutputFormat::Text,
            BtFormat::Latex => OutputFormat::Latex,
            BtFormat::Json => OutputFormat::Json,
        };
        write_str(&formula_ref(f)?.emit(fmt), buf, len, needed)
    })
}

/// Evaluates the formula at `x` using `digits` decimal digits (0 for the
/// default) and rounds to a double.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_formula_eval(f: *const BtFormula, x: f64, digits: u32, out: *mut f64) -> BtStatus {
    guard(|| {
        let prec = precision(digits)?;
        let x = finite(x, prec)?;
        write_out(out, formula_ref(f)?.eval(&x, prec).to_f64())
    })
}

/// Full-precision evaluation: `x` is a decimal string, the result is
/// written in scientific notation with `digits` significant digits.
///
/// # Safety
/// `f` must be a live handle; `x` NUL-terminated; `buf` valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn bt_formula_eval_str(
    f: *const BtFormula,
    x: *const c_char,
    digits: u32,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> BtStatus {
    guard(|| {
        let prec = precision(digits)?;
        let x = Real::parse_decimal(read_str(x, "x")?, prec)?;
        let v = formula_ref(f)?.eval(&x, prec);
        write_str(&v.to_sci_string(prec.digits() as usize), buf, len, needed)
    })
}

fn finite(x: f64, prec: Precision) -> Result<Real, Fail> {
    if !x.is_finite() {
        return Err(Fail(BtStatus::InvalidArgument, format!("x = {x} is not finite")));
    }
    Ok(Real::from_f64(x, prec))
}

/// The reference value `J_p(x)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_bessel_j(p: u32, x: f64, digits: u32, out: *mut f64) -> BtStatus {
    guard(|| {
        let prec = precision(digits)?;
        let x = finite(x, prec)?;
        write_out(out, bessel_j(BesselOrder(p), &x, prec)?.to_f64())
    })
}

/// `formula(x) - J_p(x)` computed at `digits` and rounded to a double.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_spot_error(f: *const BtFormula, x: f64, digits: u32, out: *mut f64) -> BtStatus {
    guard(|| {
        let prec = precision(digits)?;
        let x = finite(x, prec)?;
        write_out(out, spot_error(formula_ref(f)?, &x, prec)?.to_f64())
    })
}

fn query(
    family: BtSumFamily,
    node_param: u32,
    q: u32,
    k: u32,
    theta_num: i64,
    theta_den: i64,
) -> Result<PowerSumQuery, Fail> {
    let theta = Theta::PiMultiple(turn(theta_num, theta_den)?);
    Ok(PowerSumQuery::new(family.into(), node_param, q, k, theta))
}

/// Closed-form power sum at `theta = (theta_num/theta_den)·π`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_power_sum_closed_form(
    family: BtSumFamily,
    node_param: u32,
    q: u32,
    k: u32,
    theta_num: i64,
    theta_den: i64,
    digits: u32,
    out: *mut f64,
) -> BtStatus {
    guard(|| {
        let prec = precision(digits)?;
        let query = query(family, node_param, q, k, theta_num, theta_den)?;
        write_out(out, closed_form(&query)?.eval(&query.theta, prec).to_f64())
    })
}

/// The same sum evaluated term by term.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_power_sum_brute_force(
    family: BtSumFamily,
    node_param: u32,
    q: u32,
    k: u32,
    theta_num: i64,
    theta_den: i64,
    digits: u32,
    out: *mut f64,
) -> BtStatus {
    guard(|| {
        let prec = precision(digits)?;
        let query = query(family, node_param, q, k, theta_num, theta_den)?;
        write_out(out, brute_force(&query, prec)?.to_f64())
    })
}
