use std::ffi::{c_char, CStr, CString};
use std::ptr;

use besseltrig_ffi::*;

fn last_error() -> String {
    let mut needed = 0usize;
    unsafe { bt_last_error_message(ptr::null_mut(), 0, &mut needed) };
    let mut buf = vec![0 as c_char; needed];
    assert_eq!(unsafe { bt_last_error_message(buf.as_mut_ptr(), buf.len(), &mut needed) }, BtStatus::Ok);
    unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap().to_owned()
}

fn catalog(name: &str) -> *mut BtFormula {
    let name = CString::new(name).unwrap();
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { bt_formula_catalog(name.as_ptr(), &mut f) }, BtStatus::Ok);
    assert!(!f.is_null());
    f
}

fn emit(f: *const BtFormula, format: BtFormat) -> String {
    let mut needed = 0usize;
    let st = unsafe { bt_formula_emit(f, format, ptr::null_mut(), 0, &mut needed) };
    assert_eq!(st, BtStatus::BufferTooSmall);
    let mut buf = vec![0 as c_char; needed];
    assert_eq!(unsafe { bt_formula_emit(f, format, buf.as_mut_ptr(), buf.len(), &mut needed) }, BtStatus::Ok);
    unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap().to_owned()
}

#[test]
fn catalog_round_trip() {
    let f = catalog("APP1");
    assert_eq!(emit(f, BtFormat::Text), "1/4 + 1/4·cos(x) + 1/2·cos(x·√2/2)");
    assert!(emit(f, BtFormat::Json).starts_with('{'));
    let mut order = 0;
    assert_eq!(unsafe { bt_formula_error_order(f, &mut order) }, BtStatus::Ok);
    assert_eq!(order, 8);
    unsafe { bt_formula_free(f) };
}

#[test]
fn unknown_name_sets_message() {
    let name = CString::new("J7").unwrap();
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { bt_formula_catalog(name.as_ptr(), &mut f) }, BtStatus::UnknownName);
    assert!(f.is_null());
    assert!(last_error().contains("J7"));
}

#[test]
fn builder_precondition_maps_to_invalid_spec() {
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { bt_formula_build_jp(3, 4, &mut f) }, BtStatus::InvalidSpec);
    assert!(last_error().contains("requires 2p < n"));
    assert_eq!(unsafe { bt_formula_build_j0(2, 1, 0, &mut f) }, BtStatus::InvalidArgument);
}

#[test]
fn builders_track_the_oracle() {
    let mut handles = Vec::new();
    let mut f = ptr::null_mut();
    unsafe {
        assert_eq!(bt_formula_build_j0(4, 1, 16, &mut f), BtStatus::Ok);
        handles.push(f);
        assert_eq!(bt_formula_build_j0_optimal(6, &mut f), BtStatus::Ok);
        handles.push(f);
        assert_eq!(bt_formula_build_jp(2, 8, &mut f), BtStatus::Ok);
        handles.push(f);
        assert_eq!(bt_formula_build_odd_order(2, &mut f), BtStatus::Ok);
        handles.push(f);
    }
    for &h in &handles {
        let mut err = f64::NAN;
        assert_eq!(unsafe { bt_spot_error(h, 1.0, 30, &mut err) }, BtStatus::Ok);
        assert!(err.abs() < 1e-8, "{err}");
        unsafe { bt_formula_free(h) };
    }
}

#[test]
fn eval_matches_bessel_reference() {
    let f = catalog("J0n6opt");
    let (mut a, mut j) = (0.0, 0.0);
    unsafe {
        assert_eq!(bt_formula_eval(f, 2.5, 0, &mut a), BtStatus::Ok);
        assert_eq!(bt_bessel_j(0, 2.5, 0, &mut j), BtStatus::Ok);
    }
    assert!((a - j).abs() < 1e-12);
    assert!((j + 0.048_383_776_468_198).abs() < 1e-15);

    let x = CString::new("1").unwrap();
    let mut buf = vec![0 as c_char; 128];
    let mut needed = 0;
    let st = unsafe { bt_formula_eval_str(f, x.as_ptr(), 40, buf.as_mut_ptr(), buf.len(), &mut needed) };
    assert_eq!(st, BtStatus::Ok);
    let s = unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap();
    // J_0(1) = 0.76519768655796655145..., error ~ -1.9e-31
    assert!(s.starts_with("7.65197686557966551449717526"), "{s}");
    unsafe { bt_formula_free(f) };
}

#[test]
fn differentiate_gives_j1() {
    let f = catalog("eps24");
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { bt_formula_differentiate(f, &mut d) }, BtStatus::Ok);
    let (mut target, mut order) = (0, 0);
    unsafe {
        bt_formula_target(d, &mut target);
        bt_formula_error_order(d, &mut order);
    }
    assert_eq!((target, order), (1, 23));
    unsafe {
        bt_formula_free(d);
        bt_formula_free(f);
    }
}

#[test]
fn power_sum_example() {
    let (mut cf, mut bf) = (0.0, 0.0);
    unsafe {
        assert_eq!(bt_power_sum_closed_form(BtSumFamily::MixEvenOdd, 5, 1, 6, 0, 1, 0, &mut cf), BtStatus::Ok);
        assert_eq!(bt_power_sum_brute_force(BtSumFamily::MixEvenOdd, 5, 1, 6, 0, 1, 0, &mut bf), BtStatus::Ok);
    }
    assert_eq!(cf, -125.0 / 1024.0);
    assert!((bf - cf).abs() < 1e-15);
    let st = unsafe { bt_power_sum_closed_form(BtSumFamily::CosEvenHalf, 1, 1, 2, 0, 1, 0, &mut cf) };
    assert_eq!(st, BtStatus::UnsupportedQuery);
}

#[test]
fn null_and_bad_inputs() {
    let mut v = 0.0;
    unsafe {
        assert_eq!(bt_formula_eval(ptr::null(), 1.0, 0, &mut v), BtStatus::NullPointer);
        assert_eq!(bt_bessel_j(0, f64::NAN, 0, &mut v), BtStatus::InvalidArgument);
        assert_eq!(bt_bessel_j(0, 1.0, 8, &mut v), BtStatus::InvalidArgument);
        assert_eq!(bt_formula_catalog(ptr::null(), ptr::null_mut()), BtStatus::NullPointer);
        bt_formula_free(ptr::null_mut());
    }
    let f = catalog("J3");
    assert_eq!(unsafe { bt_formula_eval(f, 1.0, 0, ptr::null_mut()) }, BtStatus::NullPointer);
    unsafe { bt_formula_free(f) };
}

#[test]
fn header_declares_every_entry_point() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/besseltrig.h")).unwrap();
    for sym in [
        "typedef struct BtFormula BtFormula",
        "BT_STATUS_OK = 0",
        "bt_last_error_message(",
        "bt_formula_catalog(",
        "bt_formula_build_j0(",
        "bt_formula_build_j0_optimal(",
        "bt_formula_build_jp(",
        "bt_formula_build_odd_order(",
        "bt_formula_differentiate(",
        "bt_formula_free(",
        "bt_formula_emit(",
        "bt_formula_eval(",
        "bt_formula_eval_str(",
        "bt_bessel_j(",
        "bt_spot_error(",
        "bt_power_sum_closed_form(",
        "bt_power_sum_brute_force(",
    ] {
        assert!(header.contains(sym), "{sym} missing");
    }
}
