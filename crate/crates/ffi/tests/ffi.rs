use std::ffi::{CStr, CString};
use std::ptr;

use yangian_ffi::*;

fn text(alg: *const YangianAlgebra, e: *const YangianElement) -> String {
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(yangian_element_text(alg, e, &mut s), YangianStatus::Ok);
        let out = CStr::from_ptr(s).to_str().unwrap().to_string();
        yangian_string_free(s);
        out
    }
}

fn algebra(omega: &str, n: usize) -> *mut YangianAlgebra {
    let name = CString::new(omega).unwrap();
    let mut alg = ptr::null_mut();
    assert_eq!(
        unsafe { yangian_algebra_new(name.as_ptr(), n, &mut alg) },
        YangianStatus::Ok
    );
    alg
}

#[test]
fn projection_round_trip() {
    let (hi, lo) = (algebra("direct_sum_C(2)", 3), algebra("direct_sum_C(2)", 2));
    assert_eq!(unsafe { yangian_algebra_rank(hi) }, 3);
    let letters = [0usize, 1, 1];
    unsafe {
        let (mut t_hi, mut t_lo, mut down) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(
            yangian_t_elem(hi, 1, 2, letters.as_ptr(), 3, 5, 2, &mut t_hi),
            YangianStatus::Ok
        );
        assert_eq!(
            yangian_t_elem(lo, 1, 2, letters.as_ptr(), 3, 5, 2, &mut t_lo),
            YangianStatus::Ok
        );
        assert_eq!(yangian_project_down(hi, t_hi, lo, &mut down), YangianStatus::Ok);
        let mut eq = 0;
        assert_eq!(yangian_element_equal(down, t_lo, &mut eq), YangianStatus::Ok);
        assert_eq!(eq, 1);
        assert_eq!(text(lo, down), text(lo, t_lo));
        for e in [t_hi, t_lo, down] {
            yangian_element_free(e);
        }
        yangian_algebra_free(hi);
        yangian_algebra_free(lo);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    unsafe {
        let bad = CString::new("matrix(").unwrap();
        let mut alg = ptr::null_mut();
        assert_ne!(yangian_algebra_new(bad.as_ptr(), 2, &mut alg), YangianStatus::Ok);
        assert!(alg.is_null());
        assert!(!yangian_last_error().is_null());

        let c = algebra("C", 2);
        let mut e = ptr::null_mut();
        let letters = [4usize];
        assert_eq!(
            yangian_t_elem(c, 1, 1, letters.as_ptr(), 1, 0, 1, &mut e),
            YangianStatus::InvalidArgument
        );
        assert_eq!(
            yangian_t_elem(c, 1, 1, letters.as_ptr(), 1, 0, 0, &mut e),
            YangianStatus::InvalidArgument
        );
        assert_eq!(
            yangian_t_elem(ptr::null(), 1, 1, letters.as_ptr(), 1, 0, 1, &mut e),
            YangianStatus::NullPointer
        );
        let msg = CStr::from_ptr(yangian_last_error()).to_str().unwrap();
        assert!(msg.contains("alg"));
        yangian_algebra_free(c);

        let mut v = 0u64;
        assert_eq!(yangian_graded_dim(3, 2, 2, &mut v), YangianStatus::Ok);
        assert_eq!(v, 108);
        assert_eq!(
            yangian_graded_dim(1000, 1000, 40, &mut v),
            YangianStatus::InvalidArgument
        );
    }
}

#[test]
fn suites_report_json() {
    let suite = CString::new("current").unwrap();
    let omega = CString::new("C").unwrap();
    let (mut out, mut passed) = (ptr::null_mut(), 0);
    unsafe {
        assert_eq!(
            yangian_run_suite(suite.as_ptr(), omega.as_ptr(), &mut out, &mut passed),
            YangianStatus::Ok
        );
        let json: serde_json::Value = serde_json::from_str(CStr::from_ptr(out).to_str().unwrap()).unwrap();
        yangian_string_free(out);
        assert_eq!(passed, 1);
        assert_eq!(json["suite"], "current");
        let bogus = CString::new("bogus").unwrap();
        assert_eq!(
            yangian_run_suite(bogus.as_ptr(), ptr::null(), &mut out, &mut passed),
            YangianStatus::InvalidArgument
        );
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/yangian.h");
    let src = format!("#include \"{header}\"\nint main(void) {{ return YANGIAN_STATUS_OK; }}\n");
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("probe.c");
    std::fs::write(&file, src).unwrap();
    let status = std::process::Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only"])
        .arg(&file)
        .status();
    match status {
        Ok(s) => assert!(s.success()),
        Err(e) => panic!("no C compiler available: {e}"),
    }
}
