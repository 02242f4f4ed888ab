use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use steenrod_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    steenrod_string_free(s);
    out
}

unsafe fn element(text: &str) -> *mut SteenrodElement {
    let mut e = ptr::null_mut();
    assert_eq!(
        steenrod_element_parse(cstr(text).as_ptr(), &mut e),
        SteenrodStatus::Ok
    );
    e
}

#[test]
fn normalize_and_product() {
    unsafe {
        let e = element("Sq2 Sq3");
        let mut nf = ptr::null_mut();
        assert_eq!(
            steenrod_element_normalize(e, 0, &mut nf),
            SteenrodStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(steenrod_element_to_string(nf, &mut s), SteenrodStatus::Ok);
        assert_eq!(take(s), "Sq5 + Sq4 Sq1");

        let a = element("Sq1");
        let mut p = ptr::null_mut();
        assert_eq!(steenrod_element_product(a, a, &mut p), SteenrodStatus::Ok);
        steenrod_element_to_string(p, &mut s);
        assert_eq!(take(s), "0");

        for h in [e, nf, a, p] {
            steenrod_element_free(h);
        }
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut e = ptr::null_mut();
        assert_eq!(
            steenrod_element_parse(cstr("Sq0").as_ptr(), &mut e),
            SteenrodStatus::Parse
        );
        assert!(e.is_null());
        let msg = CStr::from_ptr(steenrod_last_error()).to_str().unwrap();
        assert!(msg.contains("column 1"), "{msg}");

        assert_eq!(
            steenrod_element_parse(ptr::null(), &mut e),
            SteenrodStatus::NullPointer
        );
        assert_eq!(
            steenrod_element_parse(cstr("1").as_ptr(), ptr::null_mut()),
            SteenrodStatus::NullPointer
        );

        let bad = [0xffu8, 0];
        assert_eq!(
            steenrod_poly_parse(bad.as_ptr().cast(), &mut ptr::null_mut()),
            SteenrodStatus::InvalidUtf8
        );

        let long = element("Sq1 Sq2 Sq4 Sq8");
        assert_eq!(
            steenrod_element_normalize(long, 1, &mut e),
            SteenrodStatus::BudgetExceeded
        );
        steenrod_element_free(long);

        let mut m = ptr::null_mut();
        assert_eq!(
            steenrod_module_builtin(cstr("rp").as_ptr(), &mut m),
            SteenrodStatus::InvalidModule
        );
        assert_eq!(
            steenrod_module_from_json(cstr("{").as_ptr(), &mut m),
            SteenrodStatus::InvalidModule
        );

        steenrod_element_free(ptr::null_mut());
        steenrod_poly_free(ptr::null_mut());
        steenrod_module_free(ptr::null_mut());
        steenrod_string_free(ptr::null_mut());
    }
}

#[test]
fn polynomial_action() {
    unsafe {
        let e = element("Sq2");
        let mut p = ptr::null_mut();
        assert_eq!(
            steenrod_poly_parse(cstr("t1^3").as_ptr(), &mut p),
            SteenrodStatus::Ok
        );
        let mut r = ptr::null_mut();
        assert_eq!(steenrod_poly_act(e, p, &mut r), SteenrodStatus::Ok);
        let mut s = ptr::null_mut();
        steenrod_poly_to_string(r, &mut s);
        assert_eq!(take(s), "t1^5");
        steenrod_poly_free(r);
        steenrod_poly_free(p);
        steenrod_element_free(e);
    }
}

#[test]
fn modules() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(
            steenrod_module_builtin(cstr("susp(cp2)").as_ptr(), &mut m),
            SteenrodStatus::Ok
        );
        let mut rank = 99;
        assert_eq!(
            steenrod_module_sq_rank(m, 2, 3, &mut rank),
            SteenrodStatus::Ok
        );
        assert_eq!(rank, 1);
        let (mut passed, mut failures) = (false, 99);
        assert_eq!(
            steenrod_module_verify(m, 8, &mut passed, &mut failures),
            SteenrodStatus::Ok
        );
        assert!(passed);
        assert_eq!(failures, 0);
        steenrod_module_free(m);

        let json = steenrod::modules::corrupted_real_proj(4).to_json();
        assert_eq!(
            steenrod_module_from_json(cstr(&json).as_ptr(), &mut m),
            SteenrodStatus::Ok
        );
        assert_eq!(
            steenrod_module_verify(m, 8, &mut passed, ptr::null_mut()),
            SteenrodStatus::Ok
        );
        assert!(!passed);
        steenrod_module_free(m);
    }
}

#[test]
fn counts_and_report() {
    assert_eq!(steenrod_basis_size(6), 3);
    for d in 0..=6 {
        assert_eq!(steenrod_faithful_rank(d), steenrod_basis_size(d));
    }
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(steenrod_distinguish_pi4_json(&mut s), SteenrodStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["distinct"], true);
        assert_eq!(v["suspended_cp2"]["rank"], 1);
    }
}

#[test]
fn header_is_valid_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include").join("steenrod.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in [
        "steenrod_element_parse",
        "steenrod_module_verify",
        "steenrod_last_error",
        "typedef struct SteenrodElement SteenrodElement",
    ] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let probe = tempfile::Builder::new().suffix(".c").tempfile().unwrap();
    std::fs::write(
        probe.path(),
        "#include \"steenrod.h\"\nint main(void) {\n  SteenrodElement *e = 0;\n  \
         SteenrodStatus s = steenrod_element_parse(\"Sq2 Sq3\", &e);\n  steenrod_element_free(e);\n  \
         return s == STEENROD_STATUS_OK ? 0 : 1;\n}\n",
    )
    .unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(dir.join("include"))
        .arg(probe.path())
        .status();
    match status {
        Ok(s) => assert!(s.success(), "header does not compile"),
        Err(_) => eprintln!("cc not available; skipping compile check"),
    }
}
