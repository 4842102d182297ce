use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use gallai_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(gallai_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    gallai_string_free(s);
    out
}

unsafe fn from_graph6(text: &str) -> *mut GallaiGraphHandle {
    let c = CString::new(text).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(
        gallai_graph_from_graph6(c.as_ptr(), &mut h),
        GallaiStatus::Ok
    );
    h
}

#[test]
fn graph_lifecycle() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(gallai_build_h(5, &mut h), GallaiStatus::Ok);
        let (mut v, mut e) = (0, 0);
        assert_eq!(gallai_graph_vertex_count(h, &mut v), GallaiStatus::Ok);
        assert_eq!(gallai_graph_edge_count(h, &mut e), GallaiStatus::Ok);
        assert_eq!((v, e), (15, 30));

        let mut s = ptr::null_mut();
        assert_eq!(gallai_graph_to_graph6(h, &mut s), GallaiStatus::Ok);
        let text = take(s);
        let again = from_graph6(&text);
        let mut s2 = ptr::null_mut();
        assert_eq!(gallai_graph_to_graph6(again, &mut s2), GallaiStatus::Ok);
        assert_eq!(take(s2), text);

        let mut r = ptr::null_mut();
        assert_eq!(gallai_replicate(h, 0b101, &mut r), GallaiStatus::Ok);
        assert_eq!(gallai_graph_vertex_count(r, &mut v), GallaiStatus::Ok);
        assert_eq!(v, 17);

        gallai_graph_free(r);
        gallai_graph_free(again);
        gallai_graph_free(h);
        gallai_graph_free(ptr::null_mut());
        gallai_string_free(ptr::null_mut());
    }
}

#[test]
fn colouring_queries() {
    unsafe {
        let c5 = from_graph6("Dhc");
        let mut chi = 0;
        assert_eq!(gallai_chromatic_number(c5, &mut chi), GallaiStatus::Ok);
        assert_eq!(chi, 3);
        let mut ok = true;
        assert_eq!(gallai_is_k_colorable(c5, 2, &mut ok), GallaiStatus::Ok);
        assert!(!ok);

        let mut s = ptr::null_mut();
        assert_eq!(
            gallai_fractional_chromatic_number(c5, &mut s),
            GallaiStatus::Ok
        );
        assert_eq!(take(s), "5/2");

        assert_eq!(gallai_criticality(c5, 3, true, &mut s), GallaiStatus::Ok);
        let report: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(report["is_vertex_critical"], true);
        assert_eq!(report["is_edge_critical"], true);
        gallai_graph_free(c5);
    }
}

#[test]
fn sequences_and_theorem() {
    unsafe {
        let (mut good, mut rev) = (false, false);
        let sigma = CString::new("0+0+").unwrap();
        assert_eq!(
            gallai_classify_sequence(sigma.as_ptr(), &mut good, &mut rev),
            GallaiStatus::Ok
        );
        assert!(rev);

        let mut s = ptr::null_mut();
        let mut pass = false;
        assert_eq!(
            gallai_verify_theorem(4, GallaiMode::Both, 3, &mut s, &mut pass),
            GallaiStatus::Ok
        );
        assert!(pass);
        let report: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(report["subsets_checked"], 4096);
        assert_eq!(report["disagreements"], 0);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut h = ptr::null_mut();
        let bad = CString::new("zz").unwrap();
        assert_eq!(
            gallai_graph_from_graph6(bad.as_ptr(), &mut h),
            GallaiStatus::Parse
        );
        assert!(h.is_null());
        assert!(last_error().contains("graph6"), "{}", last_error());

        assert_eq!(gallai_build_h(3, &mut h), GallaiStatus::InvalidArgument);
        assert_eq!(
            gallai_build_h(4, ptr::null_mut()),
            GallaiStatus::NullPointer
        );
        let mut s = ptr::null_mut();
        let mut pass = false;
        assert_eq!(
            gallai_verify_theorem(7, GallaiMode::Constructive, 0, &mut s, &mut pass),
            GallaiStatus::CapExceeded
        );
        assert!(s.is_null());

        let sigma = CString::new("+x").unwrap();
        let (mut g, mut r) = (false, false);
        assert_eq!(
            gallai_classify_sequence(sigma.as_ptr(), &mut g, &mut r),
            GallaiStatus::Parse
        );
        assert_eq!(
            gallai_classify_sequence(ptr::null(), &mut g, &mut r),
            GallaiStatus::NullPointer
        );

        let k3 = from_graph6("Bw");
        assert_eq!(
            gallai_replicate(k3, 1 << 5, &mut h),
            GallaiStatus::InvalidArgument
        );
        let mut chi = 0;
        assert_eq!(gallai_chromatic_number(k3, &mut chi), GallaiStatus::Ok);
        assert_eq!(last_error(), "");
        gallai_graph_free(k3);
    }
}

fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_generated_header() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = artifact_dir().join("libgallai_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let out = Path::new(env!("CARGO_TARGET_TMPDIR")).join("gallai_smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}
