//! Exercises the C ABI from Rust and, when a C compiler is available, from C
//! through the generated header.

use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use hitclique_ffi::*;

fn last_error() -> String {
    let p = hc_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn product(k: usize, m: usize) -> *mut HcGraph {
    let cycle: Vec<usize> = (0..k).flat_map(|i| [i, (i + 1) % k]).collect();
    let clique: Vec<usize> = (0..m)
        .flat_map(|a| (a + 1..m).flat_map(move |b| [a, b]))
        .collect();
    let (mut c, mut q, mut p) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    assert_eq!(hc_graph_new(k, cycle.as_ptr(), k, &mut c), HcStatus::Ok);
    assert_eq!(
        hc_graph_new(m, clique.as_ptr(), clique.len() / 2, &mut q),
        HcStatus::Ok
    );
    assert_eq!(hc_graph_strong_product(c, q, &mut p), HcStatus::Ok);
    hc_graph_free(c);
    hc_graph_free(q);
    p
}

#[test]
fn odd_product_certificate() {
    unsafe {
        let g = product(7, 2);
        let mut omega = 0;
        assert_eq!(hc_graph_clique_number(g, &mut omega), HcStatus::Ok);
        assert_eq!(omega, 4);
        let mut cert = ptr::null_mut();
        assert_eq!(hc_solve(g, &mut cert), HcStatus::Ok);
        let mut kind = HcCertificateKind::StableSet;
        assert_eq!(hc_certificate_kind(cert, &mut kind), HcStatus::Ok);
        assert_eq!(kind, HcCertificateKind::OddHoleProduct);
        let (mut k, mut m) = (0, 0);
        assert_eq!(hc_certificate_hole(cert, &mut k, &mut m), HcStatus::Ok);
        assert_eq!((k, m), (7, 2));
        let mut len = 0;
        assert_eq!(
            hc_certificate_vertices(cert, ptr::null_mut(), 0, &mut len),
            HcStatus::BufferTooSmall
        );
        let mut buf = vec![0usize; len];
        assert_eq!(
            hc_certificate_vertices(cert, buf.as_mut_ptr(), len, &mut len),
            HcStatus::Ok
        );
        assert_eq!(buf, (0..14).collect::<Vec<_>>());
        hc_certificate_free(cert);
        hc_graph_free(g);
    }
}

#[test]
fn stable_set_certificate_round_trips_through_json() {
    unsafe {
        let g = product(4, 2);
        let mut cert = ptr::null_mut();
        assert_eq!(hc_solve(g, &mut cert), HcStatus::Ok);
        let mut buf = [0usize; 8];
        let mut len = 0;
        assert_eq!(
            hc_certificate_vertices(cert, buf.as_mut_ptr(), 8, &mut len),
            HcStatus::Ok
        );
        assert_eq!(&buf[..len], &[0, 4]);
        let (mut k, mut m) = (0, 0);
        assert_eq!(
            hc_certificate_hole(cert, &mut k, &mut m),
            HcStatus::InvalidArgument
        );

        let mut json = ptr::null_mut();
        assert_eq!(hc_certificate_to_json(cert, &mut json), HcStatus::Ok);
        let mut valid = false;
        assert_eq!(hc_verify_json(g, json, &mut valid), HcStatus::Ok);
        assert!(valid);
        hc_string_free(json);

        let tampered = CString::new(r#"{"result":"stable_set","vertices":[0,1]}"#).unwrap();
        assert_eq!(
            hc_verify_json(g, tampered.as_ptr(), &mut valid),
            HcStatus::Ok
        );
        assert!(!valid);
        hc_certificate_free(cert);
        hc_graph_free(g);
    }
}

#[test]
fn errors_and_nulls() {
    unsafe {
        let mut g = ptr::null_mut();
        let loop_edge = [1usize, 1];
        assert_eq!(
            hc_graph_new(3, loop_edge.as_ptr(), 1, &mut g),
            HcStatus::InvalidArgument
        );
        assert!(g.is_null());
        assert!(!last_error().is_empty());

        let text = CString::new("not a graph").unwrap();
        assert_eq!(
            hc_graph_parse(text.as_ptr(), HcFormat::Graph6, &mut g),
            HcStatus::Parse
        );
        assert_eq!(
            hc_graph_parse(ptr::null(), HcFormat::Json, &mut g),
            HcStatus::NullPointer
        );
        assert_eq!(
            hc_graph_new(2, ptr::null(), 1, &mut g),
            HcStatus::NullPointer
        );
        assert_eq!(
            hc_solve(ptr::null(), ptr::null_mut()),
            HcStatus::NullPointer
        );
        assert_eq!(hc_graph_vertex_count(ptr::null()), 0);
        hc_graph_free(ptr::null_mut());
        hc_certificate_free(ptr::null_mut());
        hc_string_free(ptr::null_mut());

        // Petersen: ω = 2, Δ = 3, below the bound.
        let text = CString::new("IheA@GUAo").unwrap();
        assert_eq!(
            hc_graph_parse(text.as_ptr(), HcFormat::Graph6, &mut g),
            HcStatus::Ok
        );
        let mut cert = ptr::null_mut();
        assert_eq!(hc_solve(g, &mut cert), HcStatus::Precondition);
        assert!(last_error().contains("two-thirds"));
        let mut out = ptr::null_mut();
        assert_eq!(hc_graph_write(g, HcFormat::Graph6, &mut out), HcStatus::Ok);
        assert_eq!(CStr::from_ptr(out).to_str().unwrap(), "IheA@GUAo\n");
        hc_string_free(out);
        hc_graph_free(g);
    }
}

#[test]
fn counterexample_graph() {
    unsafe {
        let mut g = ptr::null_mut();
        let mut exists = true;
        assert_eq!(
            hc_counterexample(3, 4, 3, 5, &mut g, &mut exists),
            HcStatus::Ok
        );
        assert!(!exists);
        assert_eq!(hc_graph_vertex_count(g), 32);
        assert_eq!(hc_graph_max_degree(g), 26);
        hc_graph_free(g);
        assert_eq!(
            hc_counterexample(2, 3, 1, 2, &mut g, ptr::null_mut()),
            HcStatus::InvalidArgument
        );
        assert_eq!(
            hc_counterexample(3, 4, 1, 0, &mut g, ptr::null_mut()),
            HcStatus::InvalidArgument
        );
    }
}

#[test]
fn c_program_links_against_static_library() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".to_string());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler ({cc}); skipping C link check");
        return;
    }
    // Test binaries live in target/<profile>/deps. `cargo test` leaves the
    // static library there; `cargo build` also copies it one level up.
    let exe = std::env::current_exe().unwrap();
    let deps = exe.parent().unwrap();
    let lib = [deps, deps.parent().unwrap()]
        .iter()
        .map(|d| d.join("libhitclique_ffi.a"))
        .find(|p| p.exists())
        .unwrap_or_else(|| panic!("libhitclique_ffi.a not found near {}", deps.display()));

    let out_dir = tempfile::tempdir().unwrap();
    let bin = out_dir.path().join("smoke");
    let status = Command::new(&cc)
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&bin).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
