use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use symcoh_ffi::*;

fn last_error() -> String {
    let p = symcoh_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn group(kind: &str, n: usize) -> *mut SymcohGroup {
    let kind = CString::new(kind).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(symcoh_group_builtin(kind.as_ptr(), n, &mut g), SymcohStatus::Ok);
    g
}

unsafe fn factors(m: *const SymcohModule, n: usize, symmetric: bool) -> Vec<i64> {
    let mut c = ptr::null_mut();
    assert_eq!(symcoh_cohomology(m, n, symmetric, &mut c), SymcohStatus::Ok);
    let mut buf = vec![0i64; symcoh_cohomology_factor_count(c)];
    assert_eq!(symcoh_cohomology_factors(c, buf.as_mut_ptr(), buf.len()), SymcohStatus::Ok);
    symcoh_cohomology_free(c);
    buf
}

#[test]
fn cyclic_group_cohomology() {
    unsafe {
        let g = group("cyclic", 4);
        assert_eq!(symcoh_group_order(g), 4);
        let mut m = ptr::null_mut();
        assert_eq!(symcoh_module_new(g, [0i64].as_ptr(), 1, ptr::null(), ptr::null(), 0, &mut m), SymcohStatus::Ok);
        assert_eq!(factors(m, 2, false), vec![4]);
        assert_eq!(factors(m, 1, false), Vec::<i64>::new());
        symcoh_module_free(m);
        symcoh_group_free(g);
    }
}

#[test]
fn sign_module_and_kernel() {
    unsafe {
        let g = group("cyclic", 4);
        let mut m = ptr::null_mut();
        let st = symcoh_module_new(g, [0i64].as_ptr(), 1, [1usize].as_ptr(), [-1i64].as_ptr(), 1, &mut m);
        assert_eq!(st, SymcohStatus::Ok);
        let mut buf = [0i64; 4];
        let mut count = 99;
        assert_eq!(symcoh_natural_map_kernel(m, 3, buf.as_mut_ptr(), 4, &mut count), SymcohStatus::Ok);
        assert_eq!(&buf[..count], &[2]);
        assert_eq!(symcoh_natural_map_kernel(m, 3, buf.as_mut_ptr(), 0, &mut count), SymcohStatus::Overflow);
        symcoh_module_free(m);
        symcoh_group_free(g);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        let table = [0usize, 1, 1, 1];
        assert_eq!(symcoh_group_from_table(table.as_ptr(), 2, &mut g), SymcohStatus::InvalidGroup);
        assert!(g.is_null());
        assert!(!last_error().is_empty());

        let bad = CString::new("nonsense").unwrap();
        assert_ne!(symcoh_group_builtin(bad.as_ptr(), 3, &mut g), SymcohStatus::Ok);
        assert_eq!(symcoh_group_builtin(ptr::null(), 3, &mut g), SymcohStatus::NullPointer);

        let g = group("cyclic", 3);
        let mut m = ptr::null_mut();
        // x -> -x is not an action of Z3
        let st = symcoh_module_new(g, [0i64].as_ptr(), 1, [1usize].as_ptr(), [-1i64].as_ptr(), 1, &mut m);
        assert_eq!(st, SymcohStatus::InvalidModule);
        assert_eq!(symcoh_module_new(g, [-2i64].as_ptr(), 1, ptr::null(), ptr::null(), 0, &mut m), SymcohStatus::InvalidModule);
        assert_eq!(symcoh_module_new(g, [0i64].as_ptr(), 1, ptr::null(), ptr::null(), 0, &mut m), SymcohStatus::Ok);
        let mut c = ptr::null_mut();
        assert_eq!(symcoh_cohomology(m, 4, false, &mut c), SymcohStatus::ResourceGuard);
        assert!(c.is_null());
        symcoh_module_free(m);
        symcoh_group_free(g);
        symcoh_group_free(ptr::null_mut());
    }
}

#[test]
fn catalog_report() {
    let text = CString::new(
        r#"{"groups": {"Z2": {"builtin": "cyclic", "n": 2}},
            "modules": {"F2": {"relations": [2]}},
            "jobs": [{"group": "Z2", "module": "F2", "degrees": [1, 2]}]}"#,
    )
    .unwrap();
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(symcoh_verify_catalog_json(text.as_ptr(), 7, &mut out), SymcohStatus::Ok);
        let json = CStr::from_ptr(out).to_str().unwrap().to_owned();
        symcoh_string_free(out);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["seed"], 7);
        assert_eq!(v["instances"].as_array().unwrap().len(), 2);

        let bad = CString::new("{").unwrap();
        assert_eq!(symcoh_verify_catalog_json(bad.as_ptr(), 0, &mut out), SymcohStatus::CatalogError);
    }
}

fn target_dir() -> PathBuf {
    // tests/../../../target/<profile>
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_smoke_test() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header_dir = manifest.join("include");
    let lib = target_dir().join("libsymcoh_ffi.a");
    if !header_dir.join("symcoh.h").exists() || !lib.exists() {
        eprintln!("skipping: header or static library not built");
        return;
    }
    let Ok(cc) = which_cc() else {
        eprintln!("skipping: no C compiler");
        return;
    };
    let out = tempfile::tempdir().unwrap();
    let exe = out.path().join("smoke");
    let status = Command::new(cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(&header_dir)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "smoke test exited with {:?}: {}", run.status, String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}

fn which_cc() -> Result<String, ()> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    match Command::new(&cc).arg("--version").output() {
        Ok(o) if o.status.success() => Ok(cc),
        _ => Err(()),
    }
}
