use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use paley_ffi::*;

fn graph(n: u64) -> *mut PaleyGraph {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { paley_graph_new(n, &mut g) }, PaleyStatus::Ok);
    assert!(!g.is_null());
    g
}

#[test]
fn modulus_info() {
    let mut info = PaleyModulusInfo::default();
    assert_eq!(unsafe { paley_check_admissible(2873, &mut info) }, PaleyStatus::Ok);
    assert_eq!(info, PaleyModulusInfo { n: 2873, s: 0, k: 2, phi: 156 * 16, square_count: 156 * 16 / 4 });

    assert_eq!(unsafe { paley_check_admissible(21, &mut info) }, PaleyStatus::NotAdmissible);
    let msg = unsafe { CStr::from_ptr(paley_last_error()) }.to_string_lossy().into_owned();
    assert!(msg.contains("prime factor 3"), "{msg}");
}

#[test]
fn graph_handle_lifecycle() {
    let g = graph(13);
    unsafe {
        assert_eq!(paley_graph_order(g), 13);
        assert_eq!(paley_graph_degree(g), 6);
        assert!(paley_graph_is_adjacent(g, 0, 4));
        assert!(!paley_graph_is_adjacent(g, 0, 2));
        assert!(!paley_graph_is_adjacent(g, 0, 99));
        paley_graph_free(g);

        assert_eq!(paley_graph_order(ptr::null()), 0);
        paley_graph_free(ptr::null_mut());

        let mut out = ptr::null_mut();
        assert_eq!(paley_graph_new(12, &mut out), PaleyStatus::NotAdmissible);
        assert!(out.is_null());
        assert_eq!(paley_graph_new(13, ptr::null_mut()), PaleyStatus::NullPointer);
    }
}

#[test]
fn counts_by_every_method() {
    let g = graph(1073);
    for (order, expected) in [(3, 2163168u64), (4, 2703960)] {
        for method in [PaleyMethod::Bruteforce, PaleyMethod::Reduction, PaleyMethod::Formula] {
            let mut v = 0;
            assert_eq!(unsafe { paley_count_cliques(g, order, method, &mut v) }, PaleyStatus::Ok);
            assert_eq!(v, expected, "order {order}, {method:?}");
        }
    }
    unsafe {
        let mut status = PaleyStatus::Panic;
        let s = paley_count_cliques_decimal(g, 4, PaleyMethod::Formula, &mut status);
        assert_eq!(status, PaleyStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "2703960");
        paley_string_free(s);

        let mut v = 0;
        assert_eq!(paley_count_cliques(g, 5, PaleyMethod::Formula, &mut v), PaleyStatus::InvalidInput);
        assert_eq!(paley_count_cliques(ptr::null(), 3, PaleyMethod::Formula, &mut v), PaleyStatus::NullPointer);
        paley_graph_free(g);
    }
}

#[test]
fn overflow_and_refusal() {
    // 29 * 37 * 41 = 43993 is above the default 4-clique brute-force ceiling.
    let g = graph(29 * 37 * 41);
    unsafe {
        let mut v = 0;
        assert_eq!(paley_count_cliques(g, 4, PaleyMethod::Bruteforce, &mut v), PaleyStatus::CeilingExceeded);
        paley_graph_free(g);
    }
    // K3(G_{13^7}) = 2 * 13^19 does not fit in 64 bits.
    let g = graph(13u64.pow(7));
    unsafe {
        let mut v = 0;
        assert_eq!(paley_count_cliques(g, 3, PaleyMethod::Formula, &mut v), PaleyStatus::Overflow);
        let mut status = PaleyStatus::Panic;
        let s = paley_count_cliques_decimal(g, 3, PaleyMethod::Formula, &mut status);
        assert_eq!(status, PaleyStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), (2 * 13u128.pow(19)).to_string());
        paley_string_free(s);
        paley_graph_free(g);
    }
}

#[test]
fn jacobi_and_identity() {
    let (mut x, mut y) = (0i64, 0i64);
    assert_eq!(unsafe { paley_jacobi_sum(13, 3, &mut x, &mut y) }, PaleyStatus::Ok);
    assert_eq!((x, y.abs()), (-507, 338));
    let mut ok = false;
    assert_eq!(unsafe { paley_verify_xyreln(41, 2, &mut ok) }, PaleyStatus::Ok);
    assert!(ok);
    assert_eq!(unsafe { paley_jacobi_sum(7, 1, &mut x, &mut y) }, PaleyStatus::InvalidInput);
}

#[test]
fn zero_predicate() {
    let mut zero = false;
    assert_eq!(unsafe { paley_k4_is_zero(4913, &mut zero) }, PaleyStatus::Ok);
    assert!(zero);
    assert_eq!(unsafe { paley_k4_is_zero(841, &mut zero) }, PaleyStatus::Ok);
    assert!(!zero);
}

#[test]
fn edge_export() {
    let dir = std::env::temp_dir().join(format!("paley-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g5.txt");
    let c_path = CString::new(path.to_str().unwrap()).unwrap();
    let g = graph(5);
    unsafe {
        assert_eq!(paley_graph_write_edges(g, c_path.as_ptr()), PaleyStatus::Ok);
        paley_graph_free(g);
    }
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "0 1\n0 4\n1 2\n2 3\n3 4\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn header_compiles_as_c() {
    let header_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    assert!(header_dir.join("paley.h").exists());
    let src = std::env::temp_dir().join(format!("paley-header-{}.c", std::process::id()));
    std::fs::write(
        &src,
        "#include \"paley.h\"\n\
         int main(void) {\n\
           PaleyGraph *g = NULL;\n\
           PaleyModulusInfo info;\n\
           if (paley_check_admissible(169, &info) != PALEY_STATUS_OK) return 1;\n\
           if (paley_graph_new(169, &g) != PALEY_STATUS_OK) return 1;\n\
           uint64_t k3 = 0;\n\
           paley_count_cliques(g, 3, PALEY_METHOD_FORMULA, &k3);\n\
           paley_graph_free(g);\n\
           return k3 == 57122 ? 0 : 1;\n\
         }\n",
    )
    .unwrap();
    let Ok(status) = Command::new("cc").arg("-fsyntax-only").arg("-Wall").arg("-Werror").arg("-I").arg(&header_dir).arg(&src).status()
    else {
        eprintln!("no C compiler on PATH; skipping header syntax check");
        return;
    };
    std::fs::remove_file(&src).ok();
    assert!(status.success());
}
