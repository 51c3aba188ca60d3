//! Acceptance gate: one test per criterion, each printing a single
//! verdict line.

use splinedim::goldens;

fn check(id: usize) {
    let r = goldens::by_id(id);
    println!(
        "criterion {:2} {:<13} {} | {}",
        r.id,
        r.name,
        if r.passed { "PASS" } else { "FAIL" },
        r.detail
    );
    assert!(r.passed, "criterion {} ({}) failed: {}", r.id, r.name, r.detail);
}

#[test]
fn criterion_01_th_table() {
    check(1);
}

#[test]
fn criterion_02_planar_main() {
    check(2);
}

#[test]
fn criterion_03_octahedron() {
    check(3);
}

#[test]
fn criterion_04_star() {
    check(4);
}

#[test]
fn criterion_05_schumaker() {
    check(5);
}

#[test]
fn criterion_06_plf() {
    check(6);
}

#[test]
fn criterion_07_top_homology() {
    check(7);
}

#[test]
fn criterion_08_euler() {
    check(8);
}

#[test]
fn criterion_09_hpdim() {
    check(9);
}

#[test]
fn criterion_10_fatpoints() {
    check(10);
}
