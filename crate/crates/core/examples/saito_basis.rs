//! The deformed polynomials for a given m, their Saito determinant constant,
//! and membership of the derivations in the logarithmic module.
//!
//! Usage: `cargo run --example saito_basis -- [M]` (default 2).

use catb2::catalan::{f_integral, f_tilde, membership_check, saito_check, theorem_check};
use catb2::FamilyIndex;

fn main() {
    let m: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    for i in 0..2 {
        let idx = FamilyIndex::new(i, m);
        let f = f_tilde(idx);
        println!(
            "f~_{i}^{m} (degree {}):\n  {f}",
            f.total_degree().unwrap_or(0)
        );
        assert_eq!(f.leading_form(), f_integral(idx).leading_form());
    }

    let rep = saito_check(m);
    println!(
        "saito m={m}: passed={} C={}",
        rep.passed,
        rep.value("C").unwrap()
    );

    for i in 0..=3 {
        let mem = membership_check(i, m);
        let thm = theorem_check(i, m);
        println!(
            "i={i}: membership {}, theorem {}",
            verdict(mem.passed),
            verdict(thm.passed)
        );
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
