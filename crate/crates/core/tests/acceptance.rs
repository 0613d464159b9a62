//! Acceptance suite: the ten criteria at full bounds.
//!
//! Each criterion is its own test and prints one line
//! `criterion N (title): PASS|FAIL`, followed by the failing checks.
//! Run with `cargo test -p spin-nilhecke --test acceptance -- --nocapture`.

use spin_nilhecke::suites::{criterion, Profile};

const SEED: u64 = 20_240_601;

fn run(k: u32) {
    let c = criterion(k, Profile::Full, SEED).expect("suite runs");
    let verdict = if c.passed() { "PASS" } else { "FAIL" };
    let mut out = format!("criterion {k} ({}): {verdict}\n", c.title);
    for check in &c.checks {
        if !check.passed {
            let tag = if check.gating { "failed" } else { "reported" };
            out.push_str(&format!(
                "    {tag}: {} ({})\n",
                check.name, check.statement
            ));
            if let Some(ce) = &check.counterexample {
                let s = ce.to_string();
                let short: String = s.chars().take(400).collect();
                out.push_str(&format!("        {short}\n"));
            }
        }
    }
    print!("{out}");
    assert!(c.passed(), "criterion {k} failed");
}

#[test]
fn criterion_01_relation_suites() {
    run(1);
}

#[test]
fn criterion_02_top_constants() {
    run(2);
}

#[test]
fn criterion_03_schubert_bases() {
    run(3);
}

#[test]
fn criterion_04_symmetric_rings() {
    run(4);
}

#[test]
fn criterion_05_free_module_decomposition() {
    run(5);
}

#[test]
fn criterion_06_matrix_isomorphism() {
    run(6);
}

#[test]
fn criterion_07_dyadic_matrix_units() {
    run(7);
}

#[test]
fn criterion_08_graded_ranks() {
    run(8);
}

#[test]
fn criterion_09_center() {
    run(9);
}

#[test]
fn criterion_10_even_variant() {
    run(10);
}
