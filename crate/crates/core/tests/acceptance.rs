//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use eulerian::flag::{flag_h, inv_subset_sums, subset_sums};
use eulerian::verify::{run_suite, SuiteReport, SUITES};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

/// Runtime ceilings per criterion, where one is stated.
fn ceiling(criterion: usize) -> Option<Duration> {
    match criterion {
        1 => Some(Duration::from_secs(1)),
        2 => Some(Duration::from_secs(10)),
        3 | 4 => Some(Duration::from_secs(60)),
        _ => None,
    }
}

/// f -> h -> f and h -> f -> h on random integer tables.
fn random_round_trips() -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases: 200,
        failure_persistence: None,
        ..Config::default()
    });
    let tables = (0usize..=8).prop_flat_map(|n| {
        prop::collection::vec(-1_000_000i64..1_000_000, 1 << n).prop_map(move |t| (n, t))
    });
    runner
        .run(&tables, |(_, table)| {
            let f: Vec<BigInt> = table.iter().map(|&x| BigInt::from(x)).collect();
            let mut h = f.clone();
            inv_subset_sums(&mut h);
            let mut back = h.clone();
            subset_sums(&mut back);
            prop_assert_eq!(&back, &f);
            inv_subset_sums(&mut back);
            prop_assert_eq!(back, h);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn summary(r: &SuiteReport) -> String {
    let failed: Vec<_> = r.failures().collect();
    match failed.first() {
        None => format!(
            "{} checks",
            r.rows.iter().filter(|x| !x.informational).count()
        ),
        Some(first) => format!(
            "{} of {} checks failed; first: {}: expected {}, got {}",
            failed.len(),
            r.rows.iter().filter(|x| !x.informational).count(),
            first.label,
            first.expected,
            first.actual
        ),
    }
}

fn main() {
    // The libtest harness flags (e.g. from `cargo test -- --nocapture`) are
    // accepted and ignored.
    let mut failures = 0;
    let round_trip_random = random_round_trips();
    for &name in SUITES {
        let start = Instant::now();
        let outcome = run_suite(name);
        let elapsed = start.elapsed();
        let (mut pass, mut detail) = match outcome {
            Ok(reports) => {
                let r = &reports[0];
                let mut d = summary(r);
                for note in &r.notes {
                    d += &format!("\n      note: {note}");
                }
                (r.pass(), d)
            }
            Err(e) => (false, format!("error: {e}")),
        };
        let criterion = SUITES.iter().position(|s| *s == name).unwrap() + 1;
        if let Some(limit) = ceiling(criterion) {
            if elapsed > limit {
                pass = false;
                detail += &format!("; took {elapsed:?}, limit {limit:?}");
            }
        }
        if name == "round-trip" {
            match &round_trip_random {
                Ok(()) => detail += "; 200 random tables round-trip",
                Err(e) => {
                    pass = false;
                    detail += &format!("; random table round trip failed: {e}");
                }
            }
            // Spot check against a hand-computed table: boolean(3) has
            // f = (1, 3, 3, 6), h = (1, 2, 2, 1).
            let f = eulerian::flag_vector(&eulerian::boolean(3).unwrap()).unwrap();
            let h: Vec<String> = flag_h(&f).entries().iter().map(|x| x.to_string()).collect();
            if h != ["1", "2", "2", "1"] {
                pass = false;
                detail += &format!("; boolean(3) h-vector {h:?}");
            }
        }
        if !pass {
            failures += 1;
        }
        println!(
            "criterion {criterion:>2} {name:<20} {} ({:.0?}) {detail}",
            if pass { "PASS" } else { "FAIL" },
            elapsed
        );
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        SUITES.len() - failures
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
