//! A fixed, deterministic set of Eulerian posets for sweeping invariants.
//!
//! Entries are construction expressions so any failure can be reproduced
//! from the command line.

use crate::construct::IntervalSystem;
use crate::error::Result;
use crate::expr::{build, Expr};
use crate::poset::RankedPoset;

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub poset: RankedPoset,
}

fn dp_expr(sys: &IntervalSystem, copies: u64) -> String {
    Expr::Dp {
        n: sys.n,
        intervals: sys.intervals.clone(),
        copies,
    }
    .to_string()
}

/// Base expressions: Boolean algebras up to rank 5, doubled chains, every
/// doubled interval-system poset with `n <= 6`, at most two intervals and
/// two copies, and the rank-7 two-part glue at `N = 2`.
pub fn base_expressions() -> Vec<String> {
    let mut out: Vec<String> = (2..=5).map(|k| format!("boolean({k})")).collect();
    out.extend((2..=7).map(|r| format!("double(chain({r}))")));
    for n in 1..=6 {
        for sys in IntervalSystem::enumerate_even(n, 2) {
            if !sys.is_empty() {
                out.push(dp_expr(&sys, 2));
            }
        }
    }
    out.push("lemma3(2)".into());
    out
}

/// Ten pairs used for join checks.
pub fn join_pairs() -> Vec<(String, String)> {
    [
        ("boolean(2)", "boolean(3)"),
        ("boolean(3)", "boolean(3)"),
        ("boolean(3)", "double(chain(4))"),
        ("double(chain(3))", "boolean(4)"),
        ("dp(4,[[1,4]],2)", "boolean(2)"),
        ("boolean(2)", "dp(4,[[1,4]],2)"),
        ("dp(2,[[1,2]],2)", "dp(2,[[1,2]],3)"),
        ("boolean(4)", "dp(4,[[1,2],[3,4]],2)"),
        ("double(chain(4))", "dp(6,[[1,4],[3,6]],2)"),
        ("boolean(3)", "lemma3(2)"),
    ]
    .into_iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect()
}

/// Base expressions, joins of the join pairs, and duals of every join and of
/// the asymmetric base entries.
pub fn expressions() -> Vec<String> {
    let mut out = base_expressions();
    let joins: Vec<String> = join_pairs()
        .into_iter()
        .map(|(a, b)| format!("join({a},{b})"))
        .collect();
    let duals: Vec<String> = out
        .iter()
        .filter(|e| e.starts_with("dp(") || e.starts_with("lemma3"))
        .chain(&joins)
        .map(|e| format!("dual({e})"))
        .collect();
    out.extend(joins);
    out.extend(duals);
    out
}

pub fn eulerian_corpus() -> Result<Vec<Entry>> {
    expressions()
        .into_iter()
        .map(|name| {
            let poset = build(&name)?;
            Ok(Entry { name, poset })
        })
        .collect()
}

/// Corpus entries with at most `max_elements` elements.
pub fn small_corpus(max_elements: usize) -> Result<Vec<Entry>> {
    Ok(eulerian_corpus()?
        .into_iter()
        .filter(|e| e.poset.element_count() <= max_elements)
        .collect())
}
