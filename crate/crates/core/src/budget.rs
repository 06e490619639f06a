//! Process-wide resource budgets guarding construction blow-up.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_ELEMENTS: usize = 1_000_000;
pub const DEFAULT_MAX_INTERVALS: usize = 20;

static MAX_ELEMENTS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_ELEMENTS);
static MAX_INTERVALS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_INTERVALS);

/// Upper bound on the number of elements any constructed poset may have.
pub fn max_elements() -> usize {
    MAX_ELEMENTS.load(Ordering::Relaxed)
}

pub fn set_max_elements(limit: usize) {
    MAX_ELEMENTS.store(limit, Ordering::Relaxed);
}

/// Upper bound on the number of intervals enumerated by the limit L-vector
/// formula, which visits every subset of the system.
pub fn max_intervals() -> usize {
    MAX_INTERVALS.load(Ordering::Relaxed)
}

pub fn set_max_intervals(limit: usize) {
    MAX_INTERVALS.store(limit, Ordering::Relaxed);
}

pub(crate) fn check_elements(requested: u128) -> Result<()> {
    let limit = max_elements() as u128;
    if requested > limit {
        return Err(Error::ResourceLimit {
            what: "poset elements",
            requested,
            limit,
        });
    }
    Ok(())
}

pub(crate) fn check_intervals(requested: usize) -> Result<()> {
    let limit = max_intervals();
    if requested > limit {
        return Err(Error::ResourceLimit {
            what: "interval system size",
            requested: requested as u128,
            limit: limit as u128,
        });
    }
    Ok(())
}
