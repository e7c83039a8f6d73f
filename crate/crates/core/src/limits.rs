//! Process-wide resource caps. The defaults comfortably cover every example
//! shipped with the crate; front ends may lower or raise them.

use core::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_COLUMNS: usize = 100_000;
pub const DEFAULT_MAX_GROEBNER_STEPS: usize = 200_000;

static MAX_COLUMNS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_COLUMNS);
static MAX_GROEBNER_STEPS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_GROEBNER_STEPS);

/// Caps the number of monomial coordinates of any linear-algebra problem.
pub fn set_max_columns(n: usize) {
    MAX_COLUMNS.store(n, Ordering::Relaxed);
}

/// Caps the number of pair reductions in one Buchberger run.
pub fn set_max_groebner_steps(n: usize) {
    MAX_GROEBNER_STEPS.store(n, Ordering::Relaxed);
}

pub fn max_columns() -> usize {
    MAX_COLUMNS.load(Ordering::Relaxed)
}

pub fn max_groebner_steps() -> usize {
    MAX_GROEBNER_STEPS.load(Ordering::Relaxed)
}

pub(crate) fn check_columns(requested: usize) -> Result<()> {
    let limit = max_columns();
    if requested > limit {
        return Err(Error::Budget { what: "matrix columns", limit, requested });
    }
    Ok(())
}
