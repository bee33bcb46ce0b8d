//! Per-thread counter of exact multiplications and divisions.
//!
//! Every `Rational * Rational` and `Rational / Rational` bumps the counter,
//! so the count propagates through polynomials, rational functions and
//! quadratic extensions for free. The counter is observational only: it
//! never changes a result, and being thread-local it is safe under
//! concurrent evaluation.

use std::cell::Cell;

thread_local! {
    static MUL_COUNT: Cell<u64> = const { Cell::new(0) };
}

pub(crate) fn record_mul() {
    MUL_COUNT.with(|c| c.set(c.get().wrapping_add(1)));
}

/// Number of rational multiplications/divisions performed by this thread
/// since the last [`reset`].
pub fn multiplications() -> u64 {
    MUL_COUNT.with(|c| c.get())
}

/// Reset this thread's counter to zero.
pub fn reset() {
    MUL_COUNT.with(|c| c.set(0));
}

/// Run `f` and return its result together with the number of rational
/// multiplications it performed on this thread.
pub fn counted<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let before = multiplications();
    let out = f();
    (out, multiplications() - before)
}
