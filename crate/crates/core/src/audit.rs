//! Per-thread counts of structural checks performed: `d ∘ d = 0` on every
//! constructed complex and rank-nullity on every kernel.

use std::cell::Cell;

thread_local! {
    static COMPLEXES: Cell<u64> = const { Cell::new(0) };
    static KERNELS: Cell<u64> = const { Cell::new(0) };
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Audit {
    /// Complexes whose consecutive differentials were checked to compose to zero.
    pub complexes: u64,
    /// Kernel bases checked against rank-nullity.
    pub kernels: u64,
}

impl Audit {
    pub fn since(self, earlier: Audit) -> Audit {
        Audit { complexes: self.complexes - earlier.complexes, kernels: self.kernels - earlier.kernels }
    }
}

/// Counts so far on the current thread.
pub fn snapshot() -> Audit {
    Audit { complexes: COMPLEXES.with(Cell::get), kernels: KERNELS.with(Cell::get) }
}

pub(crate) fn complex_checked() {
    COMPLEXES.with(|c| c.set(c.get() + 1));
}

pub(crate) fn kernel_checked() {
    KERNELS.with(|c| c.set(c.get() + 1));
}
