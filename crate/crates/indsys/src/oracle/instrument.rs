use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use super::MembershipOracle;

/// Snapshot of the counters of an [`InstrumentedOracle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CallStats {
    pub full_membership_calls: u64,
    pub extension_predicate_calls: u64,
    pub wall_time: Duration,
}

/// Shared atomic counters. Increments are lock-free so concurrent queries
/// never lose updates; per-query ordering is not recorded.
#[derive(Debug, Default)]
pub struct CallCounters {
    full: AtomicU64,
    extension: AtomicU64,
    nanos: AtomicU64,
}

impl CallCounters {
    pub fn snapshot(&self) -> CallStats {
        CallStats {
            full_membership_calls: self.full.load(Ordering::Relaxed),
            extension_predicate_calls: self.extension.load(Ordering::Relaxed),
            wall_time: Duration::from_nanos(self.nanos.load(Ordering::Relaxed)),
        }
    }

    pub fn reset(&self) {
        self.full.store(0, Ordering::Relaxed);
        self.extension.store(0, Ordering::Relaxed);
        self.nanos.store(0, Ordering::Relaxed);
    }

    fn record(&self, counter: &AtomicU64, elapsed: Duration) {
        counter.fetch_add(1, Ordering::Relaxed);
        self.nanos
            .fetch_add(elapsed.as_nanos() as u64, Ordering::Relaxed);
    }
}

/// Wraps any oracle, counting full-membership and extension queries
/// separately without changing a single answer.
pub struct InstrumentedOracle {
    inner: Arc<dyn MembershipOracle>,
    counters: Arc<CallCounters>,
}

impl InstrumentedOracle {
    pub fn new(inner: Arc<dyn MembershipOracle>) -> Self {
        Self {
            inner,
            counters: Arc::new(CallCounters::default()),
        }
    }

    /// Handle to the shared counters; stays valid after the oracle is moved
    /// into an instance.
    pub fn counters(&self) -> Arc<CallCounters> {
        Arc::clone(&self.counters)
    }
}

impl MembershipOracle for InstrumentedOracle {
    fn element_count(&self) -> usize {
        self.inner.element_count()
    }

    fn is_feasible(&self, subset: &[usize]) -> bool {
        let start = Instant::now();
        let answer = self.inner.is_feasible(subset);
        self.counters.record(&self.counters.full, start.elapsed());
        answer
    }

    fn extension_feasible(&self, base: &[usize], extra: usize) -> bool {
        let start = Instant::now();
        let answer = self.inner.extension_feasible(base, extra);
        self.counters
            .record(&self.counters.extension, start.elapsed());
        answer
    }
}
