//! Wall-clock budget for the exact search. The clock is sampled on the
//! first node and then once every 128, so the hot path stays syscall-free.

use edgesum_core::solver::Budget;
use std::time::{Duration, Instant};

/// Stops the search once a deadline passes. A zero-millisecond budget trips
/// on the very first node, which still returns the seeded incumbent.
#[derive(Debug, Clone, Copy)]
pub struct WallClock {
    deadline: Instant,
}

impl WallClock {
    pub fn from_ms(ms: u64) -> WallClock {
        // Clamped far above any real invocation so the addition cannot wrap.
        let capped = Duration::from_millis(ms.min(1 << 40));
        WallClock {
            deadline: Instant::now() + capped,
        }
    }
}

impl Budget for WallClock {
    fn exhausted(&mut self, nodes: u64) -> bool {
        nodes % 128 == 1 && Instant::now() >= self.deadline
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use edgesum_core::solver::exact_sum;
    use edgesum_core::Graph;

    #[test]
    fn zero_budget_returns_a_flagged_incumbent() {
        let g = Graph::petersen();
        let res = exact_sum(&g, &mut WallClock::from_ms(0));
        assert!(!res.optimal);
        assert!(res.sum >= 33);
    }

    #[test]
    fn generous_budget_completes() {
        let g = Graph::complete(5);
        let res = exact_sum(&g, &mut WallClock::from_ms(600_000));
        assert!(res.optimal);
        assert_eq!(res.sum, 30);
    }
}
