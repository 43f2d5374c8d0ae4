use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PeriodDetection {
    Found {
        n0: usize,
        period: usize,
    },
    NoPeriod,
    /// Nothing found, but the window is shorter than `3 * max_period`.
    Inconclusive,
}

fn holds_from(seq: &[u64], n0: usize, period: usize) -> bool {
    (n0..seq.len().saturating_sub(period)).all(|n| seq[n] == seq[n + period])
}

/// Least `(period, n0)` in lexicographic order with
/// `seq[n] == seq[n + period]` for all `n >= n0`, subject to
/// `n0 <= max_period` and at least two full periods in the tail.
pub fn detect_eventual_period(seq: &[u64], max_period: usize) -> PeriodDetection {
    let len = seq.len();
    for period in 1..=max_period.min(len / 2) {
        let mut n0 = len - period;
        while n0 > 0 && seq[n0 - 1] == seq[n0 - 1 + period] {
            n0 -= 1;
        }
        if n0 <= max_period && len - n0 >= 2 * period {
            return PeriodDetection::Found { n0, period };
        }
    }
    if len < 3 * max_period.max(1) {
        PeriodDetection::Inconclusive
    } else {
        PeriodDetection::NoPeriod
    }
}

/// Whether `period` holds from `n0` while none of its proper divisors does.
pub fn is_minimal_period(seq: &[u64], n0: usize, period: usize) -> bool {
    if period == 0 || !holds_from(seq, n0, period) {
        return false;
    }
    (1..period)
        .filter(|d| period.is_multiple_of(*d))
        .all(|d| !holds_from(seq, n0, d))
}
