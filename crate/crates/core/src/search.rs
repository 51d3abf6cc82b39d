//! Node budgets and tri-state search outcomes.

use serde::Serialize;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Counts search nodes against a fixed limit.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    /// Charges one node. Returns `false` once the limit is passed.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }

    /// Charges `k` nodes at once.
    pub fn charge(&mut self, k: u64) {
        self.used = self.used.saturating_add(k);
    }

    /// Nodes left before the limit.
    pub fn remaining(&self) -> u64 {
        self.limit.saturating_sub(self.used)
    }

    pub fn exhausted(&self) -> bool {
        self.used > self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

/// Advances `comb` (strictly increasing, values below `n`) to the next
/// combination in lexicographic order. Returns `false` after the last one.
pub fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    for i in (0..k).rev() {
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Result of a budgeted search. `Absent` is only reported after the search
/// space was exhausted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "value", rename_all = "snake_case")]
pub enum Outcome<T> {
    Present(T),
    Absent,
    Indeterminate,
}

impl<T> Outcome<T> {
    pub fn is_present(&self) -> bool {
        matches!(self, Outcome::Present(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Outcome::Absent)
    }

    pub fn present(self) -> Option<T> {
        match self {
            Outcome::Present(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_ref(&self) -> Outcome<&T> {
        match self {
            Outcome::Present(t) => Outcome::Present(t),
            Outcome::Absent => Outcome::Absent,
            Outcome::Indeterminate => Outcome::Indeterminate,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Present(t) => Outcome::Present(f(t)),
            Outcome::Absent => Outcome::Absent,
            Outcome::Indeterminate => Outcome::Indeterminate,
        }
    }
}
