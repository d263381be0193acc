use serde::Serialize;

/// Enumeration limits shared by every expensive search.
///
/// Exceeding a limit is an error, never a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Maximum number of elements in a semigroup or group closure.
    pub semigroup_cap: usize,
    /// Maximum number of partitions (or tuples) enumerated by a single check.
    pub partition_cap: usize,
    /// Maximum size of any orbit that is materialised.
    pub orbit_cap: usize,
    /// Largest edge orbit for which single-edge deletion is tested in road closure.
    pub singleton_edge_cap: usize,
}

pub const DEFAULT_CAP: usize = 10_000_000;

impl Default for Budget {
    fn default() -> Self {
        Budget::uniform(DEFAULT_CAP)
    }
}

impl Budget {
    pub fn uniform(cap: usize) -> Self {
        Budget {
            semigroup_cap: cap,
            partition_cap: cap,
            orbit_cap: cap,
            singleton_edge_cap: cap,
        }
    }
}
