use rayon::prelude::*;
use serde::Serialize;

use super::require_transitive;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::{for_each_k_partition, is_section, stirling2, KSubset, PermutationGroup, SetPartition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KutWitness {
    /// Orbit representative none of whose images is a transversal.
    pub kset: KSubset,
    pub partition: SetPartition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KutReport {
    pub verdict: bool,
    pub witness: Option<KutWitness>,
}

pub(crate) fn check_partition_budget(n: usize, k: usize, budget: &Budget) -> Result<()> {
    let count = stirling2(n, k);
    if count > budget.partition_cap as u128 {
        return Err(Error::DegreeBudgetExceeded(format!(
            "{count} partitions of {n} points into {k} parts exceed the cap of {}",
            budget.partition_cap
        )));
    }
    Ok(())
}

/// Whether every orbit of k-sets contains a transversal of every k-partition.
///
/// Orbits are scanned in representative order and partitions in
/// restricted-growth order; the witness is the first failure found.
pub fn has_k_ut(group: &PermutationGroup, k: usize, budget: &Budget) -> Result<KutReport> {
    require_transitive(group)?;
    let n = group.degree();
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("k = {k} on {n} points")));
    }
    check_partition_budget(n, k, budget)?;
    let orbits = group.orbits_on_ksets(k);
    let witness = orbits
        .par_iter()
        .map(|orbit| {
            let mut failure = None;
            for_each_k_partition(n, k, |rgs| {
                if orbit.iter().any(|s| is_section(s.elements(), rgs)) {
                    true
                } else {
                    failure = Some(SetPartition::from_rgs(rgs));
                    false
                }
            });
            failure.map(|partition| KutWitness {
                kset: orbit[0].clone(),
                partition,
            })
        })
        .find_first(Option::is_some)
        .flatten();
    Ok(KutReport {
        verdict: witness.is_none(),
        witness,
    })
}
