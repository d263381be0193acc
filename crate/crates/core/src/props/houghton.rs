use serde::Serialize;

use super::kut::check_partition_budget;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::perm::{KSubset, Orbit, Permutation, PermutationGroup, SetPartition};
use crate::tsemi::kernel_orbit_reps;

/// The Houghton graph: orbits of `partition` and `set`, with a partition
/// joined to each set that is a transversal of it. Both sides are sorted.
pub fn houghton_graph(
    group: &PermutationGroup,
    k: usize,
    partition: &SetPartition,
    set: &KSubset,
    budget: &Budget,
) -> Result<BipartiteGraph<SetPartition, KSubset>> {
    if set.len() != k || partition.part_count() != k || partition.degree() != group.degree() {
        return Err(Error::InvalidArgument(format!(
            "need a {k}-set and a {k}-partition of {} points",
            group.degree()
        )));
    }
    let mut left = Orbit::new(
        group,
        partition.clone(),
        |p: &SetPartition, g: &Permutation| p.image(g),
        budget.orbit_cap,
    )?
    .members()
    .to_vec();
    let mut right = Orbit::new(group, set.clone(), |s: &KSubset, g: &Permutation| s.image(g), budget.orbit_cap)?
        .members()
        .to_vec();
    left.sort();
    right.sort();
    let mut edges = Vec::new();
    for (i, p) in left.iter().enumerate() {
        for (j, s) in right.iter().enumerate() {
            if s.is_transversal_of(p) {
                edges.push((i, j));
            }
        }
    }
    Ok(BipartiteGraph { left, right, edges })
}

pub fn houghton_connected(
    group: &PermutationGroup,
    k: usize,
    partition: &SetPartition,
    set: &KSubset,
    budget: &Budget,
) -> Result<bool> {
    Ok(houghton_graph(group, k, partition, set, budget)?.is_connected())
}

/// A partition and set whose Houghton graph is disconnected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HoughtonWitness {
    pub partition: SetPartition,
    pub kset: KSubset,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HoughtonReport {
    pub verdict: bool,
    pub witness: Option<HoughtonWitness>,
}

/// Whether every Houghton graph for 2-sets and 2-partitions is connected.
pub fn has_2_hc(group: &PermutationGroup, budget: &Budget) -> Result<HoughtonReport> {
    let n = group.degree();
    check_partition_budget(n, 2, budget)?;
    let partitions = kernel_orbit_reps(group, 2, budget)?;
    for orbit in group.orbits_on_ksets(2) {
        for p in &partitions {
            if !houghton_connected(group, 2, p, &orbit[0], budget)? {
                return Ok(HoughtonReport {
                    verdict: false,
                    witness: Some(HoughtonWitness {
                        partition: p.clone(),
                        kset: orbit[0].clone(),
                    }),
                });
            }
        }
    }
    Ok(HoughtonReport {
        verdict: true,
        witness: None,
    })
}
