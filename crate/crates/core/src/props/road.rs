use rayon::prelude::*;
use serde::Serialize;

use super::require_transitive;
use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;
use crate::perm::{induced_action, KSubset, PermutationGroup, SetPartition};

/// An orbital graph disconnected by deleting a block of the edge action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoadWitness {
    pub orbit_rep: KSubset,
    /// The deleted block, as edges.
    pub block_edges: Vec<KSubset>,
    /// Components of the remaining graph.
    pub components: SetPartition,
    /// True when the edge action is primitive and the block is a single edge.
    pub singleton: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitSummary {
    pub rep: KSubset,
    pub size: usize,
    pub edge_action_primitive: bool,
    pub maximal_systems: usize,
    /// Whether single-edge deletion was tested (primitive edge action within budget).
    pub singleton_tested: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoadReport {
    pub verdict: bool,
    pub witness: Option<RoadWitness>,
    pub orbits: Vec<OrbitSummary>,
}

fn remaining_graph(n: usize, orbit: &[KSubset], deleted: &[usize]) -> Graph {
    let mut keep = vec![true; orbit.len()];
    for &i in deleted {
        keep[i] = false;
    }
    Graph::new(
        n,
        orbit
            .iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(s, _)| (s.elements()[0], s.elements()[1])),
    )
}

fn check_orbit(
    group: &PermutationGroup,
    orbit: &[KSubset],
    budget: &Budget,
) -> Result<(OrbitSummary, Option<RoadWitness>)> {
    let n = group.degree();
    let action = induced_action(group, orbit, |s, g| s.image(g))?;
    let maximal = action.maximal_block_systems()?;
    let mut summary = OrbitSummary {
        rep: orbit[0].clone(),
        size: orbit.len(),
        edge_action_primitive: maximal.is_empty(),
        maximal_systems: maximal.len(),
        singleton_tested: false,
    };
    let witness_for = |block: &[usize], singleton: bool| {
        let rest = remaining_graph(n, orbit, block);
        (!rest.is_connected()).then(|| RoadWitness {
            orbit_rep: orbit[0].clone(),
            block_edges: block.iter().map(|&i| orbit[i].clone()).collect(),
            components: rest.connected_components(),
            singleton,
        })
    };
    for system in &maximal {
        if let Some(w) = witness_for(system.representative(), false) {
            return Ok((summary, Some(w)));
        }
    }
    // A primitive edge action has only single edges as maximal blocks.
    if maximal.is_empty() && orbit.len() > 1 && orbit.len() <= budget.singleton_edge_cap {
        summary.singleton_tested = true;
        if let Some(w) = witness_for(&[0], true) {
            return Ok((summary, Some(w)));
        }
    }
    Ok((summary, None))
}

/// Whether no orbital graph is disconnected by deleting a maximal block of
/// imprimitivity of the group's action on its edges.
///
/// Each 2-set orbit is checked against the block containing its
/// representative in each maximal system; the other blocks of a system are
/// images of it under the group. When the edge action is primitive, deletion
/// of a single edge is tested instead.
pub fn has_road_closure(group: &PermutationGroup, budget: &Budget) -> Result<RoadReport> {
    require_transitive(group)?;
    let orbits = group.orbits_on_ksets(2);
    let results: Vec<(OrbitSummary, Option<RoadWitness>)> = orbits
        .par_iter()
        .map(|o| check_orbit(group, o, budget))
        .collect::<Result<_>>()?;
    let mut summaries = Vec::with_capacity(results.len());
    let mut witness = None;
    for (s, w) in results {
        summaries.push(s);
        if witness.is_none() {
            witness = w;
        }
    }
    Ok(RoadReport {
        verdict: witness.is_none(),
        witness,
        orbits: summaries,
    })
}

/// The 2-id property, decided through road closure.
pub fn has_2_id(group: &PermutationGroup, budget: &Budget) -> Result<RoadReport> {
    has_road_closure(group, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn cyclic(n: usize) -> PermutationGroup {
        PermutationGroup::new(
            n,
            vec![Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn prime_cycle_passes() {
        let r = has_road_closure(&cyclic(5), &Budget::default()).unwrap();
        assert!(r.verdict);
        assert_eq!(r.orbits.len(), 2);
        assert!(r.orbits.iter().all(|o| o.singleton_tested));
    }

    #[test]
    fn c4_fails() {
        let r = has_road_closure(&cyclic(4), &Budget::default()).unwrap();
        assert!(!r.verdict);
        let w = r.witness.unwrap();
        assert_eq!(w.orbit_rep.elements(), &[0, 1]);
        // Deleting {01, 23} leaves the edges 12 and 03.
        assert_eq!(w.components.parts(), &[vec![0, 3], vec![1, 2]]);
    }
}
