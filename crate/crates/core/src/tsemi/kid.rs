use rayon::prelude::*;
use serde::Serialize;

use super::{rank_k_map_reps, LayerAnalysis, Transformation};
use crate::budget::Budget;
use crate::error::Result;
use crate::perm::PermutationGroup;

/// Outcome of a k-id check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KidReport {
    pub verdict: bool,
    /// First representative whose singular part is not idempotent-generated.
    pub witness: Option<Transformation>,
    pub representatives: usize,
}

/// Whether `<G, t> \ G` is idempotent-generated.
pub fn singular_part_is_idempotent_generated(
    group: &PermutationGroup,
    t: &Transformation,
    budget: &Budget,
) -> Result<bool> {
    LayerAnalysis::new(group, t, budget)?.is_idempotent_generated(group, budget)
}

/// Whether `<G, t> \ G` is idempotent-generated for every map `t` of rank `k`.
///
/// Representatives are checked in parallel; the witness is the first failing
/// one in representative order, and a budget error on an earlier
/// representative takes precedence over a later failure.
pub fn has_k_id(group: &PermutationGroup, k: usize, budget: &Budget) -> Result<KidReport> {
    let reps = rank_k_map_reps(group, k, budget)?;
    let first_bad = reps
        .par_iter()
        .map(|t| singular_part_is_idempotent_generated(group, t, budget))
        .enumerate()
        .find_first(|(_, r)| !matches!(r, Ok(true)));
    match first_bad {
        None => Ok(KidReport {
            verdict: true,
            witness: None,
            representatives: reps.len(),
        }),
        Some((_, Err(e))) => Err(e),
        Some((i, Ok(_))) => Ok(KidReport {
            verdict: false,
            witness: Some(reps[i].clone()),
            representatives: reps.len(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    #[test]
    fn c7_paper_map_fails() {
        let c7 = PermutationGroup::new(
            7,
            vec![Permutation::from_images((0..7).map(|i| (i + 1) % 7).collect()).unwrap()],
        )
        .unwrap();
        let t = Transformation::parse(7, "2211552").unwrap();
        assert!(!singular_part_is_idempotent_generated(&c7, &t, &Budget::default()).unwrap());
        let report = has_k_id(&c7, 3, &Budget::default()).unwrap();
        assert!(!report.verdict);
        assert!(report.witness.is_some());
    }
}
