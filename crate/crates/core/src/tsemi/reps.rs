use rustc_hash::FxHashSet;

use super::Transformation;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::{for_each_k_partition, stirling2, KSubset, Orbit, Permutation, PermutationGroup, SetPartition};

/// Least member (in restricted-growth order) of each orbit on k-partitions.
pub(crate) fn kernel_orbit_reps(
    group: &PermutationGroup,
    k: usize,
    budget: &Budget,
) -> Result<Vec<SetPartition>> {
    let n = group.degree();
    let count = stirling2(n, k);
    if count > budget.partition_cap as u128 {
        return Err(Error::DegreeBudgetExceeded(format!(
            "{count} partitions of {n} points into {k} parts"
        )));
    }
    let mut seen: FxHashSet<Vec<usize>> = FxHashSet::default();
    let mut reps = Vec::new();
    for_each_k_partition(n, k, |rgs| {
        if seen.contains(rgs) {
            return true;
        }
        let p = SetPartition::from_rgs(rgs);
        seen.insert(rgs.to_vec());
        let mut queue = vec![p.clone()];
        while let Some(cur) = queue.pop() {
            for g in group.generators() {
                let img = cur.image(g);
                if seen.insert(img.part_of().to_vec()) {
                    queue.push(img);
                }
            }
        }
        reps.push(p);
        true
    });
    Ok(reps)
}

/// Permutations of the parts of `p` induced by its setwise stabiliser.
fn part_actions(group: &PermutationGroup, p: &SetPartition, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let act = |q: &SetPartition, g: &Permutation| q.image(g);
    let orbit = Orbit::new(group, p.clone(), act, budget.orbit_cap)?;
    let mut out: Vec<Vec<usize>> = orbit
        .stabilizer_generators(group, act)
        .iter()
        .map(|g| p.parts().iter().map(|part| p.part_of()[g.apply(part[0])]).collect())
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Permutations of the positions of `s` induced by its setwise stabiliser.
fn position_actions(group: &PermutationGroup, s: &KSubset, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let act = |q: &KSubset, g: &Permutation| q.image(g);
    let orbit = Orbit::new(group, s.clone(), act, budget.orbit_cap)?;
    let el = s.elements();
    let mut out: Vec<Vec<usize>> = orbit
        .stabilizer_generators(group, act)
        .iter()
        .map(|g| {
            el.iter()
                .map(|&x| el.binary_search(&g.apply(x)).expect("stabiliser fixes the set"))
                .collect()
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

fn permutations_lex(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

/// One rank-`k` map per class of the relation `t ~ g t h` (`g, h` in `G`).
///
/// A map is a kernel, an image and a matching of kernel classes to image
/// points. Kernels and images are reduced to orbit representatives; the
/// matchings are then reduced modulo the stabilisers of the two
/// representatives. Order: kernel representative, image representative,
/// then the lexicographically least matching of each class.
pub fn rank_k_map_reps(group: &PermutationGroup, k: usize, budget: &Budget) -> Result<Vec<Transformation>> {
    let n = group.degree();
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("rank {k} on {n} points")));
    }
    let kernels = kernel_orbit_reps(group, k, budget)?;
    let images: Vec<KSubset> = group
        .orbits_on_ksets(k)
        .into_iter()
        .map(|o| o[0].clone())
        .collect();
    let matchings = permutations_lex(k);
    let mut out = Vec::new();
    for p in &kernels {
        let left = part_actions(group, p, budget)?;
        for s in &images {
            let right = position_actions(group, s, budget)?;
            let mut seen: FxHashSet<Vec<usize>> = FxHashSet::default();
            for beta in &matchings {
                if seen.contains(beta) {
                    continue;
                }
                seen.insert(beta.clone());
                let mut queue = vec![beta.clone()];
                while let Some(cur) = queue.pop() {
                    let lefts = left.iter().map(|pi| pi.iter().map(|&j| cur[j]).collect::<Vec<_>>());
                    let rights = right.iter().map(|rho| cur.iter().map(|&i| rho[i]).collect::<Vec<_>>());
                    for next in lefts.chain(rights) {
                        if seen.insert(next.clone()) {
                            queue.push(next);
                        }
                    }
                }
                out.push(Transformation::from_kernel_image(p, s, beta));
            }
        }
    }
    Ok(out)
}
