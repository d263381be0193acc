use rayon::prelude::*;
use serde::Serialize;

use super::kut::check_partition_budget;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::{for_each_k_partition, is_section, induced_action, KSubset, Orbit, Permutation, PermutationGroup, SetPartition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongKutWitness {
    /// Orbit representative `(a_1, ..., a_{k+1})` of distinct points.
    pub tuple: Vec<usize>,
    pub partition: SetPartition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongKutReport {
    pub verdict: bool,
    pub witness: Option<StrongKutWitness>,
}

/// Orbits of the group on `(k+1)`-tuples of distinct points, each listed
/// with its lexicographically least tuple first, orbits in order of that tuple.
fn tuple_orbits(group: &PermutationGroup, len: usize, budget: &Budget) -> Result<Vec<Vec<Vec<usize>>>> {
    let n = group.degree();
    let total = (0..len as u32).try_fold(1usize, |acc, _| acc.checked_mul(n));
    let total = match total {
        Some(t) if t <= budget.orbit_cap => t,
        _ => {
            return Err(Error::DegreeBudgetExceeded(format!(
                "{len}-tuples on {n} points exceed the cap of {}",
                budget.orbit_cap
            )))
        }
    };
    let index = |t: &[usize]| t.iter().fold(0, |acc, &x| acc * n + x);
    let mut seen = vec![false; total];
    let mut out = Vec::new();
    for code in 0..total {
        if seen[code] {
            continue;
        }
        let mut tuple = vec![0; len];
        let mut c = code;
        for slot in tuple.iter_mut().rev() {
            *slot = c % n;
            c /= n;
        }
        let mut sorted = tuple.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        seen[code] = true;
        let mut orbit = vec![tuple];
        let mut head = 0;
        while head < orbit.len() {
            let cur = orbit[head].clone();
            head += 1;
            for g in group.generators() {
                let img: Vec<usize> = cur.iter().map(|&x| g.apply(x)).collect();
                let i = index(&img);
                if !seen[i] {
                    seen[i] = true;
                    orbit.push(img);
                }
            }
        }
        out.push(orbit);
    }
    Ok(out)
}

/// Whether for every `(k+1)`-tuple of distinct points and every k-partition
/// some group element maps the first `k` points to a transversal and puts
/// the first and last points in the same part.
///
/// Defined for `2 <= k < n`; the interesting range is `k <= n/2`.
pub fn has_strong_k_ut(group: &PermutationGroup, k: usize, budget: &Budget) -> Result<StrongKutReport> {
    let n = group.degree();
    if k < 2 || k >= n {
        return Err(Error::InvalidArgument(format!("k = {k} on {n} points")));
    }
    check_partition_budget(n, k, budget)?;
    let orbits = tuple_orbits(group, k + 1, budget)?;
    let witness = orbits
        .par_iter()
        .map(|orbit| {
            let mut failure = None;
            for_each_k_partition(n, k, |rgs| {
                let ok = orbit
                    .iter()
                    .any(|t| rgs[t[0]] == rgs[t[k]] && is_section(&t[..k], rgs));
                if !ok {
                    failure = Some(SetPartition::from_rgs(rgs));
                }
                ok
            });
            failure.map(|partition| StrongKutWitness {
                tuple: orbit[0].clone(),
                partition,
            })
        })
        .find_first(Option::is_some)
        .flatten();
    Ok(StrongKutReport {
        verdict: witness.is_none(),
        witness,
    })
}

/// Whether the setwise stabiliser of every `(k+1)`-set induces a
/// 2-homogeneous group on it. It suffices to check one set per orbit.
pub fn set_stabilisers_two_homogeneous(group: &PermutationGroup, k: usize, budget: &Budget) -> Result<bool> {
    let act = |s: &KSubset, g: &Permutation| s.image(g);
    for orbit in group.orbits_on_ksets(k + 1) {
        let set = orbit[0].clone();
        let tree = Orbit::new(group, set.clone(), act, budget.orbit_cap)?;
        let stab = PermutationGroup::new(group.degree(), tree.stabilizer_generators(group, act))?;
        let points: Vec<usize> = set.elements().to_vec();
        let local = induced_action(&stab, &points, |&x, g| g.apply(x))?;
        if !local.is_k_homogeneous(2) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    fn agl1_5() -> PermutationGroup {
        PermutationGroup::new(5, vec![perm(&[1, 2, 3, 4, 0]), perm(&[0, 2, 4, 1, 3])]).unwrap()
    }

    #[test]
    fn agl15_has_strong_2ut() {
        assert!(has_strong_k_ut(&agl1_5(), 2, &Budget::default()).unwrap().verdict);
    }

    #[test]
    fn c5_lacks_strong_2ut() {
        let c5 = PermutationGroup::new(5, vec![perm(&[1, 2, 3, 4, 0])]).unwrap();
        let r = has_strong_k_ut(&c5, 2, &Budget::default()).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witness.unwrap().tuple.len(), 3);
    }

    #[test]
    fn symmetric_hypothesis_holds() {
        let s5 = PermutationGroup::new(5, vec![perm(&[1, 2, 3, 4, 0]), perm(&[1, 0, 2, 3, 4])]).unwrap();
        for k in 2..4 {
            assert!(set_stabilisers_two_homogeneous(&s5, k, &Budget::default()).unwrap());
            assert!(has_strong_k_ut(&s5, k, &Budget::default()).unwrap().verdict);
        }
        assert!(!set_stabilisers_two_homogeneous(&agl1_5(), 2, &Budget::default()).unwrap());
    }
}
