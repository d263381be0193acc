//! Idempotent generation of `<G, t> \ G` decided on its top rank only.
//!
//! Let `k` be the rank of `t` and `S = <G, t> \ G`. Every element of `S` is a
//! product of elements `g t h`, all of rank `k`, and a product of rank `k`
//! only has factors of rank `k`. Hence `S` is idempotent-generated exactly
//! when every rank-`k` element of `S` is a product of rank-`k` idempotents.
//!
//! Conjugation by `G` preserves both `S` and its idempotents, and it moves
//! kernels around the orbit of `ker t`, so it suffices to look at the rank-`k`
//! elements whose kernel is `ker t` itself. That set has at most
//! `C(n, k) * k!` members however large `S` is.

use rustc_hash::{FxHashMap, FxHashSet};

use super::{Packed, Transformation};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::{Orbit, Permutation, PermutationGroup, SetPartition};

/// Largest degree handled by the packed transformation engines.
pub const MAX_PACKED_DEGREE: usize = 16;

pub(crate) fn check_degree(n: usize, t: &Transformation) -> Result<()> {
    if t.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: t.degree(),
        });
    }
    if n > MAX_PACKED_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "transformation engines support degree at most {MAX_PACKED_DEGREE}, got {n}"
        )));
    }
    Ok(())
}

/// The rank-`k` elements of `<G, t> \ G` with kernel `ker t`.
#[derive(Debug, Clone)]
pub struct LayerAnalysis {
    degree: usize,
    rank: usize,
    class: Vec<Packed>,
    idempotents: Vec<Packed>,
}

impl LayerAnalysis {
    pub fn new(group: &PermutationGroup, t: &Transformation, budget: &Budget) -> Result<Self> {
        let n = group.degree();
        check_degree(n, t)?;
        if t.is_permutation() {
            return Err(Error::TIsPermutation);
        }
        let k = t.rank();
        let pt = Packed::from_transformation(t);

        // Left multiplication by the stabiliser of ker t only matters through
        // its action on the kernel classes, so keep one generator per effect.
        let act = |p: &SetPartition, g: &Permutation| p.image(g);
        let kernel_orbit = Orbit::new(group, t.kernel(), act, budget.orbit_cap)?;
        let mut seen_effect = FxHashSet::default();
        let mut left: Vec<Packed> = kernel_orbit
            .stabilizer_generators(group, act)
            .iter()
            .map(Packed::from_perm)
            .filter(|&g| seen_effect.insert(g.then(pt, n)))
            .collect();
        left.sort();
        let right: Vec<Packed> = group
            .generators()
            .iter()
            .map(Packed::from_perm)
            .chain(std::iter::once(pt))
            .collect();

        let mut set = FxHashSet::default();
        set.insert(pt);
        let mut class = vec![pt];
        let mut head = 0;
        while head < class.len() {
            let x = class[head];
            head += 1;
            let candidates = left
                .iter()
                .map(|&g| g.then(x, n))
                .chain(right.iter().map(|&r| x.then(r, n)));
            for y in candidates {
                if y.rank(n) == k && set.insert(y) {
                    if class.len() >= budget.semigroup_cap {
                        return Err(Error::CapExceeded(budget.semigroup_cap));
                    }
                    class.push(y);
                }
            }
        }
        let mut idempotents: Vec<Packed> = class
            .iter()
            .copied()
            .filter(|p| p.is_idempotent(n))
            .collect();
        idempotents.sort();
        Ok(LayerAnalysis {
            degree: n,
            rank: k,
            class,
            idempotents,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of rank-k elements of the semigroup with kernel `ker t`.
    pub fn class_size(&self) -> usize {
        self.class.len()
    }

    /// Whether `<G, t> \ G` contains an idempotent of rank `k`.
    pub fn has_rank_k_idempotent(&self) -> bool {
        !self.idempotents.is_empty()
    }

    /// Rank-k idempotents with kernel `ker t`, sorted.
    pub fn kernel_idempotents(&self) -> Vec<Transformation> {
        self.idempotents
            .iter()
            .map(|p| p.to_transformation(self.degree))
            .collect()
    }

    /// Whether `<G, t> \ G` is generated by its idempotents.
    pub fn is_idempotent_generated(&self, group: &PermutationGroup, budget: &Budget) -> Result<bool> {
        let n = self.degree;
        let k = self.rank;
        if self.idempotents.is_empty() {
            return Ok(false);
        }
        if self.idempotents.len() == self.class.len() {
            return Ok(true);
        }

        // All rank-k idempotents: conjugates of those with kernel ker t.
        let conj: Vec<(Packed, Packed)> = group
            .generators()
            .iter()
            .map(|g| (Packed::from_perm(&g.inverse()), Packed::from_perm(g)))
            .collect();
        let mut all_set: FxHashSet<Packed> = self.idempotents.iter().copied().collect();
        let mut all: Vec<Packed> = self.idempotents.clone();
        let mut head = 0;
        while head < all.len() {
            let e = all[head];
            head += 1;
            for &(ginv, g) in &conj {
                let c = ginv.then(e, n).then(g, n);
                if all_set.insert(c) {
                    if all.len() >= budget.semigroup_cap {
                        return Err(Error::CapExceeded(budget.semigroup_cap));
                    }
                    all.push(c);
                }
            }
        }

        // Right multiplication by an idempotent e only reads e on the image of
        // the left factor, so moves out of image `mask` are the distinct
        // restrictions of the idempotents injective on `mask`.
        let mut moves: FxHashMap<u32, Vec<Packed>> = FxHashMap::default();
        let target: FxHashSet<Packed> = self.class.iter().copied().collect();
        let mut reached: FxHashSet<Packed> = self.idempotents.iter().copied().collect();
        let mut queue: Vec<Packed> = self.idempotents.clone();
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let mask = x.image_mask(n);
            let step = moves.entry(mask).or_insert_with(|| {
                let mut distinct: Vec<Packed> = all
                    .iter()
                    .filter(|e| e.image_of(mask).count_ones() as usize == k)
                    .map(|e| e.restrict(mask, n))
                    .collect();
                distinct.sort_unstable();
                distinct.dedup();
                distinct
            });
            for &b in step.iter() {
                let y = x.then(b, n);
                if reached.insert(y) {
                    debug_assert!(target.contains(&y));
                    queue.push(y);
                }
            }
            if reached.len() == target.len() {
                return Ok(true);
            }
        }
        Ok(reached.len() == target.len())
    }
}
