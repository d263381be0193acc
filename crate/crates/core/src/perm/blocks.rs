use rustc_hash::FxHashSet;

use super::{induced_action, PermutationGroup, SetPartition};
use crate::error::{Error, Result};
use crate::graph::UnionFind;

/// A partition of the points into blocks of imprimitivity.
///
/// Blocks are in canonical order, so block 0 always contains point 0 and
/// serves as the representative block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockSystem {
    partition: SetPartition,
}

impl BlockSystem {
    pub fn base_domain_size(&self) -> usize {
        self.partition.degree()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        self.partition.parts()
    }

    pub fn block_size(&self) -> usize {
        self.partition.parts()[0].len()
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    /// The block containing point 0.
    pub fn representative(&self) -> &[usize] {
        &self.partition.parts()[0]
    }

    /// The discrete and the one-block systems are trivial.
    pub fn is_trivial(&self) -> bool {
        let k = self.partition.part_count();
        k == 1 || k == self.base_domain_size()
    }

    /// Checks the block axiom against every generator.
    pub fn is_preserved_by(&self, group: &PermutationGroup) -> bool {
        let part_of = self.partition.part_of();
        group.generators().iter().all(|g| {
            self.blocks().iter().all(|b| {
                let target = part_of[g.apply(b[0])];
                b.iter().all(|&x| part_of[g.apply(x)] == target)
            })
        })
    }

    /// The permutation action on the blocks, in block order.
    pub fn quotient_action(&self, group: &PermutationGroup) -> Result<PermutationGroup> {
        let part_of = self.partition.part_of();
        let cells: Vec<usize> = (0..self.partition.part_count()).collect();
        let blocks = self.blocks();
        induced_action(group, &cells, |&i, g| part_of[g.apply(blocks[i][0])])
    }
}

impl PermutationGroup {
    fn require_transitive(&self) -> Result<()> {
        if self.is_transitive() {
            Ok(())
        } else {
            Err(Error::NotTransitive)
        }
    }

    /// Atkinson's refinement: the finest system coarser than `base` in which
    /// `a` and `b` share a block. `base` must itself be a block system.
    fn coarsen(&self, base: &SetPartition, a: usize, b: usize) -> BlockSystem {
        let mut uf = UnionFind::new(self.degree());
        for part in base.parts() {
            for &x in &part[1..] {
                uf.union(part[0], x);
            }
        }
        let mut queue = Vec::new();
        if uf.union(a, b) {
            queue.push((a, b));
        }
        while let Some((x, y)) = queue.pop() {
            for g in self.generators() {
                let (u, v) = (g.apply(x), g.apply(y));
                let (ru, rv) = (uf.find(u), uf.find(v));
                if ru != rv {
                    uf.union(ru, rv);
                    queue.push((ru, rv));
                }
            }
        }
        BlockSystem {
            partition: uf.to_partition(),
        }
    }

    /// The finest block system in which `a` and `b` lie in a common block.
    pub fn minimal_block_containing(&self, a: usize, b: usize) -> Result<BlockSystem> {
        self.require_transitive()?;
        if a == b || a >= self.degree() || b >= self.degree() {
            return Err(Error::InvalidArgument(format!("points {a} and {b}")));
        }
        let discrete = SetPartition::from_labels(&(0..self.degree()).collect::<Vec<_>>());
        Ok(self.coarsen(&discrete, a, b))
    }

    /// Every block system, found by repeatedly coarsening from the discrete
    /// system. The list starts with the discrete system and ends with the
    /// one-block system; nontrivial systems lie between, ordered by
    /// decreasing number of blocks and then canonically.
    pub fn all_block_systems(&self) -> Result<Vec<BlockSystem>> {
        self.require_transitive()?;
        let n = self.degree();
        let discrete = BlockSystem {
            partition: SetPartition::from_labels(&(0..n).collect::<Vec<_>>()),
        };
        let mut seen: FxHashSet<BlockSystem> = FxHashSet::default();
        seen.insert(discrete.clone());
        let mut found = vec![discrete];
        let mut head = 0;
        while head < found.len() {
            let base = found[head].partition.clone();
            head += 1;
            for part in &base.parts()[1..] {
                let sys = self.coarsen(&base, 0, part[0]);
                if seen.insert(sys.clone()) {
                    found.push(sys);
                }
            }
        }
        found.sort_by(|a, b| {
            b.partition
                .part_count()
                .cmp(&a.partition.part_count())
                .then_with(|| a.partition.cmp(&b.partition))
        });
        debug_assert!(found.iter().all(|s| s.is_preserved_by(self)));
        Ok(found)
    }

    /// Nontrivial systems not strictly refining another nontrivial system,
    /// i.e. those with a primitive action on the blocks.
    pub fn maximal_block_systems(&self) -> Result<Vec<BlockSystem>> {
        let nontrivial: Vec<BlockSystem> = self
            .all_block_systems()?
            .into_iter()
            .filter(|s| !s.is_trivial())
            .collect();
        Ok(nontrivial
            .iter()
            .filter(|s| {
                !nontrivial
                    .iter()
                    .any(|t| t != *s && s.partition.refines(&t.partition))
            })
            .cloned()
            .collect())
    }

    /// Transitive with no nontrivial block system. A single point counts as
    /// primitive; two points are primitive whenever transitive.
    pub fn is_primitive(&self) -> bool {
        if !self.is_transitive() {
            return false;
        }
        let n = self.degree();
        (1..n).all(|b| self.coarsen_from_discrete(b).partition.part_count() == 1)
    }

    fn coarsen_from_discrete(&self, b: usize) -> BlockSystem {
        let discrete = SetPartition::from_labels(&(0..self.degree()).collect::<Vec<_>>());
        self.coarsen(&discrete, 0, b)
    }
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
    fn c4_minimal_block() {
        let sys = cyclic(4).minimal_block_containing(0, 2).unwrap();
        assert_eq!(sys.blocks(), &[vec![0, 2], vec![1, 3]]);
        let all = cyclic(4).all_block_systems().unwrap();
        assert_eq!(all.len(), 3);
        assert_eq!(all.iter().filter(|s| !s.is_trivial()).count(), 1);
    }

    #[test]
    fn c6_systems() {
        let g = cyclic(6);
        let nontrivial: Vec<_> = g
            .all_block_systems()
            .unwrap()
            .into_iter()
            .filter(|s| !s.is_trivial())
            .collect();
        assert_eq!(nontrivial.len(), 2);
        let max = g.maximal_block_systems().unwrap();
        assert_eq!(max.len(), 2);
        assert_eq!(max[0].blocks(), &[vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert_eq!(max[1].blocks(), &[vec![0, 2, 4], vec![1, 3, 5]]);
        for s in &max {
            assert!(s.quotient_action(&g).unwrap().is_primitive());
        }
    }

    #[test]
    fn c8_has_a_non_maximal_system() {
        let g = cyclic(8);
        assert_eq!(g.all_block_systems().unwrap().len(), 4);
        let max = g.maximal_block_systems().unwrap();
        assert_eq!(max.len(), 1);
        assert_eq!(max[0].block_size(), 4);
    }

    #[test]
    fn primitivity() {
        assert!(cyclic(5).is_primitive());
        assert!(!cyclic(4).is_primitive());
        assert!(cyclic(5).maximal_block_systems().unwrap().is_empty());
        assert_eq!(
            PermutationGroup::trivial(3).all_block_systems(),
            Err(Error::NotTransitive)
        );
    }
}
