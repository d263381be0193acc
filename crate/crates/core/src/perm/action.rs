use std::hash::Hash;

use rustc_hash::{FxHashMap, FxHashSet};

use super::{Permutation, PermutationGroup};
use crate::error::{Error, Result};

/// An orbit of the group on some structure, with a Schreier tree.
///
/// Members are listed in breadth-first discovery order; member 0 is the seed.
#[derive(Debug, Clone)]
pub struct Orbit<T> {
    members: Vec<T>,
    index: FxHashMap<T, usize>,
    /// For each member but the seed: (parent member, generator index).
    parent: Vec<(usize, usize)>,
}

impl<T: Clone + Eq + Hash> Orbit<T> {
    /// Breadth-first orbit of `seed` under `act`, failing once more than
    /// `cap` members are found.
    pub fn new(
        group: &PermutationGroup,
        seed: T,
        act: impl Fn(&T, &Permutation) -> T,
        cap: usize,
    ) -> Result<Self> {
        let mut index = FxHashMap::default();
        index.insert(seed.clone(), 0);
        let mut members = vec![seed];
        let mut parent = vec![(usize::MAX, usize::MAX)];
        let mut head = 0;
        while head < members.len() {
            for (gi, g) in group.generators().iter().enumerate() {
                let img = act(&members[head], g);
                if !index.contains_key(&img) {
                    if members.len() >= cap {
                        return Err(Error::OrbitBudgetExceeded(cap));
                    }
                    index.insert(img.clone(), members.len());
                    members.push(img);
                    parent.push((head, gi));
                }
            }
            head += 1;
        }
        Ok(Orbit {
            members,
            index,
            parent,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[T] {
        &self.members
    }

    pub fn position(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.index.contains_key(x)
    }

    /// An element mapping the seed to member `i`.
    pub fn transversal(&self, group: &PermutationGroup, i: usize) -> Permutation {
        let mut word = Vec::new();
        let mut cur = i;
        while cur != 0 {
            let (p, g) = self.parent[cur];
            word.push(g);
            cur = p;
        }
        let gens = group.generators();
        word.iter()
            .rev()
            .fold(Permutation::identity(group.degree()), |acc, &g| acc.compose(&gens[g]))
    }

    /// Schreier generators of the stabiliser of the seed, deduplicated and
    /// with the identity removed; falls back to the identity for a trivial
    /// stabiliser.
    pub fn stabilizer_generators(
        &self,
        group: &PermutationGroup,
        act: impl Fn(&T, &Permutation) -> T,
    ) -> Vec<Permutation> {
        let reps: Vec<Permutation> = (0..self.len()).map(|i| self.transversal(group, i)).collect();
        let mut seen = FxHashSet::default();
        let mut out = Vec::new();
        for (i, rep) in reps.iter().enumerate() {
            for g in group.generators() {
                let j = self.index[&act(&self.members[i], g)];
                let s = rep.compose(g).compose(&reps[j].inverse());
                if !s.is_identity() && seen.insert(s.clone()) {
                    out.push(s);
                }
            }
        }
        if out.is_empty() {
            out.push(Permutation::identity(group.degree()));
        }
        out
    }
}

/// The action on `cells`: generator `i` of the result is the permutation of
/// cell indices induced by generator `i` of `group`. `act` must map each cell
/// onto another cell of the list.
pub fn induced_action<T: Clone + Eq + Hash>(
    group: &PermutationGroup,
    cells: &[T],
    act: impl Fn(&T, &Permutation) -> T,
) -> Result<PermutationGroup> {
    let index: FxHashMap<&T, usize> = cells.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut gens = Vec::with_capacity(group.generators().len());
    for (gi, g) in group.generators().iter().enumerate() {
        let mut images = Vec::with_capacity(cells.len());
        for c in cells {
            match index.get(&act(c, g)) {
                Some(&j) => images.push(j),
                None => return Err(Error::CellsNotInvariant { generator: gi }),
            }
        }
        gens.push(Permutation::from_images(images).map_err(|_| Error::CellsNotInvariant { generator: gi })?);
    }
    PermutationGroup::new(cells.len(), gens)
}
