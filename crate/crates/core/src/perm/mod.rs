//! Permutations and finitely generated permutation groups.
//!
//! Points are `0..n`. Composition is left to right: `x(f·g) = (x f) g`.

mod action;
mod blocks;
pub mod io;
mod sets;

use std::collections::VecDeque;
use std::fmt;

use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::error::{Error, Result};

pub use action::{induced_action, Orbit};
pub use blocks::BlockSystem;
pub use sets::{
    binomial, distinct_tuples, for_each_k_partition, is_section, k_partitions, ksubsets,
    rank_ksubset, stirling2, KSubset, SetPartition,
};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Checks that `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `0..n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n || std::mem::replace(&mut moved[x], true) {
                    return Err(Error::NotAPermutation(format!("cycles {cycles:?}")));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    name: Option<String>,
}

impl PermutationGroup {
    /// An empty generator list yields the trivial group, stored with the
    /// identity as its single generator.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        Ok(PermutationGroup {
            degree,
            generators,
            name: None,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup::new(degree, Vec::new()).expect("identity has the right degree")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Sorted orbit of `point`.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = VecDeque::from([point]);
        let mut out = vec![point];
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Orbits on points, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let orb = self.orbit(x);
                for &y in &orb {
                    seen[y] = true;
                }
                out.push(orb);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree > 0 && self.orbit(0).len() == self.degree
    }

    /// All elements by breadth-first closure, identity first.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let id = Permutation::identity(self.degree);
        let mut seen: FxHashSet<Permutation> = FxHashSet::default();
        seen.insert(id.clone());
        let mut out = vec![id];
        let mut head = 0;
        while head < out.len() {
            let x = out[head].clone();
            head += 1;
            for g in &self.generators {
                let y = x.compose(g);
                if !seen.contains(&y) {
                    if out.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    seen.insert(y.clone());
                    out.push(y);
                }
            }
        }
        Ok(out)
    }

    pub fn order(&self, cap: usize) -> Result<usize> {
        self.elements(cap).map(|e| e.len())
    }

    /// Orbits on k-subsets, each sorted, ordered by their least member (which is
    /// therefore the first entry of every orbit).
    pub fn orbits_on_ksets(&self, k: usize) -> Vec<Vec<KSubset>> {
        let n = self.degree;
        let total = binomial(n, k);
        let mut seen = vec![false; total];
        let mut out = Vec::new();
        for s in ksubsets(n, k) {
            if seen[s.rank(n)] {
                continue;
            }
            seen[s.rank(n)] = true;
            let mut orbit = vec![s];
            let mut head = 0;
            while head < orbit.len() {
                let cur = orbit[head].clone();
                head += 1;
                for g in &self.generators {
                    let img = cur.image(g);
                    let r = img.rank(n);
                    if !seen[r] {
                        seen[r] = true;
                        orbit.push(img);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_k_homogeneous(&self, k: usize) -> bool {
        self.orbits_on_ksets(k).len() == 1
    }

    /// True if the group is transitive on ordered k-tuples of distinct points.
    pub fn is_k_transitive(&self, k: usize) -> bool {
        let seed: Vec<usize> = (0..k).collect();
        let act = |t: &Vec<usize>, g: &Permutation| t.iter().map(|&x| g.apply(x)).collect();
        let orbit = Orbit::new(self, seed, act, usize::MAX).expect("no cap");
        let mut full = 1usize;
        for i in 0..k {
            full *= self.degree - i;
        }
        orbit.len() == full
    }
}
