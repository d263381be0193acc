use rustc_hash::FxHashSet;

use super::layer::check_degree;
use super::{Packed, Transformation};
use crate::error::{Error, Result};
use crate::perm::PermutationGroup;

/// An explicitly enumerated transformation semigroup.
#[derive(Debug, Clone)]
pub struct TransformationSemigroup {
    degree: usize,
    elements: Vec<Packed>,
    set: FxHashSet<Packed>,
}

impl TransformationSemigroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, t: &Transformation) -> bool {
        t.degree() == self.degree && self.set.contains(&Packed::from_transformation(t))
    }

    /// Elements in discovery order.
    pub fn elements(&self) -> Vec<Transformation> {
        self.elements
            .iter()
            .map(|p| p.to_transformation(self.degree))
            .collect()
    }

    /// All idempotents, sorted by image array.
    pub fn idempotents(&self) -> Vec<Transformation> {
        let mut out: Vec<Transformation> = self
            .elements
            .iter()
            .filter(|p| p.is_idempotent(self.degree))
            .map(|p| p.to_transformation(self.degree))
            .collect();
        out.sort();
        out
    }

    /// Whether the idempotents generate the whole semigroup.
    ///
    /// Idempotents are added as generators in order of decreasing rank,
    /// skipping any already generated; a product never has larger rank than
    /// its factors, so the skipped ones are redundant.
    pub fn is_idempotent_generated(&self) -> bool {
        let n = self.degree;
        let mut idem: Vec<Packed> = self
            .elements
            .iter()
            .copied()
            .filter(|p| p.is_idempotent(n))
            .collect();
        idem.sort_by_key(|p| (std::cmp::Reverse(p.rank(n)), *p));
        let mut gens: Vec<Packed> = Vec::new();
        let mut closure: FxHashSet<Packed> = FxHashSet::default();
        let mut members: Vec<Packed> = Vec::new();
        for e in idem {
            if closure.contains(&e) {
                continue;
            }
            gens.push(e);
            // New words contain e: u·e for u in the old closure (or u empty),
            // then closed under right multiplication by every generator.
            let start = members.len();
            let mut fresh = vec![e];
            fresh.extend(members.iter().map(|&u| u.then(e, n)));
            for x in fresh {
                if closure.insert(x) {
                    members.push(x);
                }
            }
            let mut head = start;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for &g in &gens {
                    let y = x.then(g, n);
                    if closure.insert(y) {
                        members.push(y);
                    }
                }
            }
            if members.len() == self.elements.len() {
                return true;
            }
        }
        members.len() == self.elements.len()
    }
}

/// Enumerates `<G, t> \ G`: every product involving `t` at least once.
///
/// Breadth-first from `t`, multiplying on the left by group generators and
/// on the right by group generators and by `t`.
pub fn singular_part(
    group: &PermutationGroup,
    t: &Transformation,
    cap: usize,
) -> Result<TransformationSemigroup> {
    let n = group.degree();
    check_degree(n, t)?;
    if t.is_permutation() {
        return Err(Error::TIsPermutation);
    }
    let gens: Vec<Packed> = group.generators().iter().map(Packed::from_perm).collect();
    let pt = Packed::from_transformation(t);
    let mut set = FxHashSet::default();
    set.insert(pt);
    let mut elements = vec![pt];
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head];
        head += 1;
        let x_rank = x.rank(n);
        let candidates = gens
            .iter()
            .map(|&g| g.then(x, n))
            .chain(gens.iter().map(|&g| x.then(g, n)))
            .chain(std::iter::once(x.then(pt, n)));
        for y in candidates {
            debug_assert!(y.rank(n) <= x_rank);
            if set.insert(y) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                elements.push(y);
            }
        }
    }
    Ok(TransformationSemigroup {
        degree: n,
        elements,
        set,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn sym(n: usize) -> PermutationGroup {
        let cycle = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap();
        let swap = Permutation::from_cycles(n, &[vec![0, 1]]).unwrap();
        PermutationGroup::new(n, vec![cycle, swap]).unwrap()
    }

    #[test]
    fn s5_rank4_gives_all_singular_maps() {
        let t = Transformation::parse(5, "11345").unwrap();
        let s = singular_part(&sym(5), &t, 10_000).unwrap();
        assert_eq!(s.len(), 3125 - 120);
        // Idempotents of rank k: C(5,k) * k^(5-k).
        let expected: usize = [(5, 1), (10, 8), (10, 9), (5, 4)].iter().map(|(c, p)| c * p).sum();
        assert_eq!(s.idempotents().len(), expected);
        assert!(s.is_idempotent_generated());
    }

    #[test]
    fn trivial_group_idempotent() {
        let t = Transformation::parse(3, "113").unwrap();
        let s = singular_part(&PermutationGroup::trivial(3), &t, 10).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.is_idempotent_generated());
    }

    #[test]
    fn non_idempotent_alone() {
        // t swaps 1 and 2 and sends 3 to 2; t^3 = t and t^2 = 121 is the only idempotent.
        let t = Transformation::parse(3, "212").unwrap();
        let s = singular_part(&PermutationGroup::trivial(3), &t, 10).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.idempotents(), vec![Transformation::parse(3, "121").unwrap()]);
        assert!(!s.is_idempotent_generated());
    }

    #[test]
    fn permutation_rejected() {
        let t = Transformation::parse(3, "231").unwrap();
        assert_eq!(
            singular_part(&sym(3), &t, 10).unwrap_err(),
            Error::TIsPermutation
        );
    }

    #[test]
    fn cap_is_enforced() {
        let t = Transformation::parse(5, "11345").unwrap();
        assert_eq!(singular_part(&sym(5), &t, 100).unwrap_err(), Error::CapExceeded(100));
    }
}
