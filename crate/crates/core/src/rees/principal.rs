use super::{GroupWithZero, ReesMatrixSemigroup0, SandwichMatrix, Triple};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::{KSubset, Orbit, Permutation, PermutationGroup, SetPartition};
use crate::tsemi::Transformation;

/// The rank-`k` principal factor restricted to the orbits of `ker t` and
/// `im t`, with coordinates for the maps it describes.
///
/// A map with kernel `partitions[i]` and image `ksets[λ]` sending part `j`
/// to the `g[j]`-th smallest image point has coordinates `(i, g, λ)`. The
/// entry `p[λ][i]` sends each position of `ksets[λ]` to the index of the
/// part of `partitions[i]` containing that point, and is zero when
/// `ksets[λ]` is not a transversal.
#[derive(Debug, Clone)]
pub struct PrincipalFactor {
    pub rank: usize,
    pub partitions: Vec<SetPartition>,
    pub ksets: Vec<KSubset>,
    pub rms: ReesMatrixSemigroup0,
}

fn symmetric_group(k: usize) -> PermutationGroup {
    let mut gens = Vec::new();
    if k >= 2 {
        gens.push(Permutation::from_images((0..k).map(|i| (i + 1) % k).collect()).unwrap());
        let mut swap: Vec<usize> = (0..k).collect();
        swap.swap(0, 1);
        gens.push(Permutation::from_images(swap).unwrap());
    }
    PermutationGroup::new(k, gens).unwrap()
}

fn sorted_orbit<T, F>(group: &PermutationGroup, seed: T, act: F, cap: usize) -> Result<Vec<T>>
where
    T: Clone + Eq + std::hash::Hash + Ord,
    F: Fn(&T, &Permutation) -> T,
{
    let mut members = Orbit::new(group, seed, act, cap)?.members().to_vec();
    members.sort();
    Ok(members)
}

pub fn principal_factor(group: &PermutationGroup, t: &Transformation, budget: &Budget) -> Result<PrincipalFactor> {
    let n = group.degree();
    if t.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: t.degree(),
        });
    }
    if t.is_permutation() {
        return Err(Error::TIsPermutation);
    }
    let k = t.rank();
    let partitions = sorted_orbit(group, t.kernel(), |p, g| p.image(g), budget.orbit_cap)?;
    let ksets = sorted_orbit(group, t.image_set(), |s, g| s.image(g), budget.orbit_cap)?;
    let sym = GroupWithZero::new(symmetric_group(k), budget.semigroup_cap)?;
    let mut matrix = SandwichMatrix::new(ksets.len(), partitions.len(), vec![None; ksets.len() * partitions.len()])?;
    for (l, s) in ksets.iter().enumerate() {
        for (i, p) in partitions.iter().enumerate() {
            if s.is_transversal_of(p) {
                let to_part: Vec<usize> = s.elements().iter().map(|&x| p.part_of()[x]).collect();
                let entry = Permutation::from_images(to_part).expect("transversal meets every part once");
                matrix.set(l, i, sym.index_of(&entry));
            }
        }
    }
    Ok(PrincipalFactor {
        rank: k,
        partitions,
        ksets,
        rms: ReesMatrixSemigroup0::new(sym, matrix)?,
    })
}

impl PrincipalFactor {
    /// Coordinates of a rank-`k` map, or `None` when its kernel or image
    /// lies outside the chosen orbits.
    pub fn coordinates(&self, f: &Transformation) -> Result<Option<Triple>> {
        if f.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: f.rank(),
            });
        }
        let kernel = f.kernel();
        let image = f.image_set();
        let (Ok(i), Ok(lambda)) = (self.partitions.binary_search(&kernel), self.ksets.binary_search(&image)) else {
            return Ok(None);
        };
        let positions: Vec<usize> = kernel
            .parts()
            .iter()
            .map(|part| image.elements().binary_search(&f.apply(part[0])).unwrap())
            .collect();
        let g = Permutation::from_images(positions).expect("rank k map");
        Ok(Some(Triple {
            i,
            g: self.rms.group().index_of(&g).expect("S_k contains every permutation"),
            lambda,
        }))
    }

    pub fn transformation(&self, x: Triple) -> Transformation {
        Transformation::from_kernel_image(
            &self.partitions[x.i],
            &self.ksets[x.lambda],
            self.rms.group().element(x.g).images(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tsemi::singular_part;

    fn cyclic(n: usize) -> PermutationGroup {
        PermutationGroup::new(
            n,
            vec![Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn c4_rank_two_factors() {
        // Both images {0,2} and {1,3} cut both kernels: every cell is nonzero.
        let t = Transformation::from_images(vec![0, 0, 2, 2]).unwrap();
        let pf = principal_factor(&cyclic(4), &t, &Budget::default()).unwrap();
        assert_eq!(pf.partitions.len(), 2);
        assert_eq!(pf.ksets.len(), 2);
        assert!(pf.rms.is_connected().unwrap());
        assert!(pf.rms.is_idempotent_generated().unwrap());
        assert!(singular_part(&cyclic(4), &t, 1 << 20).unwrap().is_idempotent_generated());

        let t = Transformation::from_images(vec![0, 0, 1, 1]).unwrap();
        let pf = principal_factor(&cyclic(4), &t, &Budget::default()).unwrap();
        assert_eq!(pf.ksets.len(), 4);
        assert_eq!(pf.rms.connectivity_graph().unwrap().connected_components().part_count(), 2);
        assert!(!singular_part(&cyclic(4), &t, 1 << 20).unwrap().is_idempotent_generated());
    }

    #[test]
    fn star_product_matches() {
        let g = cyclic(5);
        let t = Transformation::from_images(vec![0, 0, 1, 1, 1]).unwrap();
        let pf = principal_factor(&g, &t, &Budget::default()).unwrap();
        let (m, rows) = (pf.rms.group().order(), pf.ksets.len());
        let all: Vec<Triple> = (0..pf.partitions.len())
            .flat_map(|i| (0..m).flat_map(move |g| (0..rows).map(move |lambda| Triple { i, g, lambda })))
            .collect();
        for &x in &all {
            let fx = pf.transformation(x);
            assert_eq!(pf.coordinates(&fx).unwrap(), Some(x));
            for &y in &all {
                let prod = fx.compose(&pf.transformation(y));
                let expected = if prod.rank() == 2 {
                    pf.coordinates(&prod).unwrap()
                } else {
                    None
                };
                assert_eq!(pf.rms.multiply(Some(x), Some(y)), expected);
            }
        }
    }

    #[test]
    fn rank_one_factor() {
        let t = Transformation::from_images(vec![2, 2, 2]).unwrap();
        let pf = principal_factor(&cyclic(3), &t, &Budget::default()).unwrap();
        assert_eq!((pf.rms.row_count(), pf.rms.column_count()), (3, 1));
        assert_eq!(pf.rms.group().order(), 1);
        assert!(pf.rms.matrix().nonzero_cells().count() == 3);
    }
}

