//! Builders for the groups of the test corpus.

pub mod field;
mod linear;
mod manifest;
mod recipe;

use crate::error::{Error, Result};
use crate::perm::{induced_action, ksubsets, KSubset, Permutation, PermutationGroup};

pub use crate::perm::io::load_group_file;
pub use field::GaloisField;
pub use linear::{
    affine_semilinear, agammal1, agl, agl1, asl, flag_action_psl3, m10, pgammal2, pgl2, psigmal2, psl2,
};
pub use manifest::{parse_manifest, Expectation, GroupSource, ManifestEntry, Property};
pub use recipe::{GroupSpec, Recipe};

fn cycle_on(n: usize, points: &[usize]) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    for (i, &p) in points.iter().enumerate() {
        images[p] = points[(i + 1) % points.len()];
    }
    Permutation::from_images(images).expect("a cycle is a permutation")
}

pub fn cyclic(n: usize) -> PermutationGroup {
    let all: Vec<usize> = (0..n).collect();
    PermutationGroup::new(n.max(1), vec![cycle_on(n.max(1), &all)])
        .expect("valid generator")
        .with_name(format!("C{n}"))
}

/// The dihedral group of order `2n` on `n` points.
pub fn dihedral(n: usize) -> Result<PermutationGroup> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("dihedral needs n >= 3, got {n}")));
    }
    let rotation = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect())?;
    let reflection = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
    Ok(PermutationGroup::new(n, vec![rotation, reflection])?.with_name(format!("D(2*{n})")))
}

pub fn symmetric(n: usize) -> PermutationGroup {
    let n = n.max(1);
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle_on(n, &(0..n).collect::<Vec<_>>()));
        gens.push(cycle_on(n, &[0, 1]));
    }
    PermutationGroup::new(n, gens).expect("valid generators").with_name(format!("S{n}"))
}

pub fn alternating(n: usize) -> PermutationGroup {
    let n = n.max(1);
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(cycle_on(n, &[0, 1, 2]));
        let long: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
        gens.push(cycle_on(n, &long));
    }
    PermutationGroup::new(n, gens).expect("valid generators").with_name(format!("A{n}"))
}

/// S_m wr S_2 in product action on `m x m` grid points `r*m + c`.
pub fn product_action_grid(m: usize) -> Result<PermutationGroup> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("grid needs m >= 2, got {m}")));
    }
    let n = m * m;
    let on_rows = |p: &Permutation| {
        Permutation::from_images((0..n).map(|x| p.apply(x / m) * m + x % m).collect())
    };
    let s = symmetric(m);
    let mut gens = s.generators().iter().map(on_rows).collect::<Result<Vec<_>>>()?;
    gens.push(Permutation::from_images((0..n).map(|x| (x % m) * m + x / m).collect())?);
    Ok(PermutationGroup::new(n, gens)?.with_name(format!("S{m} wr S2")))
}

/// The action on `k`-subsets, points numbered in lexicographic order.
pub fn action_on_ksets(group: &PermutationGroup, k: usize) -> Result<PermutationGroup> {
    let n = group.degree();
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("k = {k} on {n} points")));
    }
    let cells: Vec<KSubset> = ksubsets(n, k);
    let induced = induced_action(group, &cells, |s, g| s.image(g))?;
    let name = group.name().map(|s| format!("{s} on {k}-sets"));
    Ok(match name {
        Some(s) => induced.with_name(s),
        None => induced,
    })
}
