#![allow(dead_code)]

use std::path::PathBuf;

use idemgen::construct::{action_on_ksets, cyclic, dihedral, load_group_file, product_action_grid, symmetric};
use idemgen::PermutationGroup;

/// Library numbers and names of the bundled primitive groups of degree 5 to 10.
pub const PRIMITIVE: &[(usize, usize, &str)] = &[
    (5, 1, "C5"),
    (5, 2, "D(2*5)"),
    (5, 3, "AGL(1,5)"),
    (5, 4, "A5"),
    (5, 5, "S5"),
    (6, 1, "PSL(2,5)"),
    (6, 2, "PGL(2,5)"),
    (6, 3, "A6"),
    (6, 4, "S6"),
    (7, 1, "C7"),
    (7, 2, "D(2*7)"),
    (7, 3, "7:3"),
    (7, 4, "AGL(1,7)"),
    (7, 5, "L(3,2)"),
    (7, 6, "A7"),
    (7, 7, "S7"),
    (8, 1, "AGL(1,8)"),
    (8, 2, "AGammaL(1,8)"),
    (8, 3, "ASL(3,2)"),
    (8, 4, "PSL(2,7)"),
    (8, 5, "PGL(2,7)"),
    (8, 6, "A8"),
    (8, 7, "S8"),
    (9, 1, "3^2:4"),
    (9, 2, "3^2:D(2*4)"),
    (9, 3, "M9"),
    (9, 4, "AGL(1,9)"),
    (9, 5, "AGammaL(1,9)"),
    (9, 6, "3^2:(2'A4)"),
    (9, 7, "AGL(2,3)"),
    (9, 8, "PSL(2,8)"),
    (9, 9, "PGammaL(2,8)"),
    (9, 10, "A9"),
    (9, 11, "S9"),
    (10, 1, "A5"),
    (10, 2, "S5"),
    (10, 3, "PSL(2,9)"),
    (10, 4, "PGL(2,9)"),
    (10, 5, "PSigmaL(2,9)"),
    (10, 6, "M10"),
    (10, 7, "PGammaL(2,9)"),
    (10, 8, "A10"),
    (10, 9, "S10"),
];

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/groups")
}

pub fn data_file(name: &str) -> PermutationGroup {
    load_group_file(data_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// `PrimitiveGroup(n, i)` from the bundled data, named as in [`PRIMITIVE`].
pub fn prim(n: usize, i: usize) -> PermutationGroup {
    let name = PRIMITIVE
        .iter()
        .find(|&&(d, j, _)| d == n && j == i)
        .map_or_else(|| format!("prim {n}#{i}"), |e| e.2.to_string());
    data_file(&format!("prim_{n}_{i}.grp")).with_name(name)
}

pub fn prim_by_name(n: usize, name: &str) -> PermutationGroup {
    let &(_, i, _) = PRIMITIVE
        .iter()
        .find(|&&(d, _, s)| d == n && s == name)
        .unwrap_or_else(|| panic!("no {name} of degree {n}"));
    prim(n, i)
}

pub fn primitive_groups(degrees: std::ops::RangeInclusive<usize>) -> Vec<(usize, usize, PermutationGroup)> {
    PRIMITIVE
        .iter()
        .filter(|e| degrees.contains(&e.0))
        .map(|&(n, i, _)| (n, i, prim(n, i)))
        .collect()
}

/// Transitive imprimitive groups and a non-basic primitive group of degree at most 9.
pub fn non_primitive_extras() -> Vec<PermutationGroup> {
    vec![
        cyclic(4),
        cyclic(6),
        cyclic(8),
        cyclic(9),
        dihedral(6).unwrap(),
        dihedral(8).unwrap(),
        action_on_ksets(&symmetric(4), 2).unwrap().with_name("S4 on 2-sets"),
        product_action_grid(3).unwrap(),
    ]
}

pub fn label(g: &PermutationGroup) -> String {
    format!("{} (degree {})", g.name().unwrap_or("?"), g.degree())
}
