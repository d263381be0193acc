//! Finite Rees 0-matrix semigroups over permutation groups.
//!
//! Elements are triples `(i, g, λ)` with `i` a column index, `λ` a row
//! index and `g` a group element, together with an explicit zero. The
//! sandwich matrix is stored row-major with rows indexed by `Λ`:
//!
//! ```text
//! (i, g, λ)(j, h, μ) = (i, g p[λ][j] h, μ)   if p[λ][j] != 0
//!                    = 0                     otherwise
//! ```

mod brute;
mod graham;
mod io;
mod principal;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{Permutation, PermutationGroup};

pub use brute::rms_brute_idempotent_generated;
pub use graham::{entries_all_trivial, graham_normal_form, GrahamBlock, GrahamForm};
pub use io::{parse_rms, write_rms};
pub use principal::{principal_factor, PrincipalFactor};

/// A finite permutation group with its full multiplication table, extended
/// by a zero. Elements are indices into [`GroupWithZero::elements`] with the
/// identity at index 0; `None` is the zero.
#[derive(Debug, Clone)]
pub struct GroupWithZero {
    group: PermutationGroup,
    elements: Vec<Permutation>,
    index: FxHashMap<Permutation, usize>,
    table: Vec<usize>,
    inverses: Vec<usize>,
}

impl GroupWithZero {
    /// Fails with `CapExceeded` when the multiplication table would have
    /// more than `cap` cells.
    pub fn new(group: PermutationGroup, cap: usize) -> Result<Self> {
        let elements = group.elements(cap)?;
        if elements.len().saturating_mul(elements.len()) > cap {
            return Err(Error::CapExceeded(cap));
        }
        let index: FxHashMap<Permutation, usize> =
            elements.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        let m = elements.len();
        let mut table = Vec::with_capacity(m * m);
        for a in &elements {
            for b in &elements {
                table.push(index[&a.compose(b)]);
            }
        }
        let inverses = elements.iter().map(|g| index[&g.inverse()]).collect();
        Ok(GroupWithZero {
            group,
            elements,
            index,
            table,
            inverses,
        })
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, g: usize) -> &Permutation {
        &self.elements[g]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub const IDENTITY: usize = 0;

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b]
    }

    pub fn mul_with_zero(&self, a: Option<usize>, b: Option<usize>) -> Option<usize> {
        Some(self.mul(a?, b?))
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Elements of the subgroup generated by `gens`, sorted.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[Self::IDENTITY] = true;
        let mut out = vec![Self::IDENTITY];
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Entries of a sandwich matrix, rows indexed by `Λ` and columns by `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Option<usize>>,
}

impl SandwichMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Option<usize>>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::SizeMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(SandwichMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::SizeMismatch {
                expected: c,
                found: bad.len(),
            });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Number of rows, `|Λ|`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns, `|I|`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, lambda: usize, i: usize) -> Option<usize> {
        self.entries[lambda * self.cols + i]
    }

    pub fn set(&mut self, lambda: usize, i: usize, value: Option<usize>) {
        self.entries[lambda * self.cols + i] = value;
    }

    /// Every row and every column has a nonzero entry.
    pub fn is_regular(&self) -> bool {
        let mut row_ok = vec![false; self.rows];
        let mut col_ok = vec![false; self.cols];
        for l in 0..self.rows {
            for i in 0..self.cols {
                if self.get(l, i).is_some() {
                    row_ok[l] = true;
                    col_ok[i] = true;
                }
            }
        }
        self.rows > 0 && self.cols > 0 && row_ok.into_iter().chain(col_ok).all(|b| b)
    }

    /// Nonzero cells as `(λ, i)`, row-major.
    pub fn nonzero_cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows)
            .flat_map(move |l| (0..self.cols).map(move |i| (l, i)))
            .filter(|&(l, i)| self.get(l, i).is_some())
    }
}

/// A nonzero element `(i, g, λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub i: usize,
    pub g: usize,
    pub lambda: usize,
}

#[derive(Debug, Clone)]
pub struct ReesMatrixSemigroup0 {
    group: GroupWithZero,
    matrix: SandwichMatrix,
}

impl ReesMatrixSemigroup0 {
    pub fn new(group: GroupWithZero, matrix: SandwichMatrix) -> Result<Self> {
        if let Some(&bad) = matrix.entries.iter().flatten().find(|&&g| g >= group.order()) {
            return Err(Error::InvalidArgument(format!("entry {bad} is not a group element")));
        }
        Ok(ReesMatrixSemigroup0 { group, matrix })
    }

    /// Builds the matrix from permutation entries, which must lie in `group`.
    pub fn from_permutations(group: GroupWithZero, rows: &[Vec<Option<Permutation>>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        None => Ok(None),
                        Some(p) => group.index_of(p).map(Some).ok_or_else(|| {
                            Error::InvalidArgument(format!("entry {p:?} is not in the group"))
                        }),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, SandwichMatrix::from_rows(rows)?)
    }

    pub fn group(&self) -> &GroupWithZero {
        &self.group
    }

    pub fn matrix(&self) -> &SandwichMatrix {
        &self.matrix
    }

    /// `|I|`.
    pub fn column_count(&self) -> usize {
        self.matrix.cols
    }

    /// `|Λ|`.
    pub fn row_count(&self) -> usize {
        self.matrix.rows
    }

    /// Number of nonzero elements.
    pub fn nonzero_count(&self) -> usize {
        self.matrix.cols * self.group.order() * self.matrix.rows
    }

    pub fn multiply(&self, x: Option<Triple>, y: Option<Triple>) -> Option<Triple> {
        let (x, y) = (x?, y?);
        let p = self.matrix.get(x.lambda, y.i)?;
        Some(Triple {
            i: x.i,
            g: self.group.mul(self.group.mul(x.g, p), y.g),
            lambda: y.lambda,
        })
    }

    pub fn is_idempotent(&self, x: Triple) -> bool {
        self.multiply(Some(x), Some(x)) == Some(x)
    }

    pub fn is_regular(&self) -> bool {
        self.matrix.is_regular()
    }

    fn require_regular(&self) -> Result<()> {
        if self.is_regular() {
            Ok(())
        } else {
            Err(Error::NotRegular)
        }
    }

    /// Bipartite incidence graph of the nonzero cells: vertices `0..|I|` are
    /// the columns and `|I| + λ` the rows.
    pub fn connectivity_graph(&self) -> Result<Graph> {
        self.require_regular()?;
        let c = self.matrix.cols;
        Ok(Graph::new(
            c + self.matrix.rows,
            self.matrix.nonzero_cells().map(|(l, i)| (i, c + l)),
        ))
    }

    pub fn is_connected(&self) -> Result<bool> {
        Ok(self.connectivity_graph()?.is_connected())
    }

    /// Connected and the entries of the normalised matrix generate the group.
    pub fn is_idempotent_generated(&self) -> Result<bool> {
        let form = graham_normal_form(self)?;
        Ok(form.blocks.len() == 1 && form.blocks[0].subgroup.len() == self.group.order())
    }
}

pub fn connectivity_graph(rms: &ReesMatrixSemigroup0) -> Result<Graph> {
    rms.connectivity_graph()
}

pub fn is_connected_rms(rms: &ReesMatrixSemigroup0) -> Result<bool> {
    rms.is_connected()
}

pub fn is_idempotent_generated_rms(rms: &ReesMatrixSemigroup0) -> Result<bool> {
    rms.is_idempotent_generated()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn s2() -> GroupWithZero {
        let g = PermutationGroup::new(2, vec![Permutation::from_images(vec![1, 0]).unwrap()]).unwrap();
        GroupWithZero::new(g, 10).unwrap()
    }

    pub(crate) fn trivial() -> GroupWithZero {
        GroupWithZero::new(PermutationGroup::trivial(1), 10).unwrap()
    }

    pub(crate) fn rms(group: GroupWithZero, rows: Vec<Vec<Option<usize>>>) -> ReesMatrixSemigroup0 {
        ReesMatrixSemigroup0::new(group, SandwichMatrix::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn group_table() {
        let g = s2();
        assert_eq!(g.order(), 2);
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.inv(1), 1);
        assert_eq!(g.generated_subgroup(&[]), vec![0]);
        assert_eq!(g.generated_subgroup(&[1]), vec![0, 1]);
    }

    #[test]
    fn connectivity_examples() {
        let all = rms(trivial(), vec![vec![Some(0), Some(0)], vec![Some(0), Some(0)]]);
        assert!(all.is_connected().unwrap());
        let diag = rms(trivial(), vec![vec![Some(0), None], vec![None, Some(0)]]);
        assert!(!diag.is_connected().unwrap());
        assert_eq!(diag.connectivity_graph().unwrap().connected_components().part_count(), 2);
        let bad = rms(trivial(), vec![vec![Some(0), None], vec![None, None]]);
        assert_eq!(bad.is_connected(), Err(Error::NotRegular));
    }

    #[test]
    fn product_rule() {
        let r = rms(s2(), vec![vec![Some(1), None], vec![Some(0), Some(0)]]);
        let x = Triple { i: 1, g: 0, lambda: 0 };
        let y = Triple { i: 0, g: 0, lambda: 1 };
        assert_eq!(r.multiply(Some(x), Some(y)), Some(Triple { i: 1, g: 1, lambda: 1 }));
        assert_eq!(r.multiply(Some(x), Some(Triple { i: 1, g: 0, lambda: 0 })), None);
        assert_eq!(r.multiply(None, Some(y)), None);
    }
}
