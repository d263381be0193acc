use std::collections::VecDeque;

use super::{GroupWithZero, ReesMatrixSemigroup0, SandwichMatrix, Triple};
use crate::error::{Error, Result};

/// One connected block of the normalised matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrahamBlock {
    /// Column indices (`I`), ascending.
    pub columns: Vec<usize>,
    /// Row indices (`Λ`), ascending.
    pub rows: Vec<usize>,
    /// Distinct nonzero entries of the normalised block, ascending.
    pub entries: Vec<usize>,
    /// Elements of the subgroup they generate, ascending.
    pub subgroup: Vec<usize>,
}

/// Normal form `q[λ][i] = v[λ] p[λ][i] u[i]`, with the identity on every
/// edge of a breadth-first spanning tree of each block.
#[derive(Debug, Clone)]
pub struct GrahamForm {
    /// `u[i]` for each column.
    pub column_multipliers: Vec<usize>,
    /// `v[λ]` for each row.
    pub row_multipliers: Vec<usize>,
    /// Columns listed block by block.
    pub column_order: Vec<usize>,
    /// Rows listed block by block.
    pub row_order: Vec<usize>,
    pub blocks: Vec<GrahamBlock>,
    /// Spanning-tree cells `(λ, i)`.
    pub tree_edges: Vec<(usize, usize)>,
    pub normalized: ReesMatrixSemigroup0,
}

impl GrahamForm {
    /// The isomorphism onto the normalised semigroup,
    /// `(i, g, λ) ↦ (i, u[i]⁻¹ g v[λ]⁻¹, λ)`.
    pub fn map(&self, x: Triple) -> Triple {
        let group = self.normalized.group();
        let g = group.mul(
            group.mul(group.inv(self.column_multipliers[x.i]), x.g),
            group.inv(self.row_multipliers[x.lambda]),
        );
        Triple { g, ..x }
    }

    pub fn map_element(&self, x: Option<Triple>) -> Option<Triple> {
        x.map(|t| self.map(t))
    }
}

pub fn graham_normal_form(rms: &ReesMatrixSemigroup0) -> Result<GrahamForm> {
    let graph = rms.connectivity_graph()?;
    let group: &GroupWithZero = rms.group();
    let matrix = rms.matrix();
    let (cols, rows) = (matrix.cols(), matrix.rows());
    let adjacency = graph.adjacency();
    let mut u = vec![GroupWithZero::IDENTITY; cols];
    let mut v = vec![GroupWithZero::IDENTITY; rows];
    let mut seen = vec![false; cols + rows];
    let mut tree_edges = Vec::new();
    for root in 0..cols {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &adjacency[x] {
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                if x < cols {
                    let (i, l) = (x, y - cols);
                    let p = matrix.get(l, i).expect("edge of a nonzero cell");
                    v[l] = group.inv(group.mul(p, u[i]));
                    tree_edges.push((l, i));
                } else {
                    let (l, i) = (x - cols, y);
                    let p = matrix.get(l, i).expect("edge of a nonzero cell");
                    u[i] = group.inv(group.mul(v[l], p));
                    tree_edges.push((l, i));
                }
                queue.push_back(y);
            }
        }
    }

    let mut normalized = SandwichMatrix::new(rows, cols, vec![None; rows * cols])?;
    for (l, i) in matrix.nonzero_cells() {
        let p = matrix.get(l, i).unwrap();
        normalized.set(l, i, Some(group.mul(group.mul(v[l], p), u[i])));
    }

    let components = graph.connected_components();
    let mut blocks = Vec::with_capacity(components.part_count());
    let (mut column_order, mut row_order) = (Vec::new(), Vec::new());
    for part in components.parts() {
        let columns: Vec<usize> = part.iter().copied().filter(|&x| x < cols).collect();
        let block_rows: Vec<usize> = part.iter().filter(|&&x| x >= cols).map(|&x| x - cols).collect();
        let mut entries: Vec<usize> = block_rows
            .iter()
            .flat_map(|&l| columns.iter().map(move |&i| (l, i)))
            .filter_map(|(l, i)| normalized.get(l, i))
            .collect();
        entries.sort_unstable();
        entries.dedup();
        let subgroup = group.generated_subgroup(&entries);
        column_order.extend(&columns);
        row_order.extend(&block_rows);
        blocks.push(GrahamBlock {
            columns,
            rows: block_rows,
            entries,
            subgroup,
        });
    }

    Ok(GrahamForm {
        column_multipliers: u,
        row_multipliers: v,
        column_order,
        row_order,
        blocks,
        tree_edges,
        normalized: ReesMatrixSemigroup0::new(group.clone(), normalized)?,
    })
}

/// Whether every nonzero entry of a normalised matrix is the identity.
///
/// The matrix must already be in the normal form this module computes.
pub fn entries_all_trivial(rms: &ReesMatrixSemigroup0) -> Result<bool> {
    let form = graham_normal_form(rms)?;
    if form.normalized.matrix() != rms.matrix() {
        return Err(Error::NotNormalized);
    }
    Ok(rms
        .matrix()
        .nonzero_cells()
        .all(|(l, i)| rms.matrix().get(l, i) == Some(GroupWithZero::IDENTITY)))
}
