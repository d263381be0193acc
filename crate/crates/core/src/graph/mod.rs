//! Edge-set graphs, union-find connectivity, and Hamming-graph recognition.

mod hamming;

pub use hamming::{hamming_graph, is_hamming_graph, HammingCertificate};

use crate::perm::SetPartition;

/// Disjoint-set forest with path compression and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    classes: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            classes: n,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the classes of `a` and `b`; returns false if they were already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.classes -= 1;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Number of classes.
    pub fn class_count(&self) -> usize {
        self.classes
    }

    /// The classes as a canonical set partition.
    pub fn to_partition(&mut self) -> SetPartition {
        let labels: Vec<usize> = (0..self.len()).map(|x| self.find(x)).collect();
        SetPartition::from_labels(&labels)
    }
}

/// Simple undirected graph with a deduplicated edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, normalising each edge to `(min, max)` and dropping
    /// duplicates and self-loops.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut list: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|&(a, b)| a != b)
            .map(|(a, b)| {
                assert!(a < vertex_count && b < vertex_count, "edge endpoint out of range");
                (a.min(b), a.max(b))
            })
            .collect();
        list.sort_unstable();
        list.dedup();
        Graph {
            vertex_count,
            edges: list,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    fn union_find(&self) -> UnionFind {
        let mut uf = UnionFind::new(self.vertex_count);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        uf
    }

    /// A graph on at most one vertex is connected; otherwise every vertex must
    /// be reachable, so isolated vertices disconnect.
    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.union_find().class_count() == 1
    }

    pub fn connected_components(&self) -> SetPartition {
        self.union_find().to_partition()
    }
}

/// Bipartite graph with labelled left and right vertex sets.
#[derive(Debug, Clone)]
pub struct BipartiteGraph<L, R> {
    pub left: Vec<L>,
    pub right: Vec<R>,
    /// Pairs `(left index, right index)`.
    pub edges: Vec<(usize, usize)>,
}

impl<L, R> BipartiteGraph<L, R> {
    /// The same graph on `left.len() + right.len()` vertices, right side offset.
    pub fn as_graph(&self) -> Graph {
        let off = self.left.len();
        Graph::new(
            off + self.right.len(),
            self.edges.iter().map(|&(l, r)| (l, off + r)),
        )
    }

    pub fn is_connected(&self) -> bool {
        self.as_graph().is_connected()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_is_connected() {
        assert!(Graph::new(4, [(0, 1), (1, 2), (2, 3)]).is_connected());
    }

    #[test]
    fn two_edges_disconnected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]);
        assert!(!g.is_connected());
        assert_eq!(g.connected_components().parts(), &[vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn cycle_minus_vertex_edges_isolates() {
        let g = Graph::new(5, [(1, 2), (2, 3), (3, 4)]);
        assert!(!g.is_connected());
    }

    #[test]
    fn empty_graph_components_are_singletons() {
        let g = Graph::new(4, []);
        assert_eq!(g.connected_components().part_count(), 4);
        let complete = Graph::new(4, (0..4).flat_map(|a| (0..4).map(move |b| (a, b))));
        assert_eq!(complete.connected_components().part_count(), 1);
        assert_eq!(complete.edges().len(), 6);
    }

    #[test]
    fn union_find_counts() {
        let mut uf = UnionFind::new(6);
        assert!(uf.union(0, 3));
        assert!(uf.union(3, 5));
        assert!(!uf.union(0, 5));
        assert_eq!(uf.class_count(), 4);
        assert!(uf.same(0, 5));
        assert_eq!(uf.to_partition().parts()[0], vec![0, 3, 5]);
    }
}
