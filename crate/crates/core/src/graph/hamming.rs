use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// Coordinates witnessing an isomorphism with the Hamming graph H(d, q):
/// `coords[v]` is the word assigned to vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HammingCertificate {
    pub q: usize,
    pub d: usize,
    pub coords: Vec<Vec<usize>>,
}

impl HammingCertificate {
    /// Checks the certificate against the graph: a bijection onto all words,
    /// with adjacency exactly at Hamming distance one.
    pub fn verify(&self, graph: &Graph) -> bool {
        let n = graph.vertex_count();
        if self.coords.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for w in &self.coords {
            if w.len() != self.d || w.iter().any(|&c| c >= self.q) {
                return false;
            }
            let idx = w.iter().fold(0, |acc, &c| acc * self.q + c);
            if std::mem::replace(&mut seen[idx], true) {
                return false;
            }
        }
        let adj = graph.adjacency();
        for a in 0..n {
            for b in a + 1..n {
                let dist = (0..self.d)
                    .filter(|&i| self.coords[a][i] != self.coords[b][i])
                    .count();
                if (dist == 1) != adj[a].binary_search(&b).is_ok() {
                    return false;
                }
            }
        }
        true
    }
}

/// H(d, q) with vertex `v` the base-`q` word of `v` (most significant first).
pub fn hamming_graph(q: usize, d: usize) -> Graph {
    let n = q.pow(d as u32);
    let mut edges = Vec::new();
    for v in 0..n {
        let mut place = 1;
        for _ in 0..d {
            let digit = (v / place) % q;
            for other in digit + 1..q {
                edges.push((v, v + (other - digit) * place));
            }
            place *= q;
        }
    }
    Graph::new(n, edges)
}

/// Decides whether `graph` is isomorphic to H(d, q).
///
/// After cheap regularity and common-neighbour filters, the lines through
/// vertex 0 are labelled, and every other vertex's word is forced by its
/// neighbours one step closer to vertex 0. Since the automorphism group of
/// H(d, q) acts transitively on such labellings, a single forced labelling
/// either verifies or refutes the isomorphism.
pub fn is_hamming_graph(graph: &Graph, q: usize, d: usize) -> Result<Option<HammingCertificate>> {
    if q < 2 || d < 1 {
        return Err(Error::InvalidArgument(format!("H({d},{q}) is not defined")));
    }
    let n = q
        .checked_pow(d as u32)
        .ok_or_else(|| Error::InvalidArgument(format!("H({d},{q}) is too large")))?;
    if graph.vertex_count() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: graph.vertex_count(),
        });
    }
    let adj = graph.adjacency();
    let degree = d * (q - 1);
    if adj.iter().any(|row| row.len() != degree) {
        return Ok(None);
    }
    let mut is_adj = vec![false; n * n];
    for &(a, b) in graph.edges() {
        is_adj[a * n + b] = true;
        is_adj[b * n + a] = true;
    }
    for a in 0..n {
        for b in a + 1..n {
            let common = adj[a].iter().filter(|&&c| is_adj[c * n + b]).count();
            let ok = if is_adj[a * n + b] {
                common == q - 2
            } else {
                common == 0 || common == 2
            };
            if !ok {
                return Ok(None);
            }
        }
    }

    // Lines through vertex 0: neighbours grouped by mutual adjacency.
    let mut coords: Vec<Option<Vec<usize>>> = vec![None; n];
    coords[0] = Some(vec![0; d]);
    let mut line_of = vec![usize::MAX; n];
    let mut lines = 0;
    for &v in &adj[0] {
        if line_of[v] != usize::MAX {
            continue;
        }
        if lines == d {
            return Ok(None);
        }
        let members: Vec<usize> = std::iter::once(v)
            .chain(adj[0].iter().copied().filter(|&w| is_adj[v * n + w]))
            .collect();
        if members.len() != q - 1 {
            return Ok(None);
        }
        for (value, &w) in members.iter().enumerate() {
            if line_of[w] != usize::MAX {
                return Ok(None);
            }
            line_of[w] = lines;
            let mut word = vec![0; d];
            word[lines] = value + 1;
            coords[w] = Some(word);
        }
        lines += 1;
    }

    let mut dist = vec![usize::MAX; n];
    dist[0] = 0;
    let mut queue = VecDeque::from([0]);
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if order.len() != n {
        return Ok(None);
    }
    for &w in &order {
        if dist[w] < 2 {
            continue;
        }
        let mut word = vec![0; d];
        for &u in &adj[w] {
            if dist[u] + 1 != dist[w] {
                continue;
            }
            let pred = coords[u].as_ref().expect("predecessor labelled first");
            for i in 0..d {
                if pred[i] != 0 {
                    if word[i] != 0 && word[i] != pred[i] {
                        return Ok(None);
                    }
                    word[i] = pred[i];
                }
            }
        }
        if word.iter().filter(|&&c| c != 0).count() != dist[w] {
            return Ok(None);
        }
        coords[w] = Some(word);
    }
    let cert = HammingCertificate {
        q,
        d,
        coords: coords.into_iter().map(|c| c.expect("all labelled")).collect(),
    };
    Ok(cert.verify(graph).then_some(cert))
}
