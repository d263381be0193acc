use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_hamming_graph, Graph};
use crate::perm::{KSubset, PermutationGroup};

/// A union of 2-set orbits forming a Hamming graph H(d, q).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartesianWitness {
    pub q: usize,
    pub d: usize,
    /// Representatives of the 2-set orbits making up the graph.
    pub orbit_reps: Vec<KSubset>,
    /// Set when the alphabet has two letters.
    pub binary_alphabet: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicReport {
    pub verdict: bool,
    pub witness: Option<CartesianWitness>,
}

/// Factorisations `n = q^d` with `d >= 2`, by increasing `q`.
fn perfect_powers(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for q in 2..n {
        let (mut p, mut d) = (q * q, 2);
        while p < n {
            p *= q;
            d += 1;
        }
        if p == n {
            out.push((q, d));
        }
        if q * q > n {
            break;
        }
    }
    out
}

/// Whether a primitive group preserves no Cartesian power structure.
///
/// For every factorisation `n = q^d` (`d >= 2`), each union of 2-set orbits
/// whose valency is `d(q-1)` is tested for being a Hamming graph.
pub fn is_basic(group: &PermutationGroup) -> Result<BasicReport> {
    if !group.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let n = group.degree();
    let factorisations = perfect_powers(n);
    if factorisations.is_empty() {
        return Ok(BasicReport {
            verdict: true,
            witness: None,
        });
    }
    let orbits = group.orbits_on_ksets(2);
    let valency: Vec<usize> = orbits.iter().map(|o| 2 * o.len() / n).collect();
    for (q, d) in factorisations {
        let target = d * (q - 1);
        let mut chosen = Vec::new();
        if let Some(found) = search(&orbits, &valency, 0, target, &mut chosen, n, q, d)? {
            return Ok(BasicReport {
                verdict: false,
                witness: Some(CartesianWitness {
                    q,
                    d,
                    orbit_reps: found.iter().map(|&i| orbits[i][0].clone()).collect(),
                    binary_alphabet: q == 2,
                }),
            });
        }
    }
    Ok(BasicReport {
        verdict: true,
        witness: None,
    })
}

#[allow(clippy::too_many_arguments)]
fn search(
    orbits: &[Vec<KSubset>],
    valency: &[usize],
    from: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
    n: usize,
    q: usize,
    d: usize,
) -> Result<Option<Vec<usize>>> {
    if remaining == 0 {
        let edges = chosen.iter().flat_map(|&i| {
            orbits[i]
                .iter()
                .map(|s| (s.elements()[0], s.elements()[1]))
        });
        let graph = Graph::new(n, edges);
        return Ok(is_hamming_graph(&graph, q, d)?.map(|_| chosen.clone()));
    }
    for i in from..orbits.len() {
        if valency[i] <= remaining {
            chosen.push(i);
            if let Some(found) = search(orbits, valency, i + 1, remaining - valency[i], chosen, n, q, d)? {
                return Ok(Some(found));
            }
            chosen.pop();
        }
    }
    Ok(None)
}
