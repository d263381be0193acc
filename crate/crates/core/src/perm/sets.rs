use serde::Serialize;

use super::Permutation;

/// A k-subset of the points, stored in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct KSubset(Vec<usize>);

impl KSubset {
    /// Sorts and deduplicates `points`.
    pub fn new(mut points: Vec<usize>) -> Self {
        points.sort_unstable();
        points.dedup();
        KSubset(points)
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn image(&self, g: &Permutation) -> KSubset {
        KSubset::new(self.0.iter().map(|&x| g.apply(x)).collect())
    }

    /// True if the set meets every part of `p` exactly once.
    pub fn is_transversal_of(&self, p: &SetPartition) -> bool {
        self.len() == p.part_count() && is_section(&self.0, p.part_of())
    }

    /// Position in the lexicographic order of all k-subsets of `n` points.
    pub fn rank(&self, n: usize) -> usize {
        rank_ksubset(&self.0, n)
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }
}

/// True if `points` hit pairwise distinct parts (a partial section).
pub fn is_section(points: &[usize], part_of: &[usize]) -> bool {
    let mut seen = 0u128;
    for &x in points {
        let bit = 1u128 << part_of[x];
        if seen & bit != 0 {
            return false;
        }
        seen |= bit;
    }
    true
}

/// A partition of `0..n` in canonical form: parts ordered by least element,
/// points ascending within a part. `part_of` is the restricted growth string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    part_of: Vec<usize>,
    parts: Vec<Vec<usize>>,
}

impl Serialize for SetPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl SetPartition {
    /// Canonicalises an arbitrary labelling: points with equal labels share a part.
    pub fn from_labels<T: PartialEq + Copy>(labels: &[T]) -> Self {
        let mut seen: Vec<T> = Vec::new();
        let mut part_of = Vec::with_capacity(labels.len());
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for (x, &l) in labels.iter().enumerate() {
            let idx = match seen.iter().position(|&s| s == l) {
                Some(i) => i,
                None => {
                    seen.push(l);
                    parts.push(Vec::new());
                    seen.len() - 1
                }
            };
            part_of.push(idx);
            parts[idx].push(x);
        }
        SetPartition { part_of, parts }
    }

    /// From a restricted growth string. Panics if `rgs` is not one.
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for (x, &p) in rgs.iter().enumerate() {
            if p == parts.len() {
                parts.push(Vec::new());
            }
            assert!(p < parts.len(), "not a restricted growth string");
            parts[p].push(x);
        }
        SetPartition {
            part_of: rgs.to_vec(),
            parts,
        }
    }

    /// From explicit parts covering `0..n` exactly once.
    pub fn from_parts(n: usize, parts: &[Vec<usize>]) -> Option<Self> {
        let mut labels = vec![usize::MAX; n];
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return None;
            }
            for &x in part {
                if x >= n || labels[x] != usize::MAX {
                    return None;
                }
                labels[x] = i;
            }
        }
        if labels.contains(&usize::MAX) {
            return None;
        }
        Some(SetPartition::from_labels(&labels))
    }

    pub fn degree(&self) -> usize {
        self.part_of.len()
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn part_of(&self) -> &[usize] {
        &self.part_of
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn part_containing(&self, x: usize) -> &[usize] {
        &self.parts[self.part_of[x]]
    }

    pub fn image(&self, g: &Permutation) -> SetPartition {
        let mut labels = vec![0; self.degree()];
        for (x, &p) in self.part_of.iter().enumerate() {
            labels[g.apply(x)] = p;
        }
        SetPartition::from_labels(&labels)
    }

    /// True if every part of `self` lies inside a part of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        self.parts
            .iter()
            .all(|part| part.iter().all(|&x| other.part_of[x] == other.part_of[part[0]]))
    }

    pub fn to_one_based(&self) -> Vec<Vec<usize>> {
        self.parts
            .iter()
            .map(|p| p.iter().map(|x| x + 1).collect())
            .collect()
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).unwrap_or(usize::MAX)
}

/// Stirling number of the second kind, saturating.
pub fn stirling2(n: usize, k: usize) -> u128 {
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=k).rev() {
            row[j] = row[j - 1].saturating_add((j as u128).saturating_mul(row[j]));
        }
        row[0] = 0;
    }
    row[k]
}

/// Lexicographic rank of a sorted k-subset of `0..n`.
pub fn rank_ksubset(set: &[usize], n: usize) -> usize {
    let k = set.len();
    let mut rank = 0;
    let mut prev = 0;
    for (i, &x) in set.iter().enumerate() {
        for skipped in prev..x {
            rank += binomial(n - skipped - 1, k - i - 1);
        }
        prev = x + 1;
    }
    rank
}

/// All k-subsets of `0..n` in lexicographic order.
pub fn ksubsets(n: usize, k: usize) -> Vec<KSubset> {
    let mut out = Vec::with_capacity(binomial(n, k));
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(KSubset(cur.clone()));
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Calls `f` with the restricted growth string of every partition of `0..n`
/// into exactly `k` parts, in lexicographic order. Stops early when `f`
/// returns false; the return value says whether the scan completed.
pub fn for_each_k_partition(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k == 0 || k > n {
        return n == 0 && k == 0 && f(&[]);
    }
    let mut rgs = vec![0usize; n];
    fn rec(
        pos: usize,
        used: usize,
        n: usize,
        k: usize,
        rgs: &mut [usize],
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if pos == n {
            return used != k || f(rgs);
        }
        // Remaining points must be able to open the missing parts.
        if k - used > n - pos {
            return true;
        }
        let top = if used < k { used + 1 } else { used };
        for v in 0..top {
            rgs[pos] = v;
            if !rec(pos + 1, used.max(v + 1), n, k, rgs, f) {
                return false;
            }
        }
        true
    }
    rgs[0] = 0;
    rec(1, 1, n, k, &mut rgs, &mut f)
}

/// All partitions of `0..n` into exactly `k` parts, in RGS order.
pub fn k_partitions(n: usize, k: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    for_each_k_partition(n, k, |rgs| {
        out.push(SetPartition::from_rgs(rgs));
        true
    });
    out
}

/// All ordered `len`-tuples of distinct points of `0..n`, lexicographically.
pub fn distinct_tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(n: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !cur.contains(&x) {
                cur.push(x);
                rec(n, len, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, len, &mut cur, &mut out);
    out
}
