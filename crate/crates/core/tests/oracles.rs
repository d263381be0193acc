//! Library verdicts against direct enumerations that share no code with them.

mod common;

use common::{label, non_primitive_extras, primitive_groups};
use idemgen::perm::{distinct_tuples, k_partitions, ksubsets, KSubset, SetPartition};
use idemgen::props::{has_k_ut, has_road_closure, has_strong_k_ut};
use idemgen::tsemi::{has_k_id, rank_k_map_reps, singular_part, singular_part_is_idempotent_generated};
use idemgen::{Budget, Permutation, PermutationGroup, Transformation};

const CAP: usize = 1 << 22;

fn elements(g: &PermutationGroup) -> Vec<Permutation> {
    g.elements(CAP).unwrap()
}

fn image(set: &[usize], g: &Permutation) -> Vec<usize> {
    set.iter().map(|&x| g.apply(x)).collect()
}

fn is_section(points: &[usize], p: &SetPartition) -> bool {
    let mut hit = vec![false; p.part_count()];
    for &x in points {
        let part = p.part_of()[x];
        if hit[part] {
            return false;
        }
        hit[part] = true;
    }
    hit.iter().all(|&h| h)
}

fn brute_kut(g: &PermutationGroup, k: usize) -> bool {
    let els = elements(g);
    let parts = k_partitions(g.degree(), k);
    ksubsets(g.degree(), k)
        .iter()
        .all(|s| parts.iter().all(|p| els.iter().any(|h| is_section(&image(s.elements(), h), p))))
}

fn brute_strong_kut(g: &PermutationGroup, k: usize) -> bool {
    let els = elements(g);
    let parts = k_partitions(g.degree(), k);
    distinct_tuples(g.degree(), k + 1).iter().all(|a| {
        parts.iter().all(|p| {
            els.iter().any(|h| {
                let img = image(a, h);
                is_section(&img[..k], p) && p.part_of()[img[0]] == p.part_of()[img[k]]
            })
        })
    })
}

/// Smallest block of the action `gens` on `0..m` containing `seed`.
fn block_generated(gens: &[Vec<usize>], m: usize, seed: &[usize]) -> Vec<usize> {
    fn find(label: &mut [usize], mut x: usize) -> usize {
        while label[x] != x {
            x = label[x];
        }
        x
    }
    let mut label: Vec<usize> = (0..m).collect();
    for &x in &seed[1..] {
        let (a, b) = (find(&mut label, x), find(&mut label, seed[0]));
        label[a] = b;
    }
    loop {
        let mut changed = false;
        for x in 0..m {
            let rx = find(&mut label, x);
            for s in gens {
                let (a, c) = (find(&mut label, s[x]), find(&mut label, s[rx]));
                if a != c {
                    label[a] = c;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let root = find(&mut label, seed[0]);
    (0..m).filter(|&x| find(&mut label, x) == root).collect()
}

/// Every proper block of `g` acting on `cells` that contains cell 0.
fn blocks_through_first(g: &PermutationGroup, cells: &[KSubset]) -> Vec<Vec<usize>> {
    let gens: Vec<Vec<usize>> = g
        .generators()
        .iter()
        .map(|s| cells.iter().map(|c| cells.iter().position(|d| *d == c.image(s)).unwrap()).collect())
        .collect();
    let m = cells.len();
    let mut out: Vec<Vec<usize>> = vec![vec![0]];
    let mut head = 0;
    while head < out.len() {
        let b = out[head].clone();
        head += 1;
        for x in (0..m).filter(|x| !b.contains(x)) {
            let mut seed = b.clone();
            seed.push(x);
            let c = block_generated(&gens, m, &seed);
            if c.len() < m && !out.contains(&c) {
                out.push(c);
            }
        }
    }
    out
}

fn connected_without(n: usize, cells: &[KSubset], removed: &[usize]) -> bool {
    let mut label: Vec<usize> = (0..n).collect();
    fn find(label: &mut [usize], mut x: usize) -> usize {
        while label[x] != x {
            x = label[x];
        }
        x
    }
    for (i, c) in cells.iter().enumerate() {
        if !removed.contains(&i) {
            let (a, b) = (find(&mut label, c.elements()[0]), find(&mut label, c.elements()[1]));
            label[a] = b;
        }
    }
    let r = find(&mut label, 0);
    (0..n).all(|x| find(&mut label, x) == r)
}

/// Road closure straight from the definition: every maximal block of every
/// 2-set orbit leaves a connected graph behind.
fn brute_road_closure(g: &PermutationGroup) -> bool {
    g.orbits_on_ksets(2).iter().all(|orbit| {
        let blocks = blocks_through_first(g, orbit);
        let maximal = blocks
            .iter()
            .filter(|b| !blocks.iter().any(|c| c.len() > b.len() && b.iter().all(|x| c.contains(x))));
        maximal.into_iter().all(|b| connected_without(g.degree(), orbit, b))
    })
}

fn small_corpus() -> Vec<PermutationGroup> {
    let mut groups: Vec<PermutationGroup> = primitive_groups(5..=7).into_iter().map(|e| e.2).collect();
    groups.extend(non_primitive_extras().into_iter().filter(|g| g.degree() <= 8));
    groups
}

#[test]
fn kut_matches_enumeration() {
    let budget = Budget::default();
    for g in small_corpus() {
        for k in 2..=3.min(g.degree() - 1) {
            assert_eq!(has_k_ut(&g, k, &budget).unwrap().verdict, brute_kut(&g, k), "{} k={k}", label(&g));
        }
    }
}

#[test]
fn kut_witnesses_are_genuine() {
    let budget = Budget::default();
    for g in small_corpus() {
        let r = has_k_ut(&g, 3, &budget).unwrap();
        if let Some(w) = r.witness {
            assert!(elements(&g).iter().all(|h| !is_section(&image(w.kset.elements(), h), &w.partition)));
        }
    }
}

#[test]
fn strong_kut_matches_enumeration() {
    let budget = Budget::default();
    for g in small_corpus() {
        for k in 2..=3.min(g.degree() / 2) {
            let r = has_strong_k_ut(&g, k, &budget).unwrap();
            assert_eq!(r.verdict, brute_strong_kut(&g, k), "{} k={k}", label(&g));
        }
    }
}

#[test]
fn road_closure_matches_definition() {
    let budget = Budget::default();
    let mut groups: Vec<PermutationGroup> = primitive_groups(5..=10).into_iter().map(|e| e.2).collect();
    groups.extend(non_primitive_extras());
    for g in groups {
        let r = has_road_closure(&g, &budget).unwrap();
        assert_eq!(r.verdict, brute_road_closure(&g), "{}", label(&g));
    }
}

/// For transitive groups road closure is 2-id, which is decided by
/// semigroup closure with no graph in sight.
#[test]
fn road_closure_matches_two_id() {
    let budget = Budget::default();
    let mut groups: Vec<PermutationGroup> = primitive_groups(5..=10).into_iter().map(|e| e.2).collect();
    groups.extend(non_primitive_extras());
    for g in groups {
        let road = has_road_closure(&g, &budget).unwrap().verdict;
        let id = has_k_id(&g, 2, &budget).unwrap().verdict;
        assert_eq!(road, id, "{}", label(&g));
    }
}

fn all_rank_k_maps(n: usize, k: usize) -> Vec<Transformation> {
    let mut out = Vec::new();
    let mut images = vec![0usize; n];
    loop {
        let t = Transformation::from_images(images.clone()).unwrap();
        if t.rank() == k {
            out.push(t);
        }
        let Some(i) = (0..n).rev().find(|&i| images[i] + 1 < n) else {
            return out;
        };
        images[i] += 1;
        for x in &mut images[i + 1..] {
            *x = 0;
        }
    }
}

/// Orbits of `t ↦ g t h` counted by brute force.
fn double_coset_count(g: &PermutationGroup, k: usize) -> usize {
    let els = elements(g);
    let maps = all_rank_k_maps(g.degree(), k);
    let mut seen = std::collections::HashSet::new();
    let mut count = 0;
    for t in &maps {
        if seen.contains(t) {
            continue;
        }
        count += 1;
        for a in &els {
            for b in &els {
                seen.insert(Transformation::perm_then(a, &t.then_perm(b)));
            }
        }
    }
    count
}

#[test]
fn map_representatives_count_double_cosets() {
    let budget = Budget::default();
    for (_, _, g) in primitive_groups(5..=5).into_iter().chain(primitive_groups(6..=6).into_iter().take(2)) {
        for k in 2..g.degree() {
            let reps = rank_k_map_reps(&g, k, &budget).unwrap();
            assert_eq!(reps.len(), double_coset_count(&g, k), "{} k={k}", label(&g));
            assert!(reps.iter().all(|t| t.rank() == k));
        }
    }
}

#[test]
fn full_singular_part_of_s5() {
    // A rank-4 map and S5 generate every singular map: 5^5 - 5! of them.
    let g = idemgen::construct::symmetric(5);
    let t = Transformation::parse(5, "11234").unwrap();
    let s = singular_part(&g, &t, CAP).unwrap();
    assert_eq!(s.len(), 3005);
    assert!(s.is_idempotent_generated());
}

#[test]
fn layer_verdict_matches_full_closure() {
    let budget = Budget::default();
    let mut groups: Vec<PermutationGroup> = primitive_groups(5..=7)
        .into_iter()
        .filter(|e| e.0 < 7 || e.1 <= 5)
        .map(|e| e.2)
        .collect();
    groups.extend(non_primitive_extras().into_iter().filter(|g| g.degree() <= 6));
    for g in groups {
        let top = if g.degree() < 7 { g.degree() - 1 } else { 3 };
        for k in 1..=top {
            for t in rank_k_map_reps(&g, k, &budget).unwrap() {
                let layer = singular_part_is_idempotent_generated(&g, &t, &budget).unwrap();
                let full = singular_part(&g, &t, CAP).unwrap().is_idempotent_generated();
                assert_eq!(layer, full, "{} t={}", label(&g), t.to_text());
            }
        }
    }
}
