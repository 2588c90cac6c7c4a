#![allow(dead_code)]

use std::collections::BTreeSet;

use nfl_core::space::{ObjectiveFunction, Permutation};
use nfl_core::structure::NeighborhoodRelation;

/// Every permutation of `0..n`, generated with Heap's algorithm.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut items: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut out = vec![Permutation::new(items.clone()).unwrap()];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            out.push(Permutation::new(items.clone()).unwrap());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// The orbit of `f` computed by composing with all `n!` permutations.
pub fn brute_orbit(f: &ObjectiveFunction) -> BTreeSet<ObjectiveFunction> {
    all_permutations(f.size())
        .iter()
        .map(|p| f.compose(p).unwrap())
        .collect()
}

fn normalized(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Edge set of `rel` as unordered pairs.
pub fn edge_set(rel: &NeighborhoodRelation) -> BTreeSet<(usize, usize)> {
    (0..rel.size())
        .flat_map(|a| (0..rel.size()).map(move |b| (a, b)))
        .filter(|&(a, b)| a < b && rel.are_neighbors(a, b))
        .collect()
}

/// Edge set of `rel` relabelled through `perm`.
pub fn mapped_edge_set(rel: &NeighborhoodRelation, perm: &Permutation) -> BTreeSet<(usize, usize)> {
    edge_set(rel)
        .into_iter()
        .map(|(a, b)| normalized(perm.apply(a), perm.apply(b)))
        .collect()
}
