//! Small-poset catalogues used by the check suites, the sweep and the CLI.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::poset::Poset;

/// Largest size accepted by the permutation-based canonical form.
pub const MAX_CANONICAL_ELEMENTS: usize = 8;

/// Canonical cover list: lexicographically least relabelling.
pub fn canonical_covers(p: &Poset) -> Vec<(usize, usize)> {
    let m = p.size();
    assert!(m <= MAX_CANONICAL_ELEMENTS, "canonical form limited to {MAX_CANONICAL_ELEMENTS} elements");
    let mut best: Option<Vec<(usize, usize)>> = None;
    for perm in (1..=m).permutations(m) {
        let mut relabelled: Vec<(usize, usize)> =
            p.covers().iter().map(|&(i, j)| (perm[i - 1], perm[j - 1])).collect();
        relabelled.sort_unstable();
        if best.as_ref().is_none_or(|b| relabelled < *b) {
            best = Some(relabelled);
        }
    }
    best.unwrap_or_default()
}

pub fn isomorphic(a: &Poset, b: &Poset) -> bool {
    a.size() == b.size() && a.covers().len() == b.covers().len() && canonical_covers(a) == canonical_covers(b)
}

/// One representative per isomorphism class of posets with `m` elements,
/// each naturally labelled (`ε_i < ε_j` implies `i < j`).
pub fn posets_of_size(m: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (1..=m).tuple_combinations().collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for bits in 0u64..1 << pairs.len() {
        let covers: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| bits >> b & 1 == 1)
            .map(|(_, &c)| c)
            .collect();
        let Ok(p) = Poset::new(m, &covers) else {
            continue;
        };
        if seen.insert(canonical_covers(&p)) {
            out.push(p);
        }
    }
    out
}

/// Representatives of all posets with `1..=max` elements.
pub fn posets_up_to(max: usize) -> Vec<Poset> {
    (1..=max).flat_map(posets_of_size).collect()
}

/// All unlabelled rooted trees with `m` vertices, as naturally labelled
/// rooted tree posets (root `ε_1`, children numbered in preorder).
pub fn rooted_trees(m: usize) -> Vec<Poset> {
    if m == 0 {
        return Vec::new();
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    // parent[i] < i for every non-root vertex; every rooted tree has such a labelling.
    let choices: Vec<Vec<usize>> = (2..=m).map(|i| (1..i).collect()).collect();
    for parents in choices.into_iter().multi_cartesian_product().chain(std::iter::once(vec![]).filter(|_| m == 1)) {
        let canon = canonical_tree(m, &parents);
        if seen.insert(canon.clone()) {
            let mut list = vec![None];
            list.extend(canon.iter().map(|&p| Some(p)));
            out.push(Poset::rooted_tree(&list).expect("parent list forms a tree"));
        }
    }
    out
}

// AHU encoding; returns the preorder parent list of the canonical drawing.
fn canonical_tree(m: usize, parents: &[usize]) -> Vec<usize> {
    let mut children = vec![Vec::new(); m + 1];
    for (i, &p) in parents.iter().enumerate() {
        children[p].push(i + 2);
    }
    fn code(v: usize, children: &[Vec<usize>]) -> String {
        let mut parts: Vec<String> = children[v].iter().map(|&c| code(c, children)).collect();
        parts.sort();
        format!("({})", parts.concat())
    }
    fn emit(v: usize, label: usize, children: &[Vec<usize>], next: &mut usize, out: &mut Vec<usize>) {
        let mut kids: Vec<(String, usize)> = children[v].iter().map(|&c| (code(c, children), c)).collect();
        kids.sort();
        for (_, c) in kids {
            *next += 1;
            let my = *next;
            out.push(label);
            emit(c, my, children, next, out);
        }
    }
    let mut out = Vec::new();
    let mut next = 1;
    emit(1, 1, &children, &mut next, &mut out);
    out
}

/// All `(m,m)`-bipartite posets up to isomorphism: minima `1..=m`, maxima
/// `m+1..=2m`, every element in a cover. Ordered by ideal count, then covers.
pub fn bipartite_posets(m: usize) -> Vec<Poset> {
    assert!((1..=4).contains(&m), "bipartite catalogue supports m in 1..=4");
    let cells = m * m;
    let perms: Vec<Vec<usize>> = (0..m).permutations(m).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for bits in 0u64..1 << cells {
        let edge = |a: usize, b: usize| bits >> (a * m + b) & 1 == 1;
        let rows_ok = (0..m).all(|a| (0..m).any(|b| edge(a, b)));
        let cols_ok = (0..m).all(|b| (0..m).any(|a| edge(a, b)));
        if !rows_ok || !cols_ok {
            continue;
        }
        let mut canon = u64::MAX;
        for rp in &perms {
            for cp in &perms {
                let mut code = 0u64;
                for a in 0..m {
                    for b in 0..m {
                        if edge(a, b) {
                            code |= 1 << (rp[a] * m + cp[b]);
                        }
                    }
                }
                canon = canon.min(code);
            }
        }
        if seen.insert(canon) {
            let covers: Vec<(usize, usize)> = (0..cells)
                .filter(|c| canon >> c & 1 == 1)
                .map(|c| (c / m + 1, c % m + m + 1))
                .collect();
            out.push(Poset::new(2 * m, &covers).expect("bipartite covers are irredundant"));
        }
    }
    out.sort_by_key(|p| (p.count_upper_ideals().unwrap_or(u64::MAX), p.covers().to_vec()));
    out
}

/// The three-element poset with `ε_1 < ε_2`, `ε_1 < ε_3`.
pub fn v_poset() -> Poset {
    Poset::new(3, &[(1, 2), (1, 3)]).expect("valid")
}

/// `A_2 ⊕ A_2`.
pub fn p1() -> Poset {
    Poset::new(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]).expect("valid")
}

/// The N-shaped poset `ε_1 < ε_3 > ε_2 < ε_4`.
pub fn p2() -> Poset {
    Poset::new(4, &[(1, 3), (2, 3), (2, 4)]).expect("valid")
}

/// `C_2 ⊔ C_2 = H_2`.
pub fn p3() -> Poset {
    Poset::new(4, &[(1, 3), (2, 4)]).expect("valid")
}

/// `H_m`: `m` disjoint 2-chains, minima `1..=m`, maxima `m+1..=2m`.
pub fn h(m: usize) -> Poset {
    let covers: Vec<(usize, usize)> = (1..=m).map(|i| (i, i + m)).collect();
    Poset::new(2 * m, &covers).expect("valid")
}

/// `A_m ⊕ A_m`.
pub fn antichain_stack(m: usize) -> Poset {
    let a = Poset::antichain(m).expect("valid");
    a.ordinal_sum(&a).expect("valid")
}

/// The 21-vertex tree whose shrubbery has sizes 5, 2, 4, 5.
///
/// Root `ε_1` has four children `ε_2..ε_5`; each of those has a single child
/// `ε_6..ε_9`, which carry 4, 1, 3 and 4 leaves respectively.
pub fn shrubbery_example_tree() -> Poset {
    let mut parents = vec![None, Some(1), Some(1), Some(1), Some(1), Some(2), Some(3), Some(4), Some(5)];
    for (mid, leaves) in [(6, 4), (7, 1), (8, 3), (9, 4)] {
        parents.extend(std::iter::repeat_n(Some(mid), leaves));
    }
    Poset::rooted_tree(&parents).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (1..=5).map(|m| posets_of_size(m).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16, 63]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=6).map(|m| rooted_trees(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20]);
        for t in rooted_trees(5) {
            assert!(t.is_rooted_tree_poset());
        }
    }

    #[test]
    fn bipartite_catalogue() {
        let two = bipartite_posets(2);
        assert_eq!(two.len(), 3);
        assert!(isomorphic(&two[0], &p1()));
        assert!(isomorphic(&two[1], &p2()));
        assert!(isomorphic(&two[2], &p3()));
        assert_eq!(bipartite_posets(1).len(), 1);
    }

    #[test]
    fn named_posets() {
        assert_eq!(antichain_stack(2), p1());
        assert_eq!(h(2), p3());
        let t = shrubbery_example_tree();
        assert_eq!(t.size(), 21);
        assert!(t.is_rooted_tree_poset());
    }
}
