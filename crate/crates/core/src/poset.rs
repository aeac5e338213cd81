//! Finite posets given by their cover relations.
//!
//! Elements are numbered `1..=m` to match the usual `ε_1, …, ε_m` labelling.
//! Internally every element `i` owns bit `i - 1` of a `u64`, so a poset holds
//! at most 64 elements and ideal enumeration is limited further by
//! [`MAX_IDEAL_ELEMENTS`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{guard, Error, Result};

/// Largest poset whose ideals may be listed.
pub const MAX_IDEAL_ELEMENTS: usize = 24;
/// Largest poset for which lattice binomials are emitted.
pub const MAX_BINOMIAL_ELEMENTS: usize = 20;
const MAX_ELEMENTS: usize = 64;

/// A set of poset elements stored as a bit mask (bit `i - 1` is `ε_i`).
///
/// Used for upper ideals, lower ideals and arbitrary element subsets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal(pub u64);

impl Ideal {
    pub fn contains(self, element: usize) -> bool {
        (1..=64).contains(&element) && self.0 >> (element - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Ideal) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing order, 1-based.
    pub fn members(self) -> Vec<usize> {
        (0..64).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    /// 0/1 indicator vector of length `m`.
    pub fn indicator(self, m: usize) -> Vec<i64> {
        (0..m).map(|b| (self.0 >> b & 1) as i64).collect()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.members().iter().map(|i| format!("e{i}")).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// An immutable finite poset with an irredundant cover set and its closure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    size: usize,
    covers: Vec<(usize, usize)>,
    // up[i] = {j : ε_{i+1} ≤ ε_j}, down[i] = {j : ε_j ≤ ε_{i+1}}, both reflexive.
    up: Vec<u64>,
    down: Vec<u64>,
}

/// JSON form of a poset: `{"m": 3, "covers": [[1,2],[1,3]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub m: usize,
    pub covers: Vec<[usize; 2]>,
}

impl Poset {
    /// Builds a poset from its cover relations, rejecting cycles and covers
    /// implied by transitivity.
    pub fn new(m: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyPoset);
        }
        guard("poset size", m as u128, MAX_ELEMENTS as u128)?;
        let mut sorted = Vec::with_capacity(covers.len());
        for &(i, j) in covers {
            if i == 0 || j == 0 || i > m || j > m {
                return Err(Error::ElementOutOfRange(i, j, m));
            }
            if i == j {
                return Err(Error::SelfCover(i));
            }
            sorted.push((i, j));
        }
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Invalid(format!("duplicate cover ({}, {})", w[0].0, w[0].1)));
        }

        let mut succ = vec![Vec::new(); m];
        let mut indegree = vec![0usize; m];
        for &(i, j) in &sorted {
            succ[i - 1].push(j - 1);
            indegree[j - 1] += 1;
        }
        // Kahn's algorithm; leftovers mean a cycle.
        let mut order = Vec::with_capacity(m);
        let mut stack: Vec<usize> = (0..m).rev().filter(|&v| indegree[v] == 0).collect();
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in succ[v].iter().rev() {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if order.len() != m {
            return Err(Error::Cycle);
        }

        let mut up = vec![0u64; m];
        for &v in order.iter().rev() {
            let mut mask = 1u64 << v;
            for &w in &succ[v] {
                mask |= up[w];
            }
            up[v] = mask;
        }
        for &(i, j) in &sorted {
            let implied = succ[i - 1]
                .iter()
                .any(|&k| k != j - 1 && up[k] >> (j - 1) & 1 == 1);
            if implied {
                return Err(Error::RedundantCover(i, j));
            }
        }
        let mut down = vec![0u64; m];
        for (v, &mask) in up.iter().enumerate() {
            for w in 0..m {
                if mask >> w & 1 == 1 {
                    down[w] |= 1 << v;
                }
            }
        }
        Ok(Poset {
            size: m,
            covers: sorted,
            up,
            down,
        })
    }

    pub fn from_json(json: &PosetJson) -> Result<Self> {
        let covers: Vec<(usize, usize)> = json.covers.iter().map(|c| (c[0], c[1])).collect();
        Poset::new(json.m, &covers)
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            m: self.size,
            covers: self.covers.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Cover pairs `(i, j)` with `ε_i ⋖ ε_j`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn full_set(&self) -> Ideal {
        Ideal(mask_of(self.size))
    }

    /// `ε_i ≤ ε_j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i - 1] >> (j - 1) & 1 == 1
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Elements above `ε_i`, including itself.
    pub fn up_set(&self, i: usize) -> Ideal {
        Ideal(self.up[i - 1])
    }

    /// Elements below `ε_i`, including itself.
    pub fn down_set(&self, i: usize) -> Ideal {
        Ideal(self.down[i - 1])
    }

    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        self.covers.iter().filter(|c| c.0 == i).map(|c| c.1).collect()
    }

    pub fn lower_covers(&self, j: usize) -> Vec<usize> {
        self.covers.iter().filter(|c| c.1 == j).map(|c| c.0).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (1..=self.size).filter(|&i| self.down[i - 1].count_ones() == 1).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (1..=self.size).filter(|&i| self.up[i - 1].count_ones() == 1).collect()
    }

    pub fn is_upper_ideal(&self, set: Ideal) -> bool {
        (1..=self.size).all(|i| !set.contains(i) || self.up[i - 1] & !set.0 == 0)
    }

    pub fn is_lower_ideal(&self, set: Ideal) -> bool {
        (1..=self.size).all(|i| !set.contains(i) || self.down[i - 1] & !set.0 == 0)
    }

    /// All upper order ideals in ascending bit-mask order, including `∅` and
    /// the full set.
    pub fn upper_ideals(&self) -> Result<Vec<Ideal>> {
        guard("poset size for ideal enumeration", self.size as u128, MAX_IDEAL_ELEMENTS as u128)?;
        let order = self.top_down_order();
        let mut out = Vec::new();
        self.collect_upper(&order, 0, 0, &mut |mask| out.push(Ideal(mask)));
        out.sort_unstable();
        Ok(out)
    }

    /// Number of upper ideals without materialising them.
    pub fn count_upper_ideals(&self) -> Result<u64> {
        guard("poset size for ideal enumeration", self.size as u128, MAX_IDEAL_ELEMENTS as u128)?;
        let order = self.top_down_order();
        let mut count = 0u64;
        self.collect_upper(&order, 0, 0, &mut |_| count += 1);
        Ok(count)
    }

    /// All lower order ideals `J(P)` in ascending bit-mask order.
    pub fn lower_ideals(&self) -> Result<Vec<Ideal>> {
        self.opposite().upper_ideals()
    }

    // Elements ordered so that every element comes after everything above it.
    fn top_down_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&v| self.up[v].count_ones());
        order
    }

    fn collect_upper(&self, order: &[usize], pos: usize, mask: u64, emit: &mut dyn FnMut(u64)) {
        if pos == order.len() {
            emit(mask);
            return;
        }
        let v = order[pos];
        self.collect_upper(order, pos + 1, mask, emit);
        let above = self.up[v] & !(1 << v);
        if above & !mask == 0 {
            self.collect_upper(order, pos + 1, mask | 1 << v, emit);
        }
    }

    /// The opposite poset: every cover reversed.
    pub fn opposite(&self) -> Poset {
        let mut covers: Vec<(usize, usize)> = self.covers.iter().map(|&(i, j)| (j, i)).collect();
        covers.sort_unstable();
        Poset {
            size: self.size,
            covers,
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Subposet induced on `elements`, relabelled `1..` in increasing order.
    pub fn induced(&self, elements: Ideal) -> Result<Poset> {
        let keep = elements.members();
        let keep: Vec<usize> = keep.into_iter().filter(|&i| i <= self.size).collect();
        let mut covers = Vec::new();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                let between = keep
                    .iter()
                    .any(|&k| k != i && k != j && self.leq(i, k) && self.leq(k, j));
                if !between {
                    covers.push((a + 1, b + 1));
                }
            }
        }
        Poset::new(keep.len(), &covers)
    }

    /// Hasse-connected components, each with its embedding into `self`.
    pub fn connected_components(&self) -> Vec<Component> {
        let mut parent: Vec<usize> = (0..self.size).collect();
        fn find(parent: &mut [usize], v: usize) -> usize {
            let mut r = v;
            while parent[r] != r {
                r = parent[r];
            }
            let mut v = v;
            while parent[v] != r {
                let next = parent[v];
                parent[v] = r;
                v = next;
            }
            r
        }
        for &(i, j) in &self.covers {
            let (a, b) = (find(&mut parent, i - 1), find(&mut parent, j - 1));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<(usize, u64)> = Vec::new();
        for v in 0..self.size {
            let r = find(&mut parent, v);
            match groups.iter_mut().find(|g| g.0 == r) {
                Some(g) => g.1 |= 1 << v,
                None => groups.push((r, 1 << v)),
            }
        }
        groups
            .into_iter()
            .map(|(_, mask)| Component {
                poset: self.induced(Ideal(mask)).expect("induced subposet of a valid poset"),
                embedding: Ideal(mask).members(),
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// The rank function when every maximal chain has the same length.
    pub fn rank_function(&self) -> Option<RankFunction> {
        let mut rank: Vec<Option<usize>> = vec![None; self.size];
        let mut queue: Vec<usize> = self.minimal_elements();
        for &v in &queue {
            rank[v - 1] = Some(0);
        }
        while let Some(v) = queue.pop() {
            let r = rank[v - 1].expect("queued elements are ranked");
            for w in self.upper_covers(v) {
                match rank[w - 1] {
                    None => {
                        rank[w - 1] = Some(r + 1);
                        queue.push(w);
                    }
                    Some(existing) if existing != r + 1 => return None,
                    Some(_) => {}
                }
            }
        }
        let ranks: Vec<usize> = rank.into_iter().map(|r| r.expect("every element is ranked")).collect();
        let tops: Vec<usize> = self.maximal_elements().iter().map(|&i| ranks[i - 1]).collect();
        let length = tops[0];
        if tops.iter().any(|&t| t != length) {
            return None;
        }
        Some(RankFunction { ranks, length })
    }

    pub fn is_graded(&self) -> bool {
        self.rank_function().is_some()
    }

    /// Ordinal sum: `q` stacked entirely above `self`.
    pub fn ordinal_sum(&self, q: &Poset) -> Result<Poset> {
        let n = self.size;
        let mut covers = self.covers.clone();
        covers.extend(q.covers.iter().map(|&(i, j)| (i + n, j + n)));
        for &a in &self.maximal_elements() {
            for &b in &q.minimal_elements() {
                covers.push((a, b + n));
            }
        }
        Poset::new(n + q.size, &covers)
    }

    /// Disjoint union with `q` relabelled to `n+1..`.
    pub fn disjoint_union(&self, q: &Poset) -> Result<Poset> {
        let n = self.size;
        let mut covers = self.covers.clone();
        covers.extend(q.covers.iter().map(|&(i, j)| (i + n, j + n)));
        Poset::new(n + q.size, &covers)
    }

    /// Chain `1 < 2 < … < n`.
    pub fn chain(n: usize) -> Result<Poset> {
        let covers: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        Poset::new(n, &covers)
    }

    pub fn antichain(n: usize) -> Result<Poset> {
        Poset::new(n, &[])
    }

    /// The shrub `S_m`: root `ε_1` covered by `ε_2, …, ε_m`.
    pub fn shrub(m: usize) -> Result<Poset> {
        if m < 2 {
            return Err(Error::ShrubTooSmall(m));
        }
        let covers: Vec<(usize, usize)> = (2..=m).map(|j| (1, j)).collect();
        Poset::new(m, &covers)
    }

    /// Rooted tree from a parent list: `parents[i]` is the parent of element
    /// `i + 1`, `None` for the root.
    pub fn rooted_tree(parents: &[Option<usize>]) -> Result<Poset> {
        let roots = parents.iter().filter(|p| p.is_none()).count();
        if roots != 1 {
            return Err(Error::MultipleRoots(roots));
        }
        let covers: Vec<(usize, usize)> = parents
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (p, i + 1)))
            .collect();
        Poset::new(parents.len(), &covers)
    }

    /// Parses `"0,1,1,2,2"` where `0` marks the root.
    pub fn parse_tree(spec: &str) -> Result<Poset> {
        let parents = spec
            .split(',')
            .map(|s| {
                let v: usize = s
                    .trim()
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad parent entry {s:?}")))?;
                Ok(if v == 0 { None } else { Some(v) })
            })
            .collect::<Result<Vec<_>>>()?;
        Poset::rooted_tree(&parents)
    }

    /// Connected, unique minimal element, Hasse diagram a tree whose leaves
    /// are the maximal elements.
    pub fn is_rooted_tree_poset(&self) -> bool {
        if self.covers.len() + 1 != self.size || self.minimal_elements().len() != 1 {
            return false;
        }
        if !self.is_connected() {
            return false;
        }
        // In a Hasse tree every leaf (no upper cover) is maximal; checked anyway.
        (1..=self.size)
            .filter(|&v| self.upper_covers(v).is_empty())
            .all(|v| self.maximal_elements().contains(&v))
    }

    /// Leaves of a rooted tree poset (elements with no upper cover).
    pub fn leaves(&self) -> Vec<usize> {
        (1..=self.size).filter(|&v| self.upper_covers(v).is_empty()).collect()
    }

    /// The shrubs containing the leaves: one per vertex with a leaf child.
    pub fn shrubbery(&self) -> Result<Shrubbery> {
        if !self.is_rooted_tree_poset() {
            return Err(Error::NotTree);
        }
        if self.size < 2 {
            return Err(Error::Invalid("shrubbery needs a tree with at least 2 vertices".into()));
        }
        let leaves = self.leaves();
        let mut shrubs = Vec::new();
        for u in 1..=self.size {
            let leaf_children: Vec<usize> = self
                .upper_covers(u)
                .into_iter()
                .filter(|c| leaves.contains(c))
                .collect();
            if !leaf_children.is_empty() {
                shrubs.push(Shrub {
                    root: u,
                    leaves: leaf_children,
                });
            }
        }
        let shrub_sizes: Vec<usize> = shrubs.iter().map(|s| s.leaves.len() + 1).collect();
        let removed_count = self.size - shrub_sizes.iter().sum::<usize>();
        let shrubbery = Shrubbery {
            shrubs,
            shrub_sizes,
            removed_count,
        };
        debug_assert_eq!(shrubbery.leaf_count(), leaves.len());
        Ok(shrubbery)
    }

    /// Binomial generators `y_α y_β − y_{α∧β} y_{α∨β}` of the toric ideal of
    /// the lattice of lower ideals, one per incomparable pair.
    pub fn lattice_binomials(&self) -> Result<Vec<LatticeBinomial>> {
        guard("poset size for lattice binomials", self.size as u128, MAX_BINOMIAL_ELEMENTS as u128)?;
        let ideals = self.lower_ideals()?;
        let mut out = Vec::new();
        for (a, &alpha) in ideals.iter().enumerate() {
            for &beta in &ideals[a + 1..] {
                if alpha.is_subset(beta) || beta.is_subset(alpha) {
                    continue;
                }
                out.push(LatticeBinomial {
                    alpha,
                    beta,
                    meet: Ideal(alpha.0 & beta.0),
                    join: Ideal(alpha.0 | beta.0),
                });
            }
        }
        Ok(out)
    }

    /// Elements other than `element`, relabelled.
    pub fn remove(&self, element: usize) -> Result<Poset> {
        self.induced(Ideal(self.full_set().0 & !(1 << (element - 1))))
    }
}

fn mask_of(m: usize) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self.covers.iter().map(|(i, j)| format!("{i}<{j}")).collect();
        write!(f, "{}[{}]", self.size, covers.join(","))
    }
}

/// A connected component together with its element indices in the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub poset: Poset,
    /// `embedding[i - 1]` is the parent index of component element `i`.
    pub embedding: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankFunction {
    /// `ranks[i - 1] = ℓ(ε_i)`, zero on minimal elements.
    pub ranks: Vec<usize>,
    /// Common length of all maximal chains.
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Shrub {
    pub root: usize,
    pub leaves: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Shrubbery {
    pub shrubs: Vec<Shrub>,
    /// `1 + #leaves` per shrub.
    pub shrub_sizes: Vec<usize>,
    /// Vertices outside every shrub.
    pub removed_count: usize,
}

impl Shrubbery {
    /// `Σ (m_i − 1)`, the number of leaves of the tree.
    pub fn leaf_count(&self) -> usize {
        self.shrub_sizes.iter().map(|s| s - 1).sum()
    }
}

/// `y_α y_β − y_{α∧β} y_{α∨β}` with ideals as element sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeBinomial {
    pub alpha: Ideal,
    pub beta: Ideal,
    pub meet: Ideal,
    pub join: Ideal,
}

impl Serialize for Ideal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v_poset() -> Poset {
        Poset::new(3, &[(1, 2), (1, 3)]).unwrap()
    }

    fn brute_force_upper(p: &Poset) -> Vec<Ideal> {
        (0..1u64 << p.size())
            .map(Ideal)
            .filter(|&s| p.is_upper_ideal(s))
            .collect()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Poset::new(3, &[(1, 2), (2, 3), (1, 3)]),
            Err(Error::RedundantCover(1, 3))
        );
        assert_eq!(Poset::new(2, &[(1, 2), (2, 1)]), Err(Error::Cycle));
        assert_eq!(Poset::new(0, &[]), Err(Error::EmptyPoset));
        assert_eq!(Poset::new(2, &[(1, 3)]), Err(Error::ElementOutOfRange(1, 3, 2)));
        assert_eq!(Poset::new(2, &[(2, 2)]), Err(Error::SelfCover(2)));
        let single = Poset::new(1, &[]).unwrap();
        assert_eq!(single.upper_ideals().unwrap().len(), 2);
    }

    #[test]
    fn ideal_counts() {
        for m in 2..=7 {
            let s = Poset::shrub(m).unwrap();
            assert_eq!(s.upper_ideals().unwrap().len(), (1 << (m - 1)) + 1);
            assert_eq!(Poset::antichain(m).unwrap().upper_ideals().unwrap().len(), 1 << m);
        }
        assert_eq!(Poset::chain(3).unwrap().lower_ideals().unwrap().len(), 4);
        let a2 = Poset::antichain(2).unwrap().lower_ideals().unwrap();
        assert_eq!(a2, vec![Ideal(0), Ideal(1), Ideal(2), Ideal(3)]);
        let v = v_poset();
        let lower = v.lower_ideals().unwrap();
        let brute: Vec<Ideal> = (0..8u64).map(Ideal).filter(|&s| v.is_lower_ideal(s)).collect();
        assert_eq!(lower, brute);
        assert_eq!(lower.len(), 5);
    }

    #[test]
    fn p1_ideals_match_table() {
        let p1 = Poset::new(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        let got: Vec<Vec<usize>> = p1.upper_ideals().unwrap().iter().map(|i| i.members()).collect();
        let mut expected = vec![
            vec![1, 2, 3, 4],
            vec![1, 3, 4],
            vec![2, 3, 4],
            vec![3, 4],
            vec![3],
            vec![4],
            vec![],
        ];
        expected.sort_by_key(|m| m.iter().map(|i| 1u64 << (i - 1)).sum::<u64>());
        assert_eq!(got, expected);
    }

    #[test]
    fn opposite_and_components() {
        let v = v_poset();
        assert_eq!(v.opposite().opposite(), v);
        let c3 = Poset::chain(3).unwrap();
        assert_eq!(c3.opposite().upper_ideals().unwrap().len(), 4);
        let s3op = Poset::shrub(3).unwrap().opposite();
        assert_eq!(s3op.maximal_elements().len(), 1);
        assert_eq!(s3op.minimal_elements().len(), 2);

        let c2 = Poset::chain(2).unwrap();
        let h2 = c2.disjoint_union(&c2).unwrap();
        let comps = h2.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.poset == c2));
        assert_eq!(comps[1].embedding, vec![3, 4]);
        assert_eq!(v.connected_components().len(), 1);
        assert_eq!(v.connected_components()[0].poset, v);
        assert_eq!(Poset::antichain(3).unwrap().connected_components().len(), 3);
    }

    #[test]
    fn rank_functions() {
        let rf = v_poset().rank_function().unwrap();
        assert_eq!(rf.ranks, vec![0, 1, 1]);
        assert_eq!(rf.length, 1);
        let rf = Poset::antichain(3).unwrap().rank_function().unwrap();
        assert_eq!(rf.ranks, vec![0, 0, 0]);
        assert_eq!(rf.length, 0);
        let skew = Poset::new(4, &[(1, 2), (2, 4), (3, 4)]).unwrap();
        assert!(skew.rank_function().is_none());
        let mixed = Poset::chain(2).unwrap().disjoint_union(&Poset::antichain(1).unwrap()).unwrap();
        assert!(!mixed.is_graded());
    }

    #[test]
    fn sums() {
        let a1 = Poset::antichain(1).unwrap();
        let a2 = Poset::antichain(2).unwrap();
        let p1 = a2.ordinal_sum(&a2).unwrap();
        assert_eq!(p1.covers(), &[(1, 3), (1, 4), (2, 3), (2, 4)]);
        let c3 = a1.ordinal_sum(&a1).unwrap().ordinal_sum(&a1).unwrap();
        assert_eq!(c3, Poset::chain(3).unwrap());
        assert_eq!(a1.ordinal_sum(&a2).unwrap(), Poset::shrub(3).unwrap());
        assert_eq!(a1.disjoint_union(&a1).unwrap(), a2);
        let c2 = Poset::chain(2).unwrap();
        let p3 = c2.disjoint_union(&c2).unwrap();
        assert_eq!(p3.upper_ideals().unwrap().len(), 9);
    }

    #[test]
    fn builders() {
        assert_eq!(Poset::shrub(4).unwrap().covers(), &[(1, 2), (1, 3), (1, 4)]);
        assert_eq!(Poset::chain(1).unwrap(), Poset::antichain(1).unwrap());
        let t = Poset::parse_tree("0,1,1,2,2").unwrap();
        assert_eq!(t.leaves(), vec![3, 4, 5]);
        assert_eq!(Poset::shrub(1), Err(Error::ShrubTooSmall(1)));
        assert_eq!(Poset::parse_tree("0,0,1"), Err(Error::MultipleRoots(2)));
    }

    #[test]
    fn tree_classification_and_shrubbery() {
        assert!(Poset::shrub(3).unwrap().is_rooted_tree_poset());
        assert!(Poset::chain(4).unwrap().is_rooted_tree_poset());
        assert!(Poset::chain(1).unwrap().is_rooted_tree_poset());
        let a2 = Poset::antichain(2).unwrap();
        assert!(!a2.ordinal_sum(&a2).unwrap().is_rooted_tree_poset());

        let s = Poset::shrub(5).unwrap().shrubbery().unwrap();
        assert_eq!(s.shrub_sizes, vec![5]);
        assert_eq!(s.removed_count, 0);

        let t = Poset::parse_tree("0,1,1,2,2").unwrap().shrubbery().unwrap();
        assert_eq!(t.shrubs[0], Shrub { root: 1, leaves: vec![3] });
        assert_eq!(t.shrubs[1], Shrub { root: 2, leaves: vec![4, 5] });
        assert_eq!(t.shrub_sizes, vec![2, 3]);
        assert_eq!(t.removed_count, 0);

        assert_eq!(Poset::chain(1).unwrap().shrubbery().unwrap_err().code(), "invalid-input");
        assert_eq!(a2.shrubbery(), Err(Error::NotTree));
    }

    #[test]
    fn lattice_binomial_generators() {
        let a2 = Poset::antichain(2).unwrap().lattice_binomials().unwrap();
        assert_eq!(a2.len(), 1);
        assert_eq!(a2[0].alpha, Ideal(1));
        assert_eq!(a2[0].beta, Ideal(2));
        assert_eq!(a2[0].meet, Ideal(0));
        assert_eq!(a2[0].join, Ideal(3));
        assert!(Poset::chain(5).unwrap().lattice_binomials().unwrap().is_empty());

        let v = v_poset();
        let ideals = v.lower_ideals().unwrap();
        let mut incomparable = 0;
        for a in &ideals {
            for b in &ideals {
                if a < b && !a.is_subset(*b) && !b.is_subset(*a) {
                    incomparable += 1;
                }
            }
        }
        // J(V) = {∅, 1, 12, 13, 123}: only {1,2} and {1,3} are incomparable.
        assert_eq!(incomparable, 1);
        assert_eq!(v.lattice_binomials().unwrap().len(), incomparable);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for p in crate::catalog::posets_up_to(5) {
            let ideals = p.upper_ideals().unwrap();
            assert_eq!(ideals, brute_force_upper(&p), "{p}");
            assert_eq!(p.count_upper_ideals().unwrap() as usize, ideals.len());
            assert_eq!(p.opposite().lower_ideals().unwrap(), ideals);
        }
    }

    #[test]
    fn guard_on_ideal_enumeration() {
        let big = Poset::antichain(25).unwrap();
        assert_eq!(big.upper_ideals().unwrap_err().code(), "too-large");
    }
}
