//! Exact minimum distance.
//!
//! Two exact algorithms share one contract: the returned distance is the
//! minimum weight over all nonzero codewords, and the witness is the
//! lexicographically least message (first nonzero entry `1`) among those
//! attaining it. Both are deterministic for any worker count.
//!
//! * Exhaustive: every projective message class is encoded.
//! * Information sets: codewords of a growing message weight `w` are
//!   generated from several generator matrices that are systematic on
//!   pairwise disjoint column sets; once every unseen codeword provably has
//!   weight above the best found, the search stops.

use std::sync::atomic::{AtomicUsize, Ordering};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::ToricCode;
use crate::error::{Error, Result};
use crate::field::{Elem, GaloisField};

/// Default ceiling on `q^k · n` for the exhaustive search.
pub const DEFAULT_MAX_EXHAUSTIVE_COST: u128 = 1_000_000_000;
/// Default ceiling on symbol operations for the information-set search.
pub const DEFAULT_MAX_INFORMATION_SET_COST: u128 = 20_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchAlgorithm {
    Exhaustive,
    InformationSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Exhaustive when within its cost ceiling, information sets otherwise.
    #[default]
    Auto,
    Exhaustive,
    InformationSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub workers: usize,
    pub strategy: Strategy,
    pub max_exhaustive_cost: u128,
    pub max_information_set_cost: u128,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            strategy: Strategy::Auto,
            max_exhaustive_cost: DEFAULT_MAX_EXHAUSTIVE_COST,
            max_information_set_cost: DEFAULT_MAX_INFORMATION_SET_COST,
        }
    }
}

impl SearchOptions {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceResult {
    pub d: usize,
    /// Coefficients on the full exponent list; dependent exponents get zero.
    pub witness: Vec<Elem>,
    pub algorithm: SearchAlgorithm,
}

/// `q^k · n`, the exhaustive search's symbol-operation estimate.
pub fn search_cost(code: &ToricCode) -> u128 {
    (code.q() as u128)
        .checked_pow(code.k() as u32)
        .and_then(|m| m.checked_mul(code.n() as u128))
        .unwrap_or(u128::MAX)
}

pub fn min_distance_exact(code: &ToricCode, opts: &SearchOptions) -> Result<DistanceResult> {
    let basis: Vec<Vec<Elem>> = code.basis_rows().iter().map(|&i| code.generator_matrix()[i].clone()).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| Error::Invalid(format!("cannot start worker pool: {e}")))?;
    let cost = search_cost(code);
    let algorithm = match opts.strategy {
        Strategy::Exhaustive if cost > opts.max_exhaustive_cost => {
            return Err(Error::SearchTooLarge {
                estimated: cost,
                limit: opts.max_exhaustive_cost,
            })
        }
        Strategy::Exhaustive => SearchAlgorithm::Exhaustive,
        Strategy::Auto if cost <= opts.max_exhaustive_cost => SearchAlgorithm::Exhaustive,
        _ => SearchAlgorithm::InformationSet,
    };
    let field = code.field();
    let (d, message) = pool.install(|| match field_adder(field) {
        Adder::Xor => run(algorithm, field, &basis, &Xor, opts),
        Adder::Prime(p) => run(algorithm, field, &basis, &PrimeAdd(p), opts),
        Adder::Table => run(algorithm, field, &basis, &TableAdd(field), opts),
    })?;
    let mut witness = vec![0; code.generator_matrix().len()];
    for (&row, &c) in code.basis_rows().iter().zip(&message) {
        witness[row] = c;
    }
    Ok(DistanceResult { d, witness, algorithm })
}

fn run<A: Add>(
    algorithm: SearchAlgorithm,
    field: &GaloisField,
    basis: &[Vec<Elem>],
    add: &A,
    opts: &SearchOptions,
) -> Result<(usize, Vec<Elem>)> {
    match algorithm {
        SearchAlgorithm::Exhaustive => Ok(exhaustive(field, basis, add)),
        SearchAlgorithm::InformationSet => information_set(field, basis, add, opts.max_information_set_cost),
    }
}

trait Add: Sync {
    fn add(&self, a: Elem, b: Elem) -> Elem;
}

struct Xor;
impl Add for Xor {
    #[inline(always)]
    fn add(&self, a: Elem, b: Elem) -> Elem {
        a ^ b
    }
}

struct PrimeAdd(Elem);
impl Add for PrimeAdd {
    #[inline(always)]
    fn add(&self, a: Elem, b: Elem) -> Elem {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }
}

struct TableAdd<'a>(&'a GaloisField);
impl Add for TableAdd<'_> {
    #[inline(always)]
    fn add(&self, a: Elem, b: Elem) -> Elem {
        self.0.add(a, b)
    }
}

enum Adder {
    Xor,
    Prime(Elem),
    Table,
}

fn field_adder(field: &GaloisField) -> Adder {
    match (field.p(), field.k()) {
        (2, _) => Adder::Xor,
        (p, 1) => Adder::Prime(p as Elem),
        _ => Adder::Table,
    }
}

fn add_into<A: Add>(out: &mut [Elem], a: &[Elem], b: &[Elem], add: &A) {
    for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
        *o = add.add(x, y);
    }
}

// Weight of `a + b`, or `None` once it exceeds `bound`.
fn sum_weight<A: Add>(a: &[Elem], b: &[Elem], add: &A, bound: usize) -> Option<usize> {
    let mut w = 0;
    for (ca, cb) in a.chunks(64).zip(b.chunks(64)) {
        for (&x, &y) in ca.iter().zip(cb) {
            w += usize::from(add.add(x, y) != 0);
        }
        if w > bound {
            return None;
        }
    }
    Some(w)
}

/// `mult[i][c] = c · rows[i]`.
fn multiples(field: &GaloisField, rows: &[Vec<Elem>]) -> Vec<Vec<Vec<Elem>>> {
    rows.iter()
        .map(|r| field.elements().map(|c| r.iter().map(|&x| field.mul(c, x)).collect()).collect())
        .collect()
}

/// Lowest weight and its least message, merged deterministically.
#[derive(Clone, Debug)]
struct Best {
    weight: usize,
    message: Option<Vec<Elem>>,
}

impl Best {
    fn none(n: usize) -> Self {
        Best {
            weight: n + 1,
            message: None,
        }
    }

    fn offer(&mut self, weight: usize, message: &[Elem]) {
        let better = weight < self.weight
            || (weight == self.weight && self.message.as_deref().is_none_or(|m| message < m));
        if better {
            self.weight = weight;
            self.message = Some(message.to_vec());
        }
    }

    fn merge(mut self, other: Best) -> Best {
        if let Some(m) = &other.message {
            self.offer(other.weight, m);
        }
        self
    }
}

fn exhaustive<A: Add>(field: &GaloisField, basis: &[Vec<Elem>], add: &A) -> (usize, Vec<Elem>) {
    let k = basis.len();
    let n = basis.first().map_or(0, Vec::len);
    let q = field.q() as usize;
    let mult = multiples(field, basis);
    let shared = AtomicUsize::new(n + 1);
    // Fixed split, independent of the worker count.
    let split = (1..).find(|&t| q.pow(t) >= 64).unwrap_or(1) as usize;
    let mut tasks: Vec<(usize, Vec<Elem>)> = Vec::new();
    for lead in 0..k {
        let free = (k - lead - 1).min(split);
        if free == 0 {
            tasks.push((lead, Vec::new()));
            continue;
        }
        for prefix in (0..free).map(|_| field.elements()).multi_cartesian_product() {
            tasks.push((lead, prefix));
        }
    }
    let best = tasks
        .par_iter()
        .map(|(lead, prefix)| {
            let mut x = vec![0; k];
            x[*lead] = 1;
            x[lead + 1..lead + 1 + prefix.len()].copy_from_slice(prefix);
            let depth = lead + 1 + prefix.len();
            let mut bufs = vec![vec![0; n]; k + 1];
            for i in *lead..depth {
                let (done, rest) = bufs.split_at_mut(i + 1);
                add_into(&mut rest[0], &done[i], &mult[i][x[i] as usize], add);
            }
            // bufs[depth] now holds the prefix sum; earlier slots are scratch.
            let mut walker = Walker {
                mult: &mult,
                add,
                shared: &shared,
                best: Best::none(n),
                x,
                bufs,
                q,
            };
            walker.descend(depth);
            walker.best
        })
        .reduce(|| Best::none(n), Best::merge);
    (best.weight, best.message.expect("a nonzero code has a minimum-weight word"))
}

struct Walker<'a, A> {
    mult: &'a [Vec<Vec<Elem>>],
    add: &'a A,
    shared: &'a AtomicUsize,
    best: Best,
    x: Vec<Elem>,
    bufs: Vec<Vec<Elem>>,
    q: usize,
}

impl<A: Add> Walker<'_, A> {
    fn bound(&self) -> usize {
        self.best.weight.min(self.shared.load(Ordering::Relaxed))
    }

    fn record(&mut self, w: usize) {
        if w < self.best.weight {
            self.best.weight = w;
            self.best.message = Some(self.x.clone());
            self.shared.fetch_min(w, Ordering::Relaxed);
        }
    }

    // bufs[depth] = Σ_{i<depth} x_i · row_i.
    fn descend(&mut self, depth: usize) {
        let k = self.x.len();
        if depth == k {
            let zero = vec![0; self.bufs[k].len()];
            if let Some(w) = sum_weight(&self.bufs[k], &zero, self.add, self.bound()) {
                self.record(w);
            }
            return;
        }
        if depth == k - 1 {
            for c in 0..self.q {
                self.x[depth] = c as Elem;
                if let Some(w) = sum_weight(&self.bufs[depth], &self.mult[depth][c], self.add, self.bound()) {
                    self.record(w);
                }
            }
            self.x[depth] = 0;
            return;
        }
        for c in 0..self.q {
            self.x[depth] = c as Elem;
            let (done, rest) = self.bufs.split_at_mut(depth + 1);
            add_into(&mut rest[0], &done[depth], &self.mult[depth][c], self.add);
            self.descend(depth + 1);
        }
        self.x[depth] = 0;
    }
}

/// A generator matrix `g = t · G` that is systematic on `columns`, which no
/// other matrix uses; rows `0..columns.len()` carry those unit columns.
struct InfoMatrix {
    g: Vec<Vec<Elem>>,
    t: Vec<Vec<Elem>>,
    columns: Vec<usize>,
}

impl InfoMatrix {
    fn rank(&self) -> usize {
        self.columns.len()
    }
}

fn information_matrices(field: &GaloisField, basis: &[Vec<Elem>]) -> Vec<InfoMatrix> {
    let k = basis.len();
    let n = basis.first().map_or(0, Vec::len);
    let mut used = vec![false; n];
    let mut out = Vec::new();
    loop {
        let mut rows: Vec<Vec<Elem>> = basis
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.extend((0..k).map(|j| Elem::from(i == j)));
                row
            })
            .collect();
        let order = (0..n).filter(|&c| !used[c]).chain((0..n).filter(|&c| used[c]));
        let mut r = 0;
        let mut fresh = Vec::new();
        for c in order {
            if r == k {
                break;
            }
            let Some(p) = (r..k).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(p, r);
            let s = field.inv(rows[r][c]).expect("nonzero pivot");
            for x in rows[r].iter_mut() {
                *x = field.mul(*x, s);
            }
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                let f = row[c];
                if i != r && f != 0 {
                    let f = field.neg(f);
                    for (x, &y) in row.iter_mut().zip(&pivot) {
                        *x = field.add(*x, field.mul(f, y));
                    }
                }
            }
            if !used[c] {
                fresh.push(c);
            }
            r += 1;
        }
        if fresh.is_empty() {
            break;
        }
        for &c in &fresh {
            used[c] = true;
        }
        // A matrix of rank r only sharpens the bound from message weight
        // k − r + 1 on, yet costs as much to walk as a full one.
        if 2 * fresh.len() >= k {
            let (g, t) = rows
                .into_iter()
                .map(|mut row| {
                    let t = row.split_off(n);
                    (row, t)
                })
                .unzip();
            out.push(InfoMatrix { g, t, columns: fresh });
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

fn information_set<A: Add>(
    field: &GaloisField,
    basis: &[Vec<Elem>],
    add: &A,
    max_cost: u128,
) -> Result<(usize, Vec<Elem>)> {
    let k = basis.len();
    let n = basis.first().map_or(0, Vec::len);
    let q = field.q() as usize;
    let matrices = information_matrices(field, basis);
    let shared = AtomicUsize::new(n + 1);
    let mut best = Best::none(n);
    let mut spent: u128 = 0;
    for w in 1..=k {
        let level = (matrices.len() as u128)
            .saturating_mul(binomial(k, w))
            .saturating_mul(((q - 1) as u128).saturating_pow(w as u32 - 1))
            .saturating_mul(n as u128);
        spent = spent.saturating_add(level);
        if spent > max_cost {
            return Err(Error::SearchTooLarge {
                estimated: spent,
                limit: max_cost,
            });
        }
        for m in &matrices {
            let mult = multiples(field, &m.g);
            let supports: Vec<Vec<usize>> = (0..k).combinations(w).collect();
            let found = supports
                .par_iter()
                .map(|support| {
                    let mut walker = SupportWalker {
                        field,
                        mult: &mult,
                        t: &m.t,
                        add,
                        shared: &shared,
                        best: Best::none(n),
                        support,
                        coeffs: vec![0; w],
                        bufs: vec![vec![0; n]; w + 1],
                        q,
                    };
                    walker.coeffs[0] = 1;
                    let (head, tail) = walker.bufs.split_at_mut(1);
                    add_into(&mut tail[0], &head[0], &mult[support[0]][1], add);
                    walker.descend(1);
                    walker.best
                })
                .reduce(|| Best::none(n), Best::merge);
            best = best.merge(found);
        }
        let lower: usize = matrices.iter().map(|m| (w + 1).saturating_sub(k - m.rank())).sum();
        if lower > best.weight {
            break;
        }
    }
    Ok((best.weight, best.message.expect("a nonzero code has a minimum-weight word")))
}

struct SupportWalker<'a, A> {
    field: &'a GaloisField,
    mult: &'a [Vec<Vec<Elem>>],
    t: &'a [Vec<Elem>],
    add: &'a A,
    shared: &'a AtomicUsize,
    best: Best,
    support: &'a [usize],
    coeffs: Vec<Elem>,
    bufs: Vec<Vec<Elem>>,
    q: usize,
}

impl<A: Add> SupportWalker<'_, A> {
    // bufs[depth] = Σ_{i<depth} coeffs[i] · g[support[i]].
    fn descend(&mut self, depth: usize) {
        let w = self.support.len();
        if depth == w {
            let bound = self.best.weight.min(self.shared.load(Ordering::Relaxed));
            let zero = vec![0; self.bufs[w].len()];
            if let Some(weight) = sum_weight(&self.bufs[w], &zero, self.add, bound) {
                self.record(weight);
            }
            return;
        }
        let row = self.support[depth];
        if depth == w - 1 {
            for c in 1..self.q {
                let bound = self.best.weight.min(self.shared.load(Ordering::Relaxed));
                if let Some(weight) = sum_weight(&self.bufs[depth], &self.mult[row][c], self.add, bound) {
                    self.coeffs[depth] = c as Elem;
                    self.record(weight);
                }
            }
            return;
        }
        for c in 1..self.q {
            self.coeffs[depth] = c as Elem;
            let (done, rest) = self.bufs.split_at_mut(depth + 1);
            add_into(&mut rest[0], &done[depth], &self.mult[row][c], self.add);
            self.descend(depth + 1);
        }
    }

    // Records the message in original coordinates, `y = x · t`, normalised.
    fn record(&mut self, weight: usize) {
        let f = self.field;
        let k = self.t.len();
        let mut y = vec![0; k];
        for (&row, &c) in self.support.iter().zip(&self.coeffs) {
            for (yi, &ti) in y.iter_mut().zip(&self.t[row]) {
                *yi = f.add(*yi, f.mul(c, ti));
            }
        }
        let lead = y.iter().copied().find(|&v| v != 0).expect("nonzero message");
        let s = f.inv(lead).expect("nonzero lead");
        for yi in y.iter_mut() {
            *yi = f.mul(*yi, s);
        }
        self.best.offer(weight, &y);
        self.shared.fetch_min(weight, Ordering::Relaxed);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::code::{build_code, hamming_weight};
    use crate::geometry::{order_polytope, LatticePolytope};
    use crate::poset::Poset;

    fn both(code: &ToricCode, workers: usize) -> (DistanceResult, DistanceResult) {
        let base = SearchOptions::default().with_workers(workers);
        let a = min_distance_exact(code, &base.clone().with_strategy(Strategy::Exhaustive)).unwrap();
        let b = min_distance_exact(code, &base.with_strategy(Strategy::InformationSet)).unwrap();
        (a, b)
    }

    #[test]
    fn algorithms_agree_with_identical_witnesses() {
        let mut cases = Vec::new();
        for p in catalog::posets_up_to(3) {
            cases.push((order_polytope(&p).unwrap(), 4));
            cases.push((order_polytope(&p).unwrap(), 5));
        }
        cases.push((order_polytope(&catalog::p2()).unwrap(), 4));
        cases.push((LatticePolytope::segment(0, 3), 7));
        cases.push((LatticePolytope::segment(0, 3), 9));
        cases.push((LatticePolytope::unit_cube(2).dilate(2).unwrap(), 5));
        cases.push((LatticePolytope::standard_simplex(2).dilate(2).unwrap(), 9));
        for (poly, q) in cases {
            let code = build_code(&poly, q).unwrap();
            let (a, b) = both(&code, 3);
            assert_eq!(a.d, b.d, "q={q} {:?}", poly.vertices());
            assert_eq!(a.witness, b.witness);
            let word = code.encode(&a.witness).unwrap();
            assert_eq!(hamming_weight(&word), a.d);
            let lead = a.witness.iter().find(|&&c| c != 0);
            assert_eq!(lead, Some(&1));
        }
    }

    #[test]
    fn worker_count_does_not_matter() {
        let code = build_code(&order_polytope(&catalog::p1()).unwrap(), 4).unwrap();
        let (a1, b1) = both(&code, 1);
        let (a8, b8) = both(&code, 8);
        assert_eq!(a1, a8);
        assert_eq!(b1, b8);
        assert_eq!(a1.d, 36);
    }

    #[test]
    fn guard_is_reported() {
        let code = build_code(&order_polytope(&Poset::shrub(5).unwrap()).unwrap(), 4).unwrap();
        let opts = SearchOptions::default().with_strategy(Strategy::Exhaustive);
        assert!(matches!(
            min_distance_exact(&code, &opts),
            Err(Error::SearchTooLarge { .. })
        ));
        let tight = SearchOptions {
            max_information_set_cost: 10,
            ..SearchOptions::default()
        }
        .with_strategy(Strategy::InformationSet);
        assert!(matches!(
            min_distance_exact(&code, &tight),
            Err(Error::SearchTooLarge { .. })
        ));
        let auto = min_distance_exact(&code, &SearchOptions::default()).unwrap();
        assert_eq!(auto.algorithm, SearchAlgorithm::InformationSet);
        assert_eq!(auto.d, 3 * 16);
    }

    #[test]
    fn information_sets_are_disjoint_and_systematic() {
        let code = build_code(&order_polytope(&catalog::v_poset()).unwrap(), 4).unwrap();
        let basis: Vec<Vec<Elem>> = code.basis_rows().iter().map(|&i| code.generator_matrix()[i].clone()).collect();
        let ms = information_matrices(code.field(), &basis);
        assert_eq!(ms[0].rank(), 5);
        let mut seen = std::collections::BTreeSet::new();
        for m in &ms {
            assert!(2 * m.rank() >= 5);
            assert!(m.columns.iter().all(|&c| seen.insert(c)));
            for (i, &c) in m.columns.iter().enumerate() {
                for (r, row) in m.g.iter().enumerate() {
                    assert_eq!(row[c], Elem::from(r == i));
                }
            }
        }
        for m in &ms {
            // g = t · G.
            for (grow, trow) in m.g.iter().zip(&m.t) {
                let mut acc = vec![0; 27];
                for (&c, b) in trow.iter().zip(&basis) {
                    for (a, &x) in acc.iter_mut().zip(b) {
                        *a = code.field().add(*a, code.field().mul(c, x));
                    }
                }
                assert_eq!(&acc, grow);
            }
        }
    }
}
