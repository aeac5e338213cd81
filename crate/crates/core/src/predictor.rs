//! Closed-form code parameters from the shape of a poset.
//!
//! Every closed-form answer carries a certificate: the sequence of reduction
//! steps and base cases that produced it, in ASCII.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::code::{build_code, min_distance_exact, SearchOptions};
use crate::error::{Error, Result};
use crate::geometry::order_polytope;
use crate::poset::{Poset, MAX_IDEAL_ELEMENTS};

/// Raised on predictions that rely on a theorem stated only for `q > 3`.
pub const FLAG_UNVERIFIED: &str = "UNVERIFIED-HYPOTHESIS";
/// Raised when an `(m,m)`-bipartite poset has no perfect matching.
pub const FLAG_NO_MATCHING: &str = "NO-PERFECT-MATCHING";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    TreeTheorem,
    BipartiteTheorem,
    Reduction,
    ExactFallback,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::TreeTheorem => "tree-theorem",
            Method::BipartiteTheorem => "bipartite-theorem",
            Method::Reduction => "reduction",
            Method::ExactFallback => "exact-fallback",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub q: u64,
    /// Number of poset elements, the torus dimension.
    pub m: usize,
    #[serde(serialize_with = "big")]
    pub n: BigUint,
    #[serde(serialize_with = "big")]
    pub k: BigUint,
    #[serde(serialize_with = "big")]
    pub d: BigUint,
    /// `(a, b)` with `d = (q−1)^a (q−2)^b`, when the answer has that shape.
    pub exponents: Option<(u32, u32)>,
    pub formula: Option<String>,
    pub method: Method,
    pub certificate: Vec<String>,
    pub flags: Vec<String>,
}

pub(crate) fn big<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.collect_str(v),
    }
}

/// `(q−1)^a (q−2)^b` written out.
pub fn formula(a: u32, b: u32) -> String {
    match (a, b) {
        (0, 0) => "1".into(),
        (a, 0) => power("q-1", a),
        (0, b) => power("q-2", b),
        (a, b) => format!("{}*{}", power("q-1", a), power("q-2", b)),
    }
}

fn power(base: &str, e: u32) -> String {
    if e == 1 {
        format!("({base})")
    } else {
        format!("({base})^{e}")
    }
}

fn eval(q: u64, a: u32, b: u32) -> BigUint {
    BigUint::from(q - 1).pow(a) * BigUint::from(q - 2).pow(b)
}

fn length(q: u64, m: usize) -> BigUint {
    BigUint::from(q - 1).pow(m as u32)
}

fn check_field(q: u64) -> Result<()> {
    if q < 3 {
        return Err(Error::SmallField(q));
    }
    crate::field::prime_power(q).ok_or(Error::NotPrimePower(q))?;
    Ok(())
}

/// Number of upper ideals; rooted trees use `f(v) = 1 + Π f(children)` so
/// they are not limited by the enumeration guard.
pub fn ideal_count(p: &Poset) -> Result<BigUint> {
    if p.is_rooted_tree_poset() {
        fn f(p: &Poset, v: usize) -> BigUint {
            p.upper_covers(v)
                .into_iter()
                .map(|c| f(p, c))
                .fold(BigUint::one(), |acc, x| acc * x)
                + 1u32
        }
        let root = p.minimal_elements()[0];
        return Ok(f(p, root));
    }
    if p.size() > MAX_IDEAL_ELEMENTS {
        let comps = p.connected_components();
        if comps.len() > 1 {
            return comps
                .iter()
                .try_fold(BigUint::one(), |acc, c| Ok(acc * ideal_count(&c.poset)?));
        }
    }
    Ok(BigUint::from(p.count_upper_ideals()?))
}

fn theorem_flags(q: u64) -> Vec<String> {
    if q == 3 {
        vec![FLAG_UNVERIFIED.to_string()]
    } else {
        Vec::new()
    }
}

/// Tree theorem via the shrubbery: `d = (q−1)^{m−Σ(m_i−1)} (q−2)^{Σ(m_i−1)}`.
pub fn predict_tree(p: &Poset, q: u64) -> Result<Prediction> {
    if !p.is_rooted_tree_poset() {
        return Err(Error::NotTree);
    }
    check_field(q)?;
    let m = p.size();
    let mut certificate = Vec::new();
    let (a, b) = if m == 1 {
        certificate.push("single element: segment [0,1], d = (q-2)".to_string());
        (0, 1)
    } else {
        let sh = p.shrubbery()?;
        let sizes: Vec<String> = sh.shrub_sizes.iter().map(|s| format!("S_{s}")).collect();
        certificate.push(format!(
            "shrubbery: {}; {} vertices outside the shrubs",
            sizes.join(", "),
            sh.removed_count
        ));
        let b = sh.leaf_count();
        certificate.push(format!("sum of (m_i - 1) = {b}; m = {m}"));
        (m - b, b)
    };
    let leaves = p.leaves().len();
    assert_eq!((a, b), (m - leaves, leaves), "shrubbery exponents must count internal vertices and leaves");
    let (a, b) = (a as u32, b as u32);
    let f = formula(a, b);
    certificate.push(format!("d = {f}"));
    Ok(Prediction {
        q,
        m,
        n: length(q, m),
        k: ideal_count(p)?,
        d: eval(q, a, b),
        exponents: Some((a, b)),
        formula: Some(f),
        method: Method::TreeTheorem,
        certificate,
        flags: theorem_flags(q),
    })
}

/// Result of [`classify_bipartite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteClass {
    pub is_mm_bipartite: bool,
    pub m: usize,
    pub has_perfect_matching: bool,
}

/// Graded, `2m` elements, `m` minima and `m` maxima, all maximal chains of
/// length one; plus whether covers match minima to maxima perfectly.
pub fn classify_bipartite(p: &Poset) -> BipartiteClass {
    let size = p.size();
    let minima = p.minimal_elements();
    let maxima = p.maximal_elements();
    let graded_length_one = p.rank_function().is_some_and(|r| r.length == 1);
    let is_mm = size.is_multiple_of(2) && graded_length_one && minima.len() == size / 2 && maxima.len() == size / 2;
    let m = if is_mm { size / 2 } else { 0 };
    let has_perfect_matching = is_mm && perfect_matching(p, &minima, &maxima);
    BipartiteClass {
        is_mm_bipartite: is_mm,
        m,
        has_perfect_matching,
    }
}

// Kuhn's augmenting paths on the cover graph between minima and maxima.
fn perfect_matching(p: &Poset, minima: &[usize], maxima: &[usize]) -> bool {
    let mut owner: Vec<Option<usize>> = vec![None; p.size() + 1];
    fn augment(p: &Poset, a: usize, seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for b in p.upper_covers(a) {
            if seen[b] {
                continue;
            }
            seen[b] = true;
            if owner[b].is_none_or(|o| augment(p, o, seen, owner)) {
                owner[b] = Some(a);
                return true;
            }
        }
        false
    }
    let matched = minima
        .iter()
        .filter(|&&a| augment(p, a, &mut vec![false; p.size() + 1], &mut owner))
        .count();
    matched == maxima.len() && matched == minima.len()
}

/// Bipartite theorem: `d = (q−1)^m (q−2)^m` for `(m,m)`-bipartite posets
/// with a perfect matching.
pub fn predict_bipartite(p: &Poset, q: u64) -> Result<Prediction> {
    let class = classify_bipartite(p);
    if !class.is_mm_bipartite {
        return Err(Error::NotBipartite);
    }
    if !class.has_perfect_matching {
        return Err(Error::NoPerfectMatching);
    }
    check_field(q)?;
    let m = class.m;
    let e = m as u32;
    let f = formula(e, e);
    Ok(Prediction {
        q,
        m: p.size(),
        n: length(q, p.size()),
        k: ideal_count(p)?,
        d: eval(q, e, e),
        exponents: Some((e, e)),
        formula: Some(f.clone()),
        method: Method::BipartiteTheorem,
        certificate: vec![
            format!("({m},{m})-bipartite with a perfect matching of minima to maxima"),
            format!("O_(A_{m}+A_{m}) in O_P in O_(H_{m}), both bounds have d = {f}"),
            format!("d = {f}"),
        ],
        flags: theorem_flags(q),
    })
}

/// `(lo, hi)` for the number of upper ideals: trees on `m` vertices give
/// `m+1 ..= 2^{m−1}+1`, `(m,m)`-bipartite posets `2^{m+1}−1 ..= 3^m`.
pub fn dimension_bounds(kind: PosetKind, m: usize) -> Result<(BigUint, BigUint)> {
    if m == 0 {
        return Err(Error::EmptyPoset);
    }
    let two = BigUint::from(2u32);
    Ok(match kind {
        PosetKind::Tree => (BigUint::from(m + 1), two.pow(m as u32 - 1) + 1u32),
        PosetKind::Bipartite => (two.pow(m as u32 + 1) - 1u32, BigUint::from(3u32).pow(m as u32)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosetKind {
    Tree,
    Bipartite,
}

/// Product over connected components.
pub fn predict_components(p: &Poset, q: u64, opts: &SearchOptions) -> Result<Prediction> {
    check_field(q)?;
    if p.is_connected() {
        return predict_auto(p, q, opts);
    }
    Ok(components(p, q, Some(opts))?.expect("exact fallback always answers"))
}

/// One pyramid step: `d(P) = (q−1) · d(P minus its unique minimum)`.
pub fn peel_minimum(p: &Poset, q: u64, opts: &SearchOptions) -> Result<Prediction> {
    Ok(peel(p, q, Some(opts))?.expect("exact fallback always answers"))
}

/// Reduction engine: components, unique minima, antichains and single
/// elements, then the bipartite theorem, then exact search.
pub fn predict_auto(p: &Poset, q: u64, opts: &SearchOptions) -> Result<Prediction> {
    Ok(reduce(p, q, Some(opts))?.expect("exact fallback always answers"))
}

/// The reduction engine without exact fallback: `None` when some piece is
/// out of reach of every closed form.
pub fn predict_closed_form(p: &Poset, q: u64) -> Result<Option<Prediction>> {
    reduce(p, q, None)
}

fn components(p: &Poset, q: u64, fallback: Option<&SearchOptions>) -> Result<Option<Prediction>> {
    let comps = p.connected_components();
    let mut certificate = vec![format!("{} components: d and k multiply", comps.len())];
    let mut d = BigUint::one();
    let mut k = BigUint::one();
    let mut exponents = Some((0u32, 0u32));
    let mut method = Method::Reduction;
    let mut flags = Vec::new();
    for (i, c) in comps.iter().enumerate() {
        let Some(part) = reduce(&c.poset, q, fallback)? else {
            return Ok(None);
        };
        let members: Vec<String> = c.embedding.iter().map(|e| format!("e{e}")).collect();
        certificate.push(format!("component {} on {{{}}}:", i + 1, members.join(",")));
        certificate.extend(part.certificate.iter().map(|s| format!("  {s}")));
        d *= &part.d;
        k *= &part.k;
        exponents = match (exponents, part.exponents) {
            (Some((a, b)), Some((x, y))) => Some((a + x, b + y)),
            _ => None,
        };
        if part.method == Method::ExactFallback {
            method = Method::ExactFallback;
        }
        for f in part.flags {
            if !flags.contains(&f) {
                flags.push(f);
            }
        }
    }
    let formula = exponents.map(|(a, b)| formula(a, b));
    if let Some(f) = &formula {
        certificate.push(format!("d = {f}"));
    }
    Ok(Some(Prediction {
        q,
        m: p.size(),
        n: length(q, p.size()),
        k,
        d,
        exponents,
        formula,
        method,
        certificate,
        flags,
    }))
}

fn peel(p: &Poset, q: u64, fallback: Option<&SearchOptions>) -> Result<Option<Prediction>> {
    let minima = p.minimal_elements();
    let [r] = minima.as_slice() else {
        return Err(Error::NoUniqueMinimum);
    };
    if p.size() == 1 {
        return Err(Error::Invalid("a single element has nothing above its minimum".into()));
    }
    check_field(q)?;
    let Some(rest) = reduce(&p.remove(*r)?, q, fallback)? else {
        return Ok(None);
    };
    let mut certificate = vec![format!("peel minimum e{r}: pyramid x(q-1)")];
    certificate.extend(rest.certificate.iter().map(|s| format!("  {s}")));
    let exponents = rest.exponents.map(|(a, b)| (a + 1, b));
    let formula = exponents.map(|(a, b)| formula(a, b));
    if let Some(f) = &formula {
        certificate.push(format!("d = {f}"));
    }
    Ok(Some(Prediction {
        q,
        m: p.size(),
        n: length(q, p.size()),
        k: rest.k + 1u32,
        d: rest.d * (q - 1),
        exponents,
        formula,
        method: if rest.method == Method::ExactFallback {
            Method::ExactFallback
        } else {
            Method::Reduction
        },
        certificate,
        flags: rest.flags,
    }))
}

fn reduce(p: &Poset, q: u64, fallback: Option<&SearchOptions>) -> Result<Option<Prediction>> {
    check_field(q)?;
    let m = p.size();
    if p.covers().is_empty() {
        let e = m as u32;
        let f = formula(0, e);
        let base = if m == 1 {
            "single element: segment [0,1], d = (q-2)".to_string()
        } else {
            format!("antichain A_{m}: cube (q-2)^{m}")
        };
        return Ok(Some(Prediction {
            q,
            m,
            n: length(q, m),
            k: BigUint::from(2u32).pow(e),
            d: eval(q, 0, e),
            exponents: Some((0, e)),
            formula: Some(f),
            method: Method::Reduction,
            certificate: vec![base],
            flags: Vec::new(),
        }));
    }
    if !p.is_connected() {
        return components(p, q, fallback);
    }
    if p.minimal_elements().len() == 1 {
        return peel(p, q, fallback);
    }
    let class = classify_bipartite(p);
    if class.is_mm_bipartite && class.has_perfect_matching {
        return predict_bipartite(p, q).map(Some);
    }
    let Some(opts) = fallback else {
        return Ok(None);
    };
    let mut pred = exact_prediction(p, q, opts)?;
    if class.is_mm_bipartite {
        pred.flags.push(FLAG_NO_MATCHING.to_string());
        pred.certificate.insert(
            0,
            format!("({0},{0})-bipartite without a perfect matching: theorem not applied", class.m),
        );
    }
    Ok(Some(pred))
}

/// The `(3,3)`-bipartite poset `a<x, b<x, c<y, c<z` (as `1,2,3 < 4,5,6`):
/// `{a,b}` has only one element above it, so no perfect matching exists.
pub fn hall_violating_example() -> Poset {
    Poset::new(6, &[(1, 4), (2, 4), (3, 5), (3, 6)]).expect("valid covers")
}

/// Exact search on the order polytope's code, packaged as a prediction.
pub fn exact_prediction(p: &Poset, q: u64, opts: &SearchOptions) -> Result<Prediction> {
    let code = build_code(&order_polytope(p)?, q)?;
    let result = min_distance_exact(&code, opts)?;
    let d = BigUint::from(result.d);
    let algorithm = serde_json::to_value(result.algorithm)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default();
    Ok(Prediction {
        q,
        m: p.size(),
        n: BigUint::from(code.n()),
        k: BigUint::from(code.k()),
        d: d.clone(),
        exponents: None,
        formula: None,
        method: Method::ExactFallback,
        certificate: vec![format!("exact {algorithm} search on {p}: d = {d}")],
        flags: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    fn exact(p: &Poset, q: u64) -> BigUint {
        exact_prediction(p, q, &opts()).unwrap().d
    }

    #[test]
    fn formulas() {
        assert_eq!(formula(9, 12), "(q-1)^9*(q-2)^12");
        assert_eq!(formula(1, 0), "(q-1)");
        assert_eq!(formula(0, 3), "(q-2)^3");
    }

    #[test]
    fn shrubs_and_chains() {
        for m in 2..=6 {
            let p = predict_tree(&Poset::shrub(m).unwrap(), 5).unwrap();
            assert_eq!(p.exponents, Some((1, m as u32 - 1)));
            assert_eq!(p.k, BigUint::from(2u32.pow(m as u32 - 1) + 1));
        }
        let c3 = predict_tree(&Poset::chain(3).unwrap(), 5).unwrap();
        assert_eq!(c3.d, BigUint::from(48u32));
        assert_eq!(c3.k, BigUint::from(4u32));
        assert_eq!(exact(&Poset::chain(3).unwrap(), 5), BigUint::from(48u32));
        let t = Poset::parse_tree("0,1,1,2,2").unwrap();
        let pt = predict_tree(&t, 4).unwrap();
        assert_eq!(pt.d, BigUint::from(72u32));
        assert_eq!(pt.n, BigUint::from(243u32));
        assert_eq!(exact(&t, 4), BigUint::from(72u32));
        let one = predict_tree(&Poset::chain(1).unwrap(), 5).unwrap();
        assert_eq!((one.d, one.exponents), (BigUint::from(3u32), Some((0, 1))));
    }

    #[test]
    fn field_hypotheses() {
        let s = Poset::shrub(3).unwrap();
        assert_eq!(predict_tree(&s, 2), Err(Error::SmallField(2)));
        let p3 = predict_tree(&s, 3).unwrap();
        assert_eq!(p3.flags, vec![FLAG_UNVERIFIED.to_string()]);
        assert!(predict_tree(&s, 4).unwrap().flags.is_empty());
        assert_eq!(predict_tree(&catalog::p1(), 4), Err(Error::NotTree));
        assert_eq!(predict_tree(&s, 6), Err(Error::NotPrimePower(6)));
    }

    #[test]
    fn shrubbery_example() {
        let t = catalog::shrubbery_example_tree();
        let p = predict_tree(&t, 4).unwrap();
        assert_eq!(p.formula.as_deref(), Some("(q-1)^9*(q-2)^12"));
        assert!(p.certificate.iter().any(|c| c.contains("(q-1)^9*(q-2)^12")));
        assert_eq!(p.d, BigUint::from(3u64.pow(9) * 2u64.pow(12)));
    }

    #[test]
    fn components_multiply() {
        let forest = Poset::shrub(2).unwrap().disjoint_union(&Poset::shrub(3).unwrap()).unwrap();
        let p = predict_components(&forest, 5, &opts()).unwrap();
        assert_eq!(p.d, BigUint::from(432u32));
        let p4 = predict_components(&forest, 4, &opts()).unwrap();
        assert_eq!(p4.d, BigUint::from(72u32));
        assert_eq!(p4.n, BigUint::from(243u32));
        assert_eq!(exact(&forest, 4), BigUint::from(72u32));
        let h3 = predict_auto(&catalog::h(3), 4, &opts()).unwrap();
        assert_eq!(h3.d, BigUint::from(216u32));
        assert_eq!(h3.k, BigUint::from(27u32));
    }

    #[test]
    fn peeling() {
        let c2 = peel_minimum(&Poset::chain(2).unwrap(), 5, &opts()).unwrap();
        assert_eq!(c2.d, BigUint::from(12u32));
        let s3 = peel_minimum(&Poset::shrub(3).unwrap(), 5, &opts()).unwrap();
        assert_eq!(s3.d, BigUint::from(36u32));
        assert_eq!(peel_minimum(&catalog::p1(), 5, &opts()), Err(Error::NoUniqueMinimum));
        let s4 = predict_auto(&Poset::shrub(4).unwrap(), 5, &opts()).unwrap();
        assert_eq!(s4.d, BigUint::from(108u32));
        assert!(s4.certificate[0].contains("pyramid x(q-1)"));
        assert!(s4.certificate.iter().any(|c| c.contains("cube (q-2)^3")));
    }

    #[test]
    fn bipartite() {
        for (p, k) in [(catalog::p1(), 7u32), (catalog::p2(), 8), (catalog::p3(), 9)] {
            let pred = predict_bipartite(&p, 5).unwrap();
            assert_eq!(pred.d, BigUint::from(144u32));
            assert_eq!(pred.k, BigUint::from(k));
        }
        let a3 = predict_bipartite(&catalog::antichain_stack(3), 4).unwrap();
        assert_eq!((a3.d, a3.k), (BigUint::from(216u32), BigUint::from(15u32)));
        let hall = Poset::new(6, &[(1, 4), (2, 4), (3, 4), (3, 5), (3, 6)]).unwrap();
        assert_eq!(
            classify_bipartite(&hall),
            BipartiteClass {
                is_mm_bipartite: true,
                m: 3,
                has_perfect_matching: false
            }
        );
        assert_eq!(predict_bipartite(&hall, 4), Err(Error::NoPerfectMatching));
        let split = hall_violating_example();
        assert_eq!(
            classify_bipartite(&split),
            BipartiteClass {
                is_mm_bipartite: true,
                m: 3,
                has_perfect_matching: false
            }
        );
        assert!(!classify_bipartite(&Poset::chain(4).unwrap()).is_mm_bipartite);
        assert_eq!(
            classify_bipartite(&catalog::p2()),
            BipartiteClass {
                is_mm_bipartite: true,
                m: 2,
                has_perfect_matching: true
            }
        );
        assert_eq!(predict_bipartite(&Poset::chain(3).unwrap(), 4), Err(Error::NotBipartite));
    }

    #[test]
    fn bounds() {
        let b = |kind, m| {
            let (lo, hi) = dimension_bounds(kind, m).unwrap();
            (lo.to_u64().unwrap(), hi.to_u64().unwrap())
        };
        assert_eq!(b(PosetKind::Tree, 4), (5, 9));
        assert_eq!(b(PosetKind::Bipartite, 2), (7, 9));
        assert_eq!(b(PosetKind::Bipartite, 1), (3, 3));
        for m in 1..=6 {
            let trees = catalog::rooted_trees(m);
            let ks: Vec<u64> = trees.iter().map(|t| ideal_count(t).unwrap().to_u64().unwrap()).collect();
            let (lo, hi) = b(PosetKind::Tree, m);
            assert_eq!((*ks.iter().min().unwrap(), *ks.iter().max().unwrap()), (lo, hi));
            for t in &trees {
                assert_eq!(ideal_count(t).unwrap(), BigUint::from(t.count_upper_ideals().unwrap()));
            }
        }
        for m in 1..=3 {
            let ks: Vec<u64> = catalog::bipartite_posets(m)
                .iter()
                .filter(|p| classify_bipartite(p).is_mm_bipartite)
                .map(|p| p.count_upper_ideals().unwrap())
                .collect();
            let (lo, hi) = b(PosetKind::Bipartite, m);
            assert_eq!((*ks.iter().min().unwrap(), *ks.iter().max().unwrap()), (lo, hi));
        }
    }

    #[test]
    fn auto_agrees_with_tree_theorem_and_exact() {
        for m in 1..=5 {
            for t in catalog::rooted_trees(m) {
                for q in [4u64, 5] {
                    let tree = predict_tree(&t, q).unwrap();
                    let auto = predict_auto(&t, q, &opts()).unwrap();
                    assert_eq!(tree.d, auto.d, "{t} q={q}");
                    assert_eq!(tree.exponents, auto.exponents);
                    assert_eq!(tree.k, auto.k);
                }
            }
        }
        // Peeling and shrubbery bookkeeping give the same exponents up to 6 vertices.
        for t in catalog::rooted_trees(6) {
            assert_eq!(
                predict_tree(&t, 7).unwrap().exponents,
                predict_auto(&t, 7, &opts()).unwrap().exponents
            );
        }
    }

    #[test]
    fn fallback_is_labelled() {
        let p = catalog::p1().ordinal_sum(&Poset::antichain(1).unwrap()).unwrap();
        let pred = predict_auto(&p, 4, &opts()).unwrap();
        assert_eq!(pred.method, Method::ExactFallback);
        assert_eq!(pred.d, exact(&p, 4));
        let hall = Poset::new(6, &[(1, 4), (2, 4), (3, 4), (3, 5), (3, 6)]).unwrap();
        let h = predict_auto(&hall, 3, &opts()).unwrap();
        assert_eq!(h.method, Method::ExactFallback);
        assert!(h.flags.contains(&FLAG_NO_MATCHING.to_string()));
        assert_eq!(predict_closed_form(&hall, 4).unwrap(), None);
        assert_eq!(predict_closed_form(&p, 4).unwrap(), None);
        assert_eq!(predict_closed_form(&catalog::h(2), 5).unwrap().unwrap().d, BigUint::from(144u32));
    }
}
