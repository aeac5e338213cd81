//! Exact lattice polytopes: construction, products and sums, lattice points,
//! facets, polar duals and the reflexivity checks used by the poset layer.

pub mod linalg;
mod posets;
mod transform;

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_rational::Rational64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{guard, Error, Result};
use linalg::{in_convex_hull, nullspace, rref, to_frac};

pub use posets::{
    hh_polar_check, order_polytope, ordinal_sum_equivalence_check, ordinal_sum_swapped_identity, poset_polytope,
    pyramid_equivalence_check, rank_shift, MAX_ORDINAL_SUM_ELEMENTS,
};
pub use transform::AffineTransform;

/// Bounding-box volume accepted by [`LatticePolytope::lattice_points`].
pub const MAX_BOX_VOLUME: u128 = 10_000_000;
/// Limits for [`LatticePolytope::polar_dual`].
pub const MAX_POLAR_DIM: usize = 8;
pub const MAX_POLAR_VERTICES: usize = 40;
/// Number of candidate hyperplanes tried by facet enumeration.
pub const MAX_FACET_CANDIDATES: u128 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn origin(dim: usize) -> Self {
        LatticePoint(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        LatticePoint(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// `⟨normal, x⟩ ≤ offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HalfSpace {
    pub normal: Vec<i64>,
    pub offset: Rational64,
}

impl HalfSpace {
    pub fn new(normal: Vec<i64>, offset: i64) -> Self {
        HalfSpace {
            normal,
            offset: Rational64::from_integer(offset),
        }
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.slack(x) >= Rational64::from_integer(0)
    }

    /// `offset − ⟨normal, x⟩`.
    pub fn slack(&self, x: &[i64]) -> Rational64 {
        let dot: i64 = self.normal.iter().zip(x).map(|(a, b)| a * b).sum();
        self.offset - Rational64::from_integer(dot)
    }

    // Scaled to a primitive integer normal with integer offset where possible.
    fn canonical(&self) -> (Vec<i64>, Rational64) {
        let g = self.normal.iter().fold(0i64, |g, &x| gcd(g, x)).max(1);
        (self.normal.iter().map(|x| x / g).collect(), self.offset / g)
    }
}

impl Serialize for HalfSpace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("HalfSpace", 2)?;
        st.serialize_field("normal", &self.normal)?;
        st.serialize_field("offset", &format!("{}/{}", self.offset.numer(), self.offset.denom()))?;
        st.end()
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Affine hull plus facet inequalities `⟨n, x⟩ ≤ b` (primitive integer `n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullDescription {
    /// `⟨a, x⟩ = c` cutting out the affine hull.
    pub equalities: Vec<(Vec<i64>, i64)>,
    /// Facets relative to the affine hull, sorted.
    pub facets: Vec<(Vec<i64>, i64)>,
    pub affine_dim: usize,
}

impl HullDescription {
    pub fn contains(&self, x: &[i64]) -> bool {
        self.equalities.iter().all(|(a, c)| dot(a, x) == *c) && self.facets.iter().all(|(n, b)| dot(n, x) <= *b)
    }

    pub fn contains_relative_interior(&self, x: &[i64]) -> bool {
        self.equalities.iter().all(|(a, c)| dot(a, x) == *c) && self.facets.iter().all(|(n, b)| dot(n, x) < *b)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A lattice polytope given by its extreme points, optionally with an
/// H-description. Equality compares the ambient dimension and vertex set.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<LatticePoint>,
    halfspaces: Option<Vec<HalfSpace>>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for LatticePolytope {}

impl Serialize for LatticePolytope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = if self.halfspaces.is_some() { 3 } else { 2 };
        let mut st = s.serialize_struct("LatticePolytope", n)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("vertices", &self.vertices)?;
        if let Some(h) = &self.halfspaces {
            st.serialize_field("halfspaces", h)?;
        }
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReflexivityReport {
    pub is_fano: bool,
    pub is_terminal: bool,
    pub is_gorenstein: bool,
}

impl ReflexivityReport {
    pub fn all(&self) -> bool {
        self.is_fano && self.is_terminal && self.is_gorenstein
    }
}

impl LatticePolytope {
    /// Convex hull of `points`, reduced to its extreme points.
    pub fn from_points(dim: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Invalid("polytope needs at least one point".into()));
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch(dim, p.len()));
        }
        let distinct: Vec<Vec<i64>> = points.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let mut extreme = Vec::with_capacity(distinct.len());
        for (i, p) in distinct.iter().enumerate() {
            let others: Vec<Vec<i64>> = distinct
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| q.clone())
                .collect();
            if !in_convex_hull(&others, p)? {
                extreme.push(LatticePoint(p.clone()));
            }
        }
        Ok(LatticePolytope::from_extreme(dim, extreme))
    }

    // Caller guarantees every point is extreme.
    pub(crate) fn from_extreme(dim: usize, mut vertices: Vec<LatticePoint>) -> Self {
        vertices.sort();
        vertices.dedup();
        LatticePolytope {
            dim,
            vertices,
            halfspaces: None,
        }
    }

    pub fn point(coords: Vec<i64>) -> Self {
        LatticePolytope::from_extreme(coords.len(), vec![LatticePoint(coords)])
    }

    /// `[a, b]` on the line.
    pub fn segment(a: i64, b: i64) -> Self {
        let (lo, hi) = (a.min(b), a.max(b));
        let mut s = LatticePolytope::from_extreme(1, vec![LatticePoint(vec![lo]), LatticePoint(vec![hi])]);
        s.halfspaces = Some(vec![HalfSpace::new(vec![-1], -lo), HalfSpace::new(vec![1], hi)]);
        s
    }

    /// `[0,1]^n`.
    pub fn unit_cube(n: usize) -> Self {
        let mut c = LatticePolytope::segment(0, 1);
        for _ in 1..n {
            c = c.direct_product(&LatticePolytope::segment(0, 1));
        }
        c
    }

    /// `conv{0, e_1, …, e_n}`.
    pub fn standard_simplex(n: usize) -> Self {
        let mut v = vec![LatticePoint::origin(n)];
        v.extend((0..n).map(|i| LatticePoint::unit(n, i)));
        let mut halfspaces: Vec<HalfSpace> = (0..n)
            .map(|i| {
                let mut a = vec![0; n];
                a[i] = -1;
                HalfSpace::new(a, 0)
            })
            .collect();
        halfspaces.push(HalfSpace::new(vec![1; n], 1));
        let mut s = LatticePolytope::from_extreme(n, v);
        s.halfspaces = Some(halfspaces);
        s
    }

    /// Attaches an H-description; see [`LatticePolytope::validate_halfspaces`].
    pub fn with_halfspaces(mut self, halfspaces: Vec<HalfSpace>) -> Result<Self> {
        if let Some(h) = halfspaces.iter().find(|h| h.normal.len() != self.dim) {
            return Err(Error::DimensionMismatch(self.dim, h.normal.len()));
        }
        self.halfspaces = Some(halfspaces);
        Ok(self)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn halfspaces(&self) -> Option<&[HalfSpace]> {
        self.halfspaces.as_deref()
    }

    fn vertex_rows(&self) -> Vec<Vec<i64>> {
        self.vertices.iter().map(|v| v.0.clone()).collect()
    }

    pub fn affine_dimension(&self) -> Result<usize> {
        let p0 = &self.vertices[0].0;
        let diffs: Vec<Vec<i64>> = self.vertices[1..]
            .iter()
            .map(|v| v.0.iter().zip(p0).map(|(a, b)| a - b).collect())
            .collect();
        if diffs.is_empty() {
            return Ok(0);
        }
        linalg::rank(&diffs)
    }

    pub fn contains(&self, x: &[i64]) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, x.len()));
        }
        match &self.halfspaces {
            Some(h) => Ok(h.iter().all(|h| h.contains(x))),
            None => in_convex_hull(&self.vertex_rows(), x),
        }
    }

    /// Coordinate-wise bounds of the vertex set.
    pub fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        let lo = (0..self.dim).map(|i| self.vertices.iter().map(|v| v.0[i]).min().unwrap_or(0)).collect();
        let hi = (0..self.dim).map(|i| self.vertices.iter().map(|v| v.0[i]).max().unwrap_or(0)).collect();
        (lo, hi)
    }

    /// Affine hull and facets by brute force over affinely independent
    /// vertex subsets of the projected full-dimensional polytope.
    pub fn hull_description(&self) -> Result<HullDescription> {
        let p0 = self.vertices[0].0.clone();
        let diffs: Vec<Vec<i64>> = self.vertices[1..]
            .iter()
            .map(|v| v.0.iter().zip(&p0).map(|(a, b)| a - b).collect())
            .collect();
        let (pivots, equalities) = if diffs.is_empty() {
            (Vec::new(), identity_rows(self.dim))
        } else {
            let mut m = to_frac(&diffs);
            (rref(&mut m)?, nullspace(&diffs, self.dim)?)
        };
        let equalities: Vec<(Vec<i64>, i64)> = equalities
            .into_iter()
            .map(|a| {
                let c = dot(&a, &p0);
                (a, c)
            })
            .collect();
        let e = pivots.len();
        if e == 0 {
            return Ok(HullDescription {
                equalities,
                facets: Vec::new(),
                affine_dim: 0,
            });
        }
        // The affine hull projects injectively onto the pivot coordinates.
        let projected: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .map(|v| pivots.iter().map(|&c| v.0[c]).collect())
            .collect();
        guard("facet candidates", binomial(projected.len() as u128, e as u128), MAX_FACET_CANDIDATES)?;
        let mut facets = BTreeSet::new();
        for subset in (0..projected.len()).combinations(e) {
            let base = &projected[subset[0]];
            let rows: Vec<Vec<i64>> = subset[1..]
                .iter()
                .map(|&i| projected[i].iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            let normals = if rows.is_empty() { vec![vec![1]] } else { nullspace(&rows, e)? };
            let [normal] = normals.as_slice() else { continue };
            let b = dot(normal, base);
            let (mut le, mut ge) = (true, true);
            for y in &projected {
                let s = dot(normal, y) - b;
                le &= s <= 0;
                ge &= s >= 0;
            }
            let (n, b) = match (le, ge) {
                (true, false) => (normal.clone(), b),
                (false, true) => (normal.iter().map(|x| -x).collect(), -b),
                _ => continue,
            };
            let mut lifted = vec![0; self.dim];
            for (&c, &v) in pivots.iter().zip(&n) {
                lifted[c] = v;
            }
            facets.insert((lifted, b));
        }
        Ok(HullDescription {
            equalities,
            facets: facets.into_iter().collect(),
            affine_dim: e,
        })
    }

    /// Whether the attached H-description cuts out exactly the vertex hull.
    /// Polytopes without halfspaces validate trivially.
    pub fn validate_halfspaces(&self) -> Result<bool> {
        let Some(h) = &self.halfspaces else {
            return Ok(true);
        };
        let hull = self.hull_description()?;
        if !hull.equalities.is_empty() {
            // Lower-dimensional: compare lattice points of the bounding box instead.
            let (lo, hi) = self.bounding_box();
            let mut ok = true;
            for_each_box_point(&lo, &hi, |x| ok &= hull.contains(x) == h.iter().all(|h| h.contains(x)))?;
            return Ok(ok);
        }
        let attached: BTreeSet<(Vec<i64>, Rational64)> = h.iter().map(HalfSpace::canonical).collect();
        let facets: BTreeSet<(Vec<i64>, Rational64)> = hull
            .facets
            .iter()
            .map(|(n, b)| (n.clone(), Rational64::from_integer(*b)))
            .collect();
        // Redundant attached inequalities are allowed if each is valid.
        let valid = h.iter().all(|h| self.vertices.iter().all(|v| h.contains(&v.0)));
        Ok(valid && facets.is_subset(&attached))
    }

    /// All lattice points in lexicographic order.
    pub fn lattice_points(&self) -> Result<Vec<LatticePoint>> {
        let (lo, hi) = self.bounding_box();
        let volume = box_volume(&lo, &hi);
        guard("bounding box volume", volume, MAX_BOX_VOLUME)?;
        let mut out = Vec::new();
        if let Some(h) = &self.halfspaces {
            for_each_box_point(&lo, &hi, |x| {
                if h.iter().all(|h| h.contains(x)) {
                    out.push(LatticePoint(x.to_vec()));
                }
            })?;
            return Ok(out);
        }
        match self.hull_description() {
            Ok(hull) => {
                for_each_box_point(&lo, &hi, |x| {
                    if hull.contains(x) {
                        out.push(LatticePoint(x.to_vec()));
                    }
                })?;
            }
            Err(Error::TooLarge { .. }) => {
                let rows = self.vertex_rows();
                let mut err = None;
                for_each_box_point(&lo, &hi, |x| match in_convex_hull(&rows, x) {
                    Ok(true) => out.push(LatticePoint(x.to_vec())),
                    Ok(false) => {}
                    Err(e) => err = Some(e),
                })?;
                if let Some(e) = err {
                    return Err(e);
                }
            }
            Err(e) => return Err(e),
        }
        Ok(out)
    }

    /// Lattice points of the relative interior, in lexicographic order.
    pub fn interior_lattice_points(&self) -> Result<Vec<LatticePoint>> {
        let (lo, hi) = self.bounding_box();
        guard("bounding box volume", box_volume(&lo, &hi), MAX_BOX_VOLUME)?;
        let hull = self.hull_description()?;
        let mut out = Vec::new();
        for_each_box_point(&lo, &hi, |x| {
            if hull.contains_relative_interior(x) {
                out.push(LatticePoint(x.to_vec()));
            }
        })?;
        Ok(out)
    }

    /// `{y : ⟨x, y⟩ ≤ 1 for all x}`; must again be a lattice polytope.
    pub fn polar_dual(&self) -> Result<LatticePolytope> {
        guard("polar dual dimension", self.dim as u128, MAX_POLAR_DIM as u128)?;
        guard("polar dual vertex count", self.vertices.len() as u128, MAX_POLAR_VERTICES as u128)?;
        let hull = self.hull_description()?;
        if !hull.equalities.is_empty() || hull.facets.iter().any(|(_, b)| *b <= 0) {
            return Err(Error::OriginNotInterior);
        }
        let mut vertices = Vec::with_capacity(hull.facets.len());
        for (n, b) in &hull.facets {
            if n.iter().any(|x| x % b != 0) {
                return Err(Error::RationalPolytope);
            }
            vertices.push(LatticePoint(n.iter().map(|x| x / b).collect()));
        }
        let halfspaces = self.vertices.iter().map(|v| HalfSpace::new(v.0.clone(), 1)).collect();
        let mut polar = LatticePolytope::from_extreme(self.dim, vertices);
        polar.halfspaces = Some(halfspaces);
        Ok(polar)
    }

    pub fn reflexivity_report(&self) -> Result<ReflexivityReport> {
        let points = self.lattice_points()?;
        let interior = self.interior_lattice_points()?;
        let is_fano = interior.len() == 1 && interior[0].is_origin();
        let interior: BTreeSet<&LatticePoint> = interior.iter().collect();
        let is_terminal = points
            .iter()
            .filter(|p| !interior.contains(p))
            .all(|p| self.vertices.binary_search(p).is_ok());
        let is_gorenstein = match self.polar_dual() {
            Ok(_) => true,
            Err(Error::RationalPolytope | Error::OriginNotInterior) => false,
            Err(e) => return Err(e),
        };
        Ok(ReflexivityReport {
            is_fano,
            is_terminal,
            is_gorenstein,
        })
    }

    /// `a × b`.
    pub fn direct_product(&self, other: &LatticePolytope) -> LatticePolytope {
        let vertices = self
            .vertices
            .iter()
            .cartesian_product(&other.vertices)
            .map(|(a, b)| LatticePoint(a.0.iter().chain(&b.0).copied().collect()))
            .collect();
        let halfspaces = match (&self.halfspaces, &other.halfspaces) {
            (Some(ha), Some(hb)) => {
                let mut h: Vec<HalfSpace> = ha
                    .iter()
                    .map(|h| HalfSpace {
                        normal: h.normal.iter().copied().chain(std::iter::repeat_n(0, other.dim)).collect(),
                        offset: h.offset,
                    })
                    .collect();
                h.extend(hb.iter().map(|h| HalfSpace {
                    normal: std::iter::repeat_n(0, self.dim).chain(h.normal.iter().copied()).collect(),
                    offset: h.offset,
                }));
                Some(h)
            }
            _ => None,
        };
        let mut p = LatticePolytope::from_extreme(self.dim + other.dim, vertices);
        p.halfspaces = halfspaces;
        p
    }

    /// `conv(a × {0} ∪ {0} × b)`; both summands must contain their origin.
    pub fn free_sum(&self, other: &LatticePolytope) -> Result<LatticePolytope> {
        if !self.contains(&vec![0; self.dim])? || !other.contains(&vec![0; other.dim])? {
            return Err(Error::OriginMissing);
        }
        let dim = self.dim + other.dim;
        let mut points: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .map(|v| v.0.iter().copied().chain(std::iter::repeat_n(0, other.dim)).collect())
            .collect();
        points.extend(
            other
                .vertices
                .iter()
                .map(|v| std::iter::repeat_n(0, self.dim).chain(v.0.iter().copied()).collect()),
        );
        LatticePolytope::from_points(dim, points)
    }

    /// `conv{e_{n+1}, (x, 0) : x ∈ a}`.
    pub fn unit_pyramid(&self) -> Result<LatticePolytope> {
        let actual = self.affine_dimension()?;
        if actual < 1 {
            return Err(Error::Dimension { needed: 1, actual });
        }
        let mut vertices: Vec<LatticePoint> = self
            .vertices
            .iter()
            .map(|v| LatticePoint(v.0.iter().copied().chain([0]).collect()))
            .collect();
        vertices.push(LatticePoint::unit(self.dim + 1, self.dim));
        Ok(LatticePolytope::from_extreme(self.dim + 1, vertices))
    }

    pub fn dilate(&self, k: i64) -> Result<LatticePolytope> {
        if k <= 0 {
            return Err(Error::Invalid(format!("dilation factor must be positive, got {k}")));
        }
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                v.0.iter()
                    .map(|c| c.checked_mul(k).ok_or(Error::ArithmeticOverflow))
                    .collect::<Result<Vec<_>>>()
                    .map(LatticePoint)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut p = LatticePolytope::from_extreme(self.dim, vertices);
        p.halfspaces = self.halfspaces.as_ref().map(|h| {
            h.iter()
                .map(|h| HalfSpace {
                    normal: h.normal.clone(),
                    offset: h.offset * k,
                })
                .collect()
        });
        Ok(p)
    }

    pub fn translate(&self, u: &[i64]) -> Result<LatticePolytope> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, u.len()));
        }
        self.apply(&AffineTransform::translation(u.to_vec()))
    }

    pub fn negate(&self) -> LatticePolytope {
        let vertices = self
            .vertices
            .iter()
            .map(|v| LatticePoint(v.0.iter().map(|c| -c).collect()))
            .collect();
        let mut p = LatticePolytope::from_extreme(self.dim, vertices);
        p.halfspaces = self.halfspaces.as_ref().map(|h| {
            h.iter()
                .map(|h| HalfSpace {
                    normal: h.normal.iter().map(|c| -c).collect(),
                    offset: h.offset,
                })
                .collect()
        });
        p
    }

    pub fn apply(&self, t: &AffineTransform) -> Result<LatticePolytope> {
        if t.dim() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, t.dim()));
        }
        let vertices = self.vertices.iter().map(|v| t.apply(v)).collect();
        let mut p = LatticePolytope::from_extreme(self.dim, vertices);
        if let Some(h) = &self.halfspaces {
            let mit = t.inverse_transpose()?;
            p.halfspaces = Some(
                h.iter()
                    .map(|h| {
                        let normal: Vec<i64> = mit.iter().map(|row| dot(row, &h.normal)).collect();
                        let offset = h.offset + Rational64::from_integer(dot(&normal, t.shift()));
                        HalfSpace { normal, offset }
                    })
                    .collect(),
            );
        }
        Ok(p)
    }

    /// All vertex coordinates lie in `[0, q−2]`.
    pub fn fits_in_box(&self, q: u64) -> bool {
        let top = q as i64 - 2;
        self.vertices.iter().all(|v| v.0.iter().all(|&c| (0..=top).contains(&c)))
    }
}

fn identity_rows(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k.min(n - k) {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

fn box_volume(lo: &[i64], hi: &[i64]) -> u128 {
    lo.iter()
        .zip(hi)
        .fold(1u128, |acc, (l, h)| acc.saturating_mul((h - l + 1) as u128))
}

// Visits the integer points of the box in lexicographic order.
fn for_each_box_point(lo: &[i64], hi: &[i64], mut f: impl FnMut(&[i64])) -> Result<()> {
    guard("bounding box volume", box_volume(lo, hi), MAX_BOX_VOLUME)?;
    let mut x = lo.to_vec();
    loop {
        f(&x);
        let mut i = x.len();
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if x[i] < hi[i] {
                x[i] += 1;
                break;
            }
            x[i] = lo[i];
        }
    }
}
