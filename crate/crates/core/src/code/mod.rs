//! Toric codes: evaluate the monomials of a polytope's lattice points at
//! every point of the torus `(F_q^*)^m`.

mod search;

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{guard, Error, Result};
use crate::field::{Elem, FieldInfo, GaloisField};
use crate::geometry::{LatticePoint, LatticePolytope};

pub use search::{
    min_distance_exact, search_cost, DistanceResult, SearchAlgorithm, SearchOptions, Strategy, DEFAULT_MAX_EXHAUSTIVE_COST,
    DEFAULT_MAX_INFORMATION_SET_COST,
};

/// Largest code length accepted by [`build_code`].
pub const MAX_LENGTH: u128 = 1_000_000;
/// Largest generator matrix (rows × columns) materialised.
pub const MAX_MATRIX_ENTRIES: u128 = 50_000_000;

#[derive(Clone, Debug)]
pub struct ToricCode {
    field: GaloisField,
    dim: usize,
    exponents: Vec<LatticePoint>,
    generator: Vec<Vec<Elem>>,
    n: usize,
    /// Indices of the greedily chosen independent generator rows.
    basis_rows: Vec<usize>,
}

/// Torus points `(x_1, …, x_m)` over the units in odometer order, the last
/// coordinate varying fastest.
pub fn torus_points(field: &GaloisField, m: usize) -> Vec<Vec<Elem>> {
    let units = field.units();
    let mut out = vec![Vec::with_capacity(m)];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                units.iter().map(move |&u| {
                    let mut p = prefix.clone();
                    p.push(u);
                    p
                })
            })
            .collect();
    }
    out
}

/// The code of `a` over `GF(q)`; `a` must lie in the non-negative orthant.
pub fn build_code(a: &LatticePolytope, q: u64) -> Result<ToricCode> {
    let field = GaloisField::new(q)?;
    build_code_in(a, field)
}

pub fn build_code_in(a: &LatticePolytope, field: GaloisField) -> Result<ToricCode> {
    if a.vertices().iter().any(|v| v.0.iter().any(|&c| c < 0)) {
        return Err(Error::NegativeExponent);
    }
    let m = a.ambient_dim();
    let q = field.q();
    let n = (q as u128 - 1).checked_pow(m as u32).unwrap_or(u128::MAX);
    guard("code length", n, MAX_LENGTH)?;
    let n = n as usize;
    let exponents = a.lattice_points()?;
    guard("generator matrix entries", exponents.len() as u128 * n as u128, MAX_MATRIX_ENTRIES)?;

    // x^e depends only on e mod (q − 1) on the torus.
    let order = q as usize - 1;
    let powers: Vec<Vec<Elem>> = (0..q as Elem)
        .map(|x| (0..order).map(|e| field.pow(x, e as u64)).collect())
        .collect();
    let torus = torus_points(&field, m);
    let generator: Vec<Vec<Elem>> = exponents
        .iter()
        .map(|u| {
            torus
                .iter()
                .map(|x| {
                    x.iter().zip(&u.0).fold(1, |acc, (&xi, &ui)| {
                        field.mul(acc, powers[xi as usize][ui as usize % order])
                    })
                })
                .collect()
        })
        .collect();
    let basis_rows = independent_rows(&field, &generator);
    Ok(ToricCode {
        field,
        dim: m,
        exponents,
        generator,
        n,
        basis_rows,
    })
}

// Greedy row basis by incremental elimination over the field.
fn independent_rows(field: &GaloisField, rows: &[Vec<Elem>]) -> Vec<usize> {
    let mut echelon: Vec<(usize, Vec<Elem>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut r = row.clone();
        for (pivot, basis) in &echelon {
            let c = r[*pivot];
            if c != 0 {
                let f = field.neg(c);
                for (x, &b) in r.iter_mut().zip(basis) {
                    *x = field.add(*x, field.mul(f, b));
                }
            }
        }
        if let Some(pivot) = r.iter().position(|&x| x != 0) {
            let s = field.inv(r[pivot]).expect("nonzero pivot");
            for x in r.iter_mut() {
                *x = field.mul(*x, s);
            }
            // Keep earlier rows reduced at the new pivot.
            for (_, basis) in echelon.iter_mut() {
                let c = basis[pivot];
                if c != 0 {
                    let f = field.neg(c);
                    for (x, &b) in basis.iter_mut().zip(&r) {
                        *x = field.add(*x, field.mul(f, b));
                    }
                }
            }
            echelon.push((pivot, r));
            chosen.push(idx);
        }
    }
    chosen
}

impl ToricCode {
    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn exponents(&self) -> &[LatticePoint] {
        &self.exponents
    }

    pub fn generator_matrix(&self) -> &[Vec<Elem>] {
        &self.generator
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.basis_rows.len()
    }

    pub fn basis_rows(&self) -> &[usize] {
        &self.basis_rows
    }

    /// `Σ coeffs[i] · row_i` over all exponent rows.
    pub fn encode(&self, coeffs: &[Elem]) -> Result<Vec<Elem>> {
        if coeffs.len() != self.generator.len() {
            return Err(Error::DimensionMismatch(self.generator.len(), coeffs.len()));
        }
        let mut word = vec![0; self.n];
        for (&c, row) in coeffs.iter().zip(&self.generator) {
            if c != 0 {
                for (w, &g) in word.iter_mut().zip(row) {
                    *w = self.field.add(*w, self.field.mul(c, g));
                }
            }
        }
        Ok(word)
    }

    pub fn transmission_rate(&self) -> Rate {
        Rate(Ratio::new(self.k() as u64, self.n as u64))
    }
}

/// `n − d`: the most zeros a nonzero section has on the torus.
pub fn max_zeros(n: usize, d: usize) -> usize {
    n - d
}

pub fn hamming_weight(word: &[Elem]) -> usize {
    word.iter().filter(|&&x| x != 0).count()
}

/// Translate so every coordinate minimum is zero; fails unless the result
/// fits in `[0, q−2]^m`.
pub fn normalize_to_box(a: &LatticePolytope, q: u64) -> Result<LatticePolytope> {
    let (lo, hi) = a.bounding_box();
    let shift: Vec<i64> = lo.iter().map(|x| -x).collect();
    let moved = a.translate(&shift)?;
    if !moved.fits_in_box(q) {
        let width = lo.iter().zip(&hi).map(|(l, h)| h - l).max().unwrap_or(0);
        return Err(Error::BoxOverflow { width, q });
    }
    Ok(moved)
}

/// Exact `k/n`, serialised as `"k/n"` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rate(pub Ratio<u64>);

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for Rate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Length and distance of a code on an `m`-dimensional torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeFacts {
    pub m: usize,
    pub d: u128,
}

/// `max{(q−1)^{m+n} − Z(f)(q−1)^n, (q−1)^{m+n} − Z(g)(q−1)^m}` with
/// `Z = length − d` for each summand.
pub fn free_sum_distance_upper_bound(p: CodeFacts, r: CodeFacts, q: u64) -> u128 {
    let base = q as u128 - 1;
    let total = base.pow((p.m + r.m) as u32);
    let zp = base.pow(p.m as u32) - p.d;
    let zr = base.pow(r.m as u32) - r.d;
    (total - zp * base.pow(r.m as u32)).max(total - zr * base.pow(p.m as u32))
}

/// Everything reported about one code.
#[derive(Clone, Debug, Serialize)]
pub struct CodeReport {
    pub q: u64,
    pub modulus: String,
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub lattice_points: usize,
    pub rate: Rate,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_zeros: Option<usize>,
    pub method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algorithm: Option<SearchAlgorithm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Elem>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

impl CodeReport {
    pub fn new(code: &ToricCode, distance: Option<&DistanceResult>) -> Self {
        let info = FieldInfo::from(code.field());
        CodeReport {
            q: info.q,
            modulus: info.modulus,
            m: code.ambient_dim(),
            n: code.n(),
            k: code.k(),
            lattice_points: code.exponents().len(),
            rate: code.transmission_rate(),
            d: distance.map(|r| r.d),
            max_zeros: distance.map(|r| max_zeros(code.n(), r.d)),
            method: if distance.is_some() { "exact" } else { "dimension-only" },
            algorithm: distance.map(|r| r.algorithm),
            witness: distance.map(|r| r.witness.clone()),
            seconds: None,
        }
    }
}
