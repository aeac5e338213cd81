//! Exact rational linear algebra on small dense matrices.
//!
//! Entries are `i128` fractions with checked arithmetic; any overflow is
//! reported as [`Error::ArithmeticOverflow`] rather than wrapped.

use std::cmp::Ordering;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frac {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Frac {
    pub const ZERO: Frac = Frac { num: 0, den: 1 };
    pub const ONE: Frac = Frac { num: 1, den: 1 };

    pub fn int(v: i64) -> Frac {
        Frac { num: v as i128, den: 1 }
    }

    pub fn new(num: i128, den: i128) -> Result<Frac> {
        if den == 0 {
            return Err(Error::Invalid("zero denominator".into()));
        }
        let g = gcd(num, den).max(1);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = num.checked_neg().ok_or(Error::ArithmeticOverflow)?;
            den = den.checked_neg().ok_or(Error::ArithmeticOverflow)?;
        }
        Ok(Frac { num, den })
    }

    pub fn numer(self) -> i128 {
        self.num
    }

    pub fn denom(self) -> i128 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn signum(self) -> i128 {
        self.num.signum()
    }

    pub fn add(self, o: Frac) -> Result<Frac> {
        let g = gcd(self.den, o.den);
        let l = self.den / g;
        let num = self
            .num
            .checked_mul(o.den / g)
            .and_then(|a| o.num.checked_mul(l).and_then(|b| a.checked_add(b)))
            .ok_or(Error::ArithmeticOverflow)?;
        let den = l.checked_mul(o.den).ok_or(Error::ArithmeticOverflow)?;
        Frac::new(num, den)
    }

    pub fn neg(self) -> Result<Frac> {
        Ok(Frac {
            num: self.num.checked_neg().ok_or(Error::ArithmeticOverflow)?,
            den: self.den,
        })
    }

    pub fn sub(self, o: Frac) -> Result<Frac> {
        self.add(o.neg()?)
    }

    pub fn mul(self, o: Frac) -> Result<Frac> {
        let g1 = gcd(self.num, o.den).max(1);
        let g2 = gcd(o.num, self.den).max(1);
        let num = (self.num / g1)
            .checked_mul(o.num / g2)
            .ok_or(Error::ArithmeticOverflow)?;
        let den = (self.den / g2)
            .checked_mul(o.den / g1)
            .ok_or(Error::ArithmeticOverflow)?;
        Frac::new(num, den)
    }

    pub fn div(self, o: Frac) -> Result<Frac> {
        if o.is_zero() {
            return Err(Error::Invalid("division by zero".into()));
        }
        self.mul(Frac::new(o.den, o.num)?)
    }

    pub fn cmp_exact(self, o: Frac) -> Result<Ordering> {
        let a = self.num.checked_mul(o.den).ok_or(Error::ArithmeticOverflow)?;
        let b = o.num.checked_mul(self.den).ok_or(Error::ArithmeticOverflow)?;
        Ok(a.cmp(&b))
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Frac>]) -> Result<Vec<usize>> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Frac::ONE.div(m[r][c])?;
        for x in m[r].iter_mut() {
            *x = x.mul(inv)?;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..cols {
                    let t = m[r][j].mul(f)?;
                    m[i][j] = m[i][j].sub(t)?;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

pub fn to_frac(rows: &[Vec<i64>]) -> Vec<Vec<Frac>> {
    rows.iter().map(|r| r.iter().map(|&v| Frac::int(v)).collect()).collect()
}

pub fn rank(rows: &[Vec<i64>]) -> Result<usize> {
    let mut m = to_frac(rows);
    Ok(rref(&mut m)?.len())
}

/// Integer basis of `{x : rows · x = 0}`, each vector primitive.
pub fn nullspace(rows: &[Vec<i64>], cols: usize) -> Result<Vec<Vec<i64>>> {
    let mut m = to_frac(rows);
    let pivots = rref(&mut m)?;
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Frac::ZERO; cols];
        v[free] = Frac::ONE;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = m[r][free].neg()?;
        }
        basis.push(primitive(&v)?);
    }
    Ok(basis)
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive(v: &[Frac]) -> Result<Vec<i64>> {
    let mut lcm: i128 = 1;
    for x in v {
        let g = gcd(lcm, x.denom());
        lcm = (lcm / g).checked_mul(x.denom()).ok_or(Error::ArithmeticOverflow)?;
    }
    let ints: Vec<i128> = v
        .iter()
        .map(|x| x.numer().checked_mul(lcm / x.denom()).ok_or(Error::ArithmeticOverflow))
        .collect::<Result<_>>()?;
    let g = ints.iter().fold(0, |g, &x| gcd(g, x)).max(1);
    ints.iter()
        .map(|&x| i64::try_from(x / g).map_err(|_| Error::ArithmeticOverflow))
        .collect()
}

/// Exact determinant of a square integer matrix.
pub fn determinant(rows: &[Vec<i64>]) -> Result<Frac> {
    let n = rows.len();
    let mut m = to_frac(rows);
    let mut det = Frac::ONE;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Ok(Frac::ZERO);
        };
        if p != c {
            m.swap(p, c);
            det = det.neg()?;
        }
        det = det.mul(m[c][c])?;
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].div(m[c][c])?;
            for j in c..n {
                let t = m[c][j].mul(f)?;
                m[i][j] = m[i][j].sub(t)?;
            }
        }
    }
    Ok(det)
}

/// Inverse of a square integer matrix, as fractions. `None` when singular.
pub fn inverse(rows: &[Vec<i64>]) -> Result<Option<Vec<Vec<Frac>>>> {
    let n = rows.len();
    let mut m: Vec<Vec<Frac>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<Frac> = r.iter().map(|&v| Frac::int(v)).collect();
            row.extend((0..n).map(|j| if i == j { Frac::ONE } else { Frac::ZERO }));
            row
        })
        .collect();
    let pivots = rref(&mut m)?;
    if pivots.len() < n || pivots[n - 1] >= n {
        return Ok(None);
    }
    Ok(Some(m.into_iter().map(|r| r[n..].to_vec()).collect()))
}

/// Whether `target` is a convex combination of `points`.
///
/// Phase-one simplex with Bland's rule on the system
/// `Σ λ_i p_i = target, Σ λ_i = 1, λ ≥ 0`.
pub fn in_convex_hull(points: &[Vec<i64>], target: &[i64]) -> Result<bool> {
    if points.is_empty() {
        return Ok(false);
    }
    let d = target.len();
    let n = points.len();
    let rows = d + 1;
    // Columns: λ_0..λ_{n-1}, artificials a_0..a_{rows-1}, rhs.
    let width = n + rows + 1;
    let mut t: Vec<Vec<Frac>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let mut row = vec![Frac::ZERO; width];
        let (coeffs, rhs): (Vec<i64>, i64) = if r < d {
            (points.iter().map(|p| p[r]).collect(), target[r])
        } else {
            (vec![1; n], 1)
        };
        let flip = if rhs < 0 { -1 } else { 1 };
        for (j, c) in coeffs.iter().enumerate() {
            row[j] = Frac::int(c * flip);
        }
        row[n + r] = Frac::ONE;
        row[width - 1] = Frac::int(rhs * flip);
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + rows).collect();
    // Reduced costs of the phase-one objective Σ a_r.
    let mut cost = vec![Frac::ZERO; width];
    for row in &t {
        for j in 0..n {
            cost[j] = cost[j].sub(row[j])?;
        }
        cost[width - 1] = cost[width - 1].sub(row[width - 1])?;
    }
    loop {
        let Some(enter) = (0..width - 1).find(|&j| cost[j].signum() < 0) else {
            break;
        };
        let mut leave: Option<(usize, Frac)> = None;
        for r in 0..rows {
            if t[r][enter].signum() > 0 {
                let ratio = t[r][width - 1].div(t[r][enter])?;
                let better = match leave {
                    None => true,
                    Some((lr, lratio)) => match ratio.cmp_exact(lratio)? {
                        Ordering::Less => true,
                        Ordering::Equal => basis[r] < basis[lr],
                        Ordering::Greater => false,
                    },
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            // Unbounded is impossible for phase one; treat as infeasible.
            return Ok(false);
        };
        let pv = t[pr][enter];
        for x in t[pr].iter_mut() {
            *x = x.div(pv)?;
        }
        let pivot_row = t[pr].clone();
        for (r, row) in t.iter_mut().enumerate() {
            if r != pr && !row[enter].is_zero() {
                let f = row[enter];
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x = x.sub(p.mul(f)?)?;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter];
            for (x, &p) in cost.iter_mut().zip(&pivot_row) {
                *x = x.sub(p.mul(f)?)?;
            }
        }
        basis[pr] = enter;
    }
    Ok(cost[width - 1].is_zero())
}
