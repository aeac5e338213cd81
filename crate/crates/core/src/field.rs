//! Finite fields `GF(p^k)` with `q ≤ 512`, backed by full operation tables.
//!
//! An element is the integer `Σ a_i p^i` encoding the residue
//! `Σ a_i t^i` modulo a fixed monic irreducible polynomial.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_Q: u64 = 512;

pub type Elem = u16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisField {
    p: u16,
    k: u32,
    q: u16,
    /// Coefficients low to high, monic, length `k + 1`.
    modulus: Vec<u16>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

/// Splits `q` as `p^k`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

// Polynomials over GF(p) as coefficient vectors, low to high.
fn poly_rem(a: &[u16], b: &[u16], p: u16) -> Vec<u16> {
    let mut r: Vec<u32> = a.iter().map(|&x| x as u32).collect();
    let p = p as u32;
    let db = b.len() - 1;
    let lead_inv = mod_inverse(b[db] as u32, p);
    while r.len() > db {
        let top = *r.last().unwrap_or(&0);
        if top != 0 {
            let f = top * lead_inv % p;
            let shift = r.len() - 1 - db;
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - f * c as u32 % p) % p;
            }
        }
        r.pop();
    }
    r.into_iter().map(|x| x as u16).collect()
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    (1..p).find(|x| a * x % p == 1).unwrap_or(0)
}

fn decode(mut x: u32, p: u32, len: usize) -> Vec<u16> {
    (0..len)
        .map(|_| {
            let c = x % p;
            x /= p;
            c as u16
        })
        .collect()
}

fn is_irreducible(f: &[u16], p: u16) -> bool {
    let k = f.len() - 1;
    for d in 1..=k / 2 {
        for low in 0..(p as u32).pow(d as u32) {
            let mut g = decode(low, p as u32, d);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl GaloisField {
    pub fn new(q: u64) -> Result<Self> {
        if q > MAX_Q {
            return Err(Error::NotPrimePower(q));
        }
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let (p, q) = (p as u16, q as u16);
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            // Smallest encoding of the lower coefficients; this is the
            // lexicographic order on (c_{k-1}, …, c_0).
            (0..q as u32)
                .map(|low| {
                    let mut f = decode(low, p as u32, k as usize);
                    f.push(1);
                    f
                })
                .find(|f| is_irreducible(f, p))
                .expect("an irreducible polynomial of every degree exists")
        };
        let n = q as usize;
        let pu = p as u32;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            let da = decode(a as u32, pu, k as usize);
            for b in 0..n {
                let db = decode(b as u32, pu, k as usize);
                let sum: Vec<u16> = da.iter().zip(&db).map(|(x, y)| ((*x as u32 + *y as u32) % pu) as u16).collect();
                add[a * n + b] = encode(&sum, pu);
                let mut prod = vec![0u32; 2 * k as usize - 1];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x as u32 * y as u32) % pu;
                    }
                }
                let prod: Vec<u16> = prod.into_iter().map(|x| x as u16).collect();
                let r = if k == 1 { prod } else { poly_rem(&prod, &modulus, p) };
                mul[a * n + b] = encode(&r, pu);
            }
        }
        let neg = (0..n).map(|a| (0..n).find(|&b| add[a * n + b] == 0).unwrap_or(0) as Elem).collect();
        let inv = (0..n)
            .map(|a| if a == 0 { 0 } else { (1..n).find(|&b| mul[a * n + b] == 1).unwrap_or(0) as Elem })
            .collect();
        Ok(GaloisField {
            p,
            k,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q as u64
    }

    /// Monic modulus coefficients, low to high.
    pub fn modulus(&self) -> &[u16] {
        &self.modulus
    }

    /// The modulus written as a polynomial in `t`, e.g. `t^2+t+1`.
    pub fn modulus_string(&self) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => coeff,
                1 => format!("{coeff}t"),
                _ => format!("{coeff}t^{i}"),
            });
        }
        terms.join("+")
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// `x^e` by square-and-multiply, with `0^0 = 1`.
    pub fn pow(&self, x: Elem, mut e: u64) -> Elem {
        let mut base = x;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Nonzero elements in ascending encoding order.
    pub fn units(&self) -> Vec<Elem> {
        (1..self.q).collect()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.q
    }
}

fn encode(c: &[u16], p: u32) -> Elem {
    c.iter().rev().fold(0u32, |acc, &x| acc * p + x as u32) as Elem
}

impl fmt::Display for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "GF({})", self.q)
        } else {
            write!(f, "GF({})[t]/({})", self.p, self.modulus_string())
        }
    }
}

/// Field summary for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldInfo {
    pub q: u64,
    pub p: u64,
    pub k: u32,
    pub modulus: String,
}

impl From<&GaloisField> for FieldInfo {
    fn from(f: &GaloisField) -> Self {
        FieldInfo {
            q: f.q(),
            p: f.p(),
            k: f.k(),
            modulus: f.modulus_string(),
        }
    }
}
