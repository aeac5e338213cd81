//! Polytopes attached to posets and the identities relating them.

use super::{AffineTransform, HalfSpace, LatticePoint, LatticePolytope};
use crate::error::{guard, Error, Result};
use crate::poset::{Poset, MAX_IDEAL_ELEMENTS};

/// Largest `|p| + |q|` accepted by [`ordinal_sum_equivalence_check`].
pub const MAX_ORDINAL_SUM_ELEMENTS: usize = 20;

/// Convex hull of the indicator vectors of upper ideals, with the cover
/// inequalities of `P̂` attached.
pub fn order_polytope(p: &Poset) -> Result<LatticePolytope> {
    let m = p.size();
    guard("order polytope size", m as u128, MAX_IDEAL_ELEMENTS as u128)?;
    let vertices = p
        .upper_ideals()?
        .into_iter()
        .map(|w| LatticePoint(w.indicator(m)))
        .collect();
    let unit = |i: usize, s: i64| {
        let mut a = vec![0; m];
        a[i - 1] = s;
        a
    };
    let mut halfspaces: Vec<HalfSpace> = p.minimal_elements().into_iter().map(|i| HalfSpace::new(unit(i, -1), 0)).collect();
    halfspaces.extend(p.maximal_elements().into_iter().map(|j| HalfSpace::new(unit(j, 1), 1)));
    halfspaces.extend(p.covers().iter().map(|&(i, j)| {
        let mut a = unit(i, 1);
        a[j - 1] = -1;
        HalfSpace::new(a, 0)
    }));
    LatticePolytope::from_extreme(m, vertices).with_halfspaces(halfspaces)
}

/// Convex hull of the cover vectors of `P̂`: `e_i` below `1̂`, `e_i − e_j`
/// for covers in `P`, `−e_j` above `0̂`.
pub fn poset_polytope(p: &Poset) -> Result<LatticePolytope> {
    let m = p.size();
    guard("poset polytope size", m as u128, MAX_IDEAL_ELEMENTS as u128)?;
    let mut points = Vec::new();
    for j in p.maximal_elements() {
        points.push(LatticePoint::unit(m, j - 1).0);
    }
    for &(i, j) in p.covers() {
        let mut v = vec![0; m];
        v[i - 1] = 1;
        v[j - 1] = -1;
        points.push(v);
    }
    for i in p.minimal_elements() {
        let mut v = vec![0; m];
        v[i - 1] = -1;
        points.push(v);
    }
    LatticePolytope::from_points(m, points)
}

/// `(l, v)` with `l = length(P) + 2` and `v_i = ℓ(ε_i) + 1`.
pub fn rank_shift(p: &Poset) -> Result<(i64, Vec<i64>)> {
    let rf = p.rank_function().ok_or(Error::NotGraded)?;
    let v = rf.ranks.iter().map(|&r| r as i64 + 1).collect();
    Ok((rf.length as i64 + 2, v))
}

/// Whether the polar of the poset polytope is `l·O_P − v`, where `v` must
/// also be the unique interior lattice point of `l·O_P`.
pub fn hh_polar_check(p: &Poset) -> Result<bool> {
    let (l, v) = rank_shift(p)?;
    let dilated = order_polytope(p)?.dilate(l)?;
    if dilated.interior_lattice_points()? != vec![LatticePoint(v.clone())] {
        return Ok(false);
    }
    let neg: Vec<i64> = v.iter().map(|x| -x).collect();
    let expected = dilated.translate(&neg)?;
    Ok(poset_polytope(p)?.polar_dual()? == expected)
}

/// `O_{P⊕Q} − v_0 = O_P ⊕ (−O_{Q^opp})` with `v_0 = (0^n, 1^m)`.
///
/// The second summand equals `O_Q − (1,…,1)`, so the free sum sits the
/// bottom block at its least vertex and the top block at its greatest.
pub fn ordinal_sum_equivalence_check(p: &Poset, q: &Poset) -> Result<bool> {
    let lhs = shifted_ordinal_sum(p, q)?;
    let rhs = order_polytope(p)?.free_sum(&order_polytope(&q.opposite())?.negate())?;
    Ok(lhs == rhs)
}

/// The same comparison with the summands' roles exchanged:
/// `O_{P⊕Q} − v_0 = (−O_{P^opp}) ⊕ O_Q`. Holds only in degenerate cases;
/// kept so the discrepancy stays observable.
pub fn ordinal_sum_swapped_identity(p: &Poset, q: &Poset) -> Result<bool> {
    let lhs = shifted_ordinal_sum(p, q)?;
    let rhs = order_polytope(&p.opposite())?.negate().free_sum(&order_polytope(q)?)?;
    Ok(lhs == rhs)
}

fn shifted_ordinal_sum(p: &Poset, q: &Poset) -> Result<LatticePolytope> {
    let (n, m) = (p.size(), q.size());
    guard("ordinal sum size", (n + m) as u128, MAX_ORDINAL_SUM_ELEMENTS as u128)?;
    let v0: Vec<i64> = std::iter::repeat_n(0, n).chain(std::iter::repeat_n(-1, m)).collect();
    order_polytope(&p.ordinal_sum(q)?)?.translate(&v0)
}

/// For `p` with a unique minimum `r`: the unimodular map `x_j ↦ x_j − x_r`
/// (`j ≠ r`), with `x_r` moved last, sends `O_P` onto the unit pyramid over
/// `O_{P∖r}`.
pub fn pyramid_equivalence_check(p: &Poset) -> Result<bool> {
    let minima = p.minimal_elements();
    let [r] = minima.as_slice() else {
        return Err(Error::NoUniqueMinimum);
    };
    let m = p.size();
    if m == 1 {
        return Err(Error::Dimension { needed: 1, actual: 0 });
    }
    let mut matrix = vec![vec![0; m]; m];
    for (row, j) in (1..=m).filter(|j| j != r).enumerate() {
        matrix[row][j - 1] = 1;
        matrix[row][r - 1] = -1;
    }
    matrix[m - 1][r - 1] = 1;
    let t = AffineTransform::new(matrix, vec![0; m])?;
    let image = order_polytope(p)?.apply(&t)?;
    Ok(image == order_polytope(&p.remove(*r)?)?.unit_pyramid()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn pts(p: &LatticePolytope) -> Vec<Vec<i64>> {
        p.vertices().iter().map(|v| v.0.clone()).collect()
    }

    #[test]
    fn v_poset_polytopes() {
        let v = catalog::v_poset();
        let o = order_polytope(&v).unwrap();
        assert_eq!(
            pts(&o),
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1], vec![1, 1, 1]]
        );
        assert!(o.validate_halfspaces().unwrap());
        let h = poset_polytope(&v).unwrap();
        assert_eq!(
            pts(&h),
            vec![vec![-1, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![1, -1, 0], vec![1, 0, -1]]
        );
        assert_eq!(h.lattice_points().unwrap().len(), 6);
        assert!(h.reflexivity_report().unwrap().all());
        assert_eq!(rank_shift(&v).unwrap(), (3, vec![1, 2, 2]));
        let reflexive = o.dilate(3).unwrap().translate(&[-1, -2, -2]).unwrap();
        assert_eq!(reflexive.interior_lattice_points().unwrap(), vec![LatticePoint::origin(3)]);
        assert!(hh_polar_check(&v).unwrap());
    }

    #[test]
    fn small_cases() {
        let one = Poset::antichain(1).unwrap();
        assert_eq!(pts(&poset_polytope(&one).unwrap()), vec![vec![-1], vec![1]]);
        let c2 = Poset::chain(2).unwrap();
        assert_eq!(pts(&order_polytope(&c2).unwrap()), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(rank_shift(&c2).unwrap(), (3, vec![1, 2]));
        assert!(hh_polar_check(&c2).unwrap());
        assert_eq!(rank_shift(&catalog::p1()).unwrap(), (3, vec![1, 1, 2, 2]));
        assert!(hh_polar_check(&catalog::p1()).unwrap());
        assert_eq!(order_polytope(&Poset::antichain(3).unwrap()).unwrap(), LatticePolytope::unit_cube(3));
        let skew = Poset::new(3, &[(1, 2), (2, 3)]).unwrap().disjoint_union(&one).unwrap();
        assert_eq!(hh_polar_check(&skew), Err(Error::NotGraded));
    }

    #[test]
    fn order_polytope_halfspaces_match_hull() {
        for p in catalog::posets_up_to(4) {
            let o = order_polytope(&p).unwrap();
            assert!(o.validate_halfspaces().unwrap(), "{p}");
            assert_eq!(o.lattice_points().unwrap(), o.vertices().to_vec());
        }
    }

    #[test]
    fn ordinal_sums() {
        let a1 = Poset::antichain(1).unwrap();
        let a2 = Poset::antichain(2).unwrap();
        let c2 = Poset::chain(2).unwrap();
        assert!(ordinal_sum_equivalence_check(&a1, &a1).unwrap());
        assert!(ordinal_sum_equivalence_check(&a2, &a2).unwrap());
        assert!(ordinal_sum_equivalence_check(&c2, &a2).unwrap());
        assert!(ordinal_sum_equivalence_check(&a2, &c2).unwrap());
        // The summand-swapped version already fails for two points.
        assert!(!ordinal_sum_swapped_identity(&a1, &a1).unwrap());
        let lhs = shifted_ordinal_sum(&a2, &a2).unwrap();
        assert_eq!(lhs.vertices().len(), 7);
    }

    #[test]
    fn pyramids_over_order_polytopes() {
        for p in catalog::posets_up_to(5) {
            if p.size() > 1 && p.minimal_elements().len() == 1 {
                assert!(pyramid_equivalence_check(&p).unwrap(), "{p}");
            }
        }
        let shrub = Poset::shrub(3).unwrap();
        assert!(pyramid_equivalence_check(&shrub).unwrap());
        assert_eq!(pyramid_equivalence_check(&catalog::p1()), Err(Error::NoUniqueMinimum));
    }
}
