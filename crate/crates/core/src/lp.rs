//! Exact convex-hull membership by a phase-one simplex method over the
//! rationals, with Bland's rule for termination.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{PointFn, Rat};

/// Decides whether `x` is a convex combination of `generators`.
pub fn hull_membership(x: &PointFn, generators: &[PointFn]) -> Result<bool> {
    Ok(hull_combination(x, generators)?.is_some())
}

/// Weights `λ >= 0` with `Σλ = 1` and `Σ λ_i g_i = x`, or `None` when `x` lies
/// outside the convex hull.
pub fn hull_combination(x: &PointFn, generators: &[PointFn]) -> Result<Option<Vec<Rat>>> {
    if generators.is_empty() {
        return Err(Error::InvalidArgument("hull membership needs at least one generator".into()));
    }
    let d = x.dim();
    for g in generators {
        g.check_dim(d)?;
    }
    let n = generators.len();
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(d + 1);
    let mut rhs: Vec<Rat> = Vec::with_capacity(d + 1);
    for j in 0..d {
        rows.push(generators.iter().map(|g| g[j].clone()).collect());
        rhs.push(x[j].clone());
    }
    rows.push(vec![Rat::one(); n]);
    rhs.push(Rat::one());
    Ok(feasible_point(rows, rhs))
}

/// Finds `λ >= 0` with `A λ = b`, or `None` if infeasible. Phase one of the
/// simplex method with one artificial variable per row.
pub fn feasible_point(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    for i in 0..m {
        if b[i].is_negative() {
            b[i] = -b[i].clone();
            for c in a[i].iter_mut() {
                *c = -c.clone();
            }
        }
        // Artificial columns n..n+m form the initial basis.
        a[i].extend((0..m).map(|k| if k == i { Rat::one() } else { Rat::zero() }));
    }
    let total = n + m;
    let mut basis: Vec<usize> = (n..total).collect();
    // Reduced costs of the phase-one objective (sum of artificials).
    let mut cost: Vec<Rat> =
        (0..total).map(|j| if j >= n { Rat::zero() } else { -(0..m).map(|i| a[i][j].clone()).sum::<Rat>() }).collect();
    let mut objective: Rat = b.iter().sum();

    // Bland: lowest-index column with negative reduced cost.
    while let Some(enter) = (0..total).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if a[i][enter].is_positive() {
                let ratio = &b[i] / &a[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so an entering column always has
        // a positive entry.
        let (row, _) = leave.expect("phase-one objective is bounded");
        let piv = a[row][enter].clone();
        for c in a[row].iter_mut() {
            *c /= &piv;
        }
        b[row] /= &piv;
        let pivot_row = a[row].clone();
        let pivot_rhs = b[row].clone();
        for i in 0..m {
            if i != row && !a[i][enter].is_zero() {
                let factor = a[i][enter].clone();
                for (c, p) in a[i].iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *c -= &factor * p;
                    }
                }
                b[i] -= &factor * &pivot_rhs;
            }
        }
        let factor = cost[enter].clone();
        for (c, p) in cost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *c -= &factor * p;
            }
        }
        objective += &factor * &pivot_rhs;
        basis[row] = enter;
    }

    if !objective.is_zero() {
        return None;
    }
    let mut lambda = vec![Rat::zero(); n];
    for (i, &j) in basis.iter().enumerate() {
        if j < n {
            lambda[j] = b[i].clone();
        }
    }
    Some(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    fn pts(v: &[&[i64]]) -> Vec<PointFn> {
        v.iter().map(|p| PointFn::from_ints(p)).collect()
    }

    #[test]
    fn square_membership() {
        let sq = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let inside = PointFn::new(vec![ratio(1, 3), ratio(2, 3)]);
        let lambda = hull_combination(&inside, &sq).unwrap().unwrap();
        assert_eq!(lambda.iter().sum::<Rat>(), Rat::one());
        for j in 0..2 {
            let coord: Rat = lambda.iter().zip(&sq).map(|(l, g)| l * &g[j]).sum();
            assert_eq!(coord, inside[j]);
        }
        assert!(!hull_membership(&PointFn::new(vec![ratio(3, 2), ratio(0, 1)]), &sq).unwrap());
        assert!(!hull_membership(&PointFn::new(vec![ratio(-1, 100), ratio(1, 2)]), &sq).unwrap());
    }

    #[test]
    fn generators_are_members() {
        let gens = pts(&[&[1, 2, 3], &[-1, 0, 2], &[0, 0, 0]]);
        for g in &gens {
            assert!(hull_membership(g, &gens).unwrap());
        }
    }

    #[test]
    fn degenerate_and_error_cases() {
        let seg = pts(&[&[0, 0], &[2, 2]]);
        assert!(hull_membership(&PointFn::from_ints(&[1, 1]), &seg).unwrap());
        assert!(!hull_membership(&PointFn::from_ints(&[1, 0]), &seg).unwrap());
        assert!(hull_membership(&PointFn::from_ints(&[1]), &[]).is_err());
        assert!(hull_membership(&PointFn::from_ints(&[1]), &seg).is_err());
    }
}
