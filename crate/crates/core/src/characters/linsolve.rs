use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{param_err, Error, Result};
use crate::exactalg::MPoly;

/// Coordinates of `target` in the span of `basis`.
///
/// The basis polynomials must be free of `q` and `Q`; the target may carry them,
/// so the solution entries are polynomials in `q`, `Q`. Fails with
/// [`Error::RankDeficient`] if the basis is dependent and with a parameter error if
/// `target` lies outside the span.
pub fn solve_in_basis(basis: &[MPoly], target: &MPoly) -> Result<Vec<MPoly>> {
    let params = target.params().clone();
    let ncols = basis.len();
    let mut rows: BTreeMap<Vec<u32>, (Vec<BigRational>, MPoly)> = BTreeMap::new();
    for (j, b) in basis.iter().enumerate() {
        for (z, coeff) in b.by_z_monomial() {
            let Some(c) = coeff.as_constant() else {
                return param_err("basis polynomials must not involve q or Q");
            };
            rows.entry(z)
                .or_insert_with(|| (vec![BigRational::zero(); ncols], MPoly::zero(&params)))
                .0[j] = c;
        }
    }
    for (z, coeff) in target.by_z_monomial() {
        let entry = rows.entry(z).or_insert_with(|| {
            (vec![BigRational::zero(); ncols], MPoly::zero(&params))
        });
        entry.1 = coeff;
    }
    let mut rows: Vec<(Vec<BigRational>, MPoly)> = rows.into_values().collect();
    // Gauss–Jordan elimination on the rational part, carrying the polynomial column
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(ncols);
    for col in 0..ncols {
        let Some(p) = (pivot_row..rows.len()).find(|&r| !rows[r].0[col].is_zero()) else {
            return Err(Error::RankDeficient(format!(
                "basis element {} is a combination of the others",
                col + 1
            )));
        };
        rows.swap(pivot_row, p);
        let inv = rows[pivot_row].0[col].recip();
        let (a, rhs) = &mut rows[pivot_row];
        a.iter_mut().for_each(|x| *x *= &inv);
        *rhs = rhs.scale(&inv);
        let (pa, prhs) = rows[pivot_row].clone();
        for (r, (a, rhs)) in rows.iter_mut().enumerate() {
            if r == pivot_row || a[col].is_zero() {
                continue;
            }
            let f = a[col].clone();
            for (x, y) in a.iter_mut().zip(&pa) {
                *x -= &f * y;
            }
            *rhs = &*rhs - &prhs.scale(&f);
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|(_, rhs)| !rhs.is_zero()) {
        return param_err("target is not in the span of the basis");
    }
    Ok(pivots.into_iter().map(|r| rows[r].1.clone()).collect())
}
