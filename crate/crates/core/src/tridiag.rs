//! Tridiagonal linear solves with partial pivoting.
//!
//! Row pivoting introduces one extra superdiagonal of fill-in, which is kept
//! in a scratch vector. This is the standard LU scheme for general (not
//! necessarily diagonally dominant) tridiagonal systems.

use crate::error::{Error, Result};

/// Solve `A x = rhs` for tridiagonal `A` given by `sub` (len n-1), `diag`
/// (len n), `sup` (len n-1).
pub fn solve(sub: &[f64], diag: &[f64], sup: &[f64], rhs: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if sub.len() != n - 1 || sup.len() != n - 1 || rhs.len() != n {
        return Err(Error::InvalidInput(format!(
            "tridiagonal shape mismatch: n = {n}, sub = {}, sup = {}, rhs = {}",
            sub.len(),
            sup.len(),
            rhs.len()
        )));
    }

    let mut dl = sub.to_vec();
    let mut d = diag.to_vec();
    let mut du = sup.to_vec();
    let mut du2 = vec![0.0; n.saturating_sub(2)];
    let mut b = rhs.to_vec();

    for i in 0..n - 1 {
        if d[i].abs() >= dl[i].abs() {
            // No row interchange.
            if d[i] == 0.0 {
                return Err(Error::Numeric(format!("singular tridiagonal system at row {i}")));
            }
            let fact = dl[i] / d[i];
            d[i + 1] -= fact * du[i];
            b[i + 1] -= fact * b[i];
        } else {
            // Interchange rows i and i+1.
            let fact = d[i] / dl[i];
            d[i] = dl[i];
            let temp = d[i + 1];
            d[i + 1] = du[i] - fact * temp;
            if i < n - 2 {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du[i + 1];
            }
            du[i] = temp;
            let tb = b[i];
            b[i] = b[i + 1];
            b[i + 1] = tb - fact * b[i + 1];
        }
    }
    if d[n - 1] == 0.0 {
        return Err(Error::Numeric("singular tridiagonal system at last row".into()));
    }

    let mut x = vec![0.0; n];
    x[n - 1] = b[n - 1] / d[n - 1];
    if n >= 2 {
        x[n - 2] = (b[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        x[i] = (b[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
    }
    Ok(x)
}
