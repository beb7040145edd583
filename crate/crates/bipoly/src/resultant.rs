use crate::{BiPoly, UniPoly};

/// Resultant with respect to `y`, a polynomial in `x`.
///
/// The Sylvester matrix takes coefficients highest degree first with the
/// rows of `a` on top; the determinant is computed fraction-free (Bareiss).
pub fn resultant_y(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_zero() || b.is_zero() {
        return BiPoly::zero();
    }
    let ca: Vec<UniPoly> = a.y_coeffs().into_iter().rev().collect();
    let cb: Vec<UniPoly> = b.y_coeffs().into_iter().rev().collect();
    let m = ca.len() - 1;
    let n = cb.len() - 1;
    if m == 0 && n == 0 {
        return BiPoly::one();
    }
    if m == 0 {
        return ca[0].pow(n as u32).to_bipoly_x();
    }
    if n == 0 {
        return cb[0].pow(m as u32).to_bipoly_x();
    }
    let size = m + n;
    let mut mat = vec![vec![UniPoly::zero(); size]; size];
    for i in 0..n {
        for (j, c) in ca.iter().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in cb.iter().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    bareiss(mat).to_bipoly_x()
}

fn bareiss(mut mat: Vec<Vec<UniPoly>>) -> UniPoly {
    let size = mat.len();
    let mut sign_neg = false;
    let mut prev = UniPoly::one();
    for k in 0..size - 1 {
        if mat[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&i| !mat[i][k].is_zero()) else {
                return UniPoly::zero();
            };
            mat.swap(k, swap);
            sign_neg = !sign_neg;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&mat[i][j] * &mat[k][k]) - &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            mat[i][k] = UniPoly::zero();
        }
        prev = mat[k][k].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    if sign_neg {
        -&det
    } else {
        det
    }
}
