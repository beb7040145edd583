use num_traits::Zero;

use crate::{BiPoly, PolyError, Rat, UniPoly};

/// Exact quotient `a / b` by leading-term division.
pub fn exact_div(a: &BiPoly, b: &BiPoly) -> Result<BiPoly, PolyError> {
    let Some((lm_b, lc_b)) = b.leading_term() else {
        return Err(PolyError::DivisionByZero);
    };
    let inv = lc_b.recip();
    let mut r = a.clone();
    let mut q = BiPoly::zero();
    while let Some((lm_r, lc_r)) = r.leading_term() {
        if lm_r.x < lm_b.x || lm_r.y < lm_b.y {
            return Err(PolyError::NotDivisible);
        }
        let t = BiPoly::monomial(lc_r * &inv, lm_r.x - lm_b.x, lm_r.y - lm_b.y);
        r = &r - &(&t * b);
        q = &q + &t;
    }
    Ok(q)
}

/// Division with remainder by leading terms: `a = q·b + r` where no term
/// of `r` is divisible by the leading monomial of `b`.
pub fn div_rem(a: &BiPoly, b: &BiPoly) -> Result<(BiPoly, BiPoly), PolyError> {
    let Some((lm_b, lc_b)) = b.leading_term() else {
        return Err(PolyError::DivisionByZero);
    };
    let inv = lc_b.recip();
    let mut p = a.clone();
    let mut q = BiPoly::zero();
    let mut r = BiPoly::zero();
    while let Some((lm, lc)) = p.leading_term() {
        let t = BiPoly::monomial(lc.clone(), lm.x, lm.y);
        if lm.x >= lm_b.x && lm.y >= lm_b.y {
            let s = BiPoly::monomial(lc * &inv, lm.x - lm_b.x, lm.y - lm_b.y);
            p = &p - &(&s * b);
            q = &q + &s;
        } else {
            p = &p - &t;
            r = &r + &t;
        }
    }
    Ok((q, r))
}

/// Whether `b` divides `a`.
pub fn divides(b: &BiPoly, a: &BiPoly) -> bool {
    if b.is_zero() {
        return a.is_zero();
    }
    exact_div(a, b).is_ok()
}

/// Pseudo-remainder in `y`: returns `(r, k)` with
/// `lc_y(b)^k · a = q·b + r` and `deg_y r < deg_y b`.
pub fn pseudo_rem_y(a: &BiPoly, b: &BiPoly) -> (BiPoly, u32) {
    let rows_b = b.y_coeffs();
    let db = rows_b.len() - 1;
    let lc = rows_b[db].clone();
    let mut r = a.y_coeffs();
    let mut k = 0;
    while r.len() > db && !r.is_empty() {
        let top = r.pop().expect("nonempty");
        let shift = r.len() - db;
        for row in r.iter_mut() {
            *row = &*row * &lc;
        }
        for (j, bj) in rows_b.iter().take(db).enumerate() {
            let t = &top * bj;
            r[shift + j] = &r[shift + j] - &t;
        }
        k += 1;
        while r.last().is_some_and(UniPoly::is_zero) {
            r.pop();
        }
    }
    (BiPoly::from_y_coeffs(&r), k)
}

/// Content in `y`: the monic gcd over ℚ[x] of the `y`-coefficients.
pub(crate) fn content_y(p: &BiPoly) -> UniPoly {
    let mut g = UniPoly::zero();
    for c in p.y_coeffs() {
        g = g.gcd(&c);
        if g.is_constant() && !g.is_zero() {
            return UniPoly::one();
        }
    }
    g
}

pub(crate) fn divide_by_x_poly(p: &BiPoly, c: &UniPoly) -> BiPoly {
    let rows: Vec<UniPoly> = p
        .y_coeffs()
        .iter()
        .map(|r| r.exact_div(c).expect("content divides"))
        .collect();
    BiPoly::from_y_coeffs(&rows)
}

pub(crate) fn primitive_part_y(p: &BiPoly) -> BiPoly {
    if p.is_zero() {
        return BiPoly::zero();
    }
    divide_by_x_poly(p, &content_y(p))
}

/// Greatest common divisor, normalized to graded-lex leading coefficient 1.
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    if a.is_constant() || b.is_constant() {
        return BiPoly::one();
    }
    let cont = content_y(a).gcd(&content_y(b)).to_bipoly_x();
    let p = primitive_part_y(a);
    let q = primitive_part_y(b);
    let g = if p.deg_y() == Some(0) || q.deg_y() == Some(0) {
        BiPoly::one()
    } else {
        gcd_by_evaluation(&p, &q).unwrap_or_else(|| gcd_prs(p, q))
    };
    (&cont * &g).normalized()
}

/// Primitive remainder sequence in `y`.
fn gcd_prs(mut p: BiPoly, mut q: BiPoly) -> BiPoly {
    if p.deg_y() < q.deg_y() {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        if q.deg_y() == Some(0) {
            // primitive in y with no y: a unit
            return BiPoly::one();
        }
        let (r, _) = pseudo_rem_y(&p, &q);
        if r.is_zero() {
            return q;
        }
        p = q;
        q = primitive_part_y(&r);
    }
}

/// Newton interpolation through `(aᵢ, vᵢ)`.
fn interpolate(points: &[(Rat, Rat)]) -> UniPoly {
    let mut dd: Vec<Rat> = points.iter().map(|(_, v)| v.clone()).collect();
    let n = dd.len();
    for k in 1..n {
        for i in (k..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&points[i].0 - &points[i - k].0);
        }
    }
    let mut acc = UniPoly::zero();
    for i in (0..n).rev() {
        acc = &(&acc * &UniPoly::linear_root(&points[i].0)) + &UniPoly::constant(dd[i].clone());
    }
    acc
}

/// Gcd of two polynomials primitive in `y` from univariate gcds at
/// `x = a`, interpolated against the leading-coefficient bound and checked
/// by trial division. `None` when no candidate verifies.
fn gcd_by_evaluation(p: &BiPoly, q: &BiPoly) -> Option<BiPoly> {
    let lp = p.y_coeffs().pop()?;
    let lq = q.y_coeffs().pop()?;
    let ell = lp.gcd(&lq);
    let bound = ell.degree()? + p.deg_x()?.min(q.deg_x()?) as usize;
    let mut dmin = usize::MAX;
    let mut images: Vec<(Rat, UniPoly)> = Vec::new();
    for k in 0..(4 * bound as i64 + 40) {
        let a = Rat::from_integer(if k % 2 == 0 { -(k / 2) } else { k / 2 + 1 }.into());
        if lp.eval(&a).is_zero() || lq.eval(&a).is_zero() {
            continue;
        }
        let g = p.eval_x(&a).gcd(&q.eval_x(&a));
        let d = g.degree()?;
        if d == 0 {
            return Some(BiPoly::one());
        }
        if d > dmin {
            continue;
        }
        if d < dmin {
            dmin = d;
            images.clear();
        }
        let s = ell.eval(&a);
        images.push((a, g.scale(&s)));
        if images.len() > bound {
            let rows: Vec<UniPoly> = (0..=dmin)
                .map(|j| {
                    let pts: Vec<(Rat, Rat)> =
                        images.iter().map(|(a, g)| (a.clone(), g.coeff(j))).collect();
                    interpolate(&pts)
                })
                .collect();
            let cand = primitive_part_y(&BiPoly::from_y_coeffs(&rows));
            let ok = divides(&cand, p) && divides(&cand, q);
            if ok {
                return Some(cand);
            }
        }
    }
    None
}

/// The constant `a` with `f | g − a`, if one exists.
pub fn constant_mod(g: &BiPoly, f: &BiPoly) -> Option<Rat> {
    if f.is_constant() {
        return None;
    }
    let (g1, f1) = if f.deg_y().unwrap_or(0) > 0 {
        (g.clone(), f.clone())
    } else {
        (g.swap_xy(), f.swap_xy())
    };
    let (r, k) = pseudo_rem_y(&g1, &f1);
    let lc = f1.y_coeffs().pop().expect("nonzero").pow(k as u32);
    let r = r.as_uni_x()?;
    let (q, rem) = r.div_rem(&lc);
    if !rem.is_zero() || !q.is_constant() {
        return None;
    }
    let a = q.coeff(0);
    if divides(f, &(g - &BiPoly::constant(a.clone()))) {
        Some(a)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{parse_poly, rat};

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn gcd_of_products() {
        let a = &p("x*y - 1") * &p("x + y^2");
        let b = &p("x*y - 1") * &p("x - y");
        assert_eq!(gcd(&a, &b), p("x*y - 1"));
        assert_eq!(gcd(&p("x^2"), &p("x*y")), p("x"));
        assert_eq!(gcd(&p("x+1"), &p("y")), BiPoly::one());
    }

    #[test]
    fn exact_division() {
        let a = &p("x^2 + y") * &p("3*x - y + 1");
        assert_eq!(exact_div(&a, &p("x^2+y")).unwrap(), p("3*x - y + 1"));
        assert_eq!(exact_div(&p("x^2 + 1"), &p("x")), Err(PolyError::NotDivisible));
    }

    #[test]
    fn constant_mod_finds_image() {
        // x·y − 1 ≡ 0, so x·y ≡ 1 on it.
        assert_eq!(constant_mod(&p("x*y + 2"), &p("x*y - 1")), Some(rat(3)));
        assert_eq!(constant_mod(&p("x"), &p("x - 5")), Some(rat(5)));
        assert_eq!(constant_mod(&p("x"), &p("x^2 - 2")), None);
        assert_eq!(constant_mod(&p("y"), &p("x")), None);
    }
}
