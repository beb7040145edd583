//! Factorization of bivariate polynomials over ℚ.
//!
//! Squarefree parts are factored by specializing `x`, factoring the
//! univariate image, lifting x-adically and recombining.

use num_traits::Zero;

use crate::gcd::{content_y, divide_by_x_poly};
use crate::zfactor::{factor_squarefree, MAX_MODULAR_FACTORS};
use crate::{exact_div, factor_uni, gcd, rat, BiPoly, Rat, UniPoly};

/// `f = content · ∏ fᵢ^eᵢ` with every `fᵢ` irreducible and normalized to
/// graded-lex leading coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: Rat,
    pub factors: Vec<(BiPoly, usize)>,
    /// Some factor could not be proven irreducible.
    pub unresolved: bool,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> BiPoly {
        let mut acc = BiPoly::constant(self.content.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m as u32);
        }
        acc
    }

    /// Distinct irreducible factors, multiplicities dropped.
    pub fn distinct(&self) -> Vec<BiPoly> {
        self.factors.iter().map(|(f, _)| f.clone()).collect()
    }
}

/// Alias kept for call sites that only need the irreducible split.
pub type IrreducibleSplit = Factorization;

/// Squarefree decomposition `f = c · ∏ gᵢ^i` (normalized, pairwise coprime,
/// nonconstant parts only).
pub fn squarefree_factors(f: &BiPoly) -> Vec<(BiPoly, usize)> {
    let mut out: Vec<(BiPoly, usize)> = Vec::new();
    if f.is_constant() {
        return out;
    }
    let cont = content_y(f);
    for (c, m) in cont.squarefree() {
        out.push((c.to_bipoly_x().normalized(), m));
    }
    let pp = divide_by_x_poly(f, &cont);
    if pp.deg_y().unwrap_or(0) > 0 {
        out.extend(yun_y(&pp));
    }
    merge(out)
}

fn merge(parts: Vec<(BiPoly, usize)>) -> Vec<(BiPoly, usize)> {
    // Parts with the same multiplicity from content and primitive part are
    // coprime; keep them separate but sorted for determinism.
    let mut parts = parts;
    parts.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.to_string().cmp(&b.0.to_string())));
    parts
}

/// Yun's algorithm with respect to `y` on a polynomial primitive in `y`.
fn yun_y(f: &BiPoly) -> Vec<(BiPoly, usize)> {
    let mut out = Vec::new();
    let d = f.derivative_y();
    let a = gcd(f, &d);
    let mut b = exact_div(f, &a).expect("gcd divides");
    let mut c = exact_div(&d, &a).expect("gcd divides");
    let mut i = 1;
    while !b.is_constant() {
        let dd = &c - &b.derivative_y();
        let a = gcd(&b, &dd);
        if !a.is_constant() {
            out.push((a.normalized(), i));
        }
        b = exact_div(&b, &a).expect("gcd divides");
        c = exact_div(&dd, &a).expect("gcd divides");
        i += 1;
    }
    out
}

/// Complete factorization of `f` into irreducibles over ℚ.
pub fn split_irreducible(f: &BiPoly) -> Factorization {
    let content = f.lc();
    let mut factors: Vec<(BiPoly, usize)> = Vec::new();
    let mut unresolved = false;
    if f.is_constant() {
        return Factorization {
            content,
            factors,
            unresolved,
        };
    }
    let (mx, my) = f.monomial_content();
    if mx > 0 {
        factors.push((BiPoly::x(), mx as usize));
    }
    if my > 0 {
        factors.push((BiPoly::y(), my as usize));
    }
    let rest = f.div_monomial(mx, my);
    for (part, m) in squarefree_factors(&rest) {
        let (pieces, unres) = factor_squarefree_bi(&part);
        unresolved |= unres;
        factors.extend(pieces.into_iter().map(|p| (p, m)));
    }
    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.to_string().cmp(&b.0.to_string()))
    });
    Factorization {
        content,
        factors,
        unresolved,
    }
}

/// Irreducible factors of a squarefree polynomial that is either free of
/// `y` or primitive in `y`.
fn factor_squarefree_bi(f: &BiPoly) -> (Vec<BiPoly>, bool) {
    if let Some(u) = f.as_uni_x() {
        let fs = factor_uni(&u);
        return (
            fs.factors
                .into_iter()
                .map(|(p, _)| p.to_bipoly_x().normalized())
                .collect(),
            fs.unresolved,
        );
    }
    // content with respect to x, a polynomial in y
    let sw = f.swap_xy();
    let cx = content_y(&sw);
    if !cx.is_constant() {
        let prim = divide_by_x_poly(&sw, &cx).swap_xy();
        let fs = factor_uni(&cx);
        let mut pieces: Vec<BiPoly> = fs
            .factors
            .into_iter()
            .map(|(p, _)| p.to_bipoly_y().normalized())
            .collect();
        let (rest, unres) = factor_squarefree_bi(&prim);
        pieces.extend(rest);
        return (pieces, unres || fs.unresolved);
    }
    if f.deg_y() == Some(1) || f.deg_x() == Some(1) || f.total_degree() == Some(1) {
        return (vec![f.normalized()], false);
    }
    // Prefer the variable of lower degree as the lifted one.
    if f.deg_x().unwrap_or(0) > 0 && f.deg_x() < f.deg_y() && f.as_uni_y().is_none() {
        let (pieces, unres) = factor_primitive(&f.swap_xy());
        return (
            pieces.into_iter().map(|p| p.swap_xy().normalized()).collect(),
            unres,
        );
    }
    factor_primitive(f)
}

/// Evaluation candidates 0, 1, −1, 2, −2, …
fn eval_points() -> impl Iterator<Item = Rat> {
    (0..400i64).map(|k| if k % 2 == 0 { rat(-(k / 2)) } else { rat(k / 2 + 1) })
}

/// Factors a squarefree polynomial primitive in `y` with `deg_y ≥ 2`.
fn factor_primitive(f: &BiPoly) -> (Vec<BiPoly>, bool) {
    let n = f.deg_y().unwrap_or(0) as usize;
    if f.as_uni_y().is_some() {
        let (pieces, unres) = factor_squarefree(&f.as_uni_y().unwrap());
        return (
            pieces.into_iter().map(|p| p.to_bipoly_y().normalized()).collect(),
            unres,
        );
    }
    let lc_y = f.y_coeffs().pop().expect("nonzero");
    let mut best: Option<(Rat, Vec<UniPoly>)> = None;
    let mut good = 0;
    for a in eval_points() {
        if lc_y.eval(&a).is_zero() {
            continue;
        }
        let g = f.eval_x(&a);
        if g.degree() != Some(n) || !g.gcd(&g.derivative()).is_constant() {
            continue;
        }
        let (pieces, unres) = factor_squarefree(&g);
        if unres {
            continue;
        }
        if pieces.len() == 1 {
            return (vec![f.normalized()], false);
        }
        good += 1;
        if best.as_ref().is_none_or(|(_, b)| pieces.len() < b.len()) {
            best = Some((a, pieces));
        }
        if good >= 3 {
            break;
        }
    }
    let Some((a, pieces)) = best else {
        return (vec![f.normalized()], true);
    };
    if pieces.len() > MAX_MODULAR_FACTORS {
        return (vec![f.normalized()], true);
    }
    let shifted = f.shift_x(&a);
    let found = lift_and_recombine(&shifted, pieces);
    (
        found
            .into_iter()
            .map(|p| p.shift_x(&-a.clone()).normalized())
            .collect(),
        false,
    )
}

/// Truncated power series in `x` with coefficients in ℚ[y].
type Series = Vec<UniPoly>;

fn series_mul(a: &Series, b: &Series, prec: usize) -> Series {
    let mut out = vec![UniPoly::zero(); prec];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j >= prec {
                break;
            }
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

fn inverse_series(l: &UniPoly, prec: usize) -> Vec<Rat> {
    let l0 = l.coeff(0);
    let inv0 = l0.recip();
    let mut out = vec![Rat::zero(); prec];
    out[0] = inv0.clone();
    for k in 1..prec {
        let mut s = Rat::zero();
        for j in 1..=k {
            s += l.coeff(j) * &out[k - j];
        }
        out[k] = -(s * &inv0);
    }
    out
}

/// `g(0, y)` factors as `lc · ∏ pieces`; lifts the monic pieces x-adically
/// and recombines into true factors of `g`.
fn lift_and_recombine(g: &BiPoly, pieces: Vec<UniPoly>) -> Vec<BiPoly> {
    let prec = g.deg_x().unwrap_or(0) as usize + 1;
    let lc_y = g.y_coeffs().pop().expect("nonzero");
    let inv = inverse_series(&lc_y, prec);
    let inv_series: Series = inv.into_iter().map(UniPoly::constant).collect();
    let g_series: Series = {
        let mut s = g.x_coeffs();
        s.resize(prec, UniPoly::zero());
        s
    };
    let target = series_mul(&g_series, &inv_series, prec);

    let r = pieces.len();
    // Partial-fraction cofactors: Σ sᵢ ∏_{j≠i} pⱼ = 1.
    let cofactors: Vec<UniPoly> = (0..r)
        .map(|i| {
            let mut others = UniPoly::one();
            for (j, p) in pieces.iter().enumerate() {
                if j != i {
                    others = &others * p;
                }
            }
            let (_, _, t) = pieces[i].ext_gcd(&others);
            t
        })
        .collect();
    let mut lifted: Vec<Series> = pieces
        .iter()
        .map(|p| {
            let mut s = vec![UniPoly::zero(); prec];
            s[0] = p.clone();
            s
        })
        .collect();
    for k in 1..prec {
        let mut prod: Series = vec![UniPoly::zero(); prec];
        prod[0] = UniPoly::one();
        for h in &lifted {
            prod = series_mul(&prod, h, k + 1);
        }
        prod.resize(prec, UniPoly::zero());
        let e = &target[k] - &prod[k];
        if e.is_zero() {
            continue;
        }
        for i in 0..r {
            let delta = (&e * &cofactors[i]).rem(&pieces[i]);
            lifted[i][k] = &lifted[i][k] + &delta;
        }
    }

    let mut found = Vec::new();
    let mut rest = g.clone();
    let mut alive: Vec<Series> = lifted;
    let mut size = 1;
    while 2 * size <= alive.len() {
        let lc_rest = rest.y_coeffs().pop().expect("nonzero");
        let lc_series: Series = lc_rest
            .coeffs()
            .iter()
            .map(|c| UniPoly::constant(c.clone()))
            .collect();
        let mut hit = None;
        for s in subsets(alive.len(), size) {
            let mut cand = lc_series.clone();
            cand.resize(prec, UniPoly::zero());
            for &i in &s {
                cand = series_mul(&cand, &alive[i], prec);
            }
            let poly = BiPoly::from_x_coeffs(&cand);
            let cont = content_y(&poly);
            if cont.is_zero() {
                continue;
            }
            let prim = divide_by_x_poly(&poly, &cont);
            if let Ok(q) = exact_div(&rest, &prim) {
                hit = Some((s, prim, q));
                break;
            }
        }
        match hit {
            Some((s, prim, q)) => {
                found.push(prim);
                rest = q;
                for &i in s.iter().rev() {
                    alive.remove(i);
                }
            }
            None => size += 1,
        }
    }
    found.push(rest);
    found
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_poly;

    fn p(s: &str) -> BiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn product_of_three() {
        let f = &(&p("x*y - 1") * &p("y^2 + x^3 + 2")) * &p("x - y + 7");
        let fs = split_irreducible(&f);
        assert_eq!(fs.factors.len(), 3);
        assert_eq!(fs.expand(), f);
        assert!(!fs.unresolved);
    }

    #[test]
    fn repeated_and_monomial_factors() {
        let f = &(&p("x^2*y").scale(&rat(5)) * &p("x+y").pow(3)) * &p("x^2 - 2");
        let fs = split_irreducible(&f);
        assert_eq!(fs.expand(), f);
        assert!(fs.factors.contains(&(p("x+y"), 3)));
        assert!(fs.factors.contains(&(p("x^2 - 2"), 1)));
    }

    #[test]
    fn content_in_x_direction() {
        let f = p("x*y^3 - 2*x*y^2 + x*y - 2*y^2 + 5*y - 3");
        let fs = split_irreducible(&f);
        assert!(fs.factors.contains(&(p("y - 1"), 1)));
        assert_eq!(fs.factors.len(), 2);
        assert_eq!(fs.expand(), f);
    }

    #[test]
    fn irreducible_stays_whole() {
        let f = p("y^2 - x^3 - x");
        assert_eq!(split_irreducible(&f).factors, vec![(f.normalized(), 1)]);
        let g = p("x^2 + y^2 + 1");
        assert_eq!(split_irreducible(&g).factors.len(), 1);
    }

    #[test]
    fn splits_needing_recombination() {
        // y^2 - x^2 - 2x - 1 = (y - x - 1)(y + x + 1) and a factor that
        // splits further mod the specialization.
        let a = p("y^2 - 2*x^2");
        let b = p("y - x - 1");
        let f = &a * &b;
        let fs = split_irreducible(&f);
        assert_eq!(fs.factors.len(), 2);
        assert_eq!(fs.expand(), f);
    }

    #[test]
    fn squarefree_decomposition() {
        let f = &p("x - 1").pow(2) * &p("y - x").pow(3);
        let sf = squarefree_factors(&f);
        assert_eq!(sf, vec![(p("x - 1"), 2), (p("x - y"), 3)]);
    }
}
