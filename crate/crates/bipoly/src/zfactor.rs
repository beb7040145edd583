//! Factorization of univariate polynomials over ℚ (Zassenhaus).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::modp::{Field, Fp};
use crate::{Rat, UniPoly};

/// Above this many modular factors the recombination search is skipped.
pub(crate) const MAX_MODULAR_FACTORS: usize = 16;

/// Complete factorization `f = content · ∏ fᵢ^eᵢ` with monic `fᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniFactors {
    pub content: Rat,
    pub factors: Vec<(UniPoly, usize)>,
    /// Some listed factor may be reducible: recombination was skipped.
    pub unresolved: bool,
}

/// Factors `f` into monic irreducibles over ℚ.
pub fn factor_uni(f: &UniPoly) -> UniFactors {
    let content = f.lc();
    let mut factors = Vec::new();
    let mut unresolved = false;
    for (part, mult) in f.squarefree() {
        let (pieces, unres) = factor_squarefree(&part);
        unresolved |= unres;
        factors.extend(pieces.into_iter().map(|p| (p, mult)));
    }
    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| format!("{:?}", a.0).cmp(&format!("{:?}", b.0)))
    });
    UniFactors {
        content,
        factors,
        unresolved,
    }
}

/// Monic irreducible factors of a squarefree polynomial of positive degree.
pub(crate) fn factor_squarefree(f: &UniPoly) -> (Vec<UniPoly>, bool) {
    let n = f.degree().unwrap_or(0);
    if n <= 1 {
        return (vec![f.monic()], false);
    }
    // Strip x^k.
    if f.coeff(0).is_zero() {
        let k = f.coeffs().iter().position(|c| !c.is_zero()).unwrap();
        let rest = UniPoly::new(f.coeffs()[k..].to_vec());
        let (mut out, unres) = if rest.is_constant() {
            (Vec::new(), false)
        } else {
            factor_squarefree(&rest)
        };
        out.push(UniPoly::monomial(Rat::one(), 1));
        return (out, unres);
    }
    let (_, ints) = f.integer_primitive();
    let (pieces, unres) = zassenhaus(&ints);
    (
        pieces
            .into_iter()
            .map(|p| UniPoly::from_integers(&p).monic())
            .collect(),
        unres,
    )
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce(f: &[BigInt], fp: &Field) -> Fp {
    let p = BigInt::from(fp.p);
    let mut v: Vec<u64> = f
        .iter()
        .map(|c| c.mod_floor(&p).to_u64().unwrap())
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Monic gcd over ℚ by images modulo word-size primes, combined by CRT
/// and accepted once a candidate divides both inputs.
pub(crate) fn gcd_modular(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let (_, fa) = a.integer_primitive();
    let (_, fb) = b.integer_primitive();
    let lc = fa.last().unwrap().gcd(fb.last().unwrap());
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = Vec::new();
    let mut dmin = usize::MAX;
    let mut cand = (1u64 << 31) - 1;
    loop {
        cand -= 2;
        if !is_prime(cand) {
            continue;
        }
        let pb = BigInt::from(cand);
        if (fa.last().unwrap() % &pb).is_zero() || (fb.last().unwrap() % &pb).is_zero() {
            continue;
        }
        let fp = Field::new(cand);
        let g = fp.gcd(&reduce(&fa, &fp), &reduce(&fb, &fp));
        let d = g.len() - 1;
        if d == 0 {
            return UniPoly::one();
        }
        if d > dmin {
            continue;
        }
        let s = lc.mod_floor(&pb).to_u64().unwrap();
        let img = fp.pscale(&g, s);
        if d < dmin {
            dmin = d;
            acc = lift_u(&img);
            modulus = pb;
            continue;
        }
        // CRT: acc ≡ acc mod modulus, ≡ img mod p
        let before = symmetric(&acc, &modulus);
        let minv = fp.inv((&modulus % cand).to_u64().unwrap());
        for (c, &v) in acc.iter_mut().zip(img.iter()) {
            let cur = c.mod_floor(&pb).to_u64().unwrap();
            let t = fp.mul(fp.sub(v, cur), minv);
            *c += &modulus * BigInt::from(t);
        }
        modulus *= &pb;
        let sym = symmetric(&acc, &modulus);
        if sym != before {
            continue;
        }
        let cand_poly = UniPoly::from_integers(&sym).monic();
        if a.rem(&cand_poly).is_zero() && b.rem(&cand_poly).is_zero() {
            return cand_poly;
        }
    }
}

fn lift_u(a: &[u64]) -> Vec<BigInt> {
    a.iter().map(|&v| BigInt::from(v)).collect()
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    r
}

fn zmod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = a.iter().map(|c| c.mod_floor(m)).collect();
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn symmetric(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m >> 1;
    a.iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default()
        })
        .collect()
}

/// Lifts `f ≡ g·h (mod p)`, `g` monic, to `f ≡ G·H (mod p^e)`.
fn hensel_pair(
    f: &[BigInt],
    g: &[u64],
    h: &[u64],
    fp: &Field,
    e: u32,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let (_, s, t) = fp.ext_gcd(g, h);
    let p = BigInt::from(fp.p);
    let mut gz = lift_u(g);
    let mut hz = lift_u(h);
    // Keep the true leading coefficient so the error stays below deg f.
    if let (Some(l), Some(fl)) = (hz.last_mut(), f.last()) {
        *l = fl.clone();
    }
    let mut pk = p.clone();
    for _ in 1..e {
        let err = zsub(f, &zmul(&gz, &hz));
        let err: Vec<BigInt> = err.iter().map(|c| c / &pk).collect();
        let ep = reduce(&err, fp);
        if !ep.is_empty() {
            let te = fp.pmul(&t, &ep);
            let (q, dg) = fp.divrem(&te, g);
            let dh = fp.padd(&fp.pmul(&s, &ep), &fp.pmul(&q, h));
            gz = add_scaled(&gz, &dg, &pk);
            hz = add_scaled(&hz, &dh, &pk);
        }
        pk *= &p;
    }
    (zmod(&gz, &pk), zmod(&hz, &pk))
}

fn add_scaled(a: &[BigInt], d: &[u64], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(d.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + BigInt::from(*d.get(i).unwrap_or(&0)) * m)
        .collect()
}

/// Lifts monic modular factors of `f` to precision `p^e`.
fn hensel_multi(f: &[BigInt], facs: &[Fp], fp: &Field, e: u32) -> Vec<Vec<BigInt>> {
    let pe = BigInt::from(fp.p).pow(e);
    let mut out = Vec::new();
    let mut cur = zmod(f, &pe);
    for i in 0..facs.len() - 1 {
        let lc = cur.last().cloned().unwrap_or_default();
        let lcp = reduce(&[lc], fp);
        let mut rest: Fp = lcp;
        for g in &facs[i + 1..] {
            rest = fp.pmul(&rest, g);
        }
        let (gi, hi) = hensel_pair(&cur, &facs[i], &rest, fp, e);
        out.push(gi);
        cur = hi;
    }
    // Last factor: make monic mod p^e.
    let lc = cur.last().cloned().unwrap();
    let inv = lc.modinv(&pe).expect("lc coprime to p");
    out.push(zmod(&cur.iter().map(|c| c * &inv).collect::<Vec<_>>(), &pe));
    out
}

fn norm_bound(f: &[BigInt]) -> BigInt {
    let sq: BigInt = f.iter().map(|c| c * c).sum();
    let n = f.len() as u32 - 1;
    (sq.sqrt() + BigInt::one()) * (BigInt::one() << n)
}

/// Trial division over ℤ; `Some(quotient)` when exact.
fn zdiv(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return None;
    }
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    if r.iter().all(Zero::is_zero) {
        Some(q)
    } else {
        None
    }
}

fn primitive(a: &[BigInt]) -> Vec<BigInt> {
    let mut g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if a.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    a.iter().map(|c| c / &g).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
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
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Primitive squarefree integer polynomial with nonzero constant term.
fn zassenhaus(f: &[BigInt]) -> (Vec<Vec<BigInt>>, bool) {
    let lc = f.last().unwrap().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(Field, Vec<Fp>)> = None;
    let mut tried = 0;
    let mut cand = 1009u64;
    while tried < 5 {
        cand += 2;
        if !is_prime(cand) {
            continue;
        }
        let fp = Field::new(cand);
        if (&lc % BigInt::from(cand)).is_zero() {
            continue;
        }
        let fm = reduce(f, &fp);
        if !fp.is_squarefree(&fm) {
            continue;
        }
        tried += 1;
        let facs = fp.factor_squarefree(&fm, &mut rng);
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((fp, facs));
        }
        if best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    let (fp, facs) = best.expect("some prime is good");
    if facs.len() <= 1 {
        return (vec![f.to_vec()], false);
    }
    if facs.len() > MAX_MODULAR_FACTORS {
        return (vec![f.to_vec()], true);
    }
    let bound = BigInt::from(2) * lc.abs() * norm_bound(f);
    let p = BigInt::from(fp.p);
    let mut e = 1u32;
    let mut pe = p.clone();
    while pe <= bound {
        pe *= &p;
        e += 1;
    }
    let mut lifted = hensel_multi(f, &facs, &fp, e);
    let mut found = Vec::new();
    let mut rest = f.to_vec();
    let mut k = 1;
    while 2 * k <= lifted.len() {
        let mut hit = None;
        let rlc = rest.last().unwrap().clone();
        for s in subsets(lifted.len(), k) {
            let mut g = vec![rlc.clone()];
            for &i in &s {
                g = zmod(&zmul(&g, &lifted[i]), &pe);
            }
            let g = primitive(&symmetric(&g, &pe));
            if let Some(q) = zdiv(&rest, &g) {
                hit = Some((s, g, q));
                break;
            }
        }
        match hit {
            Some((s, g, q)) => {
                found.push(g);
                rest = q;
                for &i in s.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => k += 1,
        }
    }
    found.push(primitive(&rest));
    (found, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prod(fs: &UniFactors) -> UniPoly {
        let mut acc = UniPoly::constant(fs.content.clone());
        for (f, m) in &fs.factors {
            acc = &acc * &f.pow(*m as u32);
        }
        acc
    }

    #[test]
    fn x4_minus_1() {
        let f = UniPoly::from_ints(&[-1, 0, 0, 0, 1]);
        let fs = factor_uni(&f);
        assert_eq!(fs.factors.len(), 3);
        assert_eq!(prod(&fs), f);
    }

    #[test]
    fn swinnerton_dyer_like_irreducible() {
        // x^4 - 10x^2 + 1 splits into quadratics mod every prime.
        let f = UniPoly::from_ints(&[1, 0, -10, 0, 1]);
        let fs = factor_uni(&f);
        assert_eq!(fs.factors.len(), 1);
        assert!(!fs.unresolved);
    }

    #[test]
    fn non_monic_with_multiplicity() {
        // 6 (x - 1/2)^2 (x^2 - 2) x
        let a = UniPoly::from_ints(&[-1, 2]);
        let b = UniPoly::from_ints(&[-2, 0, 1]);
        let f = &(&(&a * &a) * &b) * &UniPoly::from_ints(&[0, 3]);
        let fs = factor_uni(&f);
        assert_eq!(prod(&fs), f);
        assert_eq!(fs.factors.len(), 3);
        assert!(fs.factors.iter().any(|(p, m)| *m == 2 && p.degree() == Some(1)));
    }

    #[test]
    fn large_coefficients() {
        let a = UniPoly::from_ints(&[123457, -99991, 1]);
        let b = UniPoly::from_ints(&[-77777, 3, 0, 5]);
        let f = &a * &b;
        let fs = factor_uni(&f);
        assert_eq!(fs.factors.len(), 2);
        assert_eq!(prod(&fs), f);
    }

    #[test]
    fn modular_gcd_matches_euclid() {
        let euclid = |a: &UniPoly, b: &UniPoly| {
            let (mut a, mut b) = (a.clone(), b.clone());
            while !b.is_zero() {
                let r = a.rem(&b);
                a = b;
                b = r;
            }
            a.monic()
        };
        let g = UniPoly::from_ints(&[-2, 0, 1]);
        let a = &UniPoly::from_ints(&[3, -1, 0, 7, 5]) * &g.pow(2);
        let b = &UniPoly::from_ints(&[-30, 1, 0, 0, 11]) * &g;
        assert_eq!(gcd_modular(&a, &b), euclid(&a, &b));
        assert_eq!(gcd_modular(&a, &b), g);
        let big = UniPoly::from_ints(&[1_000_000_007, -3, 0, 2]);
        let c = &big * &UniPoly::from_ints(&[-1, 1]);
        assert_eq!(gcd_modular(&c, &(&big * &UniPoly::from_ints(&[1, 1]))), big.monic());
        assert_eq!(gcd_modular(&a, &UniPoly::from_ints(&[1, 0, 0, 1])), UniPoly::one());
    }
}
