//! Plane endomorphisms and their intrinsic invariants.

use std::collections::BTreeSet;
use std::fmt;

use bipoly::{
    constant_mod, divides, exact_div, format_rat, gcd, parse_poly, pseudo_rem_y, split_irreducible,
    BiPoly, Rat,
};
use num_traits::{One, Zero};

use crate::genword::{GenWord, Generator};
use crate::{Error, Result};

pub type Point = (Rat, Rat);

pub fn fmt_point(p: &Point) -> String {
    format!("({}, {})", format_rat(&p.0), format_rat(&p.1))
}

/// `(x, y) ↦ (P, Q)` with nonvanishing Jacobian.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PlaneEndo {
    p: BiPoly,
    q: BiPoly,
}

impl PlaneEndo {
    pub fn new(p: BiPoly, q: BiPoly) -> Result<Self> {
        if BiPoly::jacobian(&p, &q).is_zero() {
            return Err(Error::Precondition(format!(
                "Jacobian of ({p} ; {q}) vanishes identically"
            )));
        }
        Ok(PlaneEndo { p, q })
    }

    /// Skips the Jacobian check; callers know the pair is dominant.
    pub(crate) fn new_unchecked(p: BiPoly, q: BiPoly) -> Self {
        PlaneEndo { p, q }
    }

    pub fn identity() -> Self {
        PlaneEndo::new_unchecked(BiPoly::x(), BiPoly::y())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected `P ; Q`, got `{s}`")))?;
        let p = parse_poly(a).map_err(|e| Error::Parse(format!("first component: {e}")))?;
        let q = parse_poly(b).map_err(|e| Error::Parse(format!("second component: {e}")))?;
        PlaneEndo::new(p, q)
    }

    pub fn p(&self) -> &BiPoly {
        &self.p
    }

    pub fn q(&self) -> &BiPoly {
        &self.q
    }

    pub fn jacobian(&self) -> BiPoly {
        BiPoly::jacobian(&self.p, &self.q)
    }

    pub fn degree(&self) -> u32 {
        self.p
            .total_degree()
            .unwrap_or(0)
            .max(self.q.total_degree().unwrap_or(0))
    }

    pub fn apply(&self, pt: &Point) -> Point {
        (self.p.eval(&pt.0, &pt.1), self.q.eval(&pt.0, &pt.1))
    }

    /// `F ∘ self`.
    pub fn pullback(&self, f: &BiPoly) -> BiPoly {
        f.substitute(&self.p, &self.q)
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &PlaneEndo) -> PlaneEndo {
        compose(self, inner)
    }

    pub fn is_identity(&self) -> bool {
        self.p == BiPoly::x() && self.q == BiPoly::y()
    }
}

impl fmt::Display for PlaneEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ; {}", self.p, self.q)
    }
}

/// `g ∘ f`.
pub fn compose(g: &PlaneEndo, f: &PlaneEndo) -> PlaneEndo {
    PlaneEndo::new_unchecked(f.pullback(&g.p), f.pullback(&g.q))
}

/// The line `Z(aX + bY + c)`, first nonzero of `(a, b)` equal to 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Line {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl Line {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Self> {
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(Error::BadParams("line with a = b = 0".into()));
        };
        Ok(Line {
            a: a / &lead,
            b: b / &lead,
            c: c / &lead,
        })
    }

    pub fn from_poly(f: &BiPoly) -> Option<Line> {
        if f.total_degree() != Some(1) {
            return None;
        }
        Line::new(f.coeff(1, 0), f.coeff(0, 1), f.coeff(0, 0)).ok()
    }

    pub fn parse(s: &str) -> Result<Line> {
        let f = parse_poly(s).map_err(|e| Error::Parse(e.to_string()))?;
        Line::from_poly(&f).ok_or_else(|| Error::Parse(format!("`{s}` is not a line")))
    }

    pub fn to_poly(&self) -> BiPoly {
        BiPoly::from_terms([
            ((1, 0), self.a.clone()),
            ((0, 1), self.b.clone()),
            ((0, 0), self.c.clone()),
        ])
    }

    pub fn eval(&self, p: &Point) -> Rat {
        &self.a * &p.0 + &self.b * &p.1 + &self.c
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    pub fn is_parallel(&self, other: &Line) -> bool {
        self.a == other.a && self.b == other.b
    }

    /// Intersection point of two non-parallel lines.
    pub fn meet(&self, other: &Line) -> Option<Point> {
        let det = &self.a * &other.b - &self.b * &other.a;
        if det.is_zero() {
            return None;
        }
        let x = (&self.b * &other.c - &self.c * &other.b) / &det;
        let y = (&self.c * &other.a - &self.a * &other.c) / &det;
        Some((x, y))
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveFactor {
    pub equation: BiPoly,
    pub multiplicity: usize,
    pub is_line: bool,
    pub image_point: Option<Point>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Contraction {
    pub jacobian: BiPoly,
    pub contracting: Vec<CurveFactor>,
    /// Jacobian factors whose image is a curve; certifies non-birationality.
    pub non_contracted: Vec<(BiPoly, usize)>,
}

impl Contraction {
    pub fn equations(&self) -> Vec<BiPoly> {
        self.contracting.iter().map(|c| c.equation.clone()).collect()
    }

    pub fn fundamental_points(&self) -> BTreeSet<Point> {
        self.contracting
            .iter()
            .filter_map(|c| c.image_point.clone())
            .collect()
    }
}

fn is_contracted(f: &PlaneEndo, e: &BiPoly) -> bool {
    divides(e, &BiPoly::jacobian(&f.p, e)) && divides(e, &BiPoly::jacobian(&f.q, e))
}

pub fn contracting_curves(f: &PlaneEndo) -> Result<Contraction> {
    let jac = f.jacobian();
    let split = split_irreducible(&jac);
    if split.unresolved {
        return Err(Error::Unresolved(format!("Jacobian {jac}")));
    }
    let mut contracting = Vec::new();
    let mut non_contracted = Vec::new();
    for (e, mult) in split.factors {
        if !is_contracted(f, &e) {
            non_contracted.push((e, mult));
            continue;
        }
        let a = constant_mod(&f.p, &e);
        let b = constant_mod(&f.q, &e);
        let (Some(a), Some(b)) = (a, b) else {
            return Err(Error::IrrationalData(format!(
                "contracted curve {e} has no rational image point"
            )));
        };
        contracting.push(CurveFactor {
            is_line: e.total_degree() == Some(1),
            equation: e,
            multiplicity: mult,
            image_point: Some((a, b)),
        });
    }
    Ok(Contraction {
        jacobian: jac,
        contracting,
        non_contracted,
    })
}

pub fn fundamental_points(f: &PlaneEndo) -> Result<BTreeSet<Point>> {
    let c = contracting_curves(f)?;
    require_birational_candidate(&c)?;
    Ok(c.fundamental_points())
}

fn require_birational_candidate(c: &Contraction) -> Result<()> {
    if let Some((e, _)) = c.non_contracted.first() {
        return Err(Error::Precondition(format!(
            "Jacobian factor {e} is not contracted; the map is not birational"
        )));
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MissingLines {
    pub lines: Vec<Line>,
    pub all_missing_are_lines: bool,
}

pub fn missing_lines(f: &PlaneEndo) -> Result<MissingLines> {
    let c = contracting_curves(f)?;
    missing_lines_with(f, &c)
}

/// Missing lines given a precomputed contraction.
///
/// Every missing line passes through a fundamental point `p₀`. Writing
/// `P − a₀ = D·P₁`, `Q − b₀ = D·Q₁` with `P₁, Q₁` coprime, a line through
/// `p₀` pulls back to `D·(aP₁ + bQ₁)`, and the ratio `a : b` is fixed by any
/// contracting factor of `aP₁ + bQ₁`.
pub fn missing_lines_with(f: &PlaneEndo, cont: &Contraction) -> Result<MissingLines> {
    require_birational_candidate(cont)?;
    let eqs = cont.equations();
    let mut lines = BTreeSet::new();
    for p0 in cont.fundamental_points() {
        let pa = &f.p - &BiPoly::constant(p0.0.clone());
        let qb = &f.q - &BiPoly::constant(p0.1.clone());
        let d = gcd(&pa, &qb);
        let p1 = exact_div(&pa, &d).expect("gcd divides");
        let q1 = exact_div(&qb, &d).expect("gcd divides");
        let mut ratios: BTreeSet<(Rat, Rat)> = BTreeSet::new();
        if let Some(r) = pencil_constant(&p1, &q1) {
            ratios.insert(r);
        }
        for e in &eqs {
            if let Some(r) = pencil_through(&p1, &q1, e) {
                ratios.insert(r);
            }
        }
        for (a, b) in ratios {
            let c = -(&a * &p0.0 + &b * &p0.1);
            let line = Line::new(a, b, c)?;
            if pulls_back_to_contracting(f, &line, &eqs) {
                lines.insert(line);
            }
        }
    }
    let lines: Vec<Line> = lines.into_iter().collect();
    Ok(MissingLines {
        all_missing_are_lines: lines.len() == cont.contracting.len(),
        lines,
    })
}

/// `(a, b)` with `aP₁ + bQ₁` constant.
fn pencil_constant(p1: &BiPoly, q1: &BiPoly) -> Option<(Rat, Rat)> {
    if q1.is_constant() {
        return Some((Rat::zero(), Rat::one()));
    }
    if p1.is_constant() {
        return Some((Rat::one(), Rat::zero()));
    }
    let strip = |g: &BiPoly| g - &BiPoly::constant(g.coeff(0, 0));
    let (sp, sq) = (strip(p1), strip(q1));
    let r = sp.lc() / sq.lc();
    (sp == sq.scale(&r)).then(|| (Rat::one(), -r))
}

/// `(a, b)` with `e | aP₁ + bQ₁`.
fn pencil_through(p1: &BiPoly, q1: &BiPoly, e: &BiPoly) -> Option<(Rat, Rat)> {
    if divides(e, q1) {
        return Some((Rat::zero(), Rat::one()));
    }
    if divides(e, p1) {
        return Some((Rat::one(), Rat::zero()));
    }
    let (p1, q1, e) = if e.deg_y().unwrap_or(0) > 0 {
        (p1.clone(), q1.clone(), e.clone())
    } else {
        (p1.swap_xy(), q1.swap_xy(), e.swap_xy())
    };
    let (r1, k1) = pseudo_rem_y(&p1, &e);
    let (r2, k2) = pseudo_rem_y(&q1, &e);
    let lc = BiPoly::from_y_coeffs(&[e.y_coeffs().pop().expect("nonzero")]);
    let kk = k1.max(k2);
    let rp = &r1 * &lc.pow(kk - k1);
    let rq = &r2 * &lc.pow(kk - k2);
    if rq.is_zero() || rp.is_zero() {
        return None;
    }
    let r = rp.lc() / rq.lc();
    (rp == rq.scale(&r)).then(|| (Rat::one(), -r))
}

fn pulls_back_to_contracting(f: &PlaneEndo, line: &Line, eqs: &[BiPoly]) -> bool {
    let mut g = f.pullback(&line.to_poly());
    if g.is_zero() {
        return false;
    }
    for e in eqs {
        while let Ok(h) = exact_div(&g, e) {
            g = h;
        }
    }
    g.is_constant()
}

/// Jung–van der Kulk decomposition by leading-form reduction.
///
/// Returns a word of affine and triangular letters composing exactly to
/// `f`, or `NotAutomorphism` naming the failing stage.
pub fn verify_automorphism(f: &PlaneEndo) -> Result<GenWord> {
    let jac = f.jacobian();
    if !jac.is_constant() || jac.is_zero() {
        return Err(Error::NotAutomorphism(format!(
            "Jacobian {jac} is not a nonzero constant"
        )));
    }
    let mut p = f.p.clone();
    let mut q = f.q.clone();
    let mut letters = Vec::new();
    loop {
        let d1 = p.total_degree().unwrap_or(0);
        let d2 = q.total_degree().unwrap_or(0);
        if d1 <= 1 && d2 <= 1 {
            letters.push(Generator::affine_from_polys(&p, &q).ok_or_else(|| {
                Error::NotAutomorphism(format!("linear part of ({p} ; {q}) is singular"))
            })?);
            break;
        }
        let (hi, lo, dh, dl) = if d1 >= d2 {
            (&p, &q, d1, d2)
        } else {
            (&q, &p, d2, d1)
        };
        if dl == 0 || dh % dl != 0 {
            return Err(Error::NotAutomorphism(format!(
                "degrees ({d1}, {d2}) do not divide"
            )));
        }
        let r = dh / dl;
        let top_hi = hi.homogeneous_part(dh);
        let top_lo = lo.homogeneous_part(dl).pow(r);
        let c = top_hi.lc() / top_lo.lc();
        if top_hi != top_lo.scale(&c) {
            return Err(Error::NotAutomorphism(format!(
                "leading form {top_hi} is not a multiple of a power of {}",
                lo.homogeneous_part(dl)
            )));
        }
        let reduced = hi - &lo.pow(r).scale(&c);
        let shear = Generator::Triangular {
            c: Rat::one(),
            r: bipoly::UniPoly::monomial(c, r as usize),
        };
        if d1 >= d2 {
            p = reduced;
            letters.extend([Generator::swap(), shear, Generator::swap()]);
        } else {
            q = reduced;
            letters.push(shear);
        }
    }
    Ok(GenWord::new(letters))
}

pub fn is_automorphism(f: &PlaneEndo) -> bool {
    verify_automorphism(f).is_ok()
}

/// Finds an automorphism `Φ` with `e ∘ Φ = x`; returns the words of `Φ` and
/// `Φ⁻¹`. `None` when `e` is not recognized as a coordinate.
pub fn coordinate_chart(e: &BiPoly) -> Option<(GenWord, GenWord)> {
    let mut cur = e.clone();
    let mut phi: Vec<Generator> = Vec::new();
    let x = BiPoly::x();
    let y = BiPoly::y();
    loop {
        let d = cur.total_degree()?;
        if d == 0 {
            return None;
        }
        if d == 1 {
            let a = cur.coeff(1, 0);
            let b = cur.coeff(0, 1);
            let c = cur.coeff(0, 0);
            let (px, qy) = if !a.is_zero() {
                // ((x − c − b·y)/a, y)
                let px = (&(&x - &BiPoly::constant(c)) - &y.scale(&b)).scale(&a.recip());
                (px, y.clone())
            } else {
                (y.clone(), (&x - &BiPoly::constant(c)).scale(&b.recip()))
            };
            phi.push(Generator::affine_from_polys(&px, &qy)?);
            break;
        }
        let top = cur.homogeneous_part(d);
        let lam = top.coeff(d, 0);
        if !lam.is_zero() {
            let t = top.coeff(d - 1, 1) / (Rat::from_integer(d.into()) * &lam);
            let expect = (&x + &y.scale(&t)).pow(d).scale(&lam);
            if top != expect {
                return None;
            }
            // (y − t·x, x) turns x + t·y into y
            let lx = &y - &x.scale(&t);
            cur = cur.substitute(&lx, &x);
            phi.push(Generator::affine_from_polys(&lx, &x)?);
        } else if top != BiPoly::monomial(top.coeff(0, d), 0, d) {
            return None;
        }
        let ex = cur.deg_x()?;
        if ex == 0 || d % ex != 0 {
            return None;
        }
        let k = d / ex;
        if cur.terms().any(|(m, _)| k * m.x + m.y > d) {
            return None;
        }
        let wtop = BiPoly::from_terms(
            cur.terms()
                .filter(|(m, _)| k * m.x + m.y == d)
                .map(|(m, c)| ((m.x, m.y), c.clone())),
        );
        let mu = wtop.coeff(ex, 0);
        if mu.is_zero() {
            return None;
        }
        let cp = -wtop.coeff(ex - 1, k) / (Rat::from_integer(ex.into()) * &mu);
        let yk = BiPoly::monomial(Rat::one(), 0, k);
        if wtop != (&x - &yk.scale(&cp)).pow(ex).scale(&mu) {
            return None;
        }
        cur = cur.substitute(&(&x + &yk.scale(&cp)), &y);
        if cur.total_degree()? >= d {
            return None;
        }
        phi.extend([
            Generator::swap(),
            Generator::Triangular {
                c: Rat::one(),
                r: bipoly::UniPoly::monomial(cp, k as usize),
            },
            Generator::swap(),
        ]);
    }
    let phi = GenWord::new(phi);
    let inv = phi.inverse()?;
    if phi.to_endo().pullback(e) != x {
        return None;
    }
    Some((phi, inv))
}

#[derive(Clone, Debug)]
pub struct EndoReport {
    pub degree: u32,
    pub contraction: Contraction,
    pub missing: MissingLines,
}

impl EndoReport {
    pub fn q(&self) -> usize {
        self.missing.lines.len()
    }

    pub fn c(&self) -> usize {
        self.contraction.contracting.len()
    }
}

/// Contraction and missing-line data. Non-birational inputs still get a
/// report with the offending factors listed and no missing lines.
pub fn report(f: &PlaneEndo) -> Result<EndoReport> {
    let contraction = contracting_curves(f)?;
    let missing = if contraction.non_contracted.is_empty() {
        missing_lines_with(f, &contraction)?
    } else {
        MissingLines {
            lines: Vec::new(),
            all_missing_are_lines: false,
        }
    };
    Ok(EndoReport {
        degree: f.degree(),
        contraction,
        missing,
    })
}

/// Rational points of `Z(e)` with `x ∈ {−n..n}` (roots in `y` found by
/// univariate factorization).
pub fn rational_points(e: &BiPoly, n: i64) -> Vec<Point> {
    let mut out = Vec::new();
    for xi in -n..=n {
        let xv = Rat::from_integer(xi.into());
        let u = e.eval_x(&xv);
        if u.is_zero() {
            out.push((xv, Rat::zero()));
            continue;
        }
        for (fac, _) in bipoly::factor_uni(&u).factors {
            if fac.degree() == Some(1) {
                out.push((xv.clone(), -fac.coeff(0) / fac.coeff(1)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use bipoly::rat;

    fn endo(s: &str) -> PlaneEndo {
        PlaneEndo::parse(s).unwrap()
    }

    fn pt(a: i64, b: i64) -> Point {
        (rat(a), rat(b))
    }

    fn line(s: &str) -> Line {
        Line::parse(s).unwrap()
    }

    #[test]
    fn compose_gamma_matrices() {
        let g = endo("x*y ; y");
        let f = endo("x ; x*y");
        assert_eq!(compose(&g, &f), endo("x^2*y ; x*y"));
        assert_eq!(compose(&PlaneEndo::identity(), &f), f);
    }

    #[test]
    fn compose_verticals_multiplies() {
        let a = endo("x ; x*y");
        let b = endo("x ; (x-1)*y");
        let ab = endo("x ; x*(x-1)*y");
        assert_eq!(compose(&a, &b), ab);
        assert_eq!(compose(&b, &a), ab);
    }

    #[test]
    fn jacobians() {
        assert_eq!(endo("x ; x*y").jacobian(), BiPoly::x());
        assert_eq!(
            endo("x ; (x-1)*(x-2)*y").jacobian(),
            parse_poly("(x-1)*(x-2)").unwrap()
        );
        assert_eq!(
            endo("x*(x-1)*(x-2)*y ; (x-1)*(x-2)*y").jacobian(),
            parse_poly("(x-1)^2*(x-2)^2*y").unwrap()
        );
    }

    #[test]
    fn zero_jacobian_rejected() {
        assert!(matches!(
            PlaneEndo::parse("x + y ; 2x + 2y"),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(PlaneEndo::parse("x + y"), Err(Error::Parse(_))));
    }

    #[test]
    fn contracting_of_gamma() {
        let c = contracting_curves(&endo("x^2*y ; x*y")).unwrap();
        let eqs: BTreeSet<_> = c.equations().into_iter().collect();
        assert_eq!(eqs, [BiPoly::x(), BiPoly::y()].into_iter().collect());
        assert!(c.contracting.iter().all(|f| f.image_point == Some(pt(0, 0))));
    }

    #[test]
    fn contracting_two_verticals() {
        let c = contracting_curves(&endo("x ; x*(x-1)*y")).unwrap();
        assert_eq!(c.contracting.len(), 2);
        assert_eq!(
            c.fundamental_points(),
            [pt(0, 0), pt(1, 0)].into_iter().collect()
        );
    }

    #[test]
    fn square_map_not_birational() {
        let c = contracting_curves(&endo("x^2 ; y")).unwrap();
        assert!(c.contracting.is_empty());
        assert_eq!(c.non_contracted, vec![(BiPoly::x(), 1)]);
        assert!(matches!(
            missing_lines(&endo("x^2 ; y")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn fundamental_points_merge() {
        let f = endo("x*(x-1)*(x-2)*y ; (x-1)*(x-2)*y");
        assert_eq!(
            fundamental_points(&f).unwrap(),
            [pt(0, 0)].into_iter().collect()
        );
        assert_eq!(
            fundamental_points(&endo("x ; x*y")).unwrap(),
            [pt(0, 0)].into_iter().collect()
        );
    }

    #[test]
    fn missing_lines_examples() {
        let m = missing_lines(&endo("x^2*y ; x*y")).unwrap();
        assert_eq!(m.lines, vec![line("y"), line("x")]);
        assert!(m.all_missing_are_lines);

        let m = missing_lines(&endo("x*(x-1)*(x-2)*y ; (x-1)*(x-2)*y")).unwrap();
        let want: Vec<Line> = vec![line("y"), line("x - 2y"), line("x - y")];
        let mut got = m.lines.clone();
        got.sort();
        let mut want = want;
        want.sort();
        assert_eq!(got, want);
        assert!(m.all_missing_are_lines);

        let m = missing_lines(&endo("x + y^2 ; y")).unwrap();
        assert!(m.lines.is_empty());
        assert!(m.all_missing_are_lines);
    }

    #[test]
    fn nonlinear_missing_curve_detected() {
        // (x + y², y) ∘ (x, x y): misses the parabola X = Y².
        let f = endo("x + x^2*y^2 ; x*y");
        let m = missing_lines(&f).unwrap();
        assert!(m.lines.is_empty());
        assert!(!m.all_missing_are_lines);
    }

    #[test]
    fn automorphism_words_recompose() {
        for s in ["x + y^2 ; y", "x + y^2 ; y + (x + y^2)^2", "2x + 3 ; y - x^3 + 1", "y ; x"] {
            let f = endo(s);
            let w = verify_automorphism(&f).unwrap();
            assert_eq!(w.to_endo(), f, "{s}");
        }
        assert!(matches!(
            verify_automorphism(&endo("x^2 ; y")),
            Err(Error::NotAutomorphism(_))
        ));
        assert!(verify_automorphism(&endo("x ; x*y")).is_err());
    }

    #[test]
    fn coordinate_charts() {
        for s in ["x", "y - 3", "x + y^2", "y + (x + y^2)^2", "2*(x - y)^3 + x + 1"] {
            let e = parse_poly(s).unwrap();
            let (phi, inv) = coordinate_chart(&e).unwrap_or_else(|| panic!("{s}"));
            assert_eq!(phi.to_endo().pullback(&e), BiPoly::x());
            assert!(compose(&phi.to_endo(), &inv.to_endo()).is_identity());
        }
        for s in ["x*y + 1", "x^2 + y^2", "x^2", "y^2 - x^3"] {
            assert!(coordinate_chart(&parse_poly(s).unwrap()).is_none(), "{s}");
        }
    }

    #[test]
    fn rational_point_search() {
        let pts = rational_points(&parse_poly("x*y - 1").unwrap(), 2);
        assert!(pts.contains(&(rat(2), bipoly::ratio(1, 2))));
    }
}
