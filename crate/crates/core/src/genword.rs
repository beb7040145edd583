//! Words over the generator families and their compositional invariants.

use std::collections::BTreeSet;
use std::fmt;

use bipoly::{
    constant_mod, divides, exact_div, format_rat, parse_rat, parse_uni,
    split_irreducible, BiPoly, Rat, UniPoly,
};
use num_traits::{One, Zero};

use crate::endo::{compose, Line, PlaneEndo, Point};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Alpha {
    /// `(x, xy)`
    A0,
    /// `(xy, y)`
    A1,
    /// `(x(1−y), 1−y)`
    A2,
}

impl Alpha {
    pub fn index(self) -> u8 {
        match self {
            Alpha::A0 => 0,
            Alpha::A1 => 1,
            Alpha::A2 => 2,
        }
    }
}

/// `(i j; k l)` over ℕ with determinant ±1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MatM {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub l: u32,
}

impl MatM {
    pub fn new(i: u32, j: u32, k: u32, l: u32) -> Result<Self> {
        let m = MatM { i, j, k, l };
        if m.det().abs() != 1 {
            return Err(Error::BadParams(format!("det of {m} is {}", m.det())));
        }
        Ok(m)
    }

    pub const IDENTITY: MatM = MatM { i: 1, j: 0, k: 0, l: 1 };
    pub const SWAP: MatM = MatM { i: 0, j: 1, k: 1, l: 0 };
    pub const L: MatM = MatM { i: 1, j: 1, k: 0, l: 1 };

    pub fn det(&self) -> i64 {
        self.i as i64 * self.l as i64 - self.j as i64 * self.k as i64
    }

    pub fn mul(&self, o: &MatM) -> MatM {
        MatM {
            i: self.i * o.i + self.j * o.k,
            j: self.i * o.j + self.j * o.l,
            k: self.k * o.i + self.l * o.k,
            l: self.k * o.j + self.l * o.l,
        }
    }
}

impl fmt::Display for MatM {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.i, self.j, self.k, self.l)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    /// `(m₀₀x + m₀₁y + t₀, m₁₀x + m₁₁y + t₁)`
    Affine { m: [[Rat; 2]; 2], t: [Rat; 2] },
    /// `(x, c·y + r(x))`
    Triangular { c: Rat, r: UniPoly },
    /// `(x·y^m + p(y), y)`, `deg p < m`
    Hgen { m: u32, p: UniPoly },
    /// `(x^i y^j, x^k y^l)`
    Ggen(MatM),
    /// `(x, φ(x)·y)`
    Vgen(UniPoly),
    SacStd(Alpha),
    /// `A⁻¹ ∘ α₀ ∘ A` with `A` sending the line to `Z(X)` and the point to
    /// the origin.
    SacAt { line: Line, point: Point },
}

fn r(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

fn xp() -> BiPoly {
    BiPoly::x()
}

fn yp() -> BiPoly {
    BiPoly::y()
}

fn cst(c: Rat) -> BiPoly {
    BiPoly::constant(c)
}

/// Linear roots of a univariate polynomial; `IrrationalData` otherwise.
pub(crate) fn rational_roots(phi: &UniPoly) -> Result<Vec<Rat>> {
    let mut out = Vec::new();
    for (f, _) in bipoly::factor_uni(phi).factors {
        if f.degree() != Some(1) {
            return Err(Error::IrrationalData(format!(
                "{} has a root that is not rational",
                f.fmt_var("x")
            )));
        }
        out.push(-f.coeff(0) / f.coeff(1));
    }
    out.sort();
    Ok(out)
}

impl Generator {
    pub fn swap() -> Generator {
        Generator::Affine {
            m: [[r(0), r(1)], [r(1), r(0)]],
            t: [r(0), r(0)],
        }
    }

    pub fn identity() -> Generator {
        Generator::Affine {
            m: [[r(1), r(0)], [r(0), r(1)]],
            t: [r(0), r(0)],
        }
    }

    pub fn translation(a: Rat, b: Rat) -> Generator {
        Generator::Affine {
            m: [[r(1), r(0)], [r(0), r(1)]],
            t: [a, b],
        }
    }

    /// `(x, y + s(x))`
    pub fn shear(s: UniPoly) -> Generator {
        Generator::Triangular { c: r(1), r: s }
    }

    /// The affine letter with components `p`, `q` (degree ≤ 1, invertible).
    pub fn affine_from_polys(p: &BiPoly, q: &BiPoly) -> Option<Generator> {
        if p.total_degree().unwrap_or(0) > 1 || q.total_degree().unwrap_or(0) > 1 {
            return None;
        }
        let m = [
            [p.coeff(1, 0), p.coeff(0, 1)],
            [q.coeff(1, 0), q.coeff(0, 1)],
        ];
        if (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]).is_zero() {
            return None;
        }
        Some(Generator::Affine {
            m,
            t: [p.coeff(0, 0), q.coeff(0, 0)],
        })
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |s: String| Err(Error::BadParams(s));
        match self {
            Generator::Affine { m, .. } => {
                if (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]).is_zero() {
                    return bad("singular affine matrix".into());
                }
            }
            Generator::Triangular { c, .. } => {
                if c.is_zero() {
                    return bad("triangular letter with c = 0".into());
                }
            }
            Generator::Hgen { m, p } => {
                if p.degree().is_some_and(|d| d >= *m as usize) {
                    return bad(format!("h letter needs deg p < m = {m}"));
                }
            }
            Generator::Ggen(mm) => {
                MatM::new(mm.i, mm.j, mm.k, mm.l)?;
            }
            Generator::Vgen(phi) => {
                if phi.is_zero() {
                    return bad("v letter with φ = 0".into());
                }
            }
            Generator::SacStd(_) => {}
            Generator::SacAt { line, point } => {
                if !line.contains(point) {
                    return bad(format!("point not on line {line}"));
                }
            }
        }
        Ok(())
    }

    pub fn to_endo(&self) -> PlaneEndo {
        let (x, y) = (xp(), yp());
        let (p, q) = match self {
            Generator::Affine { m, t } => (
                &(&x.scale(&m[0][0]) + &y.scale(&m[0][1])) + &cst(t[0].clone()),
                &(&x.scale(&m[1][0]) + &y.scale(&m[1][1])) + &cst(t[1].clone()),
            ),
            Generator::Triangular { c, r } => (x, &y.scale(c) + &r.to_bipoly_x()),
            Generator::Hgen { m, p } => (&x.mul_monomial(0, *m) + &p.to_bipoly_y(), y),
            Generator::Ggen(mm) => (
                BiPoly::monomial(r(1), mm.i, mm.j),
                BiPoly::monomial(r(1), mm.k, mm.l),
            ),
            Generator::Vgen(phi) => (x, &phi.to_bipoly_x() * &y),
            Generator::SacStd(Alpha::A0) => (x.clone(), x.mul_monomial(0, 1)),
            Generator::SacStd(Alpha::A1) => (x.mul_monomial(0, 1), y),
            Generator::SacStd(Alpha::A2) => {
                let one_minus_y = &cst(r(1)) - &y;
                (&x * &one_minus_y, one_minus_y)
            }
            Generator::SacAt { line, point } => {
                let (a, ainv) = sac_at_charts(line, point);
                let e = compose(
                    &ainv.to_endo(),
                    &compose(&Generator::SacStd(Alpha::A0).to_endo(), &a.to_endo()),
                );
                return e;
            }
        };
        PlaneEndo::new_unchecked(p, q)
    }

    pub fn is_automorphism(&self) -> bool {
        match self {
            Generator::Affine { .. } | Generator::Triangular { .. } => true,
            Generator::Hgen { m, .. } => *m == 0,
            Generator::Ggen(mm) => *mm == MatM::IDENTITY || *mm == MatM::SWAP,
            Generator::Vgen(phi) => phi.is_constant(),
            Generator::SacStd(_) | Generator::SacAt { .. } => false,
        }
    }

    /// Number of SACs the letter contributes.
    pub fn n(&self) -> usize {
        match self {
            Generator::Affine { .. } | Generator::Triangular { .. } => 0,
            Generator::Hgen { m, .. } => *m as usize,
            Generator::Ggen(mm) => crate::sacfactor::matm_factor(mm)
                .iter()
                .filter(|l| **l == crate::sacfactor::MatLetter::L)
                .count(),
            Generator::Vgen(phi) => phi.degree().unwrap_or(0),
            Generator::SacStd(_) | Generator::SacAt { .. } => 1,
        }
    }

    /// Inverse as a word of affine and triangular letters, for automorphisms.
    pub fn inverse(&self) -> Option<Vec<Generator>> {
        match self {
            Generator::Affine { m, t } => {
                let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
                let mi = [
                    [&m[1][1] / &det, -&m[0][1] / &det],
                    [-&m[1][0] / &det, &m[0][0] / &det],
                ];
                let ti = [
                    -(&mi[0][0] * &t[0] + &mi[0][1] * &t[1]),
                    -(&mi[1][0] * &t[0] + &mi[1][1] * &t[1]),
                ];
                Some(vec![Generator::Affine { m: mi, t: ti }])
            }
            Generator::Triangular { c, r } => {
                let ci = c.recip();
                Some(vec![Generator::Triangular {
                    c: ci.clone(),
                    r: r.scale(&-ci),
                }])
            }
            Generator::Hgen { m: 0, .. } | Generator::Ggen(MatM::IDENTITY) => Some(vec![]),
            Generator::Ggen(MatM::SWAP) => Some(vec![Generator::swap()]),
            Generator::Vgen(phi) if phi.is_constant() => Some(vec![Generator::Triangular {
                c: phi.coeff(0).recip(),
                r: UniPoly::zero(),
            }]),
            _ => None,
        }
    }

    /// The inverse map as `(N₁/D, N₂/D)`.
    fn inverse_fraction(&self) -> (BiPoly, BiPoly, BiPoly) {
        let (x, y) = (xp(), yp());
        let one = BiPoly::one();
        if let Some(inv) = self.inverse() {
            let e = GenWord::new(inv).to_endo();
            return (e.p().clone(), e.q().clone(), one);
        }
        match self {
            Generator::Hgen { m, p } => (
                &x - &p.to_bipoly_y(),
                y.mul_monomial(0, *m),
                BiPoly::monomial(r(1), 0, *m),
            ),
            Generator::Ggen(mm) => {
                let det = mm.det();
                let inv = [
                    [det * mm.l as i64, -det * mm.j as i64],
                    [-det * mm.k as i64, det * mm.i as i64],
                ];
                let al = 0.max(-inv[0][0]).max(-inv[1][0]);
                let be = 0.max(-inv[0][1]).max(-inv[1][1]);
                let mono = |a: i64, b: i64| BiPoly::monomial(r(1), a as u32, b as u32);
                (
                    mono(inv[0][0] + al, inv[0][1] + be),
                    mono(inv[1][0] + al, inv[1][1] + be),
                    mono(al, be),
                )
            }
            Generator::Vgen(phi) => {
                let f = phi.to_bipoly_x();
                (&x * &f, y, f)
            }
            Generator::SacStd(Alpha::A0) => (x.mul_monomial(1, 0), y, x),
            Generator::SacStd(Alpha::A1) => (x, y.mul_monomial(0, 1), y),
            Generator::SacStd(Alpha::A2) => (x, &y - &y.mul_monomial(0, 1), y),
            Generator::SacAt { line, point } => {
                let (a, ainv) = sac_at_charts(line, point);
                let ae = a.to_endo();
                let (a1, a2) = (ae.p().clone(), ae.q().clone());
                let Generator::Affine { m, t } = ainv else {
                    unreachable!()
                };
                let n1 = &a1 * &a1;
                let comb = |row: usize| {
                    &(&n1.scale(&m[row][0]) + &a2.scale(&m[row][1])) + &a1.scale(&t[row])
                };
                (comb(0), comb(1), a1)
            }
            _ => unreachable!("automorphisms handled above"),
        }
    }

    /// Irreducible missing curves.
    pub fn miss(&self) -> Result<Vec<BiPoly>> {
        let (x, y) = (xp(), yp());
        Ok(match self {
            _ if self.is_automorphism() => vec![],
            Generator::Hgen { .. } => vec![y],
            Generator::Vgen(phi) => rational_roots(phi)?
                .into_iter()
                .map(|c| &x - &cst(c))
                .collect(),
            Generator::Ggen(mm) => {
                let mut v = vec![];
                let x_hit = (mm.i > 0 && mm.k == 0) || (mm.j > 0 && mm.l == 0);
                let y_hit = (mm.k > 0 && mm.i == 0) || (mm.l > 0 && mm.j == 0);
                if !x_hit {
                    v.push(x);
                }
                if !y_hit {
                    v.push(y);
                }
                v
            }
            Generator::SacStd(Alpha::A0) => vec![x],
            Generator::SacStd(_) => vec![y],
            Generator::SacAt { line, .. } => vec![line.to_poly()],
            _ => unreachable!(),
        })
    }

    /// Irreducible contracting curves.
    pub fn cont(&self) -> Result<Vec<BiPoly>> {
        let (x, y) = (xp(), yp());
        Ok(match self {
            _ if self.is_automorphism() => vec![],
            Generator::Hgen { .. } => vec![y],
            Generator::Vgen(_) => self.miss()?,
            Generator::Ggen(mm) => {
                let mut v = vec![];
                if mm.i > 0 && mm.k > 0 {
                    v.push(x);
                }
                if mm.j > 0 && mm.l > 0 {
                    v.push(y);
                }
                v
            }
            Generator::SacStd(Alpha::A0) => vec![x],
            Generator::SacStd(Alpha::A1) => vec![y],
            Generator::SacStd(Alpha::A2) => vec![&y - &cst(r(1))],
            Generator::SacAt { line, .. } => vec![line.to_poly()],
            _ => unreachable!(),
        })
    }

    /// Fundamental points.
    pub fn cent(&self) -> Result<Vec<Point>> {
        let o = (r(0), r(0));
        Ok(match self {
            _ if self.is_automorphism() => vec![],
            Generator::Hgen { p, .. } => vec![(p.coeff(0), r(0))],
            Generator::Vgen(phi) => rational_roots(phi)?
                .into_iter()
                .map(|c| (c, r(0)))
                .collect(),
            Generator::Ggen(_) => {
                if self.cont()?.is_empty() {
                    vec![]
                } else {
                    vec![o]
                }
            }
            Generator::SacStd(_) => vec![o],
            Generator::SacAt { point, .. } => vec![point.clone()],
            _ => unreachable!(),
        })
    }

    fn to_line(&self) -> String {
        let fr = format_rat;
        match self {
            Generator::Affine { m, t } => format!(
                "aff {} {} {} {} {} {}",
                fr(&m[0][0]),
                fr(&m[0][1]),
                fr(&m[1][0]),
                fr(&m[1][1]),
                fr(&t[0]),
                fr(&t[1])
            ),
            Generator::Triangular { c, r } => format!("tri {} {}", fr(c), r.fmt_var("x")),
            Generator::Hgen { m, p } => format!("h {m} {}", p.fmt_var("y")),
            Generator::Ggen(mm) => format!("g {} {} {} {}", mm.i, mm.j, mm.k, mm.l),
            Generator::Vgen(phi) => format!("v {}", phi.fmt_var("x")),
            Generator::SacStd(a) => format!("sacstd {}", a.index()),
            Generator::SacAt { line, point } => format!(
                "sacat {} {} {} {} {}",
                fr(&line.a),
                fr(&line.b),
                fr(&line.c),
                fr(&point.0),
                fr(&point.1)
            ),
        }
    }

    fn parse_line(s: &str) -> Result<Generator> {
        let perr = |m: String| Error::Parse(format!("`{s}`: {m}"));
        let (head, rest) = s.split_once(char::is_whitespace).unwrap_or((s, ""));
        let rest = rest.trim();
        let rats = |n: usize| -> Result<Vec<Rat>> {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != n {
                return Err(perr(format!("expected {n} numbers")));
            }
            toks.iter()
                .map(|t| parse_rat(t).map_err(|e| perr(e.to_string())))
                .collect()
        };
        let uni = |t: &str, v: char| parse_uni(t, v).map_err(|e| perr(e.to_string()));
        let nat = |t: &str| t.parse::<u32>().map_err(|e| perr(e.to_string()));
        let g = match head {
            "aff" => {
                let v = rats(6)?;
                Generator::Affine {
                    m: [[v[0].clone(), v[1].clone()], [v[2].clone(), v[3].clone()]],
                    t: [v[4].clone(), v[5].clone()],
                }
            }
            "tri" => {
                let (c, p) = rest.split_once(char::is_whitespace).unwrap_or((rest, "0"));
                Generator::Triangular {
                    c: parse_rat(c).map_err(|e| perr(e.to_string()))?,
                    r: uni(p, 'x')?,
                }
            }
            "h" => {
                let (m, p) = rest.split_once(char::is_whitespace).unwrap_or((rest, "0"));
                Generator::Hgen {
                    m: nat(m)?,
                    p: uni(p, 'y')?,
                }
            }
            "g" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if toks.len() != 4 {
                    return Err(perr("expected 4 entries".into()));
                }
                Generator::Ggen(MatM {
                    i: nat(toks[0])?,
                    j: nat(toks[1])?,
                    k: nat(toks[2])?,
                    l: nat(toks[3])?,
                })
            }
            "v" => Generator::Vgen(uni(rest, 'x')?),
            "sacstd" => Generator::SacStd(match rest {
                "0" => Alpha::A0,
                "1" => Alpha::A1,
                "2" => Alpha::A2,
                _ => return Err(perr("expected 0, 1 or 2".into())),
            }),
            "sacat" => {
                let v = rats(5)?;
                let line = Line::new(v[0].clone(), v[1].clone(), v[2].clone())?;
                Generator::SacAt {
                    line,
                    point: (v[3].clone(), v[4].clone()),
                }
            }
            _ => return Err(perr(format!("unknown letter `{head}`"))),
        };
        g.validate()?;
        Ok(g)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

/// The canonical chart `A` for a SAC at `(line, point)` and its inverse.
pub(crate) fn sac_at_charts(line: &Line, point: &Point) -> (Generator, Generator) {
    let a = if line.a.is_one() {
        // (x + b·y + c, y − y₀)
        Generator::Affine {
            m: [[r(1), line.b.clone()], [r(0), r(1)]],
            t: [line.c.clone(), -point.1.clone()],
        }
    } else {
        // (y + c, x − x₀)
        Generator::Affine {
            m: [[r(0), r(1)], [r(1), r(0)]],
            t: [line.c.clone(), -point.0.clone()],
        }
    };
    let inv = a.inverse().expect("affine").remove(0);
    (a, inv)
}

/// Letters applied right to left: the word `[g, f]` is the map `g ∘ f`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GenWord {
    pub letters: Vec<Generator>,
}

impl GenWord {
    pub fn new(letters: Vec<Generator>) -> Self {
        GenWord { letters }
    }

    pub fn empty() -> Self {
        GenWord::default()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn to_endo(&self) -> PlaneEndo {
        let mut acc = PlaneEndo::identity();
        for g in &self.letters {
            acc = compose(&acc, &g.to_endo());
        }
        acc
    }

    pub fn concat(&self, other: &GenWord) -> GenWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        GenWord { letters }
    }

    pub fn is_automorphism(&self) -> bool {
        self.letters.iter().all(Generator::is_automorphism)
    }

    /// Inverse of an automorphism word.
    pub fn inverse(&self) -> Option<GenWord> {
        let mut letters = Vec::new();
        for g in self.letters.iter().rev() {
            letters.extend(g.inverse()?);
        }
        Some(GenWord { letters })
    }

    pub fn n(&self) -> usize {
        self.letters.iter().map(Generator::n).sum()
    }

    pub fn parse(text: &str) -> Result<GenWord> {
        let mut letters = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            letters.push(Generator::parse_line(line)?);
        }
        Ok(GenWord { letters })
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.letters {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

impl From<Vec<Generator>> for GenWord {
    fn from(letters: Vec<Generator>) -> Self {
        GenWord { letters }
    }
}

pub fn word_n(w: &GenWord) -> usize {
    w.n()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Pushforward {
    Curve(BiPoly),
    ContractedToPoint(Point),
}

/// Closure of `g(Z(F))` for irreducible `F`.
pub fn pushforward_curve(g: &Generator, f: &BiPoly) -> Result<Pushforward> {
    let ge = g.to_endo();
    let contracted = divides(f, &BiPoly::jacobian(ge.p(), f))
        && divides(f, &BiPoly::jacobian(ge.q(), f));
    if contracted {
        return match (constant_mod(ge.p(), f), constant_mod(ge.q(), f)) {
            (Some(a), Some(b)) => Ok(Pushforward::ContractedToPoint((a, b))),
            _ => Err(Error::IrrationalData(format!(
                "{f} is contracted to an irrational point"
            ))),
        };
    }
    let (n1, n2, d) = g.inverse_fraction();
    let deg = f.total_degree().unwrap_or(0);
    let mut dpows = vec![BiPoly::one()];
    for k in 1..=deg as usize {
        let next = &dpows[k - 1] * &d;
        dpows.push(next);
    }
    let mut n1p = vec![BiPoly::one()];
    let mut n2p = vec![BiPoly::one()];
    for k in 1..=deg as usize {
        let a = &n1p[k - 1] * &n1;
        let b = &n2p[k - 1] * &n2;
        n1p.push(a);
        n2p.push(b);
    }
    let mut h = BiPoly::zero();
    for (m, c) in f.terms() {
        let (i, j) = (m.x as usize, m.y as usize);
        let t = &(&n1p[i] * &n2p[j]) * &dpows[deg as usize - i - j];
        h = &h + &t.scale(c);
    }
    if !d.is_constant() {
        for p in split_irreducible(&d).distinct() {
            while let Ok(q) = exact_div(&h, &p) {
                h = q;
            }
        }
    }
    let split = split_irreducible(&h);
    if split.unresolved {
        return Err(Error::Unresolved(format!("image of {f}")));
    }
    let comps = split.distinct();
    if comps.len() != 1 {
        return Err(Error::Unresolved(format!(
            "image of {f} under {g} has {} components",
            comps.len()
        )));
    }
    Ok(Pushforward::Curve(comps[0].clone()))
}

fn normalized_set(v: Vec<BiPoly>) -> BTreeSet<BiPoly> {
    v.into_iter().map(|p| p.normalized()).collect()
}

/// `Miss(g ∘ f) = Miss(g) ∪ g(Miss(f) ∖ Cont(g))`, folded from the right.
pub fn word_missing_set(w: &GenWord) -> Result<BTreeSet<BiPoly>> {
    let mut miss = BTreeSet::new();
    for g in w.letters.iter().rev() {
        miss = push_missing(g, &miss)?;
    }
    Ok(miss)
}

fn push_missing(g: &Generator, miss: &BTreeSet<BiPoly>) -> Result<BTreeSet<BiPoly>> {
    let mut next = normalized_set(g.miss()?);
    for c in miss {
        if let Pushforward::Curve(h) = pushforward_curve(g, c)? {
            next.insert(h.normalized());
        }
    }
    Ok(next)
}

/// `Cont(g ∘ f) = Cont(f) ∪ {components of G ∘ f : G ∈ Cont(g) ∖ Miss(f)}`.
pub fn word_contracting_set(w: &GenWord) -> Result<BTreeSet<BiPoly>> {
    let mut cont = BTreeSet::new();
    let mut miss = BTreeSet::new();
    let mut suffix = PlaneEndo::identity();
    for g in w.letters.iter().rev() {
        for c in normalized_set(g.cont()?) {
            if miss.contains(&c) {
                continue;
            }
            let split = split_irreducible(&suffix.pullback(&c));
            if split.unresolved {
                return Err(Error::Unresolved(format!("preimage of {c}")));
            }
            cont.extend(split.distinct());
        }
        miss = push_missing(g, &miss)?;
        suffix = compose(&g.to_endo(), &suffix);
    }
    Ok(cont)
}

/// `cent(g ∘ f) = cent(g) ∪ g(cent(f))`.
pub fn word_cent(w: &GenWord) -> Result<BTreeSet<Point>> {
    let mut cent = BTreeSet::new();
    for g in w.letters.iter().rev() {
        let ge = g.to_endo();
        let mut next: BTreeSet<Point> = cent.iter().map(|p| ge.apply(p)).collect();
        next.extend(g.cent()?);
        cent = next;
    }
    Ok(cent)
}

/// 1-based index of the SAC letter whose missing curve becomes `c`.
pub fn depth_of(w: &GenWord, c: &BiPoly) -> Result<usize> {
    if let Some(g) = w.letters.iter().find(|g| !g.is_automorphism() && g.n() != 1) {
        return Err(Error::Precondition(format!(
            "letter `{g}` is not a single SAC"
        )));
    }
    let target = c.normalized();
    let mut idx = 0;
    for (pos, g) in w.letters.iter().enumerate() {
        if g.is_automorphism() {
            continue;
        }
        idx += 1;
        for m in g.miss()? {
            let mut cur = Some(m);
            for h in w.letters[..pos].iter().rev() {
                cur = match pushforward_curve(h, cur.as_ref().expect("set"))? {
                    Pushforward::Curve(e) => Some(e),
                    Pushforward::ContractedToPoint(_) => None,
                };
                if cur.is_none() {
                    break;
                }
            }
            if cur.map(|e| e.normalized()) == Some(target.clone()) {
                return Ok(idx);
            }
        }
    }
    Err(Error::NotAMissingCurve(format!("{c}")))
}

/// Parses `P ; Q` or a word file, whichever the text looks like.
pub fn parse_endo_or_word(s: &str) -> Result<PlaneEndo> {
    if s.contains(';') && !s.contains('\n') {
        PlaneEndo::parse(s)
    } else {
        Ok(GenWord::parse(s)?.to_endo())
    }
}

#[cfg(test)]
pub(crate) fn poly(s: &str) -> BiPoly {
    bipoly::parse_poly(s).expect("valid literal")
}
