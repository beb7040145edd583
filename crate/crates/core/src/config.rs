//! Finite sets of lines: admissibility, the four corollary shapes and
//! rectifying affine changes of coordinates.

use std::collections::BTreeSet;
use std::fmt;

use bipoly::{BiPoly, Rat, UniPoly};
use num_traits::{One, Zero};

use crate::endo::{Line, Point};
use crate::genword::{word_missing_set, Alpha, GenWord, Generator};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LineConfig {
    lines: Vec<Line>,
}

impl LineConfig {
    pub fn new(lines: impl IntoIterator<Item = Line>) -> Self {
        let set: BTreeSet<Line> = lines.into_iter().collect();
        LineConfig {
            lines: set.into_iter().collect(),
        }
    }

    /// `"x; x-1; y"`
    pub fn parse(s: &str) -> Result<Self> {
        let mut lines = Vec::new();
        for part in s.split(';') {
            let part = part.trim();
            if !part.is_empty() {
                lines.push(Line::parse(part)?);
            }
        }
        Ok(LineConfig::new(lines))
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Lines grouped by direction.
    pub fn direction_classes(&self) -> Vec<Vec<Line>> {
        let mut classes: Vec<Vec<Line>> = Vec::new();
        for l in &self.lines {
            match classes.iter_mut().find(|c| c[0].is_parallel(l)) {
                Some(c) => c.push(l.clone()),
                None => classes.push(vec![l.clone()]),
            }
        }
        classes
    }

    /// Image under the affine letter `a`.
    pub fn image(&self, a: &Generator) -> LineConfig {
        let inv = a.inverse().expect("affine letter").remove(0).to_endo();
        LineConfig::new(
            self.lines
                .iter()
                .map(|l| Line::from_poly(&inv.pullback(&l.to_poly())).expect("affine image")),
        )
    }
}

impl fmt::Display for LineConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lines.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CorollaryType {
    A,
    B,
    C,
    D,
    None,
}

impl fmt::Display for CorollaryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CorollaryType::A => "a",
            CorollaryType::B => "b",
            CorollaryType::C => "c",
            CorollaryType::D => "d",
            CorollaryType::None => "none",
        })
    }
}

impl std::str::FromStr for CorollaryType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "a" => CorollaryType::A,
            "b" => CorollaryType::B,
            "c" => CorollaryType::C,
            "d" => CorollaryType::D,
            _ => return Err(Error::Parse(format!("unknown configuration type `{s}`"))),
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConfigClass {
    /// Distinct lines are always simultaneously of degree 1.
    pub weakly_admissible: bool,
    pub admissible: bool,
    pub corollary_type: CorollaryType,
    pub directions: Vec<Vec<Line>>,
    pub concurrency_point: Option<Point>,
    pub canonical_params: Vec<Rat>,
}

fn concurrent_point(lines: &[&Line]) -> Option<Point> {
    if lines.len() < 2 {
        return None;
    }
    let p = lines[0].meet(lines[1])?;
    lines.iter().all(|l| l.contains(&p)).then_some(p)
}

/// Definition check: no three lines through a point and an acyclic
/// intersection graph.
fn admissible_by_definition(lines: &[Line]) -> bool {
    let n = lines.len();
    for a in 0..n {
        for b in a + 1..n {
            let Some(p) = lines[a].meet(&lines[b]) else {
                continue;
            };
            if lines[b + 1..].iter().any(|l| l.contains(&p)) {
                return false;
            }
        }
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for a in 0..n {
        for b in a + 1..n {
            if lines[a].is_parallel(&lines[b]) {
                continue;
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
    }
    true
}

/// Normal-form check: one direction, or two with a singleton class.
fn admissible_by_directions(cfg: &LineConfig) -> bool {
    let classes = cfg.direction_classes();
    classes.len() <= 1 || (classes.len() == 2 && classes.iter().any(|c| c.len() == 1))
}

pub fn is_admissible(cfg: &LineConfig) -> Result<bool> {
    let a = admissible_by_definition(&cfg.lines);
    let b = admissible_by_directions(cfg);
    if a != b {
        return Err(Error::MethodDisagreement(format!(
            "{cfg}: definition says {a}, direction classes say {b}"
        )));
    }
    Ok(a)
}

/// An affine `A` moving the configuration to canonical position.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rectification {
    pub corollary_type: CorollaryType,
    pub affine: Generator,
    pub params: Vec<Rat>,
    /// The line sent to `Z(Y)` (types b, c, d).
    pub y_line: Option<Line>,
}

impl Rectification {
    pub fn target(&self) -> LineConfig {
        canonical_lines(self.corollary_type, &self.params)
    }
}

fn x_minus(c: &Rat) -> Line {
    Line::new(Rat::one(), Rat::zero(), -c.clone()).expect("line")
}

fn x_minus_cy(c: &Rat) -> Line {
    Line::new(Rat::one(), -c.clone(), Rat::zero()).expect("line")
}

fn y_minus(c: &Rat) -> Line {
    Line::new(Rat::zero(), Rat::one(), -c.clone()).expect("line")
}

/// The canonical configuration for a type and parameter list.
pub fn canonical_lines(t: CorollaryType, params: &[Rat]) -> LineConfig {
    let zero = Rat::zero();
    let mut v: Vec<Line> = Vec::new();
    match t {
        CorollaryType::A => v.extend(params.iter().map(x_minus)),
        CorollaryType::B => {
            v.push(y_minus(&zero));
            v.extend(params.iter().map(x_minus));
        }
        CorollaryType::C => {
            v.push(y_minus(&zero));
            v.extend(params.iter().map(x_minus_cy));
        }
        CorollaryType::D => {
            v.push(y_minus(&zero));
            v.push(y_minus(&Rat::one()));
            v.extend(params.iter().map(x_minus_cy));
        }
        CorollaryType::None => {}
    }
    LineConfig::new(v)
}

fn affine(m: [[Rat; 2]; 2], t: [Rat; 2]) -> Generator {
    Generator::Affine { m, t }
}

/// `U = s·ℓ` as an affine row `(a, b, c)`.
fn row(l: &Line, s: &Rat) -> ([Rat; 2], Rat) {
    ([&l.a * s, &l.b * s], &l.c * s)
}

fn affine_rows(u: ([Rat; 2], Rat), v: ([Rat; 2], Rat)) -> Generator {
    affine([u.0, v.0], [u.1, v.1])
}

/// Parallel family to `X − dᵢ` with `i0 ↦ 0` and `i1 ↦ 1`: the row of `U`
/// and the sorted `dᵢ`.
fn parallel_choices(family: &[Line]) -> Vec<(Vec<Rat>, ([Rat; 2], Rat))> {
    let n = family.len();
    if n == 1 {
        return vec![(vec![Rat::zero()], row(&family[0], &Rat::one()))];
    }
    let mut out = Vec::new();
    for i0 in 0..n {
        for i1 in 0..n {
            if i0 == i1 {
                continue;
            }
            // U = s·(aX + bY + c_{i0}) takes the value s·(c_{i0} − cᵢ) on line i
            let c0 = &family[i0].c;
            let s = (c0 - &family[i1].c).recip();
            let mut params: Vec<Rat> = family.iter().map(|l| (c0 - &l.c) * &s).collect();
            params.sort();
            out.push((params, row(&family[i0], &s)));
        }
    }
    out
}

/// `ℓᵢ = αᵢ·ℓ_{i0} + βᵢ·ℓ_j` on the homogeneous parts.
fn coords(l: &Line, b0: &Line, b1: &Line) -> (Rat, Rat) {
    let det = &b0.a * &b1.b - &b0.b * &b1.a;
    let alpha = (&l.a * &b1.b - &l.b * &b1.a) / &det;
    let beta = (&b0.a * &l.b - &b0.b * &l.a) / &det;
    (alpha, beta)
}

/// Concurrent family with `ℓ_j ↦ κ·Y`, `ℓ_{i0} ↦ X`-direction and
/// `ℓ_{i1} ↦ X − Y`.
fn concurrent_choices(
    conc: &[Line],
    j: usize,
    y_scale: Option<Rat>,
) -> Vec<(Vec<Rat>, Generator)> {
    let n = conc.len();
    let mut out = Vec::new();
    for i0 in 0..n {
        for i1 in 0..n {
            if i0 == j || i1 == j || i0 == i1 {
                continue;
            }
            let (a1, b1) = coords(&conc[i1], &conc[i0], &conc[j]);
            // V = κ ℓ_j, U = λ ℓ_{i0}; line i ∝ U + (βᵢλ/(αᵢκ)) V
            let kappa = y_scale.clone().unwrap_or_else(Rat::one);
            let lambda = -(&a1 * &kappa) / &b1;
            let mut params = Vec::new();
            for (i, l) in conc.iter().enumerate() {
                if i == j {
                    continue;
                }
                let (al, be) = coords(l, &conc[i0], &conc[j]);
                params.push(-(&be * &lambda) / (&al * &kappa));
            }
            params.sort();
            let a = affine_rows(row(&conc[i0], &lambda), row(&conc[j], &kappa));
            out.push((params, a));
        }
    }
    out
}

fn best_parallel(family: &[Line]) -> (Vec<Rat>, ([Rat; 2], Rat)) {
    parallel_choices(family)
        .into_iter()
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("nonempty family")
}

fn best_concurrent(conc: &[Line], j: usize, y_scale: Option<Rat>) -> (Vec<Rat>, Generator) {
    concurrent_choices(conc, j, y_scale)
        .into_iter()
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("s ≥ 3")
}

/// One rectification per choice of the line sent to `Z(Y)`, each with its
/// least parameter list.
fn choices(cfg: &LineConfig, t: CorollaryType) -> Vec<Rectification> {
    let mut out = Vec::new();
    let rect = |affine, params, y_line| Rectification {
        corollary_type: t,
        affine,
        params,
        y_line,
    };
    match t {
        CorollaryType::None => {}
        CorollaryType::A if cfg.is_empty() => out.push(rect(Generator::identity(), vec![], None)),
        CorollaryType::A => {
            // any transversal direction serves as Y
            let v = if cfg.lines[0].a.is_zero() {
                ([Rat::one(), Rat::zero()], Rat::zero())
            } else {
                ([Rat::zero(), Rat::one()], Rat::zero())
            };
            let (params, u) = best_parallel(&cfg.lines);
            out.push(rect(affine_rows(u, v), params, None));
        }
        CorollaryType::B => {
            let classes = cfg.direction_classes();
            for (ti, trans) in classes.iter().enumerate() {
                if trans.len() == 1 {
                    let (params, u) = best_parallel(&classes[1 - ti]);
                    let v = row(&trans[0], &Rat::one());
                    out.push(rect(affine_rows(u, v), params, Some(trans[0].clone())));
                }
            }
        }
        CorollaryType::C => {
            for j in 0..cfg.len() {
                let (params, a) = best_concurrent(&cfg.lines, j, None);
                out.push(rect(a, params, Some(cfg.lines[j].clone())));
            }
        }
        CorollaryType::D => {
            for (l0, rest) in d_splits(cfg) {
                let j = rest.iter().position(|l| l.is_parallel(&l0)).expect("split");
                // L0 = ℓ_j + e, and V = −ℓ_j / e is 1 on L0
                let kappa = -(&l0.c - &rest[j].c).recip();
                let (params, a) = best_concurrent(&rest, j, Some(kappa));
                out.push(rect(a, params, Some(rest[j].clone())));
            }
        }
    }
    out.sort_by(|a, b| a.params.cmp(&b.params));
    out
}

/// All rectifications, sorted by parameters, each verified exactly.
pub fn rectify_choices(cfg: &LineConfig) -> Result<Vec<Rectification>> {
    let t = classify_corollary(cfg)?.corollary_type;
    if t == CorollaryType::None {
        return Err(Error::NotRealizable(format!(
            "{cfg} matches none of the four shapes"
        )));
    }
    let out = choices(cfg, t);
    for r in &out {
        if cfg.image(&r.affine) != r.target() {
            return Err(Error::NotRealizable(format!(
                "rectification of {cfg} missed the canonical position"
            )));
        }
    }
    Ok(out)
}

pub fn rectify(cfg: &LineConfig) -> Result<Rectification> {
    Ok(rectify_choices(cfg)?.remove(0))
}

/// Splits `{L0} ∪ rest` with `rest` concurrent (s ≥ 3), `L0` off the common
/// point and parallel to a line of `rest`.
fn d_splits(cfg: &LineConfig) -> Vec<(Line, Vec<Line>)> {
    let mut out = Vec::new();
    if cfg.len() < 4 {
        return out;
    }
    for k in 0..cfg.len() {
        let l0 = cfg.lines[k].clone();
        let rest: Vec<Line> = cfg
            .lines
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, l)| l.clone())
            .collect();
        let refs: Vec<&Line> = rest.iter().collect();
        let Some(p) = concurrent_point(&refs) else {
            continue;
        };
        if l0.contains(&p) || !rest.iter().any(|l| l.is_parallel(&l0)) {
            continue;
        }
        out.push((l0, rest));
    }
    out
}

pub fn classify_corollary(cfg: &LineConfig) -> Result<ConfigClass> {
    let admissible = is_admissible(cfg)?;
    let directions = cfg.direction_classes();
    let refs: Vec<&Line> = cfg.lines.iter().collect();
    let conc = concurrent_point(&refs);
    let mut concurrency_point = None;
    let corollary_type = if admissible {
        if directions.len() <= 1 {
            CorollaryType::A
        } else {
            CorollaryType::B
        }
    } else if cfg.len() >= 3 && conc.is_some() {
        concurrency_point = conc;
        CorollaryType::C
    } else if let Some((_, rest)) = d_splits(cfg).into_iter().next() {
        let refs: Vec<&Line> = rest.iter().collect();
        concurrency_point = concurrent_point(&refs);
        CorollaryType::D
    } else {
        CorollaryType::None
    };
    let mut class = ConfigClass {
        weakly_admissible: true,
        admissible,
        corollary_type,
        directions,
        concurrency_point,
        canonical_params: vec![],
    };
    if let Some(r) = choices(cfg, corollary_type).into_iter().next() {
        class.canonical_params = r.params;
    }
    Ok(class)
}

fn distinct(params: &[Rat]) -> bool {
    params.iter().collect::<BTreeSet<_>>().len() == params.len()
}

fn vgen_roots(params: &[Rat]) -> Generator {
    let mut phi = UniPoly::one();
    for c in params {
        phi = &phi * &UniPoly::linear_root(c);
    }
    Generator::Vgen(phi)
}

/// A word whose missing set is the canonical configuration of `t` with the
/// given parameters.
pub fn generate_example(t: CorollaryType, params: &[Rat]) -> Result<GenWord> {
    if !distinct(params) {
        return Err(Error::BadParams("parameters must be distinct".into()));
    }
    let min = match t {
        CorollaryType::A | CorollaryType::B => 1,
        CorollaryType::C | CorollaryType::D => 2,
        CorollaryType::None => {
            return Err(Error::BadParams("type none has no example".into()))
        }
    };
    if params.len() < min {
        return Err(Error::BadParams(format!(
            "type {t} needs at least {min} parameters"
        )));
    }
    let v = vgen_roots(params);
    let letters = match t {
        CorollaryType::A => vec![v],
        CorollaryType::B => vec![v, Generator::SacStd(Alpha::A1)],
        CorollaryType::C => vec![Generator::SacStd(Alpha::A1), v],
        CorollaryType::D => vec![Generator::SacStd(Alpha::A2), v, Generator::SacStd(Alpha::A1)],
        CorollaryType::None => unreachable!(),
    };
    let w = GenWord::new(letters);
    let want: BTreeSet<BiPoly> = canonical_lines(t, params)
        .lines()
        .iter()
        .map(|l| l.to_poly().normalized())
        .collect();
    if word_missing_set(&w)? != want {
        return Err(Error::BadParams(format!(
            "example for type {t} does not realize the configuration"
        )));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use bipoly::rat;

    fn cfg(s: &str) -> LineConfig {
        LineConfig::parse(s).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&cfg("x; x-1; x-2")).unwrap());
        assert!(is_admissible(&cfg("x; x-1; y")).unwrap());
        assert!(!is_admissible(&cfg("x; y; x-y")).unwrap());
        assert!(!is_admissible(&cfg("x; y; x+y-1")).unwrap());
    }

    #[test]
    fn corollary_examples() {
        let c = classify_corollary(&cfg("y; x-y; x-2y")).unwrap();
        assert_eq!(c.corollary_type, CorollaryType::C);
        assert_eq!(c.concurrency_point, Some((rat(0), rat(0))));
        let d = classify_corollary(&cfg("y; y-1; x; x-y")).unwrap();
        assert_eq!(d.corollary_type, CorollaryType::D);
        let n = classify_corollary(&cfg("x; y; x-y; x+y-3")).unwrap();
        assert_eq!(n.corollary_type, CorollaryType::None);
        assert!(n.weakly_admissible);
        let a = classify_corollary(&cfg("x; x-1; x-2")).unwrap();
        assert_eq!((a.corollary_type, a.admissible), (CorollaryType::A, true));
        let b = classify_corollary(&cfg("x; x-1; y")).unwrap();
        assert_eq!(b.corollary_type, CorollaryType::B);
    }

    #[test]
    fn rectify_examples() {
        let r = rectify(&cfg("x+y; x+y-1")).unwrap();
        assert_eq!(r.corollary_type, CorollaryType::A);
        assert_eq!(r.params, vec![rat(0), rat(1)]);
        assert_eq!(cfg("x+y; x+y-1").image(&r.affine), cfg("x; x-1"));

        let r = rectify(&cfg("y-1; x-1; x+y-2")).unwrap();
        assert_eq!(r.corollary_type, CorollaryType::C);
        assert_eq!(cfg("y-1; x-1; x+y-2").image(&r.affine), r.target());

        let r = rectify(&cfg("x; x-1; y")).unwrap();
        assert_eq!(r.corollary_type, CorollaryType::B);
        assert_eq!(r.target(), cfg("y; x; x-1"));

        let r = rectify(&cfg("y; y-1; x; x-y")).unwrap();
        assert_eq!(r.corollary_type, CorollaryType::D);
        assert_eq!(cfg("y; y-1; x; x-y").image(&r.affine), r.target());

        assert!(matches!(
            rectify(&cfg("x; y; x-y; x+y-3")),
            Err(Error::NotRealizable(_))
        ));
    }

    #[test]
    fn examples_realize_configurations() {
        let w = generate_example(CorollaryType::A, &[rat(0), rat(1)]).unwrap();
        assert_eq!(w.to_string(), "v x^2 - x\n");
        generate_example(CorollaryType::B, &[rat(1), rat(2)]).unwrap();
        let c = generate_example(CorollaryType::C, &[rat(1), rat(2)]).unwrap();
        assert_eq!(c.letters[0], Generator::SacStd(Alpha::A1));
        generate_example(CorollaryType::D, &[rat(1), rat(2)]).unwrap();
        assert!(generate_example(CorollaryType::C, &[rat(1)]).is_err());
        assert!(generate_example(CorollaryType::A, &[rat(1), rat(1)]).is_err());
    }
}
