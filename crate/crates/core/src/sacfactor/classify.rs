use std::fmt;

use bipoly::{constant_mod, divides, exact_div, BiPoly, Rat, UniPoly};
use num_traits::{One, Zero};

use super::reduce::{theorem_c_reduce, Reduced};
use crate::config::{classify_corollary, is_admissible, rectify_choices, CorollaryType, LineConfig};
use crate::endo::{
    compose, contracting_curves, coordinate_chart, is_automorphism, missing_lines,
    missing_lines_with, verify_automorphism, Contraction, Line, PlaneEndo,
};
use crate::genword::{Alpha, GenWord, Generator, MatM};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ClassTag {
    Sw,
    Sa,
    Saa,
    /// Reported by front ends; `classify` returns `Error::OutOfClass` instead.
    OutOfClass,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassTag::Sw => "Sw",
            ClassTag::Sa => "Sa",
            ClassTag::Saa => "Saa",
            ClassTag::OutOfClass => "OutOfClass",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Variant {
    /// `α ∘ v_φ ∘ γ_M ∘ h_{m,p}`
    AlphaVGH {
        alpha: Option<Alpha>,
        phi: UniPoly,
        mat: MatM,
        hm: u32,
        hp: UniPoly,
    },
    /// `(x(p(x)y + q(x)), p(x)y + q(x))`
    SpecialFamily { p: UniPoly, q: UniPoly },
    /// A single `v` or `γ` letter.
    VorG(Generator),
}

impl Variant {
    pub fn core_word(&self) -> GenWord {
        let letters = match self {
            Variant::AlphaVGH {
                alpha,
                phi,
                mat,
                hm,
                hp,
            } => {
                let mut v: Vec<Generator> = alpha.iter().map(|a| Generator::SacStd(*a)).collect();
                v.push(Generator::Vgen(phi.clone()));
                v.push(Generator::Ggen(*mat));
                v.push(Generator::Hgen {
                    m: *hm,
                    p: hp.clone(),
                });
                v
            }
            Variant::SpecialFamily { p, q } => vec![
                Generator::SacStd(Alpha::A1),
                Generator::shear(q.clone()),
                Generator::Vgen(p.clone()),
            ],
            Variant::VorG(g) => vec![g.clone()],
        };
        GenWord::new(letters)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Variant::AlphaVGH { .. } => "AlphaVGH",
            Variant::SpecialFamily { .. } => "SpecialFamily",
            Variant::VorG(_) => "VorG",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::SpecialFamily { p, q } => write!(
                f,
                "SpecialFamily(p = {}, q = {})",
                p.fmt_var("x"),
                q.fmt_var("x")
            ),
            _ => {
                let letters: Vec<String> =
                    self.core_word().letters.iter().map(|g| g.to_string()).collect();
                write!(f, "{}({})", self.name(), letters.join(", "))
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SaaVerdict {
    Saa,
    NotSaaProven(String),
    /// A contracting curve is a nonlinear coordinate; undecided here.
    NotSaaConservative(String),
    NotApplicable,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalForm {
    pub class: ClassTag,
    pub variant: Variant,
    pub omega: GenWord,
    pub theta: GenWord,
    pub saa: SaaVerdict,
    /// The `v ∘ γ ∘ h` form a `Saa` result was reduced from.
    pub sa_form: Option<Box<NormalForm>>,
}

impl NormalForm {
    pub fn core(&self) -> GenWord {
        self.variant.core_word()
    }

    /// `ω ∘ f ∘ θ = core`, with `ω`, `θ` automorphisms.
    pub fn verify(&self, f: &PlaneEndo) -> bool {
        self.omega.is_automorphism()
            && self.theta.is_automorphism()
            && compose(&self.omega.to_endo(), &compose(f, &self.theta.to_endo()))
                == self.core().to_endo()
    }
}

fn inv(w: &GenWord) -> GenWord {
    w.inverse().expect("automorphism word")
}

/// `g = T⁻¹ ∘ δ_r ∘ v_φ ∘ γ_M ∘ h_{m,p} ∘ Θ` with `T⁻¹ = (x + shift, y)`.
#[derive(Clone, Debug)]
struct Admissible {
    shift: Rat,
    r: UniPoly,
    phi: UniPoly,
    mat: MatM,
    m: u32,
    p: UniPoly,
    theta: GenWord,
}

impl Admissible {
    fn outer(&self) -> GenWord {
        let mut v = Vec::new();
        if !self.shift.is_zero() {
            v.push(Generator::translation(self.shift.clone(), Rat::zero()));
        }
        if !self.r.is_zero() {
            v.push(Generator::shear(self.r.clone()));
        }
        GenWord::new(v)
    }
}

fn is_x_axis(l: &Line) -> bool {
    l.b.is_zero() && l.c.is_zero()
}

fn is_y_axis(l: &Line) -> bool {
    l.a.is_zero() && l.c.is_zero()
}

fn out(msg: String) -> Error {
    Error::OutOfClass(msg)
}

fn lines_of(cur: &PlaneEndo) -> Result<Vec<Line>> {
    let ml = missing_lines(cur)?;
    if !ml.all_missing_are_lines {
        return Err(out(format!("residual {cur} has a nonlinear missing curve")));
    }
    Ok(ml.lines)
}

/// Decomposes a map whose missing lines are vertical or `Z(Y)`.
fn admissible_decompose(g: &PlaneEndo) -> Result<Admissible> {
    let mut cur = g.clone();
    let mut r = UniPoly::zero();
    let mut phi = UniPoly::one();
    let mut shift = Rat::zero();
    loop {
        let lines = lines_of(&cur)?;
        if let Some(l) = lines.iter().find(|l| !l.b.is_zero() && !is_y_axis(l)) {
            return Err(out(format!("residual {cur} misses the line {l}")));
        }
        let verticals: Vec<Rat> = lines
            .iter()
            .filter(|l| l.b.is_zero())
            .map(|l| -l.c.clone())
            .collect();
        let peel = verticals.iter().find_map(|c| {
            let pc = cur.p() - &BiPoly::constant(c.clone());
            constant_mod(cur.q(), &pc).map(|b| (c.clone(), pc, b))
        });
        if let Some((c, pc, b)) = peel {
            let q1 = exact_div(&(cur.q() - &BiPoly::constant(b.clone())), &pc)?;
            r = &r + &phi.scale(&b);
            phi = &phi * &UniPoly::linear_root(&c);
            cur = PlaneEndo::new_unchecked(cur.p().clone(), q1);
            continue;
        }
        match verticals.as_slice() {
            [] => break,
            [c0] => {
                if !c0.is_zero() {
                    let sh = UniPoly::new(vec![c0.clone(), Rat::one()]);
                    cur = PlaneEndo::new_unchecked(
                        cur.p() - &BiPoly::constant(c0.clone()),
                        cur.q().clone(),
                    );
                    r = r.compose(&sh);
                    phi = phi.compose(&sh);
                    shift = c0.clone();
                }
                break;
            }
            _ => {
                return Err(out(format!(
                    "residual {cur}: {} vertical missing lines, none peelable",
                    verticals.len()
                )))
            }
        }
    }
    let mut mat = MatM::IDENTITY;
    let lower = MatM { i: 1, j: 0, k: 1, l: 1 };
    while !is_automorphism(&cur) {
        let lines = lines_of(&cur)?;
        if let Some(l) = lines.iter().find(|l| !is_x_axis(l) && !is_y_axis(l)) {
            return Err(out(format!("residual {cur} misses the line {l}")));
        }
        let has_x = lines.iter().any(is_x_axis);
        let has_y = lines.iter().any(is_y_axis);
        let (p, q) = (cur.p().clone(), cur.q().clone());
        match (has_x, has_y) {
            (true, true) => {
                if divides(&p, &q) {
                    mat = mat.mul(&lower);
                    cur = PlaneEndo::new_unchecked(p.clone(), exact_div(&q, &p)?);
                } else if divides(&q, &p) {
                    mat = mat.mul(&MatM::L);
                    cur = PlaneEndo::new_unchecked(exact_div(&p, &q)?, q);
                } else {
                    return Err(out(format!(
                        "residual {cur} misses both axes but neither component divides the other"
                    )));
                }
            }
            (true, false) => {
                mat = mat.mul(&MatM::SWAP);
                cur = PlaneEndo::new_unchecked(q, p);
            }
            (false, true) => break,
            (false, false) => {
                return Err(out(format!(
                    "residual {cur} has no missing line but is not an automorphism"
                )))
            }
        }
    }
    let mut m = 0u32;
    let mut p = UniPoly::zero();
    while !is_automorphism(&cur) {
        let q = cur.q().clone();
        let step = (!q.is_constant())
            .then(|| constant_mod(cur.p(), &q))
            .flatten()
            .and_then(|c| {
                exact_div(&(cur.p() - &BiPoly::constant(c.clone())), &q)
                    .ok()
                    .map(|p1| (c, p1))
            });
        let Some((c, p1)) = step else {
            return Err(out(format!(
                "residual {cur} does not factor through (xy + c, y)"
            )));
        };
        p = &p + &UniPoly::monomial(c, m as usize);
        m += 1;
        cur = PlaneEndo::new_unchecked(p1, q);
    }
    let theta = verify_automorphism(&cur)?;
    Ok(Admissible {
        shift,
        r,
        phi,
        mat,
        m,
        p,
        theta,
    })
}

fn checked(nf: NormalForm, f: &PlaneEndo) -> Result<NormalForm> {
    if nf.verify(f) {
        Ok(nf)
    } else {
        Err(Error::Precondition(format!(
            "internal: witnesses for {f} do not recompose to {}",
            nf.core()
        )))
    }
}

/// `f` itself when it is literally a `γ` or `v` letter.
fn literal_core(f: &PlaneEndo) -> Option<Generator> {
    let mono = |g: &BiPoly| {
        let mut t = g.terms();
        match (t.next(), t.next()) {
            (Some((m, c)), None) if c.is_one() => Some((m.x, m.y)),
            _ => None,
        }
    };
    if let (Some((i, j)), Some((k, l))) = (mono(f.p()), mono(f.q())) {
        if let Ok(m) = MatM::new(i, j, k, l) {
            return Some(Generator::Ggen(m));
        }
    }
    if *f.p() == BiPoly::x() && f.q().deg_y() == Some(1) {
        let rows = f.q().y_coeffs();
        if rows[0].is_zero() && !rows[1].is_constant() {
            return Some(Generator::Vgen(rows[1].clone()));
        }
    }
    None
}

fn identity_form(class: ClassTag, variant: Variant) -> NormalForm {
    NormalForm {
        class,
        variant,
        omega: GenWord::empty(),
        theta: GenWord::empty(),
        saa: SaaVerdict::Saa,
        sa_form: None,
    }
}

/// Why a `Sa` map is not `Saa`, from its contracting curves.
fn cont_verdict(cont: &Contraction, reason: String) -> Result<SaaVerdict> {
    let mut lines = Vec::new();
    for c in &cont.contracting {
        match Line::from_poly(&c.equation) {
            Some(l) => lines.push(l),
            None if coordinate_chart(&c.equation).is_some() => {
                return Ok(SaaVerdict::NotSaaConservative(format!(
                    "contracting curve {} is a nonlinear coordinate; {reason}",
                    c.equation
                )))
            }
            None => {
                return Ok(SaaVerdict::NotSaaProven(format!(
                    "contracting curve {} is not a coordinate line; {reason}",
                    c.equation
                )))
            }
        }
    }
    let cfg = LineConfig::new(lines);
    if is_admissible(&cfg)? {
        Ok(SaaVerdict::NotSaaConservative(format!(
            "contracting lines {cfg} are admissible but the reduction failed: {reason}"
        )))
    } else {
        Ok(SaaVerdict::NotSaaProven(format!(
            "contracting lines {cfg} are not admissible"
        )))
    }
}

fn upgrade(f: &PlaneEndo, cont: &Contraction, mut nf: NormalForm) -> Result<NormalForm> {
    let Variant::AlphaVGH {
        alpha: None,
        phi,
        mat,
        hm,
        hp,
    } = &nf.variant
    else {
        return Ok(nf);
    };
    match theorem_c_reduce(phi, mat, *hm, hp) {
        Reduced::Core { core, u, w } => {
            let saa = NormalForm {
                class: ClassTag::Saa,
                variant: Variant::VorG(core),
                omega: inv(&u).concat(&nf.omega),
                theta: nf.theta.concat(&inv(&w)),
                saa: SaaVerdict::Saa,
                sa_form: Some(Box::new(nf)),
            };
            checked(saa, f)
        }
        Reduced::NotSaa(reason) => {
            nf.saa = cont_verdict(cont, reason)?;
            Ok(nf)
        }
    }
}

fn classify_admissible(f: &PlaneEndo, cfg: &LineConfig) -> Result<NormalForm> {
    let mut diags = Vec::new();
    for rect in rectify_choices(cfg)? {
        let f1 = compose(&rect.affine.to_endo(), f);
        match admissible_decompose(&f1) {
            Ok(adm) => {
                let nf = NormalForm {
                    class: ClassTag::Sa,
                    omega: inv(&adm.outer()).concat(&GenWord::new(vec![rect.affine.clone()])),
                    theta: inv(&adm.theta),
                    variant: Variant::AlphaVGH {
                        alpha: None,
                        phi: adm.phi,
                        mat: adm.mat,
                        hm: adm.m,
                        hp: adm.p,
                    },
                    saa: SaaVerdict::NotApplicable,
                    sa_form: None,
                };
                return checked(nf, f);
            }
            Err(Error::OutOfClass(d)) => diags.push(d),
            Err(e) => return Err(e),
        }
    }
    Err(out(diags.join("; ")))
}

/// Peels `α` off the left of the rectified map and decomposes the rest.
fn classify_weak(f: &PlaneEndo, cfg: &LineConfig, alpha: Alpha) -> Result<NormalForm> {
    let mut diags = Vec::new();
    for rect in rectify_choices(cfg)? {
        let f1 = compose(&rect.affine.to_endo(), f);
        let Ok(p1) = exact_div(f1.p(), f1.q()) else {
            diags.push(format!("rectified map {f1}: second component does not divide the first"));
            continue;
        };
        let q1 = match alpha {
            Alpha::A2 => &BiPoly::one() - f1.q(),
            _ => f1.q().clone(),
        };
        let g = PlaneEndo::new_unchecked(p1, q1);
        let adm = match admissible_decompose(&g) {
            Ok(a) => a,
            Err(Error::OutOfClass(d)) => {
                diags.push(d);
                continue;
            }
            Err(e) => return Err(e),
        };
        let nu = Generator::Affine {
            m: [[Rat::one(), adm.shift.clone()], [Rat::zero(), Rat::one()]],
            t: [Rat::zero(), Rat::zero()],
        };
        let omega = inv(&GenWord::new(vec![nu])).concat(&GenWord::new(vec![rect.affine.clone()]));
        let mut theta_inner = adm.theta.clone();
        let variant = if adm.r.is_zero() {
            Variant::AlphaVGH {
                alpha: Some(alpha),
                phi: adm.phi,
                mat: adm.mat,
                hm: adm.m,
                hp: adm.p,
            }
        } else if adm.mat == MatM::IDENTITY && adm.m == 0 {
            let (t, rem) = adm.r.div_rem(&adm.phi);
            theta_inner = GenWord::new(vec![Generator::shear(t)]).concat(&theta_inner);
            if rem.is_zero() {
                Variant::AlphaVGH {
                    alpha: Some(alpha),
                    phi: adm.phi,
                    mat: adm.mat,
                    hm: 0,
                    hp: UniPoly::zero(),
                }
            } else if alpha == Alpha::A1 {
                Variant::SpecialFamily {
                    p: adm.phi,
                    q: rem,
                }
            } else {
                // α₂ ∘ δ_r ∘ v_φ = α₁ ∘ δ_{1−r} ∘ v_{−φ}
                let p = adm.phi.scale(&-Rat::one());
                let q = (&UniPoly::one() - &rem).rem(&p);
                Variant::SpecialFamily { p, q }
            }
        } else {
            diags.push(format!(
                "residual {g}: nontrivial shear {} before γ_{} ∘ h_{}",
                adm.r.fmt_var("x"),
                adm.mat,
                adm.m
            ));
            continue;
        };
        let nf = NormalForm {
            class: ClassTag::Sw,
            variant,
            omega,
            theta: inv(&theta_inner),
            saa: SaaVerdict::NotApplicable,
            sa_form: None,
        };
        return checked(nf, f);
    }
    Err(out(diags.join("; ")))
}

/// Normal form of `f` with verified witnesses `ω ∘ f ∘ θ = core`.
pub fn classify(f: &PlaneEndo) -> Result<NormalForm> {
    let cont = contracting_curves(f)?;
    if let Some((e, _)) = cont.non_contracted.first() {
        return Err(Error::Precondition(format!(
            "Jacobian factor {e} is not contracted; the map is not birational"
        )));
    }
    if let Ok(w) = verify_automorphism(f) {
        let nf = NormalForm {
            omega: inv(&w),
            ..identity_form(ClassTag::Saa, Variant::VorG(Generator::Vgen(UniPoly::one())))
        };
        return checked(nf, f);
    }
    let miss = missing_lines_with(f, &cont)?;
    if !miss.all_missing_are_lines {
        return Err(out(format!(
            "{} missing lines for {} contracting curves: some missing curve is not a line",
            miss.lines.len(),
            cont.contracting.len()
        )));
    }
    let cfg = LineConfig::new(miss.lines.clone());
    match classify_corollary(&cfg)?.corollary_type {
        CorollaryType::A | CorollaryType::B => {
            let nf = upgrade(f, &cont, classify_admissible(f, &cfg)?)?;
            match literal_core(f) {
                Some(g) if nf.class == ClassTag::Saa => checked(
                    NormalForm {
                        sa_form: nf.sa_form,
                        ..identity_form(ClassTag::Saa, Variant::VorG(g))
                    },
                    f,
                ),
                _ => Ok(nf),
            }
        }
        CorollaryType::C => classify_weak(f, &cfg, Alpha::A1),
        CorollaryType::D => classify_weak(f, &cfg, Alpha::A2),
        CorollaryType::None => Err(out(format!(
            "missing lines {cfg} match none of the four configuration shapes"
        ))),
    }
}

/// `u ∘ f ∘ v = g` for automorphism words `u`, `v`.
pub fn equivalence_witness_check(
    f: &PlaneEndo,
    g: &PlaneEndo,
    u: &GenWord,
    v: &GenWord,
) -> Result<bool> {
    for (name, w) in [("u", u), ("v", v)] {
        if verify_automorphism(&w.to_endo()).is_err() {
            return Err(Error::NotAutomorphism(format!("{name} = {w}")));
        }
    }
    Ok(compose(&u.to_endo(), &compose(f, &v.to_endo())) == *g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use bipoly::rat;

    fn endo(s: &str) -> PlaneEndo {
        PlaneEndo::parse(s).unwrap()
    }

    #[test]
    fn literal_gamma_is_saa() {
        let nf = classify(&endo("x*y^2 ; x*y^3")).unwrap();
        assert_eq!(nf.class, ClassTag::Saa);
        assert_eq!(
            nf.variant,
            Variant::VorG(Generator::Ggen(MatM::new(1, 2, 1, 3).unwrap()))
        );
        let nf = classify(&endo("x^2*y ; x*y")).unwrap();
        assert_eq!(
            nf.variant,
            Variant::VorG(Generator::Ggen(MatM::new(2, 1, 1, 1).unwrap()))
        );
    }

    #[test]
    fn type_c_is_sw() {
        let f = endo("x*(x-1)*(x-2)*y ; (x-1)*(x-2)*y");
        let nf = classify(&f).unwrap();
        assert_eq!(nf.class, ClassTag::Sw);
        assert!(matches!(
            nf.variant,
            Variant::AlphaVGH {
                alpha: Some(Alpha::A1),
                ..
            }
        ));
        assert!(nf.verify(&f));
    }

    #[test]
    fn hyperbola_example_is_sa() {
        let f = endo("x^2*y + x ; x*y + 1");
        let nf = classify(&f).unwrap();
        assert_eq!(nf.class, ClassTag::Sa);
        assert!(matches!(nf.saa, SaaVerdict::NotSaaProven(_)));
        assert!(nf.verify(&f));
    }

    #[test]
    fn special_family() {
        // α₁ ∘ δ₁ ∘ v_{x(x−1)}
        let f = GenWord::new(vec![
            Generator::SacStd(Alpha::A1),
            Generator::shear(UniPoly::one()),
            Generator::Vgen(UniPoly::from_ints(&[0, -1, 1])),
        ])
        .to_endo();
        let nf = classify(&f).unwrap();
        assert_eq!(nf.class, ClassTag::Sw);
        assert!(matches!(nf.variant, Variant::SpecialFamily { .. }), "{}", nf.variant);
        assert!(nf.verify(&f));
    }

    #[test]
    fn second_claim_instance_is_saa() {
        // v_{(x−2)²} ∘ h_{1,2}, conjugated
        let w = GenWord::new(vec![
            Generator::translation(rat(1), rat(-3)),
            Generator::Vgen(UniPoly::from_ints(&[4, -4, 1])),
            Generator::Hgen {
                m: 1,
                p: UniPoly::constant(rat(2)),
            },
            Generator::shear(UniPoly::from_ints(&[0, 0, 1])),
        ]);
        let f = w.to_endo();
        let nf = classify(&f).unwrap();
        assert_eq!(nf.class, ClassTag::Saa);
        assert_eq!(
            nf.variant,
            Variant::VorG(Generator::Ggen(MatM::new(1, 1, 2, 3).unwrap()))
        );
        assert!(nf.sa_form.as_ref().unwrap().verify(&f));
    }

    #[test]
    fn nonlinear_missing_is_out_of_class() {
        let f = GenWord::new(vec![
            Generator::swap(),
            Generator::shear(UniPoly::from_ints(&[0, 0, 1])),
            Generator::swap(),
            Generator::Vgen(UniPoly::from_ints(&[0, -1, 1])),
        ])
        .to_endo();
        assert!(matches!(classify(&f), Err(Error::OutOfClass(_))));
        assert!(matches!(classify(&endo("x^2 ; y")), Err(Error::Precondition(_))));
    }

    #[test]
    fn witness_check() {
        let f = endo("x ; x*y");
        let g = endo("x*y ; y");
        let s = GenWord::new(vec![Generator::swap()]);
        assert!(equivalence_witness_check(&f, &g, &s, &s).unwrap());
        let e = GenWord::empty();
        assert!(equivalence_witness_check(&f, &f, &e, &e).unwrap());
        assert!(!equivalence_witness_check(&f, &endo("x ; x*y + 1"), &e, &e).unwrap());
        let bad = GenWord::new(vec![Generator::SacStd(Alpha::A0)]);
        assert!(matches!(
            equivalence_witness_check(&f, &f, &bad, &e),
            Err(Error::NotAutomorphism(_))
        ));
    }
}
