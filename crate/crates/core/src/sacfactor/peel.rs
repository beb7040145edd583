use bipoly::{div_rem, exact_div, BiPoly};

use crate::endo::{
    compose, contracting_curves, coordinate_chart, fmt_point, missing_lines_with,
    verify_automorphism, Contraction, Line, MissingLines, PlaneEndo, Point,
};
use crate::genword::{sac_at_charts, Alpha, GenWord, Generator};
use crate::{Error, Result};

/// `f = sac ∘ residual` with `sac` the SAC at `(line, point)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PeelStep {
    pub line: Line,
    pub point: Point,
    pub sac: Generator,
    pub residual: PlaneEndo,
}

/// `f = residual ∘ α₀ ∘ Φ⁻¹` where `Φ` straightens the contracting curve.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RightPeel {
    pub curve: BiPoly,
    /// `α₀` followed by the letters of `Φ⁻¹`.
    pub piece: GenWord,
    pub residual: PlaneEndo,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PeelOutcome {
    Peeled(PeelStep),
    /// One diagnostic per failed candidate.
    NoPeel(Vec<String>),
}

pub fn left_peel(f: &PlaneEndo) -> Result<PeelOutcome> {
    let cont = contracting_curves(f)?;
    let miss = missing_lines_with(f, &cont)?;
    if !miss.all_missing_are_lines {
        return Err(Error::OutOfClass(format!(
            "{} missing lines for {} contracting curves",
            miss.lines.len(),
            cont.contracting.len()
        )));
    }
    Ok(left_peel_with(f, &cont, &miss))
}

pub(crate) fn left_peel_with(f: &PlaneEndo, cont: &Contraction, miss: &MissingLines) -> PeelOutcome {
    let points = cont.fundamental_points();
    let mut diags = Vec::new();
    // lines ordered as `aX + bY = d`
    let mut lines: Vec<&Line> = miss.lines.iter().collect();
    lines.sort_by_key(|l| (l.a.clone(), l.b.clone(), -l.c.clone()));
    for line in lines {
        for p0 in points.iter().filter(|p| line.contains(p)) {
            let (a, ainv) = sac_at_charts(line, p0);
            let g = compose(&a.to_endo(), f);
            match exact_div(g.q(), g.p()) {
                Ok(q1) => {
                    let residual = compose(
                        &ainv.to_endo(),
                        &PlaneEndo::new_unchecked(g.p().clone(), q1),
                    );
                    return PeelOutcome::Peeled(PeelStep {
                        line: line.clone(),
                        point: p0.clone(),
                        sac: Generator::SacAt {
                            line: line.clone(),
                            point: p0.clone(),
                        },
                        residual,
                    });
                }
                Err(_) => {
                    let (_, r) = div_rem(g.q(), g.p()).expect("nonzero divisor");
                    let lead = r
                        .leading_term()
                        .map(|(m, c)| BiPoly::monomial(c.clone(), m.x, m.y).to_string())
                        .unwrap_or_else(|| "0".into());
                    diags.push(format!(
                        "line {line} at {}: remainder leading term {lead}",
                        fmt_point(p0)
                    ));
                }
            }
        }
    }
    PeelOutcome::NoPeel(diags)
}

/// Peels a SAC off the right, through a contracting curve that is a
/// coordinate.
pub(crate) fn right_peel_with(f: &PlaneEndo, cont: &Contraction) -> std::result::Result<RightPeel, Vec<String>> {
    let mut curves: Vec<&BiPoly> = cont.contracting.iter().map(|c| &c.equation).collect();
    curves.sort_by_key(|e| (e.total_degree(), (*e).clone()));
    let mut diags = Vec::new();
    for e in curves {
        let Some((phi, phi_inv)) = coordinate_chart(e) else {
            diags.push(format!("contracting curve {e} is not recognized as a coordinate"));
            continue;
        };
        let g = compose(f, &phi.to_endo());
        let (Some(p1), Some(q1)) = (unblow(g.p()), unblow(g.q())) else {
            diags.push(format!("{e}: map does not factor through (x, xy) in its chart"));
            continue;
        };
        let residual = PlaneEndo::new_unchecked(p1, q1);
        let mut piece = GenWord::new(vec![Generator::SacStd(Alpha::A0)]);
        piece = piece.concat(&phi_inv);
        return Ok(RightPeel {
            curve: e.clone(),
            piece,
            residual,
        });
    }
    Err(diags)
}

/// `F'` with `F'(x, xy) = F`, when every monomial `x^a y^b` has `a ≥ b`.
fn unblow(f: &BiPoly) -> Option<BiPoly> {
    if f.terms().any(|(m, _)| m.x < m.y) {
        return None;
    }
    Some(BiPoly::from_terms(
        f.terms().map(|(m, c)| ((m.x - m.y, m.y), c.clone())),
    ))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    /// SACs and automorphism letters composing exactly to the input.
    pub word: GenWord,
    pub n: usize,
    pub left: Vec<PeelStep>,
    pub right: Vec<RightPeel>,
    /// The automorphism left after peeling.
    pub middle: GenWord,
}

/// Factors `f` into SACs and automorphisms.
///
/// Missing lines are peeled from the left while every missing curve is a
/// line; otherwise a SAC is split off the right through a contracting
/// coordinate curve.
pub fn sac_factorize(f: &PlaneEndo) -> Result<Factorization> {
    let mut cur = f.clone();
    let mut left: Vec<PeelStep> = Vec::new();
    let mut right: Vec<RightPeel> = Vec::new();
    let middle = loop {
        if let Ok(w) = verify_automorphism(&cur) {
            break w;
        }
        let cont = contracting_curves(&cur)?;
        if let Some((e, _)) = cont.non_contracted.first() {
            return Err(Error::Precondition(format!(
                "Jacobian factor {e} of {cur} is not contracted; the map is not birational"
            )));
        }
        let mut diagnostics = Vec::new();
        if cont.contracting.is_empty() {
            diagnostics.push("constant Jacobian but no automorphism decomposition".into());
        } else {
            let miss = missing_lines_with(&cur, &cont)?;
            if miss.all_missing_are_lines {
                match left_peel_with(&cur, &cont, &miss) {
                    PeelOutcome::Peeled(step) => {
                        cur = step.residual.clone();
                        left.push(step);
                        continue;
                    }
                    PeelOutcome::NoPeel(d) => diagnostics.extend(d),
                }
            } else {
                diagnostics.push(format!(
                    "{} missing lines for {} contracting curves",
                    miss.lines.len(),
                    cont.contracting.len()
                ));
            }
            match right_peel_with(&cur, &cont) {
                Ok(rp) => {
                    cur = rp.residual.clone();
                    right.push(rp);
                    continue;
                }
                Err(d) => diagnostics.extend(d),
            }
        }
        return Err(Error::Stuck {
            residual: cur.to_string(),
            diagnostics,
        });
    };
    let mut letters: Vec<Generator> = left.iter().map(|s| s.sac.clone()).collect();
    letters.extend(middle.letters.iter().cloned());
    for rp in right.iter().rev() {
        letters.extend(rp.piece.letters.iter().cloned());
    }
    let word = GenWord::new(letters);
    if word.to_endo() != *f {
        return Err(Error::Precondition(format!(
            "internal: factorization of {f} does not recompose"
        )));
    }
    Ok(Factorization {
        n: left.len() + right.len(),
        word,
        left,
        right,
        middle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genword::{word_n, MatM};
    use bipoly::rat;

    fn endo(s: &str) -> PlaneEndo {
        PlaneEndo::parse(s).unwrap()
    }

    #[test]
    fn peel_two_verticals() {
        let PeelOutcome::Peeled(s) = left_peel(&endo("x ; x*(x-1)*y")).unwrap() else {
            panic!()
        };
        assert_eq!(s.line, Line::parse("x").unwrap());
        assert_eq!(s.point, (rat(0), rat(0)));
        assert_eq!(s.residual, endo("x ; (x-1)*y"));
        assert_eq!(compose(&s.sac.to_endo(), &s.residual), endo("x ; x*(x-1)*y"));
        let PeelOutcome::Peeled(t) = left_peel(&s.residual).unwrap() else {
            panic!()
        };
        assert_eq!(t.line, Line::parse("x - 1").unwrap());
        assert!(verify_automorphism(&t.residual).is_ok());
    }

    #[test]
    fn peel_concurrent_only_at_y() {
        let f = endo("x*(x-1)*(x-2)*y ; (x-1)*(x-2)*y");
        let PeelOutcome::Peeled(s) = left_peel(&f).unwrap() else {
            panic!()
        };
        assert_eq!(s.line, Line::parse("y").unwrap());
        assert_eq!(s.point, (rat(0), rat(0)));
        assert_eq!(sac_factorize(&f).unwrap().n, 3);
    }

    #[test]
    fn factorize_gamma_h_word() {
        let f = endo("x*y^2 ; x*y^3");
        let fz = sac_factorize(&f).unwrap();
        assert_eq!(fz.n, 3);
        let w = GenWord::new(vec![
            Generator::Vgen(bipoly::UniPoly::from_ints(&[0, 1])),
            Generator::Ggen(MatM::L),
            Generator::Hgen {
                m: 1,
                p: bipoly::UniPoly::zero(),
            },
        ]);
        assert_eq!(word_n(&w), 3);
        assert_eq!(fz.word.to_endo(), f);
    }

    #[test]
    fn factorize_automorphism() {
        let f = endo("x + y^2 ; y");
        let fz = sac_factorize(&f).unwrap();
        assert_eq!(fz.n, 0);
        assert_eq!(fz.word.to_endo(), f);
    }

    #[test]
    fn factorize_with_nonlinear_missing_curve() {
        let f = endo("x + x^2*y^2 ; x*y");
        let fz = sac_factorize(&f).unwrap();
        assert_eq!(fz.n, 1);
        assert_eq!(fz.word.to_endo(), f);
    }

    #[test]
    fn stuck_on_non_birational() {
        assert!(matches!(
            sac_factorize(&endo("x^2 ; y")),
            Err(Error::Precondition(_))
        ));
    }
}
