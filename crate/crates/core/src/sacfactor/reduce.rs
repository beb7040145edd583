use bipoly::{Rat, UniPoly};
use num_traits::{One, Zero};

use crate::genword::{GenWord, Generator, MatM};

/// Outcome of rewriting `v_φ ∘ γ_M ∘ h_{m,p}` into `u ∘ core ∘ w`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Reduced {
    /// `core` is a single `v` or `γ` letter; `u`, `w` are automorphisms.
    Core {
        core: Generator,
        u: GenWord,
        w: GenWord,
    },
    NotSaa(String),
}

fn x_pow(k: u32) -> UniPoly {
    UniPoly::monomial(Rat::one(), k as usize)
}

fn core(core: Generator, u: Vec<Generator>, w: Vec<Generator>) -> Reduced {
    Reduced::Core {
        core,
        u: GenWord::new(u),
        w: GenWord::new(w),
    }
}

fn upper(m: u32) -> MatM {
    MatM { i: 1, j: m, k: 0, l: 1 }
}

/// `a` with `φ = a·x^n`.
fn monomial_coeff(phi: &UniPoly) -> Option<(Rat, u32)> {
    let n = phi.degree()?;
    (0..n)
        .all(|i| phi.coeff(i).is_zero())
        .then(|| (phi.lc(), n as u32))
}

/// `(a, c, n)` with `φ = a·(x − c)^n`.
fn single_root(phi: &UniPoly) -> Option<(Rat, Rat, u32)> {
    let n = phi.degree()?;
    if n == 0 {
        return None;
    }
    let a = phi.lc();
    let c = -phi.coeff(n - 1) / (&a * Rat::from_integer((n as i64).into()));
    let cand = UniPoly::linear_root(&c).pow(n as u32).scale(&a);
    (cand == *phi).then_some((a, c, n as u32))
}

fn as_constant(p: &UniPoly) -> Option<Rat> {
    p.is_constant().then(|| p.coeff(0))
}

/// Rewrites `γ_N ∘ h_{m,p}`.
fn first_claim(n: MatM, m: u32, p: &UniPoly) -> Reduced {
    if m == 0 || p.is_zero() {
        return core(Generator::Ggen(n.mul(&upper(m))), vec![], vec![]);
    }
    if n.i == 0 {
        let l = n.l;
        return core(
            Generator::Ggen(MatM { i: 0, j: 1, k: 1, l: m + l }),
            vec![Generator::shear(&x_pow(l) * p)],
            vec![],
        );
    }
    if n.k == 0 {
        let j = n.j;
        return core(
            Generator::Ggen(upper(m + j)),
            vec![
                Generator::swap(),
                Generator::shear(&x_pow(j) * p),
                Generator::swap(),
            ],
            vec![],
        );
    }
    Reduced::NotSaa(format!(
        "γ_{n} ∘ h with p = {} ≠ 0 has a contracting curve with two places at infinity",
        p.fmt_var("y")
    ))
}

/// Rewrites `v_φ ∘ h_{m,p}`.
fn second_claim(phi: &UniPoly, m: u32, p: &UniPoly) -> Reduced {
    if m == 0 {
        return core(Generator::Vgen(phi.clone()), vec![], vec![]);
    }
    if let Some(a) = as_constant(phi) {
        return core(
            Generator::Ggen(upper(m)),
            vec![
                Generator::Triangular { c: a, r: UniPoly::zero() },
                Generator::swap(),
                Generator::shear(p.clone()),
                Generator::swap(),
            ],
            vec![],
        );
    }
    if let Some((a, c, n)) = single_root(phi) {
        if p.degree().unwrap_or(0) == 0 && p.coeff(0) == c {
            let affine = Generator::Affine {
                m: [[Rat::one(), Rat::zero()], [Rat::zero(), a]],
                t: [c, Rat::zero()],
            };
            return core(
                Generator::Ggen(MatM { i: 1, j: m, k: n, l: m * n + 1 }),
                vec![affine],
                vec![],
            );
        }
        return Reduced::NotSaa(format!(
            "v_φ ∘ h with φ = {} and p = {} ≢ {}: a contracting curve has several places at infinity",
            phi.fmt_var("x"),
            p.fmt_var("y"),
            bipoly::format_rat(&c)
        ));
    }
    Reduced::NotSaa(format!(
        "φ = {} has more than one root: a contracting curve has several places at infinity",
        phi.fmt_var("x")
    ))
}

/// Rewrites `v_φ ∘ γ_M ∘ h_{m,p}` as `u ∘ core ∘ w` with `core` in `𝓥 ∪ 𝓖`.
pub fn theorem_c_reduce(phi: &UniPoly, mat: &MatM, m: u32, p: &UniPoly) -> Reduced {
    if let Some((a, n)) = monomial_coeff(phi) {
        let inner = first_claim(MatM { i: 1, j: 0, k: n, l: 1 }.mul(mat), m, p);
        return match inner {
            Reduced::Core { core, u, w } => {
                let mut letters = vec![Generator::Triangular { c: a, r: UniPoly::zero() }];
                letters.extend(u.letters);
                Reduced::Core {
                    core,
                    u: GenWord::new(letters),
                    w,
                }
            }
            other => other,
        };
    }
    match (mat.i, mat.j, mat.k, mat.l) {
        (1, 0, k, 1) => second_claim(&(&x_pow(k) * phi), m, p),
        (0, 1, 1, l) => {
            let phi1 = &x_pow(l) * phi;
            let psi = &x_pow(m) * &phi1;
            core(
                Generator::Vgen(psi),
                vec![Generator::shear(&phi1 * p)],
                vec![Generator::swap()],
            )
        }
        _ => Reduced::NotSaa(format!(
            "v_φ with φ = {} not a monomial and γ_{mat} mixing both coordinates",
            phi.fmt_var("x")
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genword::Generator as G;
    use bipoly::rat;

    fn check(phi: &UniPoly, mat: MatM, m: u32, p: &UniPoly) -> Reduced {
        let r = theorem_c_reduce(phi, &mat, m, p);
        if let Reduced::Core { core, u, w } = &r {
            let lhs = GenWord::new(vec![
                G::Vgen(phi.clone()),
                G::Ggen(mat),
                G::Hgen { m, p: p.clone() },
            ]);
            let rhs = u.concat(&GenWord::new(vec![core.clone()])).concat(w);
            assert!(u.is_automorphism() && w.is_automorphism());
            assert_eq!(lhs.to_endo(), rhs.to_endo());
        }
        r
    }

    fn core_of(r: &Reduced) -> &Generator {
        match r {
            Reduced::Core { core, .. } => core,
            Reduced::NotSaa(s) => panic!("{s}"),
        }
    }

    #[test]
    fn first_claim_upper() {
        let r = check(&UniPoly::one(), MatM::L, 2, &UniPoly::zero());
        assert_eq!(*core_of(&r), G::Ggen(MatM::new(1, 3, 0, 1).unwrap()));
    }

    #[test]
    fn second_claim_family() {
        for (c, n, m) in [(0, 1, 1), (2, 2, 1), (-1, 1, 3), (3, 3, 2)] {
            let phi = UniPoly::linear_root(&rat(c)).pow(n);
            let p = UniPoly::constant(rat(c));
            let r = check(&phi, MatM::IDENTITY, m, &p);
            assert_eq!(
                *core_of(&r),
                G::Ggen(MatM::new(1, m, n, m * n + 1).unwrap())
            );
        }
    }

    #[test]
    fn two_roots_not_saa() {
        let phi = UniPoly::from_ints(&[0, -1, 1]);
        let r = check(&phi, MatM::IDENTITY, 1, &UniPoly::zero());
        assert!(matches!(r, Reduced::NotSaa(_)));
    }

    #[test]
    fn absorbs_p_in_triangular_cases() {
        let p = UniPoly::from_ints(&[1, 2]);
        check(&UniPoly::one(), MatM::new(0, 1, 1, 2).unwrap(), 3, &p);
        check(&UniPoly::from_ints(&[0, 0, 3]), MatM::new(1, 2, 0, 1).unwrap(), 3, &p);
        check(&UniPoly::from_ints(&[1, 1]), MatM::new(0, 1, 1, 1).unwrap(), 2, &p);
        check(&UniPoly::from_ints(&[5]), MatM::IDENTITY, 2, &p);
        let r = check(&UniPoly::one(), MatM::new(1, 1, 1, 2).unwrap(), 2, &p);
        assert!(matches!(r, Reduced::NotSaa(_)));
    }
}
