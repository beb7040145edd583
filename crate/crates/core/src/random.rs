//! Seeded generators for test corpora.

use bipoly::{Rat, UniPoly};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::endo::{compose, PlaneEndo};
use crate::genword::{Alpha, GenWord, Generator, MatM};

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small(rng: &mut CorpusRng, lim: i64) -> Rat {
    Rat::from_integer(rng.gen_range(-lim..=lim).into())
}

fn nonzero(rng: &mut CorpusRng, lim: i64) -> Rat {
    loop {
        let r = small(rng, lim);
        if !r.is_zero() {
            return r;
        }
    }
}

fn uni(rng: &mut CorpusRng, deg: usize, lim: i64) -> UniPoly {
    UniPoly::new((0..=deg).map(|_| small(rng, lim)).collect())
}

/// Matrices of the monoid with entries at most `max`.
pub fn monoid_matrices(max: u32) -> Vec<MatM> {
    let mut out = Vec::new();
    for i in 0..=max {
        for j in 0..=max {
            for k in 0..=max {
                for l in 0..=max {
                    if let Ok(m) = MatM::new(i, j, k, l) {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// One affine or triangular letter, or a triangular letter in `y`.
pub fn automorphism(rng: &mut CorpusRng) -> Vec<Generator> {
    match rng.gen_range(0..3) {
        0 => loop {
            let m = [
                [small(rng, 2), small(rng, 2)],
                [small(rng, 2), small(rng, 2)],
            ];
            if (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]).is_zero() {
                continue;
            }
            return vec![Generator::Affine {
                m,
                t: [small(rng, 2), small(rng, 2)],
            }];
        },
        1 => {
            let d = rng.gen_range(1..=2);
            vec![Generator::Triangular {
                c: nonzero(rng, 2),
                r: uni(rng, d, 2),
            }]
        }
        _ => {
            let d = rng.gen_range(1..=2);
            vec![
                Generator::swap(),
                Generator::shear(uni(rng, d, 2)),
                Generator::swap(),
            ]
        }
    }
}

pub fn hgen(rng: &mut CorpusRng) -> Generator {
    let m = rng.gen_range(1..=3u32);
    let d = rng.gen_range(0..m as usize);
    Generator::Hgen {
        m,
        p: uni(rng, d, 2),
    }
}

pub fn ggen(rng: &mut CorpusRng, max: u32) -> Generator {
    let all: Vec<MatM> = monoid_matrices(max)
        .into_iter()
        .filter(|m| *m != MatM::IDENTITY && *m != MatM::SWAP)
        .collect();
    Generator::Ggen(*all.choose(rng).expect("nonempty"))
}

/// `v_φ` with distinct or repeated integer roots.
pub fn vgen(rng: &mut CorpusRng, max_deg: usize) -> Generator {
    let d = rng.gen_range(1..=max_deg);
    let mut phi = UniPoly::constant(nonzero(rng, 2));
    for _ in 0..d {
        phi = &phi * &UniPoly::linear_root(&small(rng, 2));
    }
    Generator::Vgen(phi)
}

pub fn sac_letter(rng: &mut CorpusRng) -> Generator {
    match rng.gen_range(0..4) {
        0 => hgen(rng),
        1 => ggen(rng, 5),
        2 => vgen(rng, 3),
        _ => Generator::SacStd(
            *[Alpha::A0, Alpha::A1, Alpha::A2]
                .choose(rng)
                .expect("nonempty"),
        ),
    }
}

/// A word of at most `max_len` letters mixing automorphisms and SAC letters.
pub fn word(rng: &mut CorpusRng, max_len: usize) -> GenWord {
    let len = rng.gen_range(1..=max_len);
    let mut letters = Vec::new();
    while letters.len() < len {
        if rng.gen_bool(0.4) {
            letters.extend(automorphism(rng));
        } else {
            letters.push(sac_letter(rng));
        }
    }
    letters.truncate(len);
    GenWord::new(letters)
}

/// Words without automorphism letters.
pub fn sac_word(rng: &mut CorpusRng, max_len: usize) -> GenWord {
    let len = rng.gen_range(1..=max_len);
    GenWord::new((0..len).map(|_| sac_letter(rng)).collect())
}

/// Draws from `gen` until the composed map and every left partial product
/// have degree at most `cap`.
pub fn capped(
    rng: &mut CorpusRng,
    cap: u32,
    mut gen: impl FnMut(&mut CorpusRng) -> GenWord,
) -> GenWord {
    loop {
        let w = gen(rng);
        if within_cap(&w, cap) {
            return w;
        }
    }
}

/// Composes left to right, giving up once a partial product exceeds `cap`.
fn within_cap(w: &GenWord, cap: u32) -> bool {
    let mut acc = PlaneEndo::identity();
    for g in &w.letters {
        let e = g.to_endo();
        if acc.degree() * e.degree() > cap.saturating_mul(4) {
            return false;
        }
        acc = compose(&acc, &e);
        if acc.degree() > cap {
            return false;
        }
    }
    true
}

/// `count` words of length at most `max_len` and degree at most `cap`.
pub fn corpus(seed: u64, count: usize, max_len: usize, cap: u32) -> Vec<GenWord> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| capped(&mut r, cap, |r| word(r, max_len)))
        .collect()
}

/// `v_φ ∘ γ_M ∘ h_{m,p}`.
pub fn vgh(rng: &mut CorpusRng) -> GenWord {
    let Generator::Vgen(phi) = vgen(rng, 3) else {
        unreachable!()
    };
    let m = *monoid_matrices(3).choose(rng).expect("nonempty");
    GenWord::new(vec![Generator::Vgen(phi), Generator::Ggen(m), hgen(rng)])
}
