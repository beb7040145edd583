use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use planebir::endo::{compose, report};
use planebir::random::{self, capped};
use planebir::{
    classify, contracting_curves, fundamental_points, generate_example, matm_factor,
    missing_lines, sac_factorize, word_cent, word_missing_set, word_n, Alpha, BiPoly, ClassTag,
    CorollaryType, Error, GenWord, Generator, MatLetter, MatM, PlaneEndo, Rat, UniPoly, Variant,
};
use rand::Rng;

type Check = Result<(), String>;

fn run(results: &mut Vec<bool>, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Check) {
    let t = Instant::now();
    let mut r = f();
    let el = t.elapsed();
    if let (Ok(()), Some(lim)) = (&r, limit) {
        if el > lim {
            r = Err(format!("took {el:?}, limit {lim:?}"));
        }
    }
    match &r {
        Ok(()) => println!("PASS {name} ({:.1}s)", el.as_secs_f64()),
        Err(e) => println!("FAIL {name} ({:.1}s): {e}", el.as_secs_f64()),
    }
    results.push(r.is_ok());
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const CAP: u32 = 24;

fn corpus() -> Vec<GenWord> {
    random::corpus(2024, 200, 8, CAP)
}

fn round_trip() -> Check {
    for w in corpus() {
        let f = w.to_endo();
        let fz = sac_factorize(&f).map_err(|e| format!("{w}: {e}"))?;
        ensure(fz.word.to_endo() == f, || format!("{w}: recomposition differs"))?;
        ensure(fz.n == word_n(&w), || {
            format!("{w}: n = {} but word_n = {}", fz.n, word_n(&w))
        })?;
    }
    Ok(())
}

fn invariants() -> Check {
    let words = corpus();
    for w in &words {
        let f = w.to_endo();
        let rep = report(&f).map_err(|e| format!("{w}: {e}"))?;
        let q = word_missing_set(w).map_err(|e| format!("{w}: {e}"))?.len();
        ensure(q == rep.c(), || format!("{w}: q = {q}, c = {}", rep.c()))?;
        let d = f.degree() as usize;
        ensure(d == 0 || rep.c() + 2 <= 2 * d, || {
            format!("{w}: c = {} exceeds 2·{d} − 2", rep.c())
        })?;
        let comp = word_missing_set(w).map_err(|e| e.to_string())?;
        if rep.missing.all_missing_are_lines && comp.iter().all(|c| c.total_degree() == Some(1)) {
            let raw: BTreeSet<BiPoly> = rep
                .missing
                .lines
                .iter()
                .map(|l| l.to_poly().normalized())
                .collect();
            ensure(raw == comp, || format!("{w}: raw {raw:?} vs compositional {comp:?}"))?;
        }
        let cent = word_cent(w).map_err(|e| e.to_string())?;
        let raw = fundamental_points(&f).map_err(|e| e.to_string())?;
        ensure(cent == raw, || format!("{w}: cent mismatch"))?;
    }
    let mut rng = random::rng(77);
    let mut tested = 0;
    while tested < 100 {
        let g = &words[rng.gen_range(0..words.len())];
        let f = &words[rng.gen_range(0..words.len())];
        let (ge, fe) = (g.to_endo(), f.to_endo());
        if ge.degree() * fe.degree() > 4 * CAP {
            continue;
        }
        let gf = compose(&ge, &fe);
        if gf.degree() > CAP {
            continue;
        }
        tested += 1;
        let lhs = fundamental_points(&gf).map_err(|e| e.to_string())?;
        let mut rhs = fundamental_points(&ge).map_err(|e| e.to_string())?;
        for p in fundamental_points(&fe).map_err(|e| e.to_string())? {
            rhs.insert(ge.apply(&p));
        }
        ensure(lhs == rhs, || format!("cent({g} ∘ {f}) = {lhs:?}, expected {rhs:?}"))?;
    }
    Ok(())
}

fn theorem() -> Check {
    // (a) type c
    let phi = UniPoly::from_ints(&[2, -3, 1]);
    let f = GenWord::new(vec![Generator::SacStd(Alpha::A1), Generator::Vgen(phi)]).to_endo();
    let nf = classify(&f).map_err(|e| e.to_string())?;
    ensure(nf.class == ClassTag::Sw && nf.verify(&f), || format!("type c: {nf:?}"))?;
    ensure(
        matches!(nf.variant, Variant::AlphaVGH { alpha: Some(Alpha::A1), .. }),
        || format!("type c core {}", nf.variant),
    )?;
    // (b) v ∘ γ ∘ h
    let mut rng = random::rng(31);
    for _ in 0..50 {
        let w = capped(&mut rng, CAP, random::vgh);
        let f = w.to_endo();
        let nf = classify(&f).map_err(|e| format!("{w}: {e}"))?;
        let sa = match nf.class {
            ClassTag::Sa => &nf,
            ClassTag::Saa => nf.sa_form.as_deref().ok_or(format!("{w}: no v∘γ∘h form"))?,
            c => return Err(format!("{w}: class {c}")),
        };
        ensure(nf.verify(&f) && sa.verify(&f), || format!("{w}: witnesses"))?;
        ensure(
            matches!(sa.variant, Variant::AlphaVGH { alpha: None, .. }),
            || format!("{w}: core {}", sa.variant),
        )?;
    }
    // (c) FirstClaim / SecondClaim instances
    let mut count = 0;
    for c in [-1i64, 0, 2] {
        for n in 1..=2u32 {
            for m in 1..=2u32 {
                let phi = UniPoly::linear_root(&Rat::from_integer(c.into())).pow(n);
                let h = Generator::Hgen {
                    m,
                    p: UniPoly::constant(Rat::from_integer(c.into())),
                };
                let w = GenWord::new(vec![Generator::Vgen(phi), h]);
                let f = w.to_endo();
                let nf = classify(&f).map_err(|e| format!("{w}: {e}"))?;
                let want = Generator::Ggen(MatM::new(1, m, n, m * n + 1).unwrap());
                ensure(
                    nf.class == ClassTag::Saa && nf.variant == Variant::VorG(want.clone()),
                    || format!("{w}: got {} {}, want {want}", nf.class, nf.variant),
                )?;
                ensure(nf.verify(&f), || format!("{w}: witnesses"))?;
                count += 1;
            }
        }
    }
    for (mat, m) in [((1, 1, 0, 1), 2), ((2, 1, 1, 1), 1), ((0, 1, 1, 2), 3), ((1, 0, 1, 1), 1),
        ((1, 2, 1, 3), 2), ((3, 1, 2, 1), 1), ((1, 3, 0, 1), 1), ((2, 3, 1, 2), 2)]
    {
        let mm = MatM::new(mat.0, mat.1, mat.2, mat.3).unwrap();
        let w = GenWord::new(vec![
            Generator::Ggen(mm),
            Generator::Hgen { m, p: UniPoly::zero() },
        ]);
        let f = w.to_endo();
        let nf = classify(&f).map_err(|e| format!("{w}: {e}"))?;
        ensure(
            nf.class == ClassTag::Saa && matches!(nf.variant, Variant::VorG(_)) && nf.verify(&f),
            || format!("{w}: got {} {}", nf.class, nf.variant),
        )?;
        count += 1;
    }
    ensure(count == 20, || format!("{count} instances"))
}

fn configurations() -> Check {
    let pool: Vec<Rat> = [(0, 1), (1, 1), (-2, 1), (3, 2)]
        .iter()
        .map(|&(a, b)| Rat::new(a.into(), b.into()))
        .collect();
    for t in [CorollaryType::A, CorollaryType::B, CorollaryType::C, CorollaryType::D] {
        let sizes: Vec<usize> = match t {
            CorollaryType::A | CorollaryType::B => vec![1, 2, 3, 4],
            _ => vec![3, 4],
        };
        for s in sizes {
            let k = match t {
                CorollaryType::A | CorollaryType::B => s,
                _ => s - 1,
            };
            let params = &pool[..k];
            let w = generate_example(t, params).map_err(|e| format!("{t} {s}: {e}"))?;
            let want: BTreeSet<BiPoly> = planebir::config::canonical_lines(t, params)
                .lines()
                .iter()
                .map(|l| l.to_poly().normalized())
                .collect();
            let comp = word_missing_set(&w).map_err(|e| e.to_string())?;
            ensure(comp == want, || format!("{t} {s}: compositional {comp:?}"))?;
            let raw = missing_lines(&w.to_endo()).map_err(|e| e.to_string())?;
            let raw: BTreeSet<BiPoly> = raw.lines.iter().map(|l| l.to_poly().normalized()).collect();
            ensure(raw == want, || format!("{t} {s}: raw {raw:?}"))?;
        }
    }
    Ok(())
}

fn sandwich(rng: &mut random::CorpusRng) -> GenWord {
    let n = rng.gen_range(1..=2);
    GenWord::new((0..n).flat_map(|_| random::automorphism(rng)).collect())
}

fn factorial_closedness() -> Check {
    let mut rng = random::rng(5);
    for _ in 0..100 {
        let w = capped(&mut rng, CAP, |r| {
            let (u, v) = (sandwich(r), sandwich(r));
            let w = random::sac_word(r, 6);
            u.concat(&w).concat(&v)
        });
        let f = w.to_endo();
        let fz = sac_factorize(&f).map_err(|e| format!("{w}: {e}"))?;
        ensure(fz.word.to_endo() == f, || format!("{w}: recomposition"))?;
    }
    for _ in 0..100 {
        let w = capped(&mut rng, CAP, |r| random::sac_word(r, 8));
        let k = rng.gen_range(0..=w.len());
        let (w1, w2) = w.letters.split_at(k);
        for half in [w1, w2] {
            let h = GenWord::new(half.to_vec());
            let f = h.to_endo();
            sac_factorize(&f).map_err(|e| format!("{h} (split of {w}): {e}"))?;
        }
    }
    Ok(())
}

fn negative_controls() -> Check {
    let sq = PlaneEndo::parse("x^2 ; y").unwrap();
    let cont = contracting_curves(&sq).map_err(|e| e.to_string())?;
    ensure(!cont.non_contracted.is_empty(), || "x² not flagged".into())?;
    ensure(matches!(classify(&sq), Err(Error::Precondition(_))), || {
        "classify accepted (x², y)".into()
    })?;
    ensure(matches!(sac_factorize(&sq), Err(Error::Precondition(_))), || {
        "factorization accepted (x², y)".into()
    })?;
    // (x + y², y) ∘ v_{x(x−1)}: missing curves X − Y² and X − Y² − 1
    let w = GenWord::new(vec![
        Generator::swap(),
        Generator::shear(UniPoly::from_ints(&[0, 0, 1])),
        Generator::swap(),
        Generator::Vgen(UniPoly::from_ints(&[0, -1, 1])),
    ]);
    let f = w.to_endo();
    let miss = word_missing_set(&w).map_err(|e| e.to_string())?;
    ensure(miss.iter().all(|c| c.total_degree() == Some(2)), || format!("{miss:?}"))?;
    match classify(&f) {
        Err(Error::OutOfClass(_)) => Ok(()),
        other => Err(format!("nonlinear control gave {other:?}")),
    }
}

fn matm() -> Check {
    let mats = random::monoid_matrices(8);
    for m in &mats {
        let word = matm_factor(m);
        let prod = word
            .iter()
            .fold(MatM::IDENTITY, |acc, l| acc.mul(&l.matrix()));
        ensure(prod == *m, || format!("{m}: product {prod}"))?;
        let l_count = word.iter().filter(|l| **l == MatLetter::L).count();
        let f = Generator::Ggen(*m).to_endo();
        let fz = sac_factorize(&f).map_err(|e| format!("{m}: {e}"))?;
        ensure(fz.n == l_count, || format!("{m}: n = {}, L-count {l_count}", fz.n))?;
    }
    ensure(mats.len() > 100, || format!("only {} matrices", mats.len()))
}

#[test]
fn acceptance() {
    let mut r = Vec::new();
    let s = |n| Some(Duration::from_secs(n));
    run(&mut r, "1 round-trip factorization", s(60), round_trip);
    run(&mut r, "2 invariant suite", None, invariants);
    run(&mut r, "3 theorem reproduction", s(30), theorem);
    run(&mut r, "4 corollary configurations", None, configurations);
    run(&mut r, "5 factorial closedness", None, factorial_closedness);
    run(&mut r, "6 negative controls", None, negative_controls);
    run(&mut r, "7 matrix monoid factorization", s(20), matm);
    assert!(r.iter().all(|&ok| ok), "some acceptance criteria failed");
}
