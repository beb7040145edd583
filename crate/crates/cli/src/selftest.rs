//! Embedded golden corpus plus a seeded round-trip batch.

use planebir::genword::parse_endo_or_word;
use planebir::random::{self, capped};
use planebir::{
    classify, classify_corollary, matm_factor, random::monoid_matrices, sac_factorize,
    word_missing_set, word_n, ClassTag, Error, GenWord, LineConfig, MatM, Result,
};
use serde_json::{json, Value};

pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

enum Expect {
    /// Class tag and, when given, the exact core word.
    Class(ClassTag, Option<&'static str>),
    Peel(usize),
    Missing(&'static [&'static str]),
    Config { admissible: bool, kind: &'static str },
    ErrorKind(&'static str),
}

const GOLDEN: &[(&str, &str, Expect)] = &[
    ("sac", "x ; x*y", Expect::Peel(1)),
    ("sac normal form", "x ; x*y", Expect::Class(ClassTag::Saa, Some("g 1 0 1 1"))),
    ("gamma (1 2; 1 3)", "x*y^2 ; x*y^3", Expect::Class(ClassTag::Saa, Some("g 1 2 1 3"))),
    ("gamma (2 1; 1 1)", "x^2*y ; x*y", Expect::Class(ClassTag::Saa, Some("g 2 1 1 1"))),
    ("gamma peel count", "x*y^2 ; x*y^3", Expect::Peel(3)),
    ("concurrent lines", "x*(x-1)*(x-2)*y ; (x-1)*(x-2)*y", Expect::Class(ClassTag::Sw, None)),
    ("concurrent peel count", "x*(x-1)*(x-2)*y ; (x-1)*(x-2)*y", Expect::Peel(3)),
    ("alpha1 word", "sacstd 1\nv x^2 - 3*x + 2\n", Expect::Missing(&["y", "x - y", "x - 2*y"])),
    ("alpha1 word peel count", "sacstd 1\nv x^2 - 3*x + 2\n", Expect::Peel(3)),
    ("hyperbola", "x^2*y + x ; x*y + 1", Expect::Class(ClassTag::Sa, None)),
    ("special family", "sacstd 1\ntri 1 1\nv x^2 - x\n", Expect::Class(ClassTag::Sw, None)),
    (
        "second family",
        "aff 1 0 0 1 1 -3\nv x^2 - 4*x + 4\nh 1 2\ntri 1 x^2\n",
        Expect::Class(ClassTag::Saa, Some("g 1 1 2 3")),
    ),
    ("config x; y; x-y", "x; y; x-y", Expect::Config { admissible: false, kind: "c" }),
    ("config x; x-1; y", "x; x-1; y", Expect::Config { admissible: true, kind: "b" }),
    ("not birational", "x^2 ; y", Expect::ErrorKind("precondition")),
    (
        "nonlinear missing curve",
        "aff 0 1 1 0 0 0\ntri 1 x^2\naff 0 1 1 0 0 0\nv x^2 - x\n",
        Expect::ErrorKind("out_of_class"),
    ),
];

fn kind(e: &Error) -> &'static str {
    match e {
        Error::Precondition(_) => "precondition",
        Error::OutOfClass(_) => "out_of_class",
        Error::Stuck { .. } => "stuck",
        _ => "other",
    }
}

fn check(input: &str, exp: &Expect) -> Result<std::result::Result<String, String>> {
    let r = match exp {
        Expect::Class(tag, core) => {
            let f = parse_endo_or_word(input.trim())?;
            let nf = classify(&f)?;
            let got = nf.core().to_string().trim_end().replace('\n', " | ");
            if nf.class != *tag || !nf.verify(&f) || core.is_some_and(|c| c != got) {
                Err(format!("{} {got}", nf.class))
            } else {
                Ok(format!("{} {got}", nf.class))
            }
        }
        Expect::Peel(n) => {
            let f = parse_endo_or_word(input.trim())?;
            let fz = sac_factorize(&f)?;
            if fz.n == *n && fz.word.to_endo() == f {
                Ok(format!("n = {n}"))
            } else {
                Err(format!("n = {}", fz.n))
            }
        }
        Expect::Missing(want) => {
            let w = GenWord::parse(input)?;
            let got: Vec<String> = word_missing_set(&w)?.iter().map(|p| p.to_string()).collect();
            let mut want: Vec<String> = want.iter().map(|s| s.to_string()).collect();
            want.sort();
            let mut sorted = got.clone();
            sorted.sort();
            if sorted == want {
                Ok(got.join("; "))
            } else {
                Err(got.join("; "))
            }
        }
        Expect::Config { admissible, kind } => {
            let c = classify_corollary(&LineConfig::parse(input)?)?;
            let got = format!("admissible {} type {}", c.admissible, c.corollary_type);
            if c.admissible == *admissible && c.corollary_type.to_string() == *kind {
                Ok(got)
            } else {
                Err(got)
            }
        }
        Expect::ErrorKind(k) => {
            let f = parse_endo_or_word(input.trim())?;
            match classify(&f) {
                Err(e) if kind(&e) == *k => Ok(k.to_string()),
                Err(e) => Err(e.to_string()),
                Ok(nf) => Err(format!("classified {}", nf.class)),
            }
        }
    };
    Ok(r)
}

fn case(name: impl Into<String>, r: std::result::Result<String, String>) -> CaseResult {
    let (passed, detail) = match r {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CaseResult {
        name: name.into(),
        passed,
        detail,
    }
}

fn matm_exhaustive() -> std::result::Result<String, String> {
    let all = monoid_matrices(4);
    for m in &all {
        let prod = matm_factor(m)
            .iter()
            .fold(MatM::IDENTITY, |acc, l| acc.mul(&l.matrix()));
        if prod != *m {
            return Err(format!("{m}"));
        }
    }
    Ok(format!("{} matrices", all.len()))
}

fn round_trip(seed: u64) -> std::result::Result<String, String> {
    let words = random::corpus(seed, 20, 6, 16);
    for w in &words {
        let f = w.to_endo();
        let fz = sac_factorize(&f).map_err(|e| format!("{}: {e}", w.to_string().trim_end()))?;
        if fz.word.to_endo() != f || fz.n != word_n(w) {
            return Err(w.to_string().trim_end().replace('\n', " | "));
        }
    }
    Ok(format!("{} words", words.len()))
}

fn vgh_classes(seed: u64) -> std::result::Result<String, String> {
    let mut rng = random::rng(seed);
    for _ in 0..10 {
        let w = capped(&mut rng, 16, random::vgh);
        let f = w.to_endo();
        let nf = classify(&f).map_err(|e| e.to_string())?;
        if !matches!(nf.class, ClassTag::Sa | ClassTag::Saa) || !nf.verify(&f) {
            return Err(w.to_string().trim_end().replace('\n', " | "));
        }
    }
    Ok("10 words".into())
}

pub fn run(seed: u64) -> Vec<CaseResult> {
    let mut out: Vec<CaseResult> = GOLDEN
        .iter()
        .map(|(name, input, exp)| {
            let r = check(input, exp).unwrap_or_else(|e| Err(e.to_string()));
            case(*name, r)
        })
        .collect();
    out.push(case("matrix factorization", matm_exhaustive()));
    out.push(case(format!("round trip (seed {seed})"), round_trip(seed)));
    out.push(case(format!("v∘γ∘h classes (seed {seed})"), vgh_classes(seed)));
    out
}

pub fn text(res: &[CaseResult]) -> String {
    let lines: Vec<String> = res
        .iter()
        .map(|r| {
            format!(
                "{} {}: {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.name,
                r.detail
            )
        })
        .collect();
    let passed = res.iter().filter(|r| r.passed).count();
    format!("{}\n{passed}/{} passed", lines.join("\n"), res.len())
}

pub fn json(res: &[CaseResult]) -> Value {
    json!({
        "cases": res.iter().map(|r| json!({
            "name": r.name,
            "passed": r.passed,
            "detail": r.detail,
        })).collect::<Vec<_>>(),
        "passed": res.iter().filter(|r| r.passed).count(),
        "total": res.len(),
    })
}
