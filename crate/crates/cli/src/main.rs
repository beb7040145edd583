//! `planebir`: invariants, SAC factorization and normal forms of plane
//! endomorphisms from the command line.

mod json;
mod selftest;

use std::io::{Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use planebir::endo::{fmt_point, report};
use planebir::genword::parse_endo_or_word;
use planebir::{
    classify, classify_corollary, depth_of, equivalence_witness_check, generate_example,
    sac_factorize, word_cent, word_contracting_set, word_missing_set, word_n, CorollaryType,
    Error, GenWord, LineConfig, PlaneEndo,
};
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(name = "planebir", version, about = "Birational endomorphisms of the affine plane")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized part of `selftest`.
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,
    /// Sample rational points on contracting curves with |x| up to this bound.
    #[arg(long, global = true, default_value_t = 3)]
    max_point_search: i64,
    #[command(subcommand)]
    cmd: Command,
}

/// Maps are given as `"P ; Q"`, as a word file path, or `-` for stdin.
#[derive(Subcommand, Debug)]
enum Command {
    /// Jacobian, contracting curves, fundamental points and missing lines.
    Info { map: String },
    /// SAC factorization with its peel trace.
    Peel { map: String },
    /// Normal form with automorphism witnesses.
    Classify { map: String },
    /// Composes a word file to `P ; Q`.
    Compose { word: String },
    /// Image of a rational point.
    Apply { map: String, x: String, y: String },
    /// Classifies a line configuration such as `"x; x-1; y"`.
    ConfigCheck { config: String },
    /// A word file realizing a canonical configuration.
    ConfigExample {
        #[arg(long = "type")]
        kind: String,
        /// Comma-separated rationals.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        params: String,
    },
    /// Compositional invariants of a word file.
    WordInvariants { word: String },
    /// Checks `u ∘ f ∘ v = g` for automorphism words `u`, `v`.
    VerifyEquiv {
        f: String,
        g: String,
        u: String,
        v: String,
    },
    /// Runs the embedded golden corpus and a seeded round-trip batch.
    Selftest,
}

fn read_input(s: &str) -> Result<String, Error> {
    if s == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        return Ok(buf);
    }
    let p = Path::new(s);
    if !s.contains(';') && p.exists() && !p.is_dir() {
        return std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{s}: {e}")));
    }
    Ok(s.to_string())
}

fn read_map(s: &str) -> Result<PlaneEndo, Error> {
    parse_endo_or_word(read_input(s)?.trim())
}

fn read_word(s: &str) -> Result<GenWord, Error> {
    GenWord::parse(&read_input(s)?)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 1,
        Error::OutOfClass(_) => 3,
        Error::Stuck { .. } => 4,
        Error::IrrationalData(_) | Error::Unresolved(_) => 5,
        _ => 2,
    }
}

/// Text and JSON renderings of one result.
struct Output {
    text: String,
    json: Value,
}

fn run(cli: &Cli) -> Result<(Output, u8), Error> {
    let mut code = 0;
    let out = match &cli.cmd {
        Command::Info { map } => {
            let f = read_map(map)?;
            let rep = report(&f)?;
            Output {
                text: json::report_text(&f, &rep, cli.max_point_search),
                json: json::report(&rep, cli.max_point_search),
            }
        }
        Command::Peel { map } => {
            let f = read_map(map)?;
            let fz = sac_factorize(&f)?;
            Output {
                text: json::factorization_text(&fz),
                json: json::factorization(&fz),
            }
        }
        Command::Classify { map } => {
            let f = read_map(map)?;
            let nf = classify(&f)?;
            Output {
                text: json::normal_form_text(&nf, &f),
                json: json::normal_form(&nf, &f),
            }
        }
        Command::Compose { word } => {
            let f = read_word(word)?.to_endo();
            Output {
                text: f.to_string(),
                json: serde_json::json!({ "map": f.to_string() }),
            }
        }
        Command::Apply { map, x, y } => {
            let f = read_map(map)?;
            let pt = (bipoly::parse_rat(x)?, bipoly::parse_rat(y)?);
            let img = f.apply(&pt);
            Output {
                text: fmt_point(&img),
                json: json::point(&img),
            }
        }
        Command::ConfigCheck { config } => {
            let cfg = LineConfig::parse(&read_input(config)?)?;
            let cls = classify_corollary(&cfg)?;
            Output {
                text: json::config_text(&cls),
                json: json::config(&cls),
            }
        }
        Command::ConfigExample { kind, params } => {
            let t: CorollaryType = kind.parse()?;
            let ps = params
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(bipoly::parse_rat)
                .collect::<Result<Vec<_>, _>>()?;
            let w = generate_example(t, &ps)?;
            Output {
                text: w.to_string().trim_end().to_string(),
                json: serde_json::json!({ "word": json::word(&w) }),
            }
        }
        Command::WordInvariants { word } => {
            let w = read_word(word)?;
            let miss = word_missing_set(&w)?;
            let cont = word_contracting_set(&w)?;
            let cent = word_cent(&w)?;
            // depths need single-SAC letters; otherwise use the peeled word
            let single = w.letters.iter().all(|g| g.is_automorphism() || g.n() == 1);
            let (dw, source) = if single {
                (w.clone(), "word")
            } else {
                (sac_factorize(&w.to_endo())?.word, "factorization")
            };
            let depths = miss
                .iter()
                .map(|c| Ok((c.to_string(), depth_of(&dw, c)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            let inv = json::Invariants {
                n: word_n(&w),
                miss: &miss,
                cont: &cont,
                cent: &cent,
                depths: &depths,
                depths_from: source,
            };
            Output {
                text: inv.text(),
                json: inv.json(),
            }
        }
        Command::VerifyEquiv { f, g, u, v } => {
            let (f, g) = (read_map(f)?, read_map(g)?);
            let ok = equivalence_witness_check(&f, &g, &read_word(u)?, &read_word(v)?)?;
            Output {
                text: ok.to_string(),
                json: serde_json::json!({ "equivalent": ok }),
            }
        }
        Command::Selftest => {
            let res = selftest::run(cli.seed);
            if !res.iter().all(|r| r.passed) {
                code = 6;
            }
            Output {
                text: selftest::text(&res),
                json: selftest::json(&res),
            }
        }
    };
    Ok((out, code))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((out, code)) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("json")
            } else {
                out.text
            };
            // a closed pipe is not an error of ours
            let _ = writeln!(std::io::stdout(), "{body}");
            ExitCode::from(code)
        }
        Err(e) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json::error(&e)).expect("json")
                );
            } else {
                eprintln!("error: {e}");
                if let Error::Stuck { diagnostics, .. } = &e {
                    for d in diagnostics {
                        eprintln!("  {d}");
                    }
                }
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
