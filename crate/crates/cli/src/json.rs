//! JSON and text renderings. Polynomials, rationals and words are printed in
//! the input grammars so every output can be fed back in.

use std::collections::BTreeSet;
use std::fmt::Write;

use bipoly::format_rat;
use planebir::endo::{fmt_point, rational_points, EndoReport};
use planebir::sacfactor::SaaVerdict;
use planebir::{BiPoly, ConfigClass, Error, Factorization, GenWord, Line, NormalForm, PlaneEndo, Point};
use serde_json::{json, Value};

pub fn point(p: &Point) -> Value {
    json!([format_rat(&p.0), format_rat(&p.1)])
}

fn opt_point(p: &Option<Point>) -> Value {
    p.as_ref().map(point).unwrap_or(Value::Null)
}

fn line(l: &Line) -> Value {
    json!({
        "a": format_rat(&l.a),
        "b": format_rat(&l.b),
        "c": format_rat(&l.c),
        "equation": l.to_string(),
    })
}

pub fn word(w: &GenWord) -> Value {
    Value::Array(w.letters.iter().map(|g| json!(g.to_string())).collect())
}

fn word_inline(w: &GenWord) -> String {
    if w.is_empty() {
        return "[]".into();
    }
    let parts: Vec<String> = w.letters.iter().map(|g| g.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn polys(set: &BTreeSet<BiPoly>) -> Value {
    Value::Array(set.iter().map(|p| json!(p.to_string())).collect())
}

pub fn report(rep: &EndoReport, bound: i64) -> Value {
    let cont = &rep.contraction;
    json!({
        "degree": rep.degree,
        "jacobian": cont.jacobian.to_string(),
        "contracting": cont.contracting.iter().map(|c| json!({
            "factor": c.equation.to_string(),
            "multiplicity_in_jacobian": c.multiplicity,
            "image_point": opt_point(&c.image_point),
            "sample_points": rational_points(&c.equation, bound).iter().map(point).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "non_contracted": cont.non_contracted.iter().map(|(e, m)| json!({
            "factor": e.to_string(),
            "multiplicity_in_jacobian": m,
        })).collect::<Vec<_>>(),
        "missing_lines": rep.missing.lines.iter().map(line).collect::<Vec<_>>(),
        "q": rep.q(),
        "c": rep.c(),
        "all_missing_are_lines": rep.missing.all_missing_are_lines,
    })
}

pub fn report_text(f: &PlaneEndo, rep: &EndoReport, bound: i64) -> String {
    let cont = &rep.contraction;
    let mut s = String::new();
    let _ = writeln!(s, "map       {f}");
    let _ = writeln!(s, "degree    {}", rep.degree);
    let _ = writeln!(s, "jacobian  {}", cont.jacobian);
    for c in &cont.contracting {
        let img = c.image_point.as_ref().map(fmt_point).unwrap_or("?".into());
        let pts: Vec<String> = rational_points(&c.equation, bound).iter().map(fmt_point).collect();
        let _ = writeln!(
            s,
            "contracts {} (multiplicity {}) to {img}; points {}",
            c.equation,
            c.multiplicity,
            pts.join(" ")
        );
    }
    for (e, m) in &cont.non_contracted {
        let _ = writeln!(s, "not contracted {e} (multiplicity {m}): not birational");
    }
    for l in &rep.missing.lines {
        let _ = writeln!(s, "missing   {l}");
    }
    if !rep.missing.all_missing_are_lines && cont.non_contracted.is_empty() {
        let _ = writeln!(s, "some missing curve is not a line");
    }
    let _ = write!(s, "q = {}, c = {}", rep.q(), rep.c());
    s
}

pub fn factorization(fz: &Factorization) -> Value {
    let mut steps: Vec<Value> = fz
        .left
        .iter()
        .map(|st| {
            json!({
                "side": "left",
                "line": st.line.to_string(),
                "point": point(&st.point),
                "residual": st.residual.to_string(),
            })
        })
        .collect();
    steps.extend(fz.right.iter().map(|rp| {
        json!({
            "side": "right",
            "curve": rp.curve.to_string(),
            "piece": word(&rp.piece),
            "residual": rp.residual.to_string(),
        })
    }));
    json!({
        "n": fz.n,
        "steps": steps,
        "middle": word(&fz.middle),
        "word": word(&fz.word),
        "verified": true,
    })
}

pub fn factorization_text(fz: &Factorization) -> String {
    let mut s = String::new();
    for st in &fz.left {
        let _ = writeln!(
            s,
            "left  SAC at {} through {} -> {}",
            st.line,
            fmt_point(&st.point),
            st.residual
        );
    }
    for rp in &fz.right {
        let _ = writeln!(s, "right contract {} -> {}", rp.curve, rp.residual);
    }
    let _ = writeln!(s, "n = {}", fz.n);
    let _ = write!(s, "word:\n{}", fz.word.to_string().trim_end());
    s
}

fn saa(v: &SaaVerdict) -> Value {
    match v {
        SaaVerdict::Saa => json!({ "verdict": "Saa" }),
        SaaVerdict::NotSaaProven(r) => json!({ "verdict": "NotSaaProven", "reason": r }),
        SaaVerdict::NotSaaConservative(r) => {
            json!({ "verdict": "NotSaaConservative", "reason": r })
        }
        SaaVerdict::NotApplicable => json!({ "verdict": "NotApplicable" }),
    }
}

pub fn normal_form(nf: &NormalForm, f: &PlaneEndo) -> Value {
    json!({
        "class": nf.class.to_string(),
        "variant": nf.variant.to_string(),
        "core_word": word(&nf.core()),
        "omega": word(&nf.omega),
        "theta": word(&nf.theta),
        "verified": nf.verify(f),
        "saa": saa(&nf.saa),
        "sa_form": nf.sa_form.as_deref().map(|s| normal_form(s, f)).unwrap_or(Value::Null),
    })
}

pub fn normal_form_text(nf: &NormalForm, f: &PlaneEndo) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "class    {}", nf.class);
    let _ = writeln!(s, "core     {}", nf.variant);
    let _ = writeln!(s, "omega    {}", word_inline(&nf.omega));
    let _ = writeln!(s, "theta    {}", word_inline(&nf.theta));
    match &nf.saa {
        SaaVerdict::NotSaaProven(r) => {
            let _ = writeln!(s, "not Saa: {r}");
        }
        SaaVerdict::NotSaaConservative(r) => {
            let _ = writeln!(s, "Saa undecided: {r}");
        }
        _ => {}
    }
    if let Some(sa) = &nf.sa_form {
        let _ = writeln!(s, "from     {}", sa.variant);
    }
    let _ = write!(s, "verified {}", nf.verify(f));
    s
}

pub fn config(c: &ConfigClass) -> Value {
    json!({
        "weakly_admissible": c.weakly_admissible,
        "admissible": c.admissible,
        "corollary_type": c.corollary_type.to_string(),
        "directions": c.directions.iter()
            .map(|cls| cls.iter().map(|l| json!(l.to_string())).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "concurrency_point": opt_point(&c.concurrency_point),
        "canonical_params": c.canonical_params.iter().map(format_rat).collect::<Vec<_>>(),
    })
}

pub fn config_text(c: &ConfigClass) -> String {
    let dirs: Vec<String> = c
        .directions
        .iter()
        .map(|cls| {
            let ls: Vec<String> = cls.iter().map(|l| l.to_string()).collect();
            format!("{{{}}}", ls.join(", "))
        })
        .collect();
    let params: Vec<String> = c.canonical_params.iter().map(format_rat).collect();
    let mut s = String::new();
    let _ = writeln!(s, "weakly admissible {}", c.weakly_admissible);
    let _ = writeln!(s, "admissible        {}", c.admissible);
    let _ = writeln!(s, "type              {}", c.corollary_type);
    let _ = writeln!(s, "directions        {}", dirs.join(" "));
    if let Some(p) = &c.concurrency_point {
        let _ = writeln!(s, "concurrent at     {}", fmt_point(p));
    }
    let _ = write!(s, "params            {}", params.join(", "));
    s
}

pub struct Invariants<'a> {
    pub n: usize,
    pub miss: &'a BTreeSet<BiPoly>,
    pub cont: &'a BTreeSet<BiPoly>,
    pub cent: &'a BTreeSet<Point>,
    pub depths: &'a [(String, usize)],
    /// `word` or `factorization`.
    pub depths_from: &'static str,
}

impl Invariants<'_> {
    pub fn json(&self) -> Value {
        json!({
            "n": self.n,
            "miss": polys(self.miss),
            "cont": polys(self.cont),
            "cent": self.cent.iter().map(point).collect::<Vec<_>>(),
            "depths": self.depths.iter()
                .map(|(c, d)| json!({ "curve": c, "depth": d }))
                .collect::<Vec<_>>(),
            "depths_from": self.depths_from,
        })
    }

    pub fn text(&self) -> String {
        let list = |s: &BTreeSet<BiPoly>| {
            s.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("; ")
        };
        let mut s = String::new();
        let _ = writeln!(s, "n     {}", self.n);
        let _ = writeln!(s, "miss  {}", list(self.miss));
        let _ = writeln!(s, "cont  {}", list(self.cont));
        let pts: Vec<String> = self.cent.iter().map(fmt_point).collect();
        let _ = writeln!(s, "cent  {}", pts.join(" "));
        let ds: Vec<String> = self.depths.iter().map(|(c, d)| format!("{c}: {d}")).collect();
        let _ = write!(s, "depth {} (in the {})", ds.join(", "), self.depths_from);
        s
    }
}

pub fn error(e: &Error) -> Value {
    let kind = match e {
        Error::Parse(_) => "parse",
        Error::Precondition(_) => "precondition",
        Error::IrrationalData(_) => "irrational_data",
        Error::Unresolved(_) => "unresolved",
        Error::OutOfClass(_) => "out_of_class",
        Error::Stuck { .. } => "stuck",
        Error::NotAutomorphism(_) => "not_automorphism",
        Error::BadParams(_) => "bad_params",
        Error::NotRealizable(_) => "not_realizable",
        Error::MethodDisagreement(_) => "method_disagreement",
        Error::NotAMissingCurve(_) => "not_a_missing_curve",
    };
    let diagnostics = match e {
        Error::Stuck { diagnostics, .. } => diagnostics.clone(),
        _ => Vec::new(),
    };
    json!({ "error": kind, "message": e.to_string(), "diagnostics": diagnostics })
}
