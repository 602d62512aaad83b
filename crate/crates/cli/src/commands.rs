use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};
use sympow_core::containment::{
    audit_proof_chain, check_colon_claim, check_fpure_colon_inclusion, conjecture_scan, symbolic_power_general,
    verify_main, ContainmentReport, Corpus, Recipe, Summary, Verdict,
};
use sympow_core::frobenius::bracket_power;
use sympow_core::ring::parse_polynomial;
use sympow_core::{
    buchberger, colon, fedder_fpure, ideal_intersect, ideal_member, saturate, tau_monomial_power, AlgebraError, Ideal,
    MonomialIdeal, MonomialOrder, RingRef,
};

use crate::args::{Command, Order, RecipeKind};
use crate::input::{load, IdealFile, InputError, Loaded};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Success,
    /// Precondition unmet or inconclusive.
    Unsettled,
    Fails,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Fails => 1,
            Status::Unsettled => 3,
        }
    }
}

pub struct Response {
    pub text: String,
    pub json: Value,
    pub status: Status,
}

impl Response {
    fn ok(text: String, json: Value) -> Response {
        Response { text, json, status: Status::Success }
    }
}

#[derive(Debug)]
pub enum CliError {
    Input(InputError),
    Algebra(AlgebraError),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(e) => write!(f, "{e}"),
            CliError::Algebra(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::Input(e)
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Algebra(e)
    }
}

type Outcome = Result<Response, CliError>;

fn poly_arg(ring: &RingRef, what: &str, text: &str) -> Result<sympow_core::Polynomial, CliError> {
    parse_polynomial(ring, text).map_err(|e| CliError::Usage(format!("--{what}: {e}")))
}

fn ideal_response(label: &str, ideal: &Ideal) -> Response {
    Response::ok(format!("{label} = {ideal}\n"), json!({ "result": IdealFile::from_ideal(ideal) }))
}

fn monomial_response(label: &str, ring: &RingRef, m: &MonomialIdeal) -> Response {
    let text = format!("{label} = {}\n", m.display_with(ring));
    Response::ok(text, json!({ "result": IdealFile::from_monomial(ring, m) }))
}

pub fn dispatch(command: &Command) -> Outcome {
    match command {
        Command::Gb { input, order } => {
            let l = load(&input.file)?;
            let order = match order {
                Order::Lex => MonomialOrder::Lex,
                Order::Grevlex => MonomialOrder::GrevLex,
            };
            let gb = buchberger(&l.ideal, order);
            let basis = Ideal::new(l.ring(), gb.elements().to_vec())?;
            let mut text = format!("reduced Gröbner basis ({}):\n", order.name());
            for g in gb.elements() {
                let _ = writeln!(text, "  {g}");
            }
            Ok(Response::ok(text, json!({ "order": order.name(), "result": IdealFile::from_ideal(&basis) })))
        }
        Command::Member { input, poly } => {
            let l = load(&input.file)?;
            let f = poly_arg(l.ring(), "poly", poly)?;
            let member = ideal_member(&f, &l.ideal)?;
            let text = format!("{f} {} {}\n", if member { "∈" } else { "∉" }, l.ideal);
            Ok(Response::ok(text, json!({ "poly": f.to_string(), "member": member })))
        }
        Command::Colon { left, right } => {
            let (i, j) = (load(left)?, load(right)?);
            Ok(ideal_response("(I : J)", &colon(&i.ideal, &j.ideal)?))
        }
        Command::Intersect { left, right } => {
            let (i, j) = (load(left)?, load(right)?);
            Ok(ideal_response("I ∩ J", &ideal_intersect(&i.ideal, &j.ideal)?))
        }
        Command::Saturate { input, by } => {
            let l = load(&input.file)?;
            let f = poly_arg(l.ring(), "by", by)?;
            Ok(ideal_response(&format!("(I : ({f})^∞)"), &saturate(&l.ideal, &f)?))
        }
        Command::Bracket { input, e } => {
            let l = load(&input.file)?;
            let q = l.ring().frobenius_modulus(*e);
            Ok(ideal_response(&format!("I^[{q}]"), &bracket_power(&l.ideal, *e)?))
        }
        Command::Fedder { input } => fedder(&load(&input.file)?),
        Command::Symbolic { input, m } => {
            let l = load(&input.file)?;
            let label = format!("I^({m})");
            if let Some(s) = &l.squarefree {
                return Ok(monomial_response(&label, l.ring(), &s.symbolic_power(*m)));
            }
            let (Some(primes), Some(sep)) = (&l.primes, &l.separator) else {
                return Err(CliError::Usage(
                    "symbolic powers of non-monomial ideals need \"primes\" and \"separator\" in the ideal file".into(),
                ));
            };
            Ok(ideal_response(&label, &symbolic_power_general(&l.ideal, *m, sep, primes)?))
        }
        Command::Tau { input, t, e_max } => {
            let l = load(&input.file)?;
            let a = l.ideal.to_monomial()?;
            let ring = l.ring();
            let p = ring.characteristic();
            let chain = tau_monomial_power(&a, *t, p, *e_max)?;
            let mut text = String::new();
            for (e, c) in chain.chain.iter().enumerate() {
                let _ = writeln!(text, "τ_{e} (q = {}) = {}", p.pow(e as u32), c.display_with(ring));
            }
            let value = chain.ideal.display_with(ring);
            let status = if chain.stabilized {
                let _ = writeln!(text, "τ(a^{t}) = {value}");
                Status::Success
            } else {
                let _ = writeln!(text, "Inconclusive: chain still moving at e = {e_max}");
                Status::Unsettled
            };
            let json = json!({
                "t": t.to_string(),
                "stabilized": chain.stabilized,
                "result": IdealFile::from_monomial(ring, &chain.ideal),
                "chain": chain.chain.iter().map(|c| c.display_with(ring)).collect::<Vec<_>>(),
            });
            Ok(Response { text, json, status })
        }
        Command::TauAsym { input, k } => {
            let l = load(&input.file)?;
            let s = l.require_squarefree()?;
            Ok(monomial_response(&format!("τ({k}·I^(•))"), l.ring(), &s.tau_asymptotic(*k)))
        }
        Command::Threshold { input } => {
            let l = load(&input.file)?;
            let t = l.require_squarefree()?.tau_threshold();
            Ok(Response::ok(format!("threshold l = {t}\n"), json!({ "threshold": t })))
        }
        Command::Verify { input, variant, n, k } => {
            let l = load(&input.file)?;
            reports(vec![verify_main(&l.subject()?, *n, *k, *variant)?])
        }
        Command::Audit { input, n, k } => {
            let l = load(&input.file)?;
            reports(audit_proof_chain(l.require_squarefree()?, *n, *k)?)
        }
        Command::Claim { input, e } => {
            let l = load(&input.file)?;
            let subject = l.subject()?;
            reports(vec![check_colon_claim(&subject, *e)?, check_fpure_colon_inclusion(&subject, *e)?])
        }
        Command::ConjectureScan { nvars, characteristic, recipe, sample, seed } => {
            let recipe = match recipe {
                RecipeKind::All => Recipe::AllSquarefree(*nvars),
                RecipeKind::Edge => Recipe::EdgeIdeals(*nvars),
                RecipeKind::Cover => Recipe::CoverIdeals(*nvars),
            };
            let mut corpus = Corpus::new(recipe, *characteristic);
            if let Some(size) = sample {
                corpus = corpus.with_sample(*size, *seed);
            }
            scan(&corpus)
        }
    }
}

fn fedder(l: &Loaded) -> Outcome {
    let v = fedder_fpure(&l.ideal)?;
    let mut text = format!("{} at p = {}\n", if v.fpure { "F-pure" } else { "not F-pure" }, v.q);
    let _ = writeln!(text, "(I^[p] : I) = {}", v.colon);
    match &v.witness {
        Some(w) => {
            let _ = writeln!(text, "witness: {w} has a term outside m^[p]");
        }
        None => {
            let _ = writeln!(text, "every generator lies in m^[p]");
        }
    }
    let json = json!({
        "fpure": v.fpure,
        "p": v.q,
        "colon": IdealFile::from_ideal(&v.colon),
        "witness": v.witness.as_ref().map(ToString::to_string),
    });
    Ok(Response::ok(text, json))
}

fn status_of(reports: &[ContainmentReport]) -> Status {
    reports
        .iter()
        .map(|r| match r.verdict {
            Verdict::Holds => Status::Success,
            Verdict::Fails(_) => Status::Fails,
            Verdict::PreconditionUnmet(_) | Verdict::Inconclusive(_) => Status::Unsettled,
        })
        .max()
        .unwrap_or(Status::Success)
}

fn render(r: &ContainmentReport, text: &mut String) {
    let _ = writeln!(text, "{r}");
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k} = {v}")).collect();
    let _ = writeln!(text, "  [{}] {} ({})", r.theorem, r.ideal, params.join(", "));
    if let Some(note) = &r.note {
        let _ = writeln!(text, "  {note}");
    }
}

fn reports(list: Vec<ContainmentReport>) -> Outcome {
    let mut text = String::new();
    for r in &list {
        render(r, &mut text);
    }
    let summary = Summary::of(&list);
    let json = json!({
        "reports": list.iter().map(ContainmentReport::record).collect::<Vec<_>>(),
        "summary": summary,
    });
    Ok(Response { text, json, status: status_of(&list) })
}

fn scan(corpus: &Corpus) -> Outcome {
    let out = conjecture_scan(corpus)?;
    let bad: Vec<&ContainmentReport> = out.counterexamples().collect();
    let mut text = String::new();
    for r in &bad {
        render(r, &mut text);
    }
    let _ = writeln!(
        text,
        "{} counterexamples / {} ideals scanned ({} skipped: not unmixed of height 2)",
        bad.len(),
        out.reports.len(),
        out.skipped.len()
    );
    let json = json!({
        "reports": out.reports.iter().map(ContainmentReport::record).collect::<Vec<_>>(),
        "summary": Summary::of(&out.reports),
        "skipped": out.skipped.len(),
    });
    Ok(Response { text, json, status: status_of(&out.reports) })
}

/// Write `content` to `path`, or stdout when `path` is `None`.
pub fn emit(path: Option<&Path>, content: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, content),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes())?;
            out.flush()
        }
    }
}
