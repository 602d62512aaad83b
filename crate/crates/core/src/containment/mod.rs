//! Mechanical checks of symbolic-power containments.
//!
//! Every check produces a [`ContainmentReport`]. Squarefree monomial ideals
//! take an exact combinatorial path; other ideals need caller-attested
//! minimal primes and, for symbolic powers, a separator `s` so that
//! `I^(m) = (I^m : s^∞)`.

mod corpus;
mod report;

use std::time::Instant;

use rayon::prelude::*;

pub use corpus::{antichains, graphs, Corpus, Filter, Recipe};
pub use report::{ContainmentReport, ReportRecord, Summary, Verdict};

use crate::error::{AlgebraError, Result};
use crate::frobenius::{fedder_fpure, frobenius_colon};
use crate::groebner::{ideal_member, saturate, Ideal};
use crate::monomial::{MonomialIdeal, SquarefreeIdeal};
use crate::ring::{same_ring, ExponentVector, Polynomial, RingRef};

/// A non-monomial ideal with the data needed to reach its symbolic powers.
#[derive(Clone, Debug)]
pub struct GeneralIdeal {
    ideal: Ideal,
    primes: Vec<Vec<usize>>,
    separator: Option<Polynomial>,
}

fn in_monomial_prime(f: &Polynomial, vars: &[usize]) -> bool {
    f.terms().keys().all(|u| vars.iter().any(|&i| u[i] > 0))
}

impl GeneralIdeal {
    /// `primes` are the minimal primes of `ideal` as variable-index lists;
    /// they are attested by the caller, not recomputed.
    pub fn new(ideal: Ideal, primes: Vec<Vec<usize>>, separator: Option<Polynomial>) -> Result<Self> {
        if ideal.is_zero() || ideal.is_unit() {
            return Err(AlgebraError::Precondition("ideal must be proper and nonzero".into()));
        }
        let n = ideal.ring().nvars();
        if primes.iter().any(|p| p.is_empty() || p.iter().any(|&i| i >= n)) {
            return Err(AlgebraError::InvalidVariables("prime lists must be nonempty subsets of the variables".into()));
        }
        if let Some(s) = &separator {
            check_separator(&ideal, s, &primes)?;
        }
        Ok(GeneralIdeal { ideal, primes, separator })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn primes(&self) -> &[Vec<usize>] {
        &self.primes
    }

    pub fn separator(&self) -> Option<&Polynomial> {
        self.separator.as_ref()
    }
}

fn check_separator(ideal: &Ideal, s: &Polynomial, primes: &[Vec<usize>]) -> Result<()> {
    if !same_ring(ideal.ring(), s.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    if ideal_member(s, ideal)? {
        return Err(AlgebraError::Precondition(format!("separator {s} lies in I")));
    }
    if let Some(p) = primes.iter().find(|p| in_monomial_prime(s, p)) {
        let names: Vec<&str> = p.iter().map(|&i| ideal.ring().variables()[i].as_str()).collect();
        return Err(AlgebraError::Precondition(format!("separator {s} lies in the prime ({})", names.join(", "))));
    }
    Ok(())
}

/// `(I^m : s^∞)`. Equal to `I^(m)` when `s` avoids every minimal prime of
/// `I` and lies in every other associated prime of `I^m`; only the first
/// half can be checked here.
pub fn symbolic_power_general(i: &Ideal, m: u32, separator: &Polynomial, primes: &[Vec<usize>]) -> Result<Ideal> {
    if m == 0 {
        return Ok(Ideal::unit(i.ring()));
    }
    check_separator(i, separator, primes)?;
    saturate(&i.power(m), separator)
}

#[derive(Clone, Debug)]
pub enum Subject {
    Squarefree(SquarefreeIdeal),
    General(GeneralIdeal),
}

impl Subject {
    pub fn ring(&self) -> &RingRef {
        match self {
            Subject::Squarefree(s) => s.ring(),
            Subject::General(g) => g.ideal.ring(),
        }
    }

    pub fn ideal(&self) -> Ideal {
        match self {
            Subject::Squarefree(s) => s.to_ideal(),
            Subject::General(g) => g.ideal.clone(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Subject::Squarefree(s) => s.to_string(),
            Subject::General(g) => g.ideal.to_string(),
        }
    }

    fn primes(&self) -> Result<Vec<Vec<usize>>> {
        match self {
            Subject::Squarefree(s) => Ok(s.minimal_primes().to_vec()),
            Subject::General(g) if !g.primes.is_empty() => Ok(g.primes.clone()),
            Subject::General(_) => {
                Err(AlgebraError::Precondition("minimal primes must be supplied for non-monomial ideals".into()))
            }
        }
    }

    fn symbolic_power(&self, m: u32) -> Result<Ideal> {
        match self {
            Subject::Squarefree(s) => Ideal::from_monomial(s.ring(), &s.symbolic_power(m)),
            Subject::General(g) => {
                let sep = g.separator.as_ref().ok_or_else(|| {
                    AlgebraError::Precondition("a separator is required for non-monomial symbolic powers".into())
                })?;
                symbolic_power_general(&g.ideal, m, sep, &g.primes)
            }
        }
    }
}

impl From<GeneralIdeal> for Subject {
    fn from(g: GeneralIdeal) -> Self {
        Subject::General(g)
    }
}

impl From<SquarefreeIdeal> for Subject {
    fn from(s: SquarefreeIdeal) -> Self {
        Subject::Squarefree(s)
    }
}

fn monomial_poly(ring: &RingRef, u: &ExponentVector) -> Polynomial {
    Polynomial::monomial(ring, u.clone(), 1)
}

/// `left ⊆ right` for monomial ideals, with a minimal generator as witness.
fn monomial_verdict(ring: &RingRef, left: &MonomialIdeal, right: &MonomialIdeal) -> Verdict {
    match right.first_non_member(left) {
        None => Verdict::Holds,
        Some(u) => Verdict::Fails(monomial_poly(ring, u)),
    }
}

/// `left ⊆ right`, generator-wise through Gröbner normal forms.
fn ideal_verdict(left: &Ideal, right: &Ideal) -> Result<Verdict> {
    for g in left.generators() {
        if !ideal_member(g, right)? {
            return Ok(Verdict::Fails(g.clone()));
        }
    }
    Ok(Verdict::Holds)
}

struct Draft {
    theorem: String,
    statement: String,
    params: Vec<(&'static str, u64)>,
}

impl Draft {
    fn new(theorem: impl Into<String>, statement: impl Into<String>) -> Self {
        Draft { theorem: theorem.into(), statement: statement.into(), params: Vec::new() }
    }

    fn param(mut self, key: &'static str, value: u64) -> Self {
        self.params.push((key, value));
        self
    }

    /// Run `check`, timing it, and assemble the report.
    fn run(
        self,
        subject: &str,
        check: impl FnOnce() -> Result<(Verdict, Option<String>)>,
    ) -> Result<ContainmentReport> {
        let start = Instant::now();
        let (verdict, note) = check()?;
        Ok(ContainmentReport {
            theorem: self.theorem,
            statement: self.statement,
            ideal: subject.to_string(),
            params: self.params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            verdict,
            millis: start.elapsed().as_millis() as u64,
            note,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `I^(hn+kn+1) ⊆ m (I^(k+1))^n`.
    A,
    /// `I^(hn+kn-1) ⊆ (I^(k+1))^n` for F-pure `R/I` of height at least two.
    B,
    /// `I^(hn+kn) ⊆ (I^(k+1))^n`.
    Els,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::A => "A",
            Variant::B => "B",
            Variant::Els => "ELS",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Variant::A),
            "B" => Ok(Variant::B),
            "ELS" => Ok(Variant::Els),
            _ => Err(AlgebraError::Precondition(format!("unknown variant `{s}` (expected A, B or ELS)"))),
        }
    }
}

fn power_label(n: u32, k: u32) -> String {
    match (n, k) {
        (1, 0) => "I".into(),
        (_, 0) => format!("I^{n}"),
        (1, _) => format!("I^({})", k + 1),
        _ => format!("(I^({}))^{n}", k + 1),
    }
}

fn fedder_gate(ideal: &Ideal) -> Result<std::result::Result<String, Verdict>> {
    let p = ideal.ring().characteristic();
    let f = fedder_fpure(ideal)?;
    Ok(match f.witness {
        Some(w) => Ok(format!("F-pure at p = {p}: {w} ∈ (I^[p] : I) \\ m^[p]")),
        None => Err(Verdict::PreconditionUnmet(format!("R/I is not F-pure at p = {p}"))),
    })
}

/// Check one of the symbolic-power containments with `h` the big height.
pub fn verify_main(subject: &Subject, n: u32, k: u32, variant: Variant) -> Result<ContainmentReport> {
    if n == 0 {
        return Err(AlgebraError::Precondition("n must be positive".into()));
    }
    let primes = subject.primes()?;
    let h = primes.iter().map(Vec::len).max().unwrap_or(0) as u32;
    let height = primes.iter().map(Vec::len).min().unwrap_or(0) as u32;
    let left_m = match variant {
        Variant::A => h * n + k * n + 1,
        Variant::B => h * n + k * n - 1,
        Variant::Els => h * n + k * n,
    };
    let right_label = power_label(n, k);
    let right_label = if variant == Variant::A { format!("m·{right_label}") } else { right_label };
    let ring = subject.ring().clone();
    let draft = Draft::new(format!("verify-{}", variant.name()), format!("I^({left_m}) ⊆ {right_label}"))
        .param("n", n as u64)
        .param("k", k as u64)
        .param("h", h as u64)
        .param("p", ring.characteristic());
    draft.run(&subject.describe(), || {
        let mut notes = Vec::new();
        if variant == Variant::B {
            if height < 2 {
                return Ok((Verdict::PreconditionUnmet(format!("height {height} < 2")), None));
            }
            match fedder_gate(&subject.ideal())? {
                Ok(note) => notes.push(note),
                Err(v) => return Ok((v, None)),
            }
        }
        let verdict = match subject {
            Subject::Squarefree(s) => {
                let left = s.symbolic_power(left_m);
                let inner = s.symbolic_power(k + 1).power(n as u64);
                let right = if variant == Variant::A { inner.times_maximal() } else { inner };
                monomial_verdict(&ring, &left, &right)
            }
            Subject::General(_) => {
                notes.push("symbolic powers via separator saturation; exact if the separator is valid".into());
                let left = subject.symbolic_power(left_m)?;
                let inner = subject.symbolic_power(k + 1)?.power(n);
                let right = if variant == Variant::A { Ideal::maximal(&ring).product(&inner)? } else { inner };
                ideal_verdict(&left, &right)?
            }
        };
        Ok((verdict, (!notes.is_empty()).then(|| notes.join("; "))))
    })
}

/// `I^(m) ⊆ m'·(I^(s))^r` with explicit exponents, for probing sharpness.
pub fn symbolic_containment(
    subject: &Subject,
    m: u32,
    s: u32,
    r: u32,
    times_maximal: bool,
) -> Result<ContainmentReport> {
    let inner = power_label(r, s.saturating_sub(1));
    let label = if times_maximal { format!("m·{inner}") } else { inner };
    let ring = subject.ring().clone();
    Draft::new("containment", format!("I^({m}) ⊆ {label}"))
        .param("m", m as u64)
        .param("s", s as u64)
        .param("r", r as u64)
        .param("p", ring.characteristic())
        .run(&subject.describe(), || {
            let left = subject.symbolic_power(m)?;
            let inner = subject.symbolic_power(s)?.power(r);
            let right = if times_maximal { Ideal::maximal(&ring).product(&inner)? } else { inner };
            let verdict = match (left.to_monomial(), right.to_monomial()) {
                (Ok(l), Ok(rt)) => monomial_verdict(&ring, &l, &rt),
                _ => ideal_verdict(&left, &right)?,
            };
            Ok((verdict, None))
        })
}

/// Id, statement, and a thunk for the left and right side of one link.
type Link<'a> = (&'static str, String, Box<dyn Fn() -> (MonomialIdeal, MonomialIdeal) + 'a>);

/// The four inclusions that chain `I^(hn+kn+1)` down to `m (I^(k+1))^n`:
///
/// 1. `I^(a) τ(l·I^(•)) ⊆ τ((a+l)·I^(•))` with `a = hn+kn+1`,
/// 2. `τ((a+l)·) ⊆ τ((l+1)·) τ((h+k)·)^n`,
/// 3. `τ((l+1)·) ⊆ m`,
/// 4. `τ((h+k)·)^n ⊆ (I^(k+1))^n`,
///
/// where `l` is the largest level with `τ(l·I^(•)) = R`.
pub fn audit_proof_chain(i: &SquarefreeIdeal, n: u32, k: u32) -> Result<Vec<ContainmentReport>> {
    if n == 0 {
        return Err(AlgebraError::Precondition("n must be positive".into()));
    }
    let ring = i.ring().clone();
    let h = i.big_height() as u32;
    let l = i.tau_threshold();
    let a = h * n + k * n + 1;
    let tau = |j: u32| i.tau_asymptotic(j);
    let pw = |base: String| if n == 1 { base } else { format!("({base})^{n}") };
    let links: [Link; 4] = [
        (
            "audit-i",
            format!("I^({a})·τ({l}·I^(•)) ⊆ τ({}·I^(•))", a + l),
            Box::new(|| (i.symbolic_power(a).product(&tau(l)), tau(a + l))),
        ),
        (
            "audit-ii",
            format!("τ({}·I^(•)) ⊆ τ({}·I^(•))·{}", a + l, l + 1, pw(format!("τ({}·I^(•))", h + k))),
            Box::new(|| (tau(a + l), tau(l + 1).product(&tau(h + k).power(n as u64)))),
        ),
        ("audit-iii", format!("τ({}·I^(•)) ⊆ m", l + 1), Box::new(|| (tau(l + 1), MonomialIdeal::maximal(i.nvars())))),
        (
            "audit-iv",
            format!("{} ⊆ {}", pw(format!("τ({}·I^(•))", h + k)), power_label(n, k)),
            Box::new(|| (tau(h + k).power(n as u64), i.symbolic_power(k + 1).power(n as u64))),
        ),
    ];
    links
        .into_iter()
        .map(|(id, statement, sides)| {
            Draft::new(id, statement)
                .param("n", n as u64)
                .param("k", k as u64)
                .param("h", h as u64)
                .param("l", l as u64)
                .run(&i.to_string(), || {
                    let (left, right) = sides();
                    Ok((monomial_verdict(&ring, &left, &right), None))
                })
        })
        .collect()
}

fn colon_of_prime_bracket(nvars: usize, vars: &[usize], q: u32) -> MonomialIdeal {
    let p = MonomialIdeal::new(nvars, vars.iter().map(|&i| ExponentVector::unit(nvars, i)).collect());
    p.bracket_power(q).colon(&p)
}

/// `(I^[q] : I) = ∩_j (P_j^[q] : P_j)` over the minimal primes of a radical
/// ideal. The left side goes through Gröbner colons, the right side through
/// monomial colon and lcm rules.
pub fn check_colon_claim(subject: &Subject, e: u32) -> Result<ContainmentReport> {
    if e == 0 {
        return Err(AlgebraError::Precondition("e must be positive".into()));
    }
    let primes = subject.primes()?;
    let ring = subject.ring().clone();
    let q = ring.frobenius_modulus(e);
    let q32 = u32::try_from(q).map_err(|_| AlgebraError::Precondition(format!("q = {q} is too large")))?;
    Draft::new("claim", "(I^[q] : I) = ∩ (P^[q] : P)")
        .param("e", e as u64)
        .param("p", ring.characteristic())
        .param("q", q)
        .run(&subject.describe(), || {
            let left = frobenius_colon(&subject.ideal(), e)?;
            let n = ring.nvars();
            let right = primes
                .iter()
                .map(|s| colon_of_prime_bracket(n, s, q32))
                .reduce(|acc, c| acc.intersect(&c))
                .expect("at least one prime");
            let right = Ideal::from_monomial(&ring, &right)?;
            let verdict = match ideal_verdict(&left, &right)? {
                Verdict::Holds => ideal_verdict(&right, &left)?,
                fails => fails,
            };
            Ok((verdict, None))
        })
}

/// `(I^[q] : I) ⊆ I^(q)` for `R/I` F-pure with every minimal prime of
/// height at least two.
pub fn check_fpure_colon_inclusion(subject: &Subject, e: u32) -> Result<ContainmentReport> {
    if e == 0 {
        return Err(AlgebraError::Precondition("e must be positive".into()));
    }
    let primes = subject.primes()?;
    let ring = subject.ring().clone();
    let q = ring.frobenius_modulus(e);
    let q32 = u32::try_from(q).map_err(|_| AlgebraError::Precondition(format!("q = {q} is too large")))?;
    Draft::new("fpure-colon", "(I^[q] : I) ⊆ I^(q)")
        .param("e", e as u64)
        .param("p", ring.characteristic())
        .param("q", q)
        .run(&subject.describe(), || {
            if let Some(low) = primes.iter().find(|s| s.len() < 2) {
                let names: Vec<&str> = low.iter().map(|&i| ring.variables()[i].as_str()).collect();
                let reason = format!("minimal prime ({}) has height {}", names.join(", "), low.len());
                return Ok((Verdict::PreconditionUnmet(reason), None));
            }
            let note = match fedder_gate(&subject.ideal())? {
                Ok(note) => note,
                Err(v) => return Ok((v, None)),
            };
            let left = frobenius_colon(&subject.ideal(), e)?;
            let verdict = match subject {
                Subject::Squarefree(s) => {
                    // Generators of a monomial colon are monomials; test them
                    // against the prime constraints directly.
                    let mono = left.to_monomial()?;
                    match mono.generators().iter().find(|u| !s.symbolic_power_contains(u, q32)) {
                        None => Verdict::Holds,
                        Some(u) => Verdict::Fails(monomial_poly(&ring, u)),
                    }
                }
                Subject::General(_) => ideal_verdict(&left, &subject.symbolic_power(q32)?)?,
            };
            Ok((verdict, Some(note)))
        })
}

/// `I^(2) ⊆ m·I`.
pub fn check_conjecture(i: &SquarefreeIdeal) -> Result<ContainmentReport> {
    let ring = i.ring().clone();
    Draft::new("conjecture", "I^(2) ⊆ m·I").param("p", ring.characteristic()).param("h", i.height() as u64).run(
        &i.to_string(),
        || {
            let left = i.symbolic_power(2);
            let right = i.to_monomial().times_maximal();
            Ok((monomial_verdict(&ring, &left, &right), None))
        },
    )
}

#[derive(Clone, Debug)]
pub struct ScanOutcome {
    pub reports: Vec<ContainmentReport>,
    /// Corpus members dropped by the unmixed height-two filter.
    pub skipped: Vec<String>,
}

impl ScanOutcome {
    pub fn counterexamples(&self) -> impl Iterator<Item = &ContainmentReport> {
        self.reports.iter().filter(|r| matches!(r.verdict, Verdict::Fails(_)))
    }
}

/// [`check_conjecture`] over the unmixed height-two members of a corpus.
pub fn conjecture_scan(corpus: &Corpus) -> Result<ScanOutcome> {
    let corpus = corpus.clone().with_filter(Filter { unmixed: true, height: Some(2) });
    let (members, skipped) = corpus.split()?;
    let reports = sweep(&members, |i| Ok(vec![check_conjecture(i)?]))?;
    Ok(ScanOutcome { reports, skipped: skipped.iter().map(ToString::to_string).collect() })
}

/// Run `check` on every member in parallel; output order follows `members`.
pub fn sweep<F>(members: &[SquarefreeIdeal], check: F) -> Result<Vec<ContainmentReport>>
where
    F: Fn(&SquarefreeIdeal) -> Result<Vec<ContainmentReport>> + Sync + Send,
{
    let nested: Vec<Vec<ContainmentReport>> = members.par_iter().map(&check).collect::<Result<_>>()?;
    Ok(nested.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests;
