//! Ideal files: `{"char": 2, "vars": ["x", "y"], "gens": ["x*y"]}` with
//! optional `primes` (lists of variable names) and `separator`.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sympow_core::containment::{GeneralIdeal, Subject};
use sympow_core::ring::parse_polynomial;
use sympow_core::{AlgebraError, Ideal, MonomialIdeal, Polynomial, Ring, RingRef, SquarefreeIdeal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub vars: Vec<String>,
    pub gens: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separator: Option<String>,
}

impl IdealFile {
    pub fn from_ideal(ideal: &Ideal) -> IdealFile {
        let ring = ideal.ring();
        IdealFile {
            characteristic: ring.characteristic(),
            vars: ring.variables().to_vec(),
            gens: ideal.generators().iter().map(ToString::to_string).collect(),
            primes: None,
            separator: None,
        }
    }

    pub fn from_monomial(ring: &RingRef, m: &MonomialIdeal) -> IdealFile {
        IdealFile::from_ideal(&Ideal::from_monomial(ring, m).expect("ring matches"))
    }
}

/// An input problem, reported with a position in the source file.
#[derive(Debug)]
pub struct InputError {
    pub path: String,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}: {}", self.path, self.line, self.column, self.message)
    }
}

/// A parsed ideal file.
#[derive(Debug)]
pub struct Loaded {
    pub ideal: Ideal,
    /// Set when the generators are squarefree monomials.
    pub squarefree: Option<SquarefreeIdeal>,
    pub primes: Option<Vec<Vec<usize>>>,
    pub separator: Option<Polynomial>,
}

impl Loaded {
    pub fn ring(&self) -> &RingRef {
        self.ideal.ring()
    }

    /// Squarefree inputs go to the monomial path; anything else needs the
    /// caller-attested primes (and a separator for symbolic powers).
    pub fn subject(&self) -> Result<Subject, AlgebraError> {
        if let Some(s) = &self.squarefree {
            return Ok(s.clone().into());
        }
        let primes = self.primes.clone().unwrap_or_default();
        Ok(GeneralIdeal::new(self.ideal.clone(), primes, self.separator.clone())?.into())
    }

    pub fn require_squarefree(&self) -> Result<&SquarefreeIdeal, AlgebraError> {
        self.squarefree
            .as_ref()
            .ok_or_else(|| AlgebraError::NotSquarefree("this command needs squarefree monomial generators".into()))
    }
}

/// 1-based line and column of byte offset `at` in `text`.
fn locate(text: &str, at: usize) -> (usize, usize) {
    let before = &text[..at.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

/// Position of the `index`-th occurrence of the JSON string `value` after
/// the key `key`, falling back to the start of the file.
fn position_of(text: &str, key: &str, value: &str, index: usize) -> (usize, usize) {
    let quoted = serde_json::to_string(value).unwrap_or_default();
    let start = text.find(&format!("\"{key}\"")).unwrap_or(0);
    let mut offset = start;
    for _ in 0..=index {
        match text[offset..].find(&quoted) {
            Some(i) => offset += i + 1,
            None => return locate(text, start),
        }
    }
    locate(text, offset)
}

pub fn load(path: &Path) -> Result<Loaded, InputError> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| InputError {
        path: name.clone(),
        line: 0,
        column: 0,
        message: e.to_string(),
    })?;
    parse(&name, &text)
}

pub fn parse(name: &str, text: &str) -> Result<Loaded, InputError> {
    let err = |(line, column): (usize, usize), message: String| InputError { path: name.into(), line, column, message };
    let file: IdealFile =
        serde_json::from_str(text).map_err(|e| err((e.line(), e.column()), format!("invalid ideal file: {e}")))?;
    let ring = Ring::new(file.characteristic, file.vars.clone())
        .map_err(|e| err(position_of(text, "char", "", 0), e.to_string()))?;
    if file.gens.is_empty() {
        return Err(err(position_of(text, "gens", "", 0), "gens must be nonempty".into()));
    }
    let mut gens = Vec::new();
    for (i, g) in file.gens.iter().enumerate() {
        let repeat = file.gens[..i].iter().filter(|h| *h == g).count();
        let (line, column) = position_of(text, "gens", g, repeat);
        let poly = parse_polynomial(&ring, g).map_err(|e| match e {
            AlgebraError::Parse { column: c, message } => err((line, column + c), format!("gens[{i}]: {message}")),
            other => err((line, column), format!("gens[{i}]: {other}")),
        })?;
        gens.push(poly);
    }
    let ideal = Ideal::new(&ring, gens).map_err(|e| err((1, 1), e.to_string()))?;
    let primes = match &file.primes {
        None => None,
        Some(lists) => {
            let mut out = Vec::new();
            for list in lists {
                let mut idx = Vec::new();
                for v in list {
                    let i = ring.variable_index(v).ok_or_else(|| {
                        err(position_of(text, "primes", v, 0), format!("prime uses undeclared variable {v:?}"))
                    })?;
                    idx.push(i);
                }
                out.push(idx);
            }
            Some(out)
        }
    };
    let separator = match &file.separator {
        None => None,
        Some(s) => {
            let (line, column) = position_of(text, "separator", s, 0);
            Some(parse_polynomial(&ring, s).map_err(|e| match e {
                AlgebraError::Parse { column: c, message } => err((line, column + c), format!("separator: {message}")),
                other => err((line, column), format!("separator: {other}")),
            })?)
        }
    };
    let squarefree = if ideal.is_monomial() { SquarefreeIdeal::from_ideal(&ideal).ok() } else { None };
    if let (Some(s), Some(attested)) = (&squarefree, &primes) {
        let normalize = |lists: &[Vec<usize>]| {
            let mut out: Vec<Vec<usize>> = lists
                .iter()
                .map(|l| {
                    let mut l = l.clone();
                    l.sort_unstable();
                    l.dedup();
                    l
                })
                .collect();
            out.sort();
            out.dedup();
            out
        };
        if normalize(attested) != normalize(s.minimal_primes()) {
            return Err(err(
                position_of(text, "primes", "", 0),
                format!("attested primes disagree with the minimal primes of the squarefree ideal {s}"),
            ));
        }
    }
    Ok(Loaded { ideal, squarefree, primes, separator })
}
