use std::collections::BTreeSet;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use sympow_core::containment::Variant;

#[derive(Parser, Debug)]
#[command(name = "sympow", version, about = "Symbolic powers, Frobenius powers and containment checks over F_p")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write output here instead of stdout.
    #[arg(short, long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

impl Cli {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Order {
    Lex,
    Grevlex,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum RecipeKind {
    /// Every proper squarefree monomial ideal.
    All,
    /// Edge ideals of graphs.
    Edge,
    /// Cover ideals of graphs.
    Cover,
}

#[derive(Args, Debug)]
pub struct FileArg {
    /// Ideal file (JSON).
    pub file: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Gröbner basis.
    Gb {
        #[command(flatten)]
        input: FileArg,
        #[arg(long, value_enum, default_value_t = Order::Grevlex)]
        order: Order,
    },
    /// Ideal membership of a polynomial.
    Member {
        #[command(flatten)]
        input: FileArg,
        /// Polynomial in the ring of the file.
        #[arg(long)]
        poly: String,
    },
    /// Colon ideal `(I : J)`.
    Colon { left: PathBuf, right: PathBuf },
    /// Intersection `I ∩ J`.
    Intersect { left: PathBuf, right: PathBuf },
    /// Saturation `(I : f^∞)`.
    Saturate {
        #[command(flatten)]
        input: FileArg,
        #[arg(long)]
        by: String,
    },
    /// Frobenius power `I^[p^e]`.
    Bracket {
        #[command(flatten)]
        input: FileArg,
        #[arg(short, long, default_value_t = 1)]
        e: u32,
    },
    /// Fedder's F-purity test at `q = p`.
    Fedder {
        #[command(flatten)]
        input: FileArg,
    },
    /// Symbolic power `I^(m)`.
    Symbolic {
        #[command(flatten)]
        input: FileArg,
        #[arg(short, long)]
        m: u32,
    },
    /// Test ideal `τ(a^t)` of a monomial ideal.
    Tau {
        #[command(flatten)]
        input: FileArg,
        /// Exponent, written `a/b` or `a`.
        #[arg(short, long)]
        t: Ratio<u64>,
        /// Largest `e` tried before giving up on stabilization.
        #[arg(long, default_value_t = 8)]
        e_max: u32,
    },
    /// Asymptotic test ideal `τ(k·I^(•))` of a squarefree ideal.
    TauAsym {
        #[command(flatten)]
        input: FileArg,
        #[arg(short, long)]
        k: u32,
    },
    /// Largest `l` with `τ(l·I^(•)) = R`.
    Threshold {
        #[command(flatten)]
        input: FileArg,
    },
    /// Check a main containment theorem.
    Verify {
        #[command(flatten)]
        input: FileArg,
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        #[arg(short, long, default_value_t = 1)]
        n: u32,
        #[arg(short, long, default_value_t = 0)]
        k: u32,
    },
    /// Check each link of the proof chain separately.
    Audit {
        #[command(flatten)]
        input: FileArg,
        #[arg(short, long, default_value_t = 1)]
        n: u32,
        #[arg(short, long, default_value_t = 0)]
        k: u32,
    },
    /// `(I^[q] : I) = ∩ (P^[q] : P)` over the minimal primes, and `(I^[q] : I) ⊆ I^(q)`.
    Claim {
        #[command(flatten)]
        input: FileArg,
        #[arg(short, long, default_value_t = 1)]
        e: u32,
    },
    /// Search a corpus for ideals with `I^(2) ⊄ m·I`.
    ConjectureScan {
        /// Number of variables.
        #[arg(long)]
        nvars: usize,
        /// Characteristic.
        #[arg(long = "char", default_value_t = 2)]
        characteristic: u64,
        #[arg(long, value_enum, default_value_t = RecipeKind::All)]
        recipe: RecipeKind,
        /// Check a seeded random sample of this size instead of every member.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse().map_err(|e: sympow_core::AlgebraError| e.to_string())
}

/// Accept `-variant` for `--variant` and so on: a single dash followed by a
/// known long option name is rewritten. Short flags like `-e` are untouched.
pub fn normalize_dashes<I: IntoIterator<Item = OsString>>(args: I) -> Vec<OsString> {
    let command = Cli::command();
    let mut longs = BTreeSet::new();
    let mut stack = vec![&command];
    while let Some(c) = stack.pop() {
        longs.extend(c.get_arguments().filter_map(|a| a.get_long()).map(str::to_owned));
        stack.extend(c.get_subcommands());
    }
    args.into_iter()
        .map(|arg| match arg.to_str() {
            Some(s) if s.len() > 2 && s.starts_with('-') && !s.starts_with("--") => {
                let (name, value) = match s[1..].split_once('=') {
                    Some((n, v)) => (n, Some(v)),
                    None => (&s[1..], None),
                };
                if longs.contains(name) {
                    match value {
                        Some(v) => format!("--{name}={v}").into(),
                        None => format!("--{name}").into(),
                    }
                } else {
                    arg
                }
            }
            _ => arg,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn norm(args: &[&str]) -> Vec<String> {
        normalize_dashes(args.iter().map(OsString::from)).into_iter().map(|a| a.into_string().unwrap()).collect()
    }

    #[test]
    fn single_dash_long_options() {
        assert_eq!(
            norm(&["sympow", "verify", "-variant", "A", "-n", "1", "t.json"]),
            ["sympow", "verify", "--variant", "A", "-n", "1", "t.json"]
        );
        assert_eq!(norm(&["sympow", "conjecture-scan", "-nvars=4"]), ["sympow", "conjecture-scan", "--nvars=4"]);
        assert_eq!(norm(&["sympow", "tau", "-e-max", "3"]), ["sympow", "tau", "--e-max", "3"]);
        // Unknown names and negative numbers pass through.
        assert_eq!(norm(&["-12", "-zz"]), ["-12", "-zz"]);
    }

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
