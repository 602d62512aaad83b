use std::fmt;
use std::sync::OnceLock;

use super::enumerate::{constraint_ideal, Constraint};
use super::ideal::monomial_string;
use super::{MonomialIdeal, SymbolicPolyhedron};
use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::ring::{ExponentVector, RingRef};

/// Proper, nonzero squarefree monomial ideal. Generators are supports of
/// squarefree monomials, stored as bitmasks and kept as an antichain.
#[derive(Clone)]
pub struct SquarefreeIdeal {
    ring: RingRef,
    masks: Vec<u64>,
    primes: OnceLock<Vec<Vec<usize>>>,
}

fn is_antichain(masks: &[u64]) -> bool {
    masks.iter().enumerate().all(|(i, &a)| masks.iter().enumerate().all(|(j, &b)| i == j || a & !b != 0))
}

fn mask_vars(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn sort_masks(masks: &mut [u64]) {
    masks.sort_by_key(|&m| (m.count_ones(), mask_vars(m)));
}

impl SquarefreeIdeal {
    /// Build from 0/1 exponent vectors forming an antichain.
    pub fn new(ring: &RingRef, gens: &[ExponentVector]) -> Result<Self> {
        let mut masks = Vec::with_capacity(gens.len());
        for g in gens {
            ring.check_len(g)?;
            if !g.is_squarefree() {
                return Err(AlgebraError::NotSquarefree(format!("{g:?} has an exponent above 1")));
            }
            masks.push(g.support_mask());
        }
        Self::from_masks(ring, masks)
    }

    pub fn from_masks(ring: &RingRef, mut masks: Vec<u64>) -> Result<Self> {
        if ring.nvars() > 64 {
            return Err(AlgebraError::NotSquarefree("more than 64 variables".into()));
        }
        if masks.is_empty() {
            return Err(AlgebraError::NotSquarefree("the zero ideal is excluded".into()));
        }
        if masks.contains(&0) {
            return Err(AlgebraError::NotSquarefree("the unit ideal is excluded".into()));
        }
        if masks.iter().any(|&m| ring.nvars() < 64 && m >> ring.nvars() != 0) {
            return Err(AlgebraError::LengthMismatch { expected: ring.nvars(), found: 64 });
        }
        sort_masks(&mut masks);
        masks.dedup();
        if !is_antichain(&masks) {
            return Err(AlgebraError::NotSquarefree("generators are not an antichain".into()));
        }
        Ok(SquarefreeIdeal { ring: ring.clone(), masks, primes: OnceLock::new() })
    }

    /// Route a general ideal here when all generators are squarefree
    /// monomials; redundant generators are dropped.
    pub fn from_ideal(ideal: &Ideal) -> Result<Self> {
        let m = ideal.to_monomial()?;
        if m.generators().iter().any(|g| !g.is_squarefree()) {
            return Err(AlgebraError::NotSquarefree("a generator has an exponent above 1".into()));
        }
        Self::from_masks(ideal.ring(), m.generators().iter().map(ExponentVector::support_mask).collect())
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn generators(&self) -> Vec<ExponentVector> {
        self.masks.iter().map(|&m| mask_to_exponent(self.nvars(), m)).collect()
    }

    pub fn to_monomial(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars(), self.generators())
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::from_monomial(&self.ring, &self.to_monomial()).expect("same variable count")
    }

    /// Minimal primes as sorted variable-index lists, ordered by size then lex.
    pub fn minimal_primes(&self) -> &[Vec<usize>] {
        self.primes.get_or_init(|| {
            let mut covers: Vec<u64> = minimal_transversals(&self.masks);
            sort_masks(&mut covers);
            covers.into_iter().map(mask_vars).collect()
        })
    }

    pub fn prime_masks(&self) -> Vec<u64> {
        self.minimal_primes().iter().map(|s| s.iter().fold(0u64, |m, &i| m | 1 << i)).collect()
    }

    /// The monomial prime generated by the variables in `vars`.
    pub fn prime_ideal(&self, vars: &[usize]) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars(), vars.iter().map(|&i| ExponentVector::unit(self.nvars(), i)).collect())
    }

    /// Smallest height of a minimal prime.
    pub fn height(&self) -> usize {
        self.minimal_primes().iter().map(Vec::len).min().unwrap()
    }

    pub fn big_height(&self) -> usize {
        self.minimal_primes().iter().map(Vec::len).max().unwrap()
    }

    pub fn is_unmixed(&self) -> bool {
        self.height() == self.big_height()
    }

    fn prime_rows(&self, threshold: u32) -> Vec<Constraint> {
        self.prime_masks().into_iter().map(|support| Constraint { support, threshold }).collect()
    }

    /// `I^(m) = ∩ P_j^m`, enumerated from the constraints `Σ_{i∈S_j} u_i ≥ m`.
    pub fn symbolic_power(&self, m: u32) -> MonomialIdeal {
        constraint_ideal(self.nvars(), &self.prime_rows(m))
    }

    /// Membership of `x^u` in `I^(m)` without enumerating generators.
    pub fn symbolic_power_contains(&self, u: &ExponentVector, m: u32) -> bool {
        self.minimal_primes().iter().all(|s| s.iter().map(|&i| u[i]).sum::<u32>() >= m)
    }

    pub fn symbolic_polyhedron(&self) -> SymbolicPolyhedron {
        SymbolicPolyhedron::new(self.nvars(), self.minimal_primes().to_vec())
    }

    /// `τ(k · I^(•))`: monomials `x^u` with `u + 1` interior to `k·SP(I)`.
    pub fn tau_asymptotic(&self, k: u32) -> MonomialIdeal {
        constraint_ideal(self.nvars(), &self.symbolic_polyhedron().interior_lattice_rows(k))
    }

    /// Largest `l` with `τ(l · I^(•)) = R`.
    pub fn tau_threshold(&self) -> u32 {
        self.height() as u32 - 1
    }
}

pub(crate) fn mask_to_exponent(n: usize, mask: u64) -> ExponentVector {
    ExponentVector::new((0..n).map(|i| (mask >> i & 1) as u32).collect())
}

/// Inclusion-minimal sets meeting every mask, by branching on the first
/// uncovered generator and pruning supersets of covers already found.
fn minimal_transversals(masks: &[u64]) -> Vec<u64> {
    fn go(masks: &[u64], current: u64, found: &mut Vec<u64>) {
        if found.iter().any(|&f| f & !current == 0) {
            return;
        }
        match masks.iter().find(|&&m| m & current == 0) {
            None => found.push(current),
            Some(&m) => {
                for i in 0..64 {
                    if m >> i & 1 == 1 {
                        go(masks, current | 1 << i, found);
                    }
                }
            }
        }
    }
    let mut found = Vec::new();
    go(masks, 0, &mut found);
    let minimal: Vec<u64> = found.iter().copied().filter(|&a| !found.iter().any(|&b| b != a && b & !a == 0)).collect();
    let mut out = minimal;
    out.sort_unstable();
    out.dedup();
    out
}

impl PartialEq for SquarefreeIdeal {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.masks == other.masks
    }
}

impl Eq for SquarefreeIdeal {}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, &m) in self.masks.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&monomial_string(&self.ring, &mask_to_exponent(self.nvars(), m)))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SquarefreeIdeal{self}")
    }
}
