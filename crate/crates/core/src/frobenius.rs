//! Frobenius powers and the characteristic-`p` criteria built on them.
//!
//! * [`bracket_power`]: `I^[q]`, generator-wise (Frobenius is flat on a
//!   regular ring, so this is independent of the generating set).
//! * [`fedder_fpure`]: `R/I` is F-pure iff `(I^[p] : I) ⊄ m^[p]`.
//! * [`tau_triviality`]: `τ(k · a_•)` on `R/I` is trivial iff
//!   `c (I^[q] : I) a_{kq} ⊄ m^[q]` for some `q`; only the existential side
//!   can be confirmed in finite time.
//! * [`frobenius_root`] and [`tau_monomial_power`]: the ascending chain
//!   `(a^⌈t p^e⌉)^[1/p^e]` whose union is `τ(a^t)` for monomial `a`.
//!
//! Membership in `m^[q]` is termwise: a polynomial lies in `m^[q]` iff every
//! term has some exponent `≥ q`.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::error::{AlgebraError, Result};
use crate::groebner::{colon, ideal_member, Ideal};
use crate::monomial::{MonomialIdeal, SquarefreeIdeal};
use crate::ring::{same_ring, Polynomial};

/// `I^[q]` with `q = p^e`, kept symbolic until [`FrobeniusPower::ideal`] is called.
#[derive(Clone, Debug)]
pub struct FrobeniusPower {
    base: Ideal,
    e: u32,
}

impl FrobeniusPower {
    pub fn new(base: Ideal, e: u32) -> Result<Self> {
        if e == 0 {
            return Err(AlgebraError::Precondition("Frobenius exponent e must be positive".into()));
        }
        Ok(FrobeniusPower { base, e })
    }

    pub fn q(&self) -> u64 {
        self.base.ring().frobenius_modulus(self.e)
    }

    pub fn ideal(&self) -> Ideal {
        let gens = self.base.generators().iter().map(|g| g.frobenius_apply(self.e)).collect();
        Ideal::new(self.base.ring(), gens).expect("nonempty generators")
    }
}

pub fn bracket_power(i: &Ideal, e: u32) -> Result<Ideal> {
    Ok(FrobeniusPower::new(i.clone(), e)?.ideal())
}

/// First term of `f` outside `m^[q]`.
fn term_outside_bracket(f: &Polynomial, q: u64) -> bool {
    f.terms().keys().any(|u| u.all_below(q))
}

/// `(I^[q] : I)`; the zero ideal gives `(0 : 0) = R`.
pub fn frobenius_colon(i: &Ideal, e: u32) -> Result<Ideal> {
    colon(&bracket_power(i, e)?, i)
}

#[derive(Clone, Debug)]
pub struct FedderVerdict {
    pub fpure: bool,
    pub q: u64,
    /// `(I^[p] : I)`.
    pub colon: Ideal,
    /// A generator of the colon with a term outside `m^[p]`.
    pub witness: Option<Polynomial>,
}

/// Fedder's criterion at `q = p`.
pub fn fedder_fpure(i: &Ideal) -> Result<FedderVerdict> {
    if i.is_zero() {
        return Err(AlgebraError::Precondition("Fedder test needs a nonzero ideal".into()));
    }
    if !i.in_maximal() {
        return Err(AlgebraError::Precondition("Fedder test needs I ⊆ m (and I ≠ R)".into()));
    }
    let q = i.ring().characteristic();
    let j = frobenius_colon(i, 1)?;
    let witness = j.generators().iter().find(|g| term_outside_bracket(g, q)).cloned();
    Ok(FedderVerdict { fpure: witness.is_some(), q, colon: j, witness })
}

/// A graded family `m ↦ a_m`.
pub trait Filtration {
    fn level(&self, m: u64) -> Option<Ideal>;
}

impl Filtration for BTreeMap<u64, Ideal> {
    fn level(&self, m: u64) -> Option<Ideal> {
        self.get(&m).cloned()
    }
}

impl<F: Fn(u64) -> Option<Ideal>> Filtration for F {
    fn level(&self, m: u64) -> Option<Ideal> {
        self(m)
    }
}

/// The symbolic-power filtration `I^(•)` of a squarefree ideal.
pub struct SymbolicFiltration<'a>(pub &'a SquarefreeIdeal);

impl Filtration for SymbolicFiltration<'_> {
    fn level(&self, m: u64) -> Option<Ideal> {
        let m = u32::try_from(m).ok()?;
        let sp = if m == 0 { MonomialIdeal::unit(self.0.nvars()) } else { self.0.symbolic_power(m) };
        Ideal::from_monomial(self.0.ring(), &sp).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrivialityStatus {
    /// Non-containment verified at this `q`.
    Trivial { q: u64 },
    /// No witness for any `q ≤ p^e_max`.
    Inconclusive { e_max: u32 },
}

#[derive(Clone, Debug)]
pub struct TrialRecord {
    pub q: u64,
    /// A product `c·g·h` with a term outside `m^[q]`, when one exists.
    pub witness: Option<Polynomial>,
}

#[derive(Clone, Debug)]
pub struct TrivialityVerdict {
    pub status: TrivialityStatus,
    pub transcript: Vec<TrialRecord>,
}

impl TrivialityVerdict {
    pub fn is_trivial(&self) -> bool {
        matches!(self.status, TrivialityStatus::Trivial { .. })
    }
}

/// Test `c (I^[q] : I) a_{kq} ⊄ m^[q]` for `q = p, p^2, ..., p^e_max`.
pub fn tau_triviality(
    i: &Ideal,
    filtration: &dyn Filtration,
    k: u64,
    c: &Polynomial,
    e_max: u32,
) -> Result<TrivialityVerdict> {
    if !same_ring(i.ring(), c.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    if k == 0 || e_max == 0 {
        return Err(AlgebraError::Precondition("k and e_max must be positive".into()));
    }
    if ideal_member(c, i)? {
        return Err(AlgebraError::Precondition(format!("c = {c} lies in I")));
    }
    let ring = i.ring();
    let mut transcript = Vec::new();
    for e in 1..=e_max {
        let q = ring.frobenius_modulus(e);
        let level = filtration.level(k * q).ok_or(AlgebraError::MissingLevel(k * q))?;
        if !same_ring(level.ring(), ring) {
            return Err(AlgebraError::RingMismatch);
        }
        let j = frobenius_colon(i, e)?;
        let mut witness = None;
        'search: for g in j.generators() {
            let cg = c * g;
            if cg.is_zero() {
                continue;
            }
            for h in level.generators() {
                let prod = &cg * h;
                if term_outside_bracket(&prod, q) {
                    witness = Some(prod);
                    break 'search;
                }
            }
        }
        let found = witness.is_some();
        transcript.push(TrialRecord { q, witness });
        if found {
            return Ok(TrivialityVerdict { status: TrivialityStatus::Trivial { q }, transcript });
        }
    }
    Ok(TrivialityVerdict { status: TrivialityStatus::Inconclusive { e_max }, transcript })
}

/// `J^[1/q]` for monomial `J` and `q = p^e`.
pub fn frobenius_root(j: &MonomialIdeal, p: u64, e: u32) -> MonomialIdeal {
    j.frobenius_root(p.pow(e) as u32)
}

/// [`frobenius_root`] for an [`Ideal`]; rejects non-monomial input.
pub fn frobenius_root_ideal(j: &Ideal, e: u32) -> Result<Ideal> {
    let m = j.to_monomial()?;
    Ideal::from_monomial(j.ring(), &frobenius_root(&m, j.ring().characteristic(), e))
}

#[derive(Clone, Debug)]
pub struct TauChain {
    /// Last computed chain member; `τ(a^t)` when `stabilized`.
    pub ideal: MonomialIdeal,
    pub stabilized: bool,
    /// `τ_0, τ_1, ...` with `τ_e = (a^⌈t p^e⌉)^[1/p^e]`.
    pub chain: Vec<MonomialIdeal>,
}

fn ceil_mul(t: Ratio<u64>, q: u64) -> u64 {
    (t.numer() * q).div_ceil(*t.denom())
}

/// Consecutive repeats required by [`tau_monomial_power`] before the chain
/// is declared stable. A single repeat is not enough: for
/// `a = (x^2 y z^3, x^2 y^3 z^2)`, `t = 3/2`, `p = 2` the chain holds still at
/// `q = 2, 4` and grows again at `q = 8`.
pub const DEFAULT_CONFIRM: u32 = 2;

/// `τ(a^t)` for a monomial ideal as the stabilized Frobenius-root chain.
/// Stability is declared after [`DEFAULT_CONFIRM`] consecutive repeats.
pub fn tau_monomial_power(a: &MonomialIdeal, t: Ratio<u64>, p: u64, e_max: u32) -> Result<TauChain> {
    tau_monomial_power_confirmed(a, t, p, e_max, DEFAULT_CONFIRM)
}

/// [`tau_monomial_power`] declaring stability once `τ_e = τ_{e+1} = ... =
/// τ_{e+confirm}`, or as soon as the chain reaches `R`.
/// The ascending chain `τ_e = (a^⌈t p^e⌉)^[1/p^e]`, `e = 0, 1, ...`, computed
/// lazily. Every member is contained in `τ(a^t)`.
pub fn tau_approximants(a: &MonomialIdeal, t: Ratio<u64>, p: u64) -> impl Iterator<Item = MonomialIdeal> + '_ {
    (0u32..).map_while(move |e| p.checked_pow(e)).map(move |q| a.power(ceil_mul(t, q)).frobenius_root(q as u32))
}

pub fn tau_monomial_power_confirmed(
    a: &MonomialIdeal,
    t: Ratio<u64>,
    p: u64,
    e_max: u32,
    confirm: u32,
) -> Result<TauChain> {
    if a.is_zero() {
        return Err(AlgebraError::Precondition("τ(a^t) needs a nonzero ideal".into()));
    }
    if confirm == 0 {
        return Err(AlgebraError::Precondition("confirm must be positive".into()));
    }
    if *t.numer() == 0 {
        let unit = MonomialIdeal::unit(a.nvars());
        return Ok(TauChain { ideal: unit.clone(), stabilized: true, chain: vec![unit] });
    }
    let mut chain: Vec<MonomialIdeal> = Vec::new();
    let mut repeats = 0;
    for step in tau_approximants(a, t, p).take(e_max as usize + 1) {
        debug_assert!(chain.last().is_none_or(|prev| step.contains(prev)), "chain must ascend");
        repeats = if chain.last() == Some(&step) { repeats + 1 } else { 0 };
        let done = repeats >= confirm || step.is_unit();
        chain.push(step);
        if done {
            return Ok(TauChain { ideal: chain.last().unwrap().clone(), stabilized: true, chain });
        }
    }
    Ok(TauChain { ideal: chain.last().unwrap().clone(), stabilized: false, chain })
}
