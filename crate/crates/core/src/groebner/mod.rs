//! Ideals of polynomial rings and the Gröbner-basis operations on them.
//!
//! Every ideal caches its reduced graded-reverse-lex basis on first use.
//! Intersections and saturations go through block elimination orders on an
//! auxiliary ring with one extra leading variable.

mod engine;

use std::fmt;
use std::sync::OnceLock;

use engine::{Ctx, Raw};

use crate::error::{AlgebraError, Result};
use crate::monomial::MonomialIdeal;
use crate::ring::{parse_polynomial, same_ring, ExponentVector, MonomialOrder, Polynomial, RingRef};

/// A reduced, monic Gröbner basis, sorted by ascending leading monomial.
#[derive(Clone, Debug)]
pub struct GBasis {
    ring: RingRef,
    order: MonomialOrder,
    raw: Vec<Raw>,
    elements: Vec<Polynomial>,
}

impl GBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<ExponentVector> {
        self.raw.iter().map(|g| g.last().unwrap().0.clone()).collect()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.raw.len() == 1 && self.raw[0].len() == 1 && self.raw[0][0].0.is_zero()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(&self.ring, f.ring()) {
            return Err(AlgebraError::RingMismatch);
        }
        let ctx = Ctx::new(&self.ring, self.order);
        let r = ctx.reduce(ctx.raw_of(f), &self.raw);
        Ok(ctx.poly_of(&self.ring, &r))
    }
}

/// An ideal given by generators, with a lazily computed grevlex basis.
#[derive(Clone)]
pub struct Ideal {
    ring: RingRef,
    generators: Vec<Polynomial>,
    gb: OnceLock<GBasis>,
}

impl Ideal {
    pub fn new(ring: &RingRef, generators: Vec<Polynomial>) -> Result<Ideal> {
        if generators.is_empty() {
            return Err(AlgebraError::EmptyGenerators);
        }
        if generators.iter().any(|g| !same_ring(ring, g.ring())) {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(Ideal { ring: ring.clone(), generators, gb: OnceLock::new() })
    }

    /// Parse each string with the polynomial grammar.
    pub fn parse(ring: &RingRef, generators: &[&str]) -> Result<Ideal> {
        let gens = generators.iter().map(|s| parse_polynomial(ring, s)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &RingRef) -> Ideal {
        Ideal::new(ring, vec![Polynomial::zero(ring)]).unwrap()
    }

    pub fn unit(ring: &RingRef) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &RingRef) -> Ideal {
        Ideal::new(ring, (0..ring.nvars()).map(|i| Polynomial::variable(ring, i)).collect()).unwrap()
    }

    pub fn from_monomial(ring: &RingRef, m: &MonomialIdeal) -> Result<Ideal> {
        if m.nvars() != ring.nvars() {
            return Err(AlgebraError::LengthMismatch { expected: ring.nvars(), found: m.nvars() });
        }
        if m.is_zero() {
            return Ok(Ideal::zero(ring));
        }
        Ideal::new(ring, m.generators().iter().map(|u| Polynomial::monomial(ring, u.clone(), 1)).collect())
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    pub fn is_unit(&self) -> bool {
        if self.generators.iter().any(|g| !g.is_zero() && g.is_constant()) {
            return true;
        }
        !self.is_zero() && self.groebner_basis().is_unit()
    }

    /// Every generator has zero constant term, i.e. the ideal sits inside `m`.
    pub fn in_maximal(&self) -> bool {
        let zero = ExponentVector::zeros(self.ring.nvars());
        self.generators.iter().all(|g| g.coefficient(&zero) == 0)
    }

    /// Generated by monomials (up to the zero generator).
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.is_zero() || g.is_monomial())
    }

    /// The monomial ideal with the same generators, if every generator is a
    /// monomial.
    pub fn to_monomial(&self) -> Result<MonomialIdeal> {
        if !self.is_monomial() {
            return Err(AlgebraError::NotMonomial);
        }
        Ok(MonomialIdeal::new(
            self.ring.nvars(),
            self.generators.iter().filter_map(|g| g.terms().keys().next().cloned()).collect(),
        ))
    }

    /// Cached reduced basis under graded reverse lex.
    pub fn groebner_basis(&self) -> &GBasis {
        self.gb.get_or_init(|| compute_basis(&self.ring, &self.generators, MonomialOrder::GrevLex))
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        ideal_member(f, self)
    }

    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        ideal_contains(self, other)
    }

    /// Ideal equality, decided by comparing reduced bases.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, other.ring()) {
            return Err(AlgebraError::RingMismatch);
        }
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ok(true),
            (true, false) | (false, true) => return Ok(false),
            _ => {}
        }
        Ok(self.groebner_basis().elements() == other.groebner_basis().elements())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, other.ring()) {
            return Err(AlgebraError::RingMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, other.ring()) {
            return Err(AlgebraError::RingMismatch);
        }
        let mut gens = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                let h = f * g;
                if !h.is_zero() && !gens.contains(&h) {
                    gens.push(h);
                }
            }
        }
        if gens.is_empty() {
            return Ok(Ideal::zero(&self.ring));
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// Drop zero and duplicate generators.
    fn cleaned(&self) -> Ideal {
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in &self.generators {
            if !g.is_zero() && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        if gens.is_empty() {
            Ideal::zero(&self.ring)
        } else {
            Ideal::new(&self.ring, gens).unwrap()
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

fn compute_basis(ring: &RingRef, gens: &[Polynomial], order: MonomialOrder) -> GBasis {
    let ctx = Ctx::new(ring, order);
    let raw = ctx.groebner(gens.iter().map(|g| ctx.raw_of(g)).collect());
    let elements = raw.iter().map(|g| ctx.poly_of(ring, g)).collect();
    GBasis { ring: ring.clone(), order, raw, elements }
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> GBasis {
    if order == MonomialOrder::GrevLex {
        return ideal.groebner_basis().clone();
    }
    compute_basis(&ideal.ring, &ideal.generators, order)
}

/// Remainder of `f` on division by `basis`.
pub fn normal_form(f: &Polynomial, basis: &GBasis) -> Result<Polynomial> {
    basis.normal_form(f)
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if !same_ring(f.ring(), ideal.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    if f.is_zero() {
        return Ok(true);
    }
    if ideal.is_zero() {
        return Ok(false);
    }
    Ok(ideal.groebner_basis().normal_form(f)?.is_zero())
}

/// `sub ⊆ sup`, checked generator by generator.
pub fn ideal_contains(sup: &Ideal, sub: &Ideal) -> Result<bool> {
    if !same_ring(sup.ring(), sub.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    for g in sub.generators() {
        if !ideal_member(g, sup)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Embed `f` into the ring with `k` extra leading variables, multiplying by
/// `x^prefix` on those variables.
fn lift(ext: &RingRef, f: &Polynomial, prefix: &[u32]) -> Polynomial {
    Polynomial::from_map_unchecked(ext, f.terms().iter().map(|(u, &c)| (u.with_prefix(prefix), c)).collect())
}

/// Gröbner-eliminate the first `k` variables of `ext` and project back to `ring`.
fn eliminate(ring: &RingRef, ext: &RingRef, k: usize, gens: &[Polynomial]) -> Ideal {
    let basis = compute_basis(ext, gens, MonomialOrder::BlockElim(k));
    let kept: Vec<Polynomial> = basis
        .elements()
        .iter()
        .filter(|g| g.terms().keys().all(|u| u.as_slice()[..k].iter().all(|&e| e == 0)))
        .map(|g| Polynomial::from_map_unchecked(ring, g.terms().iter().map(|(u, &c)| (u.drop_prefix(k), c)).collect()))
        .collect();
    if kept.is_empty() {
        Ideal::zero(ring)
    } else {
        Ideal::new(ring, kept).unwrap()
    }
}

/// `I ∩ J` by eliminating `t` from `t*I + (1 - t)*J`.
pub fn ideal_intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if !same_ring(i.ring(), j.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    let ring = i.ring();
    let (i, j) = (i.cleaned(), j.cleaned());
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let ext = ring.with_prefix(&["_t"]);
    let mut gens = Vec::new();
    for f in i.generators() {
        gens.push(lift(&ext, f, &[1]));
    }
    for g in j.generators() {
        let g0 = lift(&ext, g, &[0]);
        let g1 = lift(&ext, g, &[1]);
        gens.push(&g0 - &g1);
    }
    Ok(eliminate(ring, &ext, 1, &gens))
}

/// Exact division `f / g`; errors if `g` does not divide `f`.
fn exact_quotient(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let ctx = Ctx::new(f.ring(), MonomialOrder::GrevLex);
    let (q, r) = ctx.divide(ctx.raw_of(f), &ctx.raw_of(g));
    if !r.is_empty() {
        return Err(AlgebraError::Internal(format!("{g} does not divide {f}")));
    }
    Ok(Polynomial::from_map_unchecked(f.ring(), q.into_iter().collect()))
}

/// `(I : f)`, from the generators of `I ∩ (f)` divided by `f`.
pub fn colon_poly(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if !same_ring(i.ring(), f.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    let ring = i.ring();
    if f.is_zero() {
        return Ok(Ideal::unit(ring));
    }
    if i.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let principal = Ideal::new(ring, vec![f.clone()])?;
    let meet = ideal_intersect(i, &principal)?;
    let gens = meet.generators().iter().map(|g| exact_quotient(g, f)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// `(I : J) = ∩ (I : f)` over the generators `f` of `J`.
pub fn colon(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if !same_ring(i.ring(), j.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    let j = j.cleaned();
    if j.is_zero() {
        return Ok(Ideal::unit(i.ring()));
    }
    let mut acc: Option<Ideal> = None;
    for f in j.generators() {
        let c = colon_poly(i, f)?;
        acc = Some(match acc {
            None => c,
            Some(a) => ideal_intersect(&a, &c)?,
        });
    }
    Ok(acc.unwrap())
}

/// `(I : f^∞)` by eliminating `z` from `I + (z*f - 1)`.
pub fn saturate(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if !same_ring(i.ring(), f.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    if f.is_zero() {
        return Err(AlgebraError::Precondition("saturation by zero".into()));
    }
    let ring = i.ring();
    let ext = ring.with_prefix(&["_z"]);
    let mut gens: Vec<Polynomial> = i.generators().iter().map(|g| lift(&ext, g, &[0])).collect();
    let zf = lift(&ext, f, &[1]);
    gens.push(&zf - &Polynomial::one(&ext));
    Ok(eliminate(ring, &ext, 1, &gens))
}
