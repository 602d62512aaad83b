use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{same_ring, ExponentVector, MonomialOrder, RingRef};
use crate::error::{AlgebraError, Result};

/// A polynomial over `F_p`, stored as a map from exponent vectors to nonzero
/// residues. Equal polynomials have identical term maps.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: BTreeMap<ExponentVector, u64>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &RingRef, c: i64) -> Self {
        Self::monomial(ring, ExponentVector::zeros(ring.nvars()), ring.reduce(c))
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, 1)
    }

    /// The `i`-th variable.
    pub fn variable(ring: &RingRef, i: usize) -> Self {
        Self::monomial(ring, ExponentVector::unit(ring.nvars(), i), 1)
    }

    /// `c * x^u`; panics if `u` has the wrong length.
    pub fn monomial(ring: &RingRef, u: ExponentVector, c: u64) -> Self {
        assert_eq!(u.len(), ring.nvars(), "exponent vector length");
        let mut terms = BTreeMap::new();
        let c = c % ring.characteristic();
        if c != 0 {
            terms.insert(u, c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I>(ring: &RingRef, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, u64)>,
    {
        let mut out = Polynomial::zero(ring);
        for (u, c) in terms {
            ring.check_len(&u)?;
            out.add_term(u, c % ring.characteristic());
        }
        Ok(out)
    }

    pub(crate) fn from_map_unchecked(ring: &RingRef, terms: BTreeMap<ExponentVector, u64>) -> Self {
        Polynomial { ring: ring.clone(), terms }
    }

    fn add_term(&mut self, u: ExponentVector, c: u64) {
        if c == 0 {
            return;
        }
        let p = &self.ring;
        match self.terms.entry(u) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = p.add(*e.get(), c);
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, u64> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(ExponentVector::is_zero)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    pub fn coefficient(&self, u: &ExponentVector) -> u64 {
        self.terms.get(u).copied().unwrap_or(0)
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&ExponentVector, u64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(u, &c)| (u, c)).collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&ExponentVector, u64)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)).map(|(u, &c)| (u, c))
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let (mut big, small) =
            if self.terms.len() >= other.terms.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (u, &c) in &small.terms {
            big.add_term(u.clone(), c);
        }
        Ok(big)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = Polynomial::zero(&self.ring);
        for (u, &a) in &self.terms {
            for (v, &b) in &other.terms {
                out.add_term(u.add(v), self.ring.mul(a, b));
            }
        }
        Ok(out)
    }

    fn neg_ref(&self) -> Polynomial {
        let r = &self.ring;
        Polynomial { ring: r.clone(), terms: self.terms.iter().map(|(u, &c)| (u.clone(), r.neg(c))).collect() }
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let c = c % self.ring.characteristic();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let r = &self.ring;
        Polynomial { ring: r.clone(), terms: self.terms.iter().map(|(u, &a)| (u.clone(), r.mul(a, c))).collect() }
    }

    /// Multiply by the monomial `c * x^u`.
    pub fn mul_term(&self, u: &ExponentVector, c: u64) -> Polynomial {
        let r = &self.ring;
        let c = c % r.characteristic();
        if c == 0 {
            return Polynomial::zero(r);
        }
        Polynomial { ring: r.clone(), terms: self.terms.iter().map(|(v, &a)| (v.add(u), r.mul(a, c))).collect() }
    }

    pub fn pow(&self, mut k: u64) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `f^(p^e)`, computed termwise since Frobenius is a ring map.
    pub fn frobenius_apply(&self, e: u32) -> Polynomial {
        let r = &self.ring;
        let q = r.frobenius_modulus(e);
        Polynomial {
            ring: r.clone(),
            terms: self.terms.iter().map(|(u, &c)| (u.scale(q as u32), r.pow(c, q))).collect(),
        }
    }

    /// Divide by the leading coefficient under `order`. Zero stays zero.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(self.ring.inv(c)),
            None => self.clone(),
        }
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    /// Panics on ring mismatch; use [`Polynomial::try_add`] otherwise.
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}

pub(crate) fn fmt_monomial(f: &mut fmt::Formatter<'_>, vars: &[String], u: &ExponentVector) -> fmt::Result {
    let mut first = true;
    for (i, &e) in u.as_slice().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&vars[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    /// Canonical text: terms in descending grevlex order, residues in `[0, p)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let vars = self.ring.variables();
        for (i, (u, c)) in self.sorted_terms(MonomialOrder::GrevLex).into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if u.is_zero() {
                write!(f, "{c}")?;
            } else {
                if c != 1 {
                    write!(f, "{c}*")?;
                }
                fmt_monomial(f, vars, u)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
