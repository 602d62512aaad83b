//! Buchberger's algorithm on raw term lists.
//!
//! A raw polynomial is a `Vec<Term>` sorted in *ascending* order under the
//! active monomial order, so the leading term is the last element.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::ring::{ExponentVector, MonomialOrder, Polynomial, Ring, RingRef};

pub(crate) type Term = (ExponentVector, u64);
pub(crate) type Raw = Vec<Term>;

#[derive(Clone, Copy)]
pub(crate) struct Ctx<'a> {
    pub ring: &'a Ring,
    pub order: MonomialOrder,
}

impl<'a> Ctx<'a> {
    pub fn new(ring: &'a Ring, order: MonomialOrder) -> Self {
        Ctx { ring, order }
    }

    fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn raw_of(&self, f: &Polynomial) -> Raw {
        let mut v: Raw = f.terms().iter().map(|(u, &c)| (u.clone(), c)).collect();
        v.sort_by(|a, b| self.cmp(&a.0, &b.0));
        v
    }

    pub fn poly_of(&self, ring: &RingRef, f: &[Term]) -> Polynomial {
        Polynomial::from_map_unchecked(ring, f.iter().cloned().collect())
    }

    pub fn monic(&self, mut f: Raw) -> Raw {
        if let Some(&(_, lc)) = f.last() {
            if lc != 1 {
                let inv = self.ring.inv(lc);
                for t in f.iter_mut() {
                    t.1 = self.ring.mul(t.1, inv);
                }
            }
        }
        f
    }

    /// `f - c * x^m * g`.
    pub fn sub_mul(&self, f: &[Term], c: u64, m: &ExponentVector, g: &[Term]) -> Raw {
        let r = self.ring;
        let neg_c = r.neg(c % r.characteristic());
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut i = 0;
        let mut j = 0;
        let mut shifted: Option<ExponentVector> = g.first().map(|t| t.0.add(m));
        while i < f.len() || j < g.len() {
            let ord = match (&shifted, f.get(i)) {
                (None, _) => Ordering::Less,
                (Some(_), None) => Ordering::Greater,
                (Some(s), Some(t)) => self.cmp(&t.0, s),
            };
            match ord {
                Ordering::Less => {
                    out.push(f[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let s = shifted.take().unwrap();
                    out.push((s, r.mul(g[j].1, neg_c)));
                    j += 1;
                    shifted = g.get(j).map(|t| t.0.add(m));
                }
                Ordering::Equal => {
                    let s = shifted.take().unwrap();
                    let v = r.add(f[i].1, r.mul(g[j].1, neg_c));
                    if v != 0 {
                        out.push((s, v));
                    }
                    i += 1;
                    j += 1;
                    shifted = g.get(j).map(|t| t.0.add(m));
                }
            }
        }
        out
    }

    /// Full reduction of `f` modulo monic `basis`.
    pub fn reduce(&self, f: Raw, basis: &[Raw]) -> Raw {
        let mut p = f;
        let mut rem: Vec<Term> = Vec::new();
        while let Some((lm, lc)) = p.last().cloned() {
            let reducer = basis.iter().find(|g| g.last().is_some_and(|t| t.0.divides(&lm)));
            match reducer {
                Some(g) => {
                    let shift = lm.checked_sub(&g.last().unwrap().0).unwrap();
                    p = self.sub_mul(&p, lc, &shift, g);
                }
                None => {
                    p.pop();
                    rem.push((lm, lc));
                }
            }
        }
        rem.reverse();
        rem
    }

    /// Quotient and remainder of `f` divided by the single polynomial `g`.
    pub fn divide(&self, f: Raw, g: &[Term]) -> (Raw, Raw) {
        let (glm, glc) = g.last().cloned().expect("division by zero polynomial");
        let ginv = self.ring.inv(glc);
        let mut p = f;
        let mut quot: Vec<Term> = Vec::new();
        let mut rem: Vec<Term> = Vec::new();
        while let Some((lm, lc)) = p.last().cloned() {
            match lm.checked_sub(&glm) {
                Some(shift) => {
                    let c = self.ring.mul(lc, ginv);
                    p = self.sub_mul(&p, c, &shift, g);
                    quot.push((shift, c));
                }
                None => {
                    p.pop();
                    rem.push((lm, lc));
                }
            }
        }
        // Quotient terms are produced in descending order and never collide.
        quot.reverse();
        rem.reverse();
        (quot, rem)
    }

    fn spoly(&self, f: &[Term], g: &[Term], lcm: &ExponentVector) -> Raw {
        let (fm, _) = f.last().unwrap();
        let (gm, _) = g.last().unwrap();
        let a = lcm.checked_sub(fm).unwrap();
        let b = lcm.checked_sub(gm).unwrap();
        // Both inputs are monic.
        let af: Raw = f.iter().map(|(u, c)| (u.add(&a), *c)).collect();
        self.sub_mul(&af, 1, &b, g)
    }

    /// Reduced Gröbner basis of the ideal generated by `gens`, sorted by
    /// ascending leading monomial.
    pub fn groebner(&self, gens: Vec<Raw>) -> Vec<Raw> {
        let mut basis: Vec<Raw> = gens.into_iter().filter(|f| !f.is_empty()).map(|f| self.monic(f)).collect();
        basis.sort_by(|a, b| self.cmp(&a.last().unwrap().0, &b.last().unwrap().0).then_with(|| a.len().cmp(&b.len())));
        basis.dedup();

        let key = |i: usize, j: usize| if i < j { (i, j) } else { (j, i) };
        let mut pairs: Vec<(usize, usize, ExponentVector)> = Vec::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        for j in 0..basis.len() {
            for i in 0..j {
                let l = basis[i].last().unwrap().0.lcm(&basis[j].last().unwrap().0);
                pairs.push((i, j, l));
                pending.insert((i, j));
            }
        }

        while !pairs.is_empty() {
            // Normal strategy: smallest lcm first, ties by index.
            let mut best = 0;
            for (idx, pr) in pairs.iter().enumerate().skip(1) {
                let b = &pairs[best];
                let ord = self.cmp(&pr.2, &b.2).then_with(|| (pr.1, pr.0).cmp(&(b.1, b.0)));
                if ord == Ordering::Less {
                    best = idx;
                }
            }
            let (i, j, lcm) = pairs.swap_remove(best);
            pending.remove(&(i, j));

            let lmi = &basis[i].last().unwrap().0;
            let lmj = &basis[j].last().unwrap().0;
            if lmi.coprime(lmj) {
                continue;
            }
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].last().unwrap().0.divides(&lcm)
                    && !pending.contains(&key(i, k))
                    && !pending.contains(&key(j, k))
            });
            if chain {
                continue;
            }

            let s = self.spoly(&basis[i], &basis[j], &lcm);
            let r = self.reduce(s, &basis);
            if r.is_empty() {
                continue;
            }
            let r = self.monic(r);
            let t = basis.len();
            let lmr = r.last().unwrap().0.clone();
            basis.push(r);
            for i in 0..t {
                let l = basis[i].last().unwrap().0.lcm(&lmr);
                pairs.push((i, t, l));
                pending.insert((i, t));
            }
        }
        self.interreduce(basis)
    }

    /// Minimalize leading monomials and tail-reduce a Gröbner basis.
    fn interreduce(&self, mut basis: Vec<Raw>) -> Vec<Raw> {
        basis.sort_by(|a, b| self.cmp(&a.last().unwrap().0, &b.last().unwrap().0));
        let mut kept: Vec<Raw> = Vec::new();
        for g in basis {
            let lm = &g.last().unwrap().0;
            if !kept.iter().any(|h| h.last().unwrap().0.divides(lm)) {
                kept.push(g);
            }
        }
        let mut out = Vec::with_capacity(kept.len());
        for idx in 0..kept.len() {
            let others: Vec<Raw> = kept.iter().enumerate().filter(|(k, _)| *k != idx).map(|(_, g)| g.clone()).collect();
            out.push(self.reduce(kept[idx].clone(), &others));
        }
        out.sort_by(|a, b| self.cmp(&a.last().unwrap().0, &b.last().unwrap().0));
        out
    }
}
