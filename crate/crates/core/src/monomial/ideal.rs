use std::collections::HashSet;
use std::fmt::Write as _;

use crate::ring::{ExponentVector, Ring};

/// A monomial ideal, held by its unique minimal generating set.
///
/// Generators are sorted by total degree, then lex-descending (`x` before
/// `y`). The zero ideal has no generators; the unit ideal is generated by
/// the zero exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<ExponentVector>,
}

fn minimalize(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    // Distinct vectors of equal degree never divide each other, so only
    // strictly lower-degree survivors need checking.
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    let (mut lower, mut degree) = (0, None);
    for u in gens {
        let d = u.degree();
        if degree != Some(d) {
            lower = kept.len();
            degree = Some(d);
        }
        if !kept[..lower].iter().any(|g| g.divides(&u)) {
            kept.push(u);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<ExponentVector>) -> Self {
        debug_assert!(gens.iter().all(|g| g.len() == nvars));
        MonomialIdeal { nvars, gens: minimalize(gens) }
    }

    pub fn from_exponents(nvars: usize, gens: &[&[u32]]) -> Self {
        Self::new(nvars, gens.iter().map(|g| ExponentVector::new(g.to_vec())).collect())
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![ExponentVector::zeros(nvars)] }
    }

    /// `(x_1, ..., x_n)`.
    pub fn maximal(nvars: usize) -> Self {
        Self::new(nvars, (0..nvars).map(|i| ExponentVector::unit(nvars, i)).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(ExponentVector::is_zero)
    }

    pub fn contains_monomial(&self, u: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// A minimal generator of `other` missing from `self`, if any.
    pub fn first_non_member<'a>(&self, other: &'a MonomialIdeal) -> Option<&'a ExponentVector> {
        other.gens.iter().find(|u| !self.contains_monomial(u))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &MonomialIdeal) -> bool {
        self.first_non_member(other).is_none()
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::new(self.nvars, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        // Powers produce heavy collisions; dedup before minimalizing.
        let mut gens = HashSet::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.insert(a.add(b));
            }
        }
        Self::new(self.nvars, gens.into_iter().collect())
    }

    pub fn power(&self, mut k: u64) -> MonomialIdeal {
        let mut base = self.clone();
        let mut acc = MonomialIdeal::unit(self.nvars);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.product(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.product(&base);
            }
        }
        acc
    }

    /// `I ∩ J`: pairwise lcms, minimalized.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Self::new(self.nvars, gens)
    }

    /// `(I : x^u)`.
    pub fn colon_monomial(&self, u: &ExponentVector) -> MonomialIdeal {
        Self::new(self.nvars, self.gens.iter().map(|g| g.saturating_sub(u)).collect())
    }

    /// `(I : J)` as the intersection of `(I : x^v)` over generators of `J`.
    pub fn colon(&self, other: &MonomialIdeal) -> MonomialIdeal {
        other
            .gens
            .iter()
            .map(|v| self.colon_monomial(v))
            .reduce(|a, b| a.intersect(&b))
            .unwrap_or_else(|| MonomialIdeal::unit(self.nvars))
    }

    /// `I^[q]`: every generator raised to the `q`-th power.
    pub fn bracket_power(&self, q: u32) -> MonomialIdeal {
        Self::new(self.nvars, self.gens.iter().map(|g| g.scale(q)).collect())
    }

    /// Smallest monomial ideal `K` with `I ⊆ K^[q]`: componentwise floors.
    pub fn frobenius_root(&self, q: u32) -> MonomialIdeal {
        Self::new(self.nvars, self.gens.iter().map(|g| g.floor_div(q)).collect())
    }

    /// `m * I`.
    pub fn times_maximal(&self) -> MonomialIdeal {
        self.product(&MonomialIdeal::maximal(self.nvars))
    }

    /// Text form `(x*y, z^2)` using the ring's variable names.
    pub fn display_with(&self, ring: &Ring) -> String {
        if self.is_zero() {
            return "(0)".into();
        }
        let mut s = String::from("(");
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            s.push_str(&monomial_string(ring, g));
        }
        s.push(')');
        s
    }
}

pub(crate) fn monomial_string(ring: &Ring, u: &ExponentVector) -> String {
    let mut s = String::new();
    for (i, &e) in u.as_slice().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(&ring.variables()[i]);
        if e > 1 {
            let _ = write!(s, "^{e}");
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mi(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens)
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(mi(2, &[&[1, 0]]).intersect(&mi(2, &[&[0, 1]])), mi(2, &[&[1, 1]]));
        // lcms are x^2*y and x*y; x*y divides x^2*y.
        assert_eq!(mi(2, &[&[2, 0], &[1, 1]]).intersect(&mi(2, &[&[0, 1]])), mi(2, &[&[1, 1]]));
        let i = mi(3, &[&[1, 1, 0], &[0, 0, 2]]);
        assert_eq!(i.intersect(&MonomialIdeal::unit(3)), i);
    }

    #[test]
    fn minimal_generators_are_canonical() {
        let a = mi(2, &[&[1, 1], &[2, 1], &[1, 1], &[0, 3]]);
        assert_eq!(a.generators().len(), 2);
        assert_eq!(a, mi(2, &[&[0, 3], &[1, 1]]));
    }

    #[test]
    fn frobenius_root_examples() {
        assert_eq!(mi(1, &[&[5]]).frobenius_root(2), mi(1, &[&[2]]));
        for q in [2u32, 3, 4] {
            assert!(MonomialIdeal::maximal(2).power(q as u64).frobenius_root(q).is_unit());
            assert_eq!(MonomialIdeal::maximal(2).bracket_power(q).frobenius_root(q), MonomialIdeal::maximal(2));
        }
    }

    #[test]
    fn colon_examples() {
        let i = mi(2, &[&[1, 1]]);
        assert_eq!(i.colon_monomial(&ExponentVector::new(vec![1, 0])), mi(2, &[&[0, 1]]));
        let j = mi(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(j.colon(&mi(2, &[&[1, 0]])), MonomialIdeal::maximal(2));
        assert!(j.colon(&j).is_unit());
    }

    fn monomial_ideal_strategy(n: usize) -> impl Strategy<Value = MonomialIdeal> {
        proptest::collection::vec(proptest::collection::vec(0u32..4, n), 1..5)
            .prop_map(move |gs| MonomialIdeal::new(n, gs.into_iter().map(ExponentVector::new).collect()))
    }

    proptest! {
        #[test]
        fn root_inverts_bracket_power(k in monomial_ideal_strategy(3), q in 2u32..6) {
            prop_assert_eq!(k.bracket_power(q).frobenius_root(q), k);
        }

        #[test]
        fn bracket_power_commutes_with_intersection(
            a in monomial_ideal_strategy(3), b in monomial_ideal_strategy(3), q in 2u32..5
        ) {
            prop_assert_eq!(a.intersect(&b).bracket_power(q), a.bracket_power(q).intersect(&b.bracket_power(q)));
        }

        #[test]
        fn lattice_identities(a in monomial_ideal_strategy(3), b in monomial_ideal_strategy(3)) {
            let meet = a.intersect(&b);
            prop_assert!(a.contains(&meet) && b.contains(&meet));
            prop_assert!(meet.contains(&a.product(&b)));
            let q = a.colon(&b);
            prop_assert!(q.contains(&a));
            prop_assert!(a.contains(&q.product(&b)));
            prop_assert_eq!(a.power(3), a.product(&a).product(&a));
        }
    }
}
