//! Monomial orders.

use std::cmp::Ordering;
use std::fmt;

use super::ExponentVector;
use crate::error::{AlgebraError, Result};

/// A monomial order on exponent vectors. Variables are ranked by position:
/// the first variable is the largest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    /// Elimination order for the first `k` variables: grevlex on the first
    /// block, ties broken by grevlex on the rest.
    BlockElim(usize),
}

fn cmp_lex(a: &[u32], b: &[u32]) -> Ordering {
    a.cmp(b)
}

fn cmp_grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        // Larger monomial has the smaller exponent at the last differing variable.
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub(crate) fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::GrevLex => cmp_grevlex(a, b),
            MonomialOrder::BlockElim(k) => {
                let k = k.min(a.len());
                cmp_grevlex(&a[..k], &b[..k]).then_with(|| cmp_grevlex(&a[k..], &b[k..]))
            }
        }
    }

    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        self.cmp_slices(a.as_slice(), b.as_slice())
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::BlockElim(k) => format!("elim({k})"),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Compare two exponent vectors under `order`.
pub fn compare(u: &ExponentVector, v: &ExponentVector, order: MonomialOrder) -> Result<Ordering> {
    if u.len() != v.len() {
        return Err(AlgebraError::LengthMismatch { expected: u.len(), found: v.len() });
    }
    Ok(order.cmp(u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn lex_prefers_first_variable() {
        assert_eq!(compare(&ev(&[1, 0]), &ev(&[0, 5]), MonomialOrder::Lex), Ok(Ordering::Greater));
    }

    #[test]
    fn grevlex_tie_break() {
        let g = MonomialOrder::GrevLex;
        assert_eq!(compare(&ev(&[2, 0]), &ev(&[1, 1]), g), Ok(Ordering::Greater));
        assert_eq!(compare(&ev(&[1, 1]), &ev(&[2, 0]), g), Ok(Ordering::Less));
        // x*z vs y^2 in three variables: y^2 > x*z under grevlex.
        assert_eq!(compare(&ev(&[1, 0, 1]), &ev(&[0, 2, 0]), g), Ok(Ordering::Less));
    }

    #[test]
    fn reflexive_and_length_checked() {
        for o in [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::BlockElim(1)] {
            assert_eq!(compare(&ev(&[3, 1, 4]), &ev(&[3, 1, 4]), o), Ok(Ordering::Equal));
        }
        assert!(compare(&ev(&[1]), &ev(&[1, 2]), MonomialOrder::Lex).is_err());
    }

    #[test]
    fn block_order_eliminates() {
        let o = MonomialOrder::BlockElim(1);
        // t beats any power of the remaining variables.
        assert_eq!(o.cmp(&ev(&[1, 0, 0]), &ev(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&ev(&[0, 2, 0]), &ev(&[0, 1, 1])), Ordering::Greater);
    }

    fn order_strategy() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::GrevLex),
            (0usize..=3).prop_map(MonomialOrder::BlockElim),
        ]
    }

    proptest! {
        #[test]
        fn multiplicative_and_well_ordered(
            o in order_strategy(),
            u in proptest::collection::vec(0u32..6, 3),
            v in proptest::collection::vec(0u32..6, 3),
            w in proptest::collection::vec(0u32..6, 3),
        ) {
            let (u, v, w) = (ev(&u), ev(&v), ev(&w));
            prop_assert_eq!(o.cmp(&u, &v), o.cmp(&u.add(&w), &v.add(&w)));
            prop_assert_ne!(o.cmp(&u, &ExponentVector::zeros(3)), Ordering::Less);
            prop_assert_eq!(o.cmp(&u, &v), o.cmp(&v, &u).reverse());
            if o.cmp(&u, &v) == Ordering::Equal {
                prop_assert_eq!(&u, &v);
            }
        }
    }
}
