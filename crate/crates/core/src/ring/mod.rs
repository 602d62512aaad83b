//! Polynomial rings over prime fields.
//!
//! A [`Ring`] is `F_p[x_1, ..., x_n]` for a prime `p` below `2^32`, so every
//! product of two residues fits in a `u64`. Rings are shared through
//! [`RingRef`]; two rings are the same ring when characteristic and variable
//! names agree.

mod exponent;
mod order;
mod parse;
mod poly;

use std::fmt;
use std::sync::Arc;

pub use exponent::ExponentVector;
pub use order::{compare, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::Polynomial;

use crate::error::{AlgebraError, Result};

pub type RingRef = Arc<Ring>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    characteristic: u64,
    variables: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring {
    pub fn new<S: Into<String>>(characteristic: u64, variables: Vec<S>) -> Result<RingRef> {
        if characteristic >= 1 << 32 || !is_prime(characteristic) {
            return Err(AlgebraError::NotPrime(characteristic));
        }
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(AlgebraError::InvalidVariables("no variables".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            if !is_identifier(v) {
                return Err(AlgebraError::InvalidVariables(format!("`{v}` is not an identifier")));
            }
            if variables[..i].contains(v) {
                return Err(AlgebraError::InvalidVariables(format!("`{v}` declared twice")));
            }
        }
        Ok(Arc::new(Ring { characteristic, variables }))
    }

    /// Ring on `n` variables named `x, y, z, w, v, u` (or `x1..xn` past six).
    pub fn with_standard_names(characteristic: u64, n: usize) -> Result<RingRef> {
        const LETTERS: [&str; 6] = ["x", "y", "z", "w", "v", "u"];
        let names: Vec<String> = if n <= LETTERS.len() {
            LETTERS[..n].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=n).map(|i| format!("x{i}")).collect()
        };
        Ring::new(characteristic, names)
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// The ring with `names` prepended to the variable list.
    pub(crate) fn with_prefix(&self, names: &[&str]) -> RingRef {
        let mut variables: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        variables.extend(self.variables.iter().cloned());
        Arc::new(Ring { characteristic: self.characteristic, variables })
    }

    pub(crate) fn check_len(&self, u: &ExponentVector) -> Result<()> {
        if u.len() != self.nvars() {
            return Err(AlgebraError::LengthMismatch { expected: self.nvars(), found: u.len() });
        }
        Ok(())
    }

    // Residue arithmetic. Inputs are assumed reduced.

    pub fn reduce(&self, c: i64) -> u64 {
        c.rem_euclid(self.characteristic as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.characteristic
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.characteristic - b) % self.characteristic
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.characteristic - a) % self.characteristic
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.characteristic
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.characteristic;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.characteristic), "inverse of zero");
        self.pow(a, self.characteristic - 2)
    }

    /// `p^e`.
    pub fn frobenius_modulus(&self, e: u32) -> u64 {
        self.characteristic.pow(e)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]", self.characteristic, self.variables.join(", "))
    }
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
pub(crate) mod tests_support {
    use super::{ExponentVector, Polynomial, RingRef};
    use proptest::prelude::*;

    pub(crate) fn poly_strategy(
        ring: RingRef,
        max_deg: u32,
        max_terms: usize,
    ) -> impl Strategy<Value = Polynomial> + Clone {
        let n = ring.nvars();
        let pch = ring.characteristic();
        proptest::collection::vec((proptest::collection::vec(0..=max_deg, n), 0..pch), 0..=max_terms).prop_map(
            move |ts| Polynomial::from_terms(&ring, ts.into_iter().map(|(u, c)| (ExponentVector::new(u), c))).unwrap(),
        )
    }
}
