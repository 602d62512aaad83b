use std::fmt;

/// Dense exponent vector of a monomial. The derived `Ord` is plain lex and
/// only serves as a canonical storage order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// `self | other` as monomials.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference; `None` unless `other | self`.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(ExponentVector)
    }

    /// Componentwise `max(self - other, 0)`, the exponent of `x^self : x^other`.
    pub fn saturating_sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn scale(&self, q: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * q).collect())
    }

    pub fn floor_div(&self, q: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a / q).collect())
    }

    /// Every coordinate strictly below `q`, i.e. the monomial is outside `m^[q]`.
    pub fn all_below(&self, q: u64) -> bool {
        self.0.iter().all(|&a| (a as u64) < q)
    }

    pub fn coprime(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of the support (variables with positive exponent).
    pub fn support_mask(&self) -> u64 {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |m, (i, _)| m | (1 << i))
    }

    pub(crate) fn drop_prefix(&self, k: usize) -> ExponentVector {
        ExponentVector(self.0[k..].to_vec())
    }

    pub(crate) fn with_prefix(&self, prefix: &[u32]) -> ExponentVector {
        let mut v = prefix.to_vec();
        v.extend_from_slice(&self.0);
        ExponentVector(v)
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
