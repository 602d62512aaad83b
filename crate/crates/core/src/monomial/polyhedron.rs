use num_rational::Ratio;

use super::enumerate::Constraint;

pub type Rational = Ratio<i64>;

/// H-representation of the symbolic polyhedron of a squarefree ideal:
/// `v ≥ 0` and `Σ_{i∈S_j} v_i ≥ 1` for every minimal prime `S_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicPolyhedron {
    nvars: usize,
    rows: Vec<Vec<usize>>,
}

impl SymbolicPolyhedron {
    pub(crate) fn new(nvars: usize, rows: Vec<Vec<usize>>) -> Self {
        SymbolicPolyhedron { nvars, rows }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// One variable-index list per minimal prime.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    fn row_sum(row: &[usize], point: &[Rational]) -> Rational {
        row.iter().map(|&i| point[i]).sum()
    }

    pub fn contains(&self, point: &[Rational]) -> bool {
        assert_eq!(point.len(), self.nvars);
        point.iter().all(|v| *v >= Rational::from_integer(0))
            && self.rows.iter().all(|r| Self::row_sum(r, point) >= Rational::from_integer(1))
    }

    /// Strict membership in the interior of `scale * P`. A valid inequality is
    /// strict at every interior point, so testing every row strictly is exact
    /// even when some rows are redundant.
    pub fn interior_contains_scaled(&self, point: &[Rational], scale: Rational) -> bool {
        assert_eq!(point.len(), self.nvars);
        point.iter().all(|v| *v > Rational::from_integer(0))
            && self.rows.iter().all(|r| Self::row_sum(r, point) > scale)
    }

    /// Member of `P` but not of its interior.
    pub fn on_boundary(&self, point: &[Rational]) -> bool {
        self.contains(point) && !self.interior_contains_scaled(point, Rational::from_integer(1))
    }

    /// Lattice form of `u + 1 ∈ int(k P)`: `Σ_{i∈S} u_i ≥ k + 1 - |S|`.
    pub(crate) fn interior_lattice_rows(&self, k: u32) -> Vec<Constraint> {
        self.rows
            .iter()
            .filter_map(|r| {
                let t = k as i64 + 1 - r.len() as i64;
                (t > 0).then(|| Constraint { support: r.iter().fold(0u64, |m, &i| m | 1 << i), threshold: t as u32 })
            })
            .collect()
    }
}
