//! Minimal generators of monomial ideals cut out by support-sum constraints
//! `Σ_{i∈S} u_i ≥ t_S`.
//!
//! The feasible set is an upset of `N^n`, so a feasible `u` is a minimal
//! generator iff lowering any positive coordinate breaks some constraint,
//! i.e. every `i` with `u_i > 0` lies in a constraint that is tight at `u`.
//! Minimal generators satisfy `u_i ≤ max{t_S : i ∈ S}`, which bounds the search.

use super::MonomialIdeal;
use crate::ring::ExponentVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub support: u64,
    pub threshold: u32,
}

struct Search<'a> {
    n: usize,
    rows: &'a [Constraint],
    bound: Vec<u32>,
    /// Rows whose last variable is `d`; checked for feasibility after depth `d`.
    rows_closing: Vec<Vec<usize>>,
    /// Variables all of whose rows are complete after depth `d`.
    vars_closing: Vec<Vec<usize>>,
    var_rows: Vec<Vec<usize>>,
    u: Vec<u32>,
    sums: Vec<u32>,
    out: Vec<ExponentVector>,
}

impl Search<'_> {
    fn run(&mut self, d: usize) {
        if d == self.n {
            self.out.push(ExponentVector::new(self.u.clone()));
            return;
        }
        for v in 0..=self.bound[d] {
            self.u[d] = v;
            for &r in &self.var_rows[d] {
                self.sums[r] += v;
            }
            if self.consistent(d) {
                self.run(d + 1);
            }
            for &r in &self.var_rows[d] {
                self.sums[r] -= v;
            }
        }
        self.u[d] = 0;
    }

    fn consistent(&self, d: usize) -> bool {
        if self.rows_closing[d].iter().any(|&r| self.sums[r] < self.rows[r].threshold) {
            return false;
        }
        self.vars_closing[d]
            .iter()
            .all(|&i| self.u[i] == 0 || self.var_rows[i].iter().any(|&r| self.sums[r] == self.rows[r].threshold))
    }
}

/// Minimal generators of `{x^u : Σ_{i∈S} u_i ≥ t_S for every row}` in `n` variables.
pub fn constraint_ideal(n: usize, rows: &[Constraint]) -> MonomialIdeal {
    let rows: Vec<Constraint> = rows.iter().copied().filter(|r| r.threshold > 0).collect();
    if rows.is_empty() {
        return MonomialIdeal::unit(n);
    }
    if rows.iter().any(|r| r.support == 0) {
        return MonomialIdeal::zero(n);
    }
    let var_rows: Vec<Vec<usize>> =
        (0..n).map(|i| (0..rows.len()).filter(|&r| rows[r].support >> i & 1 == 1).collect()).collect();
    let bound: Vec<u32> = (0..n).map(|i| var_rows[i].iter().map(|&r| rows[r].threshold).max().unwrap_or(0)).collect();
    let last_var = |r: &Constraint| 63 - r.support.leading_zeros() as usize;
    let mut rows_closing = vec![Vec::new(); n];
    for (r, row) in rows.iter().enumerate() {
        rows_closing[last_var(row)].push(r);
    }
    let mut vars_closing = vec![Vec::new(); n];
    for i in 0..n {
        let done = var_rows[i].iter().map(|&r| last_var(&rows[r])).max().unwrap_or(i).max(i);
        vars_closing[done].push(i);
    }
    let mut search = Search {
        n,
        rows: &rows,
        bound,
        rows_closing,
        vars_closing,
        var_rows,
        u: vec![0; n],
        sums: vec![0; rows.len()],
        out: Vec::new(),
    };
    search.run(0);
    MonomialIdeal::new(n, search.out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over the bounding box with the plain single-decrement test.
    fn brute(n: usize, rows: &[Constraint], bound: u32) -> MonomialIdeal {
        let feasible = |u: &[u32]| {
            rows.iter().all(|r| (0..n).filter(|i| r.support >> i & 1 == 1).map(|i| u[i]).sum::<u32>() >= r.threshold)
        };
        let mut out = Vec::new();
        let total = (bound + 1).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let u: Vec<u32> = (0..n)
                .map(|_| {
                    let v = c % (bound + 1);
                    c /= bound + 1;
                    v
                })
                .collect();
            if feasible(&u) {
                out.push(ExponentVector::new(u));
            }
        }
        MonomialIdeal::new(n, out)
    }

    #[test]
    fn triangle_second_symbolic_power() {
        let rows: Vec<Constraint> =
            [0b011, 0b101, 0b110].iter().map(|&s| Constraint { support: s, threshold: 2 }).collect();
        let got = constraint_ideal(3, &rows);
        let want = MonomialIdeal::from_exponents(3, &[&[1, 1, 1], &[2, 2, 0], &[2, 0, 2], &[0, 2, 2]]);
        assert_eq!(got, want);
    }

    #[test]
    fn agrees_with_box_search() {
        let supports = [0b0011u64, 0b0110, 0b1100, 0b1001, 0b0101, 0b1111, 0b0001];
        for mask in 1u32..(1 << supports.len()) {
            for t in 1..=3u32 {
                let rows: Vec<Constraint> = (0..supports.len())
                    .filter(|j| mask >> j & 1 == 1)
                    .map(|j| Constraint { support: supports[j], threshold: t + (j as u32 % 2) })
                    .collect();
                assert_eq!(constraint_ideal(4, &rows), brute(4, &rows, 4), "rows {rows:?}");
            }
        }
    }

    #[test]
    fn degenerate_rows() {
        assert!(constraint_ideal(2, &[]).is_unit());
        assert!(constraint_ideal(2, &[Constraint { support: 1, threshold: 0 }]).is_unit());
        assert!(constraint_ideal(2, &[Constraint { support: 0, threshold: 1 }]).is_zero());
    }
}
