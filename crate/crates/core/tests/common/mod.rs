//! Independent oracles shared by the integration tests. None of these go
//! through the Gröbner engine or the Frobenius-root machinery.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::Ratio;
use rand::Rng;
use sympow_core::{ExponentVector, MonomialIdeal, Polynomial, RingRef};

/// Exponent vectors of total degree at most `d` in `n` variables.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<ExponentVector> {
    fn go(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if cur.len() == n {
            out.push(ExponentVector::new(cur.clone()));
            return;
        }
        for v in 0..=left {
            cur.push(v);
            go(n, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r, mut base, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r
}

/// Is `f = Σ h_i g_i` solvable with `deg(h_i g_i) ≤ d`? Decided by Gaussian
/// elimination over `F_p` on the coefficient matrix of all products `x^u g_i`.
pub fn truncated_member(f: &Polynomial, gens: &[Polynomial], d: u32) -> bool {
    let ring = f.ring();
    let p = ring.characteristic();
    let n = ring.nvars();
    let rows_index: BTreeMap<ExponentVector, usize> =
        monomials_up_to(n, d).into_iter().enumerate().map(|(i, u)| (u, i)).collect();
    let mut columns: Vec<Vec<u64>> = Vec::new();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > d as u64 {
            continue;
        }
        for u in monomials_up_to(n, d - dg as u32) {
            let mut col = vec![0u64; rows_index.len()];
            for (v, c) in g.terms() {
                col[rows_index[&u.add(v)]] = *c;
            }
            columns.push(col);
        }
    }
    if f.degree().is_some_and(|df| df > d as u64) {
        return false;
    }
    let mut target = vec![0u64; rows_index.len()];
    for (v, c) in f.terms() {
        target[rows_index[v]] = *c;
    }
    // Row-reduce the augmented matrix [columns | target] by rows.
    let m = rows_index.len();
    let k = columns.len();
    let mut a: Vec<Vec<u64>> = (0..m)
        .map(|r| {
            let mut row: Vec<u64> = columns.iter().map(|c| c[r]).collect();
            row.push(target[r]);
            row
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..k {
        let Some(r) = (pivot_row..m).find(|&r| a[r][col] != 0) else { continue };
        a.swap(pivot_row, r);
        let inv = inv_mod(a[pivot_row][col], p);
        for x in a[pivot_row].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..m {
            if r != pivot_row && a[r][col] != 0 {
                let factor = a[r][col];
                for c in 0..=k {
                    a[r][c] = (a[r][c] + p * p - factor * a[pivot_row][c] % p) % p;
                }
            }
        }
        pivot_row += 1;
    }
    // Consistent iff no zero row has a nonzero right-hand side.
    a[pivot_row..].iter().all(|row| row[k] == 0)
}

/// `R/(f)` is F-pure iff `f^(p-1)` has a term with every exponent below `p`.
pub fn fedder_expansion_oracle(f: &Polynomial) -> bool {
    let p = f.ring().characteristic();
    f.pow(p - 1).terms().keys().any(|u| u.all_below(p))
}

pub fn random_poly<R: Rng>(rng: &mut R, ring: &RingRef, max_deg: u32, max_terms: usize) -> Polynomial {
    let n = ring.nvars();
    let p = ring.characteristic();
    let count = rng.gen_range(1..=max_terms);
    let terms: Vec<(ExponentVector, u64)> = (0..count)
        .map(|_| {
            let total = rng.gen_range(0..=max_deg);
            let mut u = vec![0u32; n];
            for _ in 0..total {
                u[rng.gen_range(0..n)] += 1;
            }
            (ExponentVector::new(u), rng.gen_range(1..p))
        })
        .collect();
    Polynomial::from_terms(ring, terms).unwrap()
}

pub fn random_nonzero_poly<R: Rng>(rng: &mut R, ring: &RingRef, max_deg: u32, max_terms: usize) -> Polynomial {
    loop {
        let f = random_poly(rng, ring, max_deg, max_terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Supporting inequalities `c·w ≥ r` (with `c ≥ 0`) of the Newton
/// polyhedron `conv(gens) + R^n_≥0`, for `n ≤ 3`. Every facet is among them;
/// the remaining ones are valid, so the list cuts out the polyhedron exactly.
pub fn newton_inequalities(a: &MonomialIdeal) -> Vec<(Vec<i64>, i64)> {
    let n = a.nvars();
    assert!((1..=3).contains(&n), "facet enumeration implemented for n ≤ 3");
    let pts: Vec<Vec<i64>> = a.generators().iter().map(|g| g.as_slice().iter().map(|&x| x as i64).collect()).collect();
    let rays: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    let dot = |c: &[i64], w: &[i64]| c.iter().zip(w).map(|(x, y)| x * y).sum::<i64>();
    let mut out: Vec<(Vec<i64>, i64)> = Vec::new();
    let mut push = |c: Vec<i64>| {
        let c = if c.iter().all(|&x| x <= 0) { c.iter().map(|x| -x).collect() } else { c };
        if c.iter().any(|&x| x < 0) || c.iter().all(|&x| x == 0) {
            return;
        }
        let r = pts.iter().map(|g| dot(&c, g)).min().unwrap();
        let gcd = c.iter().fold(r.unsigned_abs(), |acc, &x| num_gcd(acc, x.unsigned_abs())) as i64;
        let (c, r) = if gcd > 1 { (c.iter().map(|x| x / gcd).collect(), r / gcd) } else { (c, r) };
        if !out.contains(&(c.clone(), r)) {
            out.push((c, r));
        }
    };
    for base in &pts {
        let mut dirs: Vec<Vec<i64>> = rays.clone();
        dirs.extend(pts.iter().filter(|g| *g != base).map(|g| g.iter().zip(base).map(|(x, y)| x - y).collect()));
        match n {
            1 => push(vec![1]),
            2 => {
                for d in &dirs {
                    push(vec![-d[1], d[0]]);
                }
            }
            _ => {
                for i in 0..dirs.len() {
                    for j in i + 1..dirs.len() {
                        let (u, v) = (&dirs[i], &dirs[j]);
                        push(vec![u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]);
                    }
                }
            }
        }
    }
    out
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

/// The multiplier ideal `J(a^t) = (x^v : v + 1 ∈ int(t · Newt(a)))`.
pub fn howald(a: &MonomialIdeal, t: Ratio<u64>) -> MonomialIdeal {
    let n = a.nvars();
    if *t.numer() == 0 {
        return MonomialIdeal::unit(n);
    }
    let ineqs = newton_inequalities(a);
    let (num, den) = (*t.numer() as i64, *t.denom() as i64);
    let inside = |v: &[u32]| {
        ineqs.iter().all(|(c, r)| {
            let lhs: i64 = c.iter().zip(v).map(|(ci, &vi)| ci * (vi as i64 + 1)).sum();
            den * lhs > num * r
        })
    };
    let max_exp = a.generators().iter().flat_map(|g| g.as_slice().iter().copied()).max().unwrap_or(0);
    let bound = (n as u64 * max_exp as u64 * num as u64).div_ceil(den as u64) as u32 + 2;
    let mut members = Vec::new();
    let mut v = vec![0u32; n];
    loop {
        if inside(&v) {
            members.push(ExponentVector::new(v.clone()));
        }
        let mut i = 0;
        while i < n && v[i] == bound {
            v[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        v[i] += 1;
    }
    let j = MonomialIdeal::new(n, members);
    assert!(
        j.generators().iter().all(|g| g.as_slice().iter().all(|&x| x < bound)),
        "search box too small for {a:?} at t = {t}"
    );
    j
}
