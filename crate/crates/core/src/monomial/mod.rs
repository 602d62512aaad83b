//! Combinatorics of monomial and squarefree monomial ideals: minimal primes
//! as minimal vertex covers of the generator hypergraph, exact symbolic
//! powers, the symbolic polyhedron and asymptotic test ideals `τ(k · I^(•))`.

mod enumerate;
mod ideal;
mod polyhedron;
mod squarefree;

pub use enumerate::{constraint_ideal, Constraint};
pub use ideal::MonomialIdeal;
pub use polyhedron::{Rational, SymbolicPolyhedron};
pub use squarefree::SquarefreeIdeal;

pub fn minimal_primes(i: &SquarefreeIdeal) -> Vec<Vec<usize>> {
    i.minimal_primes().to_vec()
}

pub fn symbolic_power(i: &SquarefreeIdeal, m: u32) -> MonomialIdeal {
    i.symbolic_power(m)
}

pub fn monomial_intersect(i: &MonomialIdeal, j: &MonomialIdeal) -> MonomialIdeal {
    i.intersect(j)
}

pub fn big_height(i: &SquarefreeIdeal) -> usize {
    i.big_height()
}

pub fn symbolic_polyhedron(i: &SquarefreeIdeal) -> SymbolicPolyhedron {
    i.symbolic_polyhedron()
}

pub fn tau_asymptotic(i: &SquarefreeIdeal, k: u32) -> MonomialIdeal {
    i.tau_asymptotic(k)
}

pub fn tau_threshold(i: &SquarefreeIdeal) -> u32 {
    i.tau_threshold()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ExponentVector, Ring, RingRef};

    fn sq(n: usize, gens: &[&[usize]]) -> SquarefreeIdeal {
        let ring: RingRef = Ring::with_standard_names(2, n).unwrap();
        let masks = gens.iter().map(|g| g.iter().fold(0u64, |m, &i| m | 1 << i)).collect();
        SquarefreeIdeal::from_masks(&ring, masks).unwrap()
    }

    fn triangle() -> SquarefreeIdeal {
        sq(3, &[&[0, 1], &[0, 2], &[1, 2]])
    }

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn minimal_primes_examples() {
        assert_eq!(minimal_primes(&sq(1, &[&[0]])), vec![vec![0]]);
        assert_eq!(minimal_primes(&sq(3, &[&[0, 1], &[1, 2]])), vec![vec![1], vec![0, 2]]);
        assert_eq!(minimal_primes(&triangle()), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn construction_rejects_bad_input() {
        let ring = Ring::with_standard_names(3, 3).unwrap();
        assert!(SquarefreeIdeal::new(&ring, &[ev(&[2, 0, 0])]).is_err());
        assert!(SquarefreeIdeal::new(&ring, &[ev(&[1, 1, 0]), ev(&[1, 1, 1])]).is_err());
        assert!(SquarefreeIdeal::new(&ring, &[]).is_err());
        assert!(SquarefreeIdeal::new(&ring, &[ev(&[0, 0, 0])]).is_err());
        assert!(SquarefreeIdeal::new(&ring, &[ev(&[1, 0])]).is_err());
    }

    #[test]
    fn symbolic_power_examples() {
        let t = triangle();
        assert_eq!(symbolic_power(&t, 1), t.to_monomial());
        let want = MonomialIdeal::from_exponents(3, &[&[1, 1, 1], &[2, 2, 0], &[2, 0, 2], &[0, 2, 2]]);
        assert_eq!(symbolic_power(&t, 2), want);
        assert!(symbolic_power(&t, 2).contains_monomial(&ev(&[1, 1, 1])));
        assert!(!t.to_monomial().power(2).contains_monomial(&ev(&[1, 1, 1])));

        // A prime: symbolic and ordinary powers agree.
        let p = sq(3, &[&[0], &[1]]);
        for m in 1..=4 {
            assert_eq!(symbolic_power(&p, m), p.to_monomial().power(m as u64));
        }
    }

    #[test]
    fn big_height_examples() {
        assert_eq!(big_height(&sq(1, &[&[0]])), 1);
        assert_eq!(big_height(&triangle()), 2);
        let two_lines = sq(4, &[&[0, 2], &[0, 3], &[1, 2], &[1, 3]]);
        assert_eq!(minimal_primes(&two_lines), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(big_height(&two_lines), 2);
        assert_eq!(tau_threshold(&two_lines), 1);
    }

    #[test]
    fn polyhedron_examples() {
        let x = symbolic_polyhedron(&sq(1, &[&[0]]));
        assert_eq!(x.rows(), &[vec![0]]);
        let t = symbolic_polyhedron(&triangle());
        assert_eq!(t.rows().len(), 3);
        let half = Rational::new(1, 2);
        assert!(t.contains(&[half, half, half]));
        assert!(t.on_boundary(&[half, half, half]));
        assert!(!t.contains(&[half, half, Rational::from_integer(0)]));
        assert!(t.interior_contains_scaled(&[Rational::from_integer(1); 3], Rational::new(3, 2)));
    }

    #[test]
    fn tau_asymptotic_examples() {
        let t = triangle();
        assert!(tau_asymptotic(&t, 0).is_unit());
        assert!(tau_asymptotic(&t, 1).is_unit());
        assert_eq!(tau_asymptotic(&t, 2), t.to_monomial());
        assert_eq!(tau_asymptotic(&t, 3), symbolic_power(&t, 2));
        assert_eq!(tau_threshold(&sq(1, &[&[0]])), 0);
        assert_eq!(tau_threshold(&t), 1);
    }

    #[test]
    fn principal_squarefree_tau_values() {
        // (xyz): three height-one rows; τ(k·) = (xyz)^k.
        let i = sq(3, &[&[0, 1, 2]]);
        for k in 0..5u32 {
            assert_eq!(tau_asymptotic(&i, k), i.to_monomial().power(k as u64));
        }
    }
}
