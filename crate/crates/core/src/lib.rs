//! Polynomial ideals over prime fields, with exact tools for symbolic powers,
//! Frobenius powers and containment checks in positive characteristic.

pub mod containment;
pub mod error;
pub mod frobenius;
pub mod groebner;
pub mod monomial;
pub mod ring;

pub use error::{AlgebraError, Result};
pub use frobenius::{
    bracket_power, fedder_fpure, frobenius_root, tau_approximants, tau_monomial_power, tau_monomial_power_confirmed,
    tau_triviality, FedderVerdict, Filtration, SymbolicFiltration, TauChain, TrivialityStatus, TrivialityVerdict,
};
pub use groebner::{buchberger, colon, ideal_contains, ideal_intersect, ideal_member, saturate, GBasis, Ideal};
pub use monomial::{MonomialIdeal, SquarefreeIdeal, SymbolicPolyhedron};
pub use ring::{ExponentVector, MonomialOrder, Polynomial, Ring, RingRef};
