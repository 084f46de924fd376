//! Exact arithmetic for Salem numbers of degree at most 4 and the hyperbolic
//! isometries that realize them.
//!
//! The library has two pipelines built on a common exact-arithmetic core:
//!
//! * the *realization* pipeline constructs, for any Salem number of degree 2
//!   and any square-rootable Salem number of degree 4, a certified loxodromic
//!   element of a Vahlen matrix group over the Clifford order `Q`, pushes it
//!   through the spin double cover to a 7x7 rational orthogonal matrix, and
//!   certifies the translation length by exact characteristic-polynomial
//!   divisibility;
//! * the *obstruction* pipeline decides, for rational quadratic forms of
//!   signature (1,3), (1,4) and (1,5), the invariant-theoretic conditions
//!   (determinant class, Witt/Hasse invariants, quaternion ramification)
//!   that forbid such realizations and searches for witness Salem numbers.
//!
//! All certifying computations are exact over the integers or rationals;
//! floating point appears only in cross-checking numeric translation-length
//! estimates against the exact eigenvalue data.

pub mod arith;
pub mod clifford;
pub mod polynomials;
pub mod qforms;
pub mod realizer;
pub mod salem;
pub mod spin_bridge;
pub mod vahlen;
