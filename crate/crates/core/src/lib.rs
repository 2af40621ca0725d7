//! Finite Frobenius groups with perfect order classes.
//!
//! A group has *perfect order classes* (POC) when, for every order `d` that
//! occurs, the number of elements of order `d` divides the group order. This
//! crate provides:
//!
//! * [`numtheory`]: factorization, Euler's function, primitive prime divisors
//!   and bounded solvers for the exponential Diophantine families the
//!   classification rests on;
//! * [`group`]: concrete matrix realizations of Frobenius complements over
//!   `Z/p^k`, semidirect products with homocyclic kernels and brute-force
//!   element-order censuses;
//! * [`order_classes`]: closed-form censuses and the POC predicate;
//! * [`classifier`]: theorem-driven POC verdicts for Frobenius groups;
//! * [`census`]: enumeration and rendering of all POC Frobenius groups up to
//!   a bound, cross-checked against the brute-force engine.

pub mod census;
pub mod classifier;
pub mod error;
pub mod group;
pub mod numtheory;
pub mod order_classes;
pub mod spec;

pub use error::{Error, Result};
pub use order_classes::OrderCensus;
pub use spec::{ComplementSpec, FrobeniusSpec, HomocyclicKernel};
