//! Integer arithmetic: factorization, Euler's function, primitive prime
//! divisors and bounded solvers for exponential Diophantine equations.

mod diophantine;
mod factor;
mod zsigmondy;

pub use diophantine::{
    solve_family, DiophantineFamily, DiophantineSolver, FamilyTag, SolverRegistry, DIO240_PRIMES,
};
pub use factor::{
    euler_phi, factorize, gcd, inv_mod, is_pi_number, is_pierpont_prime, is_prime, lcm,
    multiplicative_order, prime_power_decompose, primes_up_to, FactoredInteger,
};
pub use zsigmondy::{is_named_exception, zsigmondy, ZsigmondyOutcome, ZsigmondyQuery};

pub(crate) use factor::{mul_mod, pow_mod};
