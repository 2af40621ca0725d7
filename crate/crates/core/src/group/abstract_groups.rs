//! Groups given by normal forms rather than matrices. They serve as
//! independent oracles for the closed-form censuses.

use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::numtheory::{gcd, inv_mod, mul_mod, pow_mod};

/// `Z/n` under addition.
#[derive(Debug, Clone, Copy)]
pub struct CyclicGroup {
    n: u64,
}

impl CyclicGroup {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("cyclic group order must be positive"));
        }
        Ok(CyclicGroup { n })
    }
}

impl FiniteGroup for CyclicGroup {
    type Element = u64;

    fn identity(&self) -> u64 {
        0
    }

    fn multiply(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.n
    }

    fn inverse(&self, a: &u64) -> u64 {
        (self.n - a) % self.n
    }

    fn order(&self) -> u64 {
        self.n
    }

    fn elements(&self) -> Vec<u64> {
        (0..self.n).collect()
    }

    fn element_order(&self, a: &u64) -> u64 {
        self.n / gcd(*a, self.n)
    }
}

/// `<x, y | x^alpha, y^beta, y^-1 x y = x^gamma>` on normal forms
/// `x^i y^j`, with `(x^i y^j)(x^k y^l) = x^(i + k gamma^-j) y^(j + l)`.
#[derive(Debug, Clone, Copy)]
pub struct MetacyclicGroup {
    alpha: u64,
    beta: u64,
    gamma_inv: u64,
}

impl MetacyclicGroup {
    pub fn new(alpha: u64, beta: u64, gamma: u64) -> Result<Self> {
        if alpha == 0 || beta == 0 {
            return Err(Error::domain("alpha and beta must be positive"));
        }
        let gamma_inv = inv_mod(gamma % alpha, alpha)
            .ok_or_else(|| Error::domain(format!("gamma = {gamma} is not a unit mod {alpha}")))?;
        if pow_mod(gamma, beta, alpha) != 1 % alpha {
            return Err(Error::domain(format!("gamma^beta != 1 mod {alpha}")));
        }
        Ok(MetacyclicGroup {
            alpha,
            beta,
            gamma_inv,
        })
    }
}

impl FiniteGroup for MetacyclicGroup {
    type Element = (u64, u64);

    fn identity(&self) -> (u64, u64) {
        (0, 0)
    }

    fn multiply(&self, a: &(u64, u64), b: &(u64, u64)) -> (u64, u64) {
        let twist = pow_mod(self.gamma_inv, a.1, self.alpha);
        let i = (a.0 + mul_mod(b.0, twist, self.alpha)) % self.alpha;
        (i, (a.1 + b.1) % self.beta)
    }

    fn inverse(&self, a: &(u64, u64)) -> (u64, u64) {
        // (x^i y^j)^-1 = y^-j x^-i = x^(-i gamma^j) y^-j
        let gamma = inv_mod(self.gamma_inv, self.alpha).unwrap_or(0);
        let i = mul_mod(
            (self.alpha - a.0) % self.alpha,
            pow_mod(gamma, a.1, self.alpha),
            self.alpha,
        );
        (i, (self.beta - a.1) % self.beta)
    }

    fn order(&self) -> u64 {
        self.alpha * self.beta
    }

    fn elements(&self) -> Vec<(u64, u64)> {
        (0..self.alpha)
            .flat_map(|i| (0..self.beta).map(move |j| (i, j)))
            .collect()
    }
}

/// Generalised quaternion group of order `2^n` on normal forms `x^i y^a`,
/// `a` in {0, 1}, with `x^(2^(n-1)) = 1`, `y^2 = x^(2^(n-2))` and
/// `y^-1 x y = x^-1`.
#[derive(Debug, Clone, Copy)]
pub struct QuaternionGroup {
    half: u64,
}

impl QuaternionGroup {
    pub fn new(n: u32) -> Result<Self> {
        if !(3..=40).contains(&n) {
            return Err(Error::domain(format!(
                "Q_(2^n) needs 3 <= n <= 40, got {n}"
            )));
        }
        Ok(QuaternionGroup { half: 1 << (n - 1) })
    }
}

impl FiniteGroup for QuaternionGroup {
    type Element = (u64, u8);

    fn identity(&self) -> (u64, u8) {
        (0, 0)
    }

    fn multiply(&self, a: &(u64, u8), b: &(u64, u8)) -> (u64, u8) {
        let m = self.half;
        let k = if a.1 == 1 { (m - b.0) % m } else { b.0 };
        let mut i = (a.0 + k) % m;
        if a.1 == 1 && b.1 == 1 {
            i = (i + m / 2) % m;
        }
        (i, a.1 ^ b.1)
    }

    fn inverse(&self, a: &(u64, u8)) -> (u64, u8) {
        let m = self.half;
        if a.1 == 0 {
            ((m - a.0) % m, 0)
        } else {
            // (x^i y)^2 = y^2 = x^(m/2), so the inverse is x^i y x^(m/2)
            ((a.0 + m / 2) % m, 1)
        }
    }

    fn order(&self) -> u64 {
        2 * self.half
    }

    fn elements(&self) -> Vec<(u64, u8)> {
        (0..self.half).flat_map(|i| [(i, 0), (i, 1)]).collect()
    }
}

#[derive(Debug, Clone)]
pub struct DirectProduct<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: FiniteGroup, B: FiniteGroup> FiniteGroup for DirectProduct<A, B> {
    type Element = (A::Element, B::Element);

    fn identity(&self) -> Self::Element {
        (self.left.identity(), self.right.identity())
    }

    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        (
            self.left.multiply(&a.0, &b.0),
            self.right.multiply(&a.1, &b.1),
        )
    }

    fn inverse(&self, a: &Self::Element) -> Self::Element {
        (self.left.inverse(&a.0), self.right.inverse(&a.1))
    }

    fn order(&self) -> u64 {
        self.left.order() * self.right.order()
    }

    fn elements(&self) -> Vec<Self::Element> {
        let rs = self.right.elements();
        self.left
            .elements()
            .into_iter()
            .flat_map(|a| rs.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::order_census_bruteforce;

    fn check_axioms<G: FiniteGroup>(g: &G) {
        let els = g.elements();
        assert_eq!(els.len() as u64, g.order());
        let id = g.identity();
        for a in &els {
            assert!(g.multiply(a, &g.inverse(a)) == id);
            assert!(g.multiply(&g.inverse(a), a) == id);
            for b in els.iter().take(12) {
                for c in els.iter().take(12) {
                    let l = g.multiply(&g.multiply(a, b), c);
                    let r = g.multiply(a, &g.multiply(b, c));
                    assert!(l == r);
                }
            }
        }
    }

    #[test]
    fn group_axioms() {
        check_axioms(&CyclicGroup::new(12).unwrap());
        check_axioms(&MetacyclicGroup::new(3, 8, 2).unwrap());
        check_axioms(&MetacyclicGroup::new(5, 16, 4).unwrap());
        check_axioms(&QuaternionGroup::new(4).unwrap());
        check_axioms(&DirectProduct {
            left: QuaternionGroup::new(3).unwrap(),
            right: CyclicGroup::new(3).unwrap(),
        });
    }

    #[test]
    fn quaternion_census() {
        let c = order_census_bruteforce(&QuaternionGroup::new(3).unwrap(), 100).unwrap();
        assert_eq!(
            c.entries()
                .iter()
                .map(|(&k, &v)| (k, v))
                .collect::<Vec<_>>(),
            vec![(1, 1), (2, 1), (4, 6)]
        );
    }

    #[test]
    fn metacyclic_relation() {
        let g = MetacyclicGroup::new(3, 8, 2).unwrap();
        let x = (1, 0);
        let y = (0, 1);
        let conj = g.multiply(&g.multiply(&g.inverse(&y), &x), &y);
        assert_eq!(conj, g.power(&x, 2));
        assert_eq!(g.element_order(&y), 8);
    }
}
