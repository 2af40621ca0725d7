//! Concrete finite groups: matrix groups over `Z/p^k`, abstract metacyclic
//! and quaternion groups, semidirect products with homocyclic kernels, and
//! brute-force element-order censuses.

mod abstract_groups;
mod action;
mod matrix;
mod matrix_group;
mod realize;
mod semidirect;

use std::collections::BTreeMap;
use std::hash::Hash;

pub use abstract_groups::{CyclicGroup, DirectProduct, MetacyclicGroup, QuaternionGroup};
pub use action::{is_fixed_point_free, lift_action, reduces_mod_p, MatrixAction, Relation, Word};
pub use matrix::{nullspace_mod_p, Matrix, Poly};
pub use matrix_group::MatrixGroup;
pub use realize::{
    conjugacy_reps_of_order, conjugator_space, element_of_order, realize_complement,
    realize_frobenius,
};
pub use semidirect::SemidirectProduct;

use crate::error::{Error, Result};
use crate::numtheory::factorize;
use crate::order_classes::OrderCensus;

/// Default cap on the order of groups censused by brute force.
pub const DEFAULT_CENSUS_LIMIT: u64 = 20_000;
/// Default cap on the order of groups checked for malnormality.
pub const DEFAULT_MALNORMAL_LIMIT: u64 = 2_000;

pub trait FiniteGroup {
    type Element: Clone + Eq + Hash;

    fn identity(&self) -> Self::Element;
    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn inverse(&self, a: &Self::Element) -> Self::Element;
    fn order(&self) -> u64;
    fn elements(&self) -> Vec<Self::Element>;

    fn power(&self, a: &Self::Element, mut e: u64) -> Self::Element {
        let mut acc = self.identity();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    /// Exact order, found by stripping primes from the group order.
    fn element_order(&self, a: &Self::Element) -> u64 {
        let id = self.identity();
        let mut d = self.order();
        for (l, _) in factorize(d).factors().to_vec() {
            while d % l == 0 && self.power(a, d / l) == id {
                d /= l;
            }
        }
        d
    }
}

/// Exact element-order census by visiting every element.
pub fn order_census_bruteforce<G: FiniteGroup>(g: &G, limit: u64) -> Result<OrderCensus> {
    if g.order() > limit {
        return Err(Error::LimitExceeded {
            what: "group",
            size: g.order(),
            limit,
        });
    }
    let mut entries = BTreeMap::new();
    for x in g.elements() {
        *entries.entry(g.element_order(&x)).or_insert(0u64) += 1;
    }
    OrderCensus::new(entries, g.order())
}

/// True when `h` meets each of its conjugates by elements outside `h` only
/// in the identity.
pub fn is_malnormal<G: FiniteGroup>(g: &G, h: &[G::Element], limit: u64) -> Result<bool> {
    if g.order() > limit {
        return Err(Error::LimitExceeded {
            what: "group",
            size: g.order(),
            limit,
        });
    }
    let members: std::collections::HashSet<&G::Element> = h.iter().collect();
    let id = g.identity();
    for x in g.elements() {
        if members.contains(&x) {
            continue;
        }
        let xi = g.inverse(&x);
        for y in h {
            if *y == id {
                continue;
            }
            let conj = g.multiply(&g.multiply(&xi, y), &x);
            if members.contains(&conj) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
