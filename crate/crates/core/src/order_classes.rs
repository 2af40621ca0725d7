//! Element-order censuses in closed form, and the perfect-order-classes
//! predicate.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::group::{
    order_census_bruteforce, realize_complement, MetacyclicGroup, DEFAULT_CENSUS_LIMIT,
};
use crate::numtheory::{euler_phi, factorize, gcd, is_prime, lcm};
use crate::spec::{ComplementSpec, FrobeniusSpec};

/// Number of elements of each order that occurs, with the group order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderCensus {
    entries: BTreeMap<u64, u64>,
    group_order: u64,
}

impl OrderCensus {
    /// Checks that the identity is counted once, no count is zero and the
    /// counts add up to the group order.
    pub fn new(entries: BTreeMap<u64, u64>, group_order: u64) -> Result<Self> {
        if entries.get(&1) != Some(&1) {
            return Err(Error::domain(
                "a census must count exactly one element of order 1",
            ));
        }
        if entries.values().any(|&c| c == 0) {
            return Err(Error::domain("census counts must be positive"));
        }
        let total = entries
            .values()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .ok_or_else(|| Error::domain("census counts overflow"))?;
        if total != group_order {
            return Err(Error::domain(format!(
                "census counts sum to {total}, not the group order {group_order}"
            )));
        }
        Ok(OrderCensus {
            entries,
            group_order,
        })
    }

    pub fn entries(&self) -> &BTreeMap<u64, u64> {
        &self.entries
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    /// `c_d`, zero when no element has order `d`.
    pub fn count(&self, d: u64) -> u64 {
        self.entries.get(&d).copied().unwrap_or(0)
    }

    /// JSON object with decimal-string keys in ascending numeric order.
    pub fn to_json(&self) -> Value {
        let mut counts = Map::new();
        for (d, c) in &self.entries {
            counts.insert(d.to_string(), Value::from(*c));
        }
        let mut obj = Map::new();
        obj.insert("group_order".into(), Value::from(self.group_order));
        obj.insert("counts".into(), Value::Object(counts));
        Value::Object(obj)
    }
}

impl fmt::Display for OrderCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}:{c}")?;
        }
        write!(f, "}}")
    }
}

pub fn cyclic_census(n: u64) -> Result<OrderCensus> {
    if n == 0 {
        return Err(Error::domain("cyclic order must be positive"));
    }
    let entries = factorize(n)
        .divisors()
        .into_iter()
        .map(|d| Ok((d, euler_phi(d)?)))
        .collect::<Result<_>>()?;
    OrderCensus::new(entries, n)
}

/// `(Z/p^k)^r`: `p^{r(i-1)}(p^r - 1)` elements of order `p^i`.
pub fn homocyclic_census(p: u64, k: u32, r: u32) -> Result<OrderCensus> {
    if p == 2 || !is_prime(p) || k == 0 || r == 0 {
        return Err(Error::domain(format!(
            "invalid homocyclic parameters ({p},{k},{r})"
        )));
    }
    let overflow = || Error::domain(format!("({p},{k},{r}) overflows"));
    let pr = p.checked_pow(r).ok_or_else(overflow)?;
    let mut entries = BTreeMap::from([(1, 1)]);
    let mut pi = 1u64;
    let mut scale = 1u64;
    for i in 1..=k {
        pi = pi.checked_mul(p).ok_or_else(overflow)?;
        if i > 1 {
            scale = scale.checked_mul(pr).ok_or_else(overflow)?;
        }
        entries.insert(pi, scale.checked_mul(pr - 1).ok_or_else(overflow)?);
    }
    let order = pr.checked_pow(k).ok_or_else(overflow)?;
    OrderCensus::new(entries, order)
}

/// Generalised quaternion group of order `2^n`.
pub fn genquat_census(n: u32) -> Result<OrderCensus> {
    if !(3..=62).contains(&n) {
        return Err(Error::domain(format!(
            "Q_(2^n) needs 3 <= n <= 62, got {n}"
        )));
    }
    let mut entries = BTreeMap::from([(1, 1), (2, 1), (4, (1u64 << (n - 1)) + 2)]);
    for k in 3..n {
        entries.insert(1u64 << k, 1u64 << (k - 1));
    }
    OrderCensus::new(entries, 1u64 << n)
}

/// Census of a direct product: `(x, y)` has order `lcm(|x|, |y|)`.
pub fn product_census(a: &OrderCensus, b: &OrderCensus) -> Result<OrderCensus> {
    let order = a
        .group_order
        .checked_mul(b.group_order)
        .ok_or_else(|| Error::domain("product order overflows 64 bits"))?;
    let mut entries = BTreeMap::new();
    for (&x, &cx) in &a.entries {
        for (&y, &cy) in &b.entries {
            *entries.entry(lcm(x, y)).or_insert(0) += cx * cy;
        }
    }
    OrderCensus::new(entries, order)
}

/// Census of a Frobenius group from those of its kernel and complement:
/// kernel counts are unchanged and each complement count at `d > 1` is
/// multiplied by `|K|`.
pub fn frobenius_census(kernel: &OrderCensus, complement: &OrderCensus) -> Result<OrderCensus> {
    let nk = kernel.group_order;
    if gcd(nk, complement.group_order) != 1 {
        return Err(Error::domain(format!(
            "kernel order {nk} and complement order {} are not coprime",
            complement.group_order
        )));
    }
    let mut entries = kernel.entries.clone();
    for (&d, &c) in complement.entries.range(2..) {
        let prev = entries.insert(d, nk * c);
        assert!(
            prev.is_none(),
            "order {d} occurs in both kernel and complement"
        );
    }
    OrderCensus::new(entries, nk * complement.group_order)
}

pub fn is_poc(c: &OrderCensus) -> bool {
    c.entries.values().all(|&n| c.group_order % n == 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisibilityReport {
    /// `phi(d)` divides `c_d` for every occurring order `d`.
    pub phi_ok: bool,
    /// For a POC census, `p - 1` divides the group order for each prime
    /// divisor `p`; vacuously true otherwise.
    pub pm1_ok: bool,
}

pub fn divisibility_report(c: &OrderCensus) -> DivisibilityReport {
    let phi_ok = c
        .entries
        .iter()
        .all(|(&d, &n)| n % euler_phi(d).expect("d >= 1") == 0);
    let pm1_ok = !is_poc(c)
        || factorize(c.group_order)
            .primes()
            .all(|p| c.group_order % (p - 1) == 0);
    DivisibilityReport { phi_ok, pm1_ok }
}

fn census_cache() -> &'static Mutex<HashMap<ComplementSpec, OrderCensus>> {
    static CACHE: OnceLock<Mutex<HashMap<ComplementSpec, OrderCensus>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Census of a complement as an abstract group. Cyclic and quaternion
/// families use closed forms; metacyclic groups are censused by brute force
/// on their normal forms, and `SL(2,3)`, `SL(2,5)` by brute force on a
/// matrix realization (in `GL(2,5)` and `GL(2,11)`). Brute-force results are
/// cached.
pub fn complement_census(spec: &ComplementSpec) -> Result<OrderCensus> {
    match *spec {
        ComplementSpec::Cyclic(n) => return cyclic_census(n),
        ComplementSpec::QuatCyclic(n, m) => {
            return product_census(&genquat_census(n)?, &cyclic_census(m)?)
        }
        ComplementSpec::Metacyclic(1, b, _) => return cyclic_census(b),
        _ => {}
    }
    if let Some(c) = census_cache().lock().expect("cache lock").get(spec) {
        return Ok(c.clone());
    }
    let census = match *spec {
        ComplementSpec::Metacyclic(a, b, g) => {
            order_census_bruteforce(&MetacyclicGroup::new(a, b, g)?, DEFAULT_CENSUS_LIMIT)?
        }
        ComplementSpec::SL2_3 | ComplementSpec::SL2_5 => {
            let p = if *spec == ComplementSpec::SL2_3 {
                5
            } else {
                11
            };
            let action = realize_complement(spec, 2, p, false)?
                .ok_or_else(|| Error::Realization(format!("{spec} not found in GL(2,{p})")))?;
            order_census_bruteforce(
                &action.generate(DEFAULT_CENSUS_LIMIT)?,
                DEFAULT_CENSUS_LIMIT,
            )?
        }
        _ => unreachable!("closed forms handled above"),
    };
    census_cache()
        .lock()
        .expect("cache lock")
        .insert(*spec, census.clone());
    Ok(census)
}

/// Symbolic census of a Frobenius group.
pub fn frobenius_spec_census(spec: &FrobeniusSpec) -> Result<OrderCensus> {
    let k = spec.kernel;
    frobenius_census(
        &homocyclic_census(k.p, k.k, k.r)?,
        &complement_census(&spec.complement)?,
    )
}
