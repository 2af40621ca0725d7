use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A positive integer together with its canonical prime factorization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactoredInteger {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, exponent)` pairs, primes strictly increasing.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_pi_number(&self, pi: &BTreeSet<u64>) -> bool {
        self.primes().all(|p| pi.contains(&p))
    }

    pub fn euler_phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e - 1) * (p - 1))
            .product()
    }

    /// All positive divisors, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return if m == 1 { Some(0) } else { None };
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Multiplicative order of `a` modulo `m`; `None` when `a` is not a unit.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    let phi = factorize(m).euler_phi();
    let mut ord = phi;
    for p in factorize(phi).primes() {
        while ord % p == 0 && pow_mod(a, ord / p, m) == 1 {
            ord /= p;
        }
    }
    Some(ord)
}

/// Deterministic Miller-Rabin; the fixed witness set is exact below 2^64.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Canonical factorization by trial division up to the square root of the
/// unfactored part. The loop stops early once that part is prime.
pub fn factorize(n: u64) -> FactoredInteger {
    assert!(n >= 1, "factorize requires n >= 1");
    let value = n;
    let mut rest = n;
    let mut factors = Vec::new();
    for p in [2u64, 3] {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    }
    // 6k +- 1 wheel
    let mut d = 5u64;
    let mut step = 2u64;
    let mut rest_prime = rest > 1 && is_prime(rest);
    while !rest_prime && rest > 1 && d.saturating_mul(d) <= rest {
        if rest % d == 0 {
            let mut e = 0;
            while rest % d == 0 {
                rest /= d;
                e += 1;
            }
            factors.push((d, e));
            rest_prime = rest > 1 && is_prime(rest);
        }
        d += step;
        step = 6 - step;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    FactoredInteger { value, factors }
}

pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("euler_phi is defined for n >= 1"));
    }
    Ok(factorize(n).euler_phi())
}

/// `Some((p, e))` when `n = p^e` with `p` prime and `e >= 1`.
pub fn prime_power_decompose(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    match factorize(n).factors() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

/// True when every prime divisor of `n` lies in `pi`. `1` is a π-number for
/// every π.
pub fn is_pi_number(n: u64, pi: &BTreeSet<u64>) -> bool {
    if n == 0 {
        return false;
    }
    factorize(n).is_pi_number(pi)
}

/// Smoothness test by repeated division; cheaper than a full factorization
/// when `pi` is a handful of small primes.
pub(crate) fn is_smooth_over(mut n: u64, primes: &[u64]) -> bool {
    if n == 0 {
        return false;
    }
    for &p in primes {
        while n % p == 0 {
            n /= p;
        }
    }
    n == 1
}

/// Prime of the form `1 + 2^a 3^b`.
pub fn is_pierpont_prime(p: u64) -> bool {
    is_prime(p) && is_smooth_over(p - 1, &[2, 3])
}

/// Primes up to and including `limit`.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i as u64)
        .collect()
}
