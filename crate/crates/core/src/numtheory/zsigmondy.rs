use std::collections::BTreeSet;

use super::factor::{factorize, gcd};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZsigmondyQuery {
    pub a: u64,
    pub b: u64,
    pub n: u32,
    /// `+1` or `-1`.
    pub epsilon: i8,
}

impl ZsigmondyQuery {
    pub fn new(a: u64, b: u64, n: u32, epsilon: i8) -> Result<Self> {
        let q = ZsigmondyQuery { a, b, n, epsilon };
        q.validate()?;
        Ok(q)
    }

    fn validate(&self) -> Result<()> {
        if self.epsilon != 1 && self.epsilon != -1 {
            return Err(Error::domain(format!(
                "epsilon must be +1 or -1, got {}",
                self.epsilon
            )));
        }
        if self.b == 0 || self.a <= self.b {
            return Err(Error::domain(format!(
                "need a > b >= 1, got a = {}, b = {}",
                self.a, self.b
            )));
        }
        if gcd(self.a, self.b) != 1 {
            return Err(Error::domain(format!("gcd({}, {}) != 1", self.a, self.b)));
        }
        if self.n < 2 {
            return Err(Error::domain(format!("need n >= 2, got {}", self.n)));
        }
        Ok(())
    }

    /// `a^k + epsilon * b^k`, or `None` on overflow of 64 bits.
    pub fn term(&self, k: u32) -> Option<u64> {
        let ak = (self.a as u128).checked_pow(k)?;
        let bk = (self.b as u128).checked_pow(k)?;
        let v = if self.epsilon > 0 {
            ak.checked_add(bk)?
        } else {
            ak - bk
        };
        u64::try_from(v).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZsigmondyOutcome {
    Primitive(BTreeSet<u64>),
    Exception,
}

impl ZsigmondyOutcome {
    pub fn primes(&self) -> Option<&BTreeSet<u64>> {
        match self {
            ZsigmondyOutcome::Primitive(s) => Some(s),
            ZsigmondyOutcome::Exception => None,
        }
    }
}

/// The exceptional parameters of Zsigmondy's theorem:
/// `2^3 + 1`, `2^6 - 1`, and `a^2 - b^2` with `a + b` a power of two.
pub fn is_named_exception(q: &ZsigmondyQuery) -> bool {
    match (q.a, q.b, q.n, q.epsilon) {
        (2, 1, 3, 1) | (2, 1, 6, -1) => true,
        (a, b, 2, -1) => (a + b).is_power_of_two(),
        _ => false,
    }
}

/// Primes dividing `a^n + eps b^n` and no earlier `a^k + eps b^k`.
pub fn zsigmondy(q: &ZsigmondyQuery) -> Result<ZsigmondyOutcome> {
    q.validate()?;
    let overflow = || Error::domain(format!("a^n + eps b^n overflows 64 bits for {q:?}"));
    let value = q.term(q.n).ok_or_else(overflow)?;
    let earlier: Vec<u64> = (1..q.n)
        .map(|k| q.term(k).ok_or_else(overflow))
        .collect::<Result<_>>()?;
    let primitive: BTreeSet<u64> = factorize(value)
        .primes()
        .filter(|&p| earlier.iter().all(|&t| t % p != 0))
        .collect();
    if primitive.is_empty() {
        Ok(ZsigmondyOutcome::Exception)
    } else {
        Ok(ZsigmondyOutcome::Primitive(primitive))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn primes(a: u64, b: u64, n: u32, e: i8) -> Option<Vec<u64>> {
        let q = ZsigmondyQuery::new(a, b, n, e).unwrap();
        zsigmondy(&q)
            .unwrap()
            .primes()
            .map(|s| s.iter().copied().collect())
    }

    #[test]
    fn examples() {
        assert_eq!(primes(2, 1, 4, -1), Some(vec![5]));
        assert_eq!(primes(2, 1, 6, -1), None);
        assert_eq!(primes(2, 1, 3, 1), None);
        assert_eq!(primes(241, 1, 5, -1), Some(vec![61, 11_106_421]));
        assert_eq!(primes(3, 1, 2, -1), None);
        assert_eq!(primes(5, 3, 2, -1), None);
    }

    #[test]
    fn rejects_bad_queries() {
        assert!(ZsigmondyQuery::new(4, 2, 3, 1).is_err());
        assert!(ZsigmondyQuery::new(2, 3, 3, 1).is_err());
        assert!(ZsigmondyQuery::new(3, 1, 1, 1).is_err());
        assert!(ZsigmondyQuery::new(3, 1, 2, 0).is_err());
        let big = ZsigmondyQuery::new(1 << 20, 1, 4, 1).unwrap();
        assert!(zsigmondy(&big).is_err());
    }

    #[test]
    fn named_exceptions() {
        assert!(is_named_exception(
            &ZsigmondyQuery::new(7, 1, 2, -1).unwrap()
        ));
        assert!(!is_named_exception(
            &ZsigmondyQuery::new(6, 1, 2, -1).unwrap()
        ));
    }
}
