//! Bounded exhaustive solvers for the exponential Diophantine families used
//! by the classification.
//!
//! Every solver takes a `bound` that caps the largest term of its equation
//! (for the `n^2 - 1` families, `n` itself). Since every base is at least 2,
//! the bound also caps every variable, so the searches are exhaustive up to
//! the bound and terminate quickly even for large bounds.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use super::factor::{is_prime, is_smooth_over, prime_power_decompose, primes_up_to};
use crate::error::{Error, Result};

/// Primes `q > 5` with `q - 1 | 240` and `q` not dividing 240.
pub const DIO240_PRIMES: [u64; 8] = [7, 11, 13, 17, 31, 41, 61, 241];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[allow(non_camel_case_types)]
pub enum FamilyTag {
    CONS_PP,
    DIFF_2_3,
    DIFF_3_2,
    DIFF_23_23,
    DIFF_2Q,
    DIFF_23_25,
    DIFF_25_23,
    SANDWICH_23,
    SANDWICH_2Q,
    SQUARE_235,
    DIO240,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 11] = [
        FamilyTag::CONS_PP,
        FamilyTag::DIFF_2_3,
        FamilyTag::DIFF_3_2,
        FamilyTag::DIFF_23_23,
        FamilyTag::DIFF_2Q,
        FamilyTag::DIFF_23_25,
        FamilyTag::DIFF_25_23,
        FamilyTag::SANDWICH_23,
        FamilyTag::SANDWICH_2Q,
        FamilyTag::SQUARE_235,
        FamilyTag::DIO240,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::CONS_PP => "CONS_PP",
            FamilyTag::DIFF_2_3 => "DIFF_2_3",
            FamilyTag::DIFF_3_2 => "DIFF_3_2",
            FamilyTag::DIFF_23_23 => "DIFF_23_23",
            FamilyTag::DIFF_2Q => "DIFF_2Q",
            FamilyTag::DIFF_23_25 => "DIFF_23_25",
            FamilyTag::DIFF_25_23 => "DIFF_25_23",
            FamilyTag::SANDWICH_23 => "SANDWICH_23",
            FamilyTag::SANDWICH_2Q => "SANDWICH_2Q",
            FamilyTag::SQUARE_235 => "SQUARE_235",
            FamilyTag::DIO240 => "DIO240",
        }
    }

    pub fn requires_q(self) -> bool {
        matches!(self, FamilyTag::DIFF_2Q | FamilyTag::SANDWICH_2Q)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("unknown Diophantine family {s:?}"),
            })
    }
}

/// A family tag together with its parameter (the odd prime `q` of the
/// `2Q` families).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiophantineFamily {
    tag: FamilyTag,
    q: Option<u64>,
}

impl DiophantineFamily {
    pub fn new(tag: FamilyTag, q: Option<u64>) -> Result<Self> {
        match (tag.requires_q(), q) {
            (true, None) => Err(Error::domain(format!("{tag} requires the parameter q"))),
            (true, Some(q)) if q == 2 || !is_prime(q) => Err(Error::domain(format!(
                "{tag}: q must be an odd prime, got {q}"
            ))),
            (false, Some(_)) => Err(Error::domain(format!("{tag} takes no parameter"))),
            _ => Ok(DiophantineFamily { tag, q }),
        }
    }

    pub fn tag(&self) -> FamilyTag {
        self.tag
    }

    pub fn q(&self) -> Option<u64> {
        self.q
    }
}

/// One solver per family. Solvers return tuples in arbitrary order; the
/// registry sorts and deduplicates.
pub trait DiophantineSolver: Send + Sync {
    fn tag(&self) -> FamilyTag;

    /// The equation, with the tuple layout of the solutions.
    fn equation(&self) -> &'static str;

    fn solve(&self, q: Option<u64>, bound: u64) -> Result<Vec<Vec<u64>>>;
}

pub struct SolverRegistry {
    solvers: BTreeMap<&'static str, Box<dyn DiophantineSolver>>,
}

impl SolverRegistry {
    pub fn empty() -> Self {
        SolverRegistry {
            solvers: BTreeMap::new(),
        }
    }

    /// A registry holding a solver for every [`FamilyTag`].
    pub fn standard() -> Self {
        use Base::{Fixed, Q};
        let mut reg = SolverRegistry::empty();
        reg.register(Box::new(ConsecutivePrimePowers));
        let diffs = [
            (
                FamilyTag::DIFF_2_3,
                "2^a - 3^b = 1  -> (a,b)",
                vec![Fixed(2)],
                vec![Fixed(3)],
                false,
            ),
            (
                FamilyTag::DIFF_3_2,
                "3^b - 2^a = 1  -> (a,b)",
                vec![Fixed(3)],
                vec![Fixed(2)],
                true,
            ),
            (
                FamilyTag::DIFF_23_23,
                "2^x 3^y - 2^u 3^v = 1  -> (x,y,u,v)",
                vec![Fixed(2), Fixed(3)],
                vec![Fixed(2), Fixed(3)],
                false,
            ),
            (
                FamilyTag::DIFF_2Q,
                "2^x q^y - 2^u q^v = 1  -> (x,y,u,v)",
                vec![Fixed(2), Q],
                vec![Fixed(2), Q],
                false,
            ),
            (
                FamilyTag::DIFF_23_25,
                "2^x 3^y - 2^u 5^v = 1  -> (x,y,u,v)",
                vec![Fixed(2), Fixed(3)],
                vec![Fixed(2), Fixed(5)],
                false,
            ),
            (
                FamilyTag::DIFF_25_23,
                "2^u 5^v - 2^x 3^y = 1  -> (x,y,u,v)",
                vec![Fixed(2), Fixed(5)],
                vec![Fixed(2), Fixed(3)],
                true,
            ),
        ];
        for (tag, equation, plus, minus, minus_first) in diffs {
            reg.register(Box::new(SmoothDifference {
                tag,
                equation,
                plus,
                minus,
                minus_first,
            }));
        }
        reg.register(Box::new(SquareMinusOne {
            tag: FamilyTag::SANDWICH_23,
            equation: "n - 1 and n + 1 are {2,3}-numbers  -> (n)",
            primes: vec![Fixed(2), Fixed(3)],
            exact: false,
        }));
        reg.register(Box::new(SquareMinusOne {
            tag: FamilyTag::SANDWICH_2Q,
            equation: "n^2 - 1 has prime divisors exactly {2,q}  -> (n)",
            primes: vec![Fixed(2), Q],
            exact: true,
        }));
        reg.register(Box::new(SquareMinusOne {
            tag: FamilyTag::SQUARE_235,
            equation: "n^2 - 1 has prime divisors exactly {2,3,5}  -> (n)",
            primes: vec![Fixed(2), Fixed(3), Fixed(5)],
            exact: true,
        }));
        reg.register(Box::new(Dio240));
        reg
    }

    pub fn register(&mut self, solver: Box<dyn DiophantineSolver>) {
        self.solvers.insert(solver.tag().name(), solver);
    }

    pub fn get(&self, name: &str) -> Option<&dyn DiophantineSolver> {
        self.solvers
            .iter()
            .find(|(k, _)| k.eq_ignore_ascii_case(name))
            .map(|(_, v)| v.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.solvers.keys().copied()
    }

    pub fn solve(&self, family: &DiophantineFamily, bound: u64) -> Result<Vec<Vec<u64>>> {
        if bound < 2 {
            return Err(Error::domain(format!(
                "bound must be at least 2, got {bound}"
            )));
        }
        let solver = self
            .get(family.tag.name())
            .ok_or_else(|| Error::domain(format!("no solver registered for {}", family.tag)))?;
        let mut out = solver.solve(family.q, bound)?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

/// All solutions of `family` with terms bounded by `bound`, sorted
/// lexicographically.
pub fn solve_family(family: &DiophantineFamily, bound: u64) -> Result<Vec<Vec<u64>>> {
    SolverRegistry::standard().solve(family, bound)
}

#[derive(Debug, Clone, Copy)]
enum Base {
    Fixed(u64),
    Q,
}

fn resolve(bases: &[Base], q: Option<u64>) -> Result<Vec<u64>> {
    bases
        .iter()
        .map(|b| match b {
            Base::Fixed(v) => Ok(*v),
            Base::Q => q.ok_or_else(|| Error::domain("missing parameter q")),
        })
        .collect()
}

/// Every product `prod b_i^{e_i} <= bound`, with its exponent vector.
fn smooth_products(bases: &[u64], bound: u64) -> Vec<(u64, Vec<u64>)> {
    let mut out = vec![(1u64, Vec::new())];
    for &b in bases {
        let mut next = Vec::new();
        for (v, exps) in &out {
            let mut value = *v;
            let mut e = 0u64;
            loop {
                let mut ex = exps.clone();
                ex.push(e);
                next.push((value, ex));
                match value.checked_mul(b) {
                    Some(nv) if nv <= bound => value = nv,
                    _ => break,
                }
                e += 1;
            }
        }
        out = next;
    }
    out
}

/// `prod plus - prod minus = 1` over two smooth bases.
struct SmoothDifference {
    tag: FamilyTag,
    equation: &'static str,
    plus: Vec<Base>,
    minus: Vec<Base>,
    /// Emit the exponents of the subtracted term first.
    minus_first: bool,
}

impl DiophantineSolver for SmoothDifference {
    fn tag(&self) -> FamilyTag {
        self.tag
    }

    fn equation(&self) -> &'static str {
        self.equation
    }

    fn solve(&self, q: Option<u64>, bound: u64) -> Result<Vec<Vec<u64>>> {
        let plus: HashMap<u64, Vec<u64>> = smooth_products(&resolve(&self.plus, q)?, bound)
            .into_iter()
            .collect();
        let mut out = Vec::new();
        for (m, minus_exps) in smooth_products(&resolve(&self.minus, q)?, bound) {
            if let Some(plus_exps) = plus.get(&(m + 1)) {
                let t = if self.minus_first {
                    [minus_exps, plus_exps.clone()].concat()
                } else {
                    [plus_exps.clone(), minus_exps].concat()
                };
                out.push(t);
            }
        }
        Ok(out)
    }
}

/// `p^a - q^b = 1` with `p, q` prime and `a, b >= 2`.
struct ConsecutivePrimePowers;

impl DiophantineSolver for ConsecutivePrimePowers {
    fn tag(&self) -> FamilyTag {
        FamilyTag::CONS_PP
    }

    fn equation(&self) -> &'static str {
        "p^a - q^b = 1, p q prime, a b >= 2  -> (p,q,a,b)"
    }

    fn solve(&self, _q: Option<u64>, bound: u64) -> Result<Vec<Vec<u64>>> {
        let mut powers: HashMap<u64, (u64, u64)> = HashMap::new();
        for p in primes_up_to(bound.isqrt()) {
            let mut v = p * p;
            let mut e = 2;
            while v <= bound {
                powers.insert(v, (p, e));
                match v.checked_mul(p) {
                    Some(nv) => v = nv,
                    None => break,
                }
                e += 1;
            }
        }
        Ok(powers
            .iter()
            .filter_map(|(&v, &(q, b))| powers.get(&(v + 1)).map(|&(p, a)| vec![p, q, a, b]))
            .collect())
    }
}

/// `n^2 - 1` is a π-number (or has prime divisors exactly π).
struct SquareMinusOne {
    tag: FamilyTag,
    equation: &'static str,
    primes: Vec<Base>,
    exact: bool,
}

impl DiophantineSolver for SquareMinusOne {
    fn tag(&self) -> FamilyTag {
        self.tag
    }

    fn equation(&self) -> &'static str {
        self.equation
    }

    fn solve(&self, q: Option<u64>, bound: u64) -> Result<Vec<Vec<u64>>> {
        if bound > u32::MAX as u64 {
            return Err(Error::domain(format!(
                "{}: bound {bound} exceeds {}",
                self.tag,
                u32::MAX
            )));
        }
        let primes = resolve(&self.primes, q)?;
        Ok((2..=bound)
            .filter(|&n| {
                let m = n * n - 1;
                is_smooth_over(m, &primes) && (!self.exact || primes.iter().all(|&p| m % p == 0))
            })
            .map(|n| vec![n])
            .collect())
    }
}

/// `p^r - 1 = 240 q^m` with `p, q > 5` prime, `r > 1`, `m >= 1`,
/// `q - 1 | 240` and `q` not dividing 240.
struct Dio240;

impl DiophantineSolver for Dio240 {
    fn tag(&self) -> FamilyTag {
        FamilyTag::DIO240
    }

    fn equation(&self) -> &'static str {
        "p^r - 1 = 240 q^m, p q > 5 prime, r > 1, q - 1 | 240  -> (p,r,q,m)"
    }

    fn solve(&self, _q: Option<u64>, bound: u64) -> Result<Vec<Vec<u64>>> {
        let mut out = Vec::new();
        for q in DIO240_PRIMES {
            let mut qm = q;
            let mut m = 1;
            while let Some(t) = qm.checked_mul(240).and_then(|x| x.checked_add(1)) {
                if t > bound {
                    break;
                }
                if let Some((p, r)) = prime_power_decompose(t) {
                    if r > 1 && p > 5 {
                        out.push(vec![p, r as u64, q, m]);
                    }
                }
                match qm.checked_mul(q) {
                    Some(v) => qm = v,
                    None => break,
                }
                m += 1;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(tag: FamilyTag, q: Option<u64>, bound: u64) -> Vec<Vec<u64>> {
        solve_family(&DiophantineFamily::new(tag, q).unwrap(), bound).unwrap()
    }

    #[test]
    fn small_families() {
        assert_eq!(
            solve(FamilyTag::DIFF_2_3, None, 1000),
            vec![vec![1, 0], vec![2, 1]]
        );
        assert_eq!(
            solve(FamilyTag::DIFF_3_2, None, 1000),
            vec![vec![1, 1], vec![3, 2]]
        );
        assert_eq!(
            solve(FamilyTag::CONS_PP, None, 10_000),
            vec![vec![3, 2, 2, 3]]
        );
    }

    #[test]
    fn dio240_prime_list() {
        let derived: Vec<u64> = primes_up_to(241)
            .into_iter()
            .filter(|&q| q > 5 && 240 % (q - 1) == 0 && 240 % q != 0)
            .collect();
        assert_eq!(derived, DIO240_PRIMES.to_vec());
    }

    #[test]
    fn parameter_validation() {
        assert!(DiophantineFamily::new(FamilyTag::DIFF_2Q, None).is_err());
        assert!(DiophantineFamily::new(FamilyTag::DIFF_2Q, Some(9)).is_err());
        assert!(DiophantineFamily::new(FamilyTag::DIFF_2Q, Some(2)).is_err());
        assert!(DiophantineFamily::new(FamilyTag::DIO240, Some(7)).is_err());
        let f = DiophantineFamily::new(FamilyTag::DIO240, None).unwrap();
        assert!(solve_family(&f, 1).is_err());
    }

    #[test]
    fn registry_lookup() {
        let reg = SolverRegistry::standard();
        assert_eq!(reg.names().count(), FamilyTag::ALL.len());
        assert!(reg.get("dio240").is_some());
        assert!(reg.get("nope").is_none());
        assert_eq!(
            "sandwich_2q".parse::<FamilyTag>().unwrap(),
            FamilyTag::SANDWICH_2Q
        );
    }

    #[test]
    fn smooth_products_are_complete() {
        let v = smooth_products(&[2, 3], 12);
        let mut values: Vec<u64> = v.iter().map(|(x, _)| *x).collect();
        values.sort();
        assert_eq!(values, vec![1, 2, 3, 4, 6, 8, 9, 12]);
    }
}
