use std::fmt;

use super::{Matrix, MatrixGroup, DEFAULT_CENSUS_LIMIT};
use crate::error::{Error, Result};
use crate::numtheory::factorize;

/// A word in the generators: `(generator index, exponent)` factors.
pub type Word = Vec<(usize, i64)>;

/// `lhs = rhs` in the generators. An empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Relation { lhs, rhs }
    }

    fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.lhs.iter().chain(&self.rhs).map(|&(g, _)| g)
    }

    fn holds(&self, gens: &[Matrix]) -> bool {
        eval(&self.lhs, gens) == eval(&self.rhs, gens)
    }
}

fn eval(word: &Word, gens: &[Matrix]) -> Option<Matrix> {
    let mut acc = Matrix::identity(gens[0].dim(), gens[0].modulus());
    for &(g, e) in word {
        acc = acc.mul(&gens[g].pow_signed(e)?);
    }
    Some(acc)
}

fn fmt_word(f: &mut fmt::Formatter<'_>, w: &Word, names: &[String]) -> fmt::Result {
    if w.is_empty() {
        return f.write_str("1");
    }
    for (i, &(g, e)) in w.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        if e == 1 {
            write!(f, "{}", names[g])?;
        } else {
            write!(f, "{}^{e}", names[g])?;
        }
    }
    Ok(())
}

/// Generator matrices over `Z/p^k` for a complement, with the presentation
/// they are meant to satisfy and the order of the group they generate.
#[derive(Debug, Clone)]
pub struct MatrixAction {
    pub prime: u64,
    pub modulus: u64,
    pub dim: usize,
    pub generators: Vec<(String, Matrix)>,
    /// Exact order of each generator.
    pub generator_orders: Vec<u64>,
    pub relations: Vec<Relation>,
    pub group_order: u64,
}

impl MatrixAction {
    pub fn matrices(&self) -> Vec<Matrix> {
        self.generators.iter().map(|(_, m)| m.clone()).collect()
    }

    pub fn exponent_k(&self) -> u32 {
        let mut k = 0;
        let mut m = self.modulus;
        while m > 1 {
            m /= self.prime;
            k += 1;
        }
        k
    }

    pub fn generate(&self, limit: u64) -> Result<MatrixGroup> {
        MatrixGroup::generate(&self.matrices(), limit)
    }

    /// Checks invertibility, generator orders, every relation and the order
    /// of the generated group.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Realization(msg));
        let gens = self.matrices();
        for ((label, m), &d) in self.generators.iter().zip(&self.generator_orders) {
            if m.modulus() != self.modulus || m.dim() != self.dim {
                return fail(format!("generator {label} has the wrong shape"));
            }
            if m.det_mod_prime(self.prime) == 0 {
                return fail(format!("generator {label} is singular mod {}", self.prime));
            }
            if !m.has_order(d) {
                return fail(format!("generator {label} does not have order {d}"));
            }
        }
        for rel in &self.relations {
            if !rel.holds(&gens) {
                return fail(format!("relation {} fails", self.show_relation(rel)));
            }
        }
        let limit = self
            .group_order
            .max(1)
            .saturating_add(1)
            .max(DEFAULT_CENSUS_LIMIT);
        let g = self.generate(limit)?;
        if g.len() as u64 != self.group_order {
            return fail(format!(
                "generators produce a group of order {}, expected {}",
                g.len(),
                self.group_order
            ));
        }
        Ok(())
    }

    pub fn show_relation(&self, rel: &Relation) -> String {
        struct Show<'a>(&'a Relation, &'a [String]);
        impl fmt::Display for Show<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt_word(f, &self.0.lhs, self.1)?;
                f.write_str(" = ")?;
                fmt_word(f, &self.0.rhs, self.1)
            }
        }
        let names: Vec<String> = self.generators.iter().map(|(l, _)| l.clone()).collect();
        Show(rel, &names).to_string()
    }
}

impl fmt::Display for MatrixAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "order {} subgroup of GL({}, Z/{})",
            self.group_order, self.dim, self.modulus
        )?;
        for ((label, m), d) in self.generators.iter().zip(&self.generator_orders) {
            writeln!(f, "  {label} = {m}  (order {d})")?;
        }
        for rel in &self.relations {
            writeln!(f, "  {}", self.show_relation(rel))?;
        }
        Ok(())
    }
}

/// True when no non-identity element of the generated group fixes a
/// non-zero vector, i.e. `det(M - I)` is a unit mod `p` for every `M != I`.
pub fn is_fixed_point_free(action: &MatrixAction) -> Result<bool> {
    let limit = action
        .group_order
        .saturating_add(1)
        .max(DEFAULT_CENSUS_LIMIT);
    let g = action.generate(limit)?;
    Ok(g.matrices()
        .iter()
        .skip(1)
        .all(|m| m.minus_identity().det_mod_prime(action.prime) != 0))
}

/// Largest fiber size the repair search in [`lift_action`] will scan.
const FIBER_SEARCH_LIMIT: u64 = 1 << 20;

/// Lifts an action mod `p` to one mod `p^k`.
///
/// Each generator is lifted entrywise and then raised to the power `e`
/// with `e = 1 mod d` and `e = 0 mod p^{2k}`, where `d` is its order; this
/// keeps the reduction mod `p` and forces order exactly `d`. Independent
/// power lifts need not satisfy the mixed relations, so when verification
/// fails the later generators are re-chosen level by level from the fiber
/// of matrices congruent to the previous level, keeping the first
/// candidate (in entry order) that satisfies every relation among the
/// generators fixed so far. The result is re-verified; any failure is an
/// error.
pub fn lift_action(action: &MatrixAction, k: u32) -> Result<MatrixAction> {
    if action.modulus != action.prime {
        return Err(Error::domain(
            "lift_action expects an action modulo a prime",
        ));
    }
    if k == 0 {
        return Err(Error::domain("lift exponent must be positive"));
    }
    if k == 1 {
        return Ok(action.clone());
    }
    let p = action.prime;
    let modulus = p
        .checked_pow(k)
        .ok_or_else(|| Error::domain(format!("{p}^{k} overflows")))?;
    let pk2 = (p as u128).pow(2 * k);
    let mut lifted = action.clone();
    lifted.modulus = modulus;
    for ((_, m), &d) in lifted.generators.iter_mut().zip(&action.generator_orders) {
        let e = crt_exponent(d as u128, pk2);
        *m = pow_u128(&m.with_modulus(modulus), e);
    }
    if lifted.verify().is_ok() {
        return Ok(lifted);
    }
    let mut current = action.clone();
    for level in 2..=k {
        current = lift_one_level(&current, level, &lifted)?;
    }
    current.verify().map_err(|e| {
        Error::LiftVerification(format!(
            "lift of order {} action to Z/{modulus}: {e}",
            action.group_order
        ))
    })?;
    Ok(current)
}

fn pow_u128(m: &Matrix, mut e: u128) -> Matrix {
    let mut acc = Matrix::identity(m.dim(), m.modulus());
    let mut base = m.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base);
        }
    }
    acc
}

/// Smallest `e` with `e = 1 mod d` and `e = 0 mod q`, for coprime `d, q`.
fn crt_exponent(d: u128, q: u128) -> u128 {
    if d == 1 {
        return q;
    }
    let mut e = q;
    while e % d != 1 {
        e += q;
    }
    e
}

/// Lifts from `Z/p^{level-1}` to `Z/p^level`. The first generator is power
/// lifted; each later generator is searched in its fiber.
fn lift_one_level(prev: &MatrixAction, level: u32, hint: &MatrixAction) -> Result<MatrixAction> {
    let p = prev.prime;
    let modulus = p.pow(level);
    let step = prev.modulus;
    let dim = prev.dim;
    let fiber = p.checked_pow((dim * dim) as u32).unwrap_or(u64::MAX);
    if fiber > FIBER_SEARCH_LIMIT {
        return Err(Error::LiftVerification(format!(
            "fiber of size {p}^{} is too large to search",
            dim * dim
        )));
    }
    let hint_gens: Vec<Matrix> = hint
        .matrices()
        .iter()
        .map(|m| m.with_modulus(modulus))
        .collect();
    let mut chosen: Vec<Matrix> = Vec::new();
    for (i, ((label, m), &d)) in prev
        .generators
        .iter()
        .zip(&prev.generator_orders)
        .enumerate()
    {
        let base = m.with_modulus(modulus);
        let relevant: Vec<&Relation> = prev
            .relations
            .iter()
            .filter(|r| r.generators().all(|g| g <= i) && r.generators().any(|g| g == i))
            .collect();
        let accept = |cand: &Matrix, chosen: &[Matrix]| {
            if !cand.has_order(d) {
                return false;
            }
            let mut gens = chosen.to_vec();
            gens.push(cand.clone());
            relevant.iter().all(|r| r.holds(&gens))
        };
        if accept(&hint_gens[i], &chosen) && reduces_to(&hint_gens[i], &base, step) {
            chosen.push(hint_gens[i].clone());
            continue;
        }
        let e = crt_exponent(d as u128, (p as u128).pow(2 * level));
        let powered = pow_u128(&base, e);
        if accept(&powered, &chosen) {
            chosen.push(powered);
            continue;
        }
        if i == 0 {
            return Err(Error::LiftVerification(format!(
                "cannot lift generator {label}"
            )));
        }
        let mut found = None;
        let mut delta = vec![0u64; dim * dim];
        for idx in 0..fiber {
            let mut t = idx;
            for x in delta.iter_mut() {
                *x = (t % p) * step;
                t /= p;
            }
            let cand = base.add(&Matrix::new(dim, modulus, delta.clone()));
            if accept(&cand, &chosen) {
                found = Some(cand);
                break;
            }
        }
        match found {
            Some(c) => chosen.push(c),
            None => {
                return Err(Error::LiftVerification(format!(
                    "no lift of generator {label} to Z/{modulus} satisfies the relations"
                )))
            }
        }
    }
    let mut out = prev.clone();
    out.modulus = modulus;
    for ((_, m), c) in out.generators.iter_mut().zip(chosen) {
        *m = c;
    }
    Ok(out)
}

fn reduces_to(m: &Matrix, base: &Matrix, step: u64) -> bool {
    m.entries()
        .iter()
        .zip(base.entries())
        .all(|(a, b)| a % step == b % step)
}

/// True when every generator of `lifted` reduces entrywise to the
/// corresponding generator of `base` modulo `base.prime`.
pub fn reduces_mod_p(lifted: &MatrixAction, base: &MatrixAction) -> bool {
    lifted
        .generators
        .iter()
        .zip(&base.generators)
        .all(|((_, a), (_, b))| reduces_to(a, b, base.prime))
}

/// Builds the action for the relations of a presentation without running
/// verification. Used by the realization search.
pub(crate) fn assemble(
    prime: u64,
    generators: Vec<(&str, Matrix)>,
    generator_orders: Vec<u64>,
    relations: Vec<Relation>,
    group_order: u64,
) -> MatrixAction {
    let dim = generators[0].1.dim();
    let modulus = generators[0].1.modulus();
    MatrixAction {
        prime,
        modulus,
        dim,
        generators: generators
            .into_iter()
            .map(|(l, m)| (l.to_string(), m))
            .collect(),
        generator_orders,
        relations,
        group_order,
    }
}

/// Primes dividing `n`, used for exact-order checks.
pub(crate) fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).primes().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_action(m: Matrix, d: u64, p: u64) -> MatrixAction {
        assemble(
            p,
            vec![("x", m)],
            vec![d],
            vec![Relation::new(vec![(0, d as i64)], vec![])],
            d,
        )
    }

    #[test]
    fn lift_units() {
        let a = cyclic_action(Matrix::from_rows(5, &[&[2]]), 4, 5);
        a.verify().unwrap();
        let l = lift_action(&a, 2).unwrap();
        assert_eq!(l.generators[0].1, Matrix::from_rows(25, &[&[7]]));
        assert!(reduces_mod_p(&l, &a));
    }

    #[test]
    fn lift_identity() {
        let a = cyclic_action(Matrix::identity(2, 3), 1, 3);
        let l = lift_action(&a, 3).unwrap();
        assert!(l.generators[0].1.is_identity());
        assert_eq!(l.modulus, 27);
    }

    #[test]
    fn lift_singer_cycle() {
        let a = cyclic_action(Matrix::from_rows(3, &[&[0, 1], &[1, 1]]), 8, 3);
        let l = lift_action(&a, 2).unwrap();
        let m = &l.generators[0].1;
        assert!(m.has_order(8));
        assert!(m.pow(8).is_identity());
        assert!(reduces_mod_p(&l, &a));
    }

    #[test]
    fn fixed_points() {
        let c4 = cyclic_action(Matrix::from_rows(5, &[&[2]]), 4, 5);
        assert!(is_fixed_point_free(&c4).unwrap());
        let triv = cyclic_action(Matrix::identity(2, 5), 1, 5);
        assert!(is_fixed_point_free(&triv).unwrap());
        let c2 = cyclic_action(Matrix::from_rows(5, &[&[1, 0], &[0, -1]]), 2, 5);
        assert!(!is_fixed_point_free(&c2).unwrap());
    }

    #[test]
    fn crt() {
        assert_eq!(crt_exponent(4, 625), 625);
        let e = crt_exponent(8, 81);
        assert_eq!(e % 8, 1);
        assert_eq!(e % 81, 0);
    }
}
