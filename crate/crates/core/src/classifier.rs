//! Theorem-driven verdicts on whether a Frobenius group, or a complement on
//! its own, has perfect order classes.

use std::fmt;

use crate::error::Result;
use crate::numtheory::{factorize, is_pierpont_prime, multiplicative_order, primes_up_to};
use crate::order_classes::{complement_census, is_poc};
use crate::spec::{ComplementSpec, FrobeniusSpec};

/// The result a verdict rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Justification {
    /// The three conditions on complement, kernel and orders.
    ThmA,
    /// Insoluble case: kernel `C_{11^k}^2`, complement `SL(2,5)`.
    ThmB,
    /// Nilpotent complements.
    ThmC,
    /// Non-nilpotent `{2,q}` complements.
    ThmD,
    /// Soluble `{2,3,5}` complements of order divisible by 30.
    ThmE,
    /// Cyclic groups: trivial or of even `{2,3}`-number order.
    CyclicPoc,
    /// Non-cyclic nilpotent complements: `Q8 x C_{3^k}` and `Q16 x C_{5^k}`.
    ThmNilpCompl,
    /// Census of the complement computed by brute force.
    BruteForce,
    /// Outside the classified families; carries the conditions of
    /// [`Justification::ThmA`].
    Unclassified,
}

impl Justification {
    pub fn tag(self) -> &'static str {
        match self {
            Justification::ThmA => "ThmA",
            Justification::ThmB => "ThmB",
            Justification::ThmC => "ThmC",
            Justification::ThmD => "ThmD",
            Justification::ThmE => "ThmE",
            Justification::CyclicPoc => "CyclicPOC",
            Justification::ThmNilpCompl => "ThmNilpCompl",
            Justification::BruteForce => "BruteForce",
            Justification::Unclassified => "Unclassified",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Justification::ThmA => "Theorem A",
            Justification::ThmB => "Theorem B",
            Justification::ThmC => "Theorem C",
            Justification::ThmD => "Theorem D",
            Justification::ThmE => "Theorem E",
            Justification::CyclicPoc => "cyclic groups with perfect order classes",
            Justification::ThmNilpCompl => "nilpotent complements with perfect order classes",
            Justification::BruteForce => "brute-force census",
            Justification::Unclassified => "unclassified",
        }
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub poc: bool,
    pub justification: Justification,
    /// Condition trace, one step per line.
    pub details: Vec<String>,
}

impl Verdict {
    fn new(poc: bool, justification: Justification, details: Vec<String>) -> Self {
        debug_assert!(!details.is_empty());
        Verdict {
            poc,
            justification,
            details,
        }
    }
}

/// The conditions of Theorem A, checked in order: (a) the complement has
/// perfect order classes, (b) the kernel is homocyclic of odd order, (c)
/// `|H| = p^r - 1`. The first failing condition decides.
pub fn theorem_a_check(spec: &FrobeniusSpec) -> Result<Verdict> {
    let FrobeniusSpec {
        kernel: k,
        complement: h,
    } = *spec;
    let mut details = Vec::new();
    let hc = complement_census(&h)?;
    let a = is_poc(&hc);
    details.push(format!(
        "(a) complement {h} has perfect order classes: {}",
        if a { "yes" } else { "no" }
    ));
    if !a {
        return Ok(Verdict::new(false, Justification::ThmA, details));
    }
    details.push(format!(
        "(b) kernel C{}^{} is homocyclic with odd prime {}: yes",
        k.exponent(),
        k.r,
        k.p
    ));
    let target = (k.p as u128).pow(k.r) - 1;
    let c = h.order() as u128 == target;
    details.push(format!(
        "(c) |H| = {} {} p^r - 1 = {}^{} - 1 = {target}",
        h.order(),
        if c { "=" } else { "!=" },
        k.p,
        k.r
    ));
    Ok(Verdict::new(c, Justification::ThmA, details))
}

/// Theorem D forms as `(p, r, complement)`. The metacyclic complements
/// invert the normal subgroup except `C5 x| C16`, where `a^b = a^4`.
const THEOREM_D_FORMS: [(u64, u32, ComplementSpec); 5] = [
    (5, 2, ComplementSpec::SL2_3),
    (5, 2, ComplementSpec::Metacyclic(3, 8, 2)),
    (7, 2, ComplementSpec::Metacyclic(3, 16, 2)),
    (17, 2, ComplementSpec::Metacyclic(9, 32, 8)),
    (3, 4, ComplementSpec::Metacyclic(5, 16, 4)),
];

/// `C3 x| C16` has no faithful action on `F_7^2`: an element of order 3 in
/// `GL(2,7)` is diagonalizable over `F_7`, anything inverting it swaps its
/// eigenspaces and so squares to a scalar, whose order divides 6.
const NON_REALIZABLE_D_FORMS: [usize; 1] = [2];

/// Rank-two cyclic cases `(p, |H|)` of Theorem C.
pub const RANK_TWO_CYCLIC: [(u64, u64); 4] = [(3, 8), (5, 24), (7, 48), (17, 288)];

/// Metacyclic specs with the same `alpha`, `beta` and subgroup generated by
/// `gamma` in the units mod `alpha` present isomorphic groups.
fn same_metacyclic(a: &ComplementSpec, b: &ComplementSpec) -> bool {
    match (*a, *b) {
        (ComplementSpec::Metacyclic(a1, b1, g1), ComplementSpec::Metacyclic(a2, b2, g2)) => {
            a1 == a2 && b1 == b2 && {
                let o1 = multiplicative_order(g1, a1);
                let o2 = multiplicative_order(g2, a2);
                // Equal cyclic subgroups of (Z/a)^*: same order and g2 a power of g1.
                o1 == o2
                    && o1.is_some_and(|o| {
                        (0..o).any(|e| crate::numtheory::pow_mod(g1, e, a1) == g2 % a1)
                    })
            }
        }
        (x, y) => x == y,
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Verdict for a Frobenius group from the classification theorems.
///
/// Cyclic complements are decided by Theorem C (rank one with `p = 1 + |H|`
/// Pierpont, or one of four rank-two cases); other nilpotent complements
/// never give perfect order classes; non-nilpotent `{2,q}` complements by
/// the list of Theorem D; soluble `{2,3,5}` complements of order divisible
/// by 30 by Theorem E; `SL(2,5)` by Theorem B. Anything else falls back to
/// the conditions of Theorem A with an `Unclassified` tag, unless one of
/// those conditions already fails.
pub fn classify(spec: &FrobeniusSpec) -> Result<Verdict> {
    let FrobeniusSpec {
        kernel: k,
        complement: h,
    } = *spec;
    let n = h.order();
    let primes = h.prime_divisors();

    if h.is_cyclic() {
        let rank_one = k.r == 1 && k.p == n + 1 && is_pierpont_prime(k.p) && n % 2 == 0;
        let rank_two = k.r == 2 && RANK_TWO_CYCLIC.contains(&(k.p, n));
        let details = vec![
            format!("cyclic complement C{n} (nilpotent)"),
            format!(
                "rank 1 with Pierpont prime p = 1 + |H| = {}: {}",
                n + 1,
                yes(rank_one)
            ),
            format!(
                "rank 2 with (p, |H|) in (3,8), (5,24), (7,48), (17,288): {}",
                yes(rank_two)
            ),
        ];
        return Ok(Verdict::new(
            rank_one || rank_two,
            Justification::ThmC,
            details,
        ));
    }

    if h.is_nilpotent() {
        return Ok(Verdict::new(
            false,
            Justification::ThmC,
            vec![format!(
                "complement {h} is nilpotent but not cyclic; a Frobenius group with \
                 perfect order classes has a cyclic complement when the complement is nilpotent"
            )],
        ));
    }

    if h == ComplementSpec::SL2_5 {
        let ok = k.p == 11 && k.r == 2;
        return Ok(Verdict::new(
            ok,
            Justification::ThmB,
            vec![
                "complement SL(2,5) is insoluble".to_string(),
                format!("kernel homocyclic 11-group of rank 2: {}", yes(ok)),
            ],
        ));
    }

    if primes.len() == 2 && primes[0] == 2 {
        let q = primes[1];
        let mut details = vec![format!("complement {h} is a non-nilpotent {{2,{q}}}-group")];
        for (i, &(p, r, form)) in THEOREM_D_FORMS.iter().enumerate() {
            if k.p == p && k.r == r && same_metacyclic(&h, &form) {
                if NON_REALIZABLE_D_FORMS.contains(&i) {
                    details.push(format!(
                        "matches the form C{p}^{r} x| {form}, but {form} has no faithful \
                         action on F_{p}^{r}: no such Frobenius group exists"
                    ));
                    return Ok(Verdict::new(false, Justification::ThmD, details));
                }
                details.push(format!("matches the form C({p}^k)^{r} x| {form}"));
                return Ok(Verdict::new(true, Justification::ThmD, details));
            }
        }
        details.push(format!(
            "kernel C{}^{} with complement {h} is not among the listed forms",
            k.exponent(),
            k.r
        ));
        return Ok(Verdict::new(false, Justification::ThmD, details));
    }

    if h.is_soluble() && primes == [2, 3, 5] && n % 30 == 0 {
        return Ok(Verdict::new(
            false,
            Justification::ThmE,
            vec![format!(
                "complement {h} is a soluble non-nilpotent {{2,3,5}}-group of order {n}, \
                 divisible by 30"
            )],
        ));
    }

    let a = theorem_a_check(spec)?;
    if !a.poc {
        return Ok(a);
    }
    let mut details = vec![format!(
        "complement {h} lies outside the classified families; the conditions below hold, \
         but whether a Frobenius group of this shape exists is not decided"
    )];
    details.extend(a.details);
    Ok(Verdict::new(true, Justification::Unclassified, details))
}

/// Verdict for a complement as a group in its own right.
pub fn classify_complement(spec: &ComplementSpec) -> Result<Verdict> {
    let n = spec.order();
    match *spec {
        ComplementSpec::Cyclic(_) | ComplementSpec::Metacyclic(1, ..) => {
            let f = factorize(n);
            let smooth = f.primes().all(|p| p == 2 || p == 3);
            let ok = n == 1 || (n % 2 == 0 && smooth);
            Ok(Verdict::new(
                ok,
                Justification::CyclicPoc,
                vec![format!(
                    "cyclic of order {n} = {f}: trivial or an even {{2,3}}-number: {}",
                    yes(ok)
                )],
            ))
        }
        ComplementSpec::QuatCyclic(qn, m) => {
            let pf = factorize(m);
            let power_of = |p: u64| m > 1 && pf.primes().all(|x| x == p);
            let ok = (qn == 3 && power_of(3)) || (qn == 4 && power_of(5));
            Ok(Verdict::new(
                ok,
                Justification::ThmNilpCompl,
                vec![format!(
                    "Q{} x C{m}: of the form Q8 x C(3^k) or Q16 x C(5^k) with k >= 1: {}",
                    1u64 << qn,
                    yes(ok)
                )],
            ))
        }
        _ => {
            let c = complement_census(spec)?;
            let ok = is_poc(&c);
            Ok(Verdict::new(
                ok,
                Justification::BruteForce,
                vec![
                    format!("census of {spec}: {c}"),
                    format!("every count divides {n}: {}", yes(ok)),
                ],
            ))
        }
    }
}

/// `(p, k)` with `p > 2` Pierpont and `p^k (p - 1) <= max_order`, ordered
/// by that order and then by `p`.
pub fn pierpont_family_params(max_order: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let top = (max_order as f64).sqrt() as u64 + 2;
    for p in primes_up_to(top.max(3)) {
        if p == 2 || !is_pierpont_prime(p) {
            continue;
        }
        let mut pk = p;
        let mut k = 1;
        while pk.saturating_mul(p - 1) <= max_order {
            out.push((pk * (p - 1), p, k));
            pk = pk.saturating_mul(p);
            k += 1;
        }
    }
    out.sort();
    out.into_iter().map(|(_, p, k)| (p, k)).collect()
}
