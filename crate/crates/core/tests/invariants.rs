use proptest::prelude::*;

use pocfrob_core::census::enumerate;
use pocfrob_core::group::{order_census_bruteforce, CyclicGroup, DirectProduct, MetacyclicGroup};
use pocfrob_core::numtheory::{
    euler_phi, factorize, gcd, is_prime, multiplicative_order, zsigmondy, ZsigmondyQuery,
};
use pocfrob_core::order_classes::{
    complement_census, cyclic_census, frobenius_census, genquat_census, homocyclic_census, is_poc,
    product_census,
};
use pocfrob_core::{ComplementSpec, FrobeniusSpec, HomocyclicKernel, OrderCensus};

fn phi_divides(c: &OrderCensus) -> bool {
    c.entries()
        .iter()
        .all(|(&d, &n)| n % euler_phi(d).unwrap() == 0)
}

fn total(c: &OrderCensus) -> u64 {
    c.entries().values().sum()
}

/// `(alpha, beta, gamma)` below 40 presenting a Z-group with `gamma != 1`.
fn z_group_params() -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for alpha in 3..40u64 {
        for beta in 2..40u64 {
            for gamma in 2..alpha {
                let ok = gcd(alpha, beta) == 1
                    && gcd(alpha, gamma) == 1
                    && gcd(alpha, gamma - 1) == 1
                    && multiplicative_order(gamma, alpha).is_some_and(|o| beta % o == 0);
                if ok {
                    out.push((alpha, beta, gamma));
                }
            }
        }
    }
    out
}

fn small_odd_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13])
}

proptest! {
    #[test]
    fn factorization_multiplies_back(n in 1u64..u64::MAX / 2) {
        let f = factorize(n);
        let mut prod = 1u64;
        for &(p, e) in f.factors() {
            prop_assert!(is_prime(p));
            prod *= p.pow(e);
        }
        prop_assert_eq!(prod, n);
    }

    #[test]
    fn phi_counts_units(n in 1u64..3000) {
        let units = (1..=n).filter(|&a| gcd(a, n) == 1).count() as u64;
        prop_assert_eq!(euler_phi(n).unwrap(), units);
    }

    #[test]
    fn cyclic_census_matches_brute_force(n in 1u64..500) {
        let c = cyclic_census(n).unwrap();
        prop_assert_eq!(total(&c), n);
        prop_assert!(phi_divides(&c));
        prop_assert_eq!(&c, &order_census_bruteforce(&CyclicGroup::new(n).unwrap(), 1000).unwrap());
    }

    #[test]
    fn homocyclic_census_matches_brute_force(p in small_odd_prime(), k in 1u32..3) {
        let c = homocyclic_census(p, k, 2).unwrap();
        let n = p.pow(k);
        let g = DirectProduct { left: CyclicGroup::new(n).unwrap(), right: CyclicGroup::new(n).unwrap() };
        prop_assert_eq!(total(&c), n * n);
        prop_assert!(phi_divides(&c));
        prop_assert_eq!(c, order_census_bruteforce(&g, 100_000).unwrap());
    }

    #[test]
    fn product_census_matches_brute_force(a in 1u64..60, b in 1u64..60) {
        let c = product_census(&cyclic_census(a).unwrap(), &cyclic_census(b).unwrap()).unwrap();
        let g = DirectProduct { left: CyclicGroup::new(a).unwrap(), right: CyclicGroup::new(b).unwrap() };
        prop_assert_eq!(c, order_census_bruteforce(&g, 10_000).unwrap());
    }

    #[test]
    fn metacyclic_census_matches_brute_force((alpha, beta, gamma) in prop::sample::select(z_group_params())) {
        let c = complement_census(&ComplementSpec::Metacyclic(alpha, beta, gamma)).unwrap();
        prop_assert_eq!(total(&c), alpha * beta);
        prop_assert!(phi_divides(&c));
        let brute = order_census_bruteforce(&MetacyclicGroup::new(alpha, beta, gamma).unwrap(), 10_000).unwrap();
        prop_assert_eq!(c, brute);
    }

    #[test]
    fn frobenius_census_counts_sum_to_order(p in small_odd_prime(), k in 1u32..3, r in 1u32..3) {
        let kern = homocyclic_census(p, k, r).unwrap();
        let n = p.pow(r) - 1;
        let c = frobenius_census(&kern, &cyclic_census(n).unwrap()).unwrap();
        prop_assert_eq!(total(&c), p.pow(k * r) * n);
        prop_assert!(phi_divides(&c));
    }

    #[test]
    fn spec_text_round_trips(p in small_odd_prime(), k in 1u32..4, r in 1u32..4, n in 2u64..200) {
        prop_assume!(gcd(n, p) == 1);
        let spec = FrobeniusSpec::new(HomocyclicKernel::new(p, k, r).unwrap(), ComplementSpec::Cyclic(n)).unwrap();
        let text = spec.to_string();
        prop_assert_eq!(text.parse::<FrobeniusSpec>().unwrap(), spec);
        let spaced: String = text.chars().flat_map(|ch| [ch, ' ']).collect();
        prop_assert_eq!(spaced.parse::<FrobeniusSpec>().unwrap(), spec);
    }

    #[test]
    fn census_is_monotone(a in 6u64..15_000, b in 6u64..15_000) {
        let (lo, hi) = (a.min(b), a.max(b));
        let big = enumerate(hi);
        for row in enumerate(lo) {
            prop_assert!(big.contains(&row));
        }
    }

    #[test]
    fn primitive_divisors_are_one_mod_n(a in 2u64..30, n in 2u32..12) {
        let q = ZsigmondyQuery::new(a, 1, n, -1).unwrap();
        if let Some(primes) = zsigmondy(&q).unwrap().primes() {
            for &p in primes {
                prop_assert_eq!(multiplicative_order(a % p, p), Some(n as u64));
            }
        }
    }
}

#[test]
fn counterexample_catalog_lacks_perfect_order_classes() {
    let c2 = CyclicGroup::new(2).unwrap();
    let v4 = order_census_bruteforce(
        &DirectProduct {
            left: c2,
            right: c2,
        },
        10,
    )
    .unwrap();
    assert!(!is_poc(&v4));
    for n in 3..=6 {
        let q = genquat_census(n).unwrap();
        assert_eq!(total(&q), 1 << n);
        assert!(!is_poc(&q));
    }
}

#[test]
fn census_rows_have_no_forbidden_orders() {
    for row in enumerate(15_000) {
        assert!(![3072, 11264, 12288].contains(&row.order));
        assert_eq!(row.order, row.kernel.order() * row.complement.order());
        assert_eq!(row.complement.order(), row.kernel.p.pow(row.kernel.r) - 1);
    }
}
