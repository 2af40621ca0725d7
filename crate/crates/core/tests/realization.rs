use pocfrob_core::group::{
    is_fixed_point_free, order_census_bruteforce, realize_complement, realize_frobenius,
    MatrixAction, SemidirectProduct,
};
use pocfrob_core::order_classes::{divisibility_report, frobenius_spec_census, is_poc};
use pocfrob_core::{ComplementSpec, FrobeniusSpec};

fn realize(h: ComplementSpec, r: usize, p: u64) -> Option<MatrixAction> {
    realize_complement(&h, r, p, false).unwrap()
}

#[test]
fn metacyclic_groups_missing_from_small_general_linear_groups() {
    use ComplementSpec::Metacyclic as M;
    for (h, r, p) in [
        (M(5, 24, 2), 2, 11),
        (M(15, 8, 2), 2, 11),
        (M(5, 72, 2), 2, 19),
        (M(45, 8, 8), 2, 19),
        (M(5, 192, 2), 2, 31),
        (M(15, 64, 2), 2, 31),
        (M(25, 96, 7), 4, 7),
        (M(75, 32, 32), 4, 7),
    ] {
        assert!(realize(h, r, p).is_none(), "{h} found in GL({r},{p})");
    }
}

#[test]
fn positive_controls_generate_the_right_group() {
    for (h, r, p) in [
        (ComplementSpec::Metacyclic(3, 8, 2), 2, 5),
        (ComplementSpec::SL2_5, 2, 11),
        (ComplementSpec::SL2_3, 2, 5),
        (ComplementSpec::Metacyclic(5, 16, 4), 4, 3),
    ] {
        let a = realize(h, r, p).unwrap_or_else(|| panic!("{h} missing from GL({r},{p})"));
        a.verify().unwrap();
        assert_eq!(a.generate(100_000).unwrap().len() as u64, h.order());
        assert!(is_fixed_point_free(&a).unwrap());
    }
}

#[test]
fn non_cyclic_nilpotent_complements_do_not_act_freely() {
    for text in ["H(5,1,2):Q8xC3", "H(3,1,4):Q16xC5"] {
        let spec: FrobeniusSpec = text.parse().unwrap();
        assert!(realize_frobenius(&spec).unwrap().is_none(), "{text}");
    }
}

#[test]
fn order_14520_profile() {
    let spec: FrobeniusSpec = "H(11,1,2):SL(2,5)".parse().unwrap();
    let action = realize_frobenius(&spec).unwrap().unwrap();
    let g = SemidirectProduct::new(spec.kernel, &action, 20_000).unwrap();
    let c = order_census_bruteforce(&g, 20_000).unwrap();
    let got: Vec<(u64, u64)> = c.entries().iter().map(|(&d, &n)| (d, n)).collect();
    assert_eq!(
        got,
        vec![
            (1, 1),
            (2, 121),
            (3, 2420),
            (4, 3630),
            (5, 2904),
            (6, 2420),
            (10, 2904),
            (11, 120)
        ]
    );
    assert_eq!(c, frobenius_spec_census(&spec).unwrap());
    assert!(is_poc(&c));
    let rep = divisibility_report(&c);
    assert!(rep.phi_ok && rep.pm1_ok);
}

#[test]
fn lifted_actions_stay_free() {
    for text in [
        "H(5,2,2):M(3,8,2)",
        "H(5,2,2):SL(2,3)",
        "H(3,3,2):C8",
        "H(7,2,2):C48",
    ] {
        let spec: FrobeniusSpec = text.parse().unwrap();
        let a = realize_frobenius(&spec).unwrap().unwrap();
        assert_eq!(a.modulus, spec.kernel.exponent());
        assert!(is_fixed_point_free(&a).unwrap(), "{text}");
    }
}
