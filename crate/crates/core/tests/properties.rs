use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qknot_core::oracles::{burau_alexander, kauffman_jones};
use qknot_core::pairing::unified_pairing_coevaluation;
use qknot_core::table::{lookup, parse_table};
use qknot_core::verify::{
    ado2_in_t, figure_eight, jones_in_t, random_knot_braid, trefoil, truncation_stability,
};
use qknot_core::{
    ado, ado_zn_route, coloured_jones, unified_pairing, BraidWord, Error, InvariantReport,
    KnotInvariants,
};

fn arb_knot_braid(max_len: usize) -> impl Strategy<Value = BraidWord> {
    any::<u64>()
        .prop_map(move |seed| random_knot_braid(&mut ChaCha8Rng::seed_from_u64(seed), max_len))
}

#[test]
fn figure_eight_is_amphichiral_and_trefoil_is_not() {
    for colour in 2..=3 {
        let j = coloured_jones(&figure_eight(), colour, false).unwrap();
        assert_eq!(j, j.mirror());
    }
    let j = coloured_jones(&trefoil(), 2, false).unwrap();
    assert_ne!(j, j.mirror());
    let mirror = BraidWord::new(2, vec![-1, -1, -1]).unwrap();
    assert_eq!(coloured_jones(&mirror, 2, false).unwrap(), j.mirror());
}

#[test]
fn truncation_stability_on_small_words() {
    let words = [
        BraidWord::new(3, vec![1, -2, 1, -2]).unwrap(),
        BraidWord::new(3, vec![1, 2, 1]).unwrap(),
        BraidWord::new(3, vec![-1, -2]).unwrap(),
    ];
    let r = truncation_stability(&[2, 3], &words);
    assert!(r.ok(), "{:?}", r.failures);
    assert!(r.total > 0);
}

#[test]
fn non_knots_need_force() {
    let hopf = BraidWord::new(2, vec![1, 1]).unwrap();
    assert!(matches!(
        coloured_jones(&hopf, 2, false),
        Err(Error::NotAKnot { components: 2 })
    ));
    assert!(ado(&hopf, 2, false).is_err());
    assert!(ado_zn_route(&hopf, 2, false).is_err());
    let forced = KnotInvariants::compute(&hopf, 2, true).unwrap();
    assert!(!forced.pairing.is_knot());
    let report = InvariantReport::jones(&hopf, 2, &forced.jones);
    assert!(report.to_json().contains("\"unvalidated\""));
}

#[test]
fn table_lookup_feeds_the_engine() {
    let table = parse_table("# name strands word\n3_1 2 1 1 1\n4_1 3 1 -2 1 -2\n").unwrap();
    let entry = lookup(&table, "3_1").unwrap();
    assert_eq!(
        coloured_jones(&entry.braid, 2, false).unwrap().to_string(),
        "q^-2 + q^-6 - q^-8"
    );
    assert!(matches!(lookup(&table, "5_2"), Err(Error::UnknownKnot(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn colour_one_is_trivial(beta in arb_knot_braid(6)) {
        prop_assert!(coloured_jones(&beta, 1, false).unwrap().is_one());
    }

    #[test]
    fn diagonal_and_coevaluation_routes_agree(beta in arb_knot_braid(5), colour in 2u32..=3) {
        let diagonal = unified_pairing(&beta, colour).unwrap().value;
        prop_assert_eq!(diagonal, unified_pairing_coevaluation(&beta, colour).unwrap());
    }

    #[test]
    fn colour_two_matches_oracles(beta in arb_knot_braid(6)) {
        let inv = KnotInvariants::compute(&beta, 2, false).unwrap();
        let bracket = kauffman_jones(&beta).unwrap();
        prop_assert_eq!(jones_in_t(&inv.jones), Some(bracket));
        let delta = burau_alexander(&beta).unwrap();
        let phi = ado2_in_t(inv.ado.as_ref().unwrap()).unwrap();
        prop_assert!(phi.equal_up_to_unit(&delta), "{} vs {}", phi, delta);
    }

    #[test]
    fn zn_route_agrees(beta in arb_knot_braid(6), colour in 2u32..=4) {
        prop_assert_eq!(ado(&beta, colour, false).unwrap(), ado_zn_route(&beta, colour, false).unwrap());
    }

    #[test]
    fn report_json_round_trips(beta in arb_knot_braid(5), colour in 2u32..=3) {
        let inv = KnotInvariants::compute(&beta, colour, false).unwrap();
        for report in [
            InvariantReport::jones(&beta, colour, &inv.jones),
            InvariantReport::ado(&beta, colour, inv.ado.as_ref().unwrap()),
            InvariantReport::unified(&beta, colour, &inv.pairing.value),
        ] {
            let text = report.to_json();
            prop_assert_eq!(InvariantReport::from_json(&text).unwrap(), report);
        }
    }
}
