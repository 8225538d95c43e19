//! Set-pair certificates of cocktail-party covers and tiny family minima.

use num_rational::BigRational;
use num_traits::One;
use sigmaclique::constructions::cocktail_party;
use sigmaclique::covers::verify;
use sigmaclique::exact::solve_scc;
use sigmaclique::randomized::{best_of, default_config, RandomCoverConfig};
use sigmaclique::setsystem::{
    bollobas_sum, cover_from_family, cover_to_pairs, family_from_cover, min_family_size,
    min_family_size_enumerated, ENUMERATED_CASES,
};

#[test]
fn randomized_covers_give_valid_pairs() {
    for t in 3..=5 {
        let g = cocktail_party(t);
        for seed in 0..40 {
            let cfg = default_config(&g, seed).unwrap();
            let (cover, _) = best_of(&g, &cfg, 1).unwrap();
            let pairs = cover_to_pairs(t, &cover).unwrap();
            assert_eq!(pairs.pattern_violation(), None);
            assert!(bollobas_sum(&pairs).unwrap() <= BigRational::one());
        }
    }
}

#[test]
fn exact_witness_round_trips_through_families() {
    for t in 2..=4 {
        let g = cocktail_party(t);
        let cover = solve_scc(&g).unwrap().witness;
        let family = family_from_cover(t, 2, &cover).unwrap();
        assert!(family.check().is_ok());
        assert_eq!(family.total_size(), cover.sigma());
        let back = cover_from_family(&family).unwrap();
        assert!(verify(&g, &back).unwrap().verified);
        assert_eq!(back.sigma(), cover.sigma());
    }
}

#[test]
fn both_minimisers_agree() {
    for (d, t) in ENUMERATED_CASES {
        let via_cover = min_family_size(d, t, 12).unwrap();
        let direct = min_family_size_enumerated(d, t, 12).unwrap();
        assert_eq!(via_cover.value, direct, "(d, t) = ({d}, {t})");
    }
    assert_eq!(min_family_size(2, 3, 12).unwrap().value, 12);
}

#[test]
fn short_schedules_also_certify() {
    let g = cocktail_party(4);
    let cfg = RandomCoverConfig::explicit(0.5, 3, 1).unwrap();
    let (cover, _) = best_of(&g, &cfg, 10).unwrap();
    let pairs = cover_to_pairs(4, &cover).unwrap();
    assert!(bollobas_sum(&pairs).unwrap() <= BigRational::one());
}
