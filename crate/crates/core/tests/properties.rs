use std::collections::BTreeSet;

use gogkit::covers::{
    build_cover, verify_index_identity, verify_multiplicativity, verify_obs_sum, ActionDatum,
};
use gogkit::free_product::{random_graph_of_groups, Factor};
use gogkit::perm::{symmetric_elements, Permutation};
use gogkit::{FinitePermGroup, Limits, Presentation, Rational};
use num_integer::Integer;
use proptest::prelude::*;
use proptest::sample::select;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_group(i: usize) -> FinitePermGroup {
    match i {
        0 => FinitePermGroup::cyclic(2),
        1 => FinitePermGroup::cyclic(3),
        2 => FinitePermGroup::cyclic(4),
        3 => FinitePermGroup::symmetric(3),
        4 => FinitePermGroup::dihedral(4),
        _ => {
            let a = Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap();
            let b = Permutation::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap();
            FinitePermGroup::closure(vec![a, b], 10).unwrap()
        }
    }
}

fn permutation(k: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=k).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_one_based(&v).unwrap())
}

fn factor(i: usize) -> Factor {
    let g = small_group(i);
    Factor::finite(format!("G{i}"), g)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orbit_stabilizer(g in 0usize..6, k in 1usize..=4, pick in any::<prop::sample::Index>()) {
        let group = small_group(g);
        let actions = group.enumerate_actions(k, &Limits::default()).unwrap();
        let action = pick.get(&actions);
        for orbit in group.act_orbits(action).unwrap() {
            let stab = group.point_stabilizer(action, orbit[0], 1000).unwrap();
            prop_assert_eq!(orbit.len() * stab.order(), group.order());
        }
    }

    #[test]
    fn actions_closed_under_conjugation(g in 0usize..6, k in 1usize..=4, seed in any::<u64>()) {
        let group = small_group(g);
        let actions = group.enumerate_actions(k, &Limits::default()).unwrap();
        let all: BTreeSet<Vec<Permutation>> = actions.iter().cloned().collect();
        prop_assert_eq!(all.len(), actions.len());
        let sym = symmetric_elements(k);
        let c = &sym[seed as usize % sym.len()];
        for a in &actions {
            let conj: Vec<Permutation> = a.iter().map(|p| p.conjugate_by(c)).collect();
            prop_assert!(all.contains(&conj));
        }
    }

    #[test]
    fn cayley_check_matches_full_table(g in 0usize..6, k in 1usize..=4, seed in any::<u64>()) {
        let group = small_group(g);
        let sym = symmetric_elements(k);
        let mut s = seed;
        let images: Vec<Permutation> = group
            .generators()
            .iter()
            .map(|_| {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                sym[(s >> 33) as usize % sym.len()].clone()
            })
            .collect();
        prop_assert_eq!(group.is_homomorphism(&images), group.is_homomorphism_full_table(&images));
    }

    #[test]
    fn permutation_laws(p in permutation(6), q in permutation(6), r in permutation(6)) {
        prop_assert_eq!(p.then(&q).then(&r), p.then(&q.then(&r)));
        prop_assert!(p.then(&p.inverse()).is_identity());
        let back = Permutation::from_one_based(&p.to_one_based()).unwrap();
        prop_assert_eq!(&back, &p);
        let x = 3;
        prop_assert_eq!(p.then(&q).apply(x), q.apply(p.apply(x)));
    }

    #[test]
    fn chi_invariant_under_factor_order(
        picks in prop::collection::vec(0usize..6, 0..5),
        rank in 0u64..3,
        seed in any::<u64>(),
    ) {
        let distinct: BTreeSet<usize> = picks.into_iter().collect();
        let factors: Vec<Factor> = distinct.iter().map(|&i| factor(i)).collect();
        let mut shuffled = factors.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rand::seq::SliceRandom::shuffle(shuffled.as_mut_slice(), &mut rng);
        let a = Presentation::new(factors, rank).unwrap();
        let b = Presentation::new(shuffled, rank).unwrap();
        prop_assert_eq!(a.chi_rho(), b.chi_rho());
    }

    #[test]
    fn finite_products_have_chi_at_most_one(picks in prop::collection::vec(0usize..6, 0..5), rank in 0u64..3) {
        let distinct: BTreeSet<usize> = picks.into_iter().collect();
        let p = Presentation::new(distinct.iter().map(|&i| factor(i)).collect(), rank).unwrap();
        prop_assert!(p.chi_rho() <= Rational::one());
    }

    #[test]
    fn subdivision_and_normal_form_preserve_chi(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gog = random_graph_of_groups(&mut rng, 8);
        let chi = gog.chi_rho().unwrap();
        prop_assert_eq!(&gog.normal_form().unwrap().chi_rho(), &chi);
        let edges: Vec<String> = gog.graph().edges().map(|e| e.id.clone()).collect();
        for e in edges.iter().take(3) {
            let sub = gog.subdivide(e, "mid").unwrap();
            prop_assert_eq!(&sub.chi_rho().unwrap(), &chi);
        }
    }

    #[test]
    fn rationals_are_canonical(n in -10_000i64..10_000, d in 1i64..10_000, sign in prop::bool::ANY) {
        let d = if sign { d } else { -d };
        let r = Rational::new(n, d);
        prop_assert!(r.denom() > &0.into());
        prop_assert_eq!(r.numer().gcd(r.denom()), 1.into());
        let text = r.to_string();
        prop_assert_eq!(text.parse::<Rational>().unwrap(), r.clone());
        let json = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), r);
    }

    #[test]
    fn random_transitive_data_satisfy_identities(
        k in 1usize..=5,
        a in any::<prop::sample::Index>(),
        b in any::<prop::sample::Index>(),
        letter in any::<prop::sample::Index>(),
    ) {
        let base = gogkit::notation::parse_presentation("C2*C3*F1", 100).unwrap();
        let lim = Limits::default();
        let c2 = FinitePermGroup::cyclic(2).enumerate_actions(k, &lim).unwrap();
        let c3 = FinitePermGroup::cyclic(3).enumerate_actions(k, &lim).unwrap();
        let sym = symmetric_elements(k);
        let datum = ActionDatum {
            k,
            factor_actions: vec![a.get(&c2).clone(), b.get(&c3).clone()],
            letter_images: vec![letter.get(&sym).clone()],
        };
        match build_cover(&base, datum.clone(), &lim) {
            Ok(cover) => {
                prop_assert!(verify_obs_sum(&cover).iter().all(|c| c.check.passed));
                prop_assert!(verify_multiplicativity(&cover).passed);
                prop_assert!(verify_index_identity(&cover).unwrap().check.passed);
            }
            Err(_) => prop_assert!(!datum.is_transitive()),
        }
    }

    #[test]
    fn standard_form_is_a_relabelling_invariant(
        k in 2usize..=5,
        x in any::<prop::sample::Index>(),
        y in any::<prop::sample::Index>(),
        c in any::<prop::sample::Index>(),
    ) {
        let sym = symmetric_elements(k);
        let datum = ActionDatum {
            k,
            factor_actions: vec![],
            letter_images: vec![x.get(&sym).clone(), y.get(&sym).clone()],
        };
        // relabellings that fix the basepoint
        let fixing: Vec<&Permutation> = sym.iter().filter(|p| p.apply(0) == 0).collect();
        let c = *c.get(&fixing);
        prop_assert_eq!(datum.relabel(c).standardized(), datum.standardized());
        if let Some(s) = datum.standardized() {
            prop_assert!(s.is_standard());
        }
    }

    #[test]
    fn selected_notation_round_trips(text in select(vec!["C2*C3", "S3*D4*F2", "[A:-2]*C5", "F3", "C7*C7"])) {
        let p = gogkit::notation::parse_presentation(text, 1000).unwrap();
        let doc = gogkit::cli::group_def(&p);
        let back = gogkit::cli::resolve_group("G", &doc, &Limits::default()).unwrap();
        prop_assert_eq!(back.presentation, p);
    }
}
